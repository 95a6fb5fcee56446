#include "hmt/core/descriptor.hpp"

#include <sstream>

#include "hmt/text/tokenize.hpp"

namespace hmt {
namespace {

// Drops whitespace-delimited words that string-equal a forbidden uid.
std::string strip_uid_words(const std::string& text, const std::set<std::string>& forbidden) {
  std::istringstream in(text);
  std::string word;
  std::string out;
  while (in >> word) {
    if (forbidden.count(word)) continue;
    if (!out.empty()) out += ' ';
    out += word;
  }
  return out;
}

}  // namespace

std::string ElementDescriptor::render() const {
  std::string out = to_string(role);
  if (!label.empty()) out += " \"" + label + "\"";
  if (position_hint != PositionHint::Unknown) out += " at " + to_string(position_hint);
  for (const auto& c : context) out += " in " + c;
  return out;
}

ElementDescriptor make_descriptor(const Element& element, PositionHint position,
                                  const std::set<std::string>& forbidden_uids,
                                  std::size_t max_context) {
  ElementDescriptor d;
  d.role = element.role;
  d.label = strip_uid_words(element.text, forbidden_uids);
  d.position_hint = position;
  for (const auto& c : element.context) {
    if (d.context.size() >= max_context) break;
    std::string cleaned = strip_uid_words(c, forbidden_uids);
    if (!cleaned.empty()) d.context.push_back(cleaned);
  }
  return d;
}

PositionHint position_hint_of(const Element& element, const Observation& obs) {
  if (!element.bbox.has_value()) return PositionHint::Unknown;

  bool any = false;
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  for (const auto& e : obs.elements) {
    if (!e.bbox.has_value()) continue;
    const Rect& b = *e.bbox;
    if (!any) {
      min_x = b.x;
      min_y = b.y;
      max_x = b.x + b.w;
      max_y = b.y + b.h;
      any = true;
    } else {
      min_x = std::min(min_x, b.x);
      min_y = std::min(min_y, b.y);
      max_x = std::max(max_x, b.x + b.w);
      max_y = std::max(max_y, b.y + b.h);
    }
  }
  if (!any || max_x <= min_x || max_y <= min_y) return PositionHint::Unknown;

  const Rect& b = *element.bbox;
  double rx = (b.x + b.w / 2 - min_x) / (max_x - min_x);
  double ry = (b.y + b.h / 2 - min_y) / (max_y - min_y);
  if (ry < 1.0 / 3.0) return PositionHint::Top;
  if (ry > 2.0 / 3.0) return PositionHint::Bottom;
  if (rx < 1.0 / 3.0) return PositionHint::Left;
  if (rx > 2.0 / 3.0) return PositionHint::Right;
  return PositionHint::Center;
}

}  // namespace hmt
