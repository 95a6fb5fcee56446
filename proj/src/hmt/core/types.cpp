#include "hmt/core/types.hpp"

#include <algorithm>
#include <set>

#include "hmt/text/tokenize.hpp"

namespace hmt {

std::string to_string(Role r) {
  switch (r) {
    case Role::Button: return "button";
    case Role::Link: return "link";
    case Role::Textbox: return "textbox";
    case Role::Combobox: return "combobox";
    case Role::Listitem: return "listitem";
    case Role::Checkbox: return "checkbox";
    case Role::Radio: return "radio";
    case Role::Heading: return "heading";
    case Role::Generic: return "generic";
  }
  return "generic";
}

Role role_from_string(const std::string& s) {
  if (s == "button") return Role::Button;
  if (s == "link") return Role::Link;
  if (s == "textbox") return Role::Textbox;
  if (s == "combobox") return Role::Combobox;
  if (s == "listitem") return Role::Listitem;
  if (s == "checkbox") return Role::Checkbox;
  if (s == "radio") return Role::Radio;
  if (s == "heading") return Role::Heading;
  if (s == "generic") return Role::Generic;
  throw ValidationError("unknown role: " + s);
}

std::string to_string(Op op) {
  switch (op) {
    case Op::Click: return "CLICK";
    case Op::Type: return "TYPE";
    case Op::Select: return "SELECT";
    case Op::Scroll: return "SCROLL";
    case Op::Stop: return "STOP";
  }
  return "STOP";
}

Op op_from_string(const std::string& s) {
  if (s == "CLICK") return Op::Click;
  if (s == "TYPE") return Op::Type;
  if (s == "SELECT") return Op::Select;
  if (s == "SCROLL") return Op::Scroll;
  if (s == "STOP") return Op::Stop;
  throw ValidationError("unknown op: " + s);
}

std::string to_string(PositionHint p) {
  switch (p) {
    case PositionHint::Top: return "top";
    case PositionHint::Bottom: return "bottom";
    case PositionHint::Left: return "left";
    case PositionHint::Right: return "right";
    case PositionHint::Center: return "center";
    case PositionHint::Unknown: return "unknown";
  }
  return "unknown";
}

PositionHint position_hint_from_string(const std::string& s) {
  if (s == "top") return PositionHint::Top;
  if (s == "bottom") return PositionHint::Bottom;
  if (s == "left") return PositionHint::Left;
  if (s == "right") return PositionHint::Right;
  if (s == "center") return PositionHint::Center;
  if (s == "unknown") return PositionHint::Unknown;
  throw ValidationError("unknown position hint: " + s);
}

bool is_interactive(Role r) {
  return r == Role::Button || r == Role::Link || r == Role::Textbox || r == Role::Combobox;
}

void Observation::validate() const {
  std::set<std::string> seen;
  for (const auto& e : elements) {
    if (!seen.insert(e.uid).second) {
      throw ValidationError("duplicate element uid in observation: " + e.uid);
    }
  }
}

const Element* Observation::find(const std::string& uid) const {
  for (const auto& e : elements) {
    if (e.uid == uid) return &e;
  }
  return nullptr;
}

void Instruction::validate() const {
  if (trim(text).empty()) throw ValidationError("instruction is empty");
}

void Trajectory::validate() const {
  instruction.validate();
  if (steps.empty()) throw ValidationError("trajectory has no steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& st = steps[i];
    st.observation.validate();
    const auto& a = st.action;
    if ((a.op == Op::Type || a.op == Op::Select) && a.arg.empty()) {
      throw ValidationError("step " + std::to_string(i + 1) + ": " + to_string(a.op) +
                            " requires an argument");
    }
    if (a.needs_target()) {
      if (a.target.empty() || st.observation.find(a.target) == nullptr) {
        throw ValidationError("step " + std::to_string(i + 1) + ": action target '" + a.target +
                              "' not present in its observation");
      }
    }
  }
}

void NormalizedIntent::validate() const {
  if (trim(intent).empty()) throw ValidationError("normalized intent is empty");
  if (tokenize(intent).empty()) throw ValidationError("normalized intent has no tokens");
  std::set<std::string> keys;
  for (const auto& [k, v] : constraints) {
    if (k.empty()) throw ValidationError("constraint key is empty");
    if (!keys.insert(k).second) throw ValidationError("duplicate constraint key: " + k);
  }
}

const std::string* NormalizedIntent::constraint(const std::string& key) const {
  for (const auto& [k, v] : constraints) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::vector<std::string> NormalizedIntent::constraint_keys() const {
  std::vector<std::string> out;
  out.reserve(constraints.size());
  for (const auto& [k, v] : constraints) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hmt
