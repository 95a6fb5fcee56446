#include "hmt/embed/vector.hpp"

#include <algorithm>
#include <cmath>

namespace hmt {

bool Vector::degenerate() const {
  return std::all_of(values.begin(), values.end(), [](float v) { return v == 0.0f; });
}

double Vector::norm() const {
  double s = 0.0;
  for (float v : values) s += static_cast<double>(v) * static_cast<double>(v);
  return std::sqrt(s);
}

Vector Vector::normalized() const {
  double n = norm();
  if (n == 0.0) return *this;
  Vector out = *this;
  for (float& v : out.values) v = static_cast<float>(v / n);
  return out;
}

bool Vector::unit_norm(double eps) const {
  return std::abs(norm() - 1.0) <= eps;
}

double cosine(const Vector& u, const Vector& v) {
  if (u.dimension() != v.dimension() || u.dimension() == 0) return 0.0;
  if (u.degenerate() || v.degenerate()) return 0.0;
  double dot = 0.0;
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    dot += static_cast<double>(u.values[i]) * static_cast<double>(v.values[i]);
  }
  double denom = u.norm() * v.norm();
  if (denom == 0.0) return 0.0;
  double c = dot / denom;
  return std::clamp(c, -1.0, 1.0);
}

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t inter = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) {
      ++inter;
      ++ia;
      ++ib;
    } else if (*ia < *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  std::size_t uni = a.size() + b.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace hmt
