#pragma once
// Fixed-dimension embedding vector plus the similarity primitives used by
// retrieval scoring: cosine and Jaccard overlap.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace hmt {

struct Vector {
  std::vector<float> values;

  std::size_t dimension() const { return values.size(); }

  // All-zero vectors are degenerate (e.g. embedding of empty text); they
  // score 0 cosine against everything.
  bool degenerate() const;

  double norm() const;
  Vector normalized() const;
  bool unit_norm(double eps = 1e-6) const;
};

// Standard cosine in [-1, 1]; 0 when either side is degenerate or
// dimensions differ.
double cosine(const Vector& u, const Vector& v);

// |a ∩ b| / |a ∪ b|; both empty -> 1.0 (vacuous match).
double jaccard(const std::set<std::string>& a, const std::set<std::string>& b);

}  // namespace hmt
