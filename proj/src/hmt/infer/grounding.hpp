#pragma once
// Element grounding: scoring a page's candidate elements against a stored
// semantic descriptor. Weighted sum of role equality, label token overlap
// and context token overlap; argmax with document-order tie-break.

#include <optional>
#include <vector>

#include "hmt/core/descriptor.hpp"
#include "hmt/core/types.hpp"

namespace hmt {

struct GroundingWeights {
  double role = 0.5;
  double label = 0.3;
  double context = 0.2;
  double floor = 0.2;  // minimum acceptable score
};

double score_element(const ElementDescriptor& descriptor, const Element& element,
                     const GroundingWeights& weights);

struct GroundingMatch {
  std::size_t element_index = 0;   // document order within the observation
  std::size_t exemplar_index = 0;  // which descriptor matched
  double score = 0.0;
  std::vector<double> scores;      // per-element scores for the matching exemplar
};

// Walks the descriptors in order; the first one with some element at or
// above the floor wins. No match anywhere -> nullopt.
std::optional<GroundingMatch> ground_descriptors(const std::vector<ElementDescriptor>& descriptors,
                                                 const Observation& obs,
                                                 const GroundingWeights& weights);

}  // namespace hmt
