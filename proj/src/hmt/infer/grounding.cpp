#include "hmt/infer/grounding.hpp"

#include "hmt/embed/vector.hpp"
#include "hmt/text/tokenize.hpp"

namespace hmt {

double score_element(const ElementDescriptor& descriptor, const Element& element,
                     const GroundingWeights& weights) {
  double role_part = descriptor.role == element.role ? 1.0 : 0.0;
  double label_part = jaccard(token_set(descriptor.label), token_set(element.text));
  double context_part = jaccard(token_set(descriptor.context), token_set(element.context));
  return weights.role * role_part + weights.label * label_part + weights.context * context_part;
}

std::optional<GroundingMatch> ground_descriptors(const std::vector<ElementDescriptor>& descriptors,
                                                 const Observation& obs,
                                                 const GroundingWeights& weights) {
  if (obs.elements.empty()) return std::nullopt;
  for (std::size_t d = 0; d < descriptors.size(); ++d) {
    std::vector<double> scores;
    scores.reserve(obs.elements.size());
    std::size_t best = 0;
    double best_score = -1.0;
    for (std::size_t i = 0; i < obs.elements.size(); ++i) {
      double s = score_element(descriptors[d], obs.elements[i], weights);
      scores.push_back(s);
      if (s > best_score) {  // strict: earlier element wins ties
        best_score = s;
        best = i;
      }
    }
    if (best_score >= weights.floor) {
      return GroundingMatch{best, d, best_score, std::move(scores)};
    }
  }
  return std::nullopt;
}

}  // namespace hmt
