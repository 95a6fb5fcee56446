#pragma once
// Condition matching: lexical overlap between a subgoal's observable UI
// conditions and the current observation summary.

#include <set>
#include <string>
#include <vector>

#include "hmt/embed/vector.hpp"

namespace hmt {

// Which condition lists participate in CondMatch. Union is the default;
// pre-only is exposed for the ablation harness.
enum class CondScope { PreOnly, Union };

// Jaccard between the tokenized conditions (per scope) and the tokenized
// observation summary.
double cond_match(const std::vector<std::string>& pre_conditions,
                  const std::vector<std::string>& post_conditions, CondScope scope,
                  const std::string& obs_summary);

}  // namespace hmt
