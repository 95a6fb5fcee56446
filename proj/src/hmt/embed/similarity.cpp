#include "hmt/embed/similarity.hpp"

#include "hmt/text/tokenize.hpp"

namespace hmt {

double cond_match(const std::vector<std::string>& pre_conditions,
                  const std::vector<std::string>& post_conditions, CondScope scope,
                  const std::string& obs_summary) {
  std::set<std::string> cond_tokens = token_set(pre_conditions);
  if (scope == CondScope::Union) {
    auto post = token_set(post_conditions);
    cond_tokens.insert(post.begin(), post.end());
  }
  return jaccard(cond_tokens, token_set(obs_summary));
}

}  // namespace hmt
