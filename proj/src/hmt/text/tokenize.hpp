#pragma once
// Shared tokenizer: lowercase, split on non-alphanumeric runs.
// No stemming, no stopword removal. Every similarity primitive and the
// local embedder go through this so token spaces line up.

#include <set>
#include <string>
#include <vector>

namespace hmt {

std::vector<std::string> tokenize(const std::string& text);
std::set<std::string> token_set(const std::string& text);

// Union of token sets over several strings.
std::set<std::string> token_set(const std::vector<std::string>& texts);

std::string lowercase(const std::string& s);
std::string trim(const std::string& s);

// Whitespace-delimited word count; the token-accounting proxy used by the
// benchmark harness.
std::size_t count_words(const std::string& text);

}  // namespace hmt
