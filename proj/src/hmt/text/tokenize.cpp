#include "hmt/text/tokenize.hpp"

#include <cctype>

namespace hmt {

std::string lowercase(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (std::isalnum(c)) {
      cur.push_back(static_cast<char>(std::tolower(c)));
    } else if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::set<std::string> token_set(const std::string& text) {
  auto toks = tokenize(text);
  return {toks.begin(), toks.end()};
}

std::set<std::string> token_set(const std::vector<std::string>& texts) {
  std::set<std::string> out;
  for (const auto& t : texts) {
    auto toks = tokenize(t);
    out.insert(toks.begin(), toks.end());
  }
  return out;
}

std::size_t count_words(const std::string& text) {
  std::size_t n = 0;
  bool in_word = false;
  for (char ch : text) {
    bool ws = std::isspace(static_cast<unsigned char>(ch)) != 0;
    if (!ws && !in_word) ++n;
    in_word = !ws;
  }
  return n;
}

}  // namespace hmt
