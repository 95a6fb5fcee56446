#include "hmt/embed/embedder.hpp"

#include <cstdint>

#include "hmt/text/tokenize.hpp"

namespace hmt {
namespace {

// FNV-1a, 64-bit. std::hash is not stable across platforms; this is.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

HashedBagEmbedder::HashedBagEmbedder(std::size_t dimension) : dim_(dimension) {
  if (dim_ == 0) throw EmbeddingError("embedding dimension must be positive", false);
}

Vector HashedBagEmbedder::embed(const std::string& text) {
  Vector out;
  out.values.assign(dim_, 0.0f);
  for (const auto& tok : tokenize(text)) {
    out.values[fnv1a(tok) % dim_] += 1.0f;
  }
  return out.normalized();
}

}  // namespace hmt
