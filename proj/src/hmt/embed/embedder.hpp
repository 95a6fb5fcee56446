#pragma once
// Embedding providers. The default is a hashed bag-of-tokens embedder:
// fully deterministic, network-free, and order-invariant over tokens.
// A remote provider against an OpenAI-style /embeddings endpoint exists
// for service-backed setups.

#include <memory>
#include <stdexcept>
#include <string>

#include "hmt/embed/vector.hpp"

namespace hmt {

class EmbeddingError : public std::runtime_error {
 public:
  EmbeddingError(const std::string& what, bool retryable)
      : std::runtime_error(what), retryable_(retryable) {}
  bool retryable() const { return retryable_; }

 private:
  bool retryable_;
};

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::size_t dimension() const = 0;
  virtual Vector embed(const std::string& text) = 0;
};

// Lowercase, split on non-alphanumerics, FNV-1a hash each token to a bucket
// in [0, D), accumulate counts, L2-normalize. Empty text yields the
// degenerate all-zero vector.
class HashedBagEmbedder final : public EmbeddingProvider {
 public:
  static constexpr std::size_t kDefaultDimension = 256;

  explicit HashedBagEmbedder(std::size_t dimension = kDefaultDimension);

  std::size_t dimension() const override { return dim_; }
  Vector embed(const std::string& text) override;

 private:
  std::size_t dim_;
};

struct RemoteEmbedderConfig {
  std::string base_url;
  std::string model;
  std::string api_key_env = "HMT_API_KEY";
  std::size_t dimension = 0;  // expected dimension; 0 accepts whatever comes back
  int timeout_seconds = 30;
};

std::unique_ptr<EmbeddingProvider> make_remote_embedder(const RemoteEmbedderConfig& cfg);

}  // namespace hmt
