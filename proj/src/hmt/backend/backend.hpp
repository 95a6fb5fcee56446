#pragma once
// Backend abstraction for every model call in the construction pipeline and
// the inference loop. Two implementations: a deterministic scripted backend
// (rule-based, used by the whole test suite) and a remote chat-completions
// client. Both speak structured JSON per role.

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace hmt {

enum class BackendRole {
  Normalize,
  Segment,
  Describe,
  AbstractStep,
  AbstractState,
  Planner,
  Actor,
  BasePolicy,
};

std::string to_string(BackendRole role);
BackendRole backend_role_from_string(const std::string& s);

struct BackendRequest {
  BackendRole role = BackendRole::Normalize;
  nlohmann::json payload;
};

// Transport-level failure (network, HTTP status). `retryable` distinguishes
// transient conditions from configuration problems.
class BackendError : public std::runtime_error {
 public:
  BackendError(const std::string& what, bool retryable)
      : std::runtime_error(what), retryable_(retryable) {}
  bool retryable() const { return retryable_; }

 private:
  bool retryable_;
};

// Response came back but is not valid JSON for the role schema. Carries the
// raw response for diagnostics.
class BackendParseError : public std::runtime_error {
 public:
  BackendParseError(const std::string& what, std::string raw)
      : std::runtime_error(what), raw_(std::move(raw)) {}
  const std::string& raw() const { return raw_; }

 private:
  std::string raw_;
};

class Backend {
 public:
  virtual ~Backend() = default;

  // Raw response text for a request; throws BackendError on transport
  // failure.
  virtual std::string complete(const BackendRequest& req) = 0;
};

// Parses the raw backend response and validates it against the role's
// response schema; throws BackendParseError when it does not conform.
// Callers own the retry budget.
nlohmann::json backend_complete(const BackendRequest& req, Backend& backend);

// Validates an already-parsed response against the role schema.
void validate_response(BackendRole role, const nlohmann::json& response);

// Canonical prompt text for a request: the system instructions for the role
// plus the serialized payload. The remote backend sends exactly this; the
// benchmark's token accounting counts its words.
std::string render_prompt(const BackendRequest& req);
std::string role_instructions(BackendRole role);

}  // namespace hmt
