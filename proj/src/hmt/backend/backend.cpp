#include "hmt/backend/backend.hpp"

namespace hmt {

std::string to_string(BackendRole role) {
  switch (role) {
    case BackendRole::Normalize: return "normalize";
    case BackendRole::Segment: return "segment";
    case BackendRole::Describe: return "describe";
    case BackendRole::AbstractStep: return "abstract_step";
    case BackendRole::AbstractState: return "abstract_state";
    case BackendRole::Planner: return "planner";
    case BackendRole::Actor: return "actor";
    case BackendRole::BasePolicy: return "base_policy";
  }
  return "normalize";
}

BackendRole backend_role_from_string(const std::string& s) {
  if (s == "normalize") return BackendRole::Normalize;
  if (s == "segment") return BackendRole::Segment;
  if (s == "describe") return BackendRole::Describe;
  if (s == "abstract_step") return BackendRole::AbstractStep;
  if (s == "abstract_state") return BackendRole::AbstractState;
  if (s == "planner") return BackendRole::Planner;
  if (s == "actor") return BackendRole::Actor;
  if (s == "base_policy") return BackendRole::BasePolicy;
  throw std::runtime_error("unknown backend role: " + s);
}

namespace {

void require(bool cond, const std::string& what, const nlohmann::json& response) {
  if (!cond) throw BackendParseError("backend response schema violation: " + what, response.dump());
}

void require_string_array(const nlohmann::json& v, const std::string& what,
                          const nlohmann::json& response) {
  require(v.is_array(), what + " must be an array", response);
  for (const auto& item : v) require(item.is_string(), what + " entries must be strings", response);
}

}  // namespace

void validate_response(BackendRole role, const nlohmann::json& r) {
  switch (role) {
    case BackendRole::Normalize: {
      require(r.is_object(), "normalize response must be an object", r);
      require(r.contains("intent") && r["intent"].is_string(), "missing string 'intent'", r);
      require(r.contains("constraints") && r["constraints"].is_object(),
              "missing object 'constraints'", r);
      for (const auto& [k, v] : r["constraints"].items()) {
        (void)k;
        require(v.is_string(), "constraint values must be strings", r);
      }
      break;
    }
    case BackendRole::Segment: {
      require(r.is_object() && r.contains("segments") && r["segments"].is_array(),
              "missing array 'segments'", r);
      for (const auto& s : r["segments"]) {
        require(s.is_object() && s.contains("start") && s.contains("end"),
                "segment entries need start/end", r);
        require(s["start"].is_number_integer() && s["end"].is_number_integer(),
                "segment bounds must be integers", r);
      }
      break;
    }
    case BackendRole::Describe: {
      require(r.is_object(), "describe response must be an object", r);
      require(r.contains("name") && r["name"].is_string(), "missing string 'name'", r);
      require(r.contains("pre_conditions"), "missing 'pre_conditions'", r);
      require(r.contains("post_conditions"), "missing 'post_conditions'", r);
      require_string_array(r["pre_conditions"], "pre_conditions", r);
      require_string_array(r["post_conditions"], "post_conditions", r);
      break;
    }
    case BackendRole::AbstractStep: {
      require(r.is_object(), "abstract_step response must be an object", r);
      require(r.contains("role") && r["role"].is_string(), "missing string 'role'", r);
      require(r.contains("label") && r["label"].is_string(), "missing string 'label'", r);
      require(r.contains("position_hint") && r["position_hint"].is_string(),
              "missing string 'position_hint'", r);
      require(r.contains("context"), "missing 'context'", r);
      require_string_array(r["context"], "context", r);
      break;
    }
    case BackendRole::AbstractState: {
      require(r.is_object() && r.contains("state") && r["state"].is_string(),
              "missing string 'state'", r);
      break;
    }
    case BackendRole::Planner: {
      require(r.is_object() && r.contains("distribution") && r["distribution"].is_array(),
              "missing array 'distribution'", r);
      for (const auto& p : r["distribution"]) {
        require(p.is_number(), "distribution entries must be numbers", r);
      }
      break;
    }
    case BackendRole::Actor: {
      require(r.is_object() && r.contains("selected") && r["selected"].is_number_integer(),
              "missing integer 'selected'", r);
      break;
    }
    case BackendRole::BasePolicy: {
      require(r.is_object() && r.contains("op") && r["op"].is_string(), "missing string 'op'", r);
      break;
    }
  }
}

nlohmann::json backend_complete(const BackendRequest& req, Backend& backend) {
  std::string raw = backend.complete(req);
  nlohmann::json parsed = nlohmann::json::parse(raw, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded()) {
    throw BackendParseError("backend response is not valid JSON", raw);
  }
  validate_response(req.role, parsed);
  return parsed;
}

std::string role_instructions(BackendRole role) {
  // Reconstructed prompts; the originals are not public. Wording is frozen
  // so token accounting and goldens stay stable.
  switch (role) {
    case BackendRole::Normalize:
      return "Rewrite the user instruction into a canonical task intent and a set of "
             "constraints. Respond with JSON: {\"intent\": string, \"constraints\": "
             "{key: value}}.";
    case BackendRole::Segment:
      return "Partition the interaction trajectory into contiguous stages. Respond with "
             "JSON: {\"segments\": [{\"start\": int, \"end\": int, \"name\": string}]} "
             "using 1-based inclusive step indices.";
    case BackendRole::Describe:
      return "Name this stage and describe its observable UI state before and after. "
             "Respond with JSON: {\"name\": string, \"pre_conditions\": [string], "
             "\"post_conditions\": [string]}.";
    case BackendRole::AbstractStep:
      return "Describe the target element semantically (role, label, position, context) "
             "without its raw identifier. Respond with JSON: {\"role\": string, "
             "\"label\": string, \"position_hint\": string, \"context\": [string]}.";
    case BackendRole::AbstractState:
      return "Summarize the current page state in one short line. Respond with JSON: "
             "{\"state\": string}.";
    case BackendRole::Planner:
      return "Given the task, the abstracted page state and the candidate stages with "
             "their pre/post-conditions, output a probability for each candidate being "
             "the current stage. Respond with JSON: {\"distribution\": [number]}.";
    case BackendRole::Actor:
      return "Given the retrieved step exemplars and the candidate elements of the "
             "current page, choose the element that best matches the semantic "
             "description. Respond with JSON: {\"selected\": int}.";
    case BackendRole::BasePolicy:
      return "No memory is available. Given the instruction, recent actions and the "
             "salient elements of the page, choose the next action. Respond with JSON: "
             "{\"op\": string, \"target\": string, \"arg\": string}.";
  }
  return "";
}

std::string render_prompt(const BackendRequest& req) {
  return role_instructions(req.role) + "\n" + req.payload.dump();
}

}  // namespace hmt
