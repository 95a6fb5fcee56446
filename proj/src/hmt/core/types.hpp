#pragma once
// Domain types for web-agent trajectories: instructions, observations,
// elements, actions and the normalized intents produced by the
// abstraction pipeline.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hmt {

// Domain validation failure. Thrown by the validate() members below and by
// constructors of invariant-carrying types.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class NotFoundError : public std::runtime_error {
 public:
  explicit NotFoundError(const std::string& what) : std::runtime_error(what) {}
};

enum class Role {
  Button,
  Link,
  Textbox,
  Combobox,
  Listitem,
  Checkbox,
  Radio,
  Heading,
  Generic,
};

enum class Op { Click, Type, Select, Scroll, Stop };

enum class PositionHint { Top, Bottom, Left, Right, Center, Unknown };

std::string to_string(Role r);
std::string to_string(Op op);
std::string to_string(PositionHint p);
Role role_from_string(const std::string& s);
Op op_from_string(const std::string& s);
PositionHint position_hint_from_string(const std::string& s);

// True for the roles a user acts on; these rank first in observation
// summaries.
bool is_interactive(Role r);

struct Rect {
  double x = 0;
  double y = 0;
  double w = 0;
  double h = 0;
};

// One candidate UI element of an observation. `uid` is the environment's raw
// identifier; it never leaves the raw layer (memory stores descriptors).
struct Element {
  std::string uid;
  Role role = Role::Generic;
  std::string text;
  std::vector<std::string> context;  // ancestor labels / landmarks, outermost last
  std::optional<Rect> bbox;
};

struct Observation {
  std::vector<Element> elements;
  std::string page_title;
  std::string url;

  // uids pairwise distinct.
  void validate() const;
  const Element* find(const std::string& uid) const;
};

struct Action {
  Op op = Op::Stop;
  std::string target;  // element uid; empty for SCROLL/STOP
  std::string arg;     // empty means absent

  bool needs_target() const { return op == Op::Click || op == Op::Type || op == Op::Select; }
};

struct Instruction {
  std::string text;

  void validate() const;
};

struct TrajectoryStep {
  Observation observation;
  Action action;
};

struct Trajectory {
  Instruction instruction;
  std::vector<TrajectoryStep> steps;
  bool success = false;

  // At least one step; TYPE/SELECT carry args; every targeted action
  // resolves in its own observation.
  void validate() const;
};

// Canonical intent plus ordered (key, value) constraints with unique keys.
struct NormalizedIntent {
  std::string intent;
  std::vector<std::pair<std::string, std::string>> constraints;

  void validate() const;
  const std::string* constraint(const std::string& key) const;
  std::vector<std::string> constraint_keys() const;
};

}  // namespace hmt
