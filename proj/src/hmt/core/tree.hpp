#pragma once
// The three-level memory tree: task nodes (normalized intents), subgoal
// nodes (stages with observable pre/post-conditions), step nodes (action
// patterns with semantic element descriptors).
//
// Node ids are global across levels and strictly increase in creation
// order. Concurrent readers are fine; mutation requires the caller to hold
// a single-writer discipline (the embedding index shares it).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hmt/core/descriptor.hpp"
#include "hmt/core/types.hpp"
#include "hmt/embed/embedder.hpp"
#include "hmt/embed/index.hpp"

namespace hmt {

struct TaskNode {
  NodeId id = 0;
  NormalizedIntent normalized;
  Vector embedding;
  std::vector<NodeId> children;  // subgoal ids, in creation order
};

struct SubgoalNode {
  NodeId id = 0;
  std::string name;
  std::vector<std::string> pre_conditions;
  std::vector<std::string> post_conditions;
  Vector embedding;
  std::vector<NodeId> children;  // step ids, in creation order
  NodeId parent = 0;

  // Canonical text used for the node embedding.
  std::string render() const;
};

struct StepNode {
  NodeId id = 0;
  Op op = Op::Stop;
  std::optional<std::string> arg_template;
  ElementDescriptor descriptor;
  Vector embedding;
  NodeId parent = 0;

  std::string render() const;
};

class IntegrityError : public std::runtime_error {
 public:
  explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

struct TreePath {
  const TaskNode* task = nullptr;
  const SubgoalNode* subgoal = nullptr;
  const StepNode* step = nullptr;
};

class MemoryTree {
 public:
  static constexpr int kSchemaVersion = 1;

  // Node creation enforces unit-norm embeddings and resolvable parents.
  NodeId create_task(NormalizedIntent normalized, Vector embedding);
  NodeId create_subgoal(NodeId task_id, std::string name, std::vector<std::string> pre,
                        std::vector<std::string> post, Vector embedding);
  NodeId create_step(NodeId subgoal_id, Op op, std::optional<std::string> arg_template,
                     ElementDescriptor descriptor, Vector embedding);

  // Restores a node with a fixed id (snapshot loading). Ids must arrive in
  // increasing order per the creation-order invariant.
  void restore_task(TaskNode node);
  void restore_subgoal(SubgoalNode node);
  void restore_step(StepNode node);
  void set_next_id(NodeId next);

  const TaskNode* task(NodeId id) const;
  const SubgoalNode* subgoal(NodeId id) const;
  const StepNode* step(NodeId id) const;

  // Unique root-to-leaf path for a step id; NotFoundError on unknown ids,
  // IntegrityError if a parent link dangles.
  TreePath walk_path(NodeId step_id) const;

  // Existing task with string-equal canonical intent and the same
  // constraint key set, if any.
  std::optional<NodeId> find_task(const NormalizedIntent& normalized) const;

  const std::map<NodeId, TaskNode>& tasks() const { return tasks_; }
  const std::map<NodeId, SubgoalNode>& subgoals() const { return subgoals_; }
  const std::map<NodeId, StepNode>& steps() const { return steps_; }

  NodeId next_id() const { return next_id_; }
  bool empty() const { return tasks_.empty(); }
  std::size_t node_count() const { return tasks_.size() + subgoals_.size() + steps_.size(); }

  // Full structural audit: three levels, referential integrity, id
  // uniqueness. Throws IntegrityError on the first violation.
  void check_invariants() const;

 private:
  NodeId allocate_id();
  void require_unit(const Vector& v, const char* what) const;

  std::map<NodeId, TaskNode> tasks_;
  std::map<NodeId, SubgoalNode> subgoals_;
  std::map<NodeId, StepNode> steps_;
  NodeId next_id_ = 1;
};

// Returns the existing task id for an equivalent normalized intent, or
// creates a new task node embedding the intent text.
NodeId get_or_create_task_node(MemoryTree& tree, const NormalizedIntent& normalized,
                               EmbeddingProvider& embedder, VectorIndex* index = nullptr);

}  // namespace hmt
