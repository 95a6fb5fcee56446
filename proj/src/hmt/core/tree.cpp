#include "hmt/core/tree.hpp"

#include <set>

namespace hmt {

std::string SubgoalNode::render() const {
  std::string out = name;
  out += "; pre:";
  for (const auto& c : pre_conditions) out += " " + c + ";";
  out += " post:";
  for (const auto& c : post_conditions) out += " " + c + ";";
  return out;
}

std::string StepNode::render() const {
  std::string out = to_string(op);
  out += " " + descriptor.render();
  if (arg_template.has_value() && !arg_template->empty()) out += " arg " + *arg_template;
  return out;
}

NodeId MemoryTree::allocate_id() { return next_id_++; }

void MemoryTree::require_unit(const Vector& v, const char* what) const {
  if (!v.unit_norm()) {
    throw ValidationError(std::string(what) + ": embedding must be unit-norm");
  }
}

NodeId MemoryTree::create_task(NormalizedIntent normalized, Vector embedding) {
  normalized.validate();
  require_unit(embedding, "task node");
  NodeId id = allocate_id();
  TaskNode node;
  node.id = id;
  node.normalized = std::move(normalized);
  node.embedding = std::move(embedding);
  tasks_.emplace(id, std::move(node));
  return id;
}

NodeId MemoryTree::create_subgoal(NodeId task_id, std::string name, std::vector<std::string> pre,
                                  std::vector<std::string> post, Vector embedding) {
  auto it = tasks_.find(task_id);
  if (it == tasks_.end()) throw NotFoundError("unknown task id " + std::to_string(task_id));
  if (name.empty()) throw ValidationError("subgoal name is empty");
  if (pre.empty() || post.empty()) {
    throw ValidationError("subgoal conditions must be non-empty");
  }
  require_unit(embedding, "subgoal node");
  NodeId id = allocate_id();
  SubgoalNode node;
  node.id = id;
  node.name = std::move(name);
  node.pre_conditions = std::move(pre);
  node.post_conditions = std::move(post);
  node.embedding = std::move(embedding);
  node.parent = task_id;
  subgoals_.emplace(id, std::move(node));
  it->second.children.push_back(id);
  return id;
}

NodeId MemoryTree::create_step(NodeId subgoal_id, Op op, std::optional<std::string> arg_template,
                               ElementDescriptor descriptor, Vector embedding) {
  auto it = subgoals_.find(subgoal_id);
  if (it == subgoals_.end()) throw NotFoundError("unknown subgoal id " + std::to_string(subgoal_id));
  require_unit(embedding, "step node");
  NodeId id = allocate_id();
  StepNode node;
  node.id = id;
  node.op = op;
  node.arg_template = std::move(arg_template);
  node.descriptor = std::move(descriptor);
  node.embedding = std::move(embedding);
  node.parent = subgoal_id;
  steps_.emplace(id, std::move(node));
  it->second.children.push_back(id);
  return id;
}

void MemoryTree::restore_task(TaskNode node) {
  if (tasks_.count(node.id) || subgoals_.count(node.id) || steps_.count(node.id)) {
    throw IntegrityError("duplicate node id " + std::to_string(node.id));
  }
  tasks_.emplace(node.id, std::move(node));
}

void MemoryTree::restore_subgoal(SubgoalNode node) {
  if (tasks_.count(node.id) || subgoals_.count(node.id) || steps_.count(node.id)) {
    throw IntegrityError("duplicate node id " + std::to_string(node.id));
  }
  subgoals_.emplace(node.id, std::move(node));
}

void MemoryTree::restore_step(StepNode node) {
  if (tasks_.count(node.id) || subgoals_.count(node.id) || steps_.count(node.id)) {
    throw IntegrityError("duplicate node id " + std::to_string(node.id));
  }
  steps_.emplace(node.id, std::move(node));
}

void MemoryTree::set_next_id(NodeId next) { next_id_ = next; }

const TaskNode* MemoryTree::task(NodeId id) const {
  auto it = tasks_.find(id);
  return it == tasks_.end() ? nullptr : &it->second;
}

const SubgoalNode* MemoryTree::subgoal(NodeId id) const {
  auto it = subgoals_.find(id);
  return it == subgoals_.end() ? nullptr : &it->second;
}

const StepNode* MemoryTree::step(NodeId id) const {
  auto it = steps_.find(id);
  return it == steps_.end() ? nullptr : &it->second;
}

TreePath MemoryTree::walk_path(NodeId step_id) const {
  const StepNode* s = step(step_id);
  if (s == nullptr) throw NotFoundError("unknown step id " + std::to_string(step_id));
  const SubgoalNode* g = subgoal(s->parent);
  if (g == nullptr) throw IntegrityError("step " + std::to_string(step_id) + " has dangling parent");
  const TaskNode* t = task(g->parent);
  if (t == nullptr) {
    throw IntegrityError("subgoal " + std::to_string(g->id) + " has dangling parent");
  }
  return TreePath{t, g, s};
}

std::optional<NodeId> MemoryTree::find_task(const NormalizedIntent& normalized) const {
  auto keys = normalized.constraint_keys();
  for (const auto& [id, node] : tasks_) {
    if (node.normalized.intent == normalized.intent &&
        node.normalized.constraint_keys() == keys) {
      return id;
    }
  }
  return std::nullopt;
}

void MemoryTree::check_invariants() const {
  std::set<NodeId> ids;
  for (const auto& [id, n] : tasks_) {
    if (id != n.id || !ids.insert(id).second) throw IntegrityError("task id table corrupt");
  }
  for (const auto& [id, n] : subgoals_) {
    if (id != n.id || !ids.insert(id).second) throw IntegrityError("subgoal id table corrupt");
    if (tasks_.find(n.parent) == tasks_.end()) {
      throw IntegrityError("subgoal " + std::to_string(id) + " parent is not a task");
    }
  }
  for (const auto& [id, n] : steps_) {
    if (id != n.id || !ids.insert(id).second) throw IntegrityError("step id table corrupt");
    if (subgoals_.find(n.parent) == subgoals_.end()) {
      throw IntegrityError("step " + std::to_string(id) + " parent is not a subgoal");
    }
  }

  // Child ids across all nodes must be exactly the non-task node ids.
  std::set<NodeId> child_ids;
  for (const auto& [id, n] : tasks_) {
    for (NodeId c : n.children) {
      if (subgoals_.find(c) == subgoals_.end()) {
        throw IntegrityError("task child " + std::to_string(c) + " is not a subgoal");
      }
      if (!child_ids.insert(c).second) throw IntegrityError("duplicate child reference");
    }
  }
  for (const auto& [id, n] : subgoals_) {
    for (NodeId c : n.children) {
      auto it = steps_.find(c);
      if (it == steps_.end()) {
        throw IntegrityError("subgoal child " + std::to_string(c) + " is not a step");
      }
      if (it->second.parent != id) throw IntegrityError("step parent/child mismatch");
      if (!child_ids.insert(c).second) throw IntegrityError("duplicate child reference");
    }
  }
  std::size_t non_task = subgoals_.size() + steps_.size();
  if (child_ids.size() != non_task) {
    throw IntegrityError("orphaned non-task nodes exist");
  }
  for (NodeId id : ids) {
    if (id >= next_id_) throw IntegrityError("node id beyond the id counter");
  }
}

NodeId get_or_create_task_node(MemoryTree& tree, const NormalizedIntent& normalized,
                               EmbeddingProvider& embedder, VectorIndex* index) {
  normalized.validate();
  if (auto existing = tree.find_task(normalized)) return *existing;
  Vector v = embedder.embed(normalized.intent);
  NodeId id = tree.create_task(normalized, std::move(v));
  if (index != nullptr) index->add(id, Level::Task, tree.task(id)->embedding);
  return id;
}

}  // namespace hmt
