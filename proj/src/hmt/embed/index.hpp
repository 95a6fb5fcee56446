#pragma once
// Exact top-K cosine index over tree nodes, partitioned by level.
// Memory sizes stay at desk scale, so a full scan with a bounded heap is
// both cheap and reproducible; ties break toward the lower node id.

#include <cstdint>
#include <vector>

#include "hmt/embed/vector.hpp"

namespace hmt {

using NodeId = std::uint64_t;

enum class Level { Task, Subgoal, Step };

std::string to_string(Level level);
Level level_from_string(const std::string& s);

struct IndexEntry {
  NodeId node_id = 0;
  Level level = Level::Task;
  Vector vector;
};

struct ScoredId {
  NodeId node_id = 0;
  double score = 0.0;
};

class VectorIndex {
 public:
  // One entry per node id; re-adding an id replaces its vector.
  void add(NodeId id, Level level, Vector v);

  std::vector<ScoredId> topk(const Vector& query, Level level, std::size_t k) const;

  const std::vector<IndexEntry>& entries(Level level) const;
  std::size_t size() const;
  void clear();

 private:
  std::vector<IndexEntry>& bucket(Level level);
  const std::vector<IndexEntry>& bucket(Level level) const;

  std::vector<IndexEntry> tasks_;
  std::vector<IndexEntry> subgoals_;
  std::vector<IndexEntry> steps_;
};

}  // namespace hmt
