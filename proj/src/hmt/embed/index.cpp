#include "hmt/embed/index.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace hmt {

std::string to_string(Level level) {
  switch (level) {
    case Level::Task: return "task";
    case Level::Subgoal: return "subgoal";
    case Level::Step: return "step";
  }
  return "task";
}

Level level_from_string(const std::string& s) {
  if (s == "task") return Level::Task;
  if (s == "subgoal") return Level::Subgoal;
  if (s == "step") return Level::Step;
  throw std::runtime_error("unknown index level: " + s);
}

std::vector<IndexEntry>& VectorIndex::bucket(Level level) {
  switch (level) {
    case Level::Task: return tasks_;
    case Level::Subgoal: return subgoals_;
    case Level::Step: return steps_;
  }
  return tasks_;
}

const std::vector<IndexEntry>& VectorIndex::bucket(Level level) const {
  return const_cast<VectorIndex*>(this)->bucket(level);
}

void VectorIndex::add(NodeId id, Level level, Vector v) {
  auto& b = bucket(level);
  for (auto& e : b) {
    if (e.node_id == id) {
      e.vector = std::move(v);
      return;
    }
  }
  // Kept sorted by id so scans and serialization are order-stable.
  IndexEntry entry{id, level, std::move(v)};
  auto pos = std::lower_bound(b.begin(), b.end(), id,
                              [](const IndexEntry& e, NodeId v) { return e.node_id < v; });
  b.insert(pos, std::move(entry));
}

std::vector<ScoredId> VectorIndex::topk(const Vector& query, Level level, std::size_t k) const {
  const auto& b = bucket(level);
  if (b.empty() || k == 0) return {};

  // Min-heap of the best k; worse-score (or on ties, higher-id) entries sit
  // on top so they get evicted first.
  auto worse = [](const ScoredId& a, const ScoredId& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.node_id < b.node_id;
  };
  std::priority_queue<ScoredId, std::vector<ScoredId>, decltype(worse)> heap(worse);

  for (const auto& e : b) {
    ScoredId s{e.node_id, cosine(query, e.vector)};
    if (heap.size() < k) {
      heap.push(s);
    } else {
      const auto& top = heap.top();
      bool better = s.score > top.score || (s.score == top.score && s.node_id < top.node_id);
      if (better) {
        heap.pop();
        heap.push(s);
      }
    }
  }

  std::vector<ScoredId> out;
  out.reserve(heap.size());
  while (!heap.empty()) {
    out.push_back(heap.top());
    heap.pop();
  }
  std::reverse(out.begin(), out.end());
  return out;
}

const std::vector<IndexEntry>& VectorIndex::entries(Level level) const { return bucket(level); }

std::size_t VectorIndex::size() const { return tasks_.size() + subgoals_.size() + steps_.size(); }

void VectorIndex::clear() {
  tasks_.clear();
  subgoals_.clear();
  steps_.clear();
}

}  // namespace hmt
