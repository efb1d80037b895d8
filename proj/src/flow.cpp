#include "robustham/flow.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace robustham {

MaxFlow::MaxFlow(int nodes) : head_(nodes, -1), level_(nodes), cursor_(nodes) {}

int MaxFlow::add_edge(int from, int to, std::int64_t capacity) {
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  const int id = static_cast<int>(edges_.size());
  edges_.push_back({to, head_[from], capacity});
  head_[from] = id;
  edges_.push_back({from, head_[to], 0});
  head_[to] = id + 1;
  original_cap_.push_back(capacity);
  original_cap_.push_back(0);
  return id;
}

bool MaxFlow::build_levels(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::vector<int> queue{source};
  level_[source] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int v = queue[i];
    for (int e = head_[v]; e >= 0; e = edges_[e].next) {
      if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
        level_[edges_[e].to] = level_[v] + 1;
        queue.push_back(edges_[e].to);
      }
    }
  }
  return level_[sink] >= 0;
}

// Iterative blocking-flow search: walks a level-increasing path, pushes the
// bottleneck, and retreats. Avoids recursion depth issues on long paths.
std::int64_t MaxFlow::push(int source, int sink, std::int64_t limit) {
  std::int64_t total = 0;
  std::vector<int> path;  // edge ids
  int v = source;
  while (true) {
    if (v == sink) {
      std::int64_t bottleneck = limit - total;
      for (int e : path) bottleneck = std::min(bottleneck, edges_[e].cap);
      for (int e : path) {
        edges_[e].cap -= bottleneck;
        edges_[e ^ 1].cap += bottleneck;
      }
      total += bottleneck;
      if (total == limit) return total;
      // Restart from the tail of the first saturated edge.
      std::size_t keep = 0;
      while (keep < path.size() && edges_[path[keep]].cap > 0) ++keep;
      path.resize(keep);
      v = path.empty() ? source : edges_[path.back()].to;
      continue;
    }
    int& e = cursor_[v];
    while (e >= 0 && !(edges_[e].cap > 0 && level_[edges_[e].to] == level_[v] + 1)) e = edges_[e].next;
    if (e >= 0) {
      path.push_back(e);
      v = edges_[e].to;
      continue;
    }
    // Dead end: retreat.
    if (path.empty()) return total;
    level_[v] = -1;
    const int back = path.back();
    path.pop_back();
    v = edges_[back ^ 1].to;
    cursor_[v] = edges_[cursor_[v]].next;
  }
}

std::int64_t MaxFlow::solve(int source, int sink) {
  if (source_ >= 0) throw std::logic_error("MaxFlow::solve called twice");
  source_ = source;
  std::int64_t total = 0;
  while (build_levels(source, sink)) {
    std::copy(head_.begin(), head_.end(), cursor_.begin());
    total += push(source, sink, std::numeric_limits<std::int64_t>::max());
  }
  return total;
}

std::int64_t MaxFlow::flow(int edge_id) const { return original_cap_[edge_id] - edges_[edge_id].cap; }

std::vector<bool> MaxFlow::source_side() const {
  std::vector<bool> seen(head_.size(), false);
  if (source_ < 0) return seen;
  std::vector<int> stack{source_};
  seen[source_] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int e = head_[v]; e >= 0; e = edges_[e].next) {
      if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
        seen[edges_[e].to] = true;
        stack.push_back(edges_[e].to);
      }
    }
  }
  return seen;
}

}  // namespace robustham
