#pragma once

#include <cstdint>
#include <vector>

namespace robustham {

// Dinic's algorithm with integral capacities. Edges are added up front;
// solve() may be called once.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes);

  // Returns an id usable with flow().
  int add_edge(int from, int to, std::int64_t capacity);

  std::int64_t solve(int source, int sink);

  std::int64_t flow(int edge_id) const;

  // Nodes reachable from the source in the residual network after solve();
  // this is the source side of a minimum cut.
  std::vector<bool> source_side() const;

  int nodes() const noexcept { return static_cast<int>(head_.size()); }

 private:
  struct EdgeRec {
    int to;
    int next;
    std::int64_t cap;
  };

  bool build_levels(int source, int sink);
  std::int64_t push(int v, int sink, std::int64_t limit);

  std::vector<EdgeRec> edges_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> cursor_;
  std::vector<std::int64_t> original_cap_;
  int source_ = -1;
};

}  // namespace robustham
