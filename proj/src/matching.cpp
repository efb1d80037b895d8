#include "robustham/matching.hpp"

#include <limits>

namespace robustham {

// --------------------------------------------------------- Hopcroft–Karp

std::vector<int> bipartite_max_matching(int left, int right, const std::vector<std::vector<int>>& adj) {
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> mate_left(left, -1);
  std::vector<int> mate_right(right, -1);
  std::vector<int> dist(left);
  std::vector<int> cursor(left);

  auto bfs = [&]() {
    std::vector<int> queue;
    for (int u = 0; u < left; ++u) {
      if (mate_left[u] < 0) {
        dist[u] = 0;
        queue.push_back(u);
      } else {
        dist[u] = kInf;
      }
    }
    bool found = false;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int u = queue[i];
      for (int v : adj[u]) {
        const int w = mate_right[v];
        if (w < 0) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  };

  // Iterative DFS along the layered graph.
  auto dfs = [&](int root) {
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int u = stack.back();
      if (cursor[u] == static_cast<int>(adj[u].size())) {
        dist[u] = kInf;
        stack.pop_back();
        if (!stack.empty()) ++cursor[stack.back()];
        continue;
      }
      const int v = adj[u][cursor[u]];
      const int w = mate_right[v];
      if (w < 0) {
        // Augment along the stack.
        for (std::size_t k = stack.size(); k-- > 0;) {
          const int a = stack[k];
          const int b = adj[a][cursor[a]];
          mate_left[a] = b;
          mate_right[b] = a;
        }
        return true;
      }
      if (dist[w] == dist[u] + 1) {
        stack.push_back(w);
      } else {
        ++cursor[u];
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(cursor.begin(), cursor.end(), 0);
    for (int u = 0; u < left; ++u) {
      if (mate_left[u] < 0) dfs(u);
    }
  }
  return mate_left;
}

// -------------------------------------------------------------- Edmonds

namespace {

class Blossom {
 public:
  explicit Blossom(const std::vector<std::vector<int>>& adj)
      : adj_(adj),
        n_(static_cast<int>(adj.size())),
        mate_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        used_(n_, 0),
        in_blossom_(n_, 0),
        stamp_(n_, 0) {
    for (int v = 0; v < n_; ++v) base_[v] = v;
  }

  std::vector<int> run() {
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] >= 0) continue;
      for (int w : adj_[v]) {
        if (mate_[w] < 0 && w != v) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (int root = 0; root < n_; ++root) {
      if (mate_[root] >= 0) continue;
      int v = find_path(root);
      while (v >= 0) {
        const int pv = parent_[v];
        const int ppv = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = ppv;
      }
    }
    return mate_;
  }

 private:
  void touch(int v) {
    if (!touched_flag_[v]) {
      touched_flag_[v] = 1;
      touched_.push_back(v);
    }
  }

  int lca(int a, int b) {
    ++clock_;
    while (true) {
      a = base_[a];
      stamp_[a] = clock_;
      if (mate_[a] < 0) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (stamp_[b] == clock_) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_path(int root) {
    for (int v : touched_) {
      used_[v] = 0;
      parent_[v] = -1;
      base_[v] = v;
      touched_flag_[v] = 0;
    }
    touched_.clear();
    if (touched_flag_.empty()) touched_flag_.assign(n_, 0);

    touch(root);
    used_[root] = 1;
    std::vector<int> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int v = queue[qi];
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
          const int current = lca(v, to);
          for (int x : touched_) in_blossom_[x] = 0;
          mark_path(v, current, to);
          mark_path(to, current, v);
          for (int x : touched_) {
            if (in_blossom_[base_[x]]) {
              base_[x] = current;
              if (!used_[x]) {
                used_[x] = 1;
                queue.push_back(x);
              }
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          touch(to);
          if (mate_[to] < 0) return to;
          const int next = mate_[to];
          touch(next);
          used_[next] = 1;
          queue.push_back(next);
        }
      }
    }
    return -1;
  }

  const std::vector<std::vector<int>>& adj_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
  std::vector<unsigned> stamp_;
  unsigned clock_ = 0;
  std::vector<int> touched_;
  std::vector<char> touched_flag_;
};

}  // namespace

std::vector<int> max_cardinality_matching(const std::vector<std::vector<int>>& adj) {
  return Blossom(adj).run();
}

std::vector<int> max_cardinality_matching(const Graph& g) {
  std::vector<std::vector<int>> adj(g.order());
  for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbours(v);
  return max_cardinality_matching(adj);
}

std::vector<Edge> matching_edges(const std::vector<int>& mate) {
  std::vector<Edge> out;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v) {
    if (mate[v] > v) out.push_back({v, mate[v]});
  }
  return out;
}

}  // namespace robustham
