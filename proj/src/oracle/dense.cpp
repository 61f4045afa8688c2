#include "dense.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

namespace unigraph::oracle::detail {

Dense to_dense(const Graph& g, int limit, const char* what) {
  if (g.order() > limit) {
    throw Error(ErrorCode::kTooLarge, std::string(what) + " is limited to n <= " +
                                          std::to_string(limit) + ", got " +
                                          std::to_string(g.order()));
  }
  Dense d;
  d.n = g.order();
  for (const auto& [u, v] : g.edges()) d.add_edge(u, v);
  return d;
}

Graph to_graph(const Dense& d) {
  std::vector<Edge> edges;
  for (int u = 0; u < d.n; ++u) {
    for (int v = u + 1; v < d.n; ++v) {
      if (d.adj(u, v)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(d.n, edges);
}

int refine(const Dense& g, Coloring& colors) {
  const int n = g.n;
  auto rerank = [&](const std::vector<std::vector<int>>& keys) {
    std::map<std::vector<int>, int> rank;
    for (const auto& k : keys) rank.emplace(k, 0);
    int next = 0;
    for (auto& [key, r] : rank) r = next++;
    for (int v = 0; v < n; ++v) colors[v] = rank[keys[v]];
    return next;
  };
  std::vector<std::vector<int>> keys(n);
  for (int v = 0; v < n; ++v) keys[v] = {colors[v]};
  int k = rerank(keys);
  while (true) {
    for (int v = 0; v < n; ++v) {
      keys[v].assign(static_cast<std::size_t>(k) + 1, 0);
      keys[v][0] = colors[v];
      for (int w = 0; w < n; ++w) {
        if (g.adj(v, w)) ++keys[v][1 + colors[w]];
      }
    }
    const int next = rerank(keys);
    if (next == k) return k;
    k = next;
  }
}

namespace {

class AutSearch {
 public:
  AutSearch(const Dense& g, const Coloring& colors) : g_(g), colors_(colors) {
    // Small cells first so forced choices happen early.
    std::vector<int> size(g.n, 0);
    for (int v = 0; v < g.n; ++v) ++size[colors_[v]];
    for (int v = 0; v < g.n; ++v) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      if (size[colors_[a]] != size[colors_[b]]) return size[colors_[a]] < size[colors_[b]];
      return colors_[a] < colors_[b];
    });
    image_.assign(g.n, -1);
  }

  // Returns false if the visitor asked to stop.
  bool run(const std::function<bool(const std::vector<int>&)>& visit) {
    visit_ = &visit;
    return step(0, 0);
  }

 private:
  bool consistent(int depth, int v, int w) const {
    for (int i = 0; i < depth; ++i) {
      const int u = order_[i];
      if (g_.adj(u, v) != g_.adj(image_[u], w)) return false;
    }
    return true;
  }

  bool step(int depth, Mask used) {
    if (depth == g_.n) return (*visit_)(image_);
    const int v = order_[depth];
    // Try the identity image first.
    if (!(used >> v & 1u) && consistent(depth, v, v)) {
      image_[v] = v;
      if (!step(depth + 1, used | Mask{1} << v)) return false;
    }
    for (int w = 0; w < g_.n; ++w) {
      if (w == v || (used >> w & 1u) || colors_[w] != colors_[v]) continue;
      if (!consistent(depth, v, w)) continue;
      image_[v] = w;
      if (!step(depth + 1, used | Mask{1} << w)) return false;
    }
    image_[v] = -1;
    return true;
  }

  const Dense& g_;
  const Coloring& colors_;
  std::vector<int> order_;
  std::vector<int> image_;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
};

}  // namespace

void for_each_automorphism(const Dense& g, const Coloring& colors,
                           const std::function<bool(const std::vector<int>&)>& visit) {
  Coloring refined = colors;
  refine(g, refined);
  AutSearch(g, refined).run(visit);
}

bool has_nontrivial_automorphism(const Dense& g, const Coloring& colors) {
  Coloring refined = colors;
  if (refine(g, refined) == g.n) return false;  // discrete equitable colouring
  bool found = false;
  AutSearch(g, refined).run([&](const std::vector<int>& image) {
    for (int v = 0; v < g.n; ++v) {
      if (image[v] != v) {
        found = true;
        return false;
      }
    }
    return true;
  });
  return found;
}

}  // namespace unigraph::oracle::detail
