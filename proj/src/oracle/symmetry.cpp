#include <algorithm>
#include <string>

#include "dense.hpp"
#include "unigraph/oracle.hpp"

namespace unigraph::oracle {

using detail::Coloring;
using detail::Dense;

bool is_automorphism(const Graph& g, const Permutation& p) {
  const auto n = static_cast<std::size_t>(g.order());
  if (p.mapping.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Vertex v : p.mapping) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (const auto& [u, v] : g.edges()) {
    if (!g.has_edge(p.mapping[u], p.mapping[v])) return false;
  }
  return true;  // bijective and edge count preserved, so non-edges map to non-edges
}

std::vector<Permutation> automorphisms(const Graph& g) {
  const Dense d = detail::to_dense(g, kMaxAutomorphismListOrder, "automorphisms");
  std::vector<Permutation> out;
  detail::for_each_automorphism(d, Coloring(d.n, 0), [&](const std::vector<int>& image) {
    out.push_back({std::vector<Vertex>(image.begin(), image.end())});
    return true;
  });
  std::sort(out.begin(), out.end(),
            [](const Permutation& a, const Permutation& b) { return a.mapping < b.mapping; });
  return out;
}

Count count_automorphisms(const Graph& g) {
  const Dense d = detail::to_dense(g, kMaxAutomorphismCountOrder, "count_automorphisms");
  Count total = 0;
  detail::for_each_automorphism(d, Coloring(d.n, 0), [&](const std::vector<int>&) {
    ++total;
    return true;
  });
  return total;
}

Count brute_fix(const Graph& g) {
  const Dense d = detail::to_dense(g, kMaxSymmetryOrder, "brute_fix");
  const int n = d.n;
  // Subsets in order of size; members get private colours.
  for (int size = 0; size <= n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      Coloring colors(n, 0);
      int next = 1;
      for (int v = 0; v < n; ++v) {
        if (pick[v]) colors[v] = next++;
      }
      if (!detail::has_nontrivial_automorphism(d, colors)) return size;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return n;
}

namespace {

// Restricted growth strings with at most `blocks` blocks.
bool any_distinguishing(const Dense& d, Coloring& colors, int v, int used, int blocks) {
  if (v == d.n) return !detail::has_nontrivial_automorphism(d, colors);
  const int limit = std::min(used + 1, blocks);
  for (int c = 0; c < limit; ++c) {
    colors[v] = c;
    if (any_distinguishing(d, colors, v + 1, std::max(used, c + 1), blocks)) return true;
  }
  return false;
}

}  // namespace

Count brute_dist(const Graph& g) {
  const Dense d = detail::to_dense(g, kMaxSymmetryOrder, "brute_dist");
  if (d.n == 0) return 0;
  Coloring colors(d.n, 0);
  for (int blocks = 1; blocks <= d.n; ++blocks) {
    if (any_distinguishing(d, colors, 0, 0, blocks)) return blocks;
  }
  return d.n;
}

}  // namespace unigraph::oracle
