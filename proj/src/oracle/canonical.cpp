#include "dense.hpp"
#include "unigraph/oracle.hpp"

namespace unigraph::oracle {

namespace {

using detail::Coloring;
using detail::Dense;

std::uint64_t code_of(const Dense& g, const std::vector<int>& order) {
  std::uint64_t bits = 0;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) bits = (bits << 1) | (g.adj(order[i], order[j]) ? 1u : 0u);
  }
  return bits;
}

// Individualisation-refinement; keeps the largest leaf code.
void search(const Dense& g, Coloring colors, std::uint64_t& best, bool& have) {
  const int k = detail::refine(g, colors);
  if (k == g.n) {
    std::vector<int> order(g.n);
    for (int v = 0; v < g.n; ++v) order[colors[v]] = v;
    const std::uint64_t code = code_of(g, order);
    if (!have || code > best) best = code;
    have = true;
    return;
  }
  std::vector<int> size(k, 0);
  for (int c : colors) ++size[c];
  int target = 0;
  while (size[target] == 1) ++target;

  std::vector<int> tried;
  for (int v = 0; v < g.n; ++v) {
    if (colors[v] != target) continue;
    bool twin = false;
    for (int u : tried) {
      const auto bu = detail::Mask{1} << u;
      const auto bv = detail::Mask{1} << v;
      if ((g.row[u] & ~bv) == (g.row[v] & ~bu)) twin = true;
    }
    if (twin) continue;
    tried.push_back(v);
    Coloring next(g.n);
    for (int w = 0; w < g.n; ++w) next[w] = 2 * colors[w] + (w == v ? 0 : 1);
    search(g, std::move(next), best, have);
  }
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const Dense d = detail::to_dense(g, kMaxCanonicalOrder, "canonical_form");
  std::uint64_t best = 0;
  bool have = false;
  Coloring colors(d.n, 0);
  if (d.n > 0) search(d, colors, best, have);
  return {d.n, best};
}

bool isomorphic(const Graph& a, const Graph& b) { return canonical_form(a) == canonical_form(b); }

}  // namespace unigraph::oracle
