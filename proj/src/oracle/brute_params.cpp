#include <bit>
#include <string>

#include "dense.hpp"
#include "unigraph/oracle.hpp"

namespace unigraph::oracle {

using detail::Dense;
using detail::Mask;

namespace {

int max_clique(const Dense& g) {
  int best = 0;
  const Mask all = g.n == 32 ? ~Mask{0} : (Mask{1} << g.n) - 1;
  for (Mask set = 0;; ++set) {
    bool clique = true;
    for (Mask rest = set; rest && clique; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((g.row[v] | Mask{1} << v) != ((g.row[v] | Mask{1} << v) | set)) clique = false;
    }
    if (clique) best = std::max(best, std::popcount(set));
    if (set == all) break;
  }
  return best;
}

Dense complement(const Dense& g) {
  Dense c;
  c.n = g.n;
  const Mask all = (Mask{1} << g.n) - 1;
  for (int v = 0; v < g.n; ++v) c.row[v] = ~g.row[v] & all & ~(Mask{1} << v);
  return c;
}

bool colorable(const Dense& g, std::vector<int>& color, int v, int k) {
  if (v == g.n) return true;
  int top = 0;
  for (int u = 0; u < v; ++u) top = std::max(top, color[u] + 1);
  for (int c = 0; c < std::min(k, top + 1); ++c) {
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) ok = !(g.adj(u, v) && color[u] == c);
    if (!ok) continue;
    color[v] = c;
    if (colorable(g, color, v + 1, k)) return true;
  }
  return false;
}

}  // namespace

BruteParams brute_params(const Graph& g) {
  const Dense d = detail::to_dense(g, kMaxParamsOrder, "brute_params");
  BruteParams out;
  if (d.n == 0) return out;
  out.omega = max_clique(d);
  out.alpha = max_clique(complement(d));
  out.beta = d.n - out.alpha;
  std::vector<int> color(d.n, 0);
  for (int k = 1; k <= d.n; ++k) {
    if (colorable(d, color, 0, k)) {
      out.chi = k;
      break;
    }
  }
  return out;
}

bool is_split_graph(const Graph& g) {
  const Dense d = detail::to_dense(g, kMaxParamsOrder, "is_split_graph");
  const Mask all = d.n == 0 ? 0 : (Mask{1} << d.n) - 1;
  for (Mask k = 0;; ++k) {
    bool ok = true;
    for (int v = 0; v < d.n && ok; ++v) {
      const bool in_k = (k >> v) & 1u;
      const Mask others = (in_k ? k : (all & ~k)) & ~(Mask{1} << v);
      ok = in_k ? (d.row[v] & others) == others : (d.row[v] & others) == 0;
    }
    if (ok) return true;
    if (k == all) break;
  }
  return false;
}

}  // namespace unigraph::oracle
