#include <algorithm>
#include <map>
#include <string>

#include "dense.hpp"
#include "unigraph/oracle.hpp"

namespace unigraph::oracle {

namespace {

using detail::Dense;
using detail::Mask;

// Vertex v picks its remaining neighbours among later vertices, so each
// labelled graph arises from exactly one sequence of choices.
class Enumerator {
 public:
  Enumerator(const DegreeSequence& s, bool merge_twins,
             const std::function<bool(const Graph&)>& visit)
      : merge_twins_(merge_twins), visit_(visit) {
    if (s.size() > kMaxRealizationOrder) {
      throw Error(ErrorCode::kTooLarge, "realization enumeration is limited to n <= " +
                                            std::to_string(kMaxRealizationOrder));
    }
    for (Count d : s.expand()) target_.push_back(static_cast<int>(d));
    g_.n = static_cast<int>(target_.size());
    rem_ = target_;
  }

  void run() {
    for (int d : target_) {
      if (d >= g_.n) return;
    }
    vertex(0);
  }

 private:
  // Returns false once the visitor has asked to stop.
  bool vertex(int v) {
    while (v < g_.n && rem_[v] == 0) ++v;
    if (v == g_.n) return visit_(detail::to_graph(g_));
    std::vector<int> cand;
    for (int w = v + 1; w < g_.n; ++w) {
      if (rem_[w] > 0) cand.push_back(w);
    }
    if (static_cast<int>(cand.size()) < rem_[v]) return true;
    if (!merge_twins_) return pick_subset(v, cand, 0, rem_[v]);

    // Later vertices with equal target and equal adjacency so far are
    // interchangeable: only the number chosen from each group matters.
    std::vector<std::vector<int>> ordered;
    std::map<std::pair<int, Mask>, std::size_t> slot;
    for (int w : cand) {
      const auto key = std::make_pair(target_[w], g_.row[w]);
      auto [it, fresh] = slot.emplace(key, ordered.size());
      if (fresh) ordered.emplace_back();
      ordered[it->second].push_back(w);
    }
    return pick_counts(v, ordered, 0, rem_[v]);
  }

  bool pick_subset(int v, const std::vector<int>& cand, std::size_t from, int need) {
    if (need == 0) {
      const int saved = rem_[v];
      rem_[v] = 0;
      const bool go = vertex(v + 1);
      rem_[v] = saved;
      return go;
    }
    for (std::size_t i = from; i + need <= cand.size(); ++i) {
      const int w = cand[i];
      link(v, w);
      const bool go = pick_subset(v, cand, i + 1, need - 1);
      unlink(v, w);
      if (!go) return false;
    }
    return true;
  }

  bool pick_counts(int v, const std::vector<std::vector<int>>& groups, std::size_t gi, int need) {
    if (need == 0) {
      const int saved = rem_[v];
      rem_[v] = 0;
      const bool go = vertex(v + 1);
      rem_[v] = saved;
      return go;
    }
    if (gi == groups.size()) return true;
    int available = 0;
    for (std::size_t j = gi; j < groups.size(); ++j) available += static_cast<int>(groups[j].size());
    if (available < need) return true;
    const auto& grp = groups[gi];
    const int most = std::min<int>(need, static_cast<int>(grp.size()));
    for (int c = 0; c <= most; ++c) {
      for (int i = 0; i < c; ++i) link(v, grp[i]);
      const bool go = pick_counts(v, groups, gi + 1, need - c);
      for (int i = 0; i < c; ++i) unlink(v, grp[i]);
      if (!go) return false;
    }
    return true;
  }

  void link(int v, int w) {
    g_.add_edge(v, w);
    --rem_[v];
    --rem_[w];
  }
  void unlink(int v, int w) {
    g_.remove_edge(v, w);
    ++rem_[v];
    ++rem_[w];
  }

  bool merge_twins_;
  const std::function<bool(const Graph&)>& visit_;
  std::vector<int> target_;
  std::vector<int> rem_;
  Dense g_;
};

}  // namespace

void for_each_realization(const DegreeSequence& s,
                          const std::function<bool(const Graph&)>& visit) {
  Enumerator(s, false, visit).run();
}

std::vector<Graph> enumerate_realizations(const DegreeSequence& s) {
  std::vector<Graph> out;
  for_each_realization(s, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

void for_each_realization_up_to_swaps(const DegreeSequence& s,
                                      const std::function<bool(const Graph&)>& visit) {
  Enumerator(s, true, visit).run();
}

bool has_realization(const DegreeSequence& s) {
  bool found = false;
  for_each_realization_up_to_swaps(s, [&](const Graph&) {
    found = true;
    return false;
  });
  return found;
}

Count count_isomorphism_classes(const DegreeSequence& s) {
  if (s.size() > kMaxClassCountOrder) {
    throw Error(ErrorCode::kTooLarge, "class counting is limited to n <= " +
                                          std::to_string(kMaxClassCountOrder));
  }
  std::vector<CanonicalForm> seen;
  for_each_realization_up_to_swaps(s, [&](const Graph& g) {
    seen.push_back(canonical_form(g));
    return true;
  });
  if (seen.empty()) throw Error(ErrorCode::kNotGraphical, to_string(s));
  std::sort(seen.begin(), seen.end());
  return static_cast<Count>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

}  // namespace unigraph::oracle
