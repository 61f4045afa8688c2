#include "unigraph/split.hpp"

#include <algorithm>

namespace unigraph {

std::string_view to_string(SplitKind kind) {
  switch (kind) {
    case SplitKind::kBalanced: return "balanced";
    case SplitKind::kKMax: return "k-max";
    case SplitKind::kSMax: return "s-max";
    case SplitKind::kNotSplit: return "not-split";
  }
  return "?";
}

SplitClass determine_split(const DegreeSequence& s) {
  if (!is_graphical(s)) throw Error(ErrorCode::kNotGraphical, to_string(s));
  if (s.empty()) return {SplitKind::kBalanced, PairedDegreeSequence{}};

  // d_i - i strictly decreases, so the admissible indices form a prefix.
  Count m = 0;
  Count before = 0;
  for (const Run& r : s.runs()) {
    if (r.degree + 1 < before + 1) break;
    m = std::min(before + r.count, r.degree + 1);
    before += r.count;
  }

  std::vector<Run> top;
  std::vector<Run> bottom;
  Count taken = 0;
  Wide top_sum = 0;
  Wide bottom_min = 0;
  Count d_m = 0;
  for (const Run& r : s.runs()) {
    const Count in_top = std::clamp<Count>(m - taken, 0, r.count);
    if (in_top > 0) {
      top.push_back({r.degree, in_top});
      top_sum += static_cast<Wide>(r.degree) * in_top;
      d_m = r.degree;
    }
    if (r.count > in_top) {
      bottom.push_back({r.degree, r.count - in_top});
      bottom_min += static_cast<Wide>(std::min(r.degree, m)) * (r.count - in_top);
    }
    taken += r.count;
  }
  if (top_sum != static_cast<Wide>(m) * (m - 1) + bottom_min) return {};

  PairedDegreeSequence paired{DegreeSequence::from_runs(std::move(top)),
                              DegreeSequence::from_runs(std::move(bottom))};
  // A clique vertex with no stable neighbour can switch sides.
  const SplitKind kind = d_m == m - 1 ? SplitKind::kKMax : SplitKind::kBalanced;
  return {kind, std::move(paired)};
}

PairedDegreeSequence shift_to_s_max(const PairedDegreeSequence& k_max) {
  const Count p = k_max.p();
  if (p == 0 || k_max.k_part.min_degree() != p - 1) {
    throw Error(ErrorCode::kInvalidPartition, "no swing vertex on the clique side");
  }
  std::vector<Run> k = k_max.k_part.runs();
  std::vector<Run> s = k_max.s_part.runs();
  k.back().count -= 1;
  s.push_back({p - 1, 1});
  return {DegreeSequence::from_runs(std::move(k)), DegreeSequence::from_runs(std::move(s))};
}

}  // namespace unigraph
