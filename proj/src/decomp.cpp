#include "unigraph/decomp.hpp"

#include <algorithm>

namespace unigraph {

namespace {

// Random access into a run-length sequence by 1-based position.
class RunIndex {
 public:
  explicit RunIndex(const DegreeSequence& s) {
    const auto& runs = s.runs();
    degree_.reserve(runs.size());
    end_.reserve(runs.size());
    prefix_.reserve(runs.size() + 1);
    prefix_.push_back(0);
    Count pos = 0;
    for (const Run& r : runs) {
      pos += r.count;
      degree_.push_back(r.degree);
      end_.push_back(pos);
      prefix_.push_back(prefix_.back() + static_cast<Wide>(r.degree) * r.count);
    }
    n_ = pos;
  }

  Count n() const { return n_; }

  std::size_t run_of(Count i) const {
    return static_cast<std::size_t>(std::lower_bound(end_.begin(), end_.end(), i) - end_.begin());
  }
  Count run_end(std::size_t r) const { return end_[r]; }
  Count run_start(std::size_t r) const { return r == 0 ? 0 : end_[r - 1]; }
  Count degree_of_run(std::size_t r) const { return degree_[r]; }
  Count degree_at(Count i) const { return degree_[run_of(i)]; }

  // Sum of d_1..d_i.
  Wide prefix_sum(Count i) const {
    if (i <= 0) return 0;
    const std::size_t r = run_of(i);
    return prefix_[r] + static_cast<Wide>(i - run_start(r)) * degree_[r];
  }
  Wide sum_range(Count a, Count b) const {
    return a > b ? 0 : prefix_sum(b) - prefix_sum(a - 1);
  }

  // Number of positions with degree >= t; they form a prefix.
  Count count_ge(Count t) const {
    const auto it = std::partition_point(degree_.begin(), degree_.end(),
                                         [t](Count d) { return d >= t; });
    return it == degree_.begin() ? 0 : end_[static_cast<std::size_t>(it - degree_.begin()) - 1];
  }

  // Smallest degree value that is still >= t, if any.
  std::optional<Count> smallest_degree_at_least(Count t) const {
    const auto it = std::partition_point(degree_.begin(), degree_.end(),
                                         [t](Count d) { return d >= t; });
    if (it == degree_.begin()) return std::nullopt;
    return *(it - 1);
  }

  // Sum of min(d_i, t) over positions a..b.
  Wide sum_min(Count a, Count b, Count t) const {
    if (a > b) return 0;
    const Count capped_end = std::min(b, count_ge(t));
    Wide total = 0;
    Count rest = a;
    if (capped_end >= a) {
      total += static_cast<Wide>(t) * (capped_end - a + 1);
      rest = capped_end + 1;
    }
    return total + sum_range(rest, b);
  }

  // Runs covering positions a..b with every degree shifted by delta.
  DegreeSequence slice(Count a, Count b, Count delta) const {
    std::vector<Run> runs;
    if (a <= b) {
      for (std::size_t r = run_of(a); r < degree_.size() && run_start(r) < b; ++r) {
        const Count lo = std::max(a, run_start(r) + 1);
        const Count hi = std::min(b, end_[r]);
        runs.push_back({degree_[r] + delta, hi - lo + 1});
      }
    }
    return DegreeSequence::from_runs(std::move(runs));
  }

 private:
  std::vector<Count> degree_;
  std::vector<Count> end_;
  std::vector<Wide> prefix_;
  Count n_ = 0;
};

// Searches the window of positions P+1..N-Q, whose degrees (less P) form a
// graphical sequence, for its smallest split point.
//
// For p >= 1 a split exists iff the Erdos-Gallai slack
//   g(p) = p(p-1) + sum_{j>p} min(d_j, p) - sum_{j<=p} d_j
// vanishes and d_{p+1} >= p; q is then the number of later degrees below p.
// Over a stretch where d_{p+1} and #{d_j >= p+1} are constant, g has
// non-decreasing increments, so its smallest minimiser is found in closed form.
std::optional<SplitPoint> find_in_window(const RunIndex& ix, Count P, Count Q) {
  const Count N = ix.n();
  const Count width = N - P - Q;
  if (width < 2) return std::nullopt;
  const Count last = N - Q;

  if (ix.degree_at(last) - P == 0) return SplitPoint{0, 1};

  auto slack_at = [&](Count p) { return ix.degree_at(P + p + 1) - P - p; };
  if (slack_at(1) < 0) return std::nullopt;
  Count lo = 1;
  Count hi = width - 1;
  while (lo < hi) {
    const Count mid = lo + (hi - lo + 1) / 2;
    if (slack_at(mid) >= 0) lo = mid; else hi = mid - 1;
  }
  const Count pmax = lo;

  auto g = [&](Count p) -> Wide {
    return static_cast<Wide>(p) * (p - 1) + ix.sum_min(P + p + 1, last, P + p) -
           static_cast<Wide>(P) * (width - p) - ix.sum_range(P + 1, P + p) +
           static_cast<Wide>(P) * p;
  };

  for (Count a = 1; a <= pmax;) {
    const std::size_t r = ix.run_of(P + a + 1);
    const Count e = ix.degree_of_run(r) - P;
    Count b = std::min(pmax, ix.run_end(r) - P - 1);
    if (const auto next = ix.smallest_degree_at_least(P + a + 1)) {
      b = std::min(b, *next - P - 1);
    }
    const Count c = std::clamp(ix.count_ge(P + a + 1), P, last) - P;
    Count best = (a <= c - 1 && e <= c - 1) ? a : std::max(a, e);
    best = std::min(best, b);
    if (g(best) == 0) {
      const Count q = last - std::min(ix.count_ge(P + best), last);
      return SplitPoint{best, q};
    }
    a = b + 1;
  }
  return std::nullopt;
}

}  // namespace

bool is_single_k(const PairedDegreeSequence& ps) { return ps.p() == 1 && ps.q() == 0; }
bool is_single_s(const PairedDegreeSequence& ps) { return ps.p() == 0 && ps.q() == 1; }

std::optional<SplitPoint> find_split_point(const DegreeSequence& s) {
  if (s.size() < 2) return std::nullopt;
  return find_in_window(RunIndex(s), 0, 0);
}

Decomposition decompose(const DegreeSequence& s) {
  if (!is_graphical(s)) throw Error(ErrorCode::kNotGraphical, to_string(s));
  const RunIndex ix(s);
  const Count N = ix.n();
  Count P = 0;
  Count Q = 0;
  Decomposition out;
  while (const auto sp = find_in_window(ix, P, Q)) {
    const Count middle = N - P - Q - sp->p - sp->q;
    out.components.push_back({ix.slice(P + 1, P + sp->p, -P - middle),
                              ix.slice(N - Q - sp->q + 1, N - Q, -P)});
    P += sp->p;
    Q += sp->q;
  }
  out.tail = ix.slice(P + 1, N - Q, -P);
  return out;
}

DegreeSequence compose_all(const std::vector<PairedDegreeSequence>& components,
                           const DegreeSequence& tail) {
  Count after = tail.size();
  for (const auto& c : components) after += c.size();
  std::vector<Run> runs;
  Count clique_above = 0;  // clique vertices of all outer components
  for (const auto& c : components) {
    after -= c.size();
    for (const Run& r : c.k_part.runs()) runs.push_back({r.degree + after + clique_above, r.count});
    for (const Run& r : c.s_part.runs()) runs.push_back({r.degree + clique_above, r.count});
    clique_above += c.p();
  }
  for (const Run& r : tail.runs()) runs.push_back({r.degree + clique_above, r.count});
  return DegreeSequence::from_runs(std::move(runs));
}

CompactDecomposition compact(const Decomposition& d) {
  CompactDecomposition out;
  enum class Kind { kOther, kK, kS };
  auto kind_of = [](const PairedDegreeSequence& ps) {
    if (is_single_k(ps)) return Kind::kK;
    if (is_single_s(ps)) return Kind::kS;
    return Kind::kOther;
  };
  auto block = [](Kind kind, Count m) -> PairedDegreeSequence {
    if (kind == Kind::kK) return {DegreeSequence::from_runs({{m - 1, m}}), {}};
    return {{}, DegreeSequence::from_runs({{0, m}})};
  };

  Kind run_kind = Kind::kOther;
  Count run_len = 0;
  auto flush = [&] {
    if (run_len > 0) out.components.push_back(block(run_kind, run_len));
    run_kind = Kind::kOther;
    run_len = 0;
  };
  for (const auto& c : d.components) {
    const Kind k = kind_of(c);
    if (k == Kind::kOther) {
      flush();
      out.components.push_back(c);
    } else if (k == run_kind) {
      ++run_len;
    } else {
      flush();
      run_kind = k;
      run_len = 1;
    }
  }
  if (d.tail.size() == 1) {
    if (run_len > 0) {
      ++run_len;  // G_0 takes the type of a single-vertex G_1
    } else {
      flush();
      run_kind = Kind::kS;  // same reading as the unigraph report
      run_len = 1;
    }
    flush();
  } else {
    flush();
    if (!d.tail.empty()) out.tail = d.tail;
  }
  return out;
}

}  // namespace unigraph
