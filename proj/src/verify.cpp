#include "unigraph/verify.hpp"

#include <vector>

#include "unigraph/oracle.hpp"
#include "unigraph/params.hpp"

namespace unigraph::verify {

namespace {

// Non-increasing entries below n with even sum.
void candidates(Count n, std::vector<Count>& cur, Count cap, Count sum,
                const std::function<bool(const DegreeSequence&)>& visit, bool& go) {
  if (!go) return;
  if (static_cast<Count>(cur.size()) == n) {
    if (sum % 2 != 0) return;
    const DegreeSequence s = normalize(cur);
    if (oracle::has_realization(s)) go = visit(s);
    return;
  }
  for (Count d = cap; d >= 0 && go; --d) {
    cur.push_back(d);
    candidates(n, cur, d, sum + d, visit, go);
    cur.pop_back();
  }
}

Outcome fail(Count checked, const DegreeSequence& s, Json expected, Json actual) {
  Outcome o;
  o.ok = false;
  o.checked = checked;
  o.diff["sequence"] = to_string(s);
  o.diff["expected"] = std::move(expected);
  o.diff["actual"] = std::move(actual);
  return o;
}

Json core_json(Count omega, Count alpha, Count beta, Count chi) {
  Json j;
  j["omega"] = omega;
  j["alpha"] = alpha;
  j["beta"] = beta;
  j["chi"] = chi;
  return j;
}

}  // namespace

void for_each_graphical(Count max_n, const std::function<bool(const DegreeSequence&)>& visit) {
  bool go = true;
  std::vector<Count> cur;
  for (Count n = 1; n <= max_n && go; ++n) candidates(n, cur, n - 1, 0, visit, go);
}

Outcome unigraph(Count max_n) {
  Outcome out;
  for_each_graphical(max_n, [&](const DegreeSequence& s) {
    const bool fast = is_unigraph(s).report.is_unigraph;
    const bool truth = oracle::count_isomorphism_classes(s) == 1;
    if (fast != truth) {
      out = fail(out.checked, s, Json{{"isUnigraph", truth}}, Json{{"isUnigraph", fast}});
      return false;
    }
    ++out.checked;
    return true;
  });
  return out;
}

Outcome params(Count max_n) {
  Outcome out;
  for_each_graphical(max_n, [&](const DegreeSequence& s) {
    const UnigraphResult r = is_unigraph(s);
    if (!r.report.is_unigraph) return true;
    const CoreParams fast = core_params(r.decomposition, r.report);
    const oracle::BruteParams truth = oracle::brute_params(realize(s));
    const bool c5_tail = !r.decomposition.tail.empty() &&
                         r.report.component_types.back().base == Base::kC5;
    const bool chi_rule = (fast.chi == fast.omega + 1) == c5_tail;
    if (fast.omega != truth.omega || fast.alpha != truth.alpha || fast.beta != truth.beta ||
        fast.chi != truth.chi || !chi_rule) {
      out = fail(out.checked, s, core_json(truth.omega, truth.alpha, truth.beta, truth.chi),
                 core_json(fast.omega, fast.alpha, fast.beta, fast.chi));
      return false;
    }
    ++out.checked;
    return true;
  });
  return out;
}

Outcome fixdist(Count max_n) {
  Outcome out;
  for_each_graphical(max_n, [&](const DegreeSequence& s) {
    if (!is_unigraph(s).report.is_unigraph) return true;
    const ParamSet fast = compute_params(s);
    const Graph g = realize(s);
    const Count fix = oracle::brute_fix(g);
    const Count dist = oracle::brute_dist(g);
    if (fast.fix != fix || fast.dist != dist) {
      out = fail(out.checked, s, Json{{"fix", fix}, {"dist", dist}},
                 Json{{"fix", fast.fix}, {"dist", fast.dist}});
      return false;
    }
    ++out.checked;
    return true;
  });
  return out;
}

Json outcome_to_json(const Outcome& o) {
  Json j;
  j["ok"] = o.ok;
  j["checked"] = o.checked;
  j["diff"] = o.diff;
  return j;
}

}  // namespace unigraph::verify
