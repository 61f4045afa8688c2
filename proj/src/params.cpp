#include "unigraph/params.hpp"

#include <algorithm>

namespace unigraph {

namespace {

// Star-forest pieces: q clique vertices, each owning p interchangeable
// pendants. The q stars are interchangeable too.
Count fix_stars(Count p, Count q) { return p == 1 ? q - 1 : q * (p - 1); }

// Binomial coefficient saturated at `cap`.
Count choose_capped(Count n, Count k, Count cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Wide value = 1;
  for (Count i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;
    if (value >= cap) return cap;
  }
  return static_cast<Count>(value);
}

// Each star needs p distinct pendant colours (a set) and a centre colour;
// the q stars need pairwise different colourings: d * C(d, p) >= q.
Count dist_stars(Count p, Count q) {
  Count d = std::max<Count>(1, p);
  while (static_cast<Wide>(d) * choose_capped(d, p, q) < q) ++d;
  return d;
}

// m swappable pairs, each needing two distinct colours, all pairs distinct.
Count dist_pairs(Count m) {
  Count d = 2;
  while (choose_capped(d, 2, m) < m) ++d;
  return d;
}

bool is_c5(const TypedComponent& t) { return t.base == Base::kC5; }

}  // namespace

std::pair<Count, Count> component_omega_alpha(const TypedComponent& t) {
  const auto& a = t.params;
  std::pair<Count, Count> oa;
  switch (t.base) {
    case Base::kC5: oa = {2, 2}; break;
    case Base::kMK2: oa = {2, a[0]}; break;
    case Base::kU2: oa = {2, a[0] + a[1]}; break;
    case Base::kU3: oa = {3, a[0] + 2}; break;
    case Base::kK1:
    case Base::kS1: return {1, 1};
    case Base::kCompleteBlock: return {a[0], 1};
    case Base::kEmptyBlock: return {1, a[0]};
    default: {
      const PairedDegreeSequence ps = type_to_paired(t);
      return {ps.p(), ps.q()};
    }
  }
  if (t.variant == Variant::kComplement) std::swap(oa.first, oa.second);
  return oa;
}

CoreParams core_params(const Decomposition& d, const UnigraphReport& r) {
  if (!r.is_unigraph) throw Error(ErrorCode::kNotUnigraph, "core parameters need a unigraph");
  CoreParams out;
  Count n = d.tail.size();
  for (const auto& c : d.components) {
    out.omega += c.p();
    out.alpha += c.q();
    n += c.size();
  }
  bool tail_c5 = false;
  if (!d.tail.empty()) {
    const TypedComponent& tail_type = r.component_types.back();
    const auto [w, a] = component_omega_alpha(tail_type);
    out.omega += w;
    out.alpha += a;
    tail_c5 = is_c5(tail_type);
  }
  out.beta = n - out.alpha;
  out.chi = out.omega + (tail_c5 ? 1 : 0);
  return out;
}

Count component_fix(const TypedComponent& t) {
  const auto& a = t.params;
  switch (t.base) {
    case Base::kC5: return 2;
    case Base::kMK2: return a[0];
    case Base::kU2: return a[0] + a[1] - 1;
    case Base::kU3: return a[0] + 1;
    case Base::kK1:
    case Base::kS1: return 0;
    case Base::kSPQ: return fix_stars(a[0], a[1]);
    case Base::kS2: {
      Count total = 0;
      for (std::size_t i = 0; i < a.size(); i += 2) total += fix_stars(a[i], a[i + 1]);
      return total;
    }
    case Base::kS3: return fix_stars(a[0], a[1]) + fix_stars(a[0] + 1, a[2]);
    case Base::kS4: return fix_stars(a[0], 2) + fix_stars(a[0] + 1, a[1]);
    case Base::kCompleteBlock:
    case Base::kEmptyBlock: return a[0] - 1;
  }
  return 0;
}

Count component_dist(const TypedComponent& t) {
  const auto& a = t.params;
  switch (t.base) {
    case Base::kC5: return 3;
    case Base::kMK2: return dist_pairs(a[0]);
    case Base::kU2: return std::max(a[1], dist_pairs(a[0]));  // K_{1,l} plus m K2
    case Base::kU3: return dist_pairs(a[0]);  // m triangles and a C4 at one hub
    case Base::kK1:
    case Base::kS1: return 1;
    case Base::kSPQ: return dist_stars(a[0], a[1]);
    case Base::kS2: {
      Count best = 1;
      for (std::size_t i = 0; i < a.size(); i += 2) best = std::max(best, dist_stars(a[i], a[i + 1]));
      return best;
    }
    case Base::kS3: return std::max(dist_stars(a[0], a[1]), dist_stars(a[0] + 1, a[2]));
    case Base::kS4: return std::max(dist_stars(a[0], 2), dist_stars(a[0] + 1, a[1]));
    case Base::kCompleteBlock:
    case Base::kEmptyBlock: return a[0];
  }
  return 1;
}

Count fixing_number(const CompactDecomposition& c, const std::vector<TypedComponent>& types) {
  const std::size_t expected = c.components.size() + (c.tail ? 1 : 0);
  if (types.size() != expected) {
    throw Error(ErrorCode::kNotUnigraph, "every compact component needs a type");
  }
  Count total = 0;
  for (const auto& t : types) total += component_fix(t);
  return total;
}

Count distinguishing_number(const CompactDecomposition& c,
                            const std::vector<TypedComponent>& types) {
  const std::size_t expected = c.components.size() + (c.tail ? 1 : 0);
  if (types.size() != expected) {
    throw Error(ErrorCode::kNotUnigraph, "every compact component needs a type");
  }
  Count best = 0;
  for (const auto& t : types) best = std::max(best, component_dist(t));
  return best;
}

ParamSet compute_params(const DegreeSequence& s) {
  const UnigraphResult result = is_unigraph(s);
  if (!result.report.is_unigraph) {
    throw Error(ErrorCode::kNotUnigraph, to_string(s));
  }
  const CoreParams core = core_params(result.decomposition, result.report);
  const CompactDecomposition c = compact(result.decomposition);
  const auto types = compact_types(c);
  if (!types) throw Error(ErrorCode::kNotUnigraph, to_string(s));
  ParamSet out;
  out.omega = core.omega;
  out.alpha = core.alpha;
  out.beta = core.beta;
  out.chi = core.chi;
  out.fix = fixing_number(c, *types);
  out.dist = distinguishing_number(c, *types);
  out.perfect = core.chi == core.omega;
  return out;
}

}  // namespace unigraph
