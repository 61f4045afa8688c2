#include "unigraph/gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_set>

#include "unigraph/decomp.hpp"

namespace unigraph {

namespace {

using Rng = std::mt19937_64;

Count uniform(Rng& rng, Count lo, Count hi) {
  return std::uniform_int_distribution<Count>(lo, hi)(rng);
}

TypedComponent make(Base b, std::vector<Count> params = {}) {
  return TypedComponent{Variant::kOriginal, b, std::move(params)};
}

// Divisor pairs (a, o/a) with both factors >= lo.
std::vector<std::pair<Count, Count>> factor_pairs(Count o, Count lo) {
  std::vector<std::pair<Count, Count>> out;
  for (Count a = 1; a * a <= o; ++a) {
    if (o % a != 0) continue;
    const Count b = o / a;
    if (a >= lo && b >= lo) {
      out.push_back({a, b});
      if (a != b) out.push_back({b, a});
    }
  }
  return out;
}

// Solutions of (p+1) q1 + (p+2) q2 = o - 1 with q1 >= 2, q2 >= 1, grouped
// by p: for a = p+1 the q2 values form an arithmetic progression.
struct S3Family {
  Count p;
  Count q2_first;
  Count count;
};

std::vector<S3Family> s3_families(Count o) {
  std::vector<S3Family> out;
  const Count M = o - 1;
  for (Count a = 2; 3 * a + 1 <= M; ++a) {
    const Count q2 = (M - 1) % a + 1;  // smallest q2 >= 1 with (a+1) q2 = M mod a
    const Count room = M - (a + 1) * q2 - 2 * a;
    if (room < 0) continue;
    out.push_back({a - 1, q2, room / (a * (a + 1)) + 1});
  }
  return out;
}

bool feasible(Base b, Count o, bool as_head) {
  if (as_head && !is_split_base(b)) return false;
  switch (b) {
    case Base::kC5: return o == 5;
    case Base::kMK2: return o >= 4 && o % 2 == 0;
    case Base::kU2: return o >= 5;
    case Base::kU3: return o >= 6 && o % 2 == 0;
    case Base::kK1:
    case Base::kS1: return o == 1;
    case Base::kSPQ: return !factor_pairs(o, 2).empty();
    case Base::kS2: return o >= 5;
    case Base::kS3: return o >= 8 && !s3_families(o).empty();
    case Base::kS4: return !factor_pairs(o, 3).empty();
    case Base::kCompleteBlock:
    case Base::kEmptyBlock: return false;
  }
  return false;
}

// Random multiset of parts >= 2 summing to o with at least two distinct
// parts; part size minus one is p, multiplicity is q. Not uniform.
std::vector<Count> sample_s2(Count o, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Count> parts;
    Count rest = o;
    while (rest > 0) {
      Count s = uniform(rng, 2, rest);
      if (rest - s == 1) s = rest;  // never strand a single vertex
      parts.push_back(s);
      rest -= s;
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    std::vector<Count> params;
    for (Count s : parts) {
      if (!params.empty() && params[params.size() - 2] == s - 1) {
        ++params.back();
      } else {
        params.push_back(s - 1);
        params.push_back(1);
      }
    }
    if (params.size() >= 4) return params;
  }
  // o >= 5 always admits {o-2, 2}.
  return {o - 3, 1, 1, 1};
}

TypedComponent sample_params(Base b, Count o, Rng& rng) {
  switch (b) {
    case Base::kC5: return make(b);
    case Base::kMK2: return make(b, {o / 2});
    case Base::kU2: {
      const Count m = uniform(rng, 1, (o - 3) / 2);
      return make(b, {m, o - 1 - 2 * m});
    }
    case Base::kU3: return make(b, {(o - 4) / 2});
    case Base::kK1:
    case Base::kS1: return make(b);
    case Base::kSPQ: {
      const auto pairs = factor_pairs(o, 2);  // (q, p+1)
      const auto [q, a] = pairs[static_cast<std::size_t>(uniform(rng, 0, static_cast<Count>(pairs.size()) - 1))];
      return make(b, {a - 1, q});
    }
    case Base::kS2: return make(b, sample_s2(o, rng));
    case Base::kS3: {
      const auto fams = s3_families(o);
      Count total = 0;
      for (const auto& f : fams) total += f.count;
      Count pick = uniform(rng, 0, total - 1);
      for (const auto& f : fams) {
        if (pick >= f.count) {
          pick -= f.count;
          continue;
        }
        const Count a = f.p + 1;
        const Count q2 = f.q2_first + pick * a;
        const Count q1 = (o - 1 - (a + 1) * q2) / a;
        return make(b, {f.p, q1, q2});
      }
      break;
    }
    case Base::kS4: {
      const auto pairs = factor_pairs(o, 3);
      const auto [x, y] = pairs[static_cast<std::size_t>(uniform(rng, 0, static_cast<Count>(pairs.size()) - 1))];
      return make(b, {x - 2, y - 2});
    }
    default:
      break;
  }
  throw Error(ErrorCode::kInfeasible, "no parameters for " + std::string(base_name(b)));
}

constexpr Base kGenerated[] = {Base::kC5, Base::kMK2, Base::kU2, Base::kU3, Base::kK1,
                               Base::kS1, Base::kSPQ, Base::kS2, Base::kS3, Base::kS4};

bool allowed(const GenSpec& spec, Base b) {
  return !spec.allowed || spec.allowed->count(b) > 0;
}

bool order_ok(const GenSpec& spec, Count o, bool as_head) {
  for (Base b : kGenerated) {
    if (allowed(spec, b) && feasible(b, o, as_head)) return true;
  }
  return false;
}

TypedComponent sample_component(const GenSpec& spec, Count o, bool as_head, Rng& rng) {
  if (!as_head && o == 1) {
    // Decomposition reads a lone tail vertex as s1.
    return make(allowed(spec, Base::kS1) ? Base::kS1 : Base::kK1);
  }
  std::vector<Base> options;
  for (Base b : kGenerated) {
    if (allowed(spec, b) && feasible(b, o, as_head)) options.push_back(b);
  }
  const Base b = options[static_cast<std::size_t>(uniform(rng, 0, static_cast<Count>(options.size()) - 1))];
  TypedComponent t = sample_params(b, o, rng);
  // C5 is self-complementary; the matcher reports it untagged.
  if (b != Base::kK1 && b != Base::kS1 && b != Base::kC5) {
    const Count variants = is_split_base(b) ? 4 : 2;
    static constexpr Variant kOrder[] = {Variant::kOriginal, Variant::kComplement,
                                         Variant::kInverse, Variant::kInverseComplement};
    t.variant = kOrder[uniform(rng, 0, variants - 1)];
  }
  return t;
}

long double log_choose(Count n, Count k) {
  return std::lgamma(static_cast<long double>(n) + 1) - std::lgamma(static_cast<long double>(k) + 1) -
         std::lgamma(static_cast<long double>(n - k) + 1);
}

// Uniform composition of `total` into `parts` positive parts.
std::vector<Count> stars_and_bars(Count total, Count parts, Rng& rng) {
  // Floyd's sampling of parts-1 distinct cut points from 1..total-1.
  std::unordered_set<Count> chosen;
  std::vector<Count> cuts;
  const Count need = parts - 1;
  for (Count j = total - 1 - need + 1; j <= total - 1; ++j) {
    const Count t = uniform(rng, 1, j);
    const Count c = chosen.insert(t).second ? t : j;
    if (c == j) chosen.insert(j);
    cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<Count> out;
  Count prev = 0;
  for (Count c : cuts) {
    out.push_back(c - prev);
    prev = c;
  }
  out.push_back(total - prev);
  return out;
}

// Uniform over compositions of n into k parts from {1} u [4, inf), the
// orders admissible for every position when no type is excluded.
std::vector<Count> default_composition(Count n, Count k, Rng& rng) {
  std::vector<long double> logw;
  std::vector<Count> ones;
  for (Count j = 0; j <= k; ++j) {
    const Count large = k - j;
    if (large == 0) {
      if (n == j) {
        ones.push_back(j);
        logw.push_back(0);
      }
      continue;
    }
    const Count spare = n - j - 3 * large;  // total after removing 3 from each large part
    if (spare < large) continue;
    ones.push_back(j);
    logw.push_back(log_choose(k, j) + log_choose(spare - 1, large - 1));
  }
  if (ones.empty()) return {};
  const long double top = *std::max_element(logw.begin(), logw.end());
  std::vector<double> weights;
  for (long double w : logw) weights.push_back(static_cast<double>(std::exp(w - top)));
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  const Count j = ones[pick(rng)];
  const Count large = k - j;

  std::vector<bool> is_one(static_cast<std::size_t>(k), false);
  std::fill(is_one.begin(), is_one.begin() + j, true);
  std::shuffle(is_one.begin(), is_one.end(), rng);
  std::vector<Count> big;
  if (large > 0) {
    big = stars_and_bars(n - j - 3 * large, large, rng);
    for (Count& b : big) b += 3;
  }
  std::vector<Count> out;
  std::size_t next = 0;
  for (Count i = 0; i < k; ++i) out.push_back(is_one[i] ? 1 : big[next++]);
  return out;
}

bool merges_in_compact(const std::vector<TypedComponent>& list) {
  for (std::size_t i = 0; i + 1 < list.size(); ++i) {
    const bool single_here = list[i].order() == 1;
    const bool single_next = list[i + 1].order() == 1;
    if (!single_here || !single_next) continue;
    if (i + 2 == list.size()) return true;  // lone tail joins the previous run
    if (list[i].base == list[i + 1].base) return true;
  }
  return false;
}

}  // namespace

std::vector<TypedComponent> generate(const GenSpec& spec) {
  const Count n = spec.n;
  const Count k = spec.k;
  if (k < 1) throw Error(ErrorCode::kInfeasible, "k must be at least 1");
  if (n < k) {
    throw Error(ErrorCode::kInfeasible, "n=" + std::to_string(n) + " is below k=" +
                                            std::to_string(k) + "; every component needs a vertex");
  }
  if (spec.allowed && spec.allowed->count(Base::kCompleteBlock) + spec.allowed->count(Base::kEmptyBlock) > 0) {
    throw Error(ErrorCode::kInfeasible, "block types only occur in compact decompositions");
  }

  Rng rng(spec.seed);
  const bool unrestricted = !spec.allowed;
  auto smallest = [&](bool as_head) -> std::optional<Count> {
    for (Count o = 1; o <= n; ++o) {
      if (order_ok(spec, o, as_head)) return o;
    }
    return std::nullopt;
  };

  std::optional<Count> min_head = k > 1 ? smallest(true) : Count{0};
  const std::optional<Count> min_tail = smallest(false);
  if (!min_head) throw Error(ErrorCode::kInfeasible, "no allowed split type fits as a head");
  if (!min_tail) throw Error(ErrorCode::kInfeasible, "no allowed type of order <= n fits as the tail");
  if ((k - 1) * *min_head + *min_tail > n) {
    throw Error(ErrorCode::kInfeasible,
                "need n >= " + std::to_string((k - 1) * *min_head + *min_tail) + " for k=" +
                    std::to_string(k) + " (smallest head order " + std::to_string(*min_head) +
                    ", smallest tail order " + std::to_string(*min_tail) + ")");
  }

  constexpr int kAttempts = 100000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<Count> orders;
    if (unrestricted) {
      orders = default_composition(n, k, rng);
      if (orders.empty()) {
        throw Error(ErrorCode::kInfeasible,
                    "no indecomposable graph has 2 or 3 vertices; n=" + std::to_string(n) +
                        " cannot be split into k=" + std::to_string(k) + " admissible orders");
      }
    } else {
      orders = stars_and_bars(n, k, rng);
      bool ok = order_ok(spec, orders.back(), false);
      for (Count i = 0; ok && i + 1 < k; ++i) ok = order_ok(spec, orders[i], true);
      if (!ok) continue;
    }
    std::vector<TypedComponent> out;
    for (Count i = 0; i < k; ++i) {
      out.push_back(sample_component(spec, orders[i], i + 1 < k, rng));
    }
    if (spec.distinct_compact && merges_in_compact(out)) continue;
    return out;
  }
  throw Error(ErrorCode::kInfeasible, "no admissible component list found for n=" +
                                          std::to_string(n) + ", k=" + std::to_string(k));
}

DegreeSequence compose_types(const std::vector<TypedComponent>& components) {
  if (components.empty()) return {};
  std::vector<PairedDegreeSequence> heads;
  for (std::size_t i = 0; i + 1 < components.size(); ++i) {
    heads.push_back(type_to_paired(components[i]));
  }
  return compose_all(heads, type_degree_sequence(components.back()));
}

}  // namespace unigraph
