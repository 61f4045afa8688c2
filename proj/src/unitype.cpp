#include "unigraph/unitype.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "unigraph/split.hpp"

namespace unigraph {

namespace {

constexpr Variant kNonSplitVariants[] = {Variant::kOriginal, Variant::kComplement};
constexpr Variant kSplitVariants[] = {Variant::kOriginal, Variant::kInverse,
                                      Variant::kComplement, Variant::kInverseComplement};

TypedComponent make(Variant v, Base b, std::vector<Count> params = {}) {
  return TypedComponent{v, b, std::move(params)};
}

[[noreturn]] void out_of_range(const std::string& what) {
  throw Error(ErrorCode::kParamOutOfRange, what);
}

DegreeSequence seq(std::vector<Run> runs) { return DegreeSequence::from_runs(std::move(runs)); }

// Table formulas, before any variant is applied.
TypedSequence base_sequence(const TypedComponent& t) {
  const auto& a = t.params;
  switch (t.base) {
    case Base::kC5: return seq({{2, 5}});
    case Base::kMK2: return seq({{1, 2 * a[0]}});
    case Base::kU2: return seq({{a[1], 1}, {1, 2 * a[0] + a[1]}});
    case Base::kU3: return seq({{2 * a[0] + 2, 1}, {2, 2 * a[0] + 3}});
    case Base::kK1: return PairedDegreeSequence{seq({{0, 1}}), {}};
    case Base::kS1: return PairedDegreeSequence{{}, seq({{0, 1}})};
    case Base::kSPQ: {
      const Count p = a[0], q = a[1];
      return PairedDegreeSequence{seq({{p + q - 1, q}}), seq({{1, p * q}})};
    }
    case Base::kS2: {
      Count n = 0;
      Count leaves = 0;
      for (std::size_t i = 0; i < a.size(); i += 2) {
        n += a[i + 1];
        leaves += a[i] * a[i + 1];
      }
      std::vector<Run> k;
      for (std::size_t i = 0; i < a.size(); i += 2) k.push_back({a[i] + n - 1, a[i + 1]});
      return PairedDegreeSequence{seq(std::move(k)), seq({{1, leaves}})};
    }
    case Base::kS3: {
      const Count p = a[0], q1 = a[1], q2 = a[2];
      return PairedDegreeSequence{seq({{p + q1 + q2, q1 + q2}}),
                                  seq({{q1, 1}, {1, p * q1 + (p + 1) * q2}})};
    }
    case Base::kS4: {
      const Count p = a[0], q = a[1];
      return PairedDegreeSequence{seq({{2 * (p + q + 1) + q * p, 1}, {p + q + 3, q + 2}}),
                                  seq({{2, q * p + 2 * p + q + 1}})};
    }
    case Base::kCompleteBlock:
      return PairedDegreeSequence{seq({{a[0] - 1, a[0]}}), {}};
    case Base::kEmptyBlock:
      return PairedDegreeSequence{{}, seq({{0, a[0]}})};
  }
  out_of_range("unknown base");
}

std::size_t expected_arity(Base b) {
  switch (b) {
    case Base::kC5:
    case Base::kK1:
    case Base::kS1: return 0;
    case Base::kMK2:
    case Base::kU3:
    case Base::kCompleteBlock:
    case Base::kEmptyBlock: return 1;
    case Base::kU2:
    case Base::kSPQ:
    case Base::kS4: return 2;
    case Base::kS3: return 3;
    case Base::kS2: return 0;  // variable, checked separately
  }
  return 0;
}

// Names used in tags, in parameter order.
std::vector<std::string_view> param_names(Base b) {
  switch (b) {
    case Base::kMK2:
    case Base::kU3:
    case Base::kCompleteBlock:
    case Base::kEmptyBlock: return {"m"};
    case Base::kU2: return {"m", "l"};
    case Base::kSPQ:
    case Base::kS4: return {"p", "q"};
    case Base::kS3: return {"p", "q1", "q2"};
    default: return {};
  }
}

}  // namespace

bool is_split_base(Base base) {
  switch (base) {
    case Base::kC5:
    case Base::kMK2:
    case Base::kU2:
    case Base::kU3: return false;
    default: return true;
  }
}

std::string_view base_name(Base base) {
  switch (base) {
    case Base::kC5: return "c5";
    case Base::kMK2: return "mk2";
    case Base::kU2: return "u2";
    case Base::kU3: return "u3";
    case Base::kK1: return "k1";
    case Base::kS1: return "s1";
    case Base::kSPQ: return "spq";
    case Base::kS2: return "s2";
    case Base::kS3: return "s3";
    case Base::kS4: return "s4";
    case Base::kCompleteBlock: return "complete";
    case Base::kEmptyBlock: return "empty";
  }
  return "?";
}

std::string_view variant_name(Variant variant) {
  switch (variant) {
    case Variant::kOriginal: return "original";
    case Variant::kComplement: return "complement";
    case Variant::kInverse: return "inverse";
    case Variant::kInverseComplement: return "inverse-complement";
  }
  return "?";
}

Count TypedComponent::order() const {
  const auto& a = params;
  switch (base) {
    case Base::kC5: return 5;
    case Base::kMK2: return 2 * a.at(0);
    case Base::kU2: return 2 * a.at(0) + a.at(1) + 1;
    case Base::kU3: return 2 * a.at(0) + 4;
    case Base::kK1:
    case Base::kS1: return 1;
    case Base::kSPQ: return a.at(1) * (a.at(0) + 1);
    case Base::kS2: {
      Count n = 0;
      for (std::size_t i = 0; i + 1 < a.size(); i += 2) n += a[i + 1] * (a[i] + 1);
      return n;
    }
    case Base::kS3: return (a.at(0) + 1) * a.at(1) + (a.at(0) + 2) * a.at(2) + 1;
    case Base::kS4: return (a.at(0) + 2) * (a.at(1) + 2);
    case Base::kCompleteBlock:
    case Base::kEmptyBlock: return a.at(0);
  }
  return 0;
}

void validate(const TypedComponent& t) {
  const auto& a = t.params;
  const std::string tag(base_name(t.base));
  if (t.base == Base::kS2) {
    if (a.size() < 4 || a.size() % 2 != 0) out_of_range("s2 needs at least two (p,q) pairs");
    for (std::size_t i = 0; i < a.size(); i += 2) {
      if (a[i + 1] < 1) out_of_range("s2 needs every q_i >= 1");
      if (i + 2 < a.size() && a[i] <= a[i + 2]) out_of_range("s2 needs p_1 > p_2 > ...");
    }
    if (a[a.size() - 2] < 1) out_of_range("s2 needs p_m >= 1");
  } else if (a.size() != expected_arity(t.base)) {
    out_of_range(tag + " expects " + std::to_string(expected_arity(t.base)) + " parameters");
  }
  switch (t.base) {
    case Base::kMK2:
      if (a[0] < 2) out_of_range("mk2 needs m >= 2");
      break;
    case Base::kU2:
      if (a[0] < 1 || a[1] < 2) out_of_range("u2 needs m >= 1, l >= 2");
      break;
    case Base::kU3:
      if (a[0] < 1) out_of_range("u3 needs m >= 1");
      break;
    case Base::kSPQ:
      if (a[0] < 1 || a[1] < 2) out_of_range("spq needs p >= 1, q >= 2");
      break;
    case Base::kS3:
      if (a[0] < 1 || a[1] < 2 || a[2] < 1) out_of_range("s3 needs p >= 1, q1 >= 2, q2 >= 1");
      break;
    case Base::kS4:
      if (a[0] < 1 || a[1] < 1) out_of_range("s4 needs p >= 1, q >= 1");
      break;
    case Base::kCompleteBlock:
    case Base::kEmptyBlock:
      if (a[0] < 1) out_of_range(tag + " needs m >= 1");
      if (t.variant != Variant::kOriginal) out_of_range("blocks carry no variant");
      break;
    default:
      break;
  }
  if (!is_split_base(t.base) &&
      (t.variant == Variant::kInverse || t.variant == Variant::kInverseComplement)) {
    throw Error(ErrorCode::kVariantUndefined, "inverse of non-split type " + tag);
  }
}

DegreeSequence apply_variant(const DegreeSequence& s, Variant v) {
  switch (v) {
    case Variant::kOriginal: return s;
    case Variant::kComplement: return complement_seq(s);
    default:
      throw Error(ErrorCode::kVariantUndefined, "inverse needs a paired sequence");
  }
}

PairedDegreeSequence apply_variant(const PairedDegreeSequence& ps, Variant v) {
  switch (v) {
    case Variant::kOriginal: return ps;
    case Variant::kComplement: return complement_paired(ps);
    case Variant::kInverse: return inverse_paired(ps);
    case Variant::kInverseComplement: return complement_paired(inverse_paired(ps));
  }
  return ps;
}

std::optional<TypedComponent> match_nonsplit_type(const DegreeSequence& input) {
  for (Variant v : kNonSplitVariants) {
    const DegreeSequence s = apply_variant(input, v);
    const auto& r = s.runs();
    if (s == seq({{2, 5}})) return make(v, Base::kC5);
    if (r.size() == 1 && r[0].degree == 1 && r[0].count % 2 == 0) {
      const Count m = r[0].count / 2;
      if (m >= 2) return make(v, Base::kMK2, {m});
    }
    if (r.size() == 2) {
      const auto [d1, r1] = r[0];
      const auto [d2, r2] = r[1];
      if (r1 == 1 && d2 == 1 && (r2 - d1) % 2 == 0) {
        const Count m = (r2 - d1) / 2;
        const Count l = d1;
        if (m >= 1 && l >= 2) return make(v, Base::kU2, {m, l});
      }
      if (d1 % 2 == 0 && r1 == 1 && d2 == 2) {
        const Count m = (d1 - 2) / 2;
        if (m >= 1 && r2 == 2 * m + 3) return make(v, Base::kU3, {m});
      }
    }
  }
  return std::nullopt;
}

std::optional<TypedComponent> match_split_type(const PairedDegreeSequence& input) {
  for (Variant v : kSplitVariants) {
    const PairedDegreeSequence s = apply_variant(input, v);
    const auto& A = s.k_part.runs();
    const auto& B = s.s_part.runs();

    if (A.size() == 1 && B.empty() && A[0].degree == 0 && A[0].count == 1) {
      return make(v, Base::kK1);
    }
    if (A.empty() && B.size() == 1 && B[0].degree == 0 && B[0].count == 1) {
      return make(v, Base::kS1);
    }
    if (A.size() == 1 && B.size() == 1) {
      const auto [d1, r1] = A[0];
      const auto [d2, r2] = B[0];
      if (r2 % r1 == 0 && d2 == 1) {
        const Count p = r2 / r1;
        const Count q = r1;
        if (p >= 1 && q >= 2 && d1 == p + q - 1) return make(v, Base::kSPQ, {p, q});
      }
    }
    if (A.size() >= 2 && B.size() == 1) {
      Count n = 0;
      for (const Run& run : A) n += run.count;
      std::vector<Count> params;
      Wide leaves = 0;
      for (const Run& run : A) {
        params.push_back(run.degree - n + 1);
        params.push_back(run.count);
        leaves += static_cast<Wide>(run.degree - n + 1) * run.count;
      }
      if (params[params.size() - 2] >= 1 && B[0].degree == 1 && B[0].count == leaves) {
        return make(v, Base::kS2, std::move(params));
      }
    }
    if (A.size() == 1 && B.size() == 2) {
      const auto [d1, r1] = A[0];
      const auto [d2, r2] = B[0];
      const auto [d3, r3] = B[1];
      if (r2 == 1 && d3 == 1) {
        const Count p = d1 - r1;
        const Count q1 = d2;
        const Count q2 = r1 - d2;
        if (p >= 1 && q1 >= 2 && q2 >= 1 && r3 == p * q1 + (p + 1) * q2) {
          return make(v, Base::kS3, {p, q1, q2});
        }
      }
    }
    if (A.size() == 2 && B.size() == 1) {
      const auto [d1, r1] = A[0];
      const auto [d2, r2] = A[1];
      const auto [d3, r3] = B[0];
      if (r1 == 1 && d3 == 2) {
        const Count q = r2 - 2;
        const Count p = d2 - 3 - q;
        if (p >= 1 && q >= 1 && d1 == 2 * (p + q + 1) + q * p && r3 == q * p + 2 * p + q + 1) {
          return make(v, Base::kS4, {p, q});
        }
      }
    }
  }
  return std::nullopt;
}

UnigraphResult is_unigraph(const DegreeSequence& s) {
  UnigraphResult out;
  out.decomposition = decompose(s);
  const Decomposition& d = out.decomposition;
  UnigraphReport& report = out.report;

  for (std::size_t i = 0; i < d.components.size(); ++i) {
    auto t = match_split_type(d.components[i]);
    if (!t) {
      report.failure_index = i;
      return out;
    }
    report.component_types.push_back(std::move(*t));
  }

  const std::size_t tail_index = d.components.size();
  if (d.tail.empty()) {
    report.is_unigraph = true;
    return out;
  }
  std::optional<TypedComponent> tail_type;
  if (d.tail.size() == 1) {
    // A lone vertex reads as the stable side of its unbalanced partition.
    tail_type = make(Variant::kOriginal, Base::kS1);
  } else {
    const SplitClass sc = determine_split(d.tail);
    tail_type = sc.is_split() ? match_split_type(*sc.paired) : match_nonsplit_type(d.tail);
  }
  if (!tail_type) {
    report.failure_index = tail_index;
    return out;
  }
  report.component_types.push_back(std::move(*tail_type));
  report.is_unigraph = true;
  return out;
}

TypedSequence type_to_sequence(const TypedComponent& t) {
  validate(t);
  TypedSequence base = base_sequence(t);
  if (auto* ps = std::get_if<PairedDegreeSequence>(&base)) return apply_variant(*ps, t.variant);
  return apply_variant(std::get<DegreeSequence>(base), t.variant);
}

PairedDegreeSequence type_to_paired(const TypedComponent& t) {
  if (!is_split_base(t.base)) {
    out_of_range(std::string(base_name(t.base)) + " is not a split type");
  }
  return std::get<PairedDegreeSequence>(type_to_sequence(t));
}

DegreeSequence type_degree_sequence(const TypedComponent& t) {
  TypedSequence ts = type_to_sequence(t);
  if (auto* ps = std::get_if<PairedDegreeSequence>(&ts)) return ps->merged();
  return std::get<DegreeSequence>(ts);
}

std::optional<std::vector<TypedComponent>> compact_types(const CompactDecomposition& c) {
  std::vector<TypedComponent> out;
  for (const auto& ps : c.components) {
    if (ps.q() == 0 && ps.p() >= 1 && ps.k_part.run_count() == 1 &&
        ps.k_part.max_degree() == ps.p() - 1) {
      out.push_back(ps.p() == 1 ? make(Variant::kOriginal, Base::kK1)
                                : make(Variant::kOriginal, Base::kCompleteBlock, {ps.p()}));
      continue;
    }
    if (ps.p() == 0 && ps.q() >= 1 && ps.s_part.max_degree() == 0) {
      out.push_back(ps.q() == 1 ? make(Variant::kOriginal, Base::kS1)
                                : make(Variant::kOriginal, Base::kEmptyBlock, {ps.q()}));
      continue;
    }
    auto t = match_split_type(ps);
    if (!t) return std::nullopt;
    out.push_back(std::move(*t));
  }
  if (c.tail) {
    const SplitClass sc = determine_split(*c.tail);
    auto t = sc.is_split() ? match_split_type(*sc.paired) : match_nonsplit_type(*c.tail);
    if (!t) return std::nullopt;
    out.push_back(std::move(*t));
  }
  return out;
}

std::vector<TypedComponent> enumerate_types(Count max_order) {
  std::vector<TypedComponent> out;
  auto add_nonsplit = [&](Base b, std::vector<Count> params) {
    for (Variant v : kNonSplitVariants) out.push_back(make(v, b, params));
  };
  auto add_split = [&](Base b, std::vector<Count> params) {
    for (Variant v : kSplitVariants) out.push_back(make(v, b, params));
  };
  if (max_order >= 1) {
    out.push_back(make(Variant::kOriginal, Base::kK1));
    out.push_back(make(Variant::kOriginal, Base::kS1));
  }
  if (max_order >= 5) add_nonsplit(Base::kC5, {});
  for (Count m = 2; 2 * m <= max_order; ++m) add_nonsplit(Base::kMK2, {m});
  for (Count m = 1; 2 * m + 3 <= max_order; ++m) {
    for (Count l = 2; 2 * m + l + 1 <= max_order; ++l) add_nonsplit(Base::kU2, {m, l});
  }
  for (Count m = 1; 2 * m + 4 <= max_order; ++m) add_nonsplit(Base::kU3, {m});
  for (Count p = 1; 2 * (p + 1) <= max_order; ++p) {
    for (Count q = 2; q * (p + 1) <= max_order; ++q) add_split(Base::kSPQ, {p, q});
  }
  // S2: strictly decreasing p's, at least two groups.
  std::vector<Count> current;
  auto extend = [&](auto&& self, Count max_p, Count used) -> void {
    if (current.size() >= 4) add_split(Base::kS2, current);
    for (Count p = max_p; p >= 1; --p) {
      for (Count q = 1; used + q * (p + 1) <= max_order; ++q) {
        current.push_back(p);
        current.push_back(q);
        self(self, p - 1, used + q * (p + 1));
        current.pop_back();
        current.pop_back();
      }
    }
  };
  extend(extend, max_order, 0);
  for (Count p = 1; p <= max_order; ++p) {
    for (Count q1 = 2; (p + 1) * q1 + (p + 2) + 1 <= max_order; ++q1) {
      for (Count q2 = 1; (p + 1) * q1 + (p + 2) * q2 + 1 <= max_order; ++q2) {
        add_split(Base::kS3, {p, q1, q2});
      }
    }
  }
  for (Count p = 1; (p + 2) * 3 <= max_order; ++p) {
    for (Count q = 1; (p + 2) * (q + 2) <= max_order; ++q) add_split(Base::kS4, {p, q});
  }
  return out;
}

std::string to_string(const TypedComponent& t) {
  std::string out;
  if (t.variant != Variant::kOriginal) {
    out += variant_name(t.variant);
    out += ':';
  }
  out += base_name(t.base);
  if (t.params.empty()) return out;
  const auto names = param_names(t.base);
  out += '(';
  for (std::size_t i = 0; i < t.params.size(); ++i) {
    if (i > 0) out += ',';
    if (i < names.size()) {
      out += names[i];
      out += '=';
    }
    out += std::to_string(t.params[i]);
  }
  out += ')';
  return out;
}

TypedComponent parse_type(std::string_view text) {
  auto fail = [&](const std::string& why) -> TypedComponent {
    throw Error(ErrorCode::kParse, "type tag '" + std::string(text) + "': " + why);
  };
  std::string_view rest = text;
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);

  TypedComponent t;
  if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
    const std::string_view v = rest.substr(0, colon);
    bool found = false;
    for (Variant cand : kSplitVariants) {
      if (variant_name(cand) == v) {
        t.variant = cand;
        found = true;
      }
    }
    if (!found) return fail("unknown variant '" + std::string(v) + "'");
    rest.remove_prefix(colon + 1);
  }
  const auto paren = rest.find('(');
  const std::string_view name = rest.substr(0, paren);
  bool known = false;
  for (int b = 0; b <= static_cast<int>(Base::kEmptyBlock); ++b) {
    if (base_name(static_cast<Base>(b)) == name) {
      t.base = static_cast<Base>(b);
      known = true;
    }
  }
  if (!known) return fail("unknown base '" + std::string(name) + "'");
  if (paren != std::string_view::npos) {
    if (rest.back() != ')') return fail("missing ')'");
    std::string_view args = rest.substr(paren + 1, rest.size() - paren - 2);
    const auto names = param_names(t.base);
    std::size_t index = 0;
    while (!args.empty()) {
      const auto comma = args.find(',');
      std::string_view item = args.substr(0, comma);
      args = comma == std::string_view::npos ? std::string_view{} : args.substr(comma + 1);
      if (const auto eq = item.find('='); eq != std::string_view::npos) {
        const std::string_view key = item.substr(0, eq);
        if (index >= names.size() || names[index] != key) {
          return fail("unexpected parameter '" + std::string(key) + "'");
        }
        item.remove_prefix(eq + 1);
      }
      Count value = 0;
      const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
        return fail("bad number '" + std::string(item) + "'");
      }
      t.params.push_back(value);
      ++index;
    }
  }
  validate(t);
  return t;
}

}  // namespace unigraph
