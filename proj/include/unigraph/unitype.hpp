#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "unigraph/decomp.hpp"
#include "unigraph/degseq.hpp"

namespace unigraph {

enum class Variant { kOriginal, kComplement, kInverse, kInverseComplement };

enum class Base {
  kC5,
  kMK2,
  kU2,
  kU3,
  kK1,
  kS1,
  kSPQ,
  kS2,
  kS3,
  kS4,
  kCompleteBlock,
  kEmptyBlock,
};

// One indecomposable unigraph up to isomorphism. Parameter layout:
//   MK2 {m}   U2 {m, l}   U3 {m}   SPQ {p, q}   S2 {p1, q1, ..., pk, qk}
//   S3 {p, q1, q2}   S4 {p, q}   CompleteBlock / EmptyBlock {m}
// C5, K1 and S1 take no parameters.
struct TypedComponent {
  Variant variant = Variant::kOriginal;
  Base base = Base::kK1;
  std::vector<Count> params;

  Count order() const;
  friend bool operator==(const TypedComponent&, const TypedComponent&) = default;
};

using TypedSequence = std::variant<DegreeSequence, PairedDegreeSequence>;

struct UnigraphReport {
  bool is_unigraph = false;
  // Heads in decomposition order, then the tail. On failure this holds the
  // types matched before failure_index.
  std::vector<TypedComponent> component_types;
  std::optional<std::size_t> failure_index;
};

struct UnigraphResult {
  Decomposition decomposition;
  UnigraphReport report;
};

bool is_split_base(Base base);
std::string_view base_name(Base base);
std::string_view variant_name(Variant variant);

// Throws ParamOutOfRange or VariantUndefined.
void validate(const TypedComponent& t);

DegreeSequence apply_variant(const DegreeSequence& s, Variant v);
PairedDegreeSequence apply_variant(const PairedDegreeSequence& ps, Variant v);

std::optional<TypedComponent> match_nonsplit_type(const DegreeSequence& s);
std::optional<TypedComponent> match_split_type(const PairedDegreeSequence& ps);

UnigraphResult is_unigraph(const DegreeSequence& s);

TypedSequence type_to_sequence(const TypedComponent& t);
// Paired form of a split base; throws ParamOutOfRange for non-split bases.
PairedDegreeSequence type_to_paired(const TypedComponent& t);
// Plain degree sequence of any type.
DegreeSequence type_degree_sequence(const TypedComponent& t);

// Types the components of a compact decomposition. Single-vertex blocks
// are k1/s1, larger ones complete(m=)/empty(m=). Returns nullopt if some
// component is not an indecomposable unigraph.
std::optional<std::vector<TypedComponent>> compact_types(const CompactDecomposition& c);

// Every non-block type with order <= max_order, all admissible variants.
std::vector<TypedComponent> enumerate_types(Count max_order);

// Tags such as "complement:mk2(m=2)", "inverse:spq(p=2,q=2)", "s2(2,1,1,1)".
std::string to_string(const TypedComponent& t);
TypedComponent parse_type(std::string_view text);

}  // namespace unigraph
