#include "unigraph/decomp_reference.hpp"

namespace unigraph::reference {

namespace {

// Scans every (p, q) in lexicographic order against the defining equality
//   sum_{i<=p} d_i = p(N-q-1) + sum_{i>N-q} d_i.
std::optional<SplitPoint> scan(const std::vector<Count>& d) {
  const auto N = static_cast<Count>(d.size());
  if (N < 2) return std::nullopt;
  std::vector<Wide> prefix(d.size() + 1, 0);
  for (std::size_t i = 0; i < d.size(); ++i) prefix[i + 1] = prefix[i] + d[i];
  for (Count p = 0; p < N; ++p) {
    for (Count q = 0; p + q < N; ++q) {
      if (p + q == 0) continue;
      const Wide top = prefix[p];
      const Wide bottom = prefix[N] - prefix[N - q];
      if (top == static_cast<Wide>(p) * (N - q - 1) + bottom) return SplitPoint{p, q};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SplitPoint> find_split_point(const DegreeSequence& s) {
  return scan(s.expand());
}

Decomposition decompose(const DegreeSequence& s) {
  if (!is_graphical(s)) throw Error(ErrorCode::kNotGraphical, to_string(s));
  std::vector<Count> d = s.expand();
  Decomposition out;
  while (const auto sp = scan(d)) {
    const auto N = static_cast<Count>(d.size());
    const Count middle = N - sp->p - sp->q;
    std::vector<Count> k;
    std::vector<Count> st;
    std::vector<Count> rest;
    for (Count i = 0; i < N; ++i) {
      if (i < sp->p) {
        k.push_back(d[i] - middle);
      } else if (i >= N - sp->q) {
        st.push_back(d[i]);
      } else {
        rest.push_back(d[i] - sp->p);
      }
    }
    out.components.push_back({normalize(k), normalize(st)});
    d = std::move(rest);
  }
  out.tail = normalize(d);
  return out;
}

}  // namespace unigraph::reference
