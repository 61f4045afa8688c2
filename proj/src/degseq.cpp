#include "unigraph/degseq.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>

#include "unigraph/graph.hpp"

namespace unigraph {

DegreeSequence DegreeSequence::from_runs(std::vector<Run> runs) {
  for (const Run& r : runs) {
    if (r.degree < 0) throw Error(ErrorCode::kNegativeDegree, "degree " + std::to_string(r.degree));
    if (r.count < 0) {
      throw Error(ErrorCode::kInvalidArgument, "negative multiplicity");
    }
  }
  std::sort(runs.begin(), runs.end(),
            [](const Run& a, const Run& b) { return a.degree > b.degree; });
  DegreeSequence s;
  for (const Run& r : runs) {
    if (r.count == 0) continue;
    if (!s.runs_.empty() && s.runs_.back().degree == r.degree) {
      s.runs_.back().count += r.count;
    } else {
      s.runs_.push_back(r);
    }
    s.n_ += r.count;
  }
  return s;
}

Wide DegreeSequence::degree_sum() const {
  Wide total = 0;
  for (const Run& r : runs_) total += static_cast<Wide>(r.degree) * r.count;
  return total;
}

std::vector<Count> DegreeSequence::expand() const {
  std::vector<Count> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (const Run& r : runs_) out.insert(out.end(), static_cast<std::size_t>(r.count), r.degree);
  return out;
}

DegreeSequence PairedDegreeSequence::merged() const {
  std::vector<Run> runs = k_part.runs();
  runs.insert(runs.end(), s_part.runs().begin(), s_part.runs().end());
  return DegreeSequence::from_runs(std::move(runs));
}

DegreeSequence normalize(std::span<const Count> raw) {
  std::vector<Run> runs;
  runs.reserve(raw.size());
  for (Count d : raw) runs.push_back({d, 1});
  return DegreeSequence::from_runs(std::move(runs));
}

bool is_graphical(const DegreeSequence& s) {
  if (s.empty()) return true;
  const Count n = s.size();
  if (s.max_degree() > n - 1) return false;
  if (s.degree_sum() % 2 != 0) return false;

  const auto& runs = s.runs();
  const std::size_t R = runs.size();
  // Suffix totals over runs r..R-1.
  std::vector<Wide> suffix_sum(R + 1, 0);
  std::vector<Count> suffix_cnt(R + 1, 0);
  for (std::size_t r = R; r-- > 0;) {
    suffix_sum[r] = suffix_sum[r + 1] + static_cast<Wide>(runs[r].degree) * runs[r].count;
    suffix_cnt[r] = suffix_cnt[r + 1] + runs[r].count;
  }

  Wide lhs = 0;
  Count k = 0;
  std::size_t ge = R;  // runs [0, ge) have degree >= k
  for (std::size_t r = 0; r < R; ++r) {
    k += runs[r].count;
    lhs += static_cast<Wide>(runs[r].degree) * runs[r].count;
    while (ge > 0 && runs[ge - 1].degree < k) --ge;
    const std::size_t cut = std::max(ge, r + 1);
    const Count capped = suffix_cnt[r + 1] - suffix_cnt[cut];
    const Wide rhs = static_cast<Wide>(k) * (k - 1) +
                     static_cast<Wide>(k) * capped + suffix_sum[cut];
    if (lhs > rhs) return false;
  }
  return true;
}

bool is_valid_paired(const PairedDegreeSequence& ps) {
  const Count p = ps.p();
  const Count q = ps.q();
  if (!ps.k_part.empty() && ps.k_part.min_degree() < p - 1) return false;
  if (!ps.s_part.empty() && ps.s_part.max_degree() > p) return false;
  // Cross degrees of clique vertices must form a bipartite degree sequence
  // against the stable side (Gale-Ryser, checked at run ends).
  Wide cross_k = 0;
  for (const Run& r : ps.k_part.runs()) {
    const Count c = r.degree - (p - 1);
    if (c > q) return false;
    cross_k += static_cast<Wide>(c) * r.count;
  }
  if (cross_k != ps.s_part.degree_sum()) return false;
  Wide lhs = 0;
  Count k = 0;
  for (const Run& r : ps.k_part.runs()) {
    k += r.count;
    lhs += static_cast<Wide>(r.degree - (p - 1)) * r.count;
    Wide rhs = 0;
    for (const Run& t : ps.s_part.runs()) {
      rhs += static_cast<Wide>(std::min(t.degree, k)) * t.count;
    }
    if (lhs > rhs) return false;
  }
  return true;
}

Graph realize(const DegreeSequence& s) {
  if (!is_graphical(s)) throw Error(ErrorCode::kNotGraphical, to_string(s));
  if (s.size() > std::numeric_limits<Vertex>::max()) {
    throw Error(ErrorCode::kTooLarge, "realization needs n < 2^31");
  }
  const std::vector<Count> degrees = s.expand();
  const auto n = static_cast<Vertex>(degrees.size());
  // Ordered by (-residual, id): begin() is the highest residual with the
  // lowest id.
  std::set<std::pair<Count, Vertex>> pending;
  for (Vertex v = 0; v < n; ++v) {
    if (degrees[v] > 0) pending.insert({-degrees[v], v});
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(s.degree_sum() / 2));
  std::vector<std::pair<Count, Vertex>> picked;
  while (!pending.empty()) {
    const auto [neg, v] = *pending.begin();
    pending.erase(pending.begin());
    const Count d = -neg;
    if (static_cast<Count>(pending.size()) < d) {
      throw Error(ErrorCode::kNotGraphical, to_string(s));
    }
    picked.clear();
    auto it = pending.begin();
    for (Count i = 0; i < d; ++i) picked.push_back(*it++);
    for (const auto& [w_neg, w] : picked) {
      pending.erase({w_neg, w});
      edges.push_back({std::min(v, w), std::max(v, w)});
      if (w_neg + 1 < 0) pending.insert({w_neg + 1, w});
    }
  }
  return Graph::from_edges(n, edges);
}

DegreeSequence complement_seq(const DegreeSequence& s) {
  const Count n = s.size();
  std::vector<Run> runs;
  runs.reserve(s.run_count());
  for (const Run& r : s.runs()) runs.push_back({n - 1 - r.degree, r.count});
  return DegreeSequence::from_runs(std::move(runs));
}

PairedDegreeSequence complement_paired(const PairedDegreeSequence& ps) {
  const Count n = ps.size();
  std::vector<Run> k;
  std::vector<Run> s;
  for (const Run& r : ps.s_part.runs()) k.push_back({n - 1 - r.degree, r.count});
  for (const Run& r : ps.k_part.runs()) s.push_back({n - 1 - r.degree, r.count});
  return {DegreeSequence::from_runs(std::move(k)),
          DegreeSequence::from_runs(std::move(s))};
}

PairedDegreeSequence inverse_paired(const PairedDegreeSequence& ps) {
  const Count p = ps.p();
  const Count q = ps.q();
  std::vector<Run> k;
  std::vector<Run> s;
  for (const Run& r : ps.s_part.runs()) k.push_back({r.degree + (q - 1), r.count});
  for (const Run& r : ps.k_part.runs()) s.push_back({r.degree - (p - 1), r.count});
  return {DegreeSequence::from_runs(std::move(k)),
          DegreeSequence::from_runs(std::move(s))};
}

DegreeSequence compose_seq(const PairedDegreeSequence& head,
                           const DegreeSequence& tail) {
  const Count t = tail.size();
  const Count p = head.p();
  std::vector<Run> runs;
  runs.reserve(head.k_part.run_count() + tail.run_count() + head.s_part.run_count());
  for (const Run& r : head.k_part.runs()) runs.push_back({r.degree + t, r.count});
  for (const Run& r : tail.runs()) runs.push_back({r.degree + p, r.count});
  for (const Run& r : head.s_part.runs()) runs.push_back(r);
  return DegreeSequence::from_runs(std::move(runs));
}

std::string to_string(const DegreeSequence& s) {
  if (s.empty()) return "-";
  std::string out;
  for (const Run& r : s.runs()) {
    if (!out.empty()) out += ',';
    out += std::to_string(r.degree);
    if (r.count > 1) {
      out += '^';
      out += std::to_string(r.count);
    }
  }
  return out;
}

std::string to_string(const PairedDegreeSequence& ps) {
  return to_string(ps.k_part) + ";" + to_string(ps.s_part);
}

namespace {

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

Count parse_count(std::string_view token, std::string_view whole) {
  token = trim(token);
  bool negative = false;
  if (!token.empty() && token.front() == '-') {
    negative = true;
    token.remove_prefix(1);
  }
  Count value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kParse, "bad integer '" + std::string(token) +
                                       "' in '" + std::string(whole) + "'");
  }
  return negative ? -value : value;
}

}  // namespace

DegreeSequence parse_sequence(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty() || body == "-" || body == "∅") return {};
  std::vector<Run> runs;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find(',', start);
    if (end == std::string_view::npos) end = body.size();
    const std::string_view token = body.substr(start, end - start);
    const auto caret = token.find('^');
    Run run;
    if (caret == std::string_view::npos) {
      run = {parse_count(token, body), 1};
    } else {
      run = {parse_count(token.substr(0, caret), body),
             parse_count(token.substr(caret + 1), body)};
      if (run.count < 1) {
        throw Error(ErrorCode::kParse, "multiplicity must be positive in '" +
                                           std::string(body) + "'");
      }
    }
    if (run.degree < 0) {
      throw Error(ErrorCode::kNegativeDegree, std::string(body));
    }
    runs.push_back(run);
    start = end + 1;
  }
  return DegreeSequence::from_runs(std::move(runs));
}

PairedDegreeSequence parse_paired(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos) {
    throw Error(ErrorCode::kParse, "paired sequence needs exactly one ';': '" +
                                       std::string(text) + "'");
  }
  return {parse_sequence(text.substr(0, semi)), parse_sequence(text.substr(semi + 1))};
}

}  // namespace unigraph
