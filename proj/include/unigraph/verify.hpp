#pragma once

// Exhaustive differential checks of the fast paths against the oracle.

#include <functional>

#include "unigraph/io.hpp"

namespace unigraph::verify {

struct Outcome {
  bool ok = true;
  Count checked = 0;
  // First disagreement, null when ok.
  Json diff;
};

// Every graphical sequence on 1..max_n vertices, graphicality decided by
// the oracle's realization search. Visitor returns false to stop.
void for_each_graphical(Count max_n, const std::function<bool(const DegreeSequence&)>& visit);

// is_unigraph against "exactly one isomorphism class".
Outcome unigraph(Count max_n);
// omega, alpha, beta, chi and the C5-tail rule for chi.
Outcome params(Count max_n);
// Fixing and distinguishing numbers.
Outcome fixdist(Count max_n);

Json outcome_to_json(const Outcome& o);

}  // namespace unigraph::verify
