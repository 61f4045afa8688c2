#pragma once

#include <string>

#include "unigraph/io.hpp"
#include "unigraph/params.hpp"
#include "unigraph/split.hpp"
#include "unigraph/unitype.hpp"

namespace unigraph {

// {"components":[{"k":"...","s":"..."},...],"tail":"..."}
Json decomposition_to_json(const Decomposition& d);
// Same layout; "tail" is null when a single-vertex tail was folded in.
Json compact_to_json(const CompactDecomposition& c);
Json split_to_json(const SplitClass& sc);
// {"isUnigraph":...,"components":[tags],"failureIndex":...}
Json unigraph_report_to_json(const UnigraphReport& r);
// Key order: omega, alpha, beta, chi, fix, dist, perfect.
Json params_to_json(const ParamSet& p);

std::string decomposition_to_text(const Decomposition& d);
std::string compact_to_text(const CompactDecomposition& c);

}  // namespace unigraph
