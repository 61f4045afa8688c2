#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "unigraph/gen.hpp"
#include "unigraph/report.hpp"
#include "unigraph/verify.hpp"

namespace unigraph::cli {

namespace {

struct Options {
  std::string degrees;
  std::string file;
  bool paired = false;
  bool json = false;
  bool compact = false;
  std::uint64_t seed = 0;
  Count max_n = 8;
  Count count = 1;
  Count n = 10;
  Count k = 1;
  std::string types;
  std::string components;
  std::string check;
};

std::string trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string_view::npos) return {};
  const auto b = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(a, b - a + 1));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A file holds a JSON graph, an "n m" edge list, or a sequence.
DegreeSequence sequence_from_file(const std::string& text) {
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    Json doc;
    try {
      doc = Json::parse(body);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kParse, e.what());
    }
    return degree_sequence_of(graph_from_json(doc));
  }
  const std::string first = body.substr(0, body.find('\n'));
  if (first.find_first_of(",^;") == std::string::npos &&
      first.find_first_of(" \t") != std::string::npos) {
    return degree_sequence_of(parse_edge_list(body));
  }
  return parse_sequence(body);
}

// Exactly one input source. --paired reads "k;s" and merges it.
DegreeSequence input_sequence(const Options& o) {
  if (o.degrees.empty() == o.file.empty()) {
    throw CLI::ValidationError("input", "give exactly one of --degrees or --file");
  }
  const std::string text = o.file.empty() ? o.degrees : read_file(o.file);
  if (o.paired) {
    const PairedDegreeSequence ps = parse_paired(trim(text));
    if (!is_valid_paired(ps)) throw Error(ErrorCode::kInvalidPartition, to_string(ps));
    return ps.merged();
  }
  return o.file.empty() ? parse_sequence(trim(text)) : sequence_from_file(text);
}

DegreeSequence graphical_input(const Options& o) {
  DegreeSequence s = input_sequence(o);
  if (!is_graphical(s)) throw Error(ErrorCode::kNotGraphical, to_string(s));
  return s;
}

std::string type_list(const std::vector<TypedComponent>& types) {
  std::string out;
  for (const auto& t : types) {
    if (!out.empty()) out += " o ";
    out += to_string(t);
  }
  return out;
}

int cmd_decompose(const Options& o, bool compact_form, std::ostream& out) {
  const Decomposition d = decompose(graphical_input(o));
  if (compact_form) {
    const CompactDecomposition c = compact(d);
    out << (o.json ? compact_to_json(c).dump() : compact_to_text(c)) << '\n';
  } else {
    out << (o.json ? decomposition_to_json(d).dump() : decomposition_to_text(d)) << '\n';
  }
  return kExitOk;
}

int cmd_split(const Options& o, std::ostream& out) {
  const SplitClass sc = determine_split(graphical_input(o));
  if (o.json) {
    out << split_to_json(sc).dump() << '\n';
  } else {
    out << to_string(sc.kind);
    if (sc.paired) out << ' ' << to_string(*sc.paired);
    out << '\n';
  }
  return kExitOk;
}

int cmd_is_unigraph(const Options& o, std::ostream& out) {
  const UnigraphResult r = is_unigraph(graphical_input(o));
  if (o.json) {
    out << unigraph_report_to_json(r.report).dump() << '\n';
    return kExitOk;
  }
  if (!r.report.is_unigraph) {
    out << "not a unigraph\n";
    return kExitDomain;
  }
  out << "unigraph: " << type_list(r.report.component_types) << '\n';
  return kExitOk;
}

// Components separated by '|'. A head is "k;s" or a split type tag; the
// last entry may also be a plain sequence or any tag.
int cmd_compose(const Options& o, std::ostream& out) {
  std::vector<std::string> parts;
  std::stringstream in(o.components);
  for (std::string item; std::getline(in, item, '|');) parts.push_back(trim(item));
  if (parts.empty() || std::any_of(parts.begin(), parts.end(), [](const auto& p) { return p.empty(); })) {
    throw CLI::ValidationError("components", "expected a '|'-separated component list");
  }
  auto is_tag = [](const std::string& p) {
    return std::any_of(p.begin(), p.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)); });
  };
  std::vector<PairedDegreeSequence> heads;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    const PairedDegreeSequence ps = is_tag(parts[i]) ? type_to_paired(parse_type(parts[i]))
                                                     : parse_paired(parts[i]);
    if (!is_valid_paired(ps)) throw Error(ErrorCode::kInvalidPartition, to_string(ps));
    heads.push_back(ps);
  }
  const std::string& last = parts.back();
  DegreeSequence tail;
  if (is_tag(last)) {
    tail = type_degree_sequence(parse_type(last));
  } else if (last.find(';') != std::string::npos) {
    const PairedDegreeSequence ps = parse_paired(last);
    if (!is_valid_paired(ps)) throw Error(ErrorCode::kInvalidPartition, to_string(ps));
    tail = ps.merged();
  } else {
    tail = parse_sequence(last);
    if (!is_graphical(tail)) throw Error(ErrorCode::kNotGraphical, to_string(tail));
  }
  const DegreeSequence s = compose_all(heads, tail);
  if (o.json) {
    out << Json{{"sequence", to_string(s)}}.dump() << '\n';
  } else {
    out << to_string(s) << '\n';
  }
  return kExitOk;
}

int cmd_params(const Options& o, std::ostream& out) {
  out << params_to_json(compute_params(graphical_input(o))).dump() << '\n';
  return kExitOk;
}

std::optional<std::set<Base>> parse_bases(const std::string& list) {
  if (list.empty()) return std::nullopt;
  std::set<Base> bases;
  std::stringstream in(list);
  for (std::string name; std::getline(in, name, ',');) {
    name = trim(name);
    bool found = false;
    for (int b = 0; b <= static_cast<int>(Base::kEmptyBlock); ++b) {
      if (base_name(static_cast<Base>(b)) == name) {
        bases.insert(static_cast<Base>(b));
        found = true;
      }
    }
    if (!found) throw CLI::ValidationError("--types", "unknown type '" + name + "'");
  }
  return bases;
}

int cmd_generate(const Options& o, std::ostream& out) {
  GenSpec spec;
  spec.n = o.n;
  spec.k = o.k;
  spec.allowed = parse_bases(o.types);
  for (Count i = 0; i < o.count; ++i) {
    spec.seed = o.seed + static_cast<std::uint64_t>(i);
    const auto types = generate(spec);
    Json line;
    line["sequence"] = to_string(compose_types(types));
    Json tags = Json::array();
    for (const auto& t : types) tags.push_back(to_string(t));
    line["components"] = std::move(tags);
    out << line.dump() << '\n';
  }
  return kExitOk;
}

int cmd_realize(const Options& o, std::ostream& out) {
  const Graph g = realize(graphical_input(o));
  if (o.json) {
    out << graph_to_json(g).dump() << '\n';
  } else {
    out << to_edge_list(g);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  verify::Outcome result;
  if (o.check == "unigraph") {
    result = verify::unigraph(o.max_n);
  } else if (o.check == "params") {
    result = verify::params(o.max_n);
  } else {
    result = verify::fixdist(o.max_n);
  }
  out << verify::outcome_to_json(result).dump() << '\n';
  return result.ok ? kExitOk : kExitDomain;
}

void add_input(CLI::App* sub, Options& o, bool paired) {
  sub->add_option("-d,--degrees", o.degrees, "Degree sequence, e.g. 4^2,2^3");
  sub->add_option("--file", o.file, "File with a sequence, edge list or JSON graph");
  if (paired) sub->add_flag("--paired", o.paired, "Input is a paired sequence k;s");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical decomposition and unigraph tools for degree sequences", "unigraph"};
  app.require_subcommand(1);
  Options o;

  auto* decompose_cmd = app.add_subcommand("decompose", "Canonical decomposition");
  add_input(decompose_cmd, o, true);
  decompose_cmd->add_flag("--compact", o.compact, "Print the compact form");
  auto* compact_cmd = app.add_subcommand("compact", "Compact canonical decomposition");
  add_input(compact_cmd, o, true);
  auto* split_cmd = app.add_subcommand("split", "Split class and KS-partition");
  add_input(split_cmd, o, true);
  auto* unigraph_cmd = app.add_subcommand("is-unigraph", "Unigraph recognition and types");
  add_input(unigraph_cmd, o, true);
  auto* compose_cmd = app.add_subcommand("compose", "Compose components into a sequence");
  compose_cmd->add_option("components", o.components, "Heads then tail, separated by '|'")->required();
  auto* params_cmd = app.add_subcommand("params", "omega, alpha, beta, chi, fix, dist");
  add_input(params_cmd, o, true);
  auto* generate_cmd = app.add_subcommand("generate", "Random unigraph sequences");
  generate_cmd->add_option("--n", o.n, "Order")->check(CLI::Range(Count{1}, Count{1} << 40));
  generate_cmd->add_option("--k", o.k, "Number of components")->check(CLI::PositiveNumber);
  generate_cmd->add_option("--seed", o.seed, "Seed of the first draw");
  generate_cmd->add_option("--count", o.count, "Number of draws")->check(CLI::NonNegativeNumber);
  generate_cmd->add_option("--types", o.types, "Allowed bases, e.g. spq,s2,c5");
  auto* realize_cmd = app.add_subcommand("realize", "Havel-Hakimi realization");
  add_input(realize_cmd, o, true);
  auto* verify_cmd = app.add_subcommand("verify", "Differential check against the oracle");
  verify_cmd->add_option("check", o.check, "unigraph, params or fixdist")
      ->required()
      ->check(CLI::IsMember({"unigraph", "params", "fixdist"}));
  verify_cmd->add_option("--max-n", o.max_n, "Largest order")->check(CLI::Range(Count{1}, Count{9}));

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", o.json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (decompose_cmd->parsed()) return cmd_decompose(o, o.compact, out);
    if (compact_cmd->parsed()) return cmd_decompose(o, true, out);
    if (split_cmd->parsed()) return cmd_split(o, out);
    if (unigraph_cmd->parsed()) return cmd_is_unigraph(o, out);
    if (compose_cmd->parsed()) return cmd_compose(o, out);
    if (params_cmd->parsed()) return cmd_params(o, out);
    if (generate_cmd->parsed()) return cmd_generate(o, out);
    if (realize_cmd->parsed()) return cmd_realize(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kParse ? kExitUsage : kExitDomain;
  }
  return kExitUsage;
}

}  // namespace unigraph::cli
