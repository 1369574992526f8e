#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "mimick/bounds.hpp"
#include "mimick/errors.hpp"
#include "mimick/graph_io.hpp"
#include "mimick/mimicking.hpp"
#include "mimick/terminal_cuts.hpp"
#include "mimick/tree.hpp"

namespace mimick::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

CapGraph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

Rational parse_flag_rational(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--") + flag + ": " + e.what());
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Same vertex names, terminal list and capacities per vertex pair,
// regardless of vertex and edge order.
bool same_graph(const CapGraph& a, const CapGraph& b) {
  if (a.terminal_names() != b.terminal_names()) return false;
  auto names_a = a.vertex_names();
  auto names_b = b.vertex_names();
  std::sort(names_a.begin(), names_a.end());
  std::sort(names_b.begin(), names_b.end());
  if (names_a != names_b) return false;
  auto edge_map = [](const CapGraph& g) {
    std::map<std::pair<std::string, std::string>, Rational> m;
    for (const auto& e : g.edges()) {
      auto key = std::minmax(g.name(e.u), g.name(e.v));
      m[{key.first, key.second}] = e.cap;
    }
    return m;
  };
  return edge_map(a) == edge_map(b);
}

struct SparsifyArgs {
  std::string input, output, mapping, report;
};

int cmd_sparsify(const SparsifyArgs& a, std::ostream& out) {
  CapGraph g = load_graph(a.input);
  auto fam = cut_family(g);
  auto mn = build_mimicking_network(g, fam);
  auto report = verify_mimicking(g, mn);
  Json report_json = report_to_json(g, report);

  write_file(a.output, serialize_graph(mn.h));
  if (!a.mapping.empty()) write_file(a.mapping, render(partition_to_json(g, mn.map)));
  if (!a.report.empty()) write_file(a.report, render(report_json));
  out << render(report_json);
  return report.pass ? kOk : kFailed;
}

struct VerifyArgs {
  std::string graph, sparsifier, mapping;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  CapGraph g = load_graph(a.graph);
  CapGraph h = load_graph(a.sparsifier);
  auto report = verify_sparsifier(g, h);
  Json doc = report_to_json(g, report);
  bool pass = report.pass;
  if (!a.mapping.empty()) {
    auto part = partition_from_json(g, parse_json(read_file(a.mapping)));
    bool consistent = same_graph(contract(g, part), h);
    doc["mapping_consistent"] = consistent;
    pass = pass && consistent;
    doc["pass"] = pass;
  }
  out << render(doc);
  return pass ? kOk : kFailed;
}

int cmd_mtcv(const std::string& input, std::ostream& out) {
  auto values = mtcv(load_graph(input));
  out << render(rationals_to_json(values));
  return kOk;
}

struct TreeArgs {
  std::string input, output;
  bool no_clamp = false;
};

void emit_graph(const CapGraph& g, const std::string& output, const Json& metadata, std::ostream& out) {
  if (output.empty()) {
    out << render(Json{{"graph", graph_to_json(g)}, {"metadata", metadata}});
  } else {
    write_file(output, serialize_graph(g));
    out << render(metadata);
  }
}

int cmd_tree_reduce(const TreeArgs& a, std::ostream& out) {
  CapGraph t = load_graph(a.input);
  CapGraph reduced = reduce_tree(t);
  const std::size_t bound = 2 * t.terminal_count() - 1;
  Json meta{{"vertices", reduced.vertex_count()}, {"size_bound", std::to_string(bound)}};
  emit_graph(reduced, a.output, meta, out);
  return reduced.vertex_count() <= bound ? kOk : kFailed;
}

int cmd_tree_cactus(const TreeArgs& a, std::ostream& out) {
  CapGraph t = load_graph(a.input);
  auto cactus = y_delta_reduce(ternarize(t), YDeltaOptions{!a.no_clamp});
  emit_graph(cactus.graph, a.output, cactus_metadata(cactus), out);
  bool ok = cactus.is_cactus && cactus.graph.vertex_count() <= cactus_size_bound(t.terminal_count());
  return ok ? kOk : kFailed;
}

struct GadgetArgs {
  std::size_t k = 0;
  std::string terminals, subset, epsilon, output;
};

int cmd_gadget(const GadgetArgs& a, std::ostream& out) {
  std::vector<std::string> names = a.terminals.empty() ? default_terminal_names(a.k) : split_list(a.terminals);
  if (a.k != 0 && names.size() != a.k) throw InputError("--k disagrees with --terminals");
  if (names.size() < 2) throw InputError("at least two terminals required");
  // Resolve the subset against an edgeless graph on the terminals.
  CapGraph shell = CapGraph::create(names, names, {});
  auto subset = TerminalSubset::from_names(shell, split_list(a.subset));
  std::size_t index = canonical_position(subset, names.size());
  CapGraph g = gadget_graph(names, index, parse_flag_rational(a.epsilon, "epsilon"));
  if (a.output.empty()) {
    out << serialize_graph(g);
  } else {
    write_file(a.output, serialize_graph(g));
    out << render(Json{{"index", index + 1}, {"mtcv", rationals_to_json(mtcv(g))}});
  }
  return kOk;
}

struct CombineArgs {
  std::string g1, g2, lambda, output;
};

int cmd_combine(const CombineArgs& a, std::ostream& out) {
  CapGraph g = convex_combine(load_graph(a.g1), load_graph(a.g2), parse_flag_rational(a.lambda, "lambda"));
  if (a.output.empty()) {
    out << serialize_graph(g);
  } else {
    write_file(a.output, serialize_graph(g));
    out << render(Json{{"mtcv", rationals_to_json(mtcv(g))}});
  }
  return kOk;
}

struct BoundsArgs {
  std::size_t k = 0;
  std::size_t samples = 20;
  std::uint64_t seed = 1;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  std::vector<BoundRow> rows;
  if (a.k != 0) {
    rows.push_back(bound_row(a.k, a.samples, a.seed));
  } else {
    for (std::size_t k = 2; k <= 6; ++k) rows.push_back(bound_row(k, a.samples, a.seed));
  }
  bool ok = true;
  Json doc = Json::array();
  for (const auto& r : rows) {
    ok = ok && r.observed_n_max <= r.z;
    doc.push_back(bound_row_to_json(r));
  }
  out << render(a.k != 0 ? doc.front() : doc);
  return ok ? kOk : kFailed;
}

int cmd_optimality(const std::string& input, std::ostream& out) {
  CapGraph g = load_graph(input);
  std::size_t brute = min_contraction_size_bruteforce(g);
  std::size_t built = build_mimicking_network(g).cluster_count;
  bool unique = has_unique_min_terminal_cuts(g);
  out << render(Json{{"builder_clusters", built},
                     {"min_contraction_clusters", brute},
                     {"unique_cuts", unique},
                     {"optimal", built == brute}});
  return unique && built != brute ? kFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cut sparsifiers (mimicking networks) for graphs with terminals"};
  app.name(args.empty() ? "mimick" : args.front());
  app.require_subcommand(1);
  std::function<int(std::ostream&)> action;

  SparsifyArgs sp;
  auto* sparsify = app.add_subcommand("sparsify", "Build and self-verify a mimicking network");
  sparsify->add_option("--input", sp.input, "Graph JSON")->required();
  sparsify->add_option("--output", sp.output, "Sparsifier graph JSON to write")->required();
  sparsify->add_option("--mapping", sp.mapping, "Vertex partition JSON to write");
  sparsify->add_option("--report", sp.report, "Verification report JSON to write");
  sparsify->callback([&] { action = [&](std::ostream& o) { return cmd_sparsify(sp, o); }; });

  VerifyArgs ve;
  auto* verify = app.add_subcommand("verify", "Compare all minimum terminal cuts of two graphs");
  verify->add_option("--graph", ve.graph, "Original graph JSON")->required();
  verify->add_option("--sparsifier", ve.sparsifier, "Sparsifier graph JSON")->required();
  verify->add_option("--mapping", ve.mapping, "Vertex partition JSON; its contraction must equal the sparsifier");
  verify->callback([&] { action = [&](std::ostream& o) { return cmd_verify(ve, o); }; });

  std::string mtcv_input;
  auto* mtcv_cmd = app.add_subcommand("mtcv", "Print the minimum terminal cut vector");
  mtcv_cmd->add_option("--input", mtcv_input, "Graph JSON")->required();
  mtcv_cmd->callback([&] { action = [&](std::ostream& o) { return cmd_mtcv(mtcv_input, o); }; });

  TreeArgs tr;
  auto* tree = app.add_subcommand("tree", "Tree constructions");
  tree->require_subcommand(1);
  auto* reduce = tree->add_subcommand("reduce", "Prune and splice a tree to at most 2k-1 vertices");
  reduce->add_option("--input", tr.input, "Tree graph JSON")->required();
  reduce->add_option("--output", tr.output, "Reduced tree JSON to write");
  reduce->callback([&] { action = [&](std::ostream& o) { return cmd_tree_reduce(tr, o); }; });
  auto* cactus = tree->add_subcommand("cactus", "Star-triangle reduction of a tree to a cactus");
  cactus->add_option("--input", tr.input, "Tree graph JSON")->required();
  cactus->add_option("--output", tr.output, "Cactus graph JSON to write");
  cactus->add_flag("--no-clamp", tr.no_clamp, "Skip leg clamping (may produce negative capacities)");
  cactus->callback([&] { action = [&](std::ostream& o) { return cmd_tree_cactus(tr, o); }; });

  GadgetArgs ga;
  auto* gadget = app.add_subcommand("gadget", "Two-hub gadget graph for one cut index");
  gadget->add_option("--k", ga.k, "Number of terminals (named a, b, c, ...)");
  gadget->add_option("--terminals", ga.terminals, "Comma-separated terminal names");
  gadget->add_option("--subset", ga.subset, "Comma-separated terminals on the U side")->required();
  gadget->add_option("--epsilon", ga.epsilon, "Rational epsilon, e.g. 1/4")->required();
  gadget->add_option("--output", ga.output, "Graph JSON to write");
  gadget->callback([&] { action = [&](std::ostream& o) { return cmd_gadget(ga, o); }; });

  CombineArgs co;
  auto* combine = app.add_subcommand("combine", "Convex combination of two graphs on the same terminals");
  combine->add_option("--g1", co.g1, "First graph JSON")->required();
  combine->add_option("--g2", co.g2, "Second graph JSON")->required();
  combine->add_option("--lambda", co.lambda, "Weight of the first graph, rational in [0,1]")->required();
  combine->add_option("--output", co.output, "Graph JSON to write");
  combine->callback([&] { action = [&](std::ostream& o) { return cmd_combine(co, o); }; });

  BoundsArgs bo;
  auto* bounds = app.add_subcommand("bounds", "Antichain bounds on the cluster count");
  bounds->add_option("--k", bo.k, "Single row for k terminals (2..6); all rows when omitted");
  bounds->add_option("--samples", bo.samples, "Random graphs per row for observed_N_max");
  bounds->add_option("--seed", bo.seed, "Random seed");
  bounds->callback([&] { action = [&](std::ostream& o) { return cmd_bounds(bo, o); }; });

  std::string opt_input;
  auto* optimality = app.add_subcommand("optimality", "Compare builder size with the best contraction");
  optimality->add_option("--input", opt_input, "Graph JSON (at most 8 vertices)")->required();
  optimality->callback([&] { action = [&](std::ostream& o) { return cmd_optimality(opt_input, o); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }

  std::ostringstream buffer;
  try {
    int code = action(buffer);
    out << buffer.str();
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace mimick::cli
