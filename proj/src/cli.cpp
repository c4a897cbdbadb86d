#include "lid/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include "lid/errors.hpp"
#include "lid/generators.hpp"
#include "lid/graph_io.hpp"
#include "lid/lid_layers.hpp"
#include "lid/lid_product.hpp"
#include "lid/lid_treedepth.hpp"
#include "lid/oracle.hpp"
#include "lid/treedepth.hpp"
#include "lid/verifier.hpp"

namespace lid {

namespace {

struct Settings {
  std::string graph_path;
  std::string coloring_path;
  std::string strategy = "treedepth";
  std::string family;
  std::string measure;
  std::string out_path;
  std::string record_path;
  std::string forest_path;
  std::string classes_path;
  std::string layer_colorer = "auto";
  std::string proper_colorer = "auto";
  std::size_t n = 0;
  std::size_t max_colors = 0;
  std::size_t minor_bound = 0;
  std::uint64_t seed = 0;
  bool debug_trace = false;
};

// Writes to --out when given, otherwise to `fallback`.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw parse_error(0, "cannot write " + path);
  body(file);
}

void print_report(std::ostream& out, const LidReport& report) {
  for (const Edge& e : report.improper_edges) out << "improper " << e.u << ' ' << e.v << '\n';
  for (const Edge& e : report.unseparated_edges) out << "unseparated " << e.u << ' ' << e.v << '\n';
  out << (report.valid() ? "valid" : "invalid") << " colors " << report.colors_used << '\n';
}

int cmd_verify(const Settings& s, std::ostream& out) {
  Graph g = load_graph(s.graph_path);
  Coloring c = load_coloring(s.coloring_path, g.vertex_count());
  LidReport report = verify_lid(g, c);
  print_report(out, report);
  return report.valid() ? exit_ok : exit_invalid;
}

struct ColorOutcome {
  Coloring coloring;
  std::size_t bound = 0;
  std::vector<std::string> trace;
};

ColorOutcome color_with(const Graph& g, const Settings& s) {
  ColorOutcome r;
  if (s.strategy == "treedepth") {
    EliminationForest t = !s.forest_path.empty()        ? load_forest(s.forest_path, g.vertex_count())
                          : g.vertex_count() <= 20 ? treedepth_exact(g).witness
                                                   : heuristic_forest(g);
    r.coloring = lid_color_td(g, t, TdColoringOptions{s.debug_trace, 20});
    r.bound = t.height() == 0 ? 0 : 2 * t.height() - 1;
  } else if (s.strategy == "product") {
    LowTdColoring classes = !s.classes_path.empty()
                                ? LowTdColoring::from_coloring(load_coloring(s.classes_path, g.vertex_count()))
                                : LowTdColoring::from_coloring(chi_td_p_exact(g, 3).witness);
    r.coloring = lid_color_product(g, classes).coloring;
    r.bound = product_color_bound(classes.class_count);
  } else if (s.strategy == "layers") {
    static const std::map<std::string, LayerColorer> layer_names{{"auto", LayerColorer::automatic},
                                                                 {"brute", LayerColorer::brute},
                                                                 {"treedepth", LayerColorer::treedepth},
                                                                 {"recursive", LayerColorer::recursive}};
    static const std::map<std::string, ProperColorer> proper_names{
        {"auto", ProperColorer::automatic}, {"exact", ProperColorer::exact}, {"dsatur", ProperColorer::dsatur}};
    LayersOptions options;
    options.layer_colorer = layer_names.at(s.layer_colorer);
    options.proper_colorer = proper_names.at(s.proper_colorer);
    if (s.minor_bound > 0) options.minor_bound = s.minor_bound;
    options.debug_checks = s.debug_trace;
    options.debug_trace = s.debug_trace;
    LayersColoring layered = lid_color_layers(g, options);
    r.coloring = layered.coloring;
    r.bound = layered.accounting.bound;
    r.trace = std::move(layered.trace);
  } else {
    std::optional<std::size_t> limit;
    if (s.max_colors > 0) limit = s.max_colors;
    OracleResult best = chi_lid_exact(g, limit);
    if (best.exceeded_limit) return r;  // empty coloring: nothing within the limit
    r.coloring = best.witness;
    r.bound = best.value;
  }
  return r;
}

int cmd_color(const Settings& s, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(s.graph_path);
  const auto start = std::chrono::steady_clock::now();
  ColorOutcome r = color_with(g, s);
  const auto millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  if (r.coloring.size() != g.vertex_count()) {
    err << "no lid-coloring with at most " << s.max_colors << " colors\n";
    return exit_invalid;
  }
  for (const std::string& line : r.trace) err << line << '\n';

  // always re-verify what is about to be emitted
  const LidReport report = verify_lid(g, r.coloring);
  const std::size_t colors = report.colors_used;
  const bool bound_ok = colors <= r.bound && (s.max_colors == 0 || colors <= s.max_colors);

  emit(s.out_path, out, [&](std::ostream& os) { write_coloring(os, r.coloring); });

  nlohmann::ordered_json record{{"graph", s.graph_path}, {"strategy", s.strategy}, {"colors", colors},
                                {"valid", report.valid()}, {"bound_ok", bound_ok},  {"millis", millis},
                                {"seed", s.seed}};
  if (!s.record_path.empty()) {
    std::ofstream file(s.record_path, std::ios::app);
    if (!file) throw parse_error(0, "cannot write " + s.record_path);
    file << record.dump() << '\n';
  } else {
    (s.out_path.empty() ? err : out) << record.dump() << '\n';
  }
  if (!report.valid()) {
    print_report(err, report);
    return exit_invalid;
  }
  return exit_ok;
}

int cmd_gen(const Settings& s, std::ostream& out) {
  const std::size_t n = s.n;
  Graph g;
  if (s.family == "hn") {
    g = generate_hn(n).graph;
  } else if (s.family == "path") {
    g = path_graph(n);
  } else if (s.family == "cycle") {
    g = cycle_graph(n);
  } else if (s.family == "clique") {
    g = complete_graph(n);
  } else if (s.family == "star") {
    g = star_graph(n);
  } else if (s.family == "tree") {
    g = random_tree(n, s.seed);
  } else if (s.family == "outerplanar") {
    g = random_outerplanar(n, s.seed);
  } else if (s.family == "planar-grid") {
    g = grid_graph(n);
  } else {
    g = random_apollonian(n, s.seed);
  }
  emit(s.out_path, out, [&](std::ostream& os) { write_graph(os, g); });
  return exit_ok;
}

int cmd_stats(const Settings& s, std::ostream& out) {
  Graph g = load_graph(s.graph_path);
  if (s.measure == "treedepth") {
    TreedepthResult r = treedepth_exact(g);
    out << "treedepth " << r.depth << '\n';
    if (!s.out_path.empty()) emit(s.out_path, out, [&](std::ostream& os) { write_forest(os, r.witness); });
    return exit_ok;
  }
  OracleResult r;
  if (s.measure == "chi") {
    r = chi_exact(g);
  } else if (s.measure == "chi-lid") {
    std::optional<std::size_t> limit;
    if (s.max_colors > 0) limit = s.max_colors;
    r = chi_lid_exact(g, limit);
  } else {
    r = chi_td_p_exact(g, 3);
  }
  if (r.exceeded_limit) {
    out << s.measure << " >" << s.max_colors << '\n';
    return exit_ok;
  }
  out << s.measure << ' ' << r.value << '\n';
  if (!s.out_path.empty()) emit(s.out_path, out, [&](std::ostream& os) { write_coloring(os, r.witness); });
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Locally identifying colorings: constructions, verifier and exact oracles", "lidcol"};
  app.require_subcommand(1);
  Settings s;

  auto* verify = app.add_subcommand("verify", "check a coloring file against a graph file");
  verify->add_option("graph", s.graph_path, "edge-list file")->required();
  verify->add_option("coloring", s.coloring_path, "coloring file")->required();

  auto* color = app.add_subcommand("color", "build a lid-coloring");
  color->add_option("graph", s.graph_path, "edge-list file")->required();
  color->add_option("--strategy", s.strategy)
      ->check(CLI::IsMember({"treedepth", "product", "layers", "brute"}))
      ->capture_default_str();
  color->add_option("--out", s.out_path, "coloring output file");
  color->add_option("--record", s.record_path, "append the run record to this JSON-lines file");
  color->add_option("--seed", s.seed, "recorded with the run");
  color->add_option("--max-colors", s.max_colors, "color limit for brute");
  color->add_option("--forest", s.forest_path, "elimination forest for treedepth");
  color->add_option("--classes", s.classes_path, "low tree-depth class file for product");
  color->add_option("--layer-colorer", s.layer_colorer)
      ->check(CLI::IsMember({"auto", "brute", "treedepth", "recursive"}))
      ->capture_default_str();
  color->add_option("--proper-colorer", s.proper_colorer)
      ->check(CLI::IsMember({"auto", "exact", "dsatur"}))
      ->capture_default_str();
  color->add_option("--minor-bound", s.minor_bound, "claimed K_n-minor-freeness for layers");
  color->add_flag("--debug-trace", s.debug_trace, "run construction self-checks and print the case trace");

  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->add_option("--family", s.family)
      ->required()
      ->check(CLI::IsMember({"hn", "path", "cycle", "clique", "star", "tree", "outerplanar", "planar-grid",
                             "apollonian"}));
  gen->add_option("--n", s.n, "size (side length for planar-grid)")->required();
  gen->add_option("--seed", s.seed)->capture_default_str();
  gen->add_option("--out", s.out_path, "graph output file");

  auto* stats = app.add_subcommand("stats", "exact parameters with witnesses");
  stats->add_option("graph", s.graph_path, "edge-list file")->required();
  stats->add_option("measure", s.measure)->required()->check(CLI::IsMember({"treedepth", "chi", "chi-lid", "chi-td3"}));
  stats->add_option("--max-colors", s.max_colors, "color limit for chi-lid");
  stats->add_option("--out", s.out_path, "witness output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return exit_input;
  }

  try {
    if (verify->parsed()) return cmd_verify(s, out);
    if (color->parsed()) return cmd_color(s, out, err);
    if (gen->parsed()) return cmd_gen(s, out);
    return cmd_stats(s, out);
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_input;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const capacity_error& e) {
    err << "capacity: " << e.what() << '\n';
    return exit_capacity;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_invalid;
  }
}

}  // namespace lid
