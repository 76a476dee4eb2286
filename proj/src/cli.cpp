#include "imsets/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "imsets/error.hpp"
#include "imsets/graph_io.hpp"
#include "imsets/imset.hpp"
#include "imsets/mpd.hpp"
#include "imsets/separation.hpp"
#include "imsets/standard.hpp"

namespace imsets::cli {
namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

MixedGraph load_graph(const std::string& path, const RunConfig& cfg) {
  MixedGraph g = parse_graph(read_text(path));
  if (g.order() > cfg.max_universe) {
    throw GuardExceeded("graph '" + path + "' has " + std::to_string(g.order()) +
                        " vertices; the universe guard is " + std::to_string(cfg.max_universe) +
                        " (raise with --max-universe or IMSETS_MAX_UNIVERSE)");
  }
  return g;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void add_imset(Report& r, const Imset& u, const Labels& labels, const std::string& section = "imset") {
  for (const std::string& l : split_lines(format_imset(u, labels))) r.line(section, l);
}

void add_graph(Report& r, const MixedGraph& g, const std::string& section = "graph") {
  for (const std::string& l : split_lines(format_graph(g))) r.line(section, l);
}

MixedGraph random_chain_graph(const LabelsPtr& labels, bool undirected_only, std::mt19937_64& rng) {
  const int n = labels->size();
  std::vector<int> layer(static_cast<std::size_t>(n), 0);
  if (!undirected_only) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int& l : layer) l = pick(rng);
  }
  MixedGraph::Builder b(labels, labels->all());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng() % 2 == 0) continue;
      const int li = layer[static_cast<std::size_t>(i)], lj = layer[static_cast<std::size_t>(j)];
      if (li == lj) {
        b.add_undirected(i, j);
      } else if (li < lj) {
        b.add_directed(i, j);
      } else {
        b.add_directed(j, i);
      }
    }
  }
  return std::move(b).build();
}

}  // namespace

std::string render(const Report& r, OutputMode mode) {
  std::ostringstream out;
  if (mode == OutputMode::KeyValue) {
    for (const auto& [k, v] : r.facts) out << k << '=' << v << '\n';
    for (const auto& [k, v] : r.lines) out << k << '=' << v << '\n';
    return out.str();
  }
  if (r.bare && r.facts.size() == 1 && r.lines.empty()) {
    out << r.facts.front().second << '\n';
    return out.str();
  }
  const char* prefix = r.lines.empty() ? "" : "# ";
  for (const auto& [k, v] : r.facts) out << prefix << k << ": " << v << '\n';
  const bool headers = std::any_of(r.lines.begin(), r.lines.end(),
                                  [&](const auto& l) { return l.first != r.lines.front().first; });
  std::string section;
  for (const auto& [k, v] : r.lines) {
    if (headers && k != section) out << "# " << k << '\n';
    section = k;
    out << v << '\n';
  }
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format = "text";

  CLI::App app{"Standard imsets of undirected, acyclic directed and chain graphs", "imsets"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--max-universe", cfg.max_universe, "Largest accepted vertex count")
      ->envname("IMSETS_MAX_UNIVERSE")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-per-component", cfg.guards.max_per_component,
                 "Most minimal triangulations of one mp-component")
      ->envname("IMSETS_MAX_PER_COMPONENT")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-product", cfg.guards.max_product, "Most minimal triangulations of a whole graph")
      ->envname("IMSETS_MAX_PRODUCT")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", format, "Output mode")
      ->envname("IMSETS_FORMAT")
      ->check(CLI::IsMember({"text", "kv"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for selfcheck")->envname("IMSETS_SEED")->capture_default_str();

  std::string graph_path;
  std::vector<std::string> graph_paths;
  std::string triplet_text, variant = "cg", method, upper, lower, imset_path, vertices;
  bool all = false, count = false, want_degree = false, want_decompose = false, oracle = false;
  bool elementary = false;
  int sample_vertices = 5, sample_count = 20;
  std::string sample_kind = "cg";

  auto* decompose = app.add_subcommand("decompose", "Maximal prime decomposition of an undirected graph");
  decompose->add_option("--graph", graph_path, "Graph file")->required();

  auto* triangulate = app.add_subcommand("triangulate", "Minimal triangulations of an undirected or chain graph");
  triangulate->add_option("--graph", graph_path, "Graph file")->required();
  auto* all_flag = triangulate->add_flag("--all", all, "Print every triangulation (default)");
  triangulate->add_flag("--count", count, "Print only the number of triangulations")->excludes(all_flag);

  auto* imset = app.add_subcommand("imset", "Read, build and decompose imsets");
  auto* file_opt = imset->add_option("--file", imset_path, "Imset in text form ('-' for stdin)");
  auto* triplet_opt = imset->add_option("--triplet", triplet_text, "Semi-elementary imset of A|B|C");
  imset->add_option("--vertices", vertices, "Comma-separated label table for --triplet or --file");
  file_opt->excludes(triplet_opt);
  auto* degree_flag = imset->add_flag("--degree", want_degree, "Print only the degree");
  imset->add_flag("--decompose", want_decompose, "Print one decomposition into elementary imsets")
      ->excludes(degree_flag);

  auto* standard = app.add_subcommand("standard-imset", "Standard imset of a graph");
  standard->add_option("--graph", graph_path, "Graph file")->required();
  standard->add_option("--variant", variant, "Construction")
      ->check(CLI::IsMember({"dag", "decomposable", "ug", "cg", "v"}))
      ->capture_default_str();
  standard->add_flag("--degree", want_degree, "Also report the degree");

  auto* ci = app.add_subcommand("ci-test", "Test A _||_ B | C against the standard imset");
  ci->add_option("--graph", graph_path, "Chain graph file")->required();
  ci->add_option("--triplet", triplet_text, "A|B|C with comma-separated labels")->required();
  ci->add_flag("--oracle", oracle, "Cross-check against graph separation");

  auto* equiv = app.add_subcommand("equiv", "Markov equivalence of two chain graphs");
  equiv->add_option("--graph", graph_paths, "Graph file (twice)")->required()->expected(2);
  method = "imset";
  equiv->add_option("--method", method, "Decision procedure")
      ->check(CLI::IsMember({"imset", "frydenberg"}))
      ->capture_default_str();

  auto* merge = app.add_subcommand("merge", "Feasible merging of a meta-arrow upper => lower");
  merge->add_option("--graph", graph_path, "Chain graph file")->required();
  merge->add_option("--upper", upper, "Upper chain component")->required();
  merge->add_option("--lower", lower, "Lower chain component")->required();

  auto* largest = app.add_subcommand("largest", "Largest chain graph in the equivalence class");
  largest->add_option("--graph", graph_path, "Chain graph file")->required();

  auto* model = app.add_subcommand("model", "Independence model of a chain graph");
  model->add_option("--graph", graph_path, "Chain graph file")->required();
  model->add_flag("--elementary", elementary, "Only triplets with singleton A and B");
  std::string model_method = "separation";
  model->add_option("--method", model_method, "Separation criterion or imset test")
      ->check(CLI::IsMember({"separation", "imset"}))
      ->capture_default_str();

  auto* selfcheck = app.add_subcommand("selfcheck", "Compare imset tests with separation on random graphs");
  selfcheck->add_option("--vertices", sample_vertices, "Vertices per graph")
      ->check(CLI::Range(2, 6))
      ->capture_default_str();
  selfcheck->add_option("--count", sample_count, "Number of graphs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  selfcheck->add_option("--kind", sample_kind, "Graph class")
      ->check(CLI::IsMember({"ug", "cg"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  cfg.mode = format == "kv" ? OutputMode::KeyValue : OutputMode::Text;

  Report r;
  int status = kOk;
  try {
    if (*decompose) {
      const MixedGraph g = load_graph(graph_path, cfg);
      require_ug(g, "decompose");
      const MpDecomposition d = mpd_decompose(g);
      const Labels& lb = g.labels();
      r.fact("components", std::to_string(d.components.size()));
      r.fact("separators", std::to_string(d.separators.size()));
      r.fact("decomposable", yes_no(is_decomposable(g)));
      for (VertexSet c : d.components) r.line("component", lb.format(c));
      for (const auto& [s, nu] : d.separators) r.line("separator", lb.format(s) + " " + std::to_string(nu));
      std::string seq;
      for (VertexSet c : d.order) seq += (seq.empty() ? "" : " ") + lb.format(c);
      r.line("order", seq);
    } else if (*triangulate) {
      const MixedGraph g = load_graph(graph_path, cfg);
      require_cg(g, "triangulate");
      if (count) {
        const std::size_t n = g.is_ug() ? count_minimal_triangulations(g, cfg.guards)
                                        : cg_minimal_triangulations(g, cfg.guards).size();
        r.fact("count", std::to_string(n));
        r.bare = true;
      } else {
        const auto ts = g.is_ug() ? minimal_triangulations(g, cfg.guards) : cg_minimal_triangulations(g, cfg.guards);
        r.fact("kind", to_string(g.kind()));
        r.fact("count", std::to_string(ts.size()));
        for (std::size_t i = 0; i < ts.size(); ++i) add_graph(r, ts[i], "graph." + std::to_string(i + 1));
      }
    } else if (*imset) {
      Imset u;
      LabelsPtr labels;
      if (!vertices.empty()) {
        std::vector<std::string> names;
        std::istringstream in(vertices);
        for (std::string s; std::getline(in, s, ',');) names.push_back(s);
        labels = make_labels(std::move(names));
      }
      if (!triplet_text.empty()) {
        if (!labels) throw InvalidArgument("--triplet needs --vertices");
        u = semi_elementary(parse_triplet(*labels, triplet_text));
      } else if (!imset_path.empty()) {
        const std::string text = read_text(imset_path);
        if (labels) {
          u = parse_imset(text, *labels);
        } else {
          std::tie(u, labels) = parse_imset(text);
        }
      } else {
        throw InvalidArgument("imset: give --file or --triplet");
      }
      if (labels->size() > cfg.max_universe) throw GuardExceeded("imset universe exceeds --max-universe");
      if (want_degree) {
        const auto d = degree(u);
        r.fact(d ? "degree" : "combinatorial", d ? std::to_string(*d) : "no");
        r.bare = true;
        if (!d) status = kNegative;
      } else if (want_decompose) {
        const auto d = combinatorial_decompose(u);
        r.fact("combinatorial", yes_no(d.has_value()));
        if (d) {
          r.fact("degree", std::to_string(d->degree()));
          for (const Triplet& t : d->terms) r.line("term", format_triplet(*labels, t));
        } else {
          status = kNegative;
        }
      } else {
        r.fact("terms", std::to_string(u.terms().size()));
        add_imset(r, u, *labels);
      }
    } else if (*standard) {
      const MixedGraph g = load_graph(graph_path, cfg);
      Imset u;
      std::string reduction = variant;
      if (variant == "dag") {
        u = standard_imset_dag(g);
      } else if (variant == "decomposable") {
        u = standard_imset_decomposable(g);
      } else if (variant == "ug") {
        u = standard_imset_ug(g, cfg.guards);
      } else if (variant == "v") {
        u = v_imset_ug(g, cfg.guards);
      } else {
        u = standard_imset_cg(g, cfg.guards);
        reduction = to_string(reduction_of(g));
      }
      r.fact("variant", variant);
      r.fact("reduction", reduction);
      if (want_degree) {
        const auto d = degree(u);
        r.fact("degree", d ? std::to_string(*d) : "none");
      }
      add_imset(r, u, g.labels());
    } else if (*ci) {
      const MixedGraph g = load_graph(graph_path, cfg);
      const Triplet t = parse_triplet(g.labels(), triplet_text);
      require_within(g, t.a | t.b | t.c, "ci-test triplet");
      const bool holds = ci_test(standard_imset_cg(g, cfg.guards), t);
      r.fact("triplet", format_triplet(g.labels(), t));
      r.fact("verdict", holds ? "independent" : "not independent");
      if (oracle) {
        const bool sep = cg_separates(g, t);
        r.fact("oracle", sep ? "separated" : "not separated");
        if (sep != holds) {
          throw InvariantViolation("ci-test: imset verdict disagrees with graph separation for " +
                                   format_triplet(g.labels(), t));
        }
      }
      status = holds ? kOk : kNegative;
    } else if (*equiv) {
      const MixedGraph g = load_graph(graph_paths.at(0), cfg);
      const MixedGraph h = load_graph(graph_paths.at(1), cfg);
      const bool eq = method == "imset" ? imset_equivalent(g, h, cfg.guards) : frydenberg_equivalent(g, h);
      r.fact("method", method);
      r.fact("verdict", eq ? "equivalent" : "not equivalent");
      status = eq ? kOk : kNegative;
    } else if (*merge) {
      const MixedGraph g = load_graph(graph_path, cfg);
      const MergeResult m = feasible_merge(g, g.labels().parse_set(upper), g.labels().parse_set(lower));
      r.fact("feasible", yes_no(m.feasible));
      r.fact("condition_i", m.parents_in_upper_clique ? "holds" : "fails");
      r.fact("condition_ii", m.outside_parents_shared ? "holds" : "fails");
      if (m.merged) {
        add_graph(r, *m.merged);
      } else {
        status = kNegative;
      }
    } else if (*largest) {
      const MixedGraph g = load_graph(graph_path, cfg);
      const MixedGraph h = largest_equivalent(g);
      r.fact("directed_edges", std::to_string(h.directed_edges().size()));
      r.fact("undirected_edges", std::to_string(h.undirected_edges().size()));
      add_graph(r, h);
    } else if (*model) {
      const MixedGraph g = load_graph(graph_path, cfg);
      std::vector<Triplet> ts;
      if (model_method == "separation") {
        ts = independence_model(g);
      } else {
        const Imset u = standard_imset_cg(g, cfg.guards);
        for (const Triplet& t : all_triplets(g.vertices())) {
          if (ci_test(u, t)) ts.push_back(t);
        }
      }
      if (elementary) std::erase_if(ts, [](const Triplet& t) { return !t.is_elementary(); });
      r.fact("method", model_method);
      r.fact("triplets", std::to_string(ts.size()));
      for (const Triplet& t : ts) r.line("triplet", format_triplet(g.labels(), t));
    } else if (*selfcheck) {
      std::mt19937_64 rng(cfg.seed);
      const LabelsPtr labels = letter_labels(sample_vertices);
      std::size_t checked = 0, mismatches = 0;
      for (int i = 0; i < sample_count; ++i) {
        const MixedGraph g = random_chain_graph(labels, sample_kind == "ug", rng);
        const Imset u = standard_imset_cg(g, cfg.guards);
        for (const Triplet& t : all_triplets(g.vertices())) {
          ++checked;
          if (ci_test(u, t) != cg_separates(g, t)) {
            ++mismatches;
            err << "mismatch: " << format_triplet(*labels, t) << " in\n" << format_graph(g);
          }
        }
      }
      r.fact("kind", sample_kind);
      r.fact("seed", std::to_string(cfg.seed));
      r.fact("graphs", std::to_string(sample_count));
      r.fact("triplets", std::to_string(checked));
      r.fact("mismatches", std::to_string(mismatches));
      if (mismatches != 0) status = kInvariant;
    }
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << '\n';
    return kGuard;
  } catch (const Overflow& e) {
    err << "overflow: " << e.what() << '\n';
    return kGuard;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  out << render(r, cfg.mode);
  return status;
}

}  // namespace imsets::cli
