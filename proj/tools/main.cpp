// cubemedian: batch analyzer for cube complexes presented as median graphs.
//
// Exit codes: 0 success; 1 a checked property failed (witness in the output
// document); 2 invalid input document; 3 a resource cap was exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cubemedian/action.hpp"
#include "cubemedian/dot_export.hpp"
#include "cubemedian/errors.hpp"
#include "cubemedian/fixtures.hpp"
#include "cubemedian/json_io.hpp"

namespace cm = cubemedian;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw cm::Error(cm::ErrorCode::InvalidDocument, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw cm::Error(cm::ErrorCode::InvalidDocument, "cannot write '" + out_path + "'");
  out << content;
}

int exit_code_for(cm::ErrorCode code) {
  switch (code) {
    case cm::ErrorCode::TooLarge:
      return 3;
    case cm::ErrorCode::InvalidDocument:
    case cm::ErrorCode::EmptyHalfspace:
    case cm::ErrorCode::NotAPartition:
    case cm::ErrorCode::DuplicateWall:
    case cm::ErrorCode::NotSubalgebra:
    case cm::ErrorCode::NotAutomorphism:
    case cm::ErrorCode::MismatchedComplex:
      return 2;
    default:
      return 1;
  }
}

struct CheckFailure : std::runtime_error {
  explicit CheckFailure(std::string doc)
      : std::runtime_error("check failed"), output(std::move(doc)) {}
  std::string output;
};

std::string resolve_relative(const std::string& base_path, const std::string& ref) {
  if (ref.empty() || ref.front() == '/' || base_path == "-") return ref;
  auto slash = base_path.find_last_of('/');
  if (slash == std::string::npos) return ref;
  return base_path.substr(0, slash + 1) + ref;
}

cm::Subalgebra load_subalgebra(const std::string& path) {
  cm::SubalgebraDoc doc = cm::parse_subalgebra_doc(read_input(path));
  cm::Graph graph;
  if (std::holds_alternative<std::string>(doc.graph))
    graph = cm::parse_graph_doc(read_input(resolve_relative(path, std::get<std::string>(doc.graph))));
  else
    graph = std::get<cm::Graph>(doc.graph);
  auto g = std::make_shared<cm::MedianGraph>(cm::MedianGraph::verify(std::move(graph)));
  cm::Bits members(g->vertex_count());
  for (const auto& name : doc.members) {
    int v = -1;
    for (int i = 0; i < g->vertex_count(); ++i)
      if (g->name(i) == name) {
        v = i;
        break;
      }
    if (v < 0)
      throw cm::Error(cm::ErrorCode::InvalidDocument, "member '" + name + "' is not a vertex");
    members.set(v);
  }
  return cm::Subalgebra::verified(g, std::move(members));
}

long long checked_window(const cm::ProductIsometry& iso, long long requested) {
  return requested > 0 ? requested : cm::default_window_radius(iso);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cube complexes as median graphs: cubulation, medians, isometries"};
  app.require_subcommand(1);

  std::string in_path, in_path2, in_path3, out_path;
  long long window = 0;
  int max_m = 0;

  auto* validate = app.add_subcommand("validate", "validate a wallspace document");
  validate->add_option("wallspace", in_path)->required();
  validate->add_option("-o,--output", out_path);

  auto* cubulate_cmd = app.add_subcommand("cubulate", "dual cube complex of a wallspace");
  cubulate_cmd->add_option("wallspace", in_path)->required();
  cubulate_cmd->add_option("-o,--output", out_path);
  std::size_t max_vertices = std::size_t{1} << 20;
  cubulate_cmd->add_option("--max-vertices", max_vertices, "orientation cap");

  auto* check_median = app.add_subcommand("check-median", "verify the median axioms of a graph");
  check_median->add_option("graph", in_path)->required();
  check_median->add_option("-o,--output", out_path);

  auto* walls = app.add_subcommand("walls", "induced and intrinsic walls of a subalgebra");
  walls->add_option("subalgebra", in_path)->required();
  walls->add_option("-o,--output", out_path);
  int member_cap = 24;
  walls->add_option("--member-cap", member_cap, "intrinsic enumeration cap");

  auto* classify_cmd = app.add_subcommand("classify", "elliptic / inverting / loxodromic");
  classify_cmd->add_option("complex", in_path)->required();
  classify_cmd->add_option("isometry", in_path2)->required();
  classify_cmd->add_option("-o,--output", out_path);
  classify_cmd->add_option("--window", window, "brute-force verification window radius");

  auto* minset_cmd = app.add_subcommand("minset", "translation length and minset");
  minset_cmd->add_option("complex", in_path)->required();
  minset_cmd->add_option("isometry", in_path2)->required();
  minset_cmd->add_option("-o,--output", out_path);
  minset_cmd->add_option("--window", window);

  auto* axis_cmd = app.add_subcommand("axis", "axis fundamental domain of a loxodromic");
  axis_cmd->add_option("complex", in_path)->required();
  axis_cmd->add_option("isometry", in_path2)->required();
  axis_cmd->add_option("-o,--output", out_path);
  axis_cmd->add_option("--window", window);

  auto* subdivide_cmd = app.add_subcommand("subdivide", "first cubical subdivision");
  subdivide_cmd->add_option("input", in_path, "graph or product complex document")->required();
  std::vector<std::string> iso_paths;
  subdivide_cmd->add_option("--isometry", iso_paths, "isometries to transport (product input)");
  subdivide_cmd->add_option("-o,--output", out_path);

  auto* factorize_cmd = app.add_subcommand("factorize", "finest product decomposition");
  factorize_cmd->add_option("graph", in_path)->required();
  factorize_cmd->add_option("-o,--output", out_path);

  auto* common_power = app.add_subcommand("common-power", "smallest m with Min g meeting Min h^m");
  common_power->add_option("complex", in_path)->required();
  common_power->add_option("g_isometry", in_path2)->required();
  common_power->add_option("h_isometry", in_path3)->required();
  common_power->add_option("-o,--output", out_path);
  common_power->add_option("--max-m", max_m, "power search bound");

  auto* norm_check = app.add_subcommand("norm-check", "discrete-norm certificate for an action");
  norm_check->add_option("action", in_path)->required();
  norm_check->add_option("-o,--output", out_path);
  long long power_cap = 4;
  int max_exp = 3;
  std::string words_path;
  norm_check->add_option("--power-cap", power_cap, "homogeneity power bound");
  norm_check->add_option("--max-exp", max_exp, "exponent bound of the default word sample");
  norm_check->add_option("--words", words_path, "explicit word list document");

  auto* fixture_cmd = app.add_subcommand("fixture", "built-in inputs");
  std::string fixture_name;
  bool fixture_check = false, fixture_list = false;
  fixture_cmd->add_option("name", fixture_name);
  fixture_cmd->add_flag("--check", fixture_check, "run the fixture's claims");
  fixture_cmd->add_flag("--list", fixture_list, "list fixture names");
  fixture_cmd->add_option("-o,--output", out_path);

  auto* export_dot_cmd = app.add_subcommand("export-dot", "Graphviz export with class colors");
  export_dot_cmd->add_option("graph", in_path)->required();
  std::string map_path;
  export_dot_cmd->add_option("--map", map_path, "automorphism; its displacement argmin is marked");
  export_dot_cmd->add_option("-o,--output", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      cm::Wallspace w = cm::parse_wallspace_doc(read_input(in_path));
      write_output(out_path, cm::wallspace_validation_doc(w));
    } else if (*cubulate_cmd) {
      cm::Wallspace w = cm::parse_wallspace_doc(read_input(in_path));
      cm::CubulateOptions opts;
      opts.max_vertices = max_vertices;
      cm::CubulationResult r = cm::cubulate(w, opts);
      write_output(out_path, cm::cubulation_doc(w, r));
    } else if (*check_median) {
      cm::Graph g = cm::parse_graph_doc(read_input(in_path));
      try {
        cm::MedianGraph mg = cm::MedianGraph::verify(g);
        write_output(out_path, cm::median_check_doc(mg));
      } catch (const cm::NotMedianError& e) {
        throw CheckFailure(cm::median_check_failure_doc(g, e));
      }
    } else if (*walls) {
      cm::Subalgebra y = load_subalgebra(in_path);
      auto induced = cm::induced_walls(y);
      auto intrinsic = cm::intrinsic_walls(y, member_cap);
      auto agree = cm::check_lemma_agree(y, member_cap);
      std::string doc = cm::walls_doc(y, induced, intrinsic, agree);
      if (!agree.ok) throw CheckFailure(doc);
      write_output(out_path, doc);
    } else if (*classify_cmd || *minset_cmd || *axis_cmd) {
      cm::ProductComplexPtr pc = cm::parse_product_complex_doc(read_input(in_path));
      cm::ProductIsometry iso = cm::parse_isometry_doc(read_input(in_path2), pc);
      if (*classify_cmd) {
        cm::Classification c = cm::classify(iso);
        if (window > 0 &&
            cm::window_min_displacement(iso, checked_window(iso, window)) != c.norm)
          throw CheckFailure(cm::error_doc(
              "WindowMismatch", "window minimum differs from the computed norm"));
        write_output(out_path, cm::classification_doc(iso, c));
      } else if (*minset_cmd) {
        cm::MinsetReport r = cm::minset(iso);
        if (window > 0) {
          long long rad = checked_window(iso, window);
          for (const auto& x : cm::minset_window_points(iso, rad)) {
            bool finite_ok =
                std::binary_search(r.finite_part_min.begin(), r.finite_part_min.end(),
                                   x.finite_vertex);
            if (!finite_ok || !r.grid_part_min.contains(x.grid))
              throw CheckFailure(cm::error_doc(
                  "WindowMismatch", "window minset point escapes the constraint set"));
          }
        }
        write_output(out_path, cm::minset_doc(iso, r));
      } else {
        cm::AxisPath a = cm::axis_of(iso);
        write_output(out_path, cm::axis_doc(iso, a));
      }
    } else if (*subdivide_cmd) {
      std::string text = read_input(in_path);
      bool is_product = text.find("\"grid_rank\"") != std::string::npos;
      if (is_product) {
        cm::ProductComplexPtr pc = cm::parse_product_complex_doc(text);
        cm::SubdividedProduct sub = cm::subdivide_complex(pc);
        std::vector<cm::ProductIsometry> transported;
        for (const auto& p : iso_paths)
          transported.push_back(sub.transport(cm::parse_isometry_doc(read_input(p), pc)));
        write_output(out_path, cm::subdivided_product_doc(sub, transported));
      } else {
        cm::MedianGraph g = cm::MedianGraph::verify(cm::parse_graph_doc(text));
        cm::Subdivision sub = cm::subdivide(g);
        write_output(out_path, cm::subdivided_graph_doc(g, sub));
      }
    } else if (*factorize_cmd) {
      cm::MedianGraph g = cm::MedianGraph::verify(cm::parse_graph_doc(read_input(in_path)));
      cm::Factorization f = cm::factorize(g);
      write_output(out_path, cm::factorization_doc(g, f));
    } else if (*common_power) {
      cm::ProductComplexPtr pc = cm::parse_product_complex_doc(read_input(in_path));
      cm::ProductIsometry g = cm::parse_isometry_doc(read_input(in_path2), pc);
      cm::ProductIsometry h = cm::parse_isometry_doc(read_input(in_path3), pc);
      int bound = max_m > 0 ? max_m : cm::default_max_power(h);
      cm::CommonPowerResult r = cm::common_min_power(g, h, bound);
      std::string doc = cm::common_power_doc(g, r);
      if (!r.found) throw CheckFailure(doc);
      write_output(out_path, doc);
    } else if (*norm_check) {
      cm::AbelianAction a = cm::parse_action_doc(read_input(in_path));
      cm::WordList words = words_path.empty()
                               ? cm::default_word_sample(a.generator_count(), max_exp)
                               : cm::parse_word_list(read_input(words_path), a.generator_names);
      cm::DiscreteNormReport rep = cm::certify_discrete_norm(a, words, power_cap);
      std::cerr << cm::norm_report_table(rep);
      std::string doc = cm::norm_report_doc(rep);
      if (!rep.all_ok()) throw CheckFailure(doc);
      write_output(out_path, doc);
    } else if (*fixture_cmd) {
      if (fixture_list || fixture_name.empty()) {
        std::string out;
        for (const auto& n : cm::fixture_names()) out += n + "\n";
        write_output(out_path, out);
        return 0;
      }
      cm::Fixture f = cm::build_fixture(fixture_name);
      if (!fixture_check) {
        write_output(out_path, cm::fixture_doc(f));
        return 0;
      }
      if (fixture_name == "paper-example" || fixture_name == "paper-example-free") {
        cm::PaperExampleReport rep = cm::run_paper_example_checks(*f.action);
        std::string doc = cm::paper_example_doc(*f.action, rep);
        if (!rep.ok()) throw CheckFailure(doc);
        write_output(out_path, doc);
      } else if (f.is_action) {
        cm::WordList words = cm::default_word_sample(static_cast<int>(f.action->generators.size()));
        cm::DiscreteNormReport rep = cm::certify_discrete_norm(*f.action, words);
        std::string doc = cm::norm_report_doc(rep);
        if (!rep.all_ok()) throw CheckFailure(doc);
        write_output(out_path, doc);
      } else if (fixture_name == "six-cycle") {
        // expected to fail the median check, with a witness triple
        try {
          cm::MedianGraph::verify(f.graph);
          throw CheckFailure(cm::error_doc("Unexpected", "six-cycle verified as median"));
        } catch (const cm::NotMedianError& e) {
          if (!e.has_witness())
            throw CheckFailure(cm::error_doc("Unexpected", "no witness triple reported"));
          write_output(out_path, cm::median_check_failure_doc(f.graph, e));
        }
      } else {
        cm::MedianGraph mg = cm::MedianGraph::verify(f.graph);
        write_output(out_path, cm::median_check_doc(mg));
      }
    } else if (*export_dot_cmd) {
      cm::Graph raw = cm::parse_graph_doc(read_input(in_path));
      cm::MedianGraph g = cm::MedianGraph::verify(raw);
      std::vector<int> marked;
      if (!map_path.empty()) {
        std::vector<int> phi = cm::parse_vertex_map_doc(read_input(map_path), raw);
        cm::check_automorphism(raw, g.adjacency(), phi);
        int best = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
          int d = g.distance(v, phi[v]);
          if (best < 0 || d < best) best = d;
        }
        for (int v = 0; v < g.vertex_count(); ++v)
          if (g.distance(v, phi[v]) == best) marked.push_back(v);
      }
      write_output(out_path, cm::export_dot(g, marked));
    }
  } catch (const CheckFailure& f) {
    write_output(out_path, f.output);
    return 1;
  } catch (const cm::Error& e) {
    std::cerr << cm::error_doc(cm::error_code_name(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << cm::error_doc("Internal", e.what());
    return 1;
  }
  return 0;
}
