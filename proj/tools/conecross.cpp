// conecross: command-line front end.
//
// Exit codes: 0 all verdicts pass, 1 a verdict failed, 2 usage or input error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "conecross/conecross.hpp"

using namespace conecross;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_threads() {
  if (const char* env = std::getenv("CONECROSS_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
    throw UsageError("CONECROSS_THREADS must be a positive integer");
  }
  return 1;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_file(path, text);
}

Multigraph load_graph(const std::string& path) { return graph_from_json(parse_json(read_file(path))); }

std::vector<Vertex> parse_list(const std::string& s) {
  std::vector<Vertex> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("order must be a comma-separated list of vertex ids");
    }
  }
  return out;
}

CyclicOrder order_for(const Multigraph& g, const std::string& spec) {
  if (spec.empty()) return CyclicOrder::identity(g.n());
  auto o = parse_list(spec);
  if (static_cast<int>(o.size()) != g.n()) throw UsageError("order must list every vertex once");
  try {
    return CyclicOrder(o);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

struct GenArgs {
  std::string family, base, other, out;
  int n = 5, k = 3, r = 2, edge = 0, t = 1;
  bool dot = false;
};

Multigraph named_graph(const std::string& name, const GenArgs& a) {
  if (name == "kn") return complete_graph(a.n);
  if (name == "cycle") return cycle_graph(a.n);
  if (name == "fk") return f_graph(a.k);
  if (name == "fig1") return fig1_graph();
  if (name == "fig3") return fig3_graph();
  if (name.empty()) throw UsageError("missing --base");
  return load_graph(name);  // a graph file
}

Multigraph generate(const GenArgs& a) {
  const std::string& f = a.family;
  if (f == "kn" || f == "cycle" || f == "fk" || f == "fig1" || f == "fig3") return named_graph(f, a);
  if (f == "mult") return multiply_edges(named_graph(a.base, a), a.r);
  if (f == "cone") return cone(named_graph(a.base, a));
  if (f == "union") return disjoint_union(named_graph(a.base, a), named_graph(a.other, a));
  if (f == "subdivide") return subdivide_edge(named_graph(a.base, a), a.edge, a.t);
  throw UsageError("unknown family " + f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossing numbers of graphs and their cones"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  std::uint64_t seed = 1;
  app.add_option("--threads", threads, "Worker threads (default: CONECROSS_THREADS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for randomised parts");

  // gen
  GenArgs gen;
  auto* cmd_gen = app.add_subcommand("gen", "Write a graph file");
  cmd_gen->add_option("--family", gen.family, "kn, cycle, fk, fig1, fig3, mult, cone, union, subdivide")->required();
  cmd_gen->add_option("--n", gen.n, "Vertex count for kn and cycle");
  cmd_gen->add_option("--k", gen.k, "Parameter of fk");
  cmd_gen->add_option("--r", gen.r, "Multiplier for mult");
  cmd_gen->add_option("--base", gen.base, "Operand: a family name or a graph file");
  cmd_gen->add_option("--other", gen.other, "Second operand of union");
  cmd_gen->add_option("--edge", gen.edge, "Edge instance for subdivide");
  cmd_gen->add_option("--t", gen.t, "Subdivision vertices");
  cmd_gen->add_option("--out,-o", gen.out, "Output path (default stdout)");
  cmd_gen->add_flag("--dot", gen.dot, "Write DOT instead of JSON");

  // cr
  std::string cr_path, cr_cert_out;
  SolverOptions cr_opts;
  bool cr_cone = false;
  auto* cmd_cr = app.add_subcommand("cr", "Crossing number of a graph (or of its cone)");
  cmd_cr->add_option("graph", cr_path, "Graph file")->required();
  cmd_cr->add_option("--max-k", cr_opts.max_k, "Largest k searched");
  cmd_cr->add_option("--budget-ms", cr_opts.budget_ms, "Wall-clock budget, 0 = none");
  cmd_cr->add_flag("--cone", cr_cone, "Solve the cone of the graph");
  cmd_cr->add_flag("--symmetry", cr_opts.symmetry, "Break symmetry at the root");
  cmd_cr->add_option("--cert-out", cr_cert_out, "Also write the certificate here");

  // book
  std::string book_path, book_order, book_out, book_optimize = "none";
  int book_pages = 1;
  double book_budget = 0;
  bool book_dot = false;
  auto* cmd_book = app.add_subcommand("book", "Book drawings: count or optimise crossings");
  cmd_book->add_option("graph", book_path, "Graph file")->required();
  cmd_book->add_option("--order", book_order, "Spine order, e.g. 0,2,1,3 (default identity)");
  cmd_book->add_option("--pages", book_pages, "1 or 2")->check(CLI::Range(1, 2));
  cmd_book->add_option("--optimize", book_optimize, "none, partition, order or both")
      ->check(CLI::IsMember({"none", "partition", "order", "both"}));
  cmd_book->add_option("--budget-ms", book_budget, "Budget for order searches");
  cmd_book->add_option("--out,-o", book_out, "Book file path");
  cmd_book->add_flag("--dot", book_dot, "Write DOT instead of a book file");

  // convert12
  std::string conv_path, conv_order, conv_out;
  auto* cmd_conv = app.add_subcommand("convert12", "Redraw a 1-page drawing on 2 pages via max-cut");
  cmd_conv->add_option("graph", conv_path, "Graph file")->required();
  cmd_conv->add_option("--order", conv_order, "Spine order (default identity)");
  cmd_conv->add_option("--out,-o", conv_out, "Book file path");

  // bounds
  std::optional<std::int64_t> bounds_k;
  std::vector<std::int64_t> bounds_sweep;
  std::string bounds_graph;
  auto* cmd_bounds = app.add_subcommand("bounds", "Bound report");
  auto* opt_k = cmd_bounds->add_option("--k", bounds_k, "Single k")->check(CLI::NonNegativeNumber);
  auto* opt_sweep = cmd_bounds->add_option("--sweep", bounds_sweep, "Range FROM TO")->expected(2);
  auto* opt_graph = cmd_bounds->add_option("--graph", bounds_graph, "Check the bounds on a graph and its cone");
  opt_k->excludes(opt_sweep)->excludes(opt_graph);
  opt_sweep->excludes(opt_graph);

  // experiment
  std::string exp_name;
  ExperimentOptions exp_opts;
  Cor22Options cor_opts;
  int family_r = 2;
  bool exp_csv = false;
  auto* cmd_exp = app.add_subcommand("experiment", "Reproduction experiments");
  cmd_exp->add_option("name", exp_name, "fs-small, family-points, cor22-suite, hh-table")
      ->required()
      ->check(CLI::IsMember({"fs-small", "family-points", "cor22-suite", "hh-table"}));
  cmd_exp->add_flag("--exhaustive", exp_opts.exhaustive, "Run the optional long searches");
  cmd_exp->add_option("--budget-ms", exp_opts.budget_ms, "Budget per solver call");
  cmd_exp->add_option("--count", cor_opts.count, "cor22-suite instances");
  cmd_exp->add_option("--r-max", family_r, "family-points largest r");
  cmd_exp->add_flag("--csv", exp_csv, "CSV output (fs-small)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (threads == 0) threads = default_threads();

    if (*cmd_gen) {
      Multigraph g = generate(gen);
      emit(gen.dot ? to_dot(g) : dump(graph_to_json(g)), gen.out);
      return 0;
    }

    if (*cmd_cr) {
      Multigraph g = load_graph(cr_path);
      cr_opts.threads = threads;
      cr_opts.seed = seed;
      SolveResult r = cr_cone ? cone_cr(g, cr_opts) : cr_exact(g, cr_opts);
      bool ok = !r.certificate || verify_certificate(cr_cone ? cone(g) : g, *r.certificate).valid;
      std::cout << dump(solve_result_to_json(r));
      if (!cr_cert_out.empty() && r.certificate) write_file(cr_cert_out, dump(certificate_to_json(*r.certificate)));
      return ok ? 0 : 1;
    }

    if (*cmd_book) {
      Multigraph g = load_graph(book_path);
      OrderSearchOptions os;
      os.budget_ms = book_budget;
      os.threads = threads;
      BookDrawing d;
      std::string status = "exact";
      if (book_optimize == "none") {
        d = BookDrawing::one_page(g, order_for(g, book_order));
        d.page_count = book_pages;
      } else if (book_optimize == "partition") {
        if (book_pages != 2) throw UsageError("--optimize partition needs --pages 2");
        d = two_page_fixed_order(g, order_for(g, book_order)).drawing;
      } else if (book_optimize == "order") {
        if (book_pages != 1) throw UsageError("--optimize order is the 1-page search; use both for 2 pages");
        auto r = outerplanar_cr(g, os);
        status = to_string(r.bracket.status);
        d = r.drawing;
      } else {
        if (book_pages != 2) throw UsageError("--optimize both needs --pages 2");
        auto r = two_page_cr(g, os);
        status = to_string(r.bracket.status);
        d = r.drawing;
      }
      emit(book_dot ? to_dot(d.graph, &d.pages) : dump(book_to_json(d)), book_out);
      Json summary{{"crossings", count_crossings(d)}, {"pages", d.page_count}, {"status", status}};
      (book_out.empty() ? std::cerr : std::cout) << dump(summary);
      return 0;
    }

    if (*cmd_conv) {
      Multigraph g = load_graph(conv_path);
      auto r = one_to_two(g, order_for(g, conv_order));
      if (!conv_out.empty()) write_file(conv_out, dump(book_to_json(r.drawing)));
      std::cout << dump(Json{{"k", r.k},
                             {"cut", r.cut},
                             {"crossings", r.crossings},
                             {"bound", r.k / 2.0 - (std::sqrt(8.0 * r.k + 1.0) - 1.0) / 8.0},
                             {"verdict", r.bound_met ? "pass" : "fail"}});
      return r.bound_met ? 0 : 1;
    }

    if (*cmd_bounds) {
      if (bounds_k) {
        std::cout << dump(bound_rows_to_json(bound_report(*bounds_k)));
        return 0;
      }
      if (!bounds_sweep.empty()) {
        if (bounds_sweep[0] < 0 || bounds_sweep[1] < bounds_sweep[0]) throw UsageError("--sweep needs 0 <= FROM <= TO");
        std::vector<BoundRow> rows;
        for (auto k = bounds_sweep[0]; k <= bounds_sweep[1]; ++k) {
          auto part = bound_report(k);
          rows.insert(rows.end(), part.begin(), part.end());
        }
        std::cout << dump(bound_rows_to_json(rows));
        return 0;
      }
      if (!bounds_graph.empty()) {
        Multigraph g = load_graph(bounds_graph);
        SolverOptions so;
        so.threads = threads;
        so.seed = seed;
        auto cr = cr_exact(g, so);
        auto cc = cone_cr(g, so);
        Json out{{"cr", solve_result_to_json(cr)}, {"cone_cr", solve_result_to_json(cc)}};
        bool ok = true;
        if (cr.exact() && cc.exact()) {
          bool t12 = thm12_check(cr.upper, cc.upper);
          out["thm12_check"] = t12;
          ok = ok && t12;
          if (g.is_simple()) {
            bool t41 = cc.upper >= thm41_lower(cr.upper);
            out["thm41_check"] = t41;
            ok = ok && t41;
          } else {
            out["thm41_check"] = "not applicable: multigraph";
          }
        } else {
          out["note"] = "brackets not closed; checks skipped";
        }
        std::cout << dump(out);
        return ok ? 0 : 1;
      }
      throw UsageError("bounds needs --k, --sweep or --graph");
    }

    if (*cmd_exp) {
      exp_opts.threads = threads;
      exp_opts.seed = seed;
      if (exp_name == "fs-small") {
        auto rep = fs_small(exp_opts);
        std::cout << (exp_csv ? to_csv(rep) : dump(to_json(rep)));
        return rep.pass() ? 0 : 1;
      }
      if (exp_name == "family-points") {
        auto rep = family_points(family_r);
        std::cout << dump(to_json(rep));
        return rep.pass() ? 0 : 1;
      }
      if (exp_name == "cor22-suite") {
        cor_opts.seed = seed;
        auto rep = cor22_suite(cor_opts);
        std::cout << dump(to_json(rep));
        return rep.pass() ? 0 : 1;
      }
      auto rep = hh_table(exp_opts);
      std::cout << dump(to_json(rep));
      return rep.pass() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
