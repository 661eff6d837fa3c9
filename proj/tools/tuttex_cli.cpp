// command line front end: exact Tutte polynomial evaluation, coefficient
// extraction, decomposition-preserving graph transforms, and the forest
// compatibility rank report; text or JSON output

#include <CLI11.hpp>
#include <json.hpp>

#include <tuttex/compat_matrix.hpp>
#include <tuttex/curve.hpp>
#include <tuttex/decomposition.hpp>
#include <tuttex/errors.hpp>
#include <tuttex/forest_dp.hpp>
#include <tuttex/general_dp.hpp>
#include <tuttex/graph.hpp>
#include <tuttex/linalg.hpp>
#include <tuttex/oracle.hpp>
#include <tuttex/partition.hpp>
#include <tuttex/rational.hpp>
#include <tuttex/special_curves.hpp>
#include <tuttex/transforms.hpp>

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

namespace tx = tuttex;
using nlohmann::ordered_json;

namespace {

struct verify_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += ' ';
    s += argv[i];
  }
  return s;
}

struct Inputs {
  tx::Multigraph g{0};
  tx::DecompositionSet ds;
};

Inputs load_inputs(const std::string& graph_path, const std::string& td_path,
                   const std::string& cut_path) {
  Inputs in;
  in.g = tx::load_gr(graph_path);
  if (!td_path.empty()) {
    tx::TreeDecomposition td = tx::load_td(td_path);
    auto v = tx::validate(td, in.g);
    if (!v.ok) throw tx::parse_error("tree decomposition rejected: " + v.witness);
    in.ds.tree = td;
    if (td.is_path()) in.ds.path = td;
  } else {
    in.ds.tree = tx::trivial_decomposition(in.g);
  }
  if (!cut_path.empty()) {
    tx::CutOrder cut = tx::load_cut_order(cut_path, in.g.vertex_count());
    auto v = tx::validate_cut(cut, in.g);
    if (!v.ok) throw tx::parse_error("cut order rejected: " + v.witness);
    in.ds.cut = cut;
  }
  return in;
}

std::string widths_text(const tx::Multigraph& g, const tx::DecompositionSet& ds) {
  std::string s = "tree=" + std::to_string(ds.tree.width());
  s += " path=" + (ds.path ? std::to_string(ds.path->width()) : std::string("-"));
  s += " cut=" + (ds.cut ? std::to_string(tx::cut_order_width(*ds.cut, g)) : std::string("-"));
  return s;
}

ordered_json widths_json(const tx::Multigraph& g, const tx::DecompositionSet& ds) {
  ordered_json w;
  w["tree"] = ds.tree.width();
  if (ds.path) w["path"] = ds.path->width();
  if (ds.cut) w["cut"] = tx::cut_order_width(*ds.cut, g);
  return w;
}

struct EvalOptions {
  std::string graph, td, cut;
  std::vector<std::string> point;
  std::string algorithm = "auto";
  bool verify = false;
  bool json = false;
};

// table sizes grow at least exponentially in the bag size, so refuse widths
// that cannot possibly fit in memory instead of thrashing; partition-keyed
// tables blow up much earlier than the parity route's bitmask table, the
// coloring table carries its own entry-count guard, and the closed form and
// the subset oracle need no table at all
constexpr int max_partition_width = 12;
constexpr int max_parity_width = 19;

void check_dp_width(const Inputs& in, int cap) {
  int width = in.ds.tree.width();
  if (width > cap)
    throw tx::resource_error("decomposition width " + std::to_string(width) +
                             " exceeds the exact-table limit " + std::to_string(cap) +
                             "; supply a narrower --td");
}

int run_eval(const EvalOptions& opt, const std::string& echo) {
  auto start = Clock::now();
  Inputs in = load_inputs(opt.graph, opt.td, opt.cut);
  tx::Rational x = tx::parse_rational(opt.point[0]);
  tx::Rational y = tx::parse_rational(opt.point[1]);

  std::string used = opt.algorithm;
  tx::Rational value;
  if (opt.algorithm == "auto") {
    tx::Rational alpha = (x - 1) * (y - 1);
    if (alpha == 2 && y != -1)
      check_dp_width(in, max_parity_width);
    else if (alpha != 1)
      check_dp_width(in, max_partition_width);
    tx::EvalRoute route;
    value = tx::evaluate_point(in.g, in.ds, x, y, &route);
    used = tx::route_name(route);
  } else if (opt.algorithm == "general") {
    check_dp_width(in, max_partition_width);
    auto nd = tx::make_nice(in.ds.tree, in.g);
    value = tx::tutte_from_counts(tx::general_dp(in.g, nd), in.g, x, y);
  } else if (opt.algorithm == "forest") {
    if (y != 1) throw tx::inapplicable_error("the forest route needs a point with y = 1");
    check_dp_width(in, max_partition_width);
    auto nd = tx::make_nice(in.ds.tree, in.g);
    if (x == 1) {
      value = tx::curve_y1_restriction(in.g, nd).evaluate(1);
    } else {
      tx::Rational u = x - 1;
      int rank = in.g.vertex_count() - in.g.component_count();
      value = tx::rational_pow(u, rank) * tx::count_forests(in.g, nd, 1 / u);
    }
  } else if (opt.algorithm == "ising") {
    check_dp_width(in, max_parity_width);
    value = tx::tutte_on_h2(in.g, tx::make_nice(in.ds.tree, in.g), x, y);
  } else if (opt.algorithm == "coloring") {
    if (y != 0 || x.get_den() != 1 || x > 0)
      throw tx::inapplicable_error("the coloring route needs a point (1-q, 0) with integer q >= 1");
    tx::Rational qr = 1 - x;
    long q = qr.get_num().get_si();
    value = tx::tutte_chromatic_point(in.g, tx::make_nice(in.ds.tree, in.g), static_cast<int>(q));
  } else {  // oracle
    value = tx::brute_tutte(in.g, x, y);
  }

  bool verified = false;
  if (opt.verify) {
    if (in.g.edge_count() > 20)
      throw tx::resource_error("--verify runs the oracle only up to 20 edges; graph has " +
                               std::to_string(in.g.edge_count()));
    tx::Rational ref = tx::brute_tutte(in.g, x, y);
    if (ref != value)
      throw verify_mismatch("computed " + tx::to_string(value) + " but the oracle says " +
                            tx::to_string(ref));
    verified = true;
  }

  if (opt.json) {
    ordered_json out;
    out["command"] = echo;
    out["algorithm"] = used;
    out["point"] = {tx::to_string(x), tx::to_string(y)};
    out["value"] = tx::to_string(value);
    out["widths"] = widths_json(in.g, in.ds);
    if (opt.verify) out["verified"] = verified;
    out["wall_ms"] = elapsed_ms(start);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "command: " << echo << "\n";
    std::cout << "algorithm: " << used << "\n";
    std::cout << "widths: " << widths_text(in.g, in.ds) << "\n";
    std::cout << "T(G; " << tx::to_string(x) << ", " << tx::to_string(y)
              << ") = " << tx::to_string(value) << "\n";
    if (verified) std::cout << "verified against oracle\n";
    std::cout << "wall_ms: " << elapsed_ms(start) << "\n";
  }
  return 0;
}

struct CoeffsOptions {
  std::string graph, td, cut;
  bool json = false;
};

int run_coeffs(const CoeffsOptions& opt, const std::string& echo) {
  auto start = Clock::now();
  Inputs in = load_inputs(opt.graph, opt.td, opt.cut);
  check_dp_width(in, max_partition_width);
  auto nd = tx::make_nice(in.ds.tree, in.g);
  tx::TutteCoefficients tc = tx::tutte_coefficients(tx::general_dp(in.g, nd), in.g);

  if (opt.json) {
    ordered_json out;
    out["command"] = echo;
    out["algorithm"] = "general";
    out["polynomial"] = tc.to_string();
    ordered_json coeffs = ordered_json::array();
    for (std::size_t i = 0; i < tc.coeff.size(); ++i)
      for (std::size_t j = 0; j < tc.coeff[i].size(); ++j)
        if (tc.coeff[i][j] != 0)
          coeffs.push_back({i, j, tx::to_string(tc.coeff[i][j])});
    out["coefficients"] = coeffs;
    out["widths"] = widths_json(in.g, in.ds);
    out["wall_ms"] = elapsed_ms(start);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "command: " << echo << "\n";
    std::cout << "algorithm: general\n";
    std::cout << "widths: " << widths_text(in.g, in.ds) << "\n";
    std::cout << "T(G) = " << tc.to_string() << "\n";
    std::cout << "wall_ms: " << elapsed_ms(start) << "\n";
  }
  return 0;
}

struct TransformOptions {
  std::string graph, td, cut;
  std::string op;
  int k = 1;
  std::string out_graph, out_td, out_cut;
  bool json = false;
};

int run_transform(const TransformOptions& opt, const std::string& echo) {
  auto start = Clock::now();
  Inputs in = load_inputs(opt.graph, opt.td, opt.cut);

  tx::TransformResult out;
  if (opt.op == "stretch")
    out = tx::k_stretch(in.g, in.ds, opt.k);
  else if (opt.op == "thicken")
    out = tx::k_thicken(in.g, in.ds, opt.k);
  else
    out = tx::insulated_k_thicken(in.g, in.ds, opt.k);

  tx::save_gr(out.graph, opt.out_graph);
  if (!opt.out_td.empty()) tx::save_td(out.tree, opt.out_td);
  if (!opt.out_cut.empty()) {
    if (!out.cut)
      throw tx::inapplicable_error("no cut order to write: provide one with --cut");
    tx::save_cut_order(*out.cut, opt.out_cut);
  }

  tx::DecompositionSet out_ds{out.tree, out.path, out.cut};
  if (opt.json) {
    ordered_json rep;
    rep["command"] = echo;
    rep["operation"] = out.provenance;
    rep["input"] = {{"vertices", in.g.vertex_count()},
                    {"edges", in.g.edge_count()},
                    {"widths", widths_json(in.g, in.ds)}};
    rep["output"] = {{"vertices", out.graph.vertex_count()},
                     {"edges", out.graph.edge_count()},
                     {"widths", widths_json(out.graph, out_ds)}};
    ordered_json files = ordered_json::array();
    files.push_back(opt.out_graph);
    if (!opt.out_td.empty()) files.push_back(opt.out_td);
    if (!opt.out_cut.empty()) files.push_back(opt.out_cut);
    rep["wrote"] = files;
    rep["wall_ms"] = elapsed_ms(start);
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << "command: " << echo << "\n";
    std::cout << "operation: " << out.provenance << "\n";
    std::cout << "input: n=" << in.g.vertex_count() << " m=" << in.g.edge_count()
              << " widths: " << widths_text(in.g, in.ds) << "\n";
    std::cout << "output: n=" << out.graph.vertex_count() << " m=" << out.graph.edge_count()
              << " widths: " << widths_text(out.graph, out_ds) << "\n";
    std::cout << "wrote " << opt.out_graph << "\n";
    if (!opt.out_td.empty()) std::cout << "wrote " << opt.out_td << "\n";
    if (!opt.out_cut.empty()) std::cout << "wrote " << opt.out_cut << "\n";
    std::cout << "wall_ms: " << elapsed_ms(start) << "\n";
  }
  return 0;
}

struct RankOptions {
  int n = 1;
  bool dump = false;
  bool json = false;
};

int run_rank(const RankOptions& opt, const std::string& echo) {
  auto start = Clock::now();
  tx::CompatMatrix cm = tx::compat_matrix(opt.n);
  tx::Integer bell = tx::bell_number(opt.n);
  tx::Integer catalan = tx::catalan_number(opt.n);
  int rank = tx::compat_rank(cm);

  // the noncrossing rows alone must already span: their rank equals the full rank
  std::vector<int> ground(static_cast<std::size_t>(opt.n));
  for (int i = 0; i < opt.n; ++i) ground[static_cast<std::size_t>(i)] = i + 1;
  tx::Matrix nc_rows;
  for (std::size_t i = 0; i < cm.parts.size(); ++i)
    if (cm.parts[i].is_noncrossing(ground))
      nc_rows.emplace_back(cm.entries[i].begin(), cm.entries[i].end());
  bool basis_ok = tx::Integer(static_cast<long>(nc_rows.size())) == catalan &&
                  static_cast<int>(tx::matrix_rank(nc_rows)) == rank &&
                  tx::Integer(rank) == catalan;

  if (opt.json) {
    ordered_json out;
    out["command"] = echo;
    out["n"] = opt.n;
    out["bell"] = bell.get_str();
    out["catalan"] = catalan.get_str();
    out["rank"] = rank;
    out["basis"] = basis_ok ? "OK" : "FAIL";
    if (opt.dump) out["matrix"] = tx::dump_matrix(cm);
    out["wall_ms"] = elapsed_ms(start);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "command: " << echo << "\n";
    std::cout << "bell " << bell.get_str() << "\n";
    std::cout << "catalan " << catalan.get_str() << "\n";
    std::cout << "rank " << rank << "\n";
    std::cout << "basis " << (basis_ok ? "OK" : "FAIL") << "\n";
    if (opt.dump) std::cout << tx::dump_matrix(cm);
    std::cout << "wall_ms: " << elapsed_ms(start) << "\n";
  }
  return basis_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Tutte polynomial computations on graphs of bounded width"};
  app.require_subcommand(1);

  EvalOptions eval_opt;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate T(G; x, y) at a rational point");
  eval_cmd->add_option("graph", eval_opt.graph, "input graph (.gr)")->required();
  eval_cmd->add_option("--td", eval_opt.td, "tree decomposition (.td)");
  eval_cmd->add_option("--cut", eval_opt.cut, "cut order file");
  eval_cmd->add_option("--point", eval_opt.point, "x y as integers or fractions p/q")
      ->expected(2)
      ->required();
  eval_cmd
      ->add_option("--algorithm", eval_opt.algorithm,
                   "auto|general|forest|ising|coloring|oracle")
      ->check(CLI::IsMember({"auto", "general", "forest", "ising", "coloring", "oracle"}));
  eval_cmd->add_flag("--verify", eval_opt.verify, "cross-check against the oracle (<= 20 edges)");
  eval_cmd->add_flag("--json", eval_opt.json, "emit a JSON report");

  CoeffsOptions coeffs_opt;
  CLI::App* coeffs_cmd = app.add_subcommand("coeffs", "full bivariate coefficient table");
  coeffs_cmd->add_option("graph", coeffs_opt.graph, "input graph (.gr)")->required();
  coeffs_cmd->add_option("--td", coeffs_opt.td, "tree decomposition (.td)");
  coeffs_cmd->add_option("--cut", coeffs_opt.cut, "cut order file");
  coeffs_cmd->add_flag("--json", coeffs_opt.json, "emit a JSON report");

  TransformOptions tr_opt;
  CLI::App* tr_cmd = app.add_subcommand("transform", "stretch / thicken / insulated-thicken");
  tr_cmd->add_option("graph", tr_opt.graph, "input graph (.gr)")->required();
  tr_cmd->add_option("--td", tr_opt.td, "tree decomposition (.td)");
  tr_cmd->add_option("--cut", tr_opt.cut, "cut order file");
  tr_cmd->add_option("--op", tr_opt.op, "stretch|thicken|insulated")
      ->required()
      ->check(CLI::IsMember({"stretch", "thicken", "insulated"}));
  tr_cmd->add_option("--k", tr_opt.k, "transform parameter k >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  tr_cmd->add_option("--out-graph", tr_opt.out_graph, "output graph path")->required();
  tr_cmd->add_option("--out-td", tr_opt.out_td, "output tree decomposition path");
  tr_cmd->add_option("--out-cut", tr_opt.out_cut, "output cut order path");
  tr_cmd->add_flag("--json", tr_opt.json, "emit a JSON report");

  RankOptions rank_opt;
  CLI::App* rank_cmd = app.add_subcommand("rank", "forest compatibility matrix rank report");
  rank_cmd->add_option("--n", rank_opt.n, "ground set size (1..6)")
      ->required()
      ->check(CLI::Range(1, 6));
  rank_cmd->add_flag("--dump", rank_opt.dump, "print the full 0/1 matrix");
  rank_cmd->add_flag("--json", rank_opt.json, "emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    if (code == 0) return 0;
    std::cerr << "parse error: invalid command line\n";
    return 2;
  }

  std::string echo = join_args(argc, argv);
  try {
    if (eval_cmd->parsed()) return run_eval(eval_opt, echo);
    if (coeffs_cmd->parsed()) return run_coeffs(coeffs_opt, echo);
    if (tr_cmd->parsed()) return run_transform(tr_opt, echo);
    if (rank_cmd->parsed()) return run_rank(rank_opt, echo);
  } catch (const tx::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const tx::inapplicable_error& e) {
    std::cerr << "inapplicable: " << e.what() << "\n";
    return 3;
  } catch (const verify_mismatch& e) {
    std::cerr << "verification mismatch: " << e.what() << "\n";
    return 4;
  } catch (const tx::resource_error& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 5;
  }
  return 0;
}
