#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "z2sum/bounds.hpp"
#include "z2sum/compression.hpp"
#include "z2sum/config.hpp"
#include "z2sum/gf2core.hpp"
#include "z2sum/hopf_stiefel.hpp"
#include "z2sum/isoperimetry.hpp"
#include "z2sum/partitions.hpp"
#include "z2sum/rational.hpp"
#include "z2sum/sumset.hpp"
#include "z2sum/verify.hpp"

using namespace z2sum;

namespace {

constexpr int kExitVerifyFailed = 2;
constexpr int kExitUsage = 64;

constexpr std::array kSubcommands = {"hs",  "minpart",  "harper", "iso-bound", "fk",        "ktilde",
                                     "ab-bound", "construct", "table",  "sum",       "compress", "structure",
                                     "span", "verify"};

void emit_set(const Z2Set& s, const std::string& path) {
  if (path.empty()) {
    write_z2set(std::cout, s);
  } else {
    write_z2set(std::filesystem::path(path), s);
  }
}

std::string flat_to_string(const AffineFlat& f) {
  std::ostringstream out;
  out << f.basepoint << " + <";
  for (std::size_t i = 0; i < f.basis.size(); ++i) out << (i ? "," : "") << f.basis[i];
  out << ">";
  return out.str();
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error("bad coordinate '" + item + "' in index list");
    }
  }
  return out;
}

SearchMode parse_mode(const std::string& s) {
  if (s == "full") return SearchMode::Full;
  if (s == "compressed") return SearchMode::Compressed;
  throw Error("mode must be 'full' or 'compressed'");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && argv[1][0] != '-' &&
      std::none_of(kSubcommands.begin(), kSubcommands.end(), [&](const char* s) { return std::string(s) == argv[1]; })) {
    std::cerr << "unknown subcommand '" << argv[1] << "'\nusage: z2sum <subcommand> [options]\nsubcommands:";
    for (const char* s : kSubcommands) std::cerr << ' ' << s;
    std::cerr << '\n';
    return kExitUsage;
  }

  CLI::App app{"Sumsets of affinely generating subsets of Z_2^n"};
  app.require_subcommand(0, 1);
  bool version = false;
  app.add_flag("--version", version, "print the version and dimension caps");

  int exit_code = 0;

  // hs
  std::uint64_t hs_a = 0, hs_b = 0;
  auto* hs_cmd = app.add_subcommand("hs", "Hopf-Stiefel value a o b");
  hs_cmd->add_option("a", hs_a)->required();
  hs_cmd->add_option("b", hs_b)->required();
  hs_cmd->callback([&] { std::cout << hs(hs_a, hs_b) << '\n'; });

  // minpart
  std::uint64_t mp_a = 0, mp_m = 0;
  std::optional<std::uint64_t> mp_cap;
  auto* mp_cmd = app.add_subcommand("minpart", "minimum pair cost over m-partitions of a");
  mp_cmd->add_option("a", mp_a)->required();
  mp_cmd->add_option("m", mp_m)->required();
  mp_cmd->add_option("--cap", mp_cap, "largest allowed part");
  mp_cmd->callback([&] {
    const auto r = min_pair_cost(mp_a, mp_m, mp_cap);
    std::cout << r.value << ' ' << r.witness.to_string() << '\n';
  });

  // harper
  int h_n = 0;
  std::uint64_t h_size = 0;
  auto* h_cmd = app.add_subcommand("harper", "vertex-boundary lower bound |A + D_1|");
  h_cmd->add_option("n", h_n)->required();
  h_cmd->add_option("size", h_size)->required();
  h_cmd->callback([&] {
    const auto r = harper_bound(h_n, h_size);
    std::cout << "k=" << r.k << " p=" << to_string(r.p) << " bound=" << to_string(r.bound)
              << " count>=" << r.count.get_str() << '\n';
  });

  // iso-bound
  int ib_m = 0;
  std::string ib_avg;
  auto* ib_cmd = app.add_subcommand("iso-bound", "average upper-shadow bound for a downset family");
  ib_cmd->add_option("m", ib_m)->required();
  ib_cmd->add_option("avg", ib_avg, "mean size p/q")->required();
  ib_cmd->callback([&] {
    const auto r = avg_shadow_bound_detail(ib_m, parse_rational(ib_avg));
    std::cout << "k=" << r.k << " p=" << to_string(r.p) << " bound=" << to_string(r.bound) << '\n';
  });

  // fk
  std::string fk_k;
  auto* fk_cmd = app.add_subcommand("fk", "F(K), the largest spanning constant at doubling K");
  fk_cmd->add_option("K", fk_k)->required();
  fk_cmd->callback([&] {
    const Rational f = F_of_K(parse_rational(fk_k));
    std::cout << to_string(f) << " (= " << to_fraction(f) << ")\n";
  });

  // ktilde
  std::uint64_t kt_a = 0, kt_b = 0;
  auto* kt_cmd = app.add_subcommand("ktilde", "smallest doubling at spanning constant 2^a/b");
  kt_cmd->add_option("a", kt_a)->required();
  kt_cmd->add_option("b", kt_b)->required();
  kt_cmd->callback([&] {
    const auto v = Ktilde(kt_a, kt_b);
    std::cout << to_string(v.value) << " (t=" << v.t << " s=" << v.s << ")\n";
  });

  // ab-bound
  int ab_n = 0;
  std::uint64_t ab_a = 0, ab_b = 0;
  std::optional<int> ab_t;
  auto* ab_cmd = app.add_subcommand("ab-bound", "lower bound on |A+B| for generating A");
  ab_cmd->add_option("--n", ab_n)->required();
  ab_cmd->add_option("--a", ab_a)->required();
  ab_cmd->add_option("--b", ab_b)->required();
  ab_cmd->add_option("--t", ab_t, "codimension case to use");
  ab_cmd->callback([&] {
    const auto r = ab_lower_bound(ab_n, ab_a, ab_b, ab_t);
    std::cout << "t=" << r.t << " k=" << r.k << " w=" << to_string(r.w) << " bound=" << to_string(r.bound)
              << " count>=" << r.bound_count.get_str() << '\n';
  });

  // construct
  int c_t = 0, c_s = 0, c_k = 0, c_n = 0;
  std::string c_out;
  auto* c_cmd = app.add_subcommand("construct", "extremal sets");
  c_cmd->require_subcommand(1);
  auto* c_ipe = c_cmd->add_subcommand("ipe", "{0, e_1, ..., e_t}");
  c_ipe->add_option("--t", c_t)->required();
  c_ipe->add_option("-o", c_out);
  c_ipe->callback([&] { emit_set(construct_ipe(c_t), c_out); });
  auto* c_ipe2 = c_cmd->add_subcommand("ipe2", "independent points, partly doubled");
  c_ipe2->add_option("--t", c_t)->required();
  c_ipe2->add_option("--s", c_s)->required();
  c_ipe2->add_option("-o", c_out);
  c_ipe2->callback([&] { emit_set(construct_ipe2(c_t, c_s), c_out); });
  auto* c_ball = c_cmd->add_subcommand("ball", "D_k^t x Z_2^(n-t)");
  c_ball->add_option("--k", c_k)->required();
  c_ball->add_option("--t", c_t)->required();
  c_ball->add_option("--n", c_n)->required();
  c_ball->add_option("-o", c_out);
  c_ball->callback([&] { emit_set(construct_ball(c_k, c_t, c_n), c_out); });

  // table
  std::string tb_curve, tb_from, tb_to, tb_step, tb_csv;
  auto* tb_cmd = app.add_subcommand("table", "sample a curve as CSV");
  tb_cmd->add_option("curve", tb_curve, "F, Ktilde or ab")->required();
  tb_cmd->add_option("--from", tb_from)->required();
  tb_cmd->add_option("--to", tb_to)->required();
  tb_cmd->add_option("--step", tb_step)->required();
  tb_cmd->add_option("--csv", tb_csv, "output path (stdout when omitted)");
  tb_cmd->callback([&] {
    const auto table =
        emit_curve(parse_curve(tb_curve), parse_rational(tb_from), parse_rational(tb_to), parse_rational(tb_step));
    if (tb_csv.empty()) {
      write_csv(std::cout, table);
    } else {
      std::ofstream out(tb_csv);
      if (!out) throw Error("cannot write " + tb_csv);
      write_csv(out, table);
    }
  });

  // sum
  std::string s_a, s_b, s_out, s_method = "auto";
  auto* s_cmd = app.add_subcommand("sum", "A + B of two z2set files");
  s_cmd->add_option("A", s_a)->required();
  s_cmd->add_option("B", s_b)->required();
  s_cmd->add_option("--method", s_method, "auto, naive or transform");
  s_cmd->add_option("-o", s_out);
  s_cmd->callback([&] {
    const Z2Set a = read_z2set(std::filesystem::path(s_a));
    const Z2Set b = read_z2set(std::filesystem::path(s_b));
    Z2Set out;
    if (s_method == "auto") {
      out = sum(a, b);
    } else if (s_method == "naive") {
      out = sum_naive(a, b);
    } else if (s_method == "transform") {
      out = sum_transform(a, b);
    } else {
      throw Error("method must be auto, naive or transform");
    }
    if (s_out.empty()) {
      std::cerr << "|A|=" << a.size() << " |B|=" << b.size() << " |A+B|=" << out.size() << '\n';
    }
    emit_set(out, s_out);
  });

  // compress
  std::string cp_in, cp_out, cp_index;
  bool cp_e = false;
  auto* cp_cmd = app.add_subcommand("compress", "C_I(A), or the <<E>>-compressed fixpoint with --e");
  cp_cmd->add_option("A", cp_in)->required();
  cp_cmd->add_option("--index", cp_index, "coordinates of I, e.g. 1,3");
  cp_cmd->add_flag("--e", cp_e, "compress until <<E>>-compressed");
  cp_cmd->add_option("-o", cp_out);
  cp_cmd->callback([&] {
    const Z2Set a = read_z2set(std::filesystem::path(cp_in));
    if (cp_e == !cp_index.empty()) throw Error("give exactly one of --index and --e");
    const Z2Set out = cp_e ? e_compress(a) : compress(a, index_mask(a.dim(), parse_index_list(cp_index)));
    emit_set(out, cp_out);
  });

  // structure
  std::string st_in;
  auto* st_cmd = app.add_subcommand("structure", "decomposition of an <<E>>-compressed set");
  st_cmd->add_option("A", st_in)->required();
  st_cmd->callback([&] {
    const Z2Set a = read_z2set(std::filesystem::path(st_in));
    const auto check = check_structure(a);
    if (!check.ok()) throw Error("not <<E>>-compressed: " + check.failure);
    const auto r = structure(a);
    std::cout << "h=" << r.h << " m=" << r.m << " |H|=" << r.subgroup.size() << " sizes=[";
    for (std::size_t i = 0; i < r.sizes.size(); ++i) std::cout << (i ? "," : "") << r.sizes[i];
    std::cout << "]\n";
  });

  // span
  std::string sp_in;
  auto* sp_cmd = app.add_subcommand("span", "affine span and the doubling and spanning constants");
  sp_cmd->add_option("A", sp_in)->required();
  sp_cmd->callback([&] {
    const Z2Set a = read_z2set(std::filesystem::path(sp_in));
    const auto flat = affine_span(a);
    const auto c = constants(a);
    std::cout << "span=" << flat_to_string(flat) << " dim=" << flat.basis.size()
              << " generates=" << (flat.is_whole() ? "yes" : "no") << " doubling=" << to_string(c.doubling)
              << " spanning=" << to_string(c.spanning) << '\n';
  });

  // verify
  std::string v_suite, v_json, v_mode = "full", v_out = "counterexamples";
  VerifyParams vp;
  auto* v_cmd = app.add_subcommand("verify", "run a verification suite");
  v_cmd->add_option("suite", v_suite)->required()->check(CLI::IsMember(verify_suite_names()));
  v_cmd->add_option("--n", vp.n);
  v_cmd->add_option("--m", vp.m);
  auto* v_exh = v_cmd->add_flag("--exhaustive", vp.exhaustive);
  v_cmd->add_option("--random", vp.random, "trial count")->excludes(v_exh);
  v_cmd->add_option("--seed", vp.seed);
  v_cmd->add_option("--jobs", vp.jobs);
  v_cmd->add_option("--mode", v_mode, "full or compressed");
  v_cmd->add_flag("--force", vp.force, "lift the dimension caps");
  v_cmd->add_option("--json", v_json, "write the JSON report here");
  v_cmd->add_option("--out-dir", v_out, "directory for counterexample files");
  v_cmd->callback([&] {
    vp.mode = parse_mode(v_mode);
    vp.out_dir = v_out;
    const auto report = verify_suite(v_suite, vp);
    std::cout << report.suite << ": " << report.cases << " cases, " << report.failures.size() << " failures\n";
    for (const auto& line : report.notes) std::cout << "  " << line << '\n';
    for (std::size_t i = 0; i < std::min<std::size_t>(report.failures.size(), 10); ++i) {
      const auto& f = report.failures[i];
      std::cout << "  FAIL expected " << f.expected << ", got " << f.got << '\n';
    }
    if (!v_json.empty()) {
      std::ofstream out(v_json);
      if (!out) throw Error("cannot write " + v_json);
      out << to_json(report).dump(2) << '\n';
    }
    if (!report.passed()) exit_code = kExitVerifyFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (version) {
    const auto& lim = limits();
    std::cout << "z2sum " << kVersion << "\ncaps: max_dim=" << lim.max_dim
              << " transform_max_dim=" << lim.transform_max_dim << " fixpoint_max_dim=" << lim.fixpoint_max_dim
              << " hs_oracle_max_log=" << lim.hs_oracle_max_log
              << " exhaustive_unrestricted_dim=" << lim.exhaustive_unrestricted_dim
              << " exhaustive_generating_dim=" << lim.exhaustive_generating_dim
              << " compressed_generating_dim=" << lim.compressed_generating_dim << '\n';
    return 0;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return kExitUsage;
  }
  return exit_code;
}
