#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "fibpad/braid.hpp"
#include "fibpad/dqotp.hpp"
#include "fibpad/gp_simplex.hpp"
#include "fibpad/holevo.hpp"
#include "fibpad/rational.hpp"
#include "fibpad/table.hpp"

namespace {

using namespace fibpad;

struct GlobalOptions {
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 1;
  int threads = 0;
};

std::string render(const Table& t, const std::string& format,
                   const std::string& preamble) {
  if (format == "csv") return emit_csv(t);
  if (format == "json") return emit_json(t);
  return preamble + emit_text(t);
}

void write_output(const GlobalOptions& g, const std::string& payload) {
  if (g.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) {
    throw std::invalid_argument(
        fmt::format("cannot open output path '{}'", g.out));
  }
  f << payload;
  if (!f) {
    throw std::invalid_argument(fmt::format("failed writing to '{}'", g.out));
  }
}

Charge charge_from_flag(const std::string& name) {
  return charge_from_name(name);
}

double gram_offdiag_max(const Eigen::MatrixXcd& g) {
  double m = 0.0;
  for (Eigen::Index a = 0; a < g.rows(); ++a) {
    for (Eigen::Index b = 0; b < g.cols(); ++b) {
      if (a != b) m = std::max(m, std::abs(g(a, b)));
    }
  }
  return m;
}

double security_residual_max(const MessageSet& ms) {
  AnyonicDensity rho = reduced_density(ms.state, Side::A);
  double worst = 0.0;
  for (const auto& u : ms.unitaries) {
    for (Charge a : kCharges) {
      const auto& ub = u.block(a);
      const auto& rb = rho.block(a);
      if (ub.size() == 0) continue;
      worst =
          std::max(worst, (ub * rb * ub.adjoint() - rb).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

int run_dims(const GlobalOptions& g, int n, const std::string& charge) {
  Table t;
  t.columns = {"n", "charge", "dimension"};
  auto add = [&](Charge a) {
    t.add_row({std::int64_t(n), std::string(charge_name(a)), fusion_dim(n, a)});
  };
  if (charge == "both") {
    add(Charge::vacuum);
    add(Charge::tau);
  } else {
    add(charge_from_flag(charge));
  }
  write_output(g, render(t, g.format, ""));
  return 0;
}

int run_bell(const GlobalOptions& g, int n, const std::string& emit) {
  Table t;
  std::string preamble;
  if (emit == "bounds") {
    CapacityBounds b = bell_capacity_bounds(n);
    t.columns = {"n", "lower", "upper"};
    t.add_row({std::int64_t(b.n), b.lower, b.upper});
  } else if (emit == "message-set") {
    if (n < 2 || n > 10) {
      throw std::invalid_argument(
          "message-set construction supports 2 <= n <= 10");
    }
    MessageSet ms = bell_message_set(n);
    Eigen::MatrixXcd gram = gram_matrix(ms);
    t.columns = {"n", "size", "gram_offdiag_max", "security_residual_max"};
    t.add_row({std::int64_t(n), std::int64_t(ms.size()), gram_offdiag_max(gram),
               security_residual_max(ms)});
    preamble = fmt::format("explicit message set on {} Bell pairs\n", n);
  } else {  // search
    if (n < 2 || n > 4) {
      throw std::invalid_argument("search supports 2 <= n <= 4");
    }
    SearchOptions opts;
    opts.seed = g.seed;
    opts.threads = g.threads;
    MessageSet ms = search_max_message_set(bell_power_state(n), opts);
    CapacityBounds b = bell_capacity_bounds(n);
    Eigen::MatrixXcd gram = gram_matrix(ms);
    t.columns = {"n", "size_found", "lower_bound", "upper_bound",
                 "gram_offdiag_max"};
    t.add_row({std::int64_t(n), std::int64_t(ms.size()), b.lower, b.upper,
               gram_offdiag_max(gram)});
    preamble = fmt::format("numerical search witness on {} Bell pairs\n", n);
  }
  write_output(g, render(t, g.format, preamble));
  return 0;
}

int max_messages_for(const ProbabilityValue& p) {
  return p.is_rational ? max_messages(p.num, p.den) : max_messages(p.value);
}

int run_gp(const GlobalOptions& g, const std::string& p_text,
           const std::string& emit) {
  ProbabilityValue p = parse_probability(p_text);
  Table t;
  std::string preamble;
  if (emit == "max") {
    int n = max_messages_for(p);
    t.columns = {"p", "n_messages", "chi"};
    t.add_row({p.value, std::int64_t(n), std::log2(double(n))});
  } else if (emit == "simplex") {
    auto vs = build_simplex_vectors(p.value);
    t.columns = {"index", "a", "b", "c", "d"};
    for (std::size_t i = 0; i < vs.size(); ++i) {
      t.add_row({std::int64_t(i), vs[i].v[0], vs[i].v[1], vs[i].v[2],
                 vs[i].v[3]});
    }
    if (vs.size() >= 2) {
      double target = required_inner_product(p.value);
      double dev = 0.0;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          dev = std::max(dev, std::abs(vs[i].dot(vs[j]) - target));
        }
      }
      preamble = fmt::format(
          "n_messages = {}\npairwise inner-product target = {}\nmax Gram "
          "deviation = {:.3e}\n",
          vs.size(), format_double(target), dev);
    } else {
      preamble = "n_messages = 1\n";
    }
  } else if (emit == "unitaries") {
    auto ms = vectors_to_unitaries(build_simplex_vectors(p.value), p.value);
    t.columns = {"index", "vac_re", "vac_im", "t00_re", "t00_im", "t01_re",
                 "t01_im", "t10_re", "t10_im", "t11_re", "t11_im"};
    for (int i = 0; i < ms.size(); ++i) {
      const auto& vac = ms.unitaries[i].block(Charge::vacuum);
      const auto& tau = ms.unitaries[i].block(Charge::tau);
      t.add_row({std::int64_t(i), vac(0, 0).real(), vac(0, 0).imag(),
                 tau(0, 0).real(), tau(0, 0).imag(), tau(0, 1).real(),
                 tau(0, 1).imag(), tau(1, 0).real(), tau(1, 0).imag(),
                 tau(1, 1).real(), tau(1, 1).imag()});
    }
  } else {  // gram
    auto ms = vectors_to_unitaries(build_simplex_vectors(p.value), p.value);
    Eigen::MatrixXcd gram = gram_matrix(ms);
    t.columns = {"alpha", "beta", "re", "im", "abs"};
    for (Eigen::Index a = 0; a < gram.rows(); ++a) {
      for (Eigen::Index b = 0; b < gram.cols(); ++b) {
        t.add_row({std::int64_t(a), std::int64_t(b), gram(a, b).real(),
                   gram(a, b).imag(), std::abs(gram(a, b))});
      }
    }
    preamble = fmt::format("encoded-state Gram matrix, {} messages\n",
                           gram.rows());
  }
  write_output(g, render(t, g.format, preamble));
  return 0;
}

int run_sweep(const GlobalOptions& g, int points) {
  auto rows = sweep(default_sweep_grid(points), g.threads);
  Table t;
  t.columns = {"p", "n_messages", "I_initial", "I_final", "chi"};
  for (const auto& r : rows) {
    t.add_row({r.p, r.n_messages, r.mutual_info_initial, r.mutual_info_final,
               r.holevo_chi});
  }
  write_output(g, render(t, g.format, ""));
  return 0;
}

int run_entropy(const GlobalOptions& g, const std::string& which,
                const std::string& p_text, int n) {
  BipartiteDecomposition state;
  double param = 0.0;
  if (which == "gp") {
    if (p_text.empty()) {
      throw std::invalid_argument("entropy --state gp requires --p");
    }
    ProbabilityValue p = parse_probability(p_text);
    state = gp_state(p.value);
    param = p.value;
  } else {
    if (n < 1 || n > 12) {
      throw std::invalid_argument("entropy --state bell requires 1 <= n <= 12");
    }
    state = bell_power_state(n);
    param = double(n);
  }
  double sa = anyonic_entropy(reduced_density(state, Side::A));
  double sb = anyonic_entropy(reduced_density(state, Side::B));
  Table t;
  t.columns = {"state", "param", "S_A", "S_B", "I"};
  t.add_row({std::string(which), param, sa, sb, sa + sb});
  write_output(g, render(t, g.format, ""));
  return 0;
}

Eigen::Matrix2cd read_target_matrix(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    throw std::invalid_argument(fmt::format("cannot read target file '{}'", path));
  }
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(
        fmt::format("target file '{}' is not valid JSON: {}", path, e.what()));
  }
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("target must be a 2x2 JSON array");
  }
  Eigen::Matrix2cd m;
  for (int r = 0; r < 2; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != 2) {
      throw std::invalid_argument("target must be a 2x2 JSON array");
    }
    for (int c = 0; c < 2; ++c) {
      const auto& e = row[c];
      if (!e.is_object() || !e.contains("re") || !e.contains("im") ||
          !e["re"].is_number() || !e["im"].is_number()) {
        throw std::invalid_argument(
            "each target entry needs numeric fields 're' and 'im'");
      }
      m(r, c) = Complex(e["re"].get<double>(), e["im"].get<double>());
    }
  }
  return m;
}

int run_braid(const GlobalOptions& g, const std::string& eval_word,
              const std::string& compile_path, int max_len) {
  Table t;
  std::string preamble;
  if (!eval_word.empty()) {
    BraidWord w = parse_braid_word(eval_word);
    SectorOperator op = evaluate_word(w);
    t.columns = {"sector", "row", "col", "re", "im"};
    const auto& vac = op.block(Charge::vacuum);
    t.add_row({std::string("vacuum"), std::int64_t(0), std::int64_t(0),
               vac(0, 0).real(), vac(0, 0).imag()});
    const auto& tau = op.block(Charge::tau);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        t.add_row({std::string("tau"), std::int64_t(r), std::int64_t(c),
                   tau(r, c).real(), tau(r, c).imag()});
      }
    }
    preamble = fmt::format("word = {}\nunitarity residual = {:.3e}\n",
                           to_string(w), op.unitarity_residual());
  } else {
    Eigen::Matrix2cd target = read_target_matrix(compile_path);
    CompileResult res = compile_unitary(target, max_len);
    SectorOperator achieved = evaluate_word(res.word);
    const auto& tau = achieved.block(Charge::tau);
    t.columns = {"word", "length", "distance", "u00_re", "u00_im", "u01_re",
                 "u01_im", "u10_re", "u10_im", "u11_re", "u11_im"};
    t.add_row({to_string(res.word), std::int64_t(res.word.length()),
               res.distance, tau(0, 0).real(), tau(0, 0).imag(),
               tau(0, 1).real(), tau(0, 1).imag(), tau(1, 0).real(),
               tau(1, 0).imag(), tau(1, 1).real(), tau(1, 1).imag()});
  }
  write_output(g, render(t, g.format, preamble));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Fibonacci-anyon one-time-pad toolkit: fusion-space dimensions, "
      "capacity bounds, simplex encodings, entropy sweeps, braid synthesis"};
  app.require_subcommand(1);
  // let global options appear after the subcommand too
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "Write output to this path instead of stdout");
  app.add_option("--seed", g.seed, "Seed for randomized searches")
      ->capture_default_str();
  app.add_option("--threads", g.threads,
                 "Worker threads (0: FIBPAD_THREADS env or all cores)")
      ->capture_default_str();

  auto* dims = app.add_subcommand("dims", "Fusion-space dimensions");
  int dims_n = 1;
  std::string dims_charge = "both";
  dims->add_option("--n", dims_n, "Number of tau anyons")
      ->required()
      ->check(CLI::Range(1, 91));
  dims->add_option("--charge", dims_charge, "Total charge sector")
      ->check(CLI::IsMember({"vacuum", "tau", "both"}))
      ->capture_default_str();

  auto* bell = app.add_subcommand("bell", "Bell-pair power analyses");
  int bell_n = 2;
  std::string bell_emit = "bounds";
  bell->add_option("--n", bell_n, "Number of Bell pairs")
      ->required()
      ->check(CLI::Range(1, 46));
  bell->add_option("--emit", bell_emit, "What to compute")
      ->check(CLI::IsMember({"bounds", "message-set", "search"}))
      ->capture_default_str();

  auto* gp = app.add_subcommand("gp", "One-parameter six-anyon family");
  std::string gp_p;
  std::string gp_emit = "max";
  gp->add_option("--p", gp_p, "Probability weight p (decimal or a/b)")
      ->required();
  gp->add_option("--emit", gp_emit, "What to compute")
      ->check(CLI::IsMember({"max", "simplex", "unitaries", "gram"}))
      ->capture_default_str();

  auto* sw = app.add_subcommand("sweep", "Capacity and information sweep over p");
  int sweep_points = 1001;
  sw->add_option("--points", sweep_points, "Uniform grid size on [0, 1]")
      ->check(CLI::Range(2, 2000001))
      ->capture_default_str();

  auto* ent = app.add_subcommand("entropy", "Anyonic entropies of a state");
  std::string ent_state;
  std::string ent_p;
  int ent_n = 1;
  ent->add_option("--state", ent_state, "State family")
      ->required()
      ->check(CLI::IsMember({"gp", "bell"}));
  ent->add_option("--p", ent_p, "p for the gp family");
  ent->add_option("--n", ent_n, "Copies for the bell family")
      ->check(CLI::Range(1, 12));

  auto* braid = app.add_subcommand("braid", "Braid-word evaluation and synthesis");
  std::string braid_eval;
  std::string braid_compile;
  int braid_max_len = 10;
  auto* eval_opt =
      braid->add_option("--eval", braid_eval, "Word over g1 g2 g1^-1 g2^-1");
  auto* compile_opt = braid->add_option(
      "--compile", braid_compile, "JSON file with a 2x2 target unitary");
  braid->add_option("--max-len", braid_max_len, "Maximum word length")
      ->check(CLI::Range(0, 24))
      ->capture_default_str();
  eval_opt->excludes(compile_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dims->parsed()) return run_dims(g, dims_n, dims_charge);
    if (bell->parsed()) return run_bell(g, bell_n, bell_emit);
    if (gp->parsed()) return run_gp(g, gp_p, gp_emit);
    if (sw->parsed()) return run_sweep(g, sweep_points);
    if (ent->parsed()) return run_entropy(g, ent_state, ent_p, ent_n);
    if (braid->parsed()) {
      if (braid_eval.empty() == braid_compile.empty()) {
        throw std::invalid_argument(
            "braid needs exactly one of --eval or --compile");
      }
      return run_braid(g, braid_eval, braid_compile, braid_max_len);
    }
    throw std::invalid_argument("no subcommand given");
  } catch (const std::logic_error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    fmt::print(stderr, "internal error: {}\n", e.what());
    return 1;
  }
}
