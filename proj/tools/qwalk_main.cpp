// qwalk: walk simulation, ensemble checking/sampling and the two nonlocality
// verifications from the command line.
//
// Exit codes: 0 success / verified relation holds, 1 relation violated,
// 2 usage error, 3 I/O failure.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qwalk/ensemble.hpp"
#include "qwalk/nonlocal.hpp"
#include "qwalk/walk.hpp"

using json = nlohmann::ordered_json;
using namespace qwalk;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// Inputs arrive as decimal text, so a strict unit-norm check would reject
// every truncated constant. Values are renormalized when they are within
// kInputNormTol of the constraint and rejected otherwise.
constexpr double kInputNormTol = 1e-6;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_number(const std::string& token) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw UsageError("malformed number '" + token + "'");
  return value;
}

std::vector<double> parse_tuple(const std::string& text, std::size_t count,
                                const std::string& what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) values.push_back(parse_number(token));
  if (values.size() != count)
    throw UsageError(what + " expects " + std::to_string(count) + " comma-separated numbers, got '" +
                     text + "'");
  return values;
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// doubles rounded to 12 significant digits so the JSON and CSV writers emit
// identical probability strings
double round12(double v) { return std::stod(fmt12(v)); }

json complex_json(cplx z) { return json::array({round12(z.real()), round12(z.imag())}); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

using CoinSpec = std::variant<BalancedCoin, UnbalancedCoin>;

Matrix coin_matrix(const CoinSpec& coin) {
  return std::visit([](const auto& c) { return c.matrix(); }, coin);
}

CoinSpec parse_coin(const std::string& spec) {
  if (spec == "hadamard") return BalancedCoin::hadamard();
  if (spec == "invariant") return BalancedCoin::invariant();
  if (spec == "hybrid") return BalancedCoin::hybrid();
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  if (colon != std::string::npos && head == "balanced") {
    const auto v = parse_tuple(spec.substr(colon + 1), 5, "balanced coin");
    cplx alpha(v[0], v[1]), gamma(v[2], v[3]);
    if (std::abs(std::norm(alpha) - 0.5) > kInputNormTol ||
        std::abs(std::norm(gamma) - 0.5) > kInputNormTol)
      throw UsageError("balanced coin moduli must satisfy |alpha|^2 = |gamma|^2 = 1/2");
    alpha *= 1.0 / (std::sqrt(2.0) * std::abs(alpha));
    gamma *= 1.0 / (std::sqrt(2.0) * std::abs(gamma));
    return BalancedCoin(alpha, gamma, v[4]);
  }
  if (colon != std::string::npos && head == "unbalanced") {
    const auto v = parse_tuple(spec.substr(colon + 1), 4, "unbalanced coin");
    cplx p(v[0], v[1]), q(v[2], v[3]);
    const double n = std::norm(p) + std::norm(q);
    if (std::abs(n - 1.0) > kInputNormTol)
      throw UsageError("unbalanced coin must satisfy |p|^2 + |q|^2 = 1");
    const double scale = 1.0 / std::sqrt(n);
    return UnbalancedCoin(p * scale, q * scale);
  }
  throw UsageError("unknown coin '" + spec +
                   "' (try hadamard, invariant, hybrid, balanced:..., unbalanced:...)");
}

BalancedCoin require_balanced(const CoinSpec& coin, const std::string& command) {
  if (const auto* b = std::get_if<BalancedCoin>(&coin)) return *b;
  throw UsageError(command + " requires a balanced coin");
}

std::pair<cplx, cplx> parse_qubit(const std::string& text, const std::string& what) {
  const auto v = parse_tuple(text, 4, what);
  cplx first(v[0], v[1]), second(v[2], v[3]);
  const double n = std::norm(first) + std::norm(second);
  if (std::abs(n - 1.0) > kInputNormTol)
    throw UsageError(what + " must be normalized (|.|^2 sum within " +
                     fmt12(kInputNormTol) + " of 1), got " + fmt12(n));
  const double scale = 1.0 / std::sqrt(n);
  return {first * scale, second * scale};
}

int write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return kExitOk;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return kExitIo;
  }
  out << payload;
  if (!out.good()) {
    std::cerr << "error: failed writing '" << path << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

std::string distribution_csv(const Distribution& d) {
  std::string out = "z,probability\n";
  for (int z = -d.steps(); z <= d.steps(); z += 2) {
    out += std::to_string(z);
    out += ",";
    out += fmt12(d.at(z));
    out += "\n";
  }
  return out;
}

std::string distribution_plot(const Distribution& d) {
  std::string out;
  for (int z = -d.steps(); z <= d.steps(); z += 2) {
    out += std::to_string(z);
    out += " ";
    out += fmt12(d.at(z));
    out += "\n";
  }
  return out;
}

json distribution_json(const Distribution& d) {
  json rows = json::array();
  for (int z = -d.steps(); z <= d.steps(); z += 2)
    rows.push_back({{"z", z}, {"probability", round12(d.at(z))}});
  return rows;
}

struct Options {
  std::string coin;
  std::string initial;
  std::string state;
  int steps = 0;
  std::uint64_t seed = 0;
  int count = 0;       // ensemble-sample: number of states
  int resolution = 0;  // sweep: grid resolution per angle
  std::string format = "json";
  std::string out;
};

int run_walk(const Options& opt) {
  if (opt.coin.empty() || opt.initial.empty()) throw UsageError("walk requires --coin and --initial");
  if (opt.steps < 0) throw UsageError("--steps must be >= 0");
  const CoinSpec coin = parse_coin(opt.coin);
  const auto [cu, cd] = parse_qubit(opt.initial, "--initial");
  const Distribution d = run(InitialCoinState(cu, cd), coin_matrix(coin), opt.steps);

  if (opt.format == "csv") return write_output(opt.out, distribution_csv(d));
  if (opt.format == "plot") return write_output(opt.out, distribution_plot(d));
  json doc{{"command", "walk"},
           {"coin", opt.coin},
           {"steps", opt.steps},
           {"total_probability", round12(d.total())},
           {"distribution", distribution_json(d)}};
  return write_output(opt.out, doc.dump(2) + "\n");
}

int run_ensemble_check(const Options& opt) {
  if (opt.coin.empty() || opt.state.empty())
    throw UsageError("ensemble-check requires --coin and --state");
  const BalancedCoin coin = require_balanced(parse_coin(opt.coin), "ensemble-check");
  const auto [a, b] = parse_qubit(opt.state, "--state");
  const ConstraintCheck check = satisfies_constraint(EnsembleState(a, b), coin);
  const TransformCheck transform = apply_and_verify(coin, EnsembleState(a, b));

  std::string payload;
  if (opt.format == "csv") {
    payload = "satisfied,residual_b,residual_a,deviation_psi,deviation_psi_bar\n";
    payload += std::string(check.satisfied ? "true" : "false") + "," + fmt12(check.residual_b) +
               "," + fmt12(check.residual_a) + "," + fmt12(transform.deviation_psi) + "," +
               fmt12(transform.deviation_psi_bar) + "\n";
  } else if (opt.format == "plot") {
    throw UsageError("ensemble-check has no plot output");
  } else {
    json doc{{"command", "ensemble-check"},
             {"satisfied", check.satisfied},
             {"residual_b", round12(check.residual_b)},
             {"residual_a", round12(check.residual_a)},
             {"deviation_psi", round12(transform.deviation_psi)},
             {"deviation_psi_bar", round12(transform.deviation_psi_bar)}};
    payload = doc.dump(2) + "\n";
  }
  const int io = write_output(opt.out, payload);
  if (io != kExitOk) return io;
  return check.satisfied ? kExitOk : kExitViolated;
}

int run_ensemble_sample(const Options& opt) {
  if (opt.coin.empty()) throw UsageError("ensemble-sample requires --coin");
  if (opt.count < 1) throw UsageError("--count must be >= 1");
  const BalancedCoin coin = require_balanced(parse_coin(opt.coin), "ensemble-sample");
  const auto states = sample_ensemble(coin, opt.seed, opt.count);

  if (opt.format == "csv") {
    std::string payload = "re_a,im_a,re_b,im_b\n";
    for (const auto& s : states)
      payload += fmt12(s.a().real()) + "," + fmt12(s.a().imag()) + "," + fmt12(s.b().real()) +
                 "," + fmt12(s.b().imag()) + "\n";
    return write_output(opt.out, payload);
  }
  if (opt.format == "plot") throw UsageError("ensemble-sample has no plot output");
  json rows = json::array();
  for (const auto& s : states)
    rows.push_back({{"re_a", round12(s.a().real())},
                    {"im_a", round12(s.a().imag())},
                    {"re_b", round12(s.b().real())},
                    {"im_b", round12(s.b().imag())}});
  json doc{{"command", "ensemble-sample"}, {"seed", opt.seed}, {"states", rows}};
  return write_output(opt.out, doc.dump(2) + "\n");
}

int run_nosignal(const Options& opt) {
  if (opt.coin.empty() || opt.state.empty()) throw UsageError("nosignal requires --coin and --state");
  const BalancedCoin coin = require_balanced(parse_coin(opt.coin), "nosignal");
  const auto [a, b] = parse_qubit(opt.state, "--state");
  const SignallingReport rep = signalling_test(coin, a, b);
  const bool holds = rep.max_deviation < kConstraintTol;

  std::string payload;
  if (opt.format == "csv") {
    payload = "max_deviation,no_signalling\n";
    payload += fmt12(rep.max_deviation) + "," + (holds ? "true" : "false") + "\n";
  } else if (opt.format == "plot") {
    throw UsageError("nosignal has no plot output");
  } else {
    json eig_before = json::array(), eig_after = json::array();
    for (double e : rep.eigenvalues_before) eig_before.push_back(round12(e));
    for (double e : rep.eigenvalues_after) eig_after.push_back(round12(e));
    json doc{{"command", "nosignal"},
             {"max_deviation", round12(rep.max_deviation)},
             {"no_signalling", holds},
             {"eigenvalues_before", eig_before},
             {"eigenvalues_after", eig_after},
             {"rho_before", matrix_json(rep.rho_before)},
             {"rho_after", matrix_json(rep.rho_after)}};
    payload = doc.dump(2) + "\n";
  }
  const int io = write_output(opt.out, payload);
  if (io != kExitOk) return io;
  return holds ? kExitOk : kExitViolated;
}

json branch_json(const LoccBranchQuantities& q, double entropy) {
  return json{{"norm_factor", round12(q.norm_factor)},
              {"offdiag_abs_sq", round12(q.offdiag_abs_sq)},
              {"lambda_minus", round12(q.lambda_minus)},
              {"lambda_plus", round12(q.lambda_plus)},
              {"compact_residual", round12(q.compact_residual)},
              {"entropy", round12(entropy)}};
}

int run_locc(const Options& opt) {
  if (opt.coin.empty() || opt.state.empty()) throw UsageError("locc requires --coin and --state");
  const BalancedCoin coin = require_balanced(parse_coin(opt.coin), "locc");
  const auto [a, b] = parse_qubit(opt.state, "--state");
  const LoccReport psi = locc_test(coin, a, b, LoccBranch::Psi);
  const LoccReport bar = locc_test(coin, a, b, LoccBranch::PsiBar);
  const bool holds = psi.entropy_after < kDerivedTol && bar.entropy_after < kDerivedTol;

  std::string payload;
  if (opt.format == "csv") {
    payload = "branch,norm_factor,offdiag_abs_sq,lambda_minus,lambda_plus,compact_residual,entropy\n";
    for (const LoccReport* r : {&psi, &bar}) {
      const auto& q = r->branch == LoccBranch::Psi ? r->psi : r->psibar;
      payload += std::string(r->branch == LoccBranch::Psi ? "psi" : "psibar") + "," +
                 fmt12(q.norm_factor) + "," + fmt12(q.offdiag_abs_sq) + "," +
                 fmt12(q.lambda_minus) + "," + fmt12(q.lambda_plus) + "," +
                 fmt12(q.compact_residual) + "," + fmt12(r->entropy_after) + "\n";
    }
  } else if (opt.format == "plot") {
    throw UsageError("locc has no plot output");
  } else {
    json doc{{"command", "locc"},
             {"entanglement_preserved", holds},
             {"entropy_before", round12(psi.entropy_before)},
             {"psi", branch_json(psi.psi, psi.entropy_after)},
             {"psibar", branch_json(bar.psibar, bar.entropy_after)}};
    payload = doc.dump(2) + "\n";
  }
  const int io = write_output(opt.out, payload);
  if (io != kExitOk) return io;
  return holds ? kExitOk : kExitViolated;
}

int run_sweep(const Options& opt) {
  if (opt.coin.empty()) throw UsageError("sweep requires --coin");
  if (opt.resolution < 10) throw UsageError("--count (grid resolution) must be >= 10");
  const BalancedCoin coin = require_balanced(parse_coin(opt.coin), "sweep");
  const SweepReport rep = uniqueness_sweep(coin, opt.resolution);
  const bool holds = rep.intersection_within_constraint && rep.constraint_within_both;

  std::string payload;
  if (opt.format == "csv") {
    payload = "x,y,u,v,residual_b,residual_a,entropy_psi,entropy_psibar,satisfies\n";
    for (const SweepPoint& p : rep.points)
      payload += fmt12(p.x) + "," + fmt12(p.y) + "," + fmt12(p.u) + "," + fmt12(p.v) + "," +
                 fmt12(p.residual_b) + "," + fmt12(p.residual_a) + "," + fmt12(p.entropy_psi) +
                 "," + fmt12(p.entropy_psibar) + "," + (p.satisfies ? "true" : "false") + "\n";
  } else if (opt.format == "plot") {
    throw UsageError("sweep has no plot output");
  } else {
    json doc{{"command", "sweep"},
             {"resolution", rep.resolution},
             {"grid_points", rep.points.size()},
             {"constraint_points", rep.constraint_set.size()},
             {"low_entropy_psi", rep.set_psi.size()},
             {"low_entropy_psibar", rep.set_psibar.size()},
             {"low_entropy_both", rep.intersection.size()},
             {"intersection_within_constraint", rep.intersection_within_constraint},
             {"constraint_within_both", rep.constraint_within_both},
             {"min_entropy_psi_off_constraint", round12(rep.min_entropy_psi_off_constraint)}};
    payload = doc.dump(2) + "\n";
  }
  const int io = write_output(opt.out, payload);
  if (io != kExitOk) return io;
  return holds ? kExitOk : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equal-superposition coins, their qubit ensembles and walks on the line"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&opt](CLI::App* cmd, bool with_coin = true) {
    if (with_coin)
      cmd->add_option("--coin", opt.coin,
                      "hadamard|invariant|hybrid|balanced:re_a,im_a,re_g,im_g,theta|"
                      "unbalanced:re_p,im_p,re_q,im_q");
    cmd->add_option("--format", opt.format, "json|csv|plot")->default_val("json");
    cmd->add_option("--out", opt.out, "output path (default: stdout)");
  };

  CLI::App* walk_cmd = app.add_subcommand("walk", "simulate a walk and print the distribution");
  add_common(walk_cmd);
  walk_cmd->add_option("--initial", opt.initial, "re_up,im_up,re_down,im_down");
  walk_cmd->add_option("--steps", opt.steps, "number of steps T");

  CLI::App* check_cmd =
      app.add_subcommand("ensemble-check", "test a qubit against the coin's ensemble constraint");
  add_common(check_cmd);
  check_cmd->add_option("--state", opt.state, "re_a,im_a,re_b,im_b");

  CLI::App* sample_cmd =
      app.add_subcommand("ensemble-sample", "draw ensemble members for a coin");
  add_common(sample_cmd);
  sample_cmd->add_option("--seed", opt.seed, "generator seed")->default_val(0);
  sample_cmd->add_option("--count", opt.count, "number of states")->default_val(10);

  CLI::App* nosignal_cmd = app.add_subcommand(
      "nosignal", "compare Alice's reduced matrices before/after Bob's local operation");
  add_common(nosignal_cmd);
  nosignal_cmd->add_option("--state", opt.state, "re_a,im_a,re_b,im_b");

  CLI::App* locc_cmd = app.add_subcommand(
      "locc", "entanglement of the separable resources after Bob's operation, both branches");
  add_common(locc_cmd);
  locc_cmd->add_option("--state", opt.state, "re_a,im_a,re_b,im_b");

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "grid scan of both branch entropies over the state sphere");
  add_common(sweep_cmd);
  sweep_cmd->add_option("--count", opt.resolution, "grid resolution per angle")->default_val(50);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (walk_cmd->parsed()) return run_walk(opt);
    if (check_cmd->parsed()) return run_ensemble_check(opt);
    if (sample_cmd->parsed()) return run_ensemble_sample(opt);
    if (nosignal_cmd->parsed()) return run_nosignal(opt);
    if (locc_cmd->parsed()) return run_locc(opt);
    if (sweep_cmd->parsed()) return run_sweep(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
