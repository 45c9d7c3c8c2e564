#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "efpm/generator.hpp"
#include "efpm/io.hpp"
#include "efpm/kernels.hpp"
#include "efpm/market.hpp"
#include "efpm/monge.hpp"
#include "efpm/oracles.hpp"

// Exit codes: 0 ok, 1 bad input/flags, 2 solver/capability failure,
// 3 verification failure.

namespace {

using efpm::io::ordered_json;

int exit_code_for(const efpm::Error& e) {
  switch (e.code()) {
    case efpm::Errc::instance_too_large:
    case efpm::Errc::infeasible_allocation:
    case efpm::Errc::non_square_matrix:
    case efpm::Errc::index_out_of_range:
      return 2;
    default:
      return 1;
  }
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
  } else {
    efpm::io::write_text_file(output_path, text);
  }
}

void apply_backend(const std::string& name) {
  if (name == "auto") return;  // startup detection already picked
  if (name == "scalar") {
    efpm::kernels::select_backend(efpm::kernels::Backend::scalar);
  } else if (name == "avx2") {
    efpm::kernels::select_backend(efpm::kernels::Backend::avx2);
  } else {
    throw efpm::Error(efpm::Errc::invalid_spec, "unknown backend: " + name);
  }
}

efpm::Outcome run_solver(const std::string& solver, const efpm::Instance& inst) {
  if (solver == "monge") return efpm::solve_monge(inst, efpm::Pricing::full_scan);
  if (solver == "monge-fast") return efpm::solve_monge(inst, efpm::Pricing::adjacent);
  if (solver == "hungarian") return efpm::solve_hungarian(inst);
  if (solver == "brute") return efpm::brute_force_solve(inst);
  throw efpm::Error(efpm::Errc::invalid_spec, "unknown solver: " + solver);
}

double resolve_tol(double flag_value, const efpm::Instance& inst) {
  return std::isnan(flag_value) ? efpm::default_tolerance(inst) : flag_value;
}

int cmd_solve(const std::string& input, const std::string& solver,
              const std::string& output, const std::string& backend) {
  apply_backend(backend);
  const efpm::Instance inst = efpm::io::load_instance(input);
  const efpm::Outcome out = run_solver(solver, inst);
  emit(efpm::io::dump(efpm::io::outcome_to_json(out)), output);
  return 0;
}

int cmd_verify(const std::string& instance_path, const std::string& outcome_path,
               double tol_flag) {
  const efpm::Instance inst = efpm::io::load_instance(instance_path);
  const efpm::Outcome out = efpm::io::load_outcome(outcome_path);
  const double tol = resolve_tol(tol_flag, inst);
  const efpm::AuditReport report = efpm::audit_envy_free(inst, out, tol);
  std::cout << efpm::io::dump(efpm::io::audit_to_json(report));
  return report.all_ok() ? 0 : 3;
}

int cmd_compare(const std::string& instance_path, double tol_flag,
                const std::string& backend) {
  apply_backend(backend);
  const efpm::Instance inst = efpm::io::load_instance(instance_path);
  const double tol = resolve_tol(tol_flag, inst);

  std::vector<std::pair<std::string, efpm::Outcome>> runs;
  runs.emplace_back("monge", efpm::solve_monge(inst));
  runs.emplace_back("hungarian", efpm::solve_hungarian(inst));
  if (inst.size() <= efpm::kBruteForceMaxN) {
    runs.emplace_back("brute", efpm::brute_force_solve(inst));
  }

  bool revenue_agree = true;
  bool welfare_agree = true;
  ordered_json results = ordered_json::array();
  for (const auto& [name, out] : runs) {
    const double welfare = efpm::social_welfare(inst, out.assignment);
    results.push_back({{"solver", name},
                       {"revenue", out.revenue},
                       {"welfare", welfare},
                       {"envy_free", efpm::audit_envy_free(inst, out, tol).all_ok()}});
    revenue_agree &= std::abs(out.revenue - runs.front().second.revenue) <= tol;
    welfare_agree &=
        std::abs(welfare - efpm::social_welfare(inst, runs.front().second.assignment)) <=
        tol;
  }

  ordered_json j;
  j["n"] = inst.size();
  j["tol"] = tol;
  j["results"] = results;
  j["revenue_agree"] = revenue_agree;
  j["welfare_agree"] = welfare_agree;
  std::cout << efpm::io::dump(j);
  return revenue_agree ? 0 : 3;
}

int cmd_gen(const efpm::GenSpec& spec, const std::string& output) {
  const efpm::Instance inst = efpm::generate(spec);
  const std::string text = efpm::io::dump(efpm::io::instance_to_json(inst));
  // echo the spec (with seed) so the instance can be regenerated
  const std::string echo = efpm::io::dump(efpm::io::genspec_to_json(spec));
  if (output.empty()) {
    std::cout << text;
    std::cerr << echo;
  } else {
    efpm::io::write_text_file(output, text);
    std::cout << echo;
  }
  return 0;
}

struct BenchRecord {
  std::size_t n = 0;
  std::string solver;
  double wall_time_s = 0.0;
  double revenue = 0.0;
  double welfare = 0.0;
};

template <typename Solve>
BenchRecord time_solver(const std::string& name, const efpm::Instance& inst,
                        Solve solve) {
  const auto start = std::chrono::steady_clock::now();
  const efpm::Outcome out = solve(inst);
  const auto stop = std::chrono::steady_clock::now();
  BenchRecord rec;
  rec.n = inst.size();
  rec.solver = name;
  rec.wall_time_s = std::chrono::duration<double>(stop - start).count();
  rec.revenue = out.revenue;
  rec.welfare = efpm::social_welfare(inst, out.assignment);
  return rec;
}

std::string format_number(double x) { return ordered_json(x).dump(); }

// least-squares slope of log(time) against log(n)
double fit_loglog_slope(const std::vector<std::pair<std::size_t, double>>& pts) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [n, t] : pts) {
    const double x = std::log(static_cast<double>(n));
    const double y = std::log(std::max(t, 1e-9));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(pts.size());
  const double denom = m * sxx - sx * sx;
  return denom == 0.0 ? 0.0 : (m * sxy - sx * sy) / denom;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::size_t reps,
              std::uint64_t seed, const std::string& output,
              std::size_t cubic_cap, const std::string& dist_name,
              const std::string& backend) {
  apply_backend(backend);
  if (sizes.empty()) throw efpm::Error(efpm::Errc::invalid_spec, "no sizes given");
  if (reps < 1) throw efpm::Error(efpm::Errc::invalid_spec, "reps must be >= 1");
  const efpm::Distribution dist = efpm::distribution_from_name(dist_name);

  std::vector<BenchRecord> records;
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    const std::size_t n = sizes[si];
    if (n < 1) throw efpm::Error(efpm::Errc::invalid_spec, "sizes must be >= 1");
    for (std::size_t rep = 0; rep < reps; ++rep) {
      efpm::GenSpec spec;
      spec.n = n;
      spec.distribution = dist;
      spec.low = 1.0;
      spec.high = 1e6;
      spec.seed = seed + 1000003ull * si + rep;
      const efpm::Instance inst = efpm::generate(spec);

      records.push_back(time_solver("monge", inst, [](const efpm::Instance& i) {
        return efpm::solve_monge(i);
      }));
      if (n <= cubic_cap) {
        records.push_back(time_solver("hungarian", inst, [](const efpm::Instance& i) {
          return efpm::solve_hungarian(i);
        }));
      }
    }
  }

  std::ostringstream csv;
  csv << "n,solver,wall_time_s,revenue,welfare\n";
  for (const BenchRecord& r : records) {
    csv << r.n << "," << r.solver << "," << format_number(r.wall_time_s) << ","
        << format_number(r.revenue) << "," << format_number(r.welfare) << "\n";
  }
  efpm::io::write_text_file(output, csv.str());

  std::map<std::string, std::vector<std::pair<std::size_t, double>>> by_solver;
  for (const BenchRecord& r : records) by_solver[r.solver].emplace_back(r.n, r.wall_time_s);
  for (const auto& [solver, pts] : by_solver) {
    bool multiple_sizes = false;
    for (const auto& [n, t] : pts) multiple_sizes |= n != pts.front().first;
    if (!multiple_sizes) continue;
    std::cout << solver << ": log-log slope " << fit_loglog_slope(pts) << " over "
              << pts.size() << " runs [" << efpm::kernels::backend_name(
                     efpm::kernels::active_backend()) << " kernels]\n";
  }
  std::cout << "wrote " << records.size() << " records to " << output << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"envy-free perfect matching solver for budget x quality markets"};
  app.require_subcommand(1);

  std::string input, output, outcome_path, solver = "monge", backend = "auto";
  double tol_flag = std::numeric_limits<double>::quiet_NaN();

  auto* solve = app.add_subcommand("solve", "solve an instance and write the outcome");
  solve->add_option("input", input, "instance file (JSON or CSV)")->required();
  solve->add_option("-o,--output", output, "outcome file (default: stdout)");
  solve->add_option("--solver", solver, "monge | monge-fast | hungarian | brute")
      ->default_val("monge");
  solve->add_option("--backend", backend, "auto | scalar | avx2")->default_val("auto");

  auto* verify = app.add_subcommand("verify", "audit an outcome against an instance");
  verify->add_option("instance", input, "instance file")->required();
  verify->add_option("outcome", outcome_path, "outcome file")->required();
  verify->add_option("--tol", tol_flag, "audit tolerance (default: scale-relative)");

  auto* compare = app.add_subcommand("compare", "run all solvers and check agreement");
  compare->add_option("instance", input, "instance file")->required();
  compare->add_option("--tol", tol_flag, "comparison tolerance (default: scale-relative)");
  compare->add_option("--backend", backend, "auto | scalar | avx2")->default_val("auto");

  efpm::GenSpec gen_spec;
  std::string dist_name = "uniform_int";
  auto* gen = app.add_subcommand("gen", "generate a seeded instance");
  gen->add_option("--n", gen_spec.n, "number of buyers/items")->required();
  gen->add_option("--dist", dist_name,
                  "uniform_real | uniform_int | tie_heavy | near_degenerate")
      ->default_val("uniform_int");
  gen->add_option("--low", gen_spec.low, "lower bound (> 0)")->default_val(1.0);
  gen->add_option("--high", gen_spec.high, "upper bound")->default_val(100.0);
  gen->add_option("--seed", gen_spec.seed, "64-bit seed")->default_val(0);
  gen->add_option("--distinct", gen_spec.distinct_values,
                  "distinct values (tie_heavy)")
      ->default_val(2);
  gen->add_option("-o,--output", output, "instance file (default: stdout)");

  std::vector<std::size_t> sizes;
  std::size_t reps = 3, cubic_cap = 1024;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "time solvers over generated instances");
  bench->add_option("--sizes", sizes, "instance sizes")->required()->delimiter(',');
  bench->add_option("--reps", reps, "repetitions per size")->default_val(3);
  bench->add_option("--seed", bench_seed, "base seed")->default_val(1);
  bench->add_option("-o,--output", output, "CSV output path")->required();
  bench->add_option("--cubic-cap", cubic_cap,
                    "largest n for the cubic reference solver")
      ->default_val(1024);
  bench->add_option("--dist", dist_name, "instance family")->default_val("uniform_int");
  bench->add_option("--backend", backend, "auto | scalar | avx2")->default_val("auto");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  try {
    if (*solve) return cmd_solve(input, solver, output, backend);
    if (*verify) return cmd_verify(input, outcome_path, tol_flag);
    if (*compare) return cmd_compare(input, tol_flag, backend);
    if (*gen) {
      gen_spec.distribution = efpm::distribution_from_name(dist_name);
      return cmd_gen(gen_spec, output);
    }
    if (*bench) {
      return cmd_bench(sizes, reps, bench_seed, output, cubic_cap, dist_name, backend);
    }
  } catch (const efpm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
