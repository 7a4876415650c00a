// Command-line driver: one subcommand per module, each writing a
// machine-readable CSV/JSON artifact (17-significant-digit floats, sorted
// JSON keys, atomic writes) and printing a one-line summary.  Exit codes:
// 0 success, 2 validation error (bad flags, precondition violations),
// 3 numerical/simulation error.  HARPER_THREADS caps worker threads.
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "harper/absorbing.hpp"
#include "harper/acceptance.hpp"
#include "harper/bounds.hpp"
#include "harper/bulk.hpp"
#include "harper/common.hpp"
#include "harper/eigen.hpp"
#include "harper/groups.hpp"
#include "harper/matrix.hpp"
#include "harper/oscillator.hpp"
#include "harper/report.hpp"
#include "harper/simulate.hpp"

namespace {

using harper::Report;
using harper::ReportValue;

void emit(const Report& report, const std::string& out_path,
          const std::string& format) {
  harper::write_text_atomic(out_path, format == "json"
                                          ? harper::render_json(report)
                                          : harper::render_csv(report));
}

// ---- spectrum ---------------------------------------------------------------

struct SpectrumOpts {
  std::size_t n = 0;
  std::size_t a = 1;
  std::string out = "spectrum.csv";
  std::string format = "csv";
};

int run_spectrum(const SpectrumOpts& o) {
  const auto values =
      harper::dense_hermitian_eigen(harper::to_dense(harper::build_harper(o.n, o.a)),
                                    false)
          .values;
  Report r;
  r.scalars.emplace("n", ReportValue::integer(static_cast<std::int64_t>(o.n)));
  r.scalars.emplace("a", ReportValue::integer(static_cast<std::int64_t>(o.a)));
  r.columns = {"index", "eigenvalue"};
  for (std::size_t i = 0; i < values.size(); ++i)
    r.rows.push_back({ReportValue::integer(static_cast<std::int64_t>(i)),
                      ReportValue::number(values[i])});
  emit(r, o.out, o.format);
  std::printf("spectrum: n=%zu a=%zu lambda_1=%.12f trace=%.3e -> %s\n", o.n,
              o.a, values.front(), harper::kahan_total(values),
              o.out.c_str());
  return 0;
}

// ---- bound ------------------------------------------------------------------

struct BoundOpts {
  std::size_t n = 0;
  std::size_t a = 1;
  std::size_t k = 0;        // 0 = default floor(sqrt(n)/2)
  std::size_t k_prime = 0;  // 0 = same as k
  std::string variant = "theorem1";
  std::string out = "bound.json";
  std::string format = "json";
};

int run_bound(const BoundOpts& o) {
  const auto m = harper::build_harper(o.n, o.a);
  std::size_t k = o.k;
  if (k == 0)
    k = static_cast<std::size_t>(
        std::floor(std::sqrt(static_cast<double>(o.n)) / 2.0));
  const std::size_t k_prime = o.k_prime ? o.k_prime : k;
  harper::BoundReport b;
  if (o.variant == "optimize")
    b = harper::optimize_bound(m.circulant, m.diagonal);
  else if (o.variant == "theorem1")
    b = harper::theorem1_bound(m.circulant, m.diagonal, k, k_prime);
  else if (o.variant == "improved")
    b = harper::improved_bound(m.circulant, m.diagonal, k, k_prime);
  else
    b = harper::smallest_eigenvalue_bound(m.circulant, m.diagonal, k, k_prime);
  Report r;
  r.scalars.emplace("variant", ReportValue::text(b.variant));
  r.scalars.emplace("k", ReportValue::integer(static_cast<std::int64_t>(b.k)));
  r.scalars.emplace("k_prime",
                    ReportValue::integer(static_cast<std::int64_t>(b.k_prime)));
  r.scalars.emplace("weyl", ReportValue::number(b.weyl_term));
  r.scalars.emplace("correction", ReportValue::number(b.correction));
  r.scalars.emplace("bound", ReportValue::number(b.bound));
  emit(r, o.out, o.format);
  std::printf("bound: n=%zu a=%zu variant=%s k=%zu k'=%zu bound=%.12f -> %s\n",
              o.n, o.a, b.variant.c_str(), b.k, b.k_prime, b.bound,
              o.out.c_str());
  return 0;
}

// ---- oscillator -------------------------------------------------------------

struct OscillatorOpts {
  std::vector<std::size_t> sizes;
  std::size_t k_max = 3;
  std::string out = "oscillator.csv";
  std::string format = "csv";
};

int run_oscillator(const OscillatorOpts& o) {
  const std::vector<std::size_t> sizes =
      o.sizes.empty() ? std::vector<std::size_t>{250, 500, 1000, 2000}
                      : o.sizes;
  const auto rows = harper::convergence_table(sizes, o.k_max);
  Report r;
  r.scalars.emplace("k_max",
                    ReportValue::integer(static_cast<std::int64_t>(o.k_max)));
  r.columns = {"n", "k", "n*(1-lambda_k)", "mu_k", "abs_error"};
  double final_worst = 0.0;
  for (const auto& row : rows) {
    r.rows.push_back({ReportValue::integer(static_cast<std::int64_t>(row.n)),
                      ReportValue::integer(static_cast<std::int64_t>(row.k)),
                      ReportValue::number(row.scaled),
                      ReportValue::number(row.mu),
                      ReportValue::number(row.abs_error)});
    if (row.n == sizes.back()) final_worst = std::max(final_worst, row.abs_error);
  }
  emit(r, o.out, o.format);
  std::printf(
      "oscillator: %zu sizes, k<=%zu, worst |n(1-lambda_k)-mu_k| at n=%zu: "
      "%.5f -> %s\n",
      sizes.size(), o.k_max, sizes.back(), final_worst, o.out.c_str());
  return 0;
}

// ---- absorb -----------------------------------------------------------------

struct AbsorbOpts {
  std::size_t n = 256;
  std::size_t a = 1;
  std::size_t b = 16;
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  double horizon = 0.0;  // 0 = default 6 / lambda_star_exact
  std::string out = "absorb.json";
  std::string format = "json";
};

int run_absorb(const AbsorbOpts& o) {
  const auto rates = harper::harper_kill_rates(o.n, o.a);
  const auto check =
      harper::survival_bound_check(o.n, rates, o.b, o.trials, o.seed);
  const double lambda1 =
      harper::dense_hermitian_eigen(
          harper::to_dense(harper::build_harper(o.n, o.a)), false)
          .values[0];
  const double exact = (2.0 / 3.0) * (1.0 - lambda1);
  const double horizon = o.horizon > 0.0 ? o.horizon : 6.0 / exact;
  const double estimate =
      harper::estimate_lambda_star(o.n, rates, o.trials, horizon, o.seed);
  Report r;
  r.scalars.emplace("n", ReportValue::integer(static_cast<std::int64_t>(o.n)));
  r.scalars.emplace("a", ReportValue::integer(static_cast<std::int64_t>(o.a)));
  r.scalars.emplace("b", ReportValue::integer(static_cast<std::int64_t>(o.b)));
  r.scalars.emplace("trials",
                    ReportValue::integer(static_cast<std::int64_t>(o.trials)));
  r.scalars.emplace("seed",
                    ReportValue::integer(static_cast<std::int64_t>(o.seed)));
  r.scalars.emplace("survival", ReportValue::number(check.empirical_survival));
  r.scalars.emplace("g_b", ReportValue::number(check.g_bound));
  r.scalars.emplace("lambda_star_estimate", ReportValue::number(estimate));
  r.scalars.emplace("lambda_star_exact", ReportValue::number(exact));
  emit(r, o.out, o.format);
  std::printf(
      "absorb: n=%zu a=%zu b=%zu trials=%zu seed=%" PRIu64
      " survival=%.4f (G_b=%.4f) lambda*=%.6f (exact %.6f) -> %s\n",
      o.n, o.a, o.b, o.trials, o.seed, check.empirical_survival,
      check.g_bound, estimate, exact, o.out.c_str());
  return 0;
}

// ---- walk -------------------------------------------------------------------

struct WalkOpts {
  std::uint64_t p = 0;
  std::uint64_t k_max = 40;
  bool exact = false;
  std::string out = "walk.csv";
  std::string format = "csv";
};

int run_walk(const WalkOpts& o, bool heisenberg) {
  const auto rows =
      heisenberg ? harper::heisenberg_distance_curve(o.p, o.k_max, o.exact)
                 : harper::affine_distance_curve(o.p, o.k_max, o.exact);
  Report r;
  r.scalars.emplace("group",
                    ReportValue::text(heisenberg ? "heisenberg" : "affine"));
  r.scalars.emplace("p", ReportValue::integer(static_cast<std::int64_t>(o.p)));
  r.scalars.emplace("k_max",
                    ReportValue::integer(static_cast<std::int64_t>(o.k_max)));
  r.columns = {"k", "chi_square", "tv_exact", "tv_upper_bound"};
  for (const auto& row : rows)
    r.rows.push_back({ReportValue::integer(static_cast<std::int64_t>(row.k)),
                      ReportValue::number(row.chi_square),
                      row.has_exact ? ReportValue::number(row.tv_exact)
                                    : ReportValue::null(),
                      ReportValue::number(row.tv_upper_bound)});
  emit(r, o.out, o.format);
  std::printf("walk: group=%s p=%" PRIu64 " k<=%" PRIu64
              " final chi^2=%.3e tv_bound=%.3e -> %s\n",
              heisenberg ? "heisenberg" : "affine", o.p, o.k_max,
              rows.back().chi_square, rows.back().tv_upper_bound,
              o.out.c_str());
  return 0;
}

// ---- bulk -------------------------------------------------------------------

struct BulkOpts {
  std::size_t n = 4096;
  std::size_t a = 1;
  std::size_t bins = 100;
  std::uint64_t seed = 0;  // accepted for interface uniformity; all
                           // bulk outputs are deterministic
  std::string out = "bulk.csv";
  std::string density_out;  // optional second artifact: (x, f2) table
  std::size_t density_points = 400;
  std::string format = "csv";
};

int run_bulk(const BulkOpts& o) {
  const auto hist = harper::figure1_data(o.n, o.a, o.bins);
  const auto curve = harper::DensityCurve::bulk();
  const auto emp = harper::harper_spectrum_measure(o.n, o.a);
  const double w2 = harper::wasserstein2(emp, curve);
  Report r;
  r.scalars.emplace("n", ReportValue::integer(static_cast<std::int64_t>(o.n)));
  r.scalars.emplace("a", ReportValue::integer(static_cast<std::int64_t>(o.a)));
  r.scalars.emplace("bins",
                    ReportValue::integer(static_cast<std::int64_t>(o.bins)));
  r.scalars.emplace("seed",
                    ReportValue::integer(static_cast<std::int64_t>(o.seed)));
  r.scalars.emplace("w2_to_limit", ReportValue::number(w2));
  r.columns = {"bin_left", "bin_right", "count", "empirical_density",
               "f2_at_midpoint"};
  for (const auto& row : hist)
    r.rows.push_back(
        {ReportValue::number(row.bin_left), ReportValue::number(row.bin_right),
         ReportValue::integer(static_cast<std::int64_t>(row.count)),
         ReportValue::number(row.empirical_density),
         ReportValue::number(row.f2_at_midpoint)});
  emit(r, o.out, o.format);
  if (!o.density_out.empty()) {
    // Uniform midpoint grid on [-1, 1]; midpoints never land on the x = 0
    // singularity.
    Report d;
    d.columns = {"x", "f2"};
    const double width = 2.0 / static_cast<double>(o.density_points);
    for (std::size_t i = 0; i < o.density_points; ++i) {
      const double x = -1.0 + (static_cast<double>(i) + 0.5) * width;
      d.rows.push_back({ReportValue::number(x),
                        ReportValue::number(harper::f2_density(x))});
    }
    emit(d, o.density_out, "csv");
  }
  std::printf("bulk: n=%zu a=%zu bins=%zu seed=%" PRIu64
              " W2(spectrum, limit)=%.5f -> %s%s%s\n",
              o.n, o.a, o.bins, o.seed, w2, o.out.c_str(),
              o.density_out.empty() ? "" : ", ",
              o.density_out.c_str());
  return 0;
}

// ---- self-test --------------------------------------------------------------

int run_self_test(bool coverage) {
  if (coverage) {
    for (const auto& [command, ops] : harper::cli_coverage_map())
      std::printf("%-11s -> %s\n", command.c_str(), ops.c_str());
    return 0;
  }
  int failures = 0;
  for (int id = 1; id <= harper::criterion_count(); ++id) {
    const auto r = harper::run_criterion(id, /*reduced=*/true);
    std::printf("criterion %02d [%s] %s\n", id, r.passed ? "PASS" : "FAIL",
                r.title.c_str());
    for (const auto& line : r.details) std::printf("    %s\n", line.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failures;
  }
  std::printf("%d/%d criteria passed\n", harper::criterion_count() - failures,
              harper::criterion_count());
  return failures ? 1 : 0;
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format (csv or json)")
      ->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Spectral toolkit for circulant-plus-diagonal operators: extreme "
      "eigenvalue bounds, oscillator-limit convergence, absorbing-walk "
      "simulation, group random walks, and the bulk density."};
  app.require_subcommand(1);

  SpectrumOpts spectrum;
  auto* cmd_spectrum = app.add_subcommand(
      "spectrum", "full eigenvalue list of the n x n operator (descending)");
  cmd_spectrum->add_option("--n", spectrum.n, "matrix size")->required();
  cmd_spectrum->add_option("--a", spectrum.a, "frequency parameter");
  cmd_spectrum->add_option("--out", spectrum.out, "output path");
  add_format_option(cmd_spectrum, spectrum.format);

  BoundOpts bound;
  auto* cmd_bound = app.add_subcommand(
      "bound", "closed-form extreme-eigenvalue bound report");
  cmd_bound->add_option("--n", bound.n, "matrix size")->required();
  cmd_bound->add_option("--a", bound.a, "frequency parameter");
  cmd_bound->add_option("--k", bound.k,
                        "frequency window half-width (default floor(sqrt(n)/2))");
  cmd_bound->add_option("--k-prime", bound.k_prime,
                        "position window half-width (default --k)");
  cmd_bound
      ->add_option("--variant", bound.variant,
                   "theorem1 | improved | smallest | optimize")
      ->check(CLI::IsMember({"theorem1", "improved", "smallest", "optimize"}));
  cmd_bound->add_option("--out", bound.out, "output path");
  add_format_option(cmd_bound, bound.format);

  OscillatorOpts oscillator;
  auto* cmd_oscillator = app.add_subcommand(
      "oscillator",
      "convergence table of n(1-lambda_k) towards (2k-1)pi/2");
  cmd_oscillator->add_option("--n", oscillator.sizes,
                             "matrix sizes (repeatable; default 250 500 "
                             "1000 2000)");
  cmd_oscillator->add_option("--k-max", oscillator.k_max,
                             "levels k = 1..k_max");
  cmd_oscillator->add_option("--out", oscillator.out, "output path");
  add_format_option(cmd_oscillator, oscillator.format);

  AbsorbOpts absorb;
  auto* cmd_absorb = app.add_subcommand(
      "absorb",
      "killed-walk survival vs the G_b bound and the tail decay rate");
  cmd_absorb->add_option("--n", absorb.n, "circle size");
  cmd_absorb->add_option("--a", absorb.a, "frequency parameter");
  cmd_absorb->add_option("--b", absorb.b, "window radius parameter");
  cmd_absorb->add_option("--trials", absorb.trials, "Monte-Carlo trials");
  cmd_absorb->add_option("--seed", absorb.seed, "RNG seed (default 0)");
  cmd_absorb->add_option("--horizon", absorb.horizon,
                         "tail-fit horizon (default 6 / exact rate)");
  cmd_absorb->add_option("--out", absorb.out, "output path");
  add_format_option(cmd_absorb, absorb.format);

  WalkOpts walk;
  auto* cmd_walk = app.add_subcommand(
      "walk", "group random-walk distance-to-uniform curve");
  cmd_walk->require_subcommand(1);
  auto* cmd_walk_h = cmd_walk->add_subcommand(
      "heisenberg", "four-generator walk on the order-p^3 group");
  auto* cmd_walk_a = cmd_walk->add_subcommand(
      "affine", "five-generator walk on the order-p(p-1) group");
  for (auto* sub : {cmd_walk_h, cmd_walk_a}) {
    sub->add_option("--p", walk.p, "prime modulus")->required();
    sub->add_option("--k-max", walk.k_max, "steps k = 1..k_max");
    sub->add_flag("--exact", walk.exact,
                  "also compute exact TV by dense convolution");
    sub->add_option("--out", walk.out, "output path");
    add_format_option(sub, walk.format);
  }

  BulkOpts bulk;
  auto* cmd_bulk = app.add_subcommand(
      "bulk", "spectral histogram against the limiting bulk density");
  cmd_bulk->add_option("--n", bulk.n, "matrix size (<= 10000)");
  cmd_bulk->add_option("--a", bulk.a, "frequency parameter");
  cmd_bulk->add_option("--bins", bulk.bins, "histogram bins (>= 20)");
  cmd_bulk->add_option("--seed", bulk.seed,
                       "RNG seed (accepted for uniformity; deterministic)");
  cmd_bulk->add_option("--out", bulk.out, "histogram output path");
  cmd_bulk->add_option("--density-out", bulk.density_out,
                       "optional (x, f2) table output path");
  cmd_bulk->add_option("--density-points", bulk.density_points,
                       "rows in the density table");
  add_format_option(cmd_bulk, bulk.format);

  bool coverage = false;
  auto* cmd_self_test = app.add_subcommand(
      "self-test", "run every acceptance criterion at reduced size");
  cmd_self_test->alias("self_test");
  cmd_self_test->add_flag("--coverage", coverage,
                          "print the command -> operation coverage map");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    std::fflush(stdout);
    std::fprintf(stderr, "error: %s\n\nusage:\n%s", e.what(),
                 app.help().c_str());
    return 2;
  }

  try {
    if (cmd_spectrum->parsed()) return run_spectrum(spectrum);
    if (cmd_bound->parsed()) return run_bound(bound);
    if (cmd_oscillator->parsed()) return run_oscillator(oscillator);
    if (cmd_absorb->parsed()) return run_absorb(absorb);
    if (cmd_walk->parsed()) return run_walk(walk, cmd_walk_h->parsed());
    if (cmd_bulk->parsed()) return run_bulk(bulk);
    if (cmd_self_test->parsed()) return run_self_test(coverage);
  } catch (const harper::numerical_error& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid argument: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
