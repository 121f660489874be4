// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "opuc/bessel.hpp"
#include "opuc/chebyshev.hpp"
#include "opuc/geronimus.hpp"
#include "opuc/kernels.hpp"
#include "opuc/random.hpp"
#include "opuc/szego.hpp"
#include "oracles.hpp"

namespace {

using namespace opuc;
using cplxl = std::complex<long double>;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, double a = 0.0, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

Outcome closed_form_vs_recursion() {
  std::mt19937_64 rng(101);
  long checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const ExactGeronimusParams params(random_disk_point(rng));
    const auto rec = szego_sequence(params.as_sequence(30), 30);
    for (std::size_t n = 0; n <= 30; ++n) {
      const auto closed = geronimus_monic(params, n);
      if (closed.first != rec[n].first || closed.star != rec[n].star) {
        return {false, "mismatch at alpha=" + params.alpha().to_string() + " n=" + std::to_string(n)};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " (alpha, n) pairs equal exactly"};
}

Outcome wall_equivalence() {
  std::mt19937_64 rng(102);
  std::vector<GaussianRational> alphas{GaussianRational::parse("-1/2"), GaussianRational::parse("3/5+1/5i")};
  for (int k = 0; k < 8; ++k) alphas.push_back(random_disk_point(rng));
  for (const auto& alpha : alphas) {
    const ExactGeronimusParams params(alpha);
    for (std::size_t n = 0; n <= 20; ++n) {
      const auto pn = wall_pinter_nevai(params, n);
      const auto closed = wall_closed(params, n);
      if (pn.a != closed.a || pn.b != closed.b) {
        return {false, "mismatch at alpha=" + alpha.to_string() + " n=" + std::to_string(n)};
      }
    }
  }
  return {true, std::to_string(alphas.size()) + " alphas, n <= 20, A_n and B_n equal exactly"};
}

Outcome geronimus_sum_at_one() {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 10; ++trial) {
    const ExactGeronimusParams params(random_disk_point(rng));
    for (std::size_t n = 1; n <= 30; ++n) {
      // Independent of geronone_check: build both families from the recursion.
      const auto beta = GaussianRational(1);
      const auto phi = paraorthogonal(params.as_sequence(n), n - 1, beta, ParaFamily::Phi);
      const auto psi = paraorthogonal(params.as_sequence(n), n - 1, beta, ParaFamily::Psi);
      if (!(phi(GaussianRational(1)) + psi(GaussianRational(1))).is_zero() || !geronone_check(params, n)) {
        return {false, "nonzero at alpha=" + params.alpha().to_string() + " n=" + std::to_string(n)};
      }
    }
  }
  return {true, "10 alphas, 1 <= n <= 30, sum is exactly 0"};
}

Outcome pell_and_wronskian() {
  const auto x = GaussianRationalPoly::z();
  for (long n = 1; n <= 40; ++n) {
    const auto t = cheb_exact_poly(ChebyshevKind::FirstKind_T, n);
    const auto u = cheb_exact_poly(ChebyshevKind::SecondKind_U, n - 1);
    if (t * t - (x * x - 1) * u * u != GaussianRationalPoly(1) || !pell_check(n)) {
      return {false, "Pell fails at n=" + std::to_string(n)};
    }
  }
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 10; ++trial) {
    const auto seq = random_verblunsky(rng, 20);
    const auto phi = szego_sequence(seq, 20);
    const auto psi = second_kind_sequence(seq, 20);
    Rational prod(1);
    for (std::size_t n = 0; n <= 20; ++n) {
      const auto lhs = psi[n].star * phi[n].first + phi[n].star * psi[n].first;
      if (lhs != GaussianRationalPoly::monomial(n, GaussianRational(prod * Rational(2))) ||
          !wronskian_identity_check(seq, n)) {
        return {false, "Wronskian fails at trial " + std::to_string(trial) + " n=" + std::to_string(n)};
      }
      if (n < 20) prod = prod * (Rational(1) - seq[n].norm());
    }
  }
  return {true, "Pell exact for n <= 40; Wronskian exact for 10 random sequences, n <= 20"};
}

Outcome mclaughlin() {
  std::mt19937_64 rng(105);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix2<GaussianRational> m{random_disk_point(rng) * GaussianRational(3), random_disk_point(rng),
                                      random_disk_point(rng) * GaussianRational(2), random_disk_point(rng)};
    for (std::size_t n = 0; n <= 30; ++n) {
      if (mclaughlin_power(m, n) != oracle::repeated_power(m, n)) {
        return {false, "exact mismatch at trial " + std::to_string(trial) + " n=" + std::to_string(n)};
      }
    }
  }
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix2<cplx> m{cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
    for (std::size_t n = 0; n <= 30; ++n) {
      const auto x = mclaughlin_power(m, n);
      const auto y = oracle::repeated_power(m, n);
      const double diff = std::abs(x.a - y.a) + std::abs(x.b - y.b) + std::abs(x.c - y.c) + std::abs(x.d - y.d);
      const double size = std::abs(y.a) + std::abs(y.b) + std::abs(y.c) + std::abs(y.d);
      worst = std::max(worst, diff / size);
    }
  }
  return {worst <= 1e-12, fmt("exact for 10 rational matrices, n <= 30; floating max rel err %.3g (<= 1e-12)", worst)};
}

Outcome cheb_kernel_diagonal() {
  double worst = 0.0;
  for (std::size_t n = 0; n <= 500; ++n) {
    const double nn = static_cast<double>(n);
    const double want = (nn + 1) * (nn + 2) * (2 * nn + 3) / 6.0;
    worst = std::max(worst, std::abs(cheb_kernel(n, 1.0, 1.0) - want) / want);
  }
  return {worst <= 1e-12, fmt("max rel err %.3g over n <= 500 (<= 1e-12)", worst)};
}

Outcome cd_formula_cross_check() {
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> radius(0.2, 1.8);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const GeronimusParams params(-0.5);
  double worst = 0.0;
  int pairs = 0;
  while (pairs < 100) {
    const cplx z = std::polar(radius(rng), angle(rng));
    const cplx w = std::polar(radius(rng), angle(rng));
    if (std::abs(1.0 - z * std::conj(w)) < 1e-6) continue;
    for (std::size_t n : {1u, 10u, 50u, 100u, 200u}) {
      const cplx sum = cd_kernel_sum(params, n, z, w).value;
      const cplx cd = cd_kernel_formula(params, n, z, w).value;
      worst = std::max(worst, std::abs(cd - sum) / std::abs(sum));
    }
    ++pairs;
  }
  return {worst <= 1e-8, fmt("100 random pairs, n in {1,10,50,100,200}, max rel err %.3g (<= 1e-8)", worst)};
}

Outcome schur_limit() {
  const auto grid = cli::default_schur_grid();
  double worst200 = 0.0;
  double sup50 = 0.0;
  double sup200 = 0.0;
  for (const cplx alpha : {cplx(-0.5), cplx(0.3, 0.4)}) {
    const GeronimusParams params(alpha);
    for (const cplx z : grid) {
      if (std::abs(z) > 0.5) return {false, "grid point outside |z| <= 0.5"};
      worst200 = std::max(worst200, std::abs(wall_ratio(params, 200, z) - schur_function(params, z)));
      const cplxl zl(z.real(), z.imag());
      const cplxl f = schur_function_extended(params, zl);
      sup50 = std::max(sup50, static_cast<double>(std::abs(wall_ratio_extended(params, 50, zl) - f)));
      sup200 = std::max(sup200, static_cast<double>(std::abs(wall_ratio_extended(params, 200, zl) - f)));
    }
  }
  const bool pass = worst200 <= 1e-6 && sup200 < sup50;
  return {pass, fmt("25-point grid: max err at n=200 %.3g (<= 1e-6); extended-precision sup err n=50 %.3g > n=200 %.3g",
                    worst200, sup50, sup200)};
}

Outcome ratio_asymptotics() {
  const GeronimusParams params(-0.5);
  double worst = 0.0;
  for (const cplx z : {cplx(2.0), cplx(0.0, 3.0), cplx(-2.0, -1.0)}) {
    const auto p500 = geronimus_orthonormal(params, 500, z);
    const auto p501 = geronimus_orthonormal(params, 501, z);
    const cplx finite = p501.first / p500.first * std::exp2(static_cast<double>(p501.exponent - p500.exponent));
    worst = std::max(worst, std::abs(finite - ratio_limit(params, z)));
  }
  return {worst <= 1e-6, fmt("z in {2, 3i, -2-i}, n=500: max err %.3g (<= 1e-6)", worst)};
}

Outcome generating_function() {
  const GeronimusParams params(-0.5);
  double worst = 0.0;
  for (int k = 0; k < 64; ++k) {
    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * k / 64.0);
    for (int j = 0; j < 8; ++j) {
      const cplx t = std::polar(0.1, 2.0 * std::numbers::pi * j / 8.0);
      worst = std::max(worst, generating_function_check(params, z, t, 60).error);
    }
  }
  return {worst <= 1e-10, fmt("64 points on |z|=1, 8 phases of |t|=0.1, N=60: max err %.3g (<= 1e-10)", worst)};
}

Outcome jstar_correctness() {
  std::mt19937_64 rng(111);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  double worst_oracle = 0.0;
  int checked = 0;
  while (checked < 4000) {
    const cplx a(u(rng), u(rng));
    const cplx b = checked % 4 == 0 ? cplx(u(rng), 0.0) : cplx(u(rng), u(rng));
    if (std::abs(a) > 20.0 || std::abs(b) > 20.0 || std::abs(a - b) < 1e-6) continue;
    const cplx want = oracle::jstar_bessel(a, b);
    worst_oracle = std::max(worst_oracle, std::abs(jstar(a, b) - want) / std::max(1.0, std::abs(want)));
    ++checked;
  }
  // Jump of the implemented function across |a - b| = switch, plus the raw
  // difference J*(a, a + switch) - J*(a, a), reported next to the exact
  // function's own change over that step.
  double worst_jump = 0.0;
  double worst_raw = 0.0;
  double worst_exact_step = 0.0;
  for (int k = 0; k < 400; ++k) {
    const cplx a(u(rng) * 0.99, u(rng) * 0.99);
    if (std::abs(a) > 19.9) continue;
    const cplx dir = std::polar(1.0, 0.7 * k);
    const cplx outside = jstar(a, a + 1.001 * kJstarDiagonalSwitch * dir);
    const cplx inside = jstar(a, a + 0.999 * kJstarDiagonalSwitch * dir);
    worst_jump = std::max(worst_jump, std::abs(outside - inside));
    const cplx step = a + kJstarDiagonalSwitch * dir;
    worst_raw = std::max(worst_raw, std::abs(jstar(a, step) - jstar(a, a)));
    const cplx back = a - kJstarDiagonalSwitch * dir;
    worst_exact_step = std::max(worst_exact_step, std::abs(oracle::jstar_bessel(a, step) - oracle::jstar_bessel(a, back)) / 2.0);
  }
  const double origin = std::abs(jstar(0.0, 0.0) - 1.0 / (3.0 * std::numbers::pi));
  const bool pass = worst_oracle <= 1e-9 && worst_jump <= 1e-7 && origin <= 1e-12;
  return {pass, fmt("vs Bessel series %.3g (<= 1e-9); jump at switch %.3g (<= 1e-7); |J*(0,0) - 1/(3 pi)| %.3g (<= 1e-12)",
                    worst_oracle, worst_jump, origin) +
                    fmt("; info: J*(a, a+1e-6) - J*(a, a) up to %.3g, exact first-order change over the step up to %.3g", worst_raw,
                        worst_exact_step)};
}

Outcome jz_nonvanishing() {
  const auto grid = square_grid_in_disk(25.0, 200);
  std::vector<std::pair<double, double>> xy;
  for (int i = 1; i <= 200; ++i) {
    for (int j = 1; j <= 200; ++j) xy.emplace_back(0.125 * i, 0.125 * j);
  }
  const auto report = jz_scan(grid, xy);
  const bool pass = report.min_modulus > 0.0 && report.sinh_margin_positive && report.sinh_margin_min > 0.0;
  return {pass, fmt("%.0f grid points, min |J*(t, conj t)| %.3g; min (x sinh y - y sin x)/(x^2+y^2) over positive quadrant %.3g",
                    static_cast<double>(report.points), report.min_modulus, report.sinh_margin_min)};
}

Outcome edge_growth_check() {
  std::string detail;
  bool pass = true;
  for (double alpha : {-0.3, -0.5, -0.7}) {
    const GeronimusParams params(alpha);
    double prev = INFINITY;
    bool decreasing = true;
    double last = 0.0;
    for (std::size_t n : {500u, 1000u, 2000u, 5000u}) {
      const auto g = edge_growth(params, n);
      last = std::abs(g.scaled / g.limit_constant - 1.0);
      decreasing = decreasing && last < prev;
      prev = last;
    }
    pass = pass && decreasing && last <= 0.02;
    detail += fmt("alpha=%.1f err(5000)=%.3g", alpha, last) + (decreasing ? "; " : " NOT decreasing; ");
  }
  const double c = edge_growth(GeronimusParams(-0.5), 1).limit_constant;
  pass = pass && std::abs(c - 1.0 / 9.0) <= 1e-15;
  return {pass, detail + fmt("constant at -1/2 = %.15g", c)};
}

Outcome universality() {
  const GeronimusParams params(-0.5);
  const auto grid = cli::default_ab_grid();
  double sup400 = 0.0;
  double sup4000 = 0.0;
  for (const auto& [a, b] : grid) {
    sup400 = std::max(sup400, universality_ratio(params, 400, a, b).abs_error);
    sup4000 = std::max(sup4000, universality_ratio(params, 4000, a, b).abs_error);
  }
  const bool pass = sup4000 <= 0.05 && sup4000 < sup400;
  return {pass, fmt("%.0f (a,b) pairs: sup err n=400 %.4g, n=4000 %.4g (<= 0.05)", static_cast<double>(grid.size()),
                    sup400, sup4000)};
}

Outcome plumbing() {
  struct Case {
    cli::Command command;
    const char* alpha;
    const char* header;
  };
  const Case cases[] = {
      {cli::Command::Identities, "-1/2", "identity,max_n,status"},
      {cli::Command::Eval, "-1/2", "n,re_z,im_z,re_phi,im_phi,re_phistar,im_phistar,re_Phi,im_Phi,re_Phistar,im_Phistar"},
      {cli::Command::Universality, "-1/2", "n,re_a,im_a,re_b,im_b,re_emp,im_emp,re_lim,im_lim,abs_err"},
      {cli::Command::Asymptotics, "-1/2", "n,schur_err,ratio_err,edge_scaled,edge_const,edge_rel_err"},
      {cli::Command::Kernel, "-1/2", "n,re_z,im_z,re_w,im_w,re_sum,im_sum,re_cd,im_cd,rel_err"},
  };
  for (const auto& c : cases) {
    cli::RunConfig config;
    config.command = c.command;
    config.alpha = cli::parse_alpha(c.alpha);
    config.max_n = 20;
    if (c.command == cli::Command::Universality) config.n_list = {100, 400};
    std::ostringstream out;
    std::ostringstream log;
    const int code = cli::run(cli::finalize(config), out, log);
    const std::string text = out.str();
    const std::string first = text.substr(0, text.find('\n'));
    if (first != c.header) return {false, std::string("header mismatch for ") + c.header};
    const auto columns = std::count(first.begin(), first.end(), ',');
    std::istringstream rows(text);
    std::size_t count = 0;
    for (std::string line; std::getline(rows, line); ++count) {
      if (std::count(line.begin(), line.end(), ',') != columns) return {false, "ragged row: " + line};
    }
    if (count < 2) return {false, std::string("no data rows for ") + c.header};
    if (c.command == cli::Command::Identities && code != cli::kExitOk) return {false, "identities exit " + std::to_string(code)};
  }
  for (const char* alpha : {"3/5+1/5i", "-7/9", "1/4-1/2i"}) {
    cli::RunConfig config;
    config.alpha = cli::parse_alpha(alpha);
    config.max_n = 20;
    std::ostringstream out;
    std::ostringstream log;
    if (cli::run(cli::finalize(config), out, log) != cli::kExitOk) {
      return {false, std::string("identities failed for alpha=") + alpha};
    }
  }
  return {true, "identities exit 0 for 4 alphas; all 5 CSV headers byte-exact, rows rectangular"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"closed form equals Szego recursion (exact)", closed_form_vs_recursion},
      {"Wall polynomials: closed form equals Pinter-Nevai (exact)", wall_equivalence},
      {"paraorthogonal Phi + Psi vanish at 1 (exact)", geronimus_sum_at_one},
      {"Pell identity and Wronskian identity (exact)", pell_and_wronskian},
      {"matrix power formula vs repeated multiplication", mclaughlin},
      {"Chebyshev kernel diagonal at 1", cheb_kernel_diagonal},
      {"Christoffel-Darboux formula vs direct sum", cd_formula_cross_check},
      {"Wall ratio converges to the Schur function", schur_limit},
      {"ratio asymptotics off the support", ratio_asymptotics},
      {"generating function truncation", generating_function},
      {"Bessel kernel J* correctness", jstar_correctness},
      {"J*(t, conj t) non-vanishing", jz_nonvanishing},
      {"kernel growth at the arc edge", edge_growth_check},
      {"edge universality limit", universality},
      {"CLI identities exit code and CSV headers", plumbing},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu  %s: %s [%.2fs]\n", outcome.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                outcome.detail.c_str(), secs);
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
