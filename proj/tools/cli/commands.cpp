#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "opuc/geronimus.hpp"
#include "opuc/kernels.hpp"
#include "opuc/random.hpp"
#include "opuc/szego.hpp"

namespace opuc::cli {

namespace {

using Cell = std::variant<std::monostate, long long, double, std::string>;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Rows are buffered and written once, in insertion order.
class Table {
 public:
  explicit Table(std::string_view header) {
    std::size_t start = 0;
    while (start <= header.size()) {
      const auto pos = header.find(',', start);
      columns_.emplace_back(header.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    header_ = std::string(header);
  }

  void add(std::vector<Cell> row) { rows_.push_back(std::move(row)); }

  void write(std::ostream& out, OutputFormat format, const nlohmann::json& extra = {}) const {
    if (format == OutputFormat::Csv) {
      out << header_ << '\n';
      for (const auto& row : rows_) {
        for (std::size_t k = 0; k < row.size(); ++k) {
          if (k) out << ',';
          std::visit(
              [&out](const auto& v) {
                using V = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<V, long long>) out << v;
                if constexpr (std::is_same_v<V, double>) out << format_double(v);
                if constexpr (std::is_same_v<V, std::string>) out << v;
              },
              row[k]);
        }
        out << '\n';
      }
      return;
    }
    nlohmann::json records = nlohmann::json::array();
    for (const auto& row : rows_) {
      nlohmann::json obj = nlohmann::json::object();
      for (std::size_t k = 0; k < row.size(); ++k) {
        std::visit(
            [&](const auto& v) {
              using V = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<V, std::monostate>) obj[columns_[k]] = nullptr;
              if constexpr (std::is_same_v<V, double>) {
                obj[columns_[k]] = std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
              }
              if constexpr (std::is_same_v<V, long long> || std::is_same_v<V, std::string>) obj[columns_[k]] = v;
            },
            row[k]);
      }
      records.push_back(std::move(obj));
    }
    nlohmann::json doc = {{"records", std::move(records)}};
    if (extra.is_object()) doc.update(extra);
    out << doc.dump(2) << '\n';
  }

 private:
  std::string header_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

long long as_ll(std::size_t v) { return static_cast<long long>(v); }

// Each identity is checked for every degree up to max_n.
struct IdentityCheck {
  std::string name;
  std::function<bool(std::size_t)> holds;
};

std::vector<IdentityCheck> identity_suite(const ExactGeronimusParams& params, std::size_t max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto random_seq = random_verblunsky(rng, max_n);
  const auto constant_seq = params.as_sequence(max_n);
  const auto recursion = szego_sequence(constant_seq, max_n);

  return {
      {"closed_form_vs_recursion",
       [=](std::size_t n) {
         const auto closed = geronimus_monic(params, n);
         return closed.first == recursion[n].first && closed.star == recursion[n].star;
       }},
      {"mclaughlin_transfer_power",
       [=](std::size_t n) {
         const auto t = transfer_matrix(params.alpha());
         auto repeated = Matrix2<GaussianRationalPoly>::identity();
         for (std::size_t k = 0; k < n; ++k) repeated = t * repeated;
         const auto power = mclaughlin_power(t, n);
         return power == repeated && power.a + power.b == recursion[n].first && power.c + power.d == recursion[n].star;
       }},
      {"wall_closed_vs_pinter_nevai",
       [=](std::size_t n) {
         const auto closed = wall_closed(params, n);
         const auto pn = wall_pinter_nevai(params, n);
         return closed.a == pn.a && closed.b == pn.b;
       }},
      {"paraorthogonal_sum_at_one", [=](std::size_t n) { return n == 0 || geronone_check(params, n); }},
      {"pell_chebyshev", [](std::size_t n) { return n == 0 || pell_check(static_cast<long>(n)); }},
      {"wronskian_constant", [=](std::size_t n) { return wronskian_identity_check(constant_seq, n); }},
      {"wronskian_random_sequence", [=](std::size_t n) { return wronskian_identity_check(random_seq, n); }},
  };
}

std::ostream& open_note(std::ostream& log) { return log << "# "; }

}  // namespace

int cmd_identities(const RunConfig& config, std::ostream& out, std::ostream& log) {
  const ExactGeronimusParams params(*config.alpha.exact);
  Table table(kIdentitiesHeader);
  bool all_pass = true;
  for (const auto& check : identity_suite(params, config.max_n, config.seed)) {
    bool ok = true;
    std::size_t failed_at = 0;
    for (std::size_t n = 0; n <= config.max_n && ok; ++n) {
      try {
        ok = check.holds(n);
      } catch (const std::exception& e) {
        open_note(log) << check.name << " threw at n=" << n << ": " << e.what() << '\n';
        ok = false;
      }
      if (!ok) failed_at = n;
    }
    if (!ok) open_note(log) << check.name << " failed at n=" << failed_at << '\n';
    all_pass = all_pass && ok;
    table.add({check.name, as_ll(config.max_n), std::string(ok ? "pass" : "fail")});
  }
  table.write(out, config.format);
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& /*log*/) {
  const GeronimusParams params(config.alpha.value);
  Table table(kEvalHeader);
  for (const auto n : config.n_list) {
    for (const cplx z : config.z_grid) {
      const auto on = geronimus_orthonormal(params, n, z);
      const auto mo = geronimus_monic(params, n, z);
      const cplx phi = unscaled(on.first, on.exponent);
      const cplx phi_star = unscaled(on.star, on.exponent);
      const cplx big_phi = unscaled(mo.first, mo.exponent);
      const cplx big_phi_star = unscaled(mo.star, mo.exponent);
      table.add({as_ll(n), z.real(), z.imag(), phi.real(), phi.imag(), phi_star.real(), phi_star.imag(),
                 big_phi.real(), big_phi.imag(), big_phi_star.real(), big_phi_star.imag()});
    }
  }
  table.write(out, config.format);
  return kExitOk;
}

int cmd_universality(const RunConfig& config, std::ostream& out, std::ostream& log) {
  const GeronimusParams params(config.alpha.value);
  Table table(kUniversalityHeader);
  std::map<std::size_t, double> sup_error;
  for (const auto n : config.n_list) {
    double& sup = sup_error[n];
    for (const auto& [a, b] : config.ab_grid) {
      const auto r = universality_ratio(params, n, a, b);
      sup = std::max(sup, r.abs_error);
      table.add({as_ll(n), a.real(), a.imag(), b.real(), b.imag(), r.empirical.real(), r.empirical.imag(),
                 r.limit.real(), r.limit.imag(), r.abs_error});
    }
  }
  nlohmann::json summary = nlohmann::json::array();
  for (const auto& [n, sup] : sup_error) {
    open_note(log) << "n=" << n << " sup_abs_err=" << format_double(sup) << '\n';
    summary.push_back({{"n", n}, {"sup_abs_err", sup}});
  }
  table.write(out, config.format, {{"summary", summary}});
  const double final_sup = sup_error.at(config.n_list.back());
  return final_sup <= *config.tol ? kExitOk : kExitCheckFailed;
}

int cmd_asymptotics(const RunConfig& config, std::ostream& out, std::ostream& log) {
  const GeronimusParams params(config.alpha.value);
  std::vector<cplx> schur_points;
  std::vector<std::pair<cplx, cplx>> ratio_points;  // (z, limit)
  for (const cplx z : config.z_grid) {
    if (std::abs(z) < 1.0) schur_points.push_back(z);
    try {
      ratio_points.emplace_back(z, ratio_limit(params, z));
    } catch (const std::domain_error& e) {
      open_note(log) << "ratio skipped at z=" << format_double(z.real()) << (z.imag() < 0 ? "" : "+")
                     << format_double(z.imag()) << "i: " << e.what() << '\n';
    }
  }
  const bool edge = params.is_real_negative();
  Table table(kAsymptoticsHeader);
  double final_schur = 0.0;
  double final_ratio = 0.0;
  for (const auto n : config.n_list) {
    double schur_err = 0.0;
    for (const cplx z : schur_points) {
      schur_err = std::max(schur_err, std::abs(wall_ratio(params, n, z) - schur_function(params, z)));
    }
    double ratio_err = 0.0;
    for (const auto& [z, limit] : ratio_points) {
      const auto lo = geronimus_orthonormal(params, n, z);
      const auto hi = geronimus_orthonormal(params, n + 1, z);
      ratio_err = std::max(ratio_err, std::abs(unscaled(hi.first / lo.first, hi.exponent - lo.exponent) - limit));
    }
    std::vector<Cell> row{as_ll(n), schur_points.empty() ? Cell{} : Cell{schur_err},
                          ratio_points.empty() ? Cell{} : Cell{ratio_err}};
    if (edge) {
      const auto g = edge_growth(params, n);
      row.insert(row.end(), {g.scaled, g.limit_constant, std::abs(g.scaled / g.limit_constant - 1.0)});
    } else {
      row.insert(row.end(), {Cell{}, Cell{}, Cell{}});
    }
    table.add(std::move(row));
    final_schur = schur_err;
    final_ratio = ratio_err;
  }
  table.write(out, config.format);
  return final_schur <= *config.tol && final_ratio <= *config.tol ? kExitOk : kExitCheckFailed;
}

int cmd_kernel(const RunConfig& config, std::ostream& out, std::ostream& /*log*/) {
  const GeronimusParams params(config.alpha.value);
  Table table(kKernelHeader);
  bool ok = true;
  for (const auto n : config.n_list) {
    for (const cplx z : config.z_grid) {
      for (const cplx w : config.z_grid) {
        const cplx sum = cd_kernel_sum(params, n, z, w).value;
        std::vector<Cell> row{as_ll(n), z.real(), z.imag(), w.real(), w.imag(), sum.real(), sum.imag()};
        if (std::abs(1.0 - z * std::conj(w)) >= kCdDiagonalGuard) {
          const cplx cd = cd_kernel_formula(params, n, z, w).value;
          const double rel = std::abs(sum - cd) / std::abs(sum);
          ok = ok && rel <= *config.tol;
          row.insert(row.end(), {cd.real(), cd.imag(), rel});
        } else {
          row.insert(row.end(), {Cell{}, Cell{}, Cell{}});
        }
        table.add(std::move(row));
      }
    }
  }
  table.write(out, config.format);
  return ok ? kExitOk : kExitCheckFailed;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& log) {
  switch (config.command) {
    case Command::Identities:
      return cmd_identities(config, out, log);
    case Command::Eval:
      return cmd_eval(config, out, log);
    case Command::Universality:
      return cmd_universality(config, out, log);
    case Command::Asymptotics:
      return cmd_asymptotics(config, out, log);
    case Command::Kernel:
      return cmd_kernel(config, out, log);
  }
  return kExitUsage;
}

}  // namespace opuc::cli
