#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opuc/gaussian_rational.hpp"
#include "opuc/types.hpp"

namespace opuc::cli {

// Bad flags or values; the tool exits with kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Command { Identities, Eval, Universality, Asymptotics, Kernel };
enum class OutputFormat { Csv, Json };

// Rational syntax "p/q+r/si" keeps an exact value; decimal input only has the
// floating one.
struct AlphaInput {
  std::optional<GaussianRational> exact;
  cplx value;
  std::string text;
};

struct RunConfig {
  Command command = Command::Identities;
  AlphaInput alpha;
  std::size_t max_n = 20;
  std::vector<std::size_t> n_list;
  std::vector<cplx> z_grid;
  std::vector<std::pair<cplx, cplx>> ab_grid;
  OutputFormat format = OutputFormat::Csv;
  std::string out_path;
  std::uint64_t seed = 1;
  std::optional<double> tol;
};

// Throws UsageError on malformed text or |alpha| >= 1.
AlphaInput parse_alpha(std::string_view text);
// Decimal complex literal: "1.5", "-2i", "3-0.5i", "i", "1e-3+2e-1i".
cplx parse_complex(std::string_view text);
std::vector<cplx> parse_complex_list(std::string_view text);
std::vector<std::size_t> parse_size_list(std::string_view text);
// Comma-separated entries. "a:b" adds one explicit pair; plain values v form a
// set V whose full product V x V is added.
std::vector<std::pair<cplx, cplx>> parse_ab_grid(std::string_view text);

Command parse_command(std::string_view name);
std::string_view command_name(Command command);

// Fills empty n-list, grids, and tolerance with per-command defaults and checks
// command-specific preconditions. Throws UsageError.
RunConfig finalize(RunConfig config);

// 5 x 5 grid on [-0.35, 0.35]^2, all inside |z| <= 0.5.
std::vector<cplx> default_schur_grid();
// {-5,-2,0,2,5}^2 plus four complex pairs.
std::vector<std::pair<cplx, cplx>> default_ab_grid();

}  // namespace opuc::cli
