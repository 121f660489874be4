#include "cli/config.hpp"

#include <charconv>
#include <cmath>
#include <set>

namespace opuc::cli {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find(sep, start);
    const auto end = pos == std::string_view::npos ? text.size() : pos;
    auto part = text.substr(start, end - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (!part.empty()) parts.push_back(part);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_double(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("not a number: '" + std::string(text) + "'");
  }
  return v;
}

// Coefficient in front of 'i'; a bare sign means +-1.
double parse_imaginary_coefficient(std::string_view text) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_double(text);
}

bool looks_rational(std::string_view text) {
  for (const char c : text) {
    if (c == '.' || c == 'e' || c == 'E') return false;
  }
  return true;
}

}  // namespace

cplx parse_complex(std::string_view text) {
  if (text.empty()) throw UsageError("empty complex number");
  if (text.back() != 'i') return parse_double(text);
  const auto body = text.substr(0, text.size() - 1);
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      return {parse_double(body.substr(0, k)), parse_imaginary_coefficient(body.substr(k))};
    }
  }
  return {0.0, parse_imaginary_coefficient(body)};
}

std::vector<cplx> parse_complex_list(std::string_view text) {
  std::vector<cplx> out;
  for (const auto part : split(text, ',')) out.push_back(parse_complex(part));
  if (out.empty()) throw UsageError("empty grid");
  return out;
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
  std::vector<std::size_t> out;
  for (const auto part : split(text, ',')) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw UsageError("not a nonnegative integer: '" + std::string(part) + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty n-list");
  return out;
}

std::vector<std::pair<cplx, cplx>> parse_ab_grid(std::string_view text) {
  std::vector<cplx> values;
  std::vector<std::pair<cplx, cplx>> explicit_pairs;
  for (const auto part : split(text, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string_view::npos) {
      values.push_back(parse_complex(part));
    } else {
      explicit_pairs.emplace_back(parse_complex(part.substr(0, colon)), parse_complex(part.substr(colon + 1)));
    }
  }
  std::vector<std::pair<cplx, cplx>> out;
  for (const cplx a : values) {
    for (const cplx b : values) out.emplace_back(a, b);
  }
  out.insert(out.end(), explicit_pairs.begin(), explicit_pairs.end());
  if (out.empty()) throw UsageError("empty ab-grid");
  return out;
}

AlphaInput parse_alpha(std::string_view text) {
  AlphaInput in;
  in.text = std::string(text);
  if (looks_rational(text)) {
    try {
      in.exact = GaussianRational::parse(text);
    } catch (const std::exception& e) {
      throw UsageError("bad rational alpha '" + in.text + "': " + e.what());
    }
    if (!(in.exact->norm() < Rational(1))) throw UsageError("alpha must satisfy |alpha| < 1, got " + in.text);
    in.value = in.exact->to_complex();
    return in;
  }
  in.value = parse_complex(text);
  if (!(std::abs(in.value) < 1.0)) throw UsageError("alpha must satisfy |alpha| < 1, got " + in.text);
  return in;
}

Command parse_command(std::string_view name) {
  if (name == "identities") return Command::Identities;
  if (name == "eval") return Command::Eval;
  if (name == "universality") return Command::Universality;
  if (name == "asymptotics") return Command::Asymptotics;
  if (name == "kernel") return Command::Kernel;
  throw UsageError("unknown command '" + std::string(name) + "'");
}

std::string_view command_name(Command command) {
  switch (command) {
    case Command::Identities:
      return "identities";
    case Command::Eval:
      return "eval";
    case Command::Universality:
      return "universality";
    case Command::Asymptotics:
      return "asymptotics";
    case Command::Kernel:
      return "kernel";
  }
  return "?";
}

std::vector<cplx> default_schur_grid() {
  std::vector<cplx> out;
  for (int i = -2; i <= 2; ++i) {
    for (int j = -2; j <= 2; ++j) out.emplace_back(0.175 * i, 0.175 * j);
  }
  return out;
}

std::vector<std::pair<cplx, cplx>> default_ab_grid() {
  std::vector<std::pair<cplx, cplx>> out;
  const double values[] = {-5.0, -2.0, 0.0, 2.0, 5.0};
  for (const double a : values) {
    for (const double b : values) out.emplace_back(a, b);
  }
  out.emplace_back(cplx(1.0, 1.0), cplx(1.0, -1.0));
  out.emplace_back(cplx(0.0, 2.0), cplx(0.0, -2.0));
  out.emplace_back(cplx(3.0, 2.0), cplx(1.0, -1.0));
  out.emplace_back(cplx(-2.0, 1.0), cplx(0.0, 4.0));
  return out;
}

RunConfig finalize(RunConfig config) {
  const cplx a = config.alpha.value;
  const bool negative_real = a.imag() == 0.0 && a.real() < 0.0 && a.real() > -1.0;
  switch (config.command) {
    case Command::Identities:
      if (!config.alpha.exact) {
        throw UsageError("identities needs an exact rational alpha such as -1/2 or 3/5+1/5i");
      }
      break;
    case Command::Eval:
      if (config.n_list.empty()) config.n_list = {config.max_n};
      if (config.z_grid.empty()) config.z_grid = {cplx(1.0)};
      break;
    case Command::Universality:
      if (!negative_real) throw UsageError("universality needs real alpha in (-1, 0)");
      if (config.n_list.empty()) config.n_list = {400, 4000};
      if (config.ab_grid.empty()) config.ab_grid = default_ab_grid();
      if (!config.tol) config.tol = 0.05;
      break;
    case Command::Asymptotics:
      if (config.n_list.empty()) config.n_list = {50, 100, 200, 500};
      if (config.z_grid.empty()) {
        config.z_grid = default_schur_grid();
        config.z_grid.insert(config.z_grid.end(), {cplx(2.0), cplx(0.0, 3.0), cplx(-2.0, -1.0)});
      }
      if (!config.tol) config.tol = 1e-6;
      break;
    case Command::Kernel:
      if (config.n_list.empty()) config.n_list = {100};
      if (config.z_grid.empty()) {
        config.z_grid = {std::polar(1.0, 1.0), std::polar(1.0, 2.0), cplx(2.0), std::polar(0.5, 1.0)};
      }
      if (!config.tol) config.tol = 1e-8;
      break;
  }
  for (const auto n : config.n_list) {
    if ((config.command == Command::Universality || config.command == Command::Asymptotics) && n == 0) {
      throw UsageError("n-list entries must be positive for this command");
    }
  }
  return config;
}

}  // namespace opuc::cli
