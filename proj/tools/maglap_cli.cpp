// Command-line front end: spectra tables, basis coefficient dumps, kernel
// evaluation, spectral decomposition, and the verification suites.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "maglap/errors.hpp"
#include "maglap/integrate.hpp"
#include "maglap/serialization.hpp"
#include "maglap/spectra.hpp"
#include "maglap/tolerances.hpp"
#include "maglap/verification.hpp"

namespace {

using maglap::Cplx;
using maglap::Exponents;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

ordered_json complex_json(Cplx v) {
  return ordered_json::array({v.real(), v.imag()});
}

ordered_json vector_json(const Eigen::VectorXcd& v) {
  ordered_json a = ordered_json::array();
  for (int j = 0; j < v.size(); ++j) a.push_back(complex_json(v[j]));
  return a;
}

// Comma-separated non-negative integers, e.g. "1" or "2,0,1".
Exponents parse_multi_index(const std::string& text, int n,
                            const std::string& flag) {
  Exponents out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw maglap::ParseError(flag + ": not an integer: '" + tok + "'");
    }
    if (used != tok.size() || v < 0)
      throw maglap::ParseError(flag + ": entries must be integers >= 0");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  if (static_cast<int>(out.size()) != n)
    throw maglap::ParseError(flag + ": expected " + std::to_string(n) +
                             " comma-separated entries");
  return out;
}

std::string join_index(const Exponents& e) {
  std::string s;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (j) s += ';';
    s += std::to_string(e[j]);
  }
  return s;
}

int run_spectrum(int n, double mu, int levels, const std::string& format) {
  const auto table = maglap::spectrum_table(n, mu, levels - 1);
  if (format == "csv") {
    std::cout << "l,eigenvalue_full,eigenvalue_tilde,degeneracy\n";
    for (const auto& row : table)
      std::cout << row.l << ',' << maglap::format_number(row.eigenvalue_full)
                << ',' << maglap::format_number(row.eigenvalue_tilde)
                << ",infinite\n";
    return kExitOk;
  }
  ordered_json rows = ordered_json::array();
  for (const auto& row : table) {
    ordered_json r;
    r["l"] = row.l;
    r["eigenvalue_full"] = row.eigenvalue_full;
    r["eigenvalue_tilde"] = row.eigenvalue_tilde;
    r["degeneracy"] = "infinite";
    rows.push_back(std::move(r));
  }
  ordered_json out;
  out["n"] = n;
  out["mu"] = mu;
  out["rows"] = std::move(rows);
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int run_hermite(int n, double mu, double nu, const std::string& r_text,
                const std::string& s_text, const std::string& route_text,
                const std::string& format) {
  const Exponents r = parse_multi_index(r_text, n, "--r");
  const Exponents s = parse_multi_index(s_text, n, "--s");
  const auto route = maglap::parse_route(route_text);
  if (!route) throw maglap::ParseError("--route: unknown route " + route_text);
  const maglap::ExpPoly f = maglap::hermite(r, s, nu, mu, n, *route);
  if (*route != maglap::HermiteRoute::Rodrigues) {
    const maglap::ExpPoly ref =
        maglap::hermite(r, s, nu, mu, n, maglap::HermiteRoute::Rodrigues);
    if (!maglap::approx_equal(f, ref, maglap::kRouteTol))
      std::cerr << "warning: route " << route_text
                << " disagrees with route rodrigues at these indices\n";
  }
  if (format == "csv") {
    std::cout << "a,b,re,im\n";
    for (const auto& [e, c] : f.poly().terms()) {
      Exponents a(e.begin(), e.begin() + n), b(e.begin() + n, e.end());
      std::cout << join_index(a) << ',' << join_index(b) << ','
                << maglap::format_number(c.real()) << ','
                << maglap::format_number(c.imag()) << '\n';
    }
    return kExitOk;
  }
  std::cout << maglap::to_json(f) << '\n';
  return kExitOk;
}

int run_kernel(int n, double mu, double nu, int l, const std::string& z_text,
               const std::string& w_text) {
  const Eigen::VectorXcd z = maglap::parse_complex_vector(z_text, n);
  const Eigen::VectorXcd w =
      w_text.empty() ? z : maglap::parse_complex_vector(w_text, n);
  const Cplx value = maglap::kernel_eval(l, nu, mu, n, z, w);
  ordered_json out;
  out["l"] = l;
  out["z"] = vector_json(z);
  out["w"] = vector_json(w);
  out["value"] = complex_json(value);
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int run_decompose(const std::string& path, int levels, double mu, double nu) {
  std::ifstream in(path);
  if (!in) throw maglap::ParseError("cannot open input file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const maglap::ExpPoly f = maglap::expoly_from_json(buf.str());
  const int n = f.n();

  ordered_json rows = ordered_json::array();
  maglap::ExpPoly sum = maglap::ExpPoly::zero(n);
  for (int l = 0; l < levels; ++l) {
    maglap::ExpPoly pl = maglap::project_level(f, l, nu, mu, n);
    ordered_json row;
    row["level"] = l;
    row["norm_sq"] = pl.is_zero() ? 0.0 : maglap::norm_squared(pl);
    rows.push_back(std::move(row));
    sum = maglap::add(sum, pl);
  }
  maglap::ExpPoly resid = maglap::add(f, maglap::scale(sum, -1.0));
  const double rnorm =
      resid.is_zero() ? 0.0 : std::sqrt(maglap::norm_squared(resid));

  ordered_json out;
  out["n"] = n;
  out["levels"] = std::move(rows);
  out["residual"] = rnorm;
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int run_verify(const std::string& suite, const maglap::VerifyOptions& opt) {
  if (!maglap::suite_known(suite)) {
    std::cerr << "unknown suite: " << suite << '\n';
    return kExitUsage;
  }
  const maglap::VerificationReport report = maglap::run_suite(suite, opt);
  std::cout << maglap::to_json(report) << '\n';
  return report.all_passed() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Laplacian spectral toolkit"};
  app.require_subcommand(1);

  int n = 1, levels = 1, l = 0, max_degree = 3;
  double mu = 1.0, nu = 0.0;
  std::uint64_t seed = 1;
  std::string r_text = "0", s_text = "0", route_text = "rodrigues";
  std::string format = "json", z_text, w_text, input_path, suite;

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalue table");
  spectrum->add_option("--n", n, "complex dimension");
  spectrum->add_option("--mu", mu, "field strength (> 0)");
  spectrum->add_option("--nu", nu, "rotation parameter (spectrum-neutral)");
  spectrum->add_option("--levels", levels, "number of levels")
      ->check(CLI::PositiveNumber);
  spectrum->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* hermite = app.add_subcommand("hermite", "Basis coefficient dump");
  hermite->add_option("--n", n, "complex dimension");
  hermite->add_option("--mu", mu, "field strength (> 0)");
  hermite->add_option("--nu", nu, "rotation parameter");
  hermite->add_option("--r", r_text, "first multi-index, comma-separated");
  hermite->add_option("--s", s_text, "second multi-index, comma-separated");
  hermite->add_option("--route", route_text,
                      "rodrigues | ladder | explicit | paper-verbatim");
  hermite->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* kernel = app.add_subcommand("kernel", "Kernel evaluation");
  kernel->add_option("--n", n, "complex dimension");
  kernel->add_option("--mu", mu, "field strength (> 0)");
  kernel->add_option("--nu", nu, "rotation parameter");
  kernel->add_option("--l", l, "level")->check(CLI::NonNegativeNumber);
  kernel->add_option("--z", z_text, "first point, re+imi tokens")->required();
  kernel->add_option("--w", w_text, "second point (defaults to --z)");

  auto* decompose =
      app.add_subcommand("decompose", "Per-level norms and residual");
  decompose->add_option("input", input_path, "function as JSON file")
      ->required();
  decompose->add_option("--levels", levels, "number of levels")
      ->check(CLI::PositiveNumber);
  decompose->add_option("--mu", mu, "field strength (> 0)");
  decompose->add_option("--nu", nu, "rotation parameter");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suites_help;
  for (const auto& name : maglap::suite_names()) {
    if (!suites_help.empty()) suites_help += " | ";
    suites_help += name;
  }
  verify->add_option("suite", suite, suites_help)->required();
  verify->add_option("--n", n, "complex dimension");
  verify->add_option("--mu", mu, "field strength (> 0)");
  verify->add_option("--nu", nu, "rotation parameter");
  verify->add_option("--max-degree", max_degree, "degree cap for checks")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--l", l, "level used by level-specific checks")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (spectrum->parsed()) return run_spectrum(n, mu, levels, format);
    if (hermite->parsed())
      return run_hermite(n, mu, nu, r_text, s_text, route_text, format);
    if (kernel->parsed()) return run_kernel(n, mu, nu, l, z_text, w_text);
    if (decompose->parsed()) return run_decompose(input_path, levels, mu, nu);
    if (verify->parsed()) {
      maglap::VerifyOptions opt;
      opt.n = n;
      opt.mu = mu;
      opt.nu = nu;
      opt.max_degree = max_degree;
      opt.seed = seed;
      if (verify->count("--l")) opt.l = l;
      return run_verify(suite, opt);
    }
  } catch (const maglap::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const maglap::InvalidParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const maglap::NonIntegrable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const maglap::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
