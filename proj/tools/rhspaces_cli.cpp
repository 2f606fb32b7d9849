// rhspaces: bounds, constructions and verification for constant-rank spaces
// of real symmetric and complex hermitian matrices.
//
// Exit codes: 0 success, 1 verification or I/O failure, 2 usage or parse error.

#include "rhspaces/classifier.hpp"
#include "rhspaces/rh_core.hpp"
#include "rhspaces/serialize.hpp"
#include "rhspaces/spaces.hpp"
#include "rhspaces/verifier.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace rhspaces;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Thrown for anything the user typed wrong; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Integer parse_positive_integer(const std::string& text, const char* what) {
  Rational value;
  try {
    value = parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(what) + " must be an integer, got '" + text + "'");
  }
  if (value.get_den() != 1 || sgn(value) < 0) {
    throw UsageError(std::string(what) + " must be a nonnegative integer, got '" + text + "'");
  }
  return value.get_num();
}

unsigned parse_corank(const std::string& text) {
  const Integer s = parse_positive_integer(text, "s");
  if (s > 2) throw UsageError("corank s must be 0, 1 or 2");
  return static_cast<unsigned>(s.get_ui());
}

BoundQuery make_query(const std::string& n_text, const std::string& s_text, bool hermitian) {
  BoundQuery query{hermitian ? Field::complex : Field::real, parse_positive_integer(n_text, "n"),
                   parse_corank(s_text)};
  try {
    query.validate();
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  return query;
}

std::uint64_t parse_seed(const std::string& text, const char* origin) {
  const Integer seed = parse_positive_integer(text, origin);
  if (!seed.fits_ulong_p()) throw UsageError(std::string(origin) + " must fit in 64 bits");
  return seed.get_ui();
}

int cmd_rho(const std::string& r_text, bool complex) {
  HalfInteger r(0);
  try {
    r = HalfInteger::parse(r_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (r.sign() <= 0) throw UsageError("r must be positive");
  std::cout << (complex ? rho_c(r) : rho(r)) << "\n";
  return kOk;
}

int cmd_sigma(const std::string& n_text, const std::string& h_text, bool complex) {
  const Integer n = parse_positive_integer(n_text, "n");
  const Integer h = parse_positive_integer(h_text, "h");
  if (sgn(n) == 0 || h > n) throw UsageError("sigma needs n >= 1 and 0 <= h <= n");
  std::cout << sigma(n, h, complex ? Field::complex : Field::real) << "\n";
  return kOk;
}

int cmd_classify(const std::string& n_text, const std::string& s_text, bool hermitian) {
  const BoundReport report = classify(make_query(n_text, s_text, hermitian));
  std::cout << report_to_json(report).dump(2) << "\n";
  return kOk;
}

int cmd_construct(const std::string& n_text, const std::string& s_text, bool hermitian,
                  const std::string& output) {
  const BoundQuery query = make_query(n_text, s_text, hermitian);
  if (!query.n.fits_ulong_p() || query.n > 4096) throw UsageError("n is too large to construct");
  const std::string text = space_to_text(build_space(query));
  if (output.empty() || output == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream file(output, std::ios::binary);
  file << text;
  file.close();
  if (!file) {
    std::cerr << "error: cannot write " << output << "\n";
    return kFailure;
  }
  return kOk;
}

int cmd_verify(const std::string& path, std::size_t samples, const std::optional<std::string>& seed_text) {
  VerificationOptions options;
  options.samples = samples;
  if (seed_text) {
    options.seed = parse_seed(*seed_text, "--seed");
  } else if (const char* env = std::getenv("RH_SEED"); env != nullptr && *env != '\0') {
    options.seed = parse_seed(env, "RH_SEED");
  }

  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  AnySpace space = space_from_text(buffer.str());

  const VerificationReport report = verify_space(space, options);
  std::cout << report_to_json(report).dump(2) << "\n";
  if (report.passed()) return kOk;

  std::cerr << "verification failed:";
  if (!report.self_adjoint_ok) std::cerr << " basis is not self-adjoint;";
  if (!report.independence_ok) std::cerr << " basis is linearly dependent;";
  if (!report.certificate_ok) std::cerr << " certificate: " << report.certificate_reason << ";";
  if (!report.rank_failures.empty()) std::cerr << " " << report.rank_failures.size() << " rank failures;";
  if (report.signature_ok == false) std::cerr << " signature check failed;";
  std::cerr << "\n";
  return kFailure;
}

int cmd_table(std::size_t max_n, unsigned s, bool hermitian, const std::string& format) {
  if (max_n < 2) throw UsageError("--max-n must be at least 2");
  if (hermitian && s > 1) throw UsageError("hermitian tables support s = 0 or 1");
  const bool markdown = format == "md";
  const char* columns[] = {"n", "k", "sigma", "lower", "upper", "status", "rule"};
  if (markdown) {
    std::cout << "|";
    for (const char* c : columns) std::cout << " " << c << " |";
    std::cout << "\n|";
    for (std::size_t i = 0; i < std::size(columns); ++i) std::cout << "---|";
    std::cout << "\n";
  } else {
    for (std::size_t i = 0; i < std::size(columns); ++i) std::cout << (i ? "\t" : "") << columns[i];
    std::cout << "\n";
  }
  for (std::size_t n = s + 1; n <= max_n; ++n) {
    const BoundReport r = classify(BoundQuery{hermitian ? Field::complex : Field::real,
                                              Integer(static_cast<unsigned long>(n)), s});
    const std::string cells[] = {std::to_string(n),       std::to_string(n - s),
                                 std::to_string(r.sigma), std::to_string(r.lower),
                                 std::to_string(r.upper), std::string(to_string(r.status)),
                                 std::string(to_string(r.rule))};
    if (markdown) {
      std::cout << "|";
      for (const auto& c : cells) std::cout << " " << c << " |";
    } else {
      for (std::size_t i = 0; i < std::size(cells); ++i) std::cout << (i ? "\t" : "") << cells[i];
    }
    std::cout << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radon-Hurwitz bounds and certified constant-rank matrix spaces"};
  app.require_subcommand(1);

  bool complex = false;
  bool hermitian = false;
  std::string r_text, n_text, h_text, s_text, output, path, format = "tsv";
  std::optional<std::string> seed_text;
  std::size_t samples = 200;
  std::size_t max_n = 0;
  unsigned table_s = 0;

  auto* rho_cmd = app.add_subcommand("rho", "Radon-Hurwitz number of an integer or half-integer p/2");
  rho_cmd->add_option("r", r_text, "argument, e.g. 16 or 3/2")->required();
  rho_cmd->add_flag("--complex", complex, "complex Radon-Hurwitz number");

  auto* sigma_cmd = app.add_subcommand("sigma", "window maximum of rho over h/2 .. n - h/2");
  sigma_cmd->add_option("n", n_text, "matrix size")->required();
  sigma_cmd->add_option("rank", h_text, "rank h")->required();
  sigma_cmd->add_flag("--complex", complex, "use the complex Radon-Hurwitz number");

  auto* classify_cmd = app.add_subcommand("classify", "bounds on the dimension of rank n-s spaces");
  classify_cmd->add_option("n", n_text, "matrix size")->required();
  classify_cmd->add_option("s", s_text, "corank")->required();
  classify_cmd->add_flag("--hermitian", hermitian, "complex hermitian instead of real symmetric");

  auto* construct_cmd = app.add_subcommand("construct", "write a certified constant-rank space");
  construct_cmd->add_option("n", n_text, "matrix size")->required();
  construct_cmd->add_option("s", s_text, "corank")->required();
  construct_cmd->add_flag("--hermitian", hermitian, "complex hermitian instead of real symmetric");
  construct_cmd->add_option("-o,--output", output, "output file (default: standard output)");

  auto* verify_cmd = app.add_subcommand("verify", "check a space file");
  verify_cmd->add_option("file", path, "space file")->required();
  verify_cmd->add_option("--samples", samples, "random coefficient vectors")->capture_default_str();
  verify_cmd->add_option("--seed", seed_text, "sampling seed (default: $RH_SEED or 0)");

  auto* table_cmd = app.add_subcommand("table", "bounds for every n up to --max-n");
  table_cmd->add_option("--max-n", max_n, "largest matrix size")->required();
  table_cmd->add_option("--s", table_s, "corank")->check(CLI::Range(0, 2))->capture_default_str();
  table_cmd->add_flag("--hermitian", hermitian, "complex hermitian instead of real symmetric");
  table_cmd->add_option("--format", format, "tsv or md")
      ->check(CLI::IsMember({"tsv", "md"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*rho_cmd) return cmd_rho(r_text, complex);
    if (*sigma_cmd) return cmd_sigma(n_text, h_text, complex);
    if (*classify_cmd) return cmd_classify(n_text, s_text, hermitian);
    if (*construct_cmd) return cmd_construct(n_text, s_text, hermitian, output);
    if (*verify_cmd) return cmd_verify(path, samples, seed_text);
    if (*table_cmd) return cmd_table(max_n, table_s, hermitian, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SchemaError& e) {
    std::cerr << "error: malformed space file: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
