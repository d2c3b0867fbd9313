// symins: verify symmetric insertion instances, evaluate MZVs and check
// closed-form families numerically.
//
//   symins verify --a 1,0,0
//   symins eval --zeta 1,3 --digits 50
//   symins check --family bbbl --n 1 --m 1
//   symins check --family symmetric --a 1,0,0
//   symins check --family bowman-bradley --sweep --format csv
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symins/symins.hpp"

namespace {

using namespace symins;

constexpr int kUsageError = 2;
constexpr int kVerificationFailure = 1;

struct RunConfig {
  int digits = 60;
  std::string max_denominator = "1000000000000";
  int weight_cap = 14;
  std::string out;
  std::string format = "json";
  unsigned threads = 1;

  NumericsConfig numerics() const {
    NumericsConfig cfg;
    cfg.digits = digits;
    cfg.max_denominator = mpz_class(max_denominator);
    cfg.weight_cap = weight_cap;
    cfg.threads = threads;
    cfg.max_digits = std::max(cfg.max_digits, digits);
    return cfg;
  }
};

std::vector<int> parse_integers(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw PreconditionError("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw PreconditionError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw PreconditionError("empty integer list");
  return out;
}

void emit(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw std::runtime_error("cannot write " + cfg.out);
  file << payload;
  if (!payload.empty() && payload.back() != '\n') file << '\n';
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", cfg.out, "Write output to this file instead of stdout");
  cmd->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 256u));
}

void add_numeric(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--digits", cfg.digits, "Trusted decimal digits")
      ->envname("SYMINS_DIGITS")
      ->check(CLI::Range(20, 1000));
  cmd->add_option("--max-den", cfg.max_denominator, "Largest denominator accepted by reconstruction");
  cmd->add_option("--weight-cap", cfg.weight_cap, "Largest weight evaluated")
      ->envname("SYMINS_WEIGHT_CAP")
      ->check(CLI::Range(4, 64));
}

int run_verify(const RunConfig& cfg, const std::string& a_text) {
  const InsertionInstance inst = build_instance(parse_integers(a_text));
  const CancellationCertificate cert = verify_instance(inst, cfg.threads);
  if (cfg.format == "json") {
    emit(cfg, to_json(cert).dump(2));
  } else if (cfg.format == "csv") {
    emit(cfg, csv_header_checks() + "\n" + to_csv_rows(cert));
  } else {
    emit(cfg, to_text(cert));
  }
  if (!cert.verified) {
    std::cerr << to_text(cert);
    return kVerificationFailure;
  }
  return 0;
}

int run_eval(const RunConfig& cfg, const std::string& zeta_text, long oracle_terms) {
  const Composition c{parse_integers(zeta_text)};
  const NumericsConfig ncfg = cfg.numerics();
  const HighPrecisionReal fast = eval_mzv_fast(c, cfg.digits, ncfg.max_digits);
  const HighPrecisionReal series = eval_mzv_series(c, oracle_terms);
  const double gap = abs(fast.value - series.value).log10_abs();
  const int agreement = std::isinf(gap) ? series.digits : std::max(0, static_cast<int>(std::floor(-gap)));

  if (cfg.format == "json") {
    ordered_json j;
    j["composition"] = c.parts;
    j["weight"] = c.weight();
    j["digits"] = cfg.digits;
    j["value"] = fast.value.to_fixed(cfg.digits);
    j["oracle_terms"] = oracle_terms;
    j["oracle_value"] = series.value.to_fixed(18);
    j["oracle_tail_bound"] = series.error_bound;
    j["agreement_digits"] = agreement;
    emit(cfg, j.dump(2));
  } else if (cfg.format == "csv") {
    emit(cfg, "composition,weight,digits,value,agreement_digits\n\"" + c.to_string() + "\"," +
                  std::to_string(c.weight()) + "," + std::to_string(cfg.digits) + "," +
                  fast.value.to_fixed(cfg.digits) + "," + std::to_string(agreement));
  } else {
    std::ostringstream out;
    out << "zeta(" << c.to_string() << ") = " << fast.value.to_fixed(cfg.digits) << '\n'
        << "engine agreement: " << agreement << " digits (series oracle, " << oracle_terms
        << " terms, tail bound " << series.error_bound << ")\n";
    emit(cfg, out.str());
  }
  return 0;
}

/// Non-increasing vectors of length 2n+1 with weight <= cap.
std::vector<std::vector<int>> multiset_vectors(int cap) {
  std::vector<std::vector<int>> out;
  for (int n = 1; 4 * n <= cap; ++n) {
    const int budget = (cap - 4 * n) / 2;
    for (int total = 0; total <= budget; ++total) {
      for (auto& v : weak_compositions(total, 2 * n + 1)) {
        if (std::is_sorted(v.rbegin(), v.rend())) out.push_back(std::move(v));
      }
    }
  }
  return out;
}

/// Vectors that are the lexicographically smallest of their rotations.
std::vector<std::vector<int>> necklace_vectors(int cap) {
  std::vector<std::vector<int>> out;
  for (int n = 1; 4 * n <= cap; ++n) {
    const int budget = (cap - 4 * n) / 2;
    for (int total = 0; total <= budget; ++total) {
      for (auto& v : weak_compositions(total, 2 * n + 1)) {
        bool smallest = true;
        std::vector<int> rotated = v;
        for (std::size_t k = 1; k < v.size() && smallest; ++k) {
          std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
          if (rotated < v) smallest = false;
        }
        if (smallest) out.push_back(std::move(v));
      }
    }
  }
  return out;
}

struct CheckArgs {
  std::string family;
  std::optional<int> n;
  std::optional<int> m;
  std::string a;
  bool sweep = false;
};

int run_check(const RunConfig& cfg, const CheckArgs& args) {
  const NumericsConfig ncfg = cfg.numerics();
  std::vector<NumericReport> reports;
  const bool by_nm = args.family == "bbbl" || args.family == "bowman-bradley";

  auto one_nm = [&](int n, int m) {
    return args.family == "bbbl" ? check_bbbl_family(n, m, ncfg) : check_bowman_bradley(n, m, ncfg);
  };
  auto one_a = [&](const std::vector<int>& a) {
    if (args.family == "cyclic") return check_cyclic_insertion(a, ncfg);
    const CancellationCertificate cert = verify_instance(build_instance(a), cfg.threads);
    return check_symmetric_sum(a, ncfg, &cert);
  };

  if (args.sweep) {
    if (by_nm) {
      for (int n = 1; 4 * n <= cfg.weight_cap; ++n) {
        for (int m = 0; 4 * n + 2 * m * (args.family == "bbbl" ? 2 * n + 1 : 1) <= cfg.weight_cap; ++m) {
          reports.push_back(one_nm(n, m));
        }
      }
    } else {
      const auto vectors = args.family == "cyclic" ? necklace_vectors(cfg.weight_cap) : multiset_vectors(cfg.weight_cap);
      for (const auto& a : vectors) reports.push_back(one_a(a));
    }
  } else if (by_nm) {
    if (!args.n || !args.m) throw PreconditionError("--family " + args.family + " needs --n and --m");
    reports.push_back(one_nm(*args.n, *args.m));
  } else {
    if (args.a.empty()) throw PreconditionError("--family " + args.family + " needs --a");
    reports.push_back(one_a(parse_integers(args.a)));
  }

  if (cfg.format == "json") {
    if (reports.size() == 1 && !args.sweep) {
      emit(cfg, to_json(reports.front()).dump(2));
    } else {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      emit(cfg, arr.dump(2));
    }
  } else if (cfg.format == "csv") {
    std::string payload = csv_header_reports() + "\n";
    for (const auto& r : reports) payload += to_csv_row(r) + "\n";
    emit(cfg, payload);
  } else {
    std::string payload;
    for (const auto& r : reports) payload += to_text(r);
    emit(cfg, payload);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric insertion verifier and MZV evaluator"};
  app.require_subcommand(1);

  RunConfig cfg;

  std::string a_text;
  auto* verify = app.add_subcommand("verify", "Check that every D_{2k+1} annihilates the symmetric sum");
  verify->add_option("--a", a_text, "Comma-separated block sizes a_0,...,a_2n")->required();
  add_common(verify, cfg);

  std::string zeta_text;
  long oracle_terms = 100000;
  auto* eval = app.add_subcommand("eval", "Evaluate a multiple zeta value");
  eval->add_option("--zeta", zeta_text, "Comma-separated composition n_1,...,n_r")->required();
  eval->add_option("--oracle-terms", oracle_terms, "Terms of the nested-sum cross-check")->check(CLI::Range(10L, 100000000L));
  add_common(eval, cfg);
  add_numeric(eval, cfg);

  CheckArgs check_args;
  int n_value = -1;
  int m_value = -1;
  auto* check = app.add_subcommand("check", "Numerically check a closed-form family");
  check->add_option("--family", check_args.family, "Family to check")
      ->required()
      ->check(CLI::IsMember({"bbbl", "bowman-bradley", "cyclic", "symmetric"}));
  auto* n_opt = check->add_option("--n", n_value, "Number of 1,3 pairs")->check(CLI::NonNegativeNumber);
  auto* m_opt = check->add_option("--m", m_value, "Inserted 2s")->check(CLI::NonNegativeNumber);
  check->add_option("--a", check_args.a, "Comma-separated block sizes (cyclic, symmetric)");
  check->add_flag("--sweep", check_args.sweep, "Iterate over all parameters up to the weight cap");
  add_common(check, cfg);
  add_numeric(check, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*verify) return run_verify(cfg, a_text);
    if (*eval) return run_eval(cfg, zeta_text, oracle_terms);
    if (*check) {
      if (*n_opt) check_args.n = n_value;
      if (*m_opt) check_args.m = m_value;
      return run_check(cfg, check_args);
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return 0;
}
