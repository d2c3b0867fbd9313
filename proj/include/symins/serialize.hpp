#pragma once

// JSON, CSV and text renderings of certificates and numeric reports.
// Key order is fixed and no timestamps are written, so identical inputs
// produce byte-identical output.

#include <cstdio>
#include <limits>
#include <sstream>
#include <string>

#include "json.hpp"
#include "symins/numerics.hpp"
#include "symins/verifier.hpp"

namespace symins {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kCertificateVersion = "cert-v1";
inline constexpr const char* kReportVersion = "report-v1";

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

/// Integers that fit in int64 are written as numbers, larger ones as strings.
inline ordered_json big_integer_json(const mpz_class& v) {
  if (v.fits_slong_p()) return ordered_json(v.get_si());
  return ordered_json(v.get_str());
}

inline ordered_json rational_json(const std::optional<BigRational>& q) {
  if (!q) return nullptr;
  return ordered_json{{"num", big_integer_json(q->get_num())}, {"den", big_integer_json(q->get_den())}};
}

inline ordered_json to_json(const CheckRecord& rec, bool with_failures) {
  ordered_json j;
  j["r"] = rec.r;
  j["windows"] = rec.windows;
  j["encodings"] = rec.encodings;
  j["orbits"] = rec.orbits;
  j["residual"] = rec.residual.size();
  j["unpaired"] = rec.unpaired;
  j["window_mismatches"] = rec.window_mismatches;
  j["digest"] = hex64(rec.digest);
  if (with_failures && !rec.failures.empty()) j["failures"] = rec.failures;
  return j;
}

inline ordered_json to_json(const CancellationCertificate& cert) {
  ordered_json j;
  j["version"] = kCertificateVersion;
  j["a"] = cert.a.entries();
  j["n"] = cert.n;
  j["weight"] = cert.weight;
  j["lambda"] = cert.lambda;
  j["word_count"] = cert.word_count;
  j["sign"] = cert.sign;
  j["checks"] = ordered_json::array();
  for (const CheckRecord& rec : cert.checks) j["checks"].push_back(to_json(rec, !cert.verified));
  j["verdict"] = cert.verified ? "verified" : "failed";
  j["conclusion"] = cert.verified
                        ? "D_r S^m = 0 for all odd 3 <= r < weight; hence S^m = q zeta^m(weight) and S in pi^weight Q"
                        : "no conclusion";
  return j;
}

inline ordered_json to_json(const NumericReport& report) {
  ordered_json j;
  j["version"] = kReportVersion;
  j["family"] = report.family;
  ordered_json params = ordered_json::object();
  if (report.a) params["a"] = *report.a;
  if (report.n) params["n"] = *report.n;
  if (report.m) params["m"] = *report.m;
  j["params"] = params;
  j["weight"] = report.weight;
  j["digits"] = report.digits;
  j["value"] = report.value.to_scientific(report.digits);
  j["ratio"] = report.ratio.to_scientific(report.digits);
  j["pi_power"] = report.pi_power;
  j["reconstructed"] = rational_json(report.reconstructed);
  j["prediction"] = rational_json(report.prediction);
  j["matches_prediction"] = report.matches_prediction();
  j["basis"] = report.basis;
  j["status"] = to_string(report.status);
  return j;
}

inline std::string csv_header_reports() {
  return "family,a,n,m,weight,digits,ratio,num,den,prediction,status";
}

inline std::string rational_text(const std::optional<BigRational>& q) {
  return q ? q->get_str() : std::string();
}

inline std::string to_csv_row(const NumericReport& report) {
  std::ostringstream out;
  std::string a;
  if (report.a) {
    for (std::size_t i = 0; i < report.a->size(); ++i) a += (i ? " " : "") + std::to_string((*report.a)[i]);
  }
  out << report.family << ',' << a << ',' << (report.n ? std::to_string(*report.n) : "") << ','
      << (report.m ? std::to_string(*report.m) : "") << ',' << report.weight << ',' << report.digits << ','
      << report.ratio.to_scientific(report.digits) << ','
      << (report.reconstructed ? report.reconstructed->get_num().get_str() : "") << ','
      << (report.reconstructed ? report.reconstructed->get_den().get_str() : "") << ','
      << rational_text(report.prediction) << ',' << to_string(report.status);
  return out.str();
}

inline std::string csv_header_checks() { return "a,weight,lambda,word_count,r,windows,encodings,orbits,residual,passed"; }

inline std::string to_csv_rows(const CancellationCertificate& cert) {
  std::ostringstream out;
  std::string a;
  for (std::size_t i = 0; i < cert.a.size(); ++i) a += (i ? " " : "") + std::to_string(cert.a[i]);
  for (const CheckRecord& rec : cert.checks) {
    out << a << ',' << cert.weight << ',' << cert.lambda << ',' << cert.word_count << ',' << rec.r << ','
        << rec.windows << ',' << rec.encodings << ',' << rec.orbits << ',' << rec.residual.size() << ','
        << (rec.passed() ? "yes" : "no") << '\n';
  }
  return out.str();
}

inline std::string to_text(const CancellationCertificate& cert) {
  std::ostringstream out;
  out << "a = " << cert.a.to_string() << "  n = " << cert.n << "  weight = " << cert.weight
      << "  lambda = " << cert.lambda << "  |C| = " << cert.word_count << "  sign = " << cert.sign << '\n';
  for (const CheckRecord& rec : cert.checks) {
    out << "  D_" << rec.r << ": windows " << rec.windows << ", encodings " << rec.encodings << ", orbits "
        << rec.orbits << ", residual " << rec.residual.size() << (rec.passed() ? "  ok" : "  FAILED") << '\n';
    if (!rec.passed()) {
      for (const std::string& f : rec.failures) out << "    " << f << '\n';
    }
  }
  out << "verdict: " << (cert.verified ? "verified" : "failed") << '\n';
  return out.str();
}

inline std::string to_text(const NumericReport& report) {
  std::ostringstream out;
  out << report.family;
  if (report.a) {
    out << " a = [";
    for (std::size_t i = 0; i < report.a->size(); ++i) out << (i ? "," : "") << (*report.a)[i];
    out << ']';
  }
  if (report.n) out << " n = " << *report.n;
  if (report.m) out << " m = " << *report.m;
  out << "  weight " << report.weight << '\n';
  out << "  S        = " << report.value.to_scientific(report.digits) << '\n';
  out << "  S/pi^" << report.pi_power << " = " << report.ratio.to_scientific(report.digits) << '\n';
  out << "  q        = " << (report.reconstructed ? report.reconstructed->get_str() : "(none)") << '\n';
  if (report.prediction) {
    out << "  expected = " << report.prediction->get_str() << " (" << report.basis << ")"
        << (report.matches_prediction() ? "  match" : "") << '\n';
  }
  out << "  status   = " << to_string(report.status) << '\n';
  return out.str();
}

}  // namespace symins
