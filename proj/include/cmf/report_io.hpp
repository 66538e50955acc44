#pragma once

#include <ostream>
#include <sstream>
#include <string>

#include "cmf/sweep.hpp"

namespace cmf {

enum class OutputFormat { json, csv };

// Big integers are written as bare decimal JSON numbers; JSON puts no bound
// on integer length.
inline std::string to_json(const CongruenceReport& r) {
  std::ostringstream os;
  os << R"({"theorem_id":")" << r.theorem_id << R"(","p":)" << r.p << R"(,"r":)" << r.r << R"(,"m":)" << r.m
     << R"(,"modulus":)" << r.modulus << R"(,"lhs_reduced":)" << r.lhs_reduced << R"(,"rhs_reduced":)"
     << r.rhs_reduced << R"(,"pass":)" << (r.pass ? "true" : "false") << "}";
  return os.str();
}

inline std::string to_json(const Witness& w) {
  std::ostringstream os;
  os << R"({"witness_for":")" << w.theorem_id << R"(","p":)" << w.p << R"(,"r":)" << w.r << R"(,"modulus":)"
     << w.modulus << R"(,"lhs_reduced":)" << w.lhs_reduced << R"(,"rhs_reduced":)" << w.rhs_reduced << "}";
  return os.str();
}

inline std::string to_json(const SignAdjudication& a) {
  std::ostringstream os;
  os << R"({"sign_adjudication":"eq2.1","nonresidue_cases":)" << a.nonresidue_cases << R"(,"printed_pass":)"
     << a.printed_pass << R"(,"negated_pass":)" << a.negated_pass << R"(,"distinguishing_cases":)"
     << a.distinguishing_cases << "}";
  return os.str();
}

inline constexpr const char* kReportCsvHeader = "theorem_id,p,r,m,modulus,lhs_reduced,rhs_reduced,pass";
inline constexpr const char* kWitnessCsvHeader = "witness_for,p,r,modulus,lhs_reduced,rhs_reduced";
inline constexpr const char* kAdjudicationCsvHeader =
    "sign_adjudication,nonresidue_cases,printed_pass,negated_pass,distinguishing_cases";

inline std::string to_csv(const CongruenceReport& r) {
  std::ostringstream os;
  os << r.theorem_id << ',' << r.p << ',' << r.r << ',' << r.m << ',' << r.modulus << ',' << r.lhs_reduced << ','
     << r.rhs_reduced << ',' << (r.pass ? "true" : "false");
  return os.str();
}

/// Newline-delimited JSON, or CSV sections (reports, then witnesses and the
/// sign adjudication when present, each under its own header).
inline void write_sweep(std::ostream& os, const SweepResult& res, OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    for (const auto& r : res.reports) os << to_json(r) << '\n';
    for (const auto& w : res.witnesses) os << to_json(w) << '\n';
    if (res.adjudication) os << to_json(*res.adjudication) << '\n';
    return;
  }
  os << kReportCsvHeader << '\n';
  for (const auto& r : res.reports) os << to_csv(r) << '\n';
  if (!res.witnesses.empty()) {
    os << kWitnessCsvHeader << '\n';
    for (const auto& w : res.witnesses)
      os << w.theorem_id << ',' << w.p << ',' << w.r << ',' << w.modulus << ',' << w.lhs_reduced << ','
         << w.rhs_reduced << '\n';
  }
  if (res.adjudication) {
    const auto& a = *res.adjudication;
    os << kAdjudicationCsvHeader << '\n'
       << "eq2.1," << a.nonresidue_cases << ',' << a.printed_pass << ',' << a.negated_pass << ','
       << a.distinguishing_cases << '\n';
  }
}

}  // namespace cmf
