#ifndef SINGLEN_REPORT_HPP
#define SINGLEN_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "singlen/dmodlen.hpp"
#include "singlen/singularity.hpp"

namespace singlen {

extern const char* const kVersion;

struct AnalysisRequest {
  std::string poly_text;
  std::vector<std::string> variables;
  int l_max = -1; // default n - 2 (at least 0)
  bool run_oracle = false;
  int pole_cap = 0; // 0 means default n, raised automatically on NotStabilized
  std::string format = "json";
};

struct OracleSummary {
  unsigned hprime_dim = 0;
  std::vector<unsigned> pole_dims;
  int pole_cap = 0;
  bool agrees = false;
};

struct Report {
  std::string input;
  std::vector<std::string> variables;
  std::vector<Rational> weights;
  unsigned mu = 0;
  std::vector<Rational> spectral; // sorted with multiplicity
  unsigned hprime_dim = 0;
  std::vector<unsigned> pole_dims;
  unsigned reduced_genus = 0;
  std::vector<unsigned> quotient_lengths;
  unsigned total_length_including_O = 0;
  unsigned length_quotient_by_O = 0;
  std::optional<OracleSummary> oracle;
  std::string order;

  std::string to_json() const;
  std::string to_text() const;
};

// Full pipeline: parse -> profile -> filtration -> lengths -> oracle (if
// requested). Throws the module errors; OracleDisagreement when the
// oracle flag is set and the dimensions do not match the spectral count.
Report run_analyze(const AnalysisRequest& req, SingularityProfile* profile_out = nullptr);

struct MembershipVerdict {
  bool in_l = false;
  std::optional<int> min_power; // set when not in L
  bool was_auto_reduced = false;
  // Witness for the not-in-L case: a test monomial whose class is
  // nonzero at the minimal level, with the class data rendered.
  std::string witness;
};

MembershipVerdict run_membership(const AnalysisRequest& req, const std::string& element_text);

// Structured error payload for the error stream.
std::string error_json(const std::string& kind, const std::string& message);

} // namespace singlen

#endif
