#include "singlen/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "singlen/errors.hpp"
#include "singlen/oracle.hpp"
#include "singlen/parse.hpp"

namespace singlen {

const char* const kVersion =
#ifdef SINGLEN_VERSION
    SINGLEN_VERSION;
#else
    "0.1.0";
#endif

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rationals_json(const std::vector<Rational>& xs) {
  ordered_json a = ordered_json::array();
  for (const auto& x : xs) a.push_back(x.get_str());
  return a;
}

int default_l_max(const SingularityProfile& profile, int requested) {
  if (requested >= 0) return requested;
  return std::max(0, static_cast<int>(profile.n) - 2);
}

} // namespace

std::string Report::to_json() const {
  ordered_json j;
  j["input"] = input;
  j["variables"] = variables;
  j["weights"] = rationals_json(weights);
  j["mu"] = mu;
  j["spectral"] = rationals_json(spectral);
  j["hprime_dim"] = hprime_dim;
  j["pole_dims"] = pole_dims;
  j["reduced_genus"] = reduced_genus;
  j["quotient_lengths"] = quotient_lengths;
  j["total_length_including_O"] = total_length_including_O;
  j["length_quotient_by_O"] = length_quotient_by_O;
  if (oracle) {
    ordered_json o;
    o["hprime_dim"] = oracle->hprime_dim;
    o["pole_dims"] = oracle->pole_dims;
    o["pole_cap"] = oracle->pole_cap;
    o["agrees"] = oracle->agrees;
    j["oracle"] = o;
  } else {
    j["oracle"] = nullptr;
  }
  j["version"] = kVersion;
  j["order"] = order;
  return j.dump(2);
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "f = " << input << "\n";
  os << "variables:";
  for (const auto& v : variables) os << " " << v;
  os << "\nweights:";
  for (const auto& w : weights) os << " " << w.get_str();
  os << "\nmu = " << mu << "\n";
  os << "spectral values:";
  for (const auto& s : spectral) os << " " << s.get_str();
  os << "\ndim H' = " << hprime_dim << "\n";
  os << "pole filtration dims P_l H':";
  for (auto d : pole_dims) os << " " << d;
  os << "\nreduced genus g = " << reduced_genus << "\n";
  os << "length(D(1/f^{l+1})/L) by l:";
  for (auto d : quotient_lengths) os << " " << d;
  os << "\nlength of O(*Z) including O = " << total_length_including_O
     << "  (composition series: O, L_Z, " << hprime_dim << " x delta_o)\n";
  os << "length of O(*Z)/O = " << length_quotient_by_O << "\n";
  if (oracle) {
    os << "oracle (pole cap " << oracle->pole_cap << "): dim H' = " << oracle->hprime_dim
       << ", pole dims:";
    for (auto d : oracle->pole_dims) os << " " << d;
    os << (oracle->agrees ? "  [agrees]" : "  [DISAGREES]") << "\n";
  }
  os << "order: " << order << "\n";
  os << "version: " << kVersion << "\n";
  return os.str();
}

Report run_analyze(const AnalysisRequest& req, SingularityProfile* profile_out) {
  Polynomial f = parse_polynomial(req.poly_text, req.variables);
  SingularityProfile profile = build_profile(f);
  const int l_max = default_l_max(profile, req.l_max);
  LengthReport lengths = meromorphic_length_report(profile, l_max);

  Report r;
  r.input = req.poly_text;
  r.variables = req.variables;
  r.weights = profile.w.w;
  r.mu = profile.mu;
  for (const auto& [beta, l] : profile.spectral) r.spectral.push_back(l);
  std::sort(r.spectral.begin(), r.spectral.end(),
            [](const Rational& a, const Rational& b) { return cmp(a, b) < 0; });
  r.hprime_dim = lengths.hprime_dim;
  r.pole_dims = lengths.pole_dims.dims;
  r.reduced_genus = lengths.reduced_genus;
  r.quotient_lengths = lengths.quotient_lengths;
  r.total_length_including_O = lengths.total_length_including_O;
  r.length_quotient_by_O = lengths.length_quotient_by_O;
  r.order = profile.order.description();

  if (req.run_oracle) {
    int cap = req.pole_cap > 0 ? req.pole_cap : static_cast<int>(profile.n);
    if (cap < static_cast<int>(profile.n)) cap = static_cast<int>(profile.n);
    FiltrationTable ot;
    for (int attempt = 0;; ++attempt) {
      try {
        ot = oracle_pole_dims(profile, cap, l_max);
        break;
      } catch (const NotStabilizedError&) {
        if (attempt >= 3) throw;
        ++cap;
      }
    }
    OracleSummary sum;
    sum.hprime_dim = ot.hprime_dim;
    sum.pole_dims = ot.dims;
    sum.pole_cap = cap;
    sum.agrees = (ot.hprime_dim == r.hprime_dim && ot.dims == r.pole_dims);
    r.oracle = sum;
    if (!sum.agrees)
      throw OracleDisagreement("oracle dimensions disagree with the spectral computation");
  }

  if (profile_out) *profile_out = std::move(profile);
  return r;
}

MembershipVerdict run_membership(const AnalysisRequest& req, const std::string& element_text) {
  Polynomial f = parse_polynomial(req.poly_text, req.variables);
  SingularityProfile profile = build_profile(f);
  ElementText el = split_element(element_text);
  Polynomial h = parse_polynomial(el.numerator_text, req.variables);
  MeromorphicGerm s = reduced_germ(std::move(h), el.pole, profile);

  MembershipVerdict v;
  v.was_auto_reduced = s.was_auto_reduced;
  auto idx = min_power_index(s, profile);
  if (!idx) {
    v.in_l = true;
    return v;
  }
  v.min_power = *idx;
  // Witness: first test monomial whose class survives at pole level l+2
  // would contradict membership at l; report one nonzero class.
  for (const auto& [d, comp] : graded_components(s.numerator, profile.w)) {
    Rational target = Rational(s.pole) - profile.weight_sum - d;
    for (const auto& beta : monomials_of_weighted_degree(profile.n, profile.w, target)) {
      Polynomial a = s.numerator * Polynomial::monomial(beta, Rational(1));
      CohomologyClass c = reduce_class(a, static_cast<int>(s.pole), profile);
      if (c.is_zero()) continue;
      std::ostringstream os;
      os << "omega' = " << render_polynomial(Polynomial::monomial(beta, Rational(1)),
                                             req.variables)
         << " dx, class = ";
      bool first = true;
      for (const auto& [b, coef] : c.coeffs) {
        if (!first) os << " + ";
        first = false;
        os << coef.get_str() << "*["
           << render_polynomial(Polynomial::monomial(b, Rational(1)), req.variables)
           << " dx/f^" << profile.spectral_value(b).get_str() << "]";
      }
      v.witness = os.str();
      return v;
    }
  }
  return v;
}

std::string error_json(const std::string& kind, const std::string& message) {
  ordered_json j;
  j["error"] = kind;
  j["message"] = message;
  return j.dump();
}

} // namespace singlen
