#include "json_io.hpp"

#include "cliffsyl/literal.hpp"

namespace cliffsyl::cli {

template <class T>
json multivector_to_json(const Multivector<T>& a) {
  json j = json::object();
  for (std::uint32_t m = 0; m < a.size(); ++m) {
    if constexpr (ScalarTraits<T>::exact)
      j[blade_name({m})] = a[m].get_str();
    else
      j[blade_name({m})] = a[m];
  }
  return j;
}

template <class T>
Multivector<T> multivector_from_json(const json& j, const Signature& sig) {
  if (!j.is_object()) throw std::invalid_argument("multivector JSON must be an object");
  std::vector<T> coeffs(sig.blade_count(), T(0));
  for (const auto& [key, value] : j.items()) {
    const BladeIndex b = parse_blade_name(key, sig);
    if (value.is_string())
      coeffs[b.mask] = parse_scalar<T>(value.template get<std::string>());
    else if (value.is_number_integer())
      coeffs[b.mask] = T(value.template get<long>());
    else if (value.is_number())
      coeffs[b.mask] = T(value.template get<double>());
    else
      throw std::invalid_argument("coefficient for '" + key + "' must be a string or number");
  }
  return {sig, std::move(coeffs)};
}

json signature_to_json(const Signature& sig) { return json::array({sig.p(), sig.q()}); }

template <class T>
std::string solve_status_name(const SolveOutcome<T>& outcome) {
  if (outcome.status == SolveStatus::Unique) return "unique";
  if (outcome.oracle) return to_string(outcome.oracle->status);
  return "singular";
}

template <class T>
json solve_outcome_to_json(const SolveOutcome<T>& outcome, const Signature& sig) {
  json j;
  j["algebra"] = signature_to_json(sig);
  j["scalar"] = ScalarTraits<T>::name();
  j["status"] = solve_status_name(outcome);
  j["method"] = to_string(outcome.method);
  j["x"] = outcome.solution ? multivector_to_json(*outcome.solution) : json(nullptr);
  j["denominator"] = outcome.denominator ? multivector_to_json(*outcome.denominator) : json(nullptr);
  if (outcome.oracle)
    j["oracle"] = {{"status", to_string(outcome.oracle->status)},
                   {"rank", outcome.oracle->rank},
                   {"nullity", outcome.oracle->nullity}};
  return j;
}

namespace {

json grade_list(const GradeNegationMap& m) { return json(m.negated_grades()); }

json grade_lists(const std::vector<GradeNegationMap>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(grade_list(m));
  return out;
}

}  // namespace

json search_report_to_json(const SearchReport& report) {
  json candidates = json::array();
  for (const auto& c : report.candidates) {
    json entry = {{"negated_grades", grade_list(c.sigma)},
                  {"pattern", c.sigma.pattern()},
                  {"cen1", c.cen1},
                  {"cen2", c.cen2},
                  {"certificate_terms", c.certificate_terms},
                  {"sign_flip_partner", c.sign_flip_partner}};
    if (c.sampled_cen2) entry["sampled_cen2"] = *c.sampled_cen2;
    candidates.push_back(std::move(entry));
  }
  return {{"signature", signature_to_json(report.sig)},
          {"candidates_total", report.candidates_total},
          {"cen1_only", grade_lists(report.cen1_only)},
          {"cen2_holds", grade_lists(report.cen2_holds)},
          {"both_centers", grade_lists(report.both_centers)},
          {"sampling_agrees", report.sampling_agrees},
          {"candidates", std::move(candidates)}};
}

json table1_result_to_json(const Table1RowResult& row) {
  return {{"algebra", signature_to_json(row.sig)},
          {"samples", row.samples},
          {"cen1_mismatches", row.cen1_mismatches},
          {"cen2_mismatches", row.cen2_mismatches},
          {"non_central", row.non_central},
          {"passed", row.passed()}};
}

json error_to_json(const std::string& kind, const std::string& message, std::optional<std::size_t> position) {
  json e = {{"kind", kind}, {"message", message}};
  if (position) e["position"] = *position;
  return {{"error", std::move(e)}};
}

template json multivector_to_json(const Multivector<Rational>&);
template json multivector_to_json(const Multivector<double>&);
template Multivector<Rational> multivector_from_json(const json&, const Signature&);
template Multivector<double> multivector_from_json(const json&, const Signature&);
template std::string solve_status_name(const SolveOutcome<Rational>&);
template std::string solve_status_name(const SolveOutcome<double>&);
template json solve_outcome_to_json(const SolveOutcome<Rational>&, const Signature&);
template json solve_outcome_to_json(const SolveOutcome<double>&, const Signature&);

}  // namespace cliffsyl::cli
