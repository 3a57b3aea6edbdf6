#pragma once

#include <json.hpp>

#include "cliffsyl/center_search.hpp"
#include "cliffsyl/multivector.hpp"
#include "cliffsyl/sylvester.hpp"
#include "cliffsyl/table1.hpp"

namespace cliffsyl::cli {

using json = nlohmann::ordered_json;

// {"1": ..., "e1": ..., "e12": ...} with every blade present. Rationals are
// "p/q" strings; floats are JSON numbers.
template <class T>
json multivector_to_json(const Multivector<T>& a);

// Inverse of multivector_to_json. Missing blades read as zero.
template <class T>
Multivector<T> multivector_from_json(const json& j, const Signature& sig);

json signature_to_json(const Signature& sig);

// Status string used by `solve`: "unique", "singular", or the oracle's
// "underdetermined" / "inconsistent" when it ran and failed.
template <class T>
std::string solve_status_name(const SolveOutcome<T>& outcome);

template <class T>
json solve_outcome_to_json(const SolveOutcome<T>& outcome, const Signature& sig);

json search_report_to_json(const SearchReport& report);
json table1_result_to_json(const Table1RowResult& row);

json error_to_json(const std::string& kind, const std::string& message, std::optional<std::size_t> position = {});

extern template json multivector_to_json(const Multivector<Rational>&);
extern template json multivector_to_json(const Multivector<double>&);
extern template Multivector<Rational> multivector_from_json(const json&, const Signature&);
extern template Multivector<double> multivector_from_json(const json&, const Signature&);
extern template std::string solve_status_name(const SolveOutcome<Rational>&);
extern template std::string solve_status_name(const SolveOutcome<double>&);
extern template json solve_outcome_to_json(const SolveOutcome<Rational>&, const Signature&);
extern template json solve_outcome_to_json(const SolveOutcome<double>&, const Signature&);

}  // namespace cliffsyl::cli
