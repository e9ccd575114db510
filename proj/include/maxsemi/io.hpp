#ifndef MAXSEMI_IO_HPP_
#define MAXSEMI_IO_HPP_

#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "maxsemi/count_formula.hpp"
#include "maxsemi/descriptor.hpp"
#include "maxsemi/verify.hpp"

namespace maxsemi {

  nlohmann::json element_list_json(FiniteMonoid const& M, ElementSet const& X);

  nlohmann::json count_json(CountFormula const& c);

  /// {family, degree, j_rank, kind, origin, payload, count_context}.
  nlohmann::json descriptor_json(FiniteMonoid const& M, Descriptor const& d,
                                 nlohmann::json count_context = nullptr);

  /// {proper, closed, maximal, witness_on_failure}.
  nlohmann::json verdict_json(FiniteMonoid const& M, Verdict const& v);

  /// One entry per J-class: rank, size, L- and R-class counts, idempotents,
  /// regularity, H-class size.
  nlohmann::json greens_json(FiniteMonoid const& M, GreensStructure const& G);

  /// Header row of element names, then one row per left factor.
  void write_cayley_csv(std::ostream& out, FiniteMonoid const& M);

  nlohmann::json oracle_report_json(FiniteMonoid const& M, OracleReport const& r);

}  // namespace maxsemi

#endif  // MAXSEMI_IO_HPP_
