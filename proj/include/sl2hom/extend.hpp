#ifndef SL2HOM_EXTEND_HPP
#define SL2HOM_EXTEND_HPP

#include <optional>
#include <string>

#include "sl2hom/catalog.hpp"
#include "sl2hom/verify.hpp"

namespace sl2hom {

// Outcome of the phi^- search for a Borel pair: the unique lower
// unitriangular solution of the opposite-unipotent relation, or a
// certificate that the linear constraint system is unsatisfiable.
struct PhiMinusSolution {
  enum class Status { Unique, Inconsistent };
  Status status = Status::Inconsistent;
  std::optional<Mat<MPoly>> phiMinus;
  std::string certificate;       // violated linear combination (textual)
  std::string certificateNote;   // entry/point provenance
  std::string evidence;          // fields and degree bound used
  CheckReport verification;      // on Unique: additivity + opposite relation
};

// Parametrize the strictly-lower entries of phi^-(s) as polynomials with
// zero constant term and degree <= degreeBound, impose the opposite
// relation at all points of F_q (auto-escalating q), and solve the linear
// system.  degreeBound = 0 picks the weight-derived default d1.
PhiMinusSolution solve_phi_minus(const GenDatum& datum, long long degreeBound = 0);

// Recover the closed form sigma*(a b; c d) of an extendable datum by
// interpolation against the weight-pinned sl2-normal-form monomial basis,
// with exactness demanded on two fields and on the Weyl branch.
ClosedFormRep assemble_sigma(const GenDatum& datum);

}  // namespace sl2hom

#endif
