#ifndef SL2HOM_VERIFY_HPP
#define SL2HOM_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sl2hom/catalog.hpp"
#include "sl2hom/linalg.hpp"

namespace sl2hom {

// Result of one relation check.  Symbolic pass = exact identity in the
// coordinate ring; exhaustive pass = verified on all (or sampled) points of
// the named field.
struct CheckReport {
  bool passed = true;
  std::string backend;  // "symbolic" or "exhaustive(q=..)" or "sampled(q=..,n=..)"
  std::vector<std::string> checkedRelations;
  std::optional<std::string> counterexample;  // point/value description
  std::optional<std::string> differencePoly;  // nonzero normal form (symbolic)
  std::vector<std::string> notes;

  void merge(const CheckReport& o);
};

enum class Mode { Symbolic, Exhaustive, Auto };

// A homomorphism presented by evaluated generator images over one F_q.
struct FqRep {
  const FieldCtx* F = nullptr;
  size_t n = 0;
  std::function<FqMat(const Fq&)> uplus;   // image of (1 t; 0 1)
  std::function<FqMat(const Fq&)> uminus;  // image of (1 0; s 1)
  std::function<FqMat(const Fq&)> torus;   // image of (u 0; 0 1/u), u != 0

  // Bruhat evaluation: a != 0 factors through the triple product, a = 0
  // goes through the Weyl element w = u-(1) u+(-1) u-(1).
  FqMat at(const Sl2Elem& g) const;
  FqMat at4(const Fq& a, const Fq& b, const Fq& c, const Fq& d) const;
};

FqRep rep_of_closed_form(const ClosedFormRep& rep, const FieldCtx* F);
FqRep rep_of_gen_datum(const GenDatum& datum, const FieldCtx* F);
FqRep rep_conjugate(const FqRep& rep, const FqMat& P);       // Inn_P . rep
FqRep rep_frobenius(const FqRep& rep, uint32_t e);           // rep . F^e
FqRep rep_direct_sum(const FqRep& r1, const FqRep& r2);
FqRep rep_tensor(const FqRep& r1, const FqRep& r2);
// Restriction to a subspace in a basis C whose columns split the space;
// takes columns [lo, lo+dim) of C^{-1} sigma C.
FqRep rep_block(const FqRep& rep, const FqMat& basis, size_t lo, size_t dim);

// phi(t+t') = phi(t) phi(t') for a polynomial matrix over k[t] with
// phi(0) = I.
CheckReport check_ga_homomorphism(const Mat<MPoly>& phi, Mode mode,
                                  const std::shared_ptr<const FieldCtx>& ctx);

// Homomorphism criterion for a Borel pair: phi is additive, omega is a
// homomorphism (weights sum to zero), and the torus conjugation relation
// omega(u) phi(t) omega(u)^-1 = phi(u^2 t).
CheckReport check_borel_pair(const GenDatum& datum, Mode mode,
                             const std::shared_ptr<const FieldCtx>& ctx);

// The opposite-unipotent relation
//   phi(t) phi-(s) = phi-(s/(1+ts)) omega(1+ts) phi(t/(1+ts)),  1+ts != 0,
// verified exhaustively over ctx and its quadratic extension.
CheckReport check_opposite_relation(const GenDatum& datum,
                                    const std::shared_ptr<const FieldCtx>& ctx,
                                    bool alsoQuadratic = true);

// sigma(M1 M2) = sigma(M1) sigma(M2): symbolic in the doubled coordinate
// ring for closed forms of untwisted degree, exhaustive / seeded-sampled
// over F_q otherwise.
CheckReport check_sl2_homomorphism(const ClosedFormRep& rep, Mode mode,
                                   const std::shared_ptr<const FieldCtx>& ctx,
                                   uint64_t pairBudget = 1000000, uint64_t sampleN = 10000,
                                   uint64_t seed = 12345);
CheckReport check_sl2_homomorphism(const FqRep& rep, uint64_t pairBudget = 1000000,
                                   uint64_t sampleN = 10000, uint64_t seed = 12345);

// Evaluate a closed form or generator datum at one group element.
FqMat evaluate(const ClosedFormRep& rep, const Sl2Elem& g);
FqMat evaluate(const GenDatum& datum, const Sl2Elem& g);

// tau / involution helpers.
// omega* for a weight vector: reverse-negate (identity on antisymmetric ones).
std::array<long long, 4> omega_star(const std::array<long long, 4>& w);
// psi* of a Borel pair: phi -> tau(phi) o inv, omega -> omega*.
GenDatum psi_star(const GenDatum& datum);
// tau sigma tau of a closed form: entries tau-flipped and (a,d) swapped.
ClosedFormRep tau_sigma_tau(const ClosedFormRep& rep);
// tau transport on a datum: (phi, omega, phi-) -> (tau phi, omega, tau phi-).
GenDatum tau_datum(const GenDatum& datum);

// Entrywise p^e-th power map as a closed-form rep of SL(2): M -> M^{[p^e]};
// checks F(M1 M2) = F(M1) F(M2) symbolically.
CheckReport check_frobenius_multiplicative(uint32_t p, uint32_t e = 1);

// The 2x2 triangular factorization identity behind the opposite
// relation, checked
// over all F_q points with 1 + ts != 0.
CheckReport check_factorization_identity(const std::shared_ptr<const FieldCtx>& ctx);

}  // namespace sl2hom

#endif
