#ifndef SL2HOM_CATALOG_HPP
#define SL2HOM_CATALOG_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sl2hom/linalg.hpp"
#include "sl2hom/mat.hpp"
#include "sl2hom/mpoly.hpp"

namespace sl2hom {

enum class Family { Borel, Star, Sharp, Plus, Small };

using Params = std::map<std::string, long long>;

// A member of the closed catalog: Borel pairs (I)..(XXVI), extendable
// closed forms star:*, canonical forms sharp:*, untwisted forms plus:*,
// and the small-degree families small:1 .. small:3.2c.
struct FormSpec {
  Family family;
  std::string label;  // "I".."XXVI" or "1", "2.1", "3.1a", ...
  Params params;
  uint32_t p = 0;

  std::string str() const;  // e.g. "sharp:XV"
  static FormSpec parse(const std::string& form, uint32_t p, const Params& params);
};

std::string family_prefix(Family f);
std::vector<std::string> borel_labels();            // I..XXVI
std::vector<std::string> star_labels();             // 13 extendable forms
std::vector<std::string> sharp_labels();            // 11 canonical forms
std::vector<std::string> sharp_labels_for(uint32_t p);
std::vector<std::string> small_labels(uint32_t p);

// A homomorphism presented by generator images: phi+(t) upper unitriangular
// over k[t], the antisymmetric torus weight vector, optionally phi-(s).
struct GenDatum {
  uint32_t p = 0;
  Mat<MPoly> phiPlus;                    // over variable list {t}
  std::array<long long, 4> weights{};    // (d1, d2, -d2, -d1)
  std::optional<Mat<MPoly>> phiMinus;    // over variable list {s}
};

// A homomorphism given by closed-form entries in k[a,b,c,d]/(ad-bc-1),
// entries kept in sl2-normal form.
struct ClosedFormRep {
  uint32_t p = 0;
  size_t n = 0;
  Mat<MPoly> entries;  // over variable list {a,b,c,d}
};

VarListPtr vars_t();
VarListPtr vars_s();
VarListPtr vars_abcd();

long long ipow(long long b, uint32_t e);

// Parameter validation (names, inequalities, characteristic constraints,
// desk-scale ceilings e <= 3, d <= 64).  BadParams / BadCharacteristic.
void validate_form(const FormSpec& spec);

// The (d1, d2) weight pair of a Borel form.
std::pair<long long, long long> borel_weights(const FormSpec& spec);
// Sorted descending antisymmetric weight vector of a sharp/star/plus/small form.
std::vector<long long> torus_weights(const FormSpec& spec);
// Superdiagonal zero pattern of phi*, as an ordered partition of 4.
std::vector<int> borel_partition(const FormSpec& spec);

GenDatum build_borel_pair(const FormSpec& spec);
ClosedFormRep build_sigma(const FormSpec& spec);

// The catalog's printed phi^- for the 13 extendable Borel forms (with
// the forced parameter constraints applied); used as golden answers
// against solve_phi_minus.
Mat<MPoly> printed_phi_minus(const FormSpec& borelSpec);
// Forms whose extension problem is solvable, with the forced constraints.
bool borel_extendable(const std::string& label);

// Printed conjugators of the catalog's conjugation identities, keyed by
// their table tags "5.2".."5.22", "6.1".."6.21".  UnknownLemma otherwise.
FqMat conjugator_for(const std::string& lemma, const FieldCtx* F);

// One conjugation identity as printed: Inn_P . sigma*_{src} equals the
// right-hand side (an untwisted plus form composed with Frobenius, a sharp
// form, another star form, or a tensor/diagonal factorization).
struct ConjIdentity {
  std::string lemma;
  std::string srcLabel;  // star form label
  enum class Rhs { PlusFrob, Sharp, StarOther, TensorSplit, DiagSplit } rhs;
  std::string rhsLabel;
  // parameter names: src params live in FormSpec; frobenius exponent comes
  // from the named source parameter (empty = 0)
  std::string frobParam;
};
std::vector<ConjIdentity> conjugation_identities();

// Expected d(sigma) column per extendable family.
std::pair<int, int> expected_d(const std::string& starOrSharpLabel);

// Minimal canonical parameter assignments for iterating a family at a
// given exponent ceiling; every admissible combination with all e-params
// <= maxE (free d-params take their extreme legal values).
std::vector<Params> enumerate_params(const std::string& label, Family fam, uint32_t p,
                                     long long maxE);

}  // namespace sl2hom

#endif
