#ifndef SL2HOM_ANALYZE_HPP
#define SL2HOM_ANALYZE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sl2hom/extend.hpp"
#include "sl2hom/verify.hpp"

namespace sl2hom {

// Classification fingerprint.  dUnipotent extends the d(sigma) idea to the
// two unipotent one-parameter subgroups, column side then row side; the
// row-side pair is needed to tell (VII)# from (XV)# at matching weights.
struct Signature {
  std::vector<long long> weights;   // sorted descending
  std::pair<int, int> dSigma;       // (dim V^sigma, dim W^sigma)
  std::array<int, 4> dUnipotent;    // (V^{phi+}, V^{phi-}, W^{phi+}, W^{phi-})

  bool operator==(const Signature& o) const {
    return weights == o.weights && dSigma == o.dSigma && dUnipotent == o.dUnipotent;
  }
  std::string str() const;
};

// (dim V^sigma, dim W^sigma) from generator images over F_q, q >= 4.
std::pair<int, int> fixed_dims(const FqRep& rep);
// column/row fixed dims of one unipotent family (sign = +1 for phi+).
std::pair<int, int> unipotent_fixed_dims(const FqRep& rep, int sign);

// Exact-weight signature of a catalog form evaluated over ctx.
Signature signature_of_form(const FormSpec& spec, const std::shared_ptr<const FieldCtx>& ctx);
// Signature of an arbitrary rep; weights are centered lifts mod q-1 of the
// torus eigenvalue exponents.
Signature signature_of_rep(const FqRep& rep);
// The same centered-lift reduction applied to exact weights (for table
// lookups at a fixed q).
std::vector<long long> lift_weights(const std::vector<long long>& w, uint64_t q);

struct ClassEntry {
  FormSpec spec;
  Signature sig;        // exact weights
  Signature liftedSig;  // weights reduced mod q-1
};
enum class Scope { Sharp4, SmallN };
std::vector<ClassEntry> signature_table(uint32_t p, long long maxE, Scope scope,
                                        const std::shared_ptr<const FieldCtx>& ctx);

// Smallest extension field that makes the fixed-space dimensions and the
// signature table exact for the catalog at exponent ceiling maxE.
std::shared_ptr<const FieldCtx> analysis_field(uint32_t p, long long maxE);

// Signature lookup over the precomputed table; NoMatch / AmbiguousMatch.
FormSpec classify(const FqRep& rep, long long maxE, Scope scope, uint64_t seed = 12345);

struct EndAlgebra {
  size_t dim = 0;
  std::vector<FqMat> basis;  // reduced echelon order, closed under commuting
};
EndAlgebra endomorphism_algebra(const FqRep& rep);

bool is_indecomposable(const FqRep& rep, uint64_t budget = 1000000);

struct DecompositionReport {
  std::vector<std::pair<FormSpec, int>> summands;  // class + multiplicity
  FqMat conjugator;                                // block-diagonalizing basis
};
DecompositionReport decompose(const FqRep& rep, long long maxE, uint64_t budget = 1000000,
                              uint64_t seed = 12345);

struct EquivalenceResult {
  bool equivalent = false;
  std::optional<FqMat> conjugator;
  bool exact = true;     // false: NotEquivalent rests on an exhausted search
  std::string note;
};
EquivalenceResult check_equivalence(const FqRep& rep1, const FqRep& rep2,
                                    uint64_t budget = 1000000, uint64_t samples = 4096,
                                    uint64_t seed = 12345);

}  // namespace sl2hom

#endif
