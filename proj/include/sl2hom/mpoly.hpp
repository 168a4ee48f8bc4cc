#ifndef SL2HOM_MPOLY_HPP
#define SL2HOM_MPOLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sl2hom/errors.hpp"
#include "sl2hom/field.hpp"

namespace sl2hom {

using VarList = std::vector<std::string>;
using VarListPtr = std::shared_ptr<const VarList>;

VarListPtr make_vars(std::initializer_list<std::string> names);
VarListPtr make_vars(const VarList& names);

// Sparse multivariate polynomial over F_p.  Exponent vectors are keyed
// against a shared ordered variable list; no zero coefficients are stored,
// so structural equality is semantic equality.  Total degree is capped.
class MPoly {
 public:
  static constexpr uint32_t kDegreeCap = 256;

  using Expo = std::vector<uint32_t>;
  using Terms = std::map<Expo, uint32_t>;

  MPoly() : p_(0) {}
  MPoly(uint32_t p, VarListPtr vars);  // zero polynomial

  static MPoly constant(uint32_t p, VarListPtr vars, long long c);
  static MPoly variable(uint32_t p, VarListPtr vars, const std::string& name);
  // c * name^deg
  static MPoly monomial(uint32_t p, VarListPtr vars, const std::string& name, uint32_t deg,
                        long long c = 1);

  uint32_t characteristic() const { return p_; }
  const VarListPtr& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  uint32_t total_degree() const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly scaled(long long c) const;
  MPoly pow(uint32_t n) const;
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  // Simultaneous substitution: images[i] replaces variable i.  All images
  // must share one variable list, which becomes the result's list.
  MPoly substitute(const std::vector<MPoly>& images) const;
  // Raise every variable to the k-th power (x_i -> x_i^k).
  MPoly var_power_scale(uint32_t k) const;

  Fq eval(const std::vector<Fq>& point) const;

  std::string str() const;   // textual format: 3*a^2*d + b*c
  static MPoly parse(uint32_t p, VarListPtr vars, const std::string& text);

 private:
  void add_term(const Expo& e, uint64_t c);
  void check_compatible(const MPoly& o) const;

  friend MPoly sl2_reduce(const MPoly& f, const struct RewriteSystem& rs);

  uint32_t p_;
  VarListPtr vars_;
  Terms terms_;
};

// Rewrite a*d -> b*c + 1 for each listed (a,b,c,d) variable-index block;
// the normal form has no monomial containing both the a and the d of one
// block.  One rule per block is a Groebner basis for (ad - bc - 1), so the
// normal form is canonical.
struct RewriteSystem {
  struct Block {
    size_t a, b, c, d;
  };
  std::vector<Block> blocks;
};

// Block lookup by naming convention: variables named a,b,c,d or a1,b1,c1,d1, ...
RewriteSystem sl2_blocks_of(const VarListPtr& vars);

MPoly sl2_reduce(const MPoly& f, const RewriteSystem& rs);

}  // namespace sl2hom

#endif
