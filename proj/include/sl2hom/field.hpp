#ifndef SL2HOM_FIELD_HPP
#define SL2HOM_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sl2hom/errors.hpp"

namespace sl2hom {

class Fq;

// A prime field F_p or an extension F_{p^m}, m <= 4, represented as
// F_p[x]/(modulus).  Elements are packed indices c0 + c1*p + ... + c_{m-1}*p^{m-1};
// multiplication goes through exp/log tables over a fixed primitive element.
class FieldCtx {
 public:
  static std::shared_ptr<const FieldCtx> prime(uint32_t p);
  // Built-in modulus when available (x^2+x+1 over F_2, x^2+1 over F_3,
  // x^2+2 over F_5), otherwise the lexicographically smallest monic
  // irreducible of degree m.
  static std::shared_ptr<const FieldCtx> make(uint32_t p, uint32_t m);
  // modulus: monic, little-endian, size m+1, coefficients mod p.
  static std::shared_ptr<const FieldCtx> extension(uint32_t p, const std::vector<uint32_t>& modulus);

  uint32_t p() const { return p_; }
  uint32_t m() const { return m_; }
  uint32_t q() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  Fq zero() const;
  Fq one() const;
  Fq from_int(long long v) const;      // image of an integer in the prime field
  Fq from_index(uint32_t idx) const;   // packed-index constructor
  Fq inv_int(long long v) const;       // inverse of an integer constant, v != 0 mod p
  Fq generator() const;                // fixed primitive element of F_q^x
  // element enumeration order used everywhere: packed index 0..q-1
  Fq element(uint32_t i) const;

  uint32_t log(uint32_t idx) const;  // discrete log base generator(), idx != 0
  uint32_t exp(uint64_t e) const { return exp_[e % (q_ - 1)]; }

  uint32_t add_idx(uint32_t a, uint32_t b) const;
  uint32_t sub_idx(uint32_t a, uint32_t b) const;
  uint32_t neg_idx(uint32_t a) const;
  uint32_t mul_idx(uint32_t a, uint32_t b) const;

 private:
  FieldCtx() = default;
  void build_tables();

  uint32_t p_ = 0, m_ = 0, q_ = 0;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> exp_;   // exp_[k] = generator^k, size q-1
  std::vector<uint32_t> log_;   // log_[idx], idx != 0
  uint32_t gen_ = 0;
};

// An element of F_{p^m}.  Carries a borrowed pointer to its context; the
// context must outlive the element (contexts come from shared_ptr factories
// and are cached per (p, modulus)).
class Fq {
 public:
  Fq() : F_(nullptr), idx_(0) {}
  Fq(const FieldCtx* F, uint32_t idx) : F_(F), idx_(idx) {}

  const FieldCtx* ctx() const { return F_; }
  uint32_t index() const { return idx_; }
  bool is_zero() const { return idx_ == 0; }
  bool is_one() const;
  std::vector<uint32_t> coeffs() const;  // little-endian residues, length m

  Fq operator-() const;
  Fq operator+(const Fq& o) const;
  Fq operator-(const Fq& o) const;
  Fq operator*(const Fq& o) const;
  Fq operator/(const Fq& o) const;
  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }
  bool operator==(const Fq& o) const;
  bool operator!=(const Fq& o) const { return !(*this == o); }

  std::string str() const;

 private:
  const FieldCtx* F_;
  uint32_t idx_;
};

inline Fq FieldCtx::element(uint32_t i) const { return from_index(i); }

// x^{-1}; ZeroInverse when x = 0.
Fq fq_inv(const Fq& x);
// x^n by square-and-multiply through the log table; x^0 = 1, negative n
// needs x != 0.
Fq fq_pow(const Fq& x, long long n);

// All q(q^2-1) elements of SL(2, F_q) as flattened (a,b,c,d) rows,
// lexicographic in the packed element indices.  BudgetExceeded when
// q^3 > budget.
struct Sl2Elem {
  Fq a, b, c, d;
};
std::vector<Sl2Elem> enumerate_sl2(const std::shared_ptr<const FieldCtx>& ctx,
                                   uint64_t budget = 1000000);

bool is_prime_u32(uint32_t n);

}  // namespace sl2hom

#endif
