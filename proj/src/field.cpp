#include "sl2hom/field.hpp"

#include <map>
#include <mutex>

namespace sl2hom {

const char* err_name(Err e) {
  switch (e) {
    case Err::ZeroInverse: return "ZeroInverse";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::VarMismatch: return "VarMismatch";
    case Err::CharMismatch: return "CharMismatch";
    case Err::UnboundVariable: return "UnboundVariable";
    case Err::NotSquare: return "NotSquare";
    case Err::NotRegular: return "NotRegular";
    case Err::RingMismatch: return "RingMismatch";
    case Err::BadParams: return "BadParams";
    case Err::BadCharacteristic: return "BadCharacteristic";
    case Err::UnknownLemma: return "UnknownLemma";
    case Err::DegreeTooLarge: return "DegreeTooLarge";
    case Err::AmbiguousSolution: return "AmbiguousSolution";
    case Err::DegreeBoundTooSmall: return "DegreeBoundTooSmall";
    case Err::InterpolationFailed: return "InterpolationFailed";
    case Err::FieldTooSmall: return "FieldTooSmall";
    case Err::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Err::NoMatch: return "NoMatch";
    case Err::AmbiguousMatch: return "AmbiguousMatch";
    case Err::UnidentifiedSummand: return "UnidentifiedSummand";
    case Err::NotUnimodular: return "NotUnimodular";
  }
  return "Unknown";
}

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// polynomial helpers on little-endian coefficient vectors mod p
std::vector<uint32_t> poly_mulmod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                                  const std::vector<uint32_t>& mod, uint32_t p) {
  size_t m = mod.size() - 1;
  std::vector<uint32_t> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + (uint64_t)a[i] * b[j]) % p;
  // reduce: mod is monic
  for (size_t d = prod.size(); d-- > m;) {
    uint32_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (size_t j = 0; j < m; ++j) {
      uint64_t sub = (uint64_t)c * mod[j] % p;
      prod[d - m + j] = (uint32_t)((prod[d - m + j] + p - sub) % p);
    }
  }
  prod.resize(m);
  return prod;
}

uint32_t pack(const std::vector<uint32_t>& c, uint32_t p) {
  uint32_t idx = 0;
  for (size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
  return idx;
}

std::vector<uint32_t> unpack(uint32_t idx, uint32_t p, uint32_t m) {
  std::vector<uint32_t> c(m);
  for (uint32_t i = 0; i < m; ++i) {
    c[i] = idx % p;
    idx /= p;
  }
  return c;
}

uint32_t eval_poly(const std::vector<uint32_t>& f, uint32_t x, uint32_t p) {
  uint64_t acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
  return (uint32_t)acc;
}

bool has_root(const std::vector<uint32_t>& f, uint32_t p) {
  for (uint32_t x = 0; x < p; ++x)
    if (eval_poly(f, x, p) == 0) return true;
  return false;
}

// remainder of monic-ish division f mod g (g monic), both little-endian
std::vector<uint32_t> poly_rem(std::vector<uint32_t> f, const std::vector<uint32_t>& g, uint32_t p) {
  size_t dg = g.size() - 1;
  while (f.size() > dg) {
    uint32_t c = f.back();
    size_t df = f.size() - 1;
    if (c != 0) {
      for (size_t j = 0; j <= dg; ++j) {
        uint64_t sub = (uint64_t)c * g[j] % p;
        f[df - dg + j] = (uint32_t)((f[df - dg + j] + p - sub) % p);
      }
    }
    f.pop_back();
  }
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  return f;
}

bool is_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
  size_t deg = f.size() - 1;
  if (deg == 1) return true;
  if (has_root(f, p)) return false;
  if (deg <= 3) return true;  // degree 2,3: rootless == irreducible
  // degree 4: also rule out irreducible quadratic factors
  for (uint32_t b = 0; b < p; ++b)
    for (uint32_t c = 0; c < p; ++c) {
      std::vector<uint32_t> g = {c, b, 1};
      if (has_root(g, p)) continue;
      std::vector<uint32_t> r = poly_rem(f, g, p);
      if (r.size() == 1 && r[0] == 0) return false;
    }
  return true;
}

std::vector<uint32_t> find_irreducible(uint32_t p, uint32_t m) {
  // built-ins named in the docs
  if (m == 2 && p == 2) return {1, 1, 1};
  if (m == 2 && p == 3) return {1, 0, 1};
  if (m == 2 && p == 5) return {2, 0, 1};
  std::vector<uint32_t> f(m + 1, 0);
  f[m] = 1;
  uint64_t total = 1;
  for (uint32_t i = 0; i < m; ++i) total *= p;
  for (uint64_t low = 0; low < total; ++low) {
    uint64_t v = low;
    for (uint32_t i = 0; i < m; ++i) {
      f[i] = (uint32_t)(v % p);
      v /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  fail(Err::BadParams, "no irreducible modulus found");
}

std::map<std::pair<uint32_t, std::vector<uint32_t>>, std::shared_ptr<const FieldCtx>>& ctx_cache() {
  static std::map<std::pair<uint32_t, std::vector<uint32_t>>, std::shared_ptr<const FieldCtx>> cache;
  return cache;
}
std::mutex& ctx_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

void FieldCtx::build_tables() {
  q_ = 1;
  for (uint32_t i = 0; i < m_; ++i) q_ *= p_;
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  // find a primitive element by direct order computation
  for (uint32_t g = 1; g < q_; ++g) {
    std::vector<uint32_t> gc = unpack(g, p_, m_);
    std::vector<uint32_t> acc = unpack(1, p_, m_);
    uint32_t order = 0;
    std::vector<uint32_t> seen;
    bool primitive = true;
    for (uint32_t k = 1; k <= q_ - 1; ++k) {
      acc = poly_mulmod(acc, gc, modulus_, p_);
      uint32_t idx = pack(acc, p_);
      seen.push_back(idx);
      if (idx == 1) {
        order = k;
        break;
      }
    }
    if (order != q_ - 1) primitive = false;
    if (primitive) {
      gen_ = g;
      exp_[0] = 1;
      for (uint32_t k = 1; k < q_ - 1; ++k) exp_[k] = seen[k - 1];
      for (uint32_t k = 0; k < q_ - 1; ++k) log_[exp_[k]] = k;
      return;
    }
  }
  fail(Err::BadParams, "no primitive element (modulus not irreducible?)");
}

std::shared_ptr<const FieldCtx> FieldCtx::extension(uint32_t p, const std::vector<uint32_t>& modulus) {
  if (!is_prime_u32(p)) fail(Err::BadParams, "characteristic must be prime");
  if (p > 31) fail(Err::BadParams, "p > 31 unsupported");
  if (modulus.size() < 2 || modulus.size() > 5) fail(Err::BadParams, "modulus degree must be 1..4");
  if (modulus.back() != 1) fail(Err::BadParams, "modulus must be monic");
  for (uint32_t c : modulus)
    if (c >= p) fail(Err::BadParams, "modulus coefficient out of range");
  if (modulus.size() > 2 && !is_irreducible(modulus, p))
    fail(Err::BadParams, "modulus is reducible over F_p");
  std::lock_guard<std::mutex> lock(ctx_mutex());
  auto key = std::make_pair(p, modulus);
  auto it = ctx_cache().find(key);
  if (it != ctx_cache().end()) return it->second;
  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->m_ = (uint32_t)modulus.size() - 1;
  ctx->modulus_ = modulus;
  ctx->build_tables();
  ctx_cache()[key] = ctx;
  return ctx;
}

std::shared_ptr<const FieldCtx> FieldCtx::prime(uint32_t p) {
  return extension(p, {0, 1});  // F_p[x]/(x), i.e. m = 1
}

std::shared_ptr<const FieldCtx> FieldCtx::make(uint32_t p, uint32_t m) {
  if (m < 1 || m > 4) fail(Err::BadParams, "extension degree must be 1..4");
  if (m == 1) return prime(p);
  if (!is_prime_u32(p) || p > 31) fail(Err::BadParams, "characteristic must be prime and <= 31");
  return extension(p, find_irreducible(p, m));
}

Fq FieldCtx::zero() const { return Fq(this, 0); }
Fq FieldCtx::one() const { return Fq(this, 1); }

Fq FieldCtx::from_int(long long v) const {
  long long r = v % (long long)p_;
  if (r < 0) r += p_;
  return Fq(this, (uint32_t)r);
}

Fq FieldCtx::from_index(uint32_t idx) const {
  if (idx >= q_) fail(Err::BadParams, "element index out of range");
  return Fq(this, idx);
}

Fq FieldCtx::inv_int(long long v) const {
  Fq x = from_int(v);
  return fq_inv(x);
}

Fq FieldCtx::generator() const { return Fq(this, gen_); }

uint32_t FieldCtx::log(uint32_t idx) const {
  if (idx == 0) fail(Err::ZeroInverse, "log of zero");
  return log_[idx];
}

uint32_t FieldCtx::add_idx(uint32_t a, uint32_t b) const {
  if (m_ == 1) {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t out = 0, mul = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    uint32_t s = da + db;
    if (s >= p_) s -= p_;
    out += s * mul;
    mul *= p_;
  }
  return out;
}

uint32_t FieldCtx::neg_idx(uint32_t a) const {
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  uint32_t out = 0, mul = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    uint32_t da = a % p_;
    a /= p_;
    out += (da == 0 ? 0 : p_ - da) * mul;
    mul *= p_;
  }
  return out;
}

uint32_t FieldCtx::sub_idx(uint32_t a, uint32_t b) const { return add_idx(a, neg_idx(b)); }

uint32_t FieldCtx::mul_idx(uint32_t a, uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[((uint64_t)log_[a] + log_[b]) % (q_ - 1)];
}

bool Fq::is_one() const { return F_ && idx_ == 1; }

std::vector<uint32_t> Fq::coeffs() const { return unpack(idx_, F_->p(), F_->m()); }

Fq Fq::operator-() const { return Fq(F_, F_->neg_idx(idx_)); }

Fq Fq::operator+(const Fq& o) const {
  if (F_ != o.F_) fail(Err::CharMismatch, "mixed field contexts");
  return Fq(F_, F_->add_idx(idx_, o.idx_));
}

Fq Fq::operator-(const Fq& o) const {
  if (F_ != o.F_) fail(Err::CharMismatch, "mixed field contexts");
  return Fq(F_, F_->sub_idx(idx_, o.idx_));
}

Fq Fq::operator*(const Fq& o) const {
  if (F_ != o.F_) fail(Err::CharMismatch, "mixed field contexts");
  return Fq(F_, F_->mul_idx(idx_, o.idx_));
}

Fq Fq::operator/(const Fq& o) const { return *this * fq_inv(o); }

bool Fq::operator==(const Fq& o) const { return F_ == o.F_ && idx_ == o.idx_; }

std::string Fq::str() const {
  if (!F_) return "?";
  if (F_->m() == 1) return std::to_string(idx_);
  std::string s = "[";
  auto c = coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

Fq fq_inv(const Fq& x) {
  if (x.is_zero()) fail(Err::ZeroInverse, "inverse of zero");
  const FieldCtx* F = x.ctx();
  uint32_t l = F->log(x.index());
  return Fq(F, F->exp((uint64_t)(F->q() - 1) - l));
}

Fq fq_pow(const Fq& x, long long n) {
  const FieldCtx* F = x.ctx();
  if (n == 0) return F->one();
  if (x.is_zero()) {
    if (n < 0) fail(Err::ZeroInverse, "negative power of zero");
    return F->zero();
  }
  uint64_t ord = F->q() - 1;
  long long e = n % (long long)ord;
  if (e < 0) e += ord;
  uint64_t l = ((uint64_t)F->log(x.index()) * (uint64_t)e) % ord;
  return Fq(F, F->exp(l));
}

std::vector<Sl2Elem> enumerate_sl2(const std::shared_ptr<const FieldCtx>& ctx, uint64_t budget) {
  uint64_t q = ctx->q();
  if (q * q * q > budget) fail(Err::BudgetExceeded, "q^3 exceeds enumeration budget");
  std::vector<Sl2Elem> out;
  out.reserve((size_t)(q * q * q - q));
  const FieldCtx* F = ctx.get();
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t b = 0; b < q; ++b)
      for (uint32_t c = 0; c < q; ++c) {
        Fq A(F, a), B(F, b), C(F, c);
        if (a != 0) {
          // d = (bc + 1)/a, unique
          Fq D = (B * C + F->one()) / A;
          out.push_back({A, B, C, D});
        } else {
          // a = 0: need bc = -1; d arbitrary
          if ((B * C + F->one()).is_zero()) {
            for (uint32_t d = 0; d < q; ++d) out.push_back({A, B, C, Fq(F, d)});
          }
        }
      }
  return out;
}

}  // namespace sl2hom
