#include "sl2hom/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace sl2hom {

VarListPtr make_vars(std::initializer_list<std::string> names) {
  return std::make_shared<const VarList>(names);
}
VarListPtr make_vars(const VarList& names) { return std::make_shared<const VarList>(names); }

MPoly::MPoly(uint32_t p, VarListPtr vars) : p_(p), vars_(std::move(vars)) {
  if (!is_prime_u32(p_)) fail(Err::BadParams, "polynomial characteristic must be prime");
}

MPoly MPoly::constant(uint32_t p, VarListPtr vars, long long c) {
  MPoly f(p, std::move(vars));
  long long r = c % (long long)p;
  if (r < 0) r += p;
  if (r != 0) f.terms_[Expo(f.vars_->size(), 0)] = (uint32_t)r;
  return f;
}

MPoly MPoly::variable(uint32_t p, VarListPtr vars, const std::string& name) {
  return monomial(p, std::move(vars), name, 1, 1);
}

MPoly MPoly::monomial(uint32_t p, VarListPtr vars, const std::string& name, uint32_t deg,
                      long long c) {
  MPoly f(p, std::move(vars));
  auto it = std::find(f.vars_->begin(), f.vars_->end(), name);
  if (it == f.vars_->end()) fail(Err::UnboundVariable, "unknown variable " + name);
  if (deg > kDegreeCap) fail(Err::DegreeTooLarge, "monomial degree over cap");
  long long r = c % (long long)p;
  if (r < 0) r += p;
  if (r != 0) {
    Expo e(f.vars_->size(), 0);
    e[(size_t)(it - f.vars_->begin())] = deg;
    f.terms_[e] = (uint32_t)r;
  }
  return f;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Expo& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](uint32_t x) { return x == 0; });
}

uint32_t MPoly::total_degree() const {
  uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    uint32_t s = 0;
    for (uint32_t x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

void MPoly::check_compatible(const MPoly& o) const {
  if (p_ != o.p_) fail(Err::CharMismatch, "mixed characteristics");
  if (vars_ != o.vars_ && *vars_ != *o.vars_) fail(Err::VarMismatch, "mixed variable lists");
}

void MPoly::add_term(const Expo& e, uint64_t c) {
  uint32_t r = (uint32_t)(c % p_);
  if (r == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, r);
  } else {
    uint32_t s = (it->second + r) % p_;
    if (s == 0)
      terms_.erase(it);
    else
      it->second = s;
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  check_compatible(o);
  MPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out(p_, vars_);
  for (const auto& [e, c] : terms_) out.terms_[e] = p_ - c;
  return out;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  check_compatible(o);
  MPoly out(p_, vars_);
  size_t nv = vars_->size();
  Expo e(nv);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      uint32_t deg = 0;
      for (size_t i = 0; i < nv; ++i) {
        e[i] = ea[i] + eb[i];
        deg += e[i];
      }
      if (deg > kDegreeCap) fail(Err::DegreeTooLarge, "product degree over cap");
      out.add_term(e, (uint64_t)ca * cb);
    }
  return out;
}

MPoly MPoly::scaled(long long c) const {
  long long r = c % (long long)p_;
  if (r < 0) r += p_;
  MPoly out(p_, vars_);
  if (r == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_[e] = (uint32_t)((uint64_t)k * r % p_);
  return out;
}

MPoly MPoly::pow(uint32_t n) const {
  MPoly acc = constant(p_, vars_, 1);
  MPoly base = *this;
  while (n) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return acc;
}

bool MPoly::operator==(const MPoly& o) const {
  if (p_ != o.p_) return false;
  if (vars_ != o.vars_ && *vars_ != *o.vars_) return false;
  return terms_ == o.terms_;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  if (images.size() != vars_->size()) fail(Err::VarMismatch, "one image per variable required");
  for (const auto& g : images) {
    if (g.characteristic() != p_) fail(Err::CharMismatch, "image characteristic mismatch");
    images[0].check_compatible(g);
  }
  VarListPtr tv = images.empty() ? vars_ : images[0].vars();
  MPoly out(p_, tv);
  for (const auto& [e, c] : terms_) {
    MPoly term = MPoly::constant(p_, tv, (long long)c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) term = term * images[i].pow(e[i]);
    out = out + term;
  }
  return out;
}

MPoly MPoly::var_power_scale(uint32_t k) const {
  MPoly out(p_, vars_);
  for (const auto& [e, c] : terms_) {
    Expo e2 = e;
    uint32_t deg = 0;
    for (auto& x : e2) {
      uint64_t v = (uint64_t)x * k;
      if (v > kDegreeCap) fail(Err::DegreeTooLarge, "twist degree over cap");
      x = (uint32_t)v;
      deg += x;
    }
    if (deg > kDegreeCap) fail(Err::DegreeTooLarge, "twist degree over cap");
    out.terms_[e2] = c;
  }
  return out;
}

Fq MPoly::eval(const std::vector<Fq>& point) const {
  if (point.size() != vars_->size()) fail(Err::UnboundVariable, "point arity mismatch");
  if (point.empty()) fail(Err::UnboundVariable, "evaluation needs at least one variable");
  const FieldCtx* F = point[0].ctx();
  for (const auto& x : point)
    if (x.ctx() != F) fail(Err::CharMismatch, "mixed contexts in point");
  if (F->p() != p_) fail(Err::CharMismatch, "field characteristic differs from polynomial");
  Fq acc = F->zero();
  for (const auto& [e, c] : terms_) {
    Fq t = F->from_int((long long)c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = t * fq_pow(point[i], e[i]);
    acc = acc + t;
  }
  return acc;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  // print highest-degree-first for readability: reverse map order
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool any_var = std::any_of(e.begin(), e.end(), [](uint32_t x) { return x != 0; });
    bool coeff_shown = (c != 1) || !any_var;
    if (coeff_shown) os << c;
    bool need_star = coeff_shown;
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (need_star) os << "*";
      os << (*vars_)[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

MPoly MPoly::parse(uint32_t p, VarListPtr vars, const std::string& text) {
  MPoly out(p, vars);
  std::string s;
  for (char ch : text)
    if (!isspace((unsigned char)ch)) s += ch;
  if (s.empty() || s == "0") return out;
  size_t pos = 0;
  bool neg = false;
  auto parse_term = [&](size_t start, size_t end, bool negate) {
    uint64_t coeff = 1;
    Expo e(vars->size(), 0);
    size_t i = start;
    bool coeff_seen = false;
    while (i < end) {
      if (isdigit((unsigned char)s[i])) {
        uint64_t v = 0;
        while (i < end && isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
        coeff = coeff * (v % p) % p;
        coeff_seen = true;
      } else if (isalpha((unsigned char)s[i])) {
        size_t j = i;
        while (j < end && (isalpha((unsigned char)s[j]) || isdigit((unsigned char)s[j]))) ++j;
        // longest variable-name match from position i
        size_t best = 0;
        size_t vi = vars->size();
        for (size_t k = 0; k < vars->size(); ++k) {
          const std::string& name = (*vars)[k];
          if (s.compare(i, name.size(), name) == 0 && i + name.size() <= j &&
              name.size() > best) {
            best = name.size();
            vi = k;
          }
        }
        if (vi == vars->size()) fail(Err::UnboundVariable, "unknown variable in " + text);
        i += best;
        uint32_t deg = 1;
        if (i < end && s[i] == '^') {
          ++i;
          uint64_t v = 0;
          if (i >= end || !isdigit((unsigned char)s[i])) fail(Err::BadParams, "bad exponent");
          while (i < end && isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
          if (v > kDegreeCap) fail(Err::DegreeTooLarge, "parsed exponent over cap");
          deg = (uint32_t)v;
        }
        e[vi] += deg;
      } else if (s[i] == '*') {
        ++i;
      } else {
        fail(Err::BadParams, "unexpected character in polynomial: " + std::string(1, s[i]));
      }
    }
    (void)coeff_seen;
    if (negate) coeff = (p - coeff % p) % p;
    out.add_term(e, coeff);
  };
  while (pos < s.size()) {
    if (s[pos] == '+') {
      neg = false;
      ++pos;
      continue;
    }
    if (s[pos] == '-') {
      neg = true;
      ++pos;
      continue;
    }
    size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    parse_term(pos, end, neg);
    pos = end;
  }
  return out;
}

RewriteSystem sl2_blocks_of(const VarListPtr& vars) {
  RewriteSystem rs;
  auto index_of = [&](const std::string& n) -> size_t {
    auto it = std::find(vars->begin(), vars->end(), n);
    return it == vars->end() ? vars->size() : (size_t)(it - vars->begin());
  };
  // unsuffixed block
  {
    size_t a = index_of("a"), b = index_of("b"), c = index_of("c"), d = index_of("d");
    if (a < vars->size() && b < vars->size() && c < vars->size() && d < vars->size())
      rs.blocks.push_back({a, b, c, d});
  }
  for (int suf = 1; suf <= 4; ++suf) {
    std::string t = std::to_string(suf);
    size_t a = index_of("a" + t), b = index_of("b" + t), c = index_of("c" + t),
           d = index_of("d" + t);
    if (a < vars->size() && b < vars->size() && c < vars->size() && d < vars->size())
      rs.blocks.push_back({a, b, c, d});
  }
  return rs;
}

MPoly sl2_reduce(const MPoly& f, const RewriteSystem& rs) {
  const uint32_t p = f.characteristic();
  MPoly out(p, f.vars());
  std::vector<std::pair<MPoly::Expo, uint32_t>> work(f.terms().begin(), f.terms().end());
  while (!work.empty()) {
    auto [e, c] = work.back();
    work.pop_back();
    if (c % p == 0) continue;
    const RewriteSystem::Block* hit = nullptr;
    for (const auto& blk : rs.blocks)
      if (e[blk.a] > 0 && e[blk.d] > 0) {
        hit = &blk;
        break;
      }
    if (!hit) {
      out.add_term(e, c);
      continue;
    }
    // c * (ad) * rest  ->  c * (bc) * rest + c * rest
    MPoly::Expo rest = e;
    rest[hit->a] -= 1;
    rest[hit->d] -= 1;
    MPoly::Expo with_bc = rest;
    with_bc[hit->b] += 1;
    with_bc[hit->c] += 1;
    work.emplace_back(with_bc, c);
    work.emplace_back(rest, c);
  }
  return out;
}

}  // namespace sl2hom
