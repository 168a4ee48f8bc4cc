#include "sl2hom/verify.hpp"

#include <random>
#include <sstream>

namespace sl2hom {

void CheckReport::merge(const CheckReport& o) {
  passed = passed && o.passed;
  if (!o.backend.empty()) {
    if (backend.empty()) backend = o.backend;
    else if (backend != o.backend) backend += "+" + o.backend;
  }
  for (const auto& r : o.checkedRelations) checkedRelations.push_back(r);
  if (!counterexample && o.counterexample) counterexample = o.counterexample;
  if (!differencePoly && o.differencePoly) differencePoly = o.differencePoly;
  for (const auto& n : o.notes) notes.push_back(n);
}

namespace {

std::string point_str(std::initializer_list<Fq> xs) {
  std::string s = "(";
  bool first = true;
  for (const auto& x : xs) {
    if (!first) s += ",";
    first = false;
    s += x.str();
  }
  return s + ")";
}

// Quadratic extension when it stays within the m <= 4 cap, else nothing.
std::shared_ptr<const FieldCtx> quadratic_of(const std::shared_ptr<const FieldCtx>& ctx) {
  if (2 * ctx->m() > 4) return nullptr;
  return FieldCtx::make(ctx->p(), 2 * ctx->m());
}

FqMat eval_poly_matrix(const Mat<MPoly>& m, const std::vector<Fq>& point, const FieldCtx* F) {
  FqMat out(m.rows(), m.cols(), F->zero());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).eval(point);
  return out;
}

uint64_t sl2_order(uint64_t q) { return q * q * q - q; }

Sl2Elem random_sl2(const FieldCtx* F, std::mt19937_64& rng) {
  uint64_t q = F->q();
  std::uniform_int_distribution<uint64_t> pick(0, q);  // 0 selects the a = 0 cell
  if (pick(rng) == 0) {
    std::uniform_int_distribution<uint64_t> nz(1, q - 1), any(0, q - 1);
    Fq b = F->from_index((uint32_t)nz(rng));
    Fq c = -fq_inv(b);
    Fq d = F->from_index((uint32_t)any(rng));
    return {F->zero(), b, c, d};
  }
  std::uniform_int_distribution<uint64_t> nz(1, q - 1), any(0, q - 1);
  Fq a = F->from_index((uint32_t)nz(rng));
  Fq b = F->from_index((uint32_t)any(rng));
  Fq c = F->from_index((uint32_t)any(rng));
  Fq d = (b * c + F->one()) / a;
  return {a, b, c, d};
}

Sl2Elem mul2(const Sl2Elem& x, const Sl2Elem& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

}  // namespace

FqMat FqRep::at4(const Fq& a, const Fq& b, const Fq& c, const Fq& d) const {
  return at({a, b, c, d});
}

FqMat FqRep::at(const Sl2Elem& g) const {
  if (g.a * g.d - g.b * g.c != F->one()) fail(Err::NotUnimodular, "det != 1");
  if (!g.a.is_zero()) {
    Fq ia = fq_inv(g.a);
    return uminus(g.c * ia) * torus(g.a) * uplus(g.b * ia);
  }
  // w = u-(1) u+(-1) u-(1) = (0 -1; 1 0); w^{-1} g has nonzero (1,1) entry c
  Fq one = F->one();
  FqMat sw = uminus(one) * uplus(-one) * uminus(one);
  // w^{-1} = (0 1; -1 0); w^{-1} g = (c, d; -a, -b) with a = 0
  Fq ic = fq_inv(g.c);
  FqMat rest = uminus(-g.a * ic) * torus(g.c) * uplus(g.d * ic);
  return sw * rest;
}

FqRep rep_of_closed_form(const ClosedFormRep& rep, const FieldCtx* F) {
  if (F->p() != rep.p) fail(Err::CharMismatch, "field/rep characteristic mismatch");
  FqRep r;
  r.F = F;
  r.n = rep.n;
  Mat<MPoly> entries = rep.entries;
  r.uplus = [entries, F](const Fq& t) {
    return eval_poly_matrix(entries, {F->one(), t, F->zero(), F->one()}, F);
  };
  r.uminus = [entries, F](const Fq& s) {
    return eval_poly_matrix(entries, {F->one(), F->zero(), s, F->one()}, F);
  };
  r.torus = [entries, F](const Fq& u) {
    return eval_poly_matrix(entries, {u, F->zero(), F->zero(), fq_inv(u)}, F);
  };
  return r;
}

FqRep rep_of_gen_datum(const GenDatum& datum, const FieldCtx* F) {
  if (F->p() != datum.p) fail(Err::CharMismatch, "field/datum characteristic mismatch");
  FqRep r;
  r.F = F;
  r.n = 4;
  Mat<MPoly> plus = datum.phiPlus;
  r.uplus = [plus, F](const Fq& t) { return eval_poly_matrix(plus, {t}, F); };
  if (datum.phiMinus) {
    Mat<MPoly> minus = *datum.phiMinus;
    r.uminus = [minus, F](const Fq& s) { return eval_poly_matrix(minus, {s}, F); };
  } else {
    r.uminus = [](const Fq&) -> FqMat {
      fail(Err::BadParams, "datum has no phi^-");
    };
  }
  auto w = datum.weights;
  r.torus = [w, F](const Fq& u) {
    FqMat m(4, 4, F->zero());
    for (size_t i = 0; i < 4; ++i) m.at(i, i) = fq_pow(u, w[i]);
    return m;
  };
  return r;
}

FqRep rep_conjugate(const FqRep& rep, const FqMat& P) {
  FqMat Pi = inverse(P);
  FqRep r = rep;
  auto wrap = [Pi, P](std::function<FqMat(const Fq&)> f) {
    return [Pi, P, f](const Fq& x) { return Pi * f(x) * P; };
  };
  r.uplus = wrap(rep.uplus);
  r.uminus = wrap(rep.uminus);
  r.torus = wrap(rep.torus);
  return r;
}

FqRep rep_frobenius(const FqRep& rep, uint32_t e) {
  long long q = ipow(rep.F->p(), e);
  FqRep r = rep;
  auto wrap = [q](std::function<FqMat(const Fq&)> f) {
    return [q, f](const Fq& x) { return f(fq_pow(x, q)); };
  };
  // F^e on SL(2) raises the matrix entries; on the generator curves this is
  // u+(t) -> u+(t^{p^e}) and likewise for u- and the torus.
  r.uplus = wrap(rep.uplus);
  r.uminus = wrap(rep.uminus);
  r.torus = wrap(rep.torus);
  return r;
}

FqRep rep_direct_sum(const FqRep& r1, const FqRep& r2) {
  FqRep r;
  r.F = r1.F;
  r.n = r1.n + r2.n;
  auto join = [](std::function<FqMat(const Fq&)> f, std::function<FqMat(const Fq&)> g) {
    return [f, g](const Fq& x) { return direct_sum(f(x), g(x)); };
  };
  r.uplus = join(r1.uplus, r2.uplus);
  r.uminus = join(r1.uminus, r2.uminus);
  r.torus = join(r1.torus, r2.torus);
  return r;
}

FqRep rep_tensor(const FqRep& r1, const FqRep& r2) {
  FqRep r;
  r.F = r1.F;
  r.n = r1.n * r2.n;
  auto join = [](std::function<FqMat(const Fq&)> f, std::function<FqMat(const Fq&)> g) {
    return [f, g](const Fq& x) { return kron_product(f(x), g(x)); };
  };
  r.uplus = join(r1.uplus, r2.uplus);
  r.uminus = join(r1.uminus, r2.uminus);
  r.torus = join(r1.torus, r2.torus);
  return r;
}

FqRep rep_block(const FqRep& rep, const FqMat& basis, size_t lo, size_t dim) {
  FqMat Bi = inverse(basis);
  FqRep r;
  r.F = rep.F;
  r.n = dim;
  auto wrap = [Bi, basis, lo, dim](std::function<FqMat(const Fq&)> f) {
    return [Bi, basis, lo, dim, f](const Fq& x) {
      FqMat full = Bi * f(x) * basis;
      FqMat out(dim, dim, full.at(0, 0) - full.at(0, 0));
      for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) out.at(i, j) = full.at(lo + i, lo + j);
      return out;
    };
  };
  r.uplus = wrap(rep.uplus);
  r.uminus = wrap(rep.uminus);
  r.torus = wrap(rep.torus);
  return r;
}

namespace {

CheckReport ga_hom_symbolic(const Mat<MPoly>& phi) {
  CheckReport rep;
  rep.backend = "symbolic";
  rep.checkedRelations.push_back("phi(t+t') = phi(t) phi(t')");
  uint32_t p = phi.at(0, 0).characteristic();
  VarListPtr tt = make_vars({"t", "t'"});
  MPoly t = MPoly::variable(p, tt, "t");
  MPoly t2 = MPoly::variable(p, tt, "t'");
  size_t n = phi.rows();
  auto lift = [&](const MPoly& f, const MPoly& image) { return f.substitute({image}); };
  Mat<MPoly> at_t(n, n, MPoly(p, tt)), at_t2(n, n, MPoly(p, tt)), at_sum(n, n, MPoly(p, tt));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      at_t.at(i, j) = lift(phi.at(i, j), t);
      at_t2.at(i, j) = lift(phi.at(i, j), t2);
      at_sum.at(i, j) = lift(phi.at(i, j), t + t2);
    }
  Mat<MPoly> diff = at_sum - at_t * at_t2;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!diff.at(i, j).is_zero()) {
        rep.passed = false;
        rep.differencePoly = diff.at(i, j).str();
        return rep;
      }
  return rep;
}

CheckReport ga_hom_exhaustive(const Mat<MPoly>& phi, const std::shared_ptr<const FieldCtx>& ctx) {
  CheckReport rep;
  const FieldCtx* F = ctx.get();
  rep.backend = "exhaustive(q=" + std::to_string(F->q()) + ")";
  rep.checkedRelations.push_back("phi(t+t') = phi(t) phi(t')");
  for (uint32_t i = 0; i < F->q(); ++i)
    for (uint32_t j = 0; j < F->q(); ++j) {
      Fq t = F->element(i), t2 = F->element(j);
      FqMat lhs = eval_poly_matrix(phi, {t + t2}, F);
      FqMat rhs = eval_poly_matrix(phi, {t}, F) * eval_poly_matrix(phi, {t2}, F);
      if (lhs != rhs) {
        rep.passed = false;
        rep.counterexample = "(t,t')=" + point_str({t, t2});
        return rep;
      }
    }
  return rep;
}

}  // namespace

CheckReport check_ga_homomorphism(const Mat<MPoly>& phi, Mode mode,
                                  const std::shared_ptr<const FieldCtx>& ctx) {
  if (!phi.square()) fail(Err::NotSquare, "phi must be square");
  if (mode == Mode::Symbolic) return ga_hom_symbolic(phi);
  if (mode == Mode::Exhaustive) {
    CheckReport r = ga_hom_exhaustive(phi, ctx);
    if (r.passed) {
      auto ctx2 = quadratic_of(ctx);
      if (ctx2) r.merge(ga_hom_exhaustive(phi, ctx2));
    }
    return r;
  }
  try {
    return ga_hom_symbolic(phi);
  } catch (const ToolError& e) {
    if (e.code() != Err::DegreeTooLarge) throw;
    CheckReport r = ga_hom_exhaustive(phi, ctx);
    r.notes.push_back("symbolic route exceeded the degree cap; fell back to exhaustive");
    return r;
  }
}

namespace {

CheckReport borel_cond3_symbolic(const GenDatum& d) {
  CheckReport rep;
  rep.backend = "symbolic";
  rep.checkedRelations.push_back("omega(u) phi(t) omega(u)^-1 = phi(u^2 t)");
  uint32_t p = d.p;
  VarListPtr tu = make_vars({"t", "u"});
  MPoly t = MPoly::variable(p, tu, "t");
  MPoly u = MPoly::variable(p, tu, "u");
  MPoly u2t = u * u * t;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) {
      const MPoly& a = d.phiPlus.at(i, j);
      if (a.is_zero()) continue;
      long long delta = d.weights[i] - d.weights[j];
      MPoly lhs = a.substitute({t});
      MPoly rhs = a.substitute({u2t});
      // u^delta a(t) = a(u^2 t); move negative powers to the other side
      if (delta >= 0)
        lhs = lhs * MPoly::monomial(p, tu, "u", (uint32_t)delta);
      else
        rhs = rhs * MPoly::monomial(p, tu, "u", (uint32_t)(-delta));
      if (lhs != rhs) {
        rep.passed = false;
        rep.differencePoly = (lhs - rhs).str();
        rep.notes.push_back("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        return rep;
      }
    }
  return rep;
}

CheckReport borel_cond3_exhaustive(const GenDatum& d, const std::shared_ptr<const FieldCtx>& ctx) {
  CheckReport rep;
  const FieldCtx* F = ctx.get();
  rep.backend = "exhaustive(q=" + std::to_string(F->q()) + ")";
  rep.checkedRelations.push_back("omega(u) phi(t) omega(u)^-1 = phi(u^2 t)");
  FqRep r = rep_of_gen_datum(d, F);
  for (uint32_t ui = 1; ui < F->q(); ++ui)
    for (uint32_t ti = 0; ti < F->q(); ++ti) {
      Fq u = F->element(ui), t = F->element(ti);
      FqMat lhs = r.torus(u) * r.uplus(t) * r.torus(fq_inv(u));
      FqMat rhs = r.uplus(u * u * t);
      if (lhs != rhs) {
        rep.passed = false;
        rep.counterexample = "(t,u)=" + point_str({t, u});
        return rep;
      }
    }
  return rep;
}

}  // namespace

CheckReport check_borel_pair(const GenDatum& d, Mode mode,
                             const std::shared_ptr<const FieldCtx>& ctx) {
  CheckReport rep;
  // condition (2): the weight vector defines a homomorphism into SL(4)
  long long sum = 0;
  for (long long w : d.weights) sum += w;
  rep.checkedRelations.push_back("omega is a homomorphism (sum of weights = 0)");
  if (sum != 0) {
    rep.passed = false;
    rep.counterexample = "weights do not sum to zero";
    return rep;
  }
  CheckReport c1 = check_ga_homomorphism(d.phiPlus, mode, ctx);
  rep.merge(c1);
  if (!rep.passed) return rep;
  if (mode == Mode::Exhaustive) {
    CheckReport c3 = borel_cond3_exhaustive(d, ctx);
    rep.merge(c3);
    auto ctx2 = quadratic_of(ctx);
    if (rep.passed && ctx2) rep.merge(borel_cond3_exhaustive(d, ctx2));
  } else {
    try {
      rep.merge(borel_cond3_symbolic(d));
    } catch (const ToolError& e) {
      if (e.code() != Err::DegreeTooLarge || mode == Mode::Symbolic) throw;
      CheckReport c3 = borel_cond3_exhaustive(d, ctx);
      c3.notes.push_back("symbolic route exceeded the degree cap; fell back to exhaustive");
      rep.merge(c3);
    }
  }
  return rep;
}

namespace {

CheckReport opposite_relation_over(const GenDatum& d, const std::shared_ptr<const FieldCtx>& ctx) {
  CheckReport rep;
  const FieldCtx* F = ctx.get();
  rep.backend = "exhaustive(q=" + std::to_string(F->q()) + ")";
  FqRep r = rep_of_gen_datum(d, F);
  Fq one = F->one();
  for (uint32_t ti = 0; ti < F->q(); ++ti)
    for (uint32_t si = 0; si < F->q(); ++si) {
      Fq t = F->element(ti), s = F->element(si);
      Fq den = one + t * s;
      if (den.is_zero()) continue;
      Fq di = fq_inv(den);
      FqMat lhs = r.uplus(t) * r.uminus(s);
      FqMat rhs = r.uminus(s * di) * r.torus(den) * r.uplus(t * di);
      if (lhs != rhs) {
        rep.passed = false;
        rep.counterexample = "(t,s)=" + point_str({t, s});
        return rep;
      }
    }
  return rep;
}

}  // namespace

CheckReport check_opposite_relation(const GenDatum& d, const std::shared_ptr<const FieldCtx>& ctx,
                                    bool alsoQuadratic) {
  if (!d.phiMinus) fail(Err::BadParams, "datum has no phi^-");
  CheckReport rep;
  rep.checkedRelations.push_back(
      "phi(t) phi-(s) = phi-(s/(1+ts)) omega(1+ts) phi(t/(1+ts))");
  rep.notes.push_back("rational-argument relation: symbolic backend out of scope");
  rep.merge(opposite_relation_over(d, ctx));
  auto ctx2 = quadratic_of(ctx);
  if (rep.passed && alsoQuadratic && ctx2) rep.merge(opposite_relation_over(d, ctx2));
  return rep;
}

namespace {

VarListPtr vars8() {
  static VarListPtr v =
      make_vars({"a1", "b1", "c1", "d1", "a2", "b2", "c2", "d2"});
  return v;
}

CheckReport sl2_hom_symbolic(const ClosedFormRep& rep) {
  CheckReport out;
  out.backend = "symbolic";
  out.checkedRelations.push_back("sigma(M1 M2) = sigma(M1) sigma(M2) in the doubled coordinate ring");
  uint32_t p = rep.p;
  VarListPtr W = vars8();
  auto v = [&](const char* n) { return MPoly::variable(p, W, n); };
  MPoly a1 = v("a1"), b1 = v("b1"), c1 = v("c1"), d1 = v("d1");
  MPoly a2 = v("a2"), b2 = v("b2"), c2 = v("c2"), d2 = v("d2");
  // entries of M1 M2
  std::vector<MPoly> prod = {a1 * a2 + b1 * c2, a1 * b2 + b1 * d2, c1 * a2 + d1 * c2,
                             c1 * b2 + d1 * d2};
  std::vector<MPoly> m1 = {a1, b1, c1, d1};
  std::vector<MPoly> m2 = {a2, b2, c2, d2};
  size_t n = rep.n;
  Mat<MPoly> s_prod(n, n, MPoly(p, W)), s1(n, n, MPoly(p, W)), s2(n, n, MPoly(p, W));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const MPoly& e = rep.entries.at(i, j);
      s_prod.at(i, j) = e.substitute(prod);
      s1.at(i, j) = e.substitute(m1);
      s2.at(i, j) = e.substitute(m2);
    }
  Mat<MPoly> diff = s_prod - s1 * s2;
  RewriteSystem rs = sl2_blocks_of(W);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      MPoly nf = sl2_reduce(diff.at(i, j), rs);
      if (!nf.is_zero()) {
        out.passed = false;
        out.differencePoly = nf.str();
        out.notes.push_back("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        return out;
      }
    }
  return out;
}

}  // namespace

CheckReport check_sl2_homomorphism(const FqRep& rep, uint64_t pairBudget, uint64_t sampleN,
                                   uint64_t seed) {
  CheckReport out;
  const FieldCtx* F = rep.F;
  out.checkedRelations.push_back("sigma(M1 M2) = sigma(M1) sigma(M2)");
  uint64_t order = sl2_order(F->q());
  if (order * order <= pairBudget) {
    out.backend = "exhaustive(q=" + std::to_string(F->q()) + ")";
    auto elems = enumerate_sl2(FieldCtx::extension(F->p(), F->modulus()));
    std::vector<FqMat> images;
    images.reserve(elems.size());
    for (const auto& g : elems) images.push_back(rep.at(g));
    for (size_t i = 0; i < elems.size(); ++i)
      for (size_t j = 0; j < elems.size(); ++j) {
        if (rep.at(mul2(elems[i], elems[j])) != images[i] * images[j]) {
          out.passed = false;
          out.counterexample = "M1=" + point_str({elems[i].a, elems[i].b, elems[i].c, elems[i].d}) +
                               " M2=" + point_str({elems[j].a, elems[j].b, elems[j].c, elems[j].d});
          return out;
        }
      }
    return out;
  }
  out.backend = "sampled(q=" + std::to_string(F->q()) + ",n=" + std::to_string(sampleN) + ")";
  std::mt19937_64 rng(seed);
  for (uint64_t k = 0; k < sampleN; ++k) {
    Sl2Elem x = random_sl2(F, rng), y = random_sl2(F, rng);
    if (rep.at(mul2(x, y)) != rep.at(x) * rep.at(y)) {
      out.passed = false;
      out.counterexample = "M1=" + point_str({x.a, x.b, x.c, x.d}) +
                           " M2=" + point_str({y.a, y.b, y.c, y.d});
      return out;
    }
  }
  return out;
}

CheckReport check_sl2_homomorphism(const ClosedFormRep& rep, Mode mode,
                                   const std::shared_ptr<const FieldCtx>& ctx,
                                   uint64_t pairBudget, uint64_t sampleN, uint64_t seed) {
  uint32_t maxdeg = 0;
  for (size_t i = 0; i < rep.n; ++i)
    for (size_t j = 0; j < rep.n; ++j)
      maxdeg = std::max(maxdeg, rep.entries.at(i, j).total_degree());
  bool symbolic_ok = maxdeg <= 4;  // untwisted closed forms have degree <= 3
  if (mode == Mode::Symbolic) {
    if (!symbolic_ok)
      fail(Err::DegreeTooLarge,
           "symbolic multiplicativity is limited to untwisted forms; use exhaustive or factor "
           "through Frobenius");
    return sl2_hom_symbolic(rep);
  }
  if (mode == Mode::Auto && symbolic_ok) return sl2_hom_symbolic(rep);
  CheckReport out = check_sl2_homomorphism(rep_of_closed_form(rep, ctx.get()), pairBudget,
                                           sampleN, seed);
  auto ctx2 = quadratic_of(ctx);
  if (out.passed && ctx2)
    out.merge(check_sl2_homomorphism(rep_of_closed_form(rep, ctx2.get()), pairBudget, sampleN,
                                     seed));
  return out;
}

FqMat evaluate(const ClosedFormRep& rep, const Sl2Elem& g) {
  const FieldCtx* F = g.a.ctx();
  if (g.a * g.d - g.b * g.c != F->one()) fail(Err::NotUnimodular, "det != 1");
  FqMat out(rep.n, rep.n, F->zero());
  for (size_t i = 0; i < rep.n; ++i)
    for (size_t j = 0; j < rep.n; ++j)
      out.at(i, j) = rep.entries.at(i, j).eval({g.a, g.b, g.c, g.d});
  return out;
}

FqMat evaluate(const GenDatum& datum, const Sl2Elem& g) {
  return rep_of_gen_datum(datum, g.a.ctx()).at(g);
}

std::array<long long, 4> omega_star(const std::array<long long, 4>& w) {
  return {-w[3], -w[2], -w[1], -w[0]};
}

namespace {

Mat<MPoly> subst_t_negate(const Mat<MPoly>& m) {
  uint32_t p = m.at(0, 0).characteristic();
  VarListPtr V = m.at(0, 0).vars();
  MPoly neg = -MPoly::variable(p, V, (*V)[0]);
  Mat<MPoly> out = m;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).substitute({neg});
  return out;
}

}  // namespace

GenDatum psi_star(const GenDatum& d) {
  GenDatum out = d;
  out.phiPlus = tau_transpose(subst_t_negate(d.phiPlus));
  out.weights = omega_star(d.weights);
  if (d.phiMinus) out.phiMinus = tau_transpose(subst_t_negate(*d.phiMinus));
  return out;
}

GenDatum tau_datum(const GenDatum& d) {
  GenDatum out = d;
  out.phiPlus = tau_transpose(d.phiPlus);
  if (d.phiMinus) out.phiMinus = tau_transpose(*d.phiMinus);
  return out;
}

ClosedFormRep tau_sigma_tau(const ClosedFormRep& rep) {
  uint32_t p = rep.p;
  VarListPtr V = vars_abcd();
  // tau on the 2x2 argument swaps a and d
  std::vector<MPoly> swap_ad = {MPoly::variable(p, V, "d"), MPoly::variable(p, V, "b"),
                                MPoly::variable(p, V, "c"), MPoly::variable(p, V, "a")};
  Mat<MPoly> m = rep.entries;
  for (size_t i = 0; i < rep.n; ++i)
    for (size_t j = 0; j < rep.n; ++j) m.at(i, j) = m.at(i, j).substitute(swap_ad);
  m = tau_transpose(m);
  RewriteSystem rs = sl2_blocks_of(V);
  for (size_t i = 0; i < rep.n; ++i)
    for (size_t j = 0; j < rep.n; ++j) m.at(i, j) = sl2_reduce(m.at(i, j), rs);
  ClosedFormRep out = rep;
  out.entries = m;
  return out;
}

CheckReport check_frobenius_multiplicative(uint32_t p, uint32_t e) {
  CheckReport out;
  out.backend = "symbolic";
  out.checkedRelations.push_back("entrywise p^e power is multiplicative on SL(2)");
  VarListPtr W = vars8();
  auto v = [&](const char* n) { return MPoly::variable(p, W, n); };
  MPoly a1 = v("a1"), b1 = v("b1"), c1 = v("c1"), d1 = v("d1");
  MPoly a2 = v("a2"), b2 = v("b2"), c2 = v("c2"), d2 = v("d2");
  uint32_t q = (uint32_t)ipow(p, e);
  std::vector<MPoly> prod = {a1 * a2 + b1 * c2, a1 * b2 + b1 * d2, c1 * a2 + d1 * c2,
                             c1 * b2 + d1 * d2};
  Mat<MPoly> lhs(2, 2, MPoly(p, W)), f1(2, 2, MPoly(p, W)), f2(2, 2, MPoly(p, W));
  lhs.at(0, 0) = prod[0].pow(q);
  lhs.at(0, 1) = prod[1].pow(q);
  lhs.at(1, 0) = prod[2].pow(q);
  lhs.at(1, 1) = prod[3].pow(q);
  f1.at(0, 0) = a1.pow(q);
  f1.at(0, 1) = b1.pow(q);
  f1.at(1, 0) = c1.pow(q);
  f1.at(1, 1) = d1.pow(q);
  f2.at(0, 0) = a2.pow(q);
  f2.at(0, 1) = b2.pow(q);
  f2.at(1, 0) = c2.pow(q);
  f2.at(1, 1) = d2.pow(q);
  Mat<MPoly> diff = lhs - f1 * f2;
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j)
      if (!diff.at(i, j).is_zero()) {
        out.passed = false;
        out.differencePoly = diff.at(i, j).str();
        return out;
      }
  return out;
}

CheckReport check_factorization_identity(const std::shared_ptr<const FieldCtx>& ctx) {
  CheckReport out;
  const FieldCtx* F = ctx.get();
  out.backend = "exhaustive(q=" + std::to_string(F->q()) + ")";
  out.checkedRelations.push_back(
      "(1 t;0 1)(1 0;s 1) = (1 0; s/(1+ts) 1)(1+ts 0; 0 1/(1+ts))(1 t/(1+ts); 0 1)");
  Fq one = F->one();
  for (uint32_t ti = 0; ti < F->q(); ++ti)
    for (uint32_t si = 0; si < F->q(); ++si) {
      Fq t = F->element(ti), s = F->element(si);
      Fq den = one + t * s;
      if (den.is_zero()) continue;
      Fq di = fq_inv(den);
      Sl2Elem lhs = mul2({one, t, F->zero(), one}, {one, F->zero(), s, one});
      Sl2Elem rhs = mul2(mul2({one, F->zero(), s * di, one}, {den, F->zero(), F->zero(), di}),
                         {one, t * di, F->zero(), one});
      if (!(lhs.a == rhs.a && lhs.b == rhs.b && lhs.c == rhs.c && lhs.d == rhs.d)) {
        out.passed = false;
        out.counterexample = "(t,s)=" + point_str({t, s});
        return out;
      }
    }
  return out;
}

}  // namespace sl2hom
