#include "sl2hom/analyze.hpp"

#include <algorithm>
#include <random>
#include <map>
#include <sstream>
#include <tuple>

namespace sl2hom {

std::string Signature::str() const {
  std::ostringstream os;
  os << "w=(";
  for (size_t i = 0; i < weights.size(); ++i) os << (i ? "," : "") << weights[i];
  os << ") d=(" << dSigma.first << "," << dSigma.second << ")";
  os << " du=(" << dUnipotent[0] << "," << dUnipotent[1] << "," << dUnipotent[2] << ","
     << dUnipotent[3] << ")";
  return os.str();
}

namespace {

// kernel dimension of the stacked (g - I) blocks for a family of images
int stacked_fixed_dim(const std::vector<FqMat>& images) {
  if (images.empty()) return 0;
  size_t n = images[0].rows();
  const FieldCtx* F = images[0].at(0, 0).ctx();
  FqMat stack(images.size() * n, n, F->zero());
  for (size_t k = 0; k < images.size(); ++k)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Fq v = images[k].at(i, j);
        if (i == j) v = v - F->one();
        stack.at(k * n + i, j) = v;
      }
  return (int)nullspace_dim(stack);
}

std::vector<FqMat> unipotent_images(const FqRep& rep, int sign) {
  std::vector<FqMat> out;
  const FieldCtx* F = rep.F;
  for (uint32_t i = 1; i < F->q(); ++i) {
    Fq x = F->element(i);
    out.push_back(sign > 0 ? rep.uplus(x) : rep.uminus(x));
  }
  return out;
}

std::vector<FqMat> group_generator_images(const FqRep& rep) {
  std::vector<FqMat> out = unipotent_images(rep, +1);
  for (auto& m : unipotent_images(rep, -1)) out.push_back(std::move(m));
  out.push_back(rep.torus(rep.F->generator()));
  return out;
}

std::vector<FqMat> transposed(const std::vector<FqMat>& ms) {
  std::vector<FqMat> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(m.transpose());
  return out;
}

}  // namespace

std::pair<int, int> fixed_dims(const FqRep& rep) {
  if (rep.F->q() < 4) fail(Err::FieldTooSmall, "fixed_dims needs q >= 4");
  auto gens = group_generator_images(rep);
  return {stacked_fixed_dim(gens), stacked_fixed_dim(transposed(gens))};
}

std::pair<int, int> unipotent_fixed_dims(const FqRep& rep, int sign) {
  auto gens = unipotent_images(rep, sign);
  return {stacked_fixed_dim(gens), stacked_fixed_dim(transposed(gens))};
}

std::vector<long long> lift_weights(const std::vector<long long>& w, uint64_t q) {
  long long ord = (long long)q - 1;
  std::vector<long long> out;
  out.reserve(w.size());
  for (long long x : w) {
    long long r = x % ord;
    if (r < 0) r += ord;
    if (r > ord / 2) r -= ord;
    out.push_back(r);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

namespace {

Signature signature_dims(const FqRep& rep) {
  Signature sig;
  sig.dSigma = fixed_dims(rep);
  auto up = unipotent_fixed_dims(rep, +1);
  auto um = unipotent_fixed_dims(rep, -1);
  sig.dUnipotent = {up.first, um.first, up.second, um.second};
  return sig;
}

}  // namespace

Signature signature_of_form(const FormSpec& spec, const std::shared_ptr<const FieldCtx>& ctx) {
  ClosedFormRep cf = build_sigma(spec);
  FqRep rep = rep_of_closed_form(cf, ctx.get());
  Signature sig = signature_dims(rep);
  sig.weights = torus_weights(spec);
  std::sort(sig.weights.rbegin(), sig.weights.rend());
  return sig;
}

Signature signature_of_rep(const FqRep& rep) {
  const FieldCtx* F = rep.F;
  if (F->q() < 4) fail(Err::FieldTooSmall, "signature needs q >= 4");
  Signature sig = signature_dims(rep);
  // torus eigenvalue multiplicities -> exponents of the generator
  Fq g = F->generator();
  FqMat T = rep.torus(g);
  size_t found = 0;
  std::vector<long long> raw;
  for (uint32_t l = 0; l < F->q() - 1 && found < rep.n; ++l) {
    Fq lambda = Fq(F, F->exp(l));
    FqMat shifted = T;
    for (size_t i = 0; i < rep.n; ++i) shifted.at(i, i) = shifted.at(i, i) - lambda;
    size_t mult = nullspace_dim(shifted);
    for (size_t k = 0; k < mult; ++k) raw.push_back((long long)l);
    found += mult;
  }
  if (found != rep.n)
    fail(Err::NoMatch, "torus image is not diagonalizable over F_q; not conjugate to the catalog");
  sig.weights = lift_weights(raw, F->q());
  return sig;
}

std::shared_ptr<const FieldCtx> analysis_field(uint32_t p, long long maxE) {
  long long maxdeg = 3 * ipow(p, (uint32_t)maxE);
  uint32_t m = 1;
  while ((ipow(p, m) <= maxdeg || ipow(p, m) < 4) && m < 4) ++m;
  return FieldCtx::make(p, m);
}

std::vector<ClassEntry> signature_table(uint32_t p, long long maxE, Scope scope,
                                        const std::shared_ptr<const FieldCtx>& ctx) {
  static std::map<std::tuple<uint32_t, long long, int, uint32_t>, std::vector<ClassEntry>> cache;
  auto key = std::make_tuple(p, maxE, (int)scope, ctx->q());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<ClassEntry> table;
  std::vector<std::string> labels =
      scope == Scope::Sharp4 ? sharp_labels_for(p) : small_labels(p);
  Family fam = scope == Scope::Sharp4 ? Family::Sharp : Family::Small;
  for (const auto& label : labels) {
    for (const auto& params : enumerate_params(label, fam, p, maxE)) {
      FormSpec spec{fam, label, params, p};
      validate_form(spec);
      ClassEntry entry{spec, signature_of_form(spec, ctx), {}};
      entry.liftedSig = entry.sig;
      entry.liftedSig.weights = lift_weights(entry.sig.weights, ctx->q());
      table.push_back(std::move(entry));
    }
  }
  cache[key] = table;
  return table;
}

FormSpec classify(const FqRep& rep, long long maxE, Scope scope, uint64_t seed) {
  const FieldCtx* F = rep.F;
  // well-definedness spot check
  std::mt19937_64 rng(seed);
  {
    auto sample = [&](std::mt19937_64& r) {
      uint64_t q = F->q();
      std::uniform_int_distribution<uint64_t> pick(0, q);
      std::uniform_int_distribution<uint64_t> nz(1, q - 1), any(0, q - 1);
      if (pick(r) == 0) {
        Fq b = F->from_index((uint32_t)nz(r));
        return Sl2Elem{F->zero(), b, -fq_inv(b), F->from_index((uint32_t)any(r))};
      }
      Fq a = F->from_index((uint32_t)nz(r));
      Fq b = F->from_index((uint32_t)any(r));
      Fq c = F->from_index((uint32_t)any(r));
      return Sl2Elem{a, b, c, (b * c + F->one()) / a};
    };
    for (int k = 0; k < 50; ++k) {
      Sl2Elem x = sample(rng), y = sample(rng);
      Sl2Elem xy{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                 x.c * y.b + x.d * y.d};
      if (rep.at(xy) != rep.at(x) * rep.at(y))
        fail(Err::BadParams, "generator images are not multiplicative");
    }
  }
  Signature sig = signature_of_rep(rep);
  auto ctx = FieldCtx::extension(F->p(), F->modulus());
  auto table = signature_table(F->p(), maxE, scope, ctx);
  const ClassEntry* hit = nullptr;
  int hits = 0;
  for (const auto& entry : table) {
    if (entry.spec.family == Family::Sharp && rep.n != 4) continue;
    if (entry.spec.family == Family::Small) {
      ClosedFormRep cf = build_sigma(entry.spec);
      if (cf.n != rep.n) continue;
    }
    if (entry.liftedSig == sig) {
      ++hits;
      hit = &entry;
    }
  }
  if (hits == 0)
    fail(Err::NoMatch, "no catalog class matches signature " + sig.str() +
                           " within e <= " + std::to_string(maxE));
  if (hits > 1)
    fail(Err::AmbiguousMatch, "signature " + sig.str() + " matches several catalog classes");
  return hit->spec;
}

EndAlgebra endomorphism_algebra(const FqRep& rep) {
  const FieldCtx* F = rep.F;
  size_t n = rep.n;
  auto gens = group_generator_images(rep);
  // X sigma(g) - sigma(g) X = 0, unknowns X_{ab} row-major
  FqMat rows(gens.size() * n * n, n * n, F->zero());
  size_t rcount = 0;
  for (const auto& G : gens) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        // sum_k X_{ik} G_{kj} - G_{ik} X_{kj}
        for (size_t k = 0; k < n; ++k) {
          rows.at(rcount, i * n + k) += G.at(k, j);
          rows.at(rcount, k * n + j) -= G.at(i, k);
        }
        ++rcount;
      }
  }
  Nullspace ns = nullspace(rows);
  EndAlgebra out;
  out.dim = ns.dim;
  for (const auto& v : ns.basis) {
    FqMat X(n, n, F->zero());
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) X.at(i, j) = v[i * n + j];
    out.basis.push_back(std::move(X));
  }
  return out;
}

namespace {

// Lexicographic prime-field coefficient sweep over the span of basis;
// returns the first nontrivial idempotent, or nothing.
std::optional<FqMat> find_idempotent(const EndAlgebra& alg, const FieldCtx* F, uint64_t budget,
                                     bool* exhausted) {
  size_t r = alg.dim;
  size_t n = alg.basis.empty() ? 0 : alg.basis[0].rows();
  *exhausted = false;
  if (r == 0) return std::nullopt;
  FqMat I = fq_identity(F, n);
  std::vector<uint32_t> c(r, 0);
  uint64_t tried = 0;
  while (true) {
    // advance odometer
    size_t pos = 0;
    while (pos < r) {
      if (++c[pos] < F->p()) break;
      c[pos] = 0;
      ++pos;
    }
    if (pos == r) break;  // full sweep done
    if (++tried > budget) {
      *exhausted = true;
      return std::nullopt;
    }
    FqMat X(n, n, F->zero());
    for (size_t k = 0; k < r; ++k) {
      if (c[k] == 0) continue;
      Fq coef = F->from_int((long long)c[k]);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) X.at(i, j) += coef * alg.basis[k].at(i, j);
    }
    if (X == I) continue;
    bool zero = true;
    for (size_t i = 0; i < n && zero; ++i)
      for (size_t j = 0; j < n && zero; ++j)
        if (!X.at(i, j).is_zero()) zero = false;
    if (zero) continue;
    if (X * X == X) return X;
  }
  return std::nullopt;
}

}  // namespace

bool is_indecomposable(const FqRep& rep, uint64_t budget) {
  EndAlgebra alg = endomorphism_algebra(rep);
  bool exhausted = false;
  auto idem = find_idempotent(alg, rep.F, budget, &exhausted);
  if (idem) return false;
  if (exhausted)
    fail(Err::SearchBudgetExceeded,
         "idempotent sweep over p^" + std::to_string(alg.dim) + " combinations exceeds budget");
  return true;
}

DecompositionReport decompose(const FqRep& rep, long long maxE, uint64_t budget, uint64_t seed) {
  const FieldCtx* F = rep.F;
  size_t n = rep.n;
  EndAlgebra alg = endomorphism_algebra(rep);
  bool exhausted = false;
  auto idem = find_idempotent(alg, F, budget, &exhausted);
  if (!idem && exhausted)
    fail(Err::SearchBudgetExceeded, "idempotent sweep exceeds budget");
  if (!idem) {
    // indecomposable: the rep reports its own class
    DecompositionReport out;
    FormSpec own = [&] {
      try {
        return classify(rep, maxE, n == 4 ? Scope::Sharp4 : Scope::SmallN, seed);
      } catch (const ToolError& e) {
        if (e.code() == Err::NoMatch)
          fail(Err::UnidentifiedSummand, "indecomposable block outside the catalog");
        throw;
      }
    }();
    out.summands.push_back({own, 1});
    out.conjugator = fq_identity(F, n);
    return out;
  }
  // split V = im X (+) ker X; rref of X^T yields a column-space basis
  FqMat X = *idem;
  FqMat xt = X.transpose();
  size_t r = rref(xt).size();
  FqMat C(n, n, F->zero());
  for (size_t k = 0; k < r; ++k)
    for (size_t j = 0; j < n; ++j) C.at(j, k) = xt.at(k, j);
  Nullspace ker = nullspace(X);
  for (size_t k = 0; k < ker.dim; ++k)
    for (size_t j = 0; j < n; ++j) C.at(j, r + k) = ker.basis[k][j];
  if (r + ker.dim != n || !is_invertible(C))
    fail(Err::UnidentifiedSummand, "idempotent split did not produce a basis");
  FqRep top = rep_block(rep, C, 0, r);
  FqRep bot = rep_block(rep, C, r, n - r);
  DecompositionReport d1 = decompose(top, maxE, budget, seed);
  DecompositionReport d2 = decompose(bot, maxE, budget, seed);
  DecompositionReport out;
  out.summands = d1.summands;
  for (const auto& sm : d2.summands) {
    bool merged = false;
    for (auto& have : out.summands)
      if (have.first.str() == sm.first.str() && have.first.params == sm.first.params) {
        have.second += sm.second;
        merged = true;
        break;
      }
    if (!merged) out.summands.push_back(sm);
  }
  out.conjugator = C * direct_sum(d1.conjugator, d2.conjugator);
  return out;
}

EquivalenceResult check_equivalence(const FqRep& rep1, const FqRep& rep2, uint64_t budget,
                                    uint64_t samples, uint64_t seed) {
  if (rep1.F != rep2.F) fail(Err::CharMismatch, "reps over different fields");
  if (rep1.n != rep2.n) {
    EquivalenceResult res;
    res.equivalent = false;
    res.exact = true;
    res.note = "different dimensions";
    return res;
  }
  const FieldCtx* F = rep1.F;
  size_t n = rep1.n;
  auto gens1 = group_generator_images(rep1);
  auto gens2 = group_generator_images(rep2);
  // intertwiners: X sigma2(g) = sigma1(g) X
  FqMat rows(gens1.size() * n * n, n * n, F->zero());
  size_t rcount = 0;
  for (size_t gidx = 0; gidx < gens1.size(); ++gidx) {
    const FqMat& G1 = gens1[gidx];
    const FqMat& G2 = gens2[gidx];
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        for (size_t k = 0; k < n; ++k) {
          rows.at(rcount, i * n + k) += G2.at(k, j);
          rows.at(rcount, k * n + j) -= G1.at(i, k);
        }
        ++rcount;
      }
  }
  Nullspace ns = nullspace(rows);
  EquivalenceResult res;
  if (ns.dim == 0) {
    res.equivalent = false;
    res.exact = true;
    res.note = "intertwiner space is zero";
    return res;
  }
  auto vec_to_mat = [&](const FqVec& v) {
    FqMat X(n, n, F->zero());
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) X.at(i, j) = v[i * n + j];
    return X;
  };
  std::vector<FqMat> basis;
  for (const auto& v : ns.basis) basis.push_back(vec_to_mat(v));
  // prime-field sweep, then seeded random F_q combinations
  std::vector<uint32_t> c(ns.dim, 0);
  uint64_t tried = 0;
  bool swept_all = true;
  while (true) {
    size_t pos = 0;
    while (pos < ns.dim) {
      if (++c[pos] < F->p()) break;
      c[pos] = 0;
      ++pos;
    }
    if (pos == ns.dim) break;
    if (++tried > budget) {
      swept_all = false;
      break;
    }
    FqMat X(n, n, F->zero());
    for (size_t k = 0; k < ns.dim; ++k) {
      if (c[k] == 0) continue;
      Fq coef = F->from_int((long long)c[k]);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) X.at(i, j) += coef * basis[k].at(i, j);
    }
    if (is_invertible(X)) {
      res.equivalent = true;
      res.conjugator = X;
      res.exact = true;
      return res;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> any(0, F->q() - 1);
  for (uint64_t k = 0; k < samples; ++k) {
    FqMat X(n, n, F->zero());
    for (size_t b = 0; b < ns.dim; ++b) {
      Fq coef = F->from_index(any(rng));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) X.at(i, j) += coef * basis[b].at(i, j);
    }
    if (is_invertible(X)) {
      res.equivalent = true;
      res.conjugator = X;
      res.exact = true;
      return res;
    }
  }
  res.equivalent = false;
  res.exact = false;
  res.note = swept_all
                 ? "nonzero intertwiner space searched exhaustively over F_p and sampled over F_q"
                 : "search budget exhausted; verdict is budget-limited evidence";
  return res;
}

}  // namespace sl2hom
