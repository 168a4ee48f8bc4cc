#include <doctest.h>

#include <random>

#include "sl2hom/linalg.hpp"

using namespace sl2hom;

namespace {
FqMat random_mat(const FieldCtx* F, size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint32_t> any(0, F->q() - 1);
  FqMat m(n, n, F->zero());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m.at(i, j) = F->from_index(any(rng));
  return m;
}
}  // namespace

TEST_CASE("anti-transpose") {
  auto F = FieldCtx::prime(5);
  // unit matrix E_{1,2} maps to E_{3,4}
  FqMat e12(4, 4, F->zero());
  e12.at(0, 1) = F->one();
  FqMat t = tau_transpose(e12);
  FqMat e34(4, 4, F->zero());
  e34.at(2, 3) = F->one();
  CHECK(t == e34);
  // diagonal reverses
  FqMat d = fq_diag_ints(F.get(), {1, 2, 3, 4});
  CHECK(tau_transpose(d) == fq_diag_ints(F.get(), {4, 3, 2, 1}));
  // involution and anti-homomorphism on random matrices
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    FqMat a = random_mat(F.get(), 4, rng), b = random_mat(F.get(), 4, rng);
    CHECK(tau_transpose(tau_transpose(a)) == a);
    CHECK(tau_transpose(a * b) == tau_transpose(b) * tau_transpose(a));
  }
  FqMat rect(2, 3, F->zero());
  CHECK_THROWS_AS(tau_transpose(rect), ToolError);
}

TEST_CASE("nullspace") {
  auto F3 = FieldCtx::prime(3);
  FqMat zero(4, 4, F3->zero());
  CHECK(nullspace_dim(zero) == 4);
  FqMat n(2, 2, F3->zero());
  n.at(0, 1) = F3->one();
  CHECK(nullspace_dim(n) == 1);
  CHECK(nullspace_dim(fq_identity(F3.get(), 4)) == 0);
  // rank-nullity and basis independence on random matrices
  std::mt19937_64 rng(17);
  for (int k = 0; k < 50; ++k) {
    FqMat a = random_mat(F3.get(), 4, rng);
    Nullspace ns = nullspace(a);
    CHECK(rank(a) + ns.dim == 4);
    for (const auto& v : ns.basis) {
      for (size_t i = 0; i < 4; ++i) {
        Fq s = F3->zero();
        for (size_t j = 0; j < 4; ++j) s += a.at(i, j) * v[j];
        CHECK(s.is_zero());
      }
    }
    if (ns.dim > 0) {
      FqMat b(ns.dim, 4, F3->zero());
      for (size_t i = 0; i < ns.dim; ++i)
        for (size_t j = 0; j < 4; ++j) b.at(i, j) = ns.basis[i][j];
      CHECK(rank(b) == ns.dim);
    }
  }
}

TEST_CASE("kronecker and direct sum") {
  auto F = FieldCtx::prime(5);
  std::mt19937_64 rng(23);
  FqMat i2 = fq_identity(F.get(), 2);
  CHECK(kron_product(i2, i2) == fq_identity(F.get(), 4));
  FqMat e11(2, 2, F->zero()), e22(2, 2, F->zero());
  e11.at(0, 0) = F->one();
  e22.at(1, 1) = F->one();
  FqMat k = kron_product(e11, e22);
  CHECK(k.at(1, 1) == F->one());
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      if (!(i == 1 && j == 1)) CHECK(k.at(i, j).is_zero());
  for (int t = 0; t < 50; ++t) {
    FqMat a = random_mat(F.get(), 2, rng), b = random_mat(F.get(), 2, rng);
    FqMat c = random_mat(F.get(), 2, rng), d = random_mat(F.get(), 2, rng);
    CHECK(kron_product(a, b) * kron_product(c, d) == kron_product(a * c, b * d));
    CHECK(det(direct_sum(a, b)) == det(a) * det(b));
  }
  CHECK(direct_sum(i2, i2) == fq_identity(F.get(), 4));
  FqMat a = random_mat(F.get(), 2, rng);
  FqMat s = direct_sum(a, a);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 2; j < 4; ++j) {
      CHECK(s.at(i, j).is_zero());
      CHECK(s.at(j, i).is_zero());
    }
}

TEST_CASE("inverse and conjugation") {
  auto F = FieldCtx::make(2, 2);
  std::mt19937_64 rng(31);
  for (int k = 0; k < 50; ++k) {
    FqMat p = random_mat(F.get(), 4, rng);
    if (!is_invertible(p)) continue;
    CHECK(p * inverse(p) == fq_identity(F.get(), 4));
    FqMat q = random_mat(F.get(), 4, rng);
    if (!is_invertible(q)) continue;
    FqMat a = random_mat(F.get(), 4, rng);
    CHECK(inn(p, inn(q, a)) == inn(q * p, a));
  }
  FqMat sing(2, 2, F->zero());
  CHECK_THROWS_AS(inverse(sing), ToolError);
}

TEST_CASE("incremental solver") {
  auto F = FieldCtx::prime(7);
  // x + y = 3, x - y = 1  ->  x = 2, y = 1
  LinearSolver s(F.get(), 2);
  s.add_row({F->from_int(1), F->from_int(1)}, F->from_int(3));
  CHECK(!s.unique());
  s.add_row({F->from_int(1), F->from_int(-1)}, F->from_int(1));
  REQUIRE(s.unique());
  CHECK(s.solution()[0] == F->from_int(2));
  CHECK(s.solution()[1] == F->from_int(1));
  CHECK(s.add_row({F->from_int(2), F->from_int(2)}, F->from_int(6)) ==
        LinearSolver::RowFate::Reduced);
  CHECK(s.add_row({F->from_int(1), F->from_int(0)}, F->from_int(5)) ==
        LinearSolver::RowFate::Inconsistent);
  CHECK(s.inconsistent());
}

TEST_CASE("swap matrices") {
  auto F = FieldCtx::prime(3);
  FqMat p34 = fq_swap(F.get(), 4, 3, 4);
  CHECK(p34 * p34 == fq_identity(F.get(), 4));
  CHECK(p34.at(2, 3) == F->one());
  CHECK(p34.at(3, 2) == F->one());
  CHECK(p34.at(0, 0) == F->one());
  CHECK(p34.at(2, 2).is_zero());
}
