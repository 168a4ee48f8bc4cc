#include <doctest.h>

#include <random>

#include "sl2hom/field.hpp"

using namespace sl2hom;

TEST_CASE("prime field inverses") {
  auto F5 = FieldCtx::prime(5);
  CHECK(fq_inv(F5->from_int(2)) == F5->from_int(3));
  auto F2 = FieldCtx::prime(2);
  CHECK(fq_inv(F2->one()) == F2->one());
  CHECK_THROWS_AS(fq_inv(F5->zero()), ToolError);
}

TEST_CASE("powers") {
  auto F5 = FieldCtx::prime(5);
  CHECK(fq_pow(F5->from_int(2), 4) == F5->one());
  CHECK(fq_pow(F5->from_int(2), -1) == F5->from_int(3));
  CHECK(fq_pow(F5->from_int(2), 0) == F5->one());
  CHECK_THROWS_AS(fq_pow(F5->zero(), -2), ToolError);

  // F_4 with modulus x^2+x+1: g^2 = g+1
  auto F4 = FieldCtx::extension(2, {1, 1, 1});
  Fq g = F4->from_index(2);  // the class of x
  Fq g2 = fq_pow(g, 2);
  CHECK(g2 == g + F4->one());
}

TEST_CASE("sl2 enumeration counts and closure") {
  CHECK(enumerate_sl2(FieldCtx::prime(2)).size() == 6);
  CHECK(enumerate_sl2(FieldCtx::prime(3)).size() == 24);
  auto F4 = FieldCtx::make(2, 2);
  auto elems = enumerate_sl2(F4);
  CHECK(elems.size() == 60);
  // closed under product and inverse on random pairs
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
  auto member = [&](const Sl2Elem& m) {
    for (const auto& e : elems)
      if (e.a == m.a && e.b == m.b && e.c == m.c && e.d == m.d) return true;
    return false;
  };
  for (int k = 0; k < 100; ++k) {
    const auto& x = elems[pick(rng)];
    const auto& y = elems[pick(rng)];
    Sl2Elem xy{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
               x.c * y.b + x.d * y.d};
    CHECK(member(xy));
    Sl2Elem xi{x.d, -x.b, -x.c, x.a};
    CHECK(member(xi));
  }
  CHECK_THROWS_AS(enumerate_sl2(FieldCtx::make(5, 4)), ToolError);  // budget
}

TEST_CASE("field laws on random elements") {
  for (auto ctx : {FieldCtx::prime(5), FieldCtx::make(3, 2), FieldCtx::make(2, 3)}) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<uint32_t> nz(1, ctx->q() - 1);
    std::uniform_int_distribution<long long> e(-50, 50);
    for (int k = 0; k < 100; ++k) {
      Fq x = ctx->from_index(nz(rng)), y = ctx->from_index(nz(rng));
      CHECK(fq_inv(x * y) == fq_inv(y) * fq_inv(x));
      CHECK(x * fq_inv(x) == ctx->one());
      long long ea = e(rng), eb = e(rng);
      CHECK(fq_pow(x, ea + eb) == fq_pow(x, ea) * fq_pow(x, eb));
    }
  }
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(FieldCtx::prime(6), ToolError);
  CHECK_THROWS_AS(FieldCtx::extension(3, {1, 0, 2}), ToolError);  // not monic
  CHECK_THROWS_AS(FieldCtx::extension(3, {0, 0, 1}), ToolError);  // x^2 reducible
  CHECK(FieldCtx::make(3, 2)->q() == 9);
  CHECK(FieldCtx::make(5, 3)->q() == 125);
}
