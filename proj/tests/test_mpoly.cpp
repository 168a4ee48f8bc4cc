#include <doctest.h>

#include <random>

#include "sl2hom/mpoly.hpp"

using namespace sl2hom;

namespace {
VarListPtr AB() {
  static VarListPtr v = make_vars({"a", "b"});
  return v;
}
VarListPtr ABCD() {
  static VarListPtr v = make_vars({"a", "b", "c", "d"});
  return v;
}
VarListPtr TV() {
  static VarListPtr v = make_vars({"t"});
  return v;
}
}  // namespace

TEST_CASE("products") {
  // (a+b)(a-b) = a^2 - b^2 over F_5
  MPoly a = MPoly::variable(5, AB(), "a"), b = MPoly::variable(5, AB(), "b");
  CHECK((a + b) * (a - b) == a * a - b * b);
  // freshman's dream in characteristic 2
  MPoly a2 = MPoly::variable(2, AB(), "a"), b2 = MPoly::variable(2, AB(), "b");
  CHECK((a2 + b2) * (a2 + b2) == a2 * a2 + b2 * b2);
  // the characteristic kills the coefficient
  MPoly a3 = MPoly::variable(3, AB(), "a");
  CHECK(a3.scaled(3).is_zero());
  // mixed variable lists are rejected
  MPoly t = MPoly::variable(5, TV(), "t");
  CHECK_THROWS_AS((void)(a * t), ToolError);
}

TEST_CASE("sl2 reduction normal forms") {
  auto V = ABCD();
  RewriteSystem rs = sl2_blocks_of(V);
  auto v = [&](const char* n) { return MPoly::variable(7, V, n); };
  MPoly a = v("a"), b = v("b"), c = v("c"), d = v("d");
  MPoly one = MPoly::constant(7, V, 1);
  CHECK(sl2_reduce(a * d, rs) == b * c + one);
  CHECK(sl2_reduce(a * a * d, rs) == a * b * c + a);
  CHECK(sl2_reduce(a * d * d, rs) == b * c * d + d);
  // confluence smoke test: (ad)^2 has one normal form
  MPoly adad = a * d * a * d;
  MPoly nf = sl2_reduce(adad, rs);
  CHECK(nf == sl2_reduce(sl2_reduce(a * d, rs) * sl2_reduce(a * d, rs), rs));
  // no monomial with both a and d survives
  for (const auto& [e, coef] : nf.terms()) CHECK((e[0] == 0 || e[3] == 0));
}

TEST_CASE("reduction is the identity on SL2 points") {
  auto V = ABCD();
  RewriteSystem rs = sl2_blocks_of(V);
  auto F = FieldCtx::make(3, 2);
  auto pts = enumerate_sl2(F);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<uint32_t> coef(0, 2), ex(0, 3);
  std::uniform_int_distribution<size_t> pidx(0, pts.size() - 1);
  for (int k = 0; k < 200; ++k) {
    MPoly f(3, V);
    for (int t = 0; t < 5; ++t) {
      MPoly mono = MPoly::constant(3, V, coef(rng));
      mono = mono * MPoly::monomial(3, V, "a", ex(rng)) * MPoly::monomial(3, V, "b", ex(rng)) *
             MPoly::monomial(3, V, "c", ex(rng)) * MPoly::monomial(3, V, "d", ex(rng));
      f = f + mono;
    }
    const auto& g = pts[pidx(rng)];
    std::vector<Fq> point = {g.a, g.b, g.c, g.d};
    CHECK(sl2_reduce(f, rs).eval(point) == f.eval(point));
  }
}

TEST_CASE("evaluation") {
  auto V = AB();
  MPoly f = MPoly::variable(5, V, "a") * MPoly::variable(5, V, "a") -
            MPoly::variable(5, V, "b") * MPoly::variable(5, V, "b");
  auto F5 = FieldCtx::prime(5);
  CHECK(f.eval({F5->from_int(2), F5->from_int(1)}) == F5->from_int(3));
  auto F9 = FieldCtx::prime(3);
  CHECK_THROWS_AS(f.eval({F9->one(), F9->one()}), ToolError);  // characteristic mismatch
  // t^p evaluates to the Frobenius image
  auto F4 = FieldCtx::make(2, 2);
  MPoly tp = MPoly::monomial(2, TV(), "t", 2);
  Fq g = F4->generator();
  CHECK(tp.eval({g}) == g * g);
}

TEST_CASE("textual format round trip") {
  auto V = ABCD();
  MPoly f = MPoly::monomial(5, V, "a", 2, 3) * MPoly::variable(5, V, "d") +
            MPoly::variable(5, V, "b") * MPoly::variable(5, V, "c");
  CHECK(f.str() == "3*a^2*d + b*c");
  CHECK(MPoly::parse(5, V, "3*a^2*d + b*c") == f);
  CHECK(MPoly::parse(5, V, f.str()) == f);
  CHECK(MPoly::parse(5, V, "0").is_zero());
  CHECK(MPoly::parse(5, V, "a - b") == MPoly::variable(5, V, "a") - MPoly::variable(5, V, "b"));
}

TEST_CASE("substitution and twists") {
  auto T = TV();
  MPoly t = MPoly::variable(3, T, "t");
  MPoly f = t * t + t.scaled(2);
  // f(t^3) via exponent scaling equals substitution of t^3
  CHECK(f.var_power_scale(3) == f.substitute({MPoly::monomial(3, T, "t", 3)}));
  CHECK_THROWS_AS(f.pow(600), ToolError);  // degree cap
}
