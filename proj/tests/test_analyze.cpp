#include <doctest.h>

#include <random>

#include "sl2hom/analyze.hpp"

using namespace sl2hom;

namespace {
FqRep rep_of(const std::string& form, uint32_t p, const Params& params,
             std::shared_ptr<const FieldCtx> ctx) {
  static std::vector<std::shared_ptr<const FieldCtx>> keep;
  keep.push_back(ctx);
  return rep_of_closed_form(build_sigma(FormSpec::parse(form, p, params)), ctx.get());
}
}  // namespace

TEST_CASE("fixed dims reproduce the d column") {
  CHECK(fixed_dims(rep_of("sharp:XI", 2, {{"e1", 0}}, FieldCtx::make(2, 2))) ==
        std::pair<int, int>{1, 2});
  CHECK(fixed_dims(rep_of("sharp:XIX", 2, {{"e1", 0}}, FieldCtx::make(2, 2))) ==
        std::pair<int, int>{2, 1});
  CHECK(fixed_dims(rep_of("sharp:XXVI", 3, {}, FieldCtx::make(3, 2))) ==
        std::pair<int, int>{4, 4});
  CHECK_THROWS_AS(fixed_dims(rep_of("sharp:XXVI", 3, {}, FieldCtx::prime(3))), ToolError);
}

TEST_CASE("signatures of catalog forms") {
  auto F9 = FieldCtx::make(3, 2);
  Signature s2 = signature_of_form(FormSpec::parse("sharp:II", 3, {{"e1", 0}}), F9);
  CHECK(s2.weights == std::vector<long long>{3, 1, -1, -3});
  CHECK(s2.dSigma == std::pair<int, int>{0, 0});
  CHECK(s2.dUnipotent[0] == 1);
  CHECK(s2.dUnipotent[1] == 1);

  Signature s7 = signature_of_form(FormSpec::parse("sharp:VII", 3, {{"e1", 0}}), F9);
  CHECK(s7.weights == s2.weights);
  CHECK(s7.dSigma == s2.dSigma);
  CHECK(s7.dUnipotent[0] == 2);
  CHECK(s7.dUnipotent[1] == 2);
  CHECK(!(s7 == s2));

  // (VII)# and (XV)#(e1+1, e1) share weights, d, and the column-side
  // unipotent dims; only the row side tells them apart
  Signature s15 = signature_of_form(FormSpec::parse("sharp:XV", 3, {{"e2", 1}, {"e3", 0}}), F9);
  CHECK(s15.weights == s7.weights);
  CHECK(s15.dSigma == s7.dSigma);
  CHECK(s15.dUnipotent[0] == s7.dUnipotent[0]);
  CHECK(s15.dUnipotent[1] == s7.dUnipotent[1]);
  CHECK(s15.dUnipotent[2] != s7.dUnipotent[2]);

  auto F4 = FieldCtx::make(2, 2);
  Signature s24 = signature_of_form(FormSpec::parse("sharp:XXIV", 2, {{"e2", 1}}), F4);
  CHECK(s24.weights == std::vector<long long>{2, 0, 0, -2});
  CHECK(s24.dSigma == std::pair<int, int>{2, 2});
}

TEST_CASE("signature is invariant under conjugation") {
  auto ctx = analysis_field(3, 1);
  FqRep rep = rep_of("sharp:IX", 3, {{"e1", 0}}, ctx);
  Signature base = signature_of_rep(rep);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<uint32_t> any(0, ctx->q() - 1);
  for (int k = 0; k < 20; ++k) {
    FqMat P(4, 4, ctx->zero());
    do {
      for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) P.at(i, j) = ctx->from_index(any(rng));
    } while (!is_invertible(P));
    CHECK(signature_of_rep(rep_conjugate(rep, P)) == base);
  }
}

TEST_CASE("classification round trips and star aliases") {
  auto ctx2 = analysis_field(2, 1);
  // sigma built from star (XXI) classifies as sharp (V) with the same e1
  FqRep r21 = rep_of("star:XXI", 2, {{"e1", 0}}, ctx2);
  FormSpec got = classify(r21, 1, Scope::Sharp4);
  CHECK(got.label == "V");
  CHECK(got.params.at("e1") == 0);
  // star (XXII) classifies as sharp (XV) with e2 = e3 = e1
  FqRep r22 = rep_of("star:XXII", 2, {{"e1", 1}}, ctx2);
  FormSpec got2 = classify(r22, 1, Scope::Sharp4);
  CHECK(got2.label == "XV");
  CHECK(got2.params.at("e2") == 1);
  CHECK(got2.params.at("e3") == 1);
  // conjugated catalog rep comes back unchanged
  auto ctx3 = analysis_field(3, 1);
  FqRep r15 = rep_of("sharp:XV", 3, {{"e2", 1}, {"e3", 0}}, ctx3);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<uint32_t> any(0, ctx3->q() - 1);
  FqMat P(4, 4, ctx3->zero());
  do {
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) P.at(i, j) = ctx3->from_index(any(rng));
  } while (!is_invertible(P));
  FormSpec got3 = classify(rep_conjugate(r15, P), 1, Scope::Sharp4);
  CHECK(got3.label == "XV");
  CHECK(got3.params.at("e2") == 1);
  CHECK(got3.params.at("e3") == 0);
}

TEST_CASE("endomorphism algebras") {
  CHECK(endomorphism_algebra(rep_of("sharp:XXVI", 3, {}, FieldCtx::make(3, 2))).dim == 16);
  CHECK(endomorphism_algebra(rep_of("small:2.1", 2, {{"e", 0}}, FieldCtx::make(2, 2))).dim == 1);
  CHECK(endomorphism_algebra(rep_of("sharp:XV", 3, {{"e2", 1}, {"e3", 0}}, analysis_field(3, 1)))
            .dim == 2);
}

TEST_CASE("indecomposability") {
  CHECK(is_indecomposable(rep_of("sharp:IV", 2, {{"e1", 0}, {"e2", 1}}, analysis_field(2, 1))));
  CHECK(!is_indecomposable(rep_of("sharp:XXVI", 3, {}, FieldCtx::make(3, 2))));
  CHECK(is_indecomposable(rep_of("small:2.1", 2, {{"e", 0}}, FieldCtx::make(2, 2))));
}

TEST_CASE("decompositions follow the table") {
  auto ctx2 = analysis_field(2, 1);
  DecompositionReport r = decompose(rep_of("sharp:XV", 2, {{"e2", 1}, {"e3", 0}}, ctx2), 1);
  REQUIRE(r.summands.size() == 2);
  for (const auto& [spec, mult] : r.summands) {
    CHECK(spec.label == "2.1");
    CHECK(mult == 1);
  }
  CHECK((r.summands[0].first.params.at("e") + r.summands[1].first.params.at("e")) == 1);

  auto ctx3 = analysis_field(3, 1);
  DecompositionReport r9 = decompose(rep_of("sharp:IX", 3, {{"e1", 0}}, ctx3), 1);
  REQUIRE(r9.summands.size() == 2);
  bool has32a = false, has1 = false;
  for (const auto& [spec, mult] : r9.summands) {
    if (spec.label == "3.2a" && spec.params.at("e") == 0 && mult == 1) has32a = true;
    if (spec.label == "1" && mult == 1) has1 = true;
  }
  CHECK(has32a);
  CHECK(has1);

  DecompositionReport r26 = decompose(rep_of("sharp:XXVI", 3, {}, ctx3), 1);
  REQUIRE(r26.summands.size() == 1);
  CHECK(r26.summands[0].first.label == "1");
  CHECK(r26.summands[0].second == 4);
}

TEST_CASE("equivalence") {
  auto ctx = analysis_field(2, 1);
  FqRep v = rep_of("star:V", 2, {{"e1", 0}}, ctx);
  FqRep x = rep_of("star:XXI", 2, {{"e1", 0}}, ctx);
  EquivalenceResult same = check_equivalence(v, v);
  CHECK(same.equivalent);
  EquivalenceResult vx = check_equivalence(x, v);
  CHECK(vx.equivalent);
  REQUIRE(vx.conjugator.has_value());
  // the found conjugator intertwines the generator images
  for (uint32_t i = 0; i < ctx->q(); ++i) {
    Fq t = ctx->element(i);
    CHECK(*vx.conjugator * v.uplus(t) == x.uplus(t) * *vx.conjugator);
  }

  auto ctx3 = analysis_field(3, 1);
  FqRep ii = rep_of("sharp:II", 3, {{"e1", 0}}, ctx3);
  FqRep vii = rep_of("sharp:VII", 3, {{"e1", 0}}, ctx3);
  EquivalenceResult r = check_equivalence(ii, vii);
  CHECK(!r.equivalent);
}

TEST_CASE("d is additive on direct sums") {
  auto ctx = analysis_field(3, 1);
  FqRep a = rep_of("small:2.1", 3, {{"e", 0}}, ctx);
  FqRep b = rep_of("small:1", 3, {}, ctx);
  auto da = fixed_dims(a), db = fixed_dims(b);
  auto dsum = fixed_dims(rep_direct_sum(a, b));
  CHECK(dsum.first == da.first + db.first);
  CHECK(dsum.second == da.second + db.second);
}

TEST_CASE("frobenius twist shifts the classified parameters") {
  auto ctx = analysis_field(3, 1);
  FqRep base = rep_of("sharp:XV", 3, {{"e2", 0}, {"e3", 0}}, ctx);
  FormSpec got = classify(rep_frobenius(base, 1), 1, Scope::Sharp4);
  CHECK(got.label == "XV");
  CHECK(got.params.at("e2") == 1);
  CHECK(got.params.at("e3") == 1);
}
