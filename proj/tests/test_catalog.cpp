#include <doctest.h>

#include <fstream>

#include "sl2hom/catalog.hpp"
#include "sl2hom/verify.hpp"

using namespace sl2hom;

namespace {
MPoly tmono(uint32_t p, long long deg, long long c = 1) {
  return MPoly::monomial(p, vars_t(), "t", (uint32_t)deg, c);
}
}  // namespace

TEST_CASE("borel form (I) over F_5") {
  FormSpec spec = FormSpec::parse("borel:I", 5, {{"e1", 0}});
  GenDatum d = build_borel_pair(spec);
  CHECK(d.weights == std::array<long long, 4>{3, 1, -1, -3});
  CHECK(d.phiPlus.at(0, 1) == tmono(5, 1));
  CHECK(d.phiPlus.at(0, 2) == tmono(5, 2, 3));  // 1/2 = 3 mod 5
  CHECK(d.phiPlus.at(0, 3) == tmono(5, 3, 1));  // 1/6 = 1 mod 5
  CHECK(d.phiPlus.at(1, 3) == tmono(5, 2, 3));
  CHECK(d.phiPlus.at(2, 3) == tmono(5, 1));
  CHECK(borel_partition(spec) == std::vector<int>{4});
}

TEST_CASE("borel form (XXVI) is the identity") {
  FormSpec spec = FormSpec::parse("borel:XXVI", 3, {{"d1", 2}, {"d2", 1}});
  GenDatum d = build_borel_pair(spec);
  CHECK(d.weights == std::array<long long, 4>{2, 1, -1, -2});
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      CHECK(d.phiPlus.at(i, j) == (i == j ? MPoly::constant(3, vars_t(), 1)
                                          : MPoly(3, vars_t())));
}

TEST_CASE("characteristic and parameter validation") {
  CHECK_THROWS_AS(FormSpec::parse("borel:III", 2, {{"e1", 0}}), ToolError);
  CHECK_THROWS_AS(FormSpec::parse("borel:I", 3, {{"e1", 0}}), ToolError);
  CHECK_THROWS_AS(FormSpec::parse("borel:IV", 5, {{"e1", 1}, {"e2", 1}}), ToolError);
  CHECK_THROWS_AS(FormSpec::parse("borel:V", 2, {{"e1", 1}, {"f", 1}}), ToolError);
  CHECK_THROWS_AS(FormSpec::parse("borel:XXII", 3, {{"e1", 0}, {"d1", 4}}), ToolError);
  CHECK_THROWS_AS(FormSpec::parse("borel:XXIV", 2, {{"e2", 0}, {"d2", 2}}), ToolError);
  CHECK_THROWS_AS(FormSpec::parse("borel:I", 5, {{"e1", 4}}), ToolError);   // ceiling
  CHECK_THROWS_AS(FormSpec::parse("borel:VI", 5, {{"e1", 0}, {"d2", 65}}), ToolError);
  CHECK_NOTHROW(FormSpec::parse("borel:XII", 2, {{"e1", 0}, {"d2", 0}}));
}

TEST_CASE("partition classes match the catalog stratification") {
  CHECK(borel_partition(FormSpec::parse("borel:IV", 2, {{"e1", 0}, {"e2", 1}})) ==
        std::vector<int>{2, 2});
  CHECK(borel_partition(FormSpec::parse("borel:IX", 3, {{"e1", 0}})) ==
        std::vector<int>{2, 1, 1});
  CHECK(borel_partition(FormSpec::parse("borel:XV", 2, {{"e2", 1}, {"e3", 0}})) ==
        std::vector<int>{1, 2, 1});
  CHECK(borel_partition(FormSpec::parse("borel:XVIII", 3, {{"e1", 0}, {"e2", 1}})) ==
        std::vector<int>{1, 1, 2});
  CHECK(borel_partition(FormSpec::parse("borel:XXVI", 2, {{"d1", 0}, {"d2", 0}})) ==
        std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("monomial degrees follow the weight gaps") {
  for (uint32_t p : {2u, 3u, 5u}) {
    for (const auto& label : borel_labels()) {
      for (const auto& params : enumerate_params(label, Family::Borel, p, 1)) {
        FormSpec spec{Family::Borel, label, params, p};
        try {
          validate_form(spec);
        } catch (const ToolError&) {
          continue;
        }
        GenDatum d = build_borel_pair(spec);
        for (size_t i = 0; i < 4; ++i)
          for (size_t j = 0; j < 4; ++j) {
            if (i == j) continue;
            const MPoly& a = d.phiPlus.at(i, j);
            if (a.is_zero()) continue;
            CHECK(a.terms().size() == 1);
            CHECK((long long)a.total_degree() * 2 == d.weights[i] - d.weights[j]);
          }
      }
    }
  }
}

TEST_CASE("closed forms") {
  // star (XXVI) is constant I_4
  ClosedFormRep c26 = build_sigma(FormSpec::parse("star:XXVI", 5, {}));
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) {
      if (i == j) CHECK(c26.entries.at(i, j) == MPoly::constant(5, vars_abcd(), 1));
      else CHECK(c26.entries.at(i, j).is_zero());
    }
  // sharp (XXIV) at p = 3, e2 = 0: natural 2x2 block plus two fixed lines
  ClosedFormRep s24 = build_sigma(FormSpec::parse("sharp:XXIV", 3, {{"e2", 0}}));
  CHECK(s24.entries.at(0, 0) == MPoly::variable(3, vars_abcd(), "a"));
  CHECK(s24.entries.at(0, 1) == MPoly::variable(3, vars_abcd(), "b"));
  CHECK(s24.entries.at(1, 0) == MPoly::variable(3, vars_abcd(), "c"));
  CHECK(s24.entries.at(1, 1) == MPoly::variable(3, vars_abcd(), "d"));
  CHECK(s24.entries.at(2, 2) == MPoly::constant(3, vars_abcd(), 1));
  CHECK(s24.entries.at(3, 3) == MPoly::constant(3, vars_abcd(), 1));
  // a homomorphism sends the identity to the identity
  auto F2 = FieldCtx::prime(2);
  ClosedFormRep s4 = build_sigma(FormSpec::parse("sharp:IV", 2, {{"e1", 0}, {"e2", 1}}));
  Sl2Elem id{F2->one(), F2->zero(), F2->zero(), F2->one()};
  CHECK(evaluate(s4, id) == fq_identity(F2.get(), 4));
  // every closed-form entry is already sl2-normal
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      for (const auto& [e, coef] : s4.entries.at(i, j).terms()) CHECK((e[0] == 0 || e[3] == 0));
}

TEST_CASE("conjugator table") {
  auto F5 = FieldCtx::prime(5);
  CHECK(conjugator_for("6.1", F5.get()) == fq_diag_ints(F5.get(), {1, 1, 2, 6}));
  auto F3 = FieldCtx::prime(3);
  CHECK(conjugator_for("5.4", F3.get()) ==
        fq_swap(F3.get(), 4, 3, 4) * fq_swap(F3.get(), 4, 2, 3));
  auto F2 = FieldCtx::prime(2);
  CHECK(conjugator_for("5.21", F2.get()) == fq_swap(F2.get(), 4, 3, 4));
  CHECK_THROWS_AS(conjugator_for("9.9", F2.get()), ToolError);
}

TEST_CASE("printed phi minus for form (I)") {
  FormSpec spec = FormSpec::parse("borel:I", 5, {{"e1", 0}});
  Mat<MPoly> b = printed_phi_minus(spec);
  auto smono = [&](long long deg, long long c) {
    return MPoly::monomial(5, vars_s(), "s", (uint32_t)deg, c);
  };
  CHECK(b.at(1, 0) == smono(1, 3));
  CHECK(b.at(2, 0) == smono(2, 6));  // = s^2 mod 5
  CHECK(b.at(2, 1) == smono(1, 4));
  CHECK(b.at(3, 0) == smono(3, 6));
  CHECK(b.at(3, 1) == smono(2, 6));
  CHECK(b.at(3, 2) == smono(1, 3));
}

TEST_CASE("form id round trip") {
  FormSpec s = FormSpec::parse("small:3.2a", 3, {{"e", 1}});
  CHECK(s.str() == "small:3.2a");
  CHECK(s.family == Family::Small);
  CHECK_THROWS_AS(FormSpec::parse("weird:I", 3, {}), ToolError);
  CHECK_THROWS_AS(FormSpec::parse("small:3.2a", 2, {{"e", 0}}), ToolError);
  CHECK_THROWS_AS(FormSpec::parse("sharp:XXI", 2, {{"e1", 0}}), ToolError);
  CHECK_NOTHROW(FormSpec::parse("star:XXI", 2, {{"e1", 0}}));
}

TEST_CASE("per-characteristic sharp family counts") {
  CHECK(sharp_labels_for(2).size() == 7);
  CHECK(sharp_labels_for(3).size() == 7);
  CHECK(sharp_labels_for(5).size() == 6);
}

TEST_CASE("golden closed form for star (I) at p = 5") {
  std::ifstream f(std::string(GOLDEN_DIR) + "/star_I_p5_e0.txt");
  REQUIRE(f.good());
  ClosedFormRep rep = build_sigma(FormSpec::parse("star:I", 5, {{"e1", 0}}));
  std::string line;
  for (size_t i = 0; i < 4; ++i) {
    REQUIRE(std::getline(f, line));
    size_t pos = 0;
    for (size_t j = 0; j < 4; ++j) {
      size_t bar = line.find(" | ", pos);
      std::string cell = bar == std::string::npos ? line.substr(pos) : line.substr(pos, bar - pos);
      CHECK(MPoly::parse(5, vars_abcd(), cell) == rep.entries.at(i, j));
      pos = bar == std::string::npos ? line.size() : bar + 3;
    }
  }
}

TEST_CASE("small families are multiplicative over two fields") {
  for (uint32_t p : {2u, 3u, 5u}) {
    for (const auto& label : small_labels(p)) {
      for (const auto& params : enumerate_params(label, Family::Small, p, 1)) {
        FormSpec spec{Family::Small, label, params, p};
        ClosedFormRep rep = build_sigma(spec);
        CheckReport r = check_sl2_homomorphism(rep, Mode::Exhaustive, FieldCtx::prime(p));
        CHECK_MESSAGE(r.passed, spec.str());
      }
    }
  }
}
