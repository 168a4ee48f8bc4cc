#include <doctest.h>

#include "sl2hom/extend.hpp"

using namespace sl2hom;

TEST_CASE("form (I) extends uniquely to the printed phi minus") {
  FormSpec spec = FormSpec::parse("borel:I", 5, {{"e1", 0}});
  GenDatum d = build_borel_pair(spec);
  PhiMinusSolution sol = solve_phi_minus(d, 3);
  REQUIRE(sol.status == PhiMinusSolution::Status::Unique);
  CHECK(*sol.phiMinus == printed_phi_minus(spec));
  CHECK(sol.verification.passed);
}

TEST_CASE("form (XII) is contradictory") {
  GenDatum d = build_borel_pair(FormSpec::parse("borel:XII", 2, {{"e1", 0}, {"d2", 0}}));
  PhiMinusSolution sol = solve_phi_minus(d);
  CHECK(sol.status == PhiMinusSolution::Status::Inconsistent);
  CHECK(!sol.certificate.empty());
  CHECK(sol.evidence.find("certified up to") != std::string::npos);
}

TEST_CASE("form (XXIV) extends exactly when d2 = 0") {
  GenDatum bad = build_borel_pair(FormSpec::parse("borel:XXIV", 2, {{"e2", 0}, {"d2", 1}}));
  CHECK(solve_phi_minus(bad).status == PhiMinusSolution::Status::Inconsistent);

  FormSpec goodSpec = FormSpec::parse("borel:XXIV", 2, {{"e2", 0}, {"d2", 0}});
  GenDatum good = build_borel_pair(goodSpec);
  PhiMinusSolution sol = solve_phi_minus(good);
  REQUIRE(sol.status == PhiMinusSolution::Status::Unique);
  // phi^- = I + s E_{4,1}
  Mat<MPoly> want = Mat<MPoly>::identity(4, MPoly(2, vars_s()), MPoly::constant(2, vars_s(), 1));
  want.at(3, 0) = MPoly::variable(2, vars_s(), "s");
  CHECK(*sol.phiMinus == want);
}

TEST_CASE("tau-partner forms agree on extendability") {
  // (X) and (XVIII) are tau partners; both contradictory
  GenDatum x = build_borel_pair(FormSpec::parse("borel:X", 3, {{"e1", 0}, {"e2", 1}}));
  GenDatum xviii = build_borel_pair(FormSpec::parse("borel:XVIII", 3, {{"e1", 0}, {"e2", 1}}));
  CHECK(solve_phi_minus(x).status == PhiMinusSolution::Status::Inconsistent);
  CHECK(solve_phi_minus(xviii).status == PhiMinusSolution::Status::Inconsistent);
  // (II) and (VII) are tau partners; both extendable at p = 3
  GenDatum ii = build_borel_pair(FormSpec::parse("borel:II", 3, {{"e1", 0}}));
  GenDatum vii = build_borel_pair(FormSpec::parse("borel:VII", 3, {{"e1", 0}}));
  CHECK(solve_phi_minus(ii).status == PhiMinusSolution::Status::Unique);
  CHECK(solve_phi_minus(vii).status == PhiMinusSolution::Status::Unique);
}

TEST_CASE("assembled sigma matches the printed closed form") {
  // form (IX) at p = 3: the (2,2) entry normalizes to 2bc + 1 territory
  FormSpec bspec = FormSpec::parse("borel:IX", 3, {{"e1", 0}});
  GenDatum d = build_borel_pair(bspec);
  PhiMinusSolution sol = solve_phi_minus(d);
  REQUIRE(sol.status == PhiMinusSolution::Status::Unique);
  d.phiMinus = sol.phiMinus;
  ClosedFormRep got = assemble_sigma(d);
  ClosedFormRep want = build_sigma(FormSpec::parse("star:IX", 3, {{"e1", 0}}));
  CHECK(got.entries == want.entries);
  // normal form of the (2,2) entry carries the 2bc + 1 pattern
  auto V = vars_abcd();
  MPoly e22 = MPoly::parse(3, V, "2*b*c + 1");
  CHECK(got.entries.at(1, 1) == e22);
  // identity evaluates to the identity
  auto F3 = FieldCtx::prime(3);
  Sl2Elem id{F3->one(), F3->zero(), F3->zero(), F3->one()};
  CHECK(evaluate(got, id) == fq_identity(F3.get(), 4));

  // (XXVI) assembles to the constant I_4
  FormSpec cspec = FormSpec::parse("borel:XXVI", 2, {{"d1", 0}, {"d2", 0}});
  GenDatum dc = build_borel_pair(cspec);
  PhiMinusSolution solc = solve_phi_minus(dc);
  REQUIRE(solc.status == PhiMinusSolution::Status::Unique);
  dc.phiMinus = solc.phiMinus;
  ClosedFormRep gotc = assemble_sigma(dc);
  CHECK(gotc.entries == build_sigma(FormSpec::parse("star:XXVI", 2, {})).entries);
}

TEST_CASE("tau-partner pairs share their extension verdict") {
  struct Pair {
    const char* a;
    const char* b;
    uint32_t p;
    Params pa, pb;
  };
  std::vector<Pair> pairs = {
      {"borel:XI", "borel:XIX", 2, {{"e1", 0}, {"e3", 1}}, {{"e1", 0}, {"e3", 1}}},
      {"borel:XII", "borel:XX", 3, {{"e1", 0}, {"d2", 0}}, {{"e1", 0}, {"d2", 0}}},
      {"borel:XIV", "borel:XVI", 2, {{"e1", 1}, {"e3", 0}}, {{"e3", 0}, {"e4", 1}}},
      {"borel:XXIII", "borel:XXV", 5, {{"e1", 0}, {"d1", 1}}, {{"e3", 0}, {"d1", 1}}},
  };
  for (const auto& pr : pairs) {
    auto sa = solve_phi_minus(build_borel_pair(FormSpec::parse(pr.a, pr.p, pr.pa))).status;
    auto sb = solve_phi_minus(build_borel_pair(FormSpec::parse(pr.b, pr.p, pr.pb))).status;
    CHECK(sa == sb);
  }
}
