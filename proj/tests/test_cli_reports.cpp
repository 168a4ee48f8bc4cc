#include <doctest.h>

#include "sl2hom/report.hpp"

using namespace sl2hom;

TEST_CASE("parameter string parsing") {
  Params p = parse_params("e1=0,e2=1");
  CHECK(p.at("e1") == 0);
  CHECK(p.at("e2") == 1);
  CHECK(parse_params("").empty());
  CHECK_THROWS_AS(parse_params("e1"), ToolError);
}

TEST_CASE("json shapes") {
  auto F = FieldCtx::make(2, 2);
  json jx = to_json(F->generator());
  CHECK(jx.is_array());
  CHECK(jx.size() == 2);

  FormSpec spec = FormSpec::parse("sharp:XV", 3, {{"e2", 1}, {"e3", 0}});
  json js = to_json(spec);
  CHECK(js["form"] == "sharp:XV");
  CHECK(js["p"] == 3);
  CHECK(js["params"]["e2"] == 1);

  CheckReport r;
  r.passed = true;
  r.backend = "symbolic";
  json jr = to_json(r);
  CHECK(jr["passed"] == true);
  CHECK(jr["backend"] == "symbolic");

  Signature sig;
  sig.weights = {3, 1, -1, -3};
  sig.dSigma = {0, 0};
  sig.dUnipotent = {1, 1, 2, 2};
  json jsig = to_json(sig);
  CHECK(jsig["weights"].size() == 4);
  CHECK(jsig["dUnipotent"].size() == 2);
  CHECK(jsig["dUnipotentRow"].size() == 2);
}

TEST_CASE("polynomial matrices serialize as strings") {
  GenDatum d = build_borel_pair(FormSpec::parse("borel:I", 5, {{"e1", 0}}));
  json j = to_json(d.phiPlus);
  CHECK(j[0][1] == "t");
  CHECK(j[0][2] == "3*t^2");
  CHECK(j[3][3] == "1");
  CHECK(j[1][0] == "0");
}
