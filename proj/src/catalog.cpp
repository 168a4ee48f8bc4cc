#include "sl2hom/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace sl2hom {

namespace {

const std::vector<std::string>& roman() {
  static const std::vector<std::string> r = {
      "I",    "II",   "III", "IV",  "V",   "VI",    "VII",   "VIII", "IX",
      "X",    "XI",   "XII", "XIII", "XIV", "XV",   "XVI",   "XVII", "XVIII",
      "XIX",  "XX",   "XXI", "XXII", "XXIII", "XXIV", "XXV", "XXVI"};
  return r;
}

int roman_index(const std::string& label) {
  const auto& r = roman();
  auto it = std::find(r.begin(), r.end(), label);
  if (it == r.end()) return -1;
  return (int)(it - r.begin()) + 1;
}

long long inv_mod(long long a, uint32_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) fail(Err::BadCharacteristic, "division by characteristic");
  long long r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

long long get_param(const Params& ps, const std::string& name) {
  auto it = ps.find(name);
  if (it == ps.end()) fail(Err::BadParams, "missing parameter " + name);
  return it->second;
}

void check_e(const Params& ps, const std::string& name) {
  long long v = get_param(ps, name);
  if (v < 0 || v > 3) fail(Err::BadParams, name + " must be in 0..3");
}

void check_d(const Params& ps, const std::string& name) {
  long long v = get_param(ps, name);
  if (v < 0 || v > 64) fail(Err::BadParams, name + " must be in 0..64");
}

// monomial/constant builders over a fixed variable list
struct Ring {
  uint32_t p;
  VarListPtr V;
  MPoly mono(const char* v, long long deg, long long c = 1) const {
    if (deg < 0) fail(Err::BadParams, "negative exponent");
    return MPoly::monomial(p, V, v, (uint32_t)deg, c);
  }
  MPoly k(long long c) const { return MPoly::constant(p, V, c); }
  MPoly zero() const { return MPoly(p, V); }
  MPoly one() const { return MPoly::constant(p, V, 1); }
};

Mat<MPoly> unitriangular4(const Ring& r) {
  return Mat<MPoly>::identity(4, r.zero(), r.one());
}

}  // namespace

VarListPtr vars_t() {
  static VarListPtr v = make_vars({"t"});
  return v;
}
VarListPtr vars_s() {
  static VarListPtr v = make_vars({"s"});
  return v;
}
VarListPtr vars_abcd() {
  static VarListPtr v = make_vars({"a", "b", "c", "d"});
  return v;
}

long long ipow(long long b, uint32_t e) {
  long long r = 1;
  while (e--) r *= b;
  return r;
}

std::string family_prefix(Family f) {
  switch (f) {
    case Family::Borel: return "borel";
    case Family::Star: return "star";
    case Family::Sharp: return "sharp";
    case Family::Plus: return "plus";
    case Family::Small: return "small";
  }
  return "?";
}

std::string FormSpec::str() const { return family_prefix(family) + ":" + label; }

FormSpec FormSpec::parse(const std::string& form, uint32_t p, const Params& params) {
  auto colon = form.find(':');
  if (colon == std::string::npos) fail(Err::BadParams, "form id must look like family:label");
  std::string fam = form.substr(0, colon), label = form.substr(colon + 1);
  FormSpec spec;
  if (fam == "borel") spec.family = Family::Borel;
  else if (fam == "star") spec.family = Family::Star;
  else if (fam == "sharp") spec.family = Family::Sharp;
  else if (fam == "plus") spec.family = Family::Plus;
  else if (fam == "small") spec.family = Family::Small;
  else fail(Err::BadParams, "unknown family " + fam);
  spec.label = label;
  spec.params = params;
  spec.p = p;
  validate_form(spec);
  return spec;
}

std::vector<std::string> borel_labels() { return roman(); }

std::vector<std::string> star_labels() {
  return {"I", "II", "IV", "V", "VII", "IX", "XI", "XV", "XIX", "XXI", "XXII", "XXIV", "XXVI"};
}

std::vector<std::string> sharp_labels() {
  return {"I", "II", "IV", "V", "VII", "IX", "XI", "XV", "XIX", "XXIV", "XXVI"};
}

std::vector<std::string> sharp_labels_for(uint32_t p) {
  std::vector<std::string> out;
  for (const auto& l : sharp_labels()) {
    if (l == "I" && p < 5) continue;
    if ((l == "II" || l == "VII") && p != 3) continue;
    if ((l == "V" || l == "XI" || l == "XIX") && p != 2) continue;
    if (l == "IX" && p < 3) continue;
    out.push_back(l);
  }
  return out;
}

std::vector<std::string> small_labels(uint32_t p) {
  if (p == 2) return {"1", "2.1", "2.2", "3.1a", "3.1b", "3.1c", "3.1d"};
  return {"1", "2.1", "2.2", "3.2a", "3.2b", "3.2c"};
}

bool borel_extendable(const std::string& label) {
  for (const auto& l : star_labels())
    if (l == label) return true;
  return false;
}

namespace {

void validate_borel(const FormSpec& s) {
  uint32_t p = s.p;
  const std::string& L = s.label;
  const Params& ps = s.params;
  auto need_p_ge = [&](uint32_t bound) {
    if (p < bound)
      fail(Err::BadCharacteristic, "form (" + L + ") needs p >= " + std::to_string(bound));
  };
  auto need_p_eq = [&](uint32_t v) {
    if (p != v) fail(Err::BadCharacteristic, "form (" + L + ") needs p = " + std::to_string(v));
  };
  int idx = roman_index(L);
  if (idx < 0) fail(Err::BadParams, "unknown Borel form " + L);
  switch (idx) {
    case 1: need_p_ge(5); check_e(ps, "e1"); break;
    case 2: need_p_eq(3); check_e(ps, "e1"); break;
    case 3: need_p_ge(3); check_e(ps, "e1"); break;
    case 4: case 10: case 18: {
      check_e(ps, "e1");
      check_e(ps, "e2");
      if (!(get_param(ps, "e2") > get_param(ps, "e1"))) fail(Err::BadParams, "need e2 > e1");
      break;
    }
    case 5: {
      check_e(ps, "e1");
      check_e(ps, "f");
      if (!(get_param(ps, "f") >= get_param(ps, "e1") + 1)) fail(Err::BadParams, "need f >= e1+1");
      break;
    }
    case 6: case 12: case 20: check_e(ps, "e1"); check_d(ps, "d2"); break;
    case 7: need_p_eq(3); check_e(ps, "e1"); break;
    case 8: need_p_ge(3); check_e(ps, "e1"); break;
    case 9: need_p_ge(3); check_e(ps, "e1"); break;
    case 11: case 19: {
      check_e(ps, "e1");
      check_e(ps, "e3");
      if (!(get_param(ps, "e3") >= get_param(ps, "e1") + 1))
        fail(Err::BadParams, "need e3 >= e1+1");
      break;
    }
    case 13: case 14: {
      check_e(ps, "e1");
      check_e(ps, "e3");
      if (!(get_param(ps, "e1") > get_param(ps, "e3"))) fail(Err::BadParams, "need e1 > e3");
      break;
    }
    case 15: {
      check_e(ps, "e2");
      check_e(ps, "e3");
      if (!(get_param(ps, "e2") >= get_param(ps, "e3"))) fail(Err::BadParams, "need e2 >= e3");
      break;
    }
    case 16: {
      check_e(ps, "e3");
      check_e(ps, "e4");
      if (!(get_param(ps, "e4") > get_param(ps, "e3"))) fail(Err::BadParams, "need e4 > e3");
      break;
    }
    case 17: {
      check_e(ps, "e3");
      check_d(ps, "d1");
      if (!(get_param(ps, "d1") >= ipow(p, (uint32_t)get_param(ps, "e3"))))
        fail(Err::BadParams, "need d1 >= p^e3");
      break;
    }
    case 21: need_p_eq(2); check_e(ps, "e1"); break;
    case 22: case 23: {
      check_e(ps, "e1");
      check_d(ps, "d1");
      long long q = ipow(p, (uint32_t)get_param(ps, "e1"));
      long long d1 = get_param(ps, "d1");
      if (!(2 * q >= d1 && d1 >= q)) fail(Err::BadParams, "need 2p^e1 >= d1 >= p^e1");
      break;
    }
    case 24: {
      check_e(ps, "e2");
      check_d(ps, "d2");
      long long q = ipow(p, (uint32_t)get_param(ps, "e2"));
      if (!(q >= get_param(ps, "d2"))) fail(Err::BadParams, "need p^e2 >= d2 >= 0");
      break;
    }
    case 25: {
      check_e(ps, "e3");
      check_d(ps, "d1");
      long long q = ipow(p, (uint32_t)get_param(ps, "e3"));
      long long d1 = get_param(ps, "d1");
      if (!(2 * q >= d1 && d1 >= q)) fail(Err::BadParams, "need 2p^e3 >= d1 >= p^e3");
      break;
    }
    case 26: {
      check_d(ps, "d1");
      check_d(ps, "d2");
      if (!(get_param(ps, "d1") >= get_param(ps, "d2"))) fail(Err::BadParams, "need d1 >= d2");
      break;
    }
    default: break;
  }
}

void validate_star_or_sharp(const FormSpec& s, bool sharp) {
  uint32_t p = s.p;
  const std::string& L = s.label;
  const Params& ps = s.params;
  const auto& allowed = sharp ? sharp_labels() : star_labels();
  if (std::find(allowed.begin(), allowed.end(), L) == allowed.end())
    fail(Err::BadParams, std::string(sharp ? "sharp" : "star") + " form " + L + " not in catalog");
  auto need_p_eq = [&](uint32_t v) {
    if (p != v) fail(Err::BadCharacteristic, "form (" + L + ") needs p = " + std::to_string(v));
  };
  if (L == "I") {
    if (p < 5) fail(Err::BadCharacteristic, "form (I) needs p >= 5");
    check_e(ps, "e1");
  } else if (L == "II" || L == "VII") {
    need_p_eq(3);
    check_e(ps, "e1");
  } else if (L == "IV") {
    check_e(ps, "e1");
    check_e(ps, "e2");
    if (!(get_param(ps, "e2") > get_param(ps, "e1"))) fail(Err::BadParams, "need e2 > e1");
  } else if (L == "V" || L == "XI" || L == "XIX" || L == "XXI") {
    need_p_eq(2);
    check_e(ps, "e1");
  } else if (L == "IX") {
    if (p < 3) fail(Err::BadCharacteristic, "form (IX) needs p >= 3");
    check_e(ps, "e1");
  } else if (L == "XV") {
    check_e(ps, "e2");
    check_e(ps, "e3");
    if (!(get_param(ps, "e2") >= get_param(ps, "e3"))) fail(Err::BadParams, "need e2 >= e3");
  } else if (L == "XXII") {
    check_e(ps, "e1");
    if (ps.count("d1") && ps.at("d1") != ipow(p, (uint32_t)ps.at("e1")))
      fail(Err::BadParams, "(XXII) extension forces d1 = d2 = p^e1");
  } else if (L == "XXIV") {
    check_e(ps, "e2");
    if (ps.count("d2") && ps.at("d2") != 0) fail(Err::BadParams, "(XXIV) extension forces d2 = 0");
  } else if (L == "XXVI") {
    // no parameters
  }
}

void validate_plus(const FormSpec& s) {
  FormSpec t = s;
  t.family = Family::Sharp;
  // plus forms are the e = 0 shapes; parameters are not taken
  if (t.label == "IV") {
    t.params["e1"] = 0;
    t.params["e2"] = 1;
  } else if (t.label == "XV") {
    t.params["e2"] = 0;
    t.params["e3"] = 0;
  } else if (t.label != "XXVI") {
    t.params["e1"] = 0;
    t.params["e2"] = 0;
  }
  validate_star_or_sharp(t, true);
}

void validate_small(const FormSpec& s) {
  uint32_t p = s.p;
  const std::string& L = s.label;
  auto known = small_labels(2);
  auto known3 = small_labels(3);
  bool ok = std::find(known.begin(), known.end(), L) != known.end() ||
            std::find(known3.begin(), known3.end(), L) != known3.end();
  if (!ok) fail(Err::BadParams, "unknown small family " + L);
  if (L.rfind("3.1", 0) == 0 && p != 2)
    fail(Err::BadCharacteristic, "family (" + L + ") needs p = 2");
  if (L.rfind("3.2", 0) == 0 && p < 3)
    fail(Err::BadCharacteristic, "family (" + L + ") needs p >= 3");
  if (L == "2.1" || L == "3.1a" || L == "3.1b" || L == "3.1c" || L == "3.2a" || L == "3.2b")
    check_e(s.params, "e");
}

}  // namespace

void validate_form(const FormSpec& s) {
  if (!is_prime_u32(s.p) || s.p > 31)
    fail(Err::BadCharacteristic, "characteristic must be a prime <= 31");
  switch (s.family) {
    case Family::Borel: validate_borel(s); break;
    case Family::Star: validate_star_or_sharp(s, false); break;
    case Family::Sharp: validate_star_or_sharp(s, true); break;
    case Family::Plus: validate_plus(s); break;
    case Family::Small: validate_small(s); break;
  }
}

std::pair<long long, long long> borel_weights(const FormSpec& s) {
  uint32_t p = s.p;
  const Params& ps = s.params;
  auto q = [&](const char* name) { return ipow(p, (uint32_t)get_param(ps, name)); };
  switch (roman_index(s.label)) {
    case 1: return {3 * q("e1"), q("e1")};
    case 2: return {p * q("e1"), q("e1")};
    case 3: return {3 * q("e1"), q("e1")};
    case 4: case 10: case 18: return {q("e1") + q("e2"), q("e2") - q("e1")};
    case 5: return {q("f"), q("f") - 2 * q("e1")};
    case 6: return {get_param(ps, "d2") + 2 * q("e1"), get_param(ps, "d2")};
    case 7: return {p * q("e1"), q("e1")};
    case 8: return {3 * q("e1"), q("e1")};
    case 9: return {2 * q("e1"), 0};
    case 11: case 19: return {q("e3"), q("e3") - 2 * q("e1")};
    case 12: case 20: return {2 * q("e1") + get_param(ps, "d2"), get_param(ps, "d2")};
    case 13: case 14: return {2 * q("e1") - q("e3"), q("e3")};
    case 15: return {q("e2"), q("e3")};
    case 16: return {2 * q("e4") - q("e3"), q("e3")};
    case 17: return {get_param(ps, "d1"), q("e3")};
    case 21: return {p * q("e1"), 0};
    case 22: case 23: return {get_param(ps, "d1"), 2 * q("e1") - get_param(ps, "d1")};
    case 24: return {q("e2"), get_param(ps, "d2")};
    case 25: return {get_param(ps, "d1"), 2 * q("e3") - get_param(ps, "d1")};
    case 26: return {get_param(ps, "d1"), get_param(ps, "d2")};
    default: fail(Err::BadParams, "unknown Borel form " + s.label);
  }
}

std::vector<long long> torus_weights(const FormSpec& s) {
  uint32_t p = s.p;
  const Params& ps = s.params;
  auto q = [&](const char* name) { return ipow(p, (uint32_t)get_param(ps, name)); };
  const std::string& L = s.label;
  auto anti = [](long long d1, long long d2) {
    return std::vector<long long>{d1, d2, -d2, -d1};
  };
  if (s.family == Family::Small) {
    if (L == "1") return {0};
    if (L == "2.1") return {q("e"), -q("e")};
    if (L == "2.2") return {0, 0};
    if (L == "3.1a" || L == "3.1b") return {p * q("e"), 0, -(long long)p * q("e")};
    if (L == "3.1c" || L == "3.2b") return {q("e"), 0, -q("e")};
    if (L == "3.1d" || L == "3.2c") return {0, 0, 0};
    if (L == "3.2a") return {2 * q("e"), 0, -2 * q("e")};
    fail(Err::BadParams, "unknown small family " + L);
  }
  if (s.family == Family::Plus) {
    FormSpec t = s;
    t.family = Family::Sharp;
    if (L == "IV") { t.params["e1"] = 0; t.params["e2"] = 1; }
    else if (L == "XV") { t.params["e2"] = 0; t.params["e3"] = 0; }
    else if (L != "XXVI") { t.params["e1"] = 0; t.params["e2"] = 0; }
    return torus_weights(t);
  }
  // star and sharp representatives carry the same torus weights
  if (L == "I") return anti(3 * q("e1"), q("e1"));
  if (L == "II" || L == "VII") return anti(p * q("e1"), q("e1"));
  if (L == "IV") return anti(q("e1") + q("e2"), q("e2") - q("e1"));
  if (L == "V") return anti(p * q("e1"), 0);
  if (L == "IX" || L == "XI" || L == "XIX") return anti(2 * q("e1"), 0);
  if (L == "XV") return anti(q("e2"), q("e3"));
  if (L == "XXI") return anti(p * q("e1"), 0);
  if (L == "XXII") return anti(q("e1"), q("e1"));
  if (L == "XXIV") return anti(q("e2"), 0);
  if (L == "XXVI") return anti(0, 0);
  fail(Err::BadParams, "no torus weights for " + s.str());
}

std::vector<int> borel_partition(const FormSpec& s) {
  GenDatum d = build_borel_pair(s);
  std::vector<int> parts;
  int run = 0;
  for (int i = 0; i < 4; ++i) {
    ++run;
    bool zero_super = (i == 3) || d.phiPlus.at(i, i + 1).is_zero();
    if (zero_super) {
      parts.push_back(run);
      run = 0;
    }
  }
  return parts;
}

GenDatum build_borel_pair(const FormSpec& s) {
  if (s.family != Family::Borel) fail(Err::BadParams, "build_borel_pair needs a borel form");
  validate_form(s);
  uint32_t p = s.p;
  const Params& ps = s.params;
  Ring r{p, vars_t()};
  auto q = [&](const char* name) { return ipow(p, (uint32_t)get_param(ps, name)); };
  auto t = [&](long long deg, long long c = 1) { return r.mono("t", deg, c); };
  Mat<MPoly> A = unitriangular4(r);
  switch (roman_index(s.label)) {
    case 1: {  // (I)
      long long Q = q("e1");
      A.at(0, 1) = t(Q);
      A.at(0, 2) = t(2 * Q, inv_mod(2, p));
      A.at(0, 3) = t(3 * Q, inv_mod(6, p));
      A.at(1, 2) = t(Q);
      A.at(1, 3) = t(2 * Q, inv_mod(2, p));
      A.at(2, 3) = t(Q);
      break;
    }
    case 2: {  // (II)
      long long Q = q("e1");
      A.at(0, 1) = t(Q);
      A.at(0, 2) = t(2 * Q, inv_mod(2, p));
      A.at(0, 3) = t(p * Q);
      A.at(1, 2) = t(Q);
      break;
    }
    case 3: {  // (III)
      long long Q = q("e1");
      A.at(0, 1) = t(Q);
      A.at(0, 2) = t(2 * Q, inv_mod(2, p));
      A.at(1, 2) = t(Q);
      break;
    }
    case 4: {  // (IV)
      long long Q1 = q("e1"), Q2 = q("e2");
      A.at(0, 1) = t(Q1);
      A.at(0, 2) = t(Q2);
      A.at(0, 3) = t(Q1 + Q2);
      A.at(1, 3) = t(Q2);
      A.at(2, 3) = t(Q1);
      break;
    }
    case 5: {  // (V)
      long long Q = q("e1"), Qf = q("f");
      A.at(0, 1) = t(Q);
      A.at(0, 3) = t(Qf);
      A.at(2, 3) = t(Q);
      break;
    }
    case 6: {  // (VI)
      long long Q = q("e1");
      A.at(0, 1) = t(Q);
      A.at(2, 3) = t(Q);
      break;
    }
    case 7: {  // (VII)
      long long Q = q("e1");
      A.at(0, 3) = t(p * Q);
      A.at(1, 2) = t(Q);
      A.at(1, 3) = t(2 * Q, inv_mod(2, p));
      A.at(2, 3) = t(Q);
      break;
    }
    case 8: {  // (VIII)
      long long Q = q("e1");
      A.at(1, 2) = t(Q);
      A.at(1, 3) = t(2 * Q, inv_mod(2, p));
      A.at(2, 3) = t(Q);
      break;
    }
    case 9: {  // (IX); the (1,4) degree 2p^{e1} is forced by the weight gap
      long long Q = q("e1");
      A.at(0, 1) = t(Q);
      A.at(0, 3) = t(2 * Q, inv_mod(2, p));
      A.at(1, 3) = t(Q);
      break;
    }
    case 10: {  // (X)
      A.at(0, 1) = t(q("e1"));
      A.at(0, 2) = t(q("e2"));
      break;
    }
    case 11: {  // (XI)
      A.at(0, 1) = t(q("e1"));
      A.at(0, 3) = t(q("e3"));
      break;
    }
    case 12: {  // (XII)
      A.at(0, 1) = t(q("e1"));
      break;
    }
    case 13: {  // (XIII)
      A.at(0, 2) = t(q("e1"));
      A.at(1, 2) = t(q("e3"));
      A.at(1, 3) = t(q("e1"));
      break;
    }
    case 14: {  // (XIV)
      A.at(0, 2) = t(q("e1"));
      A.at(1, 2) = t(q("e3"));
      break;
    }
    case 15: {  // (XV)
      A.at(0, 3) = t(q("e2"));
      A.at(1, 2) = t(q("e3"));
      break;
    }
    case 16: {  // (XVI)
      A.at(1, 2) = t(q("e3"));
      A.at(1, 3) = t(q("e4"));
      break;
    }
    case 17: {  // (XVII)
      A.at(1, 2) = t(q("e3"));
      break;
    }
    case 18: {  // (XVIII)
      A.at(1, 3) = t(q("e2"));
      A.at(2, 3) = t(q("e1"));
      break;
    }
    case 19: {  // (XIX)
      A.at(0, 3) = t(q("e3"));
      A.at(2, 3) = t(q("e1"));
      break;
    }
    case 20: {  // (XX)
      A.at(2, 3) = t(q("e1"));
      break;
    }
    case 21: {  // (XXI)
      long long Q = q("e1");
      A.at(0, 2) = t(Q);
      A.at(0, 3) = t(p * Q);
      A.at(1, 3) = t(Q);
      break;
    }
    case 22: {  // (XXII)
      long long Q = q("e1");
      A.at(0, 2) = t(Q);
      A.at(1, 3) = t(Q);
      break;
    }
    case 23: {  // (XXIII)
      A.at(0, 2) = t(q("e1"));
      break;
    }
    case 24: {  // (XXIV)
      A.at(0, 3) = t(q("e2"));
      break;
    }
    case 25: {  // (XXV)
      A.at(1, 3) = t(q("e3"));
      break;
    }
    case 26: break;  // (XXVI): identity
    default: fail(Err::BadParams, "unknown Borel form " + s.label);
  }
  auto [d1, d2] = borel_weights(s);
  GenDatum out;
  out.p = p;
  out.phiPlus = A;
  out.weights = {d1, d2, -d2, -d1};
  return out;
}

Mat<MPoly> printed_phi_minus(const FormSpec& s) {
  if (s.family != Family::Borel || !borel_extendable(s.label))
    fail(Err::BadParams, "no printed phi^- for " + s.str());
  validate_form(s);
  uint32_t p = s.p;
  const Params& ps = s.params;
  Ring r{p, vars_s()};
  auto q = [&](const char* name) { return ipow(p, (uint32_t)get_param(ps, name)); };
  auto m = [&](long long deg, long long c = 1) { return r.mono("s", deg, c); };
  Mat<MPoly> B = unitriangular4(r);
  const std::string& L = s.label;
  if (L == "I") {
    long long Q = q("e1");
    B.at(1, 0) = m(Q, 3);
    B.at(2, 0) = m(2 * Q, 6);
    B.at(2, 1) = m(Q, 4);
    B.at(3, 0) = m(3 * Q, 6);
    B.at(3, 1) = m(2 * Q, 6);
    B.at(3, 2) = m(Q, 3);
  } else if (L == "II") {
    long long Q = q("e1");
    B.at(2, 1) = m(Q);
    B.at(3, 0) = m(p * Q);
    B.at(3, 1) = m(2 * Q);
    B.at(3, 2) = m(Q, inv_mod(2, p));
  } else if (L == "IV") {
    long long Q1 = q("e1"), Q2 = q("e2");
    B.at(1, 0) = m(Q1);
    B.at(2, 0) = m(Q2);
    B.at(3, 0) = m(Q1 + Q2);
    B.at(3, 1) = m(Q2);
    B.at(3, 2) = m(Q1);
  } else if (L == "V") {
    if (p != 2 || get_param(ps, "f") != get_param(ps, "e1") + 1)
      fail(Err::BadParams, "(V) extension forces p = 2, f = e1+1");
    long long Q = q("e1");
    B.at(2, 0) = m(Q);
    B.at(3, 0) = m(2 * Q);
    B.at(3, 1) = m(Q);
  } else if (L == "VII") {
    long long Q = q("e1");
    B.at(1, 0) = m(Q, inv_mod(2, p));
    B.at(2, 0) = m(2 * Q);
    B.at(2, 1) = m(Q);
    B.at(3, 0) = m(p * Q);
  } else if (L == "IX") {
    long long Q = q("e1");
    B.at(1, 0) = m(Q, 2);
    B.at(3, 0) = m(2 * Q, 2);
    B.at(3, 1) = m(Q, 2);
  } else if (L == "XI") {
    if (p != 2 || get_param(ps, "e3") != get_param(ps, "e1") + 1)
      fail(Err::BadParams, "(XI) extension forces p = 2, e3 = e1+1");
    B.at(3, 0) = m(q("e3"));
    B.at(3, 1) = m(q("e1"));
  } else if (L == "XV") {
    B.at(2, 1) = m(q("e3"));
    B.at(3, 0) = m(q("e2"));
  } else if (L == "XIX") {
    if (p != 2 || get_param(ps, "e3") != get_param(ps, "e1") + 1)
      fail(Err::BadParams, "(XIX) extension forces p = 2, e3 = e1+1");
    B.at(2, 0) = m(q("e1"));
    B.at(3, 0) = m(q("e3"));
  } else if (L == "XXI") {
    long long Q = q("e1");
    B.at(1, 0) = m(Q);
    B.at(3, 0) = m(2 * Q);
    B.at(3, 2) = m(Q);
  } else if (L == "XXII") {
    if (get_param(ps, "d1") != ipow(p, (uint32_t)get_param(ps, "e1")))
      fail(Err::BadParams, "(XXII) extension forces d1 = d2 = p^e1");
    long long Q = q("e1");
    B.at(2, 0) = m(Q);
    B.at(3, 1) = m(Q);
  } else if (L == "XXIV") {
    if (get_param(ps, "d2") != 0) fail(Err::BadParams, "(XXIV) extension forces d2 = 0");
    B.at(3, 0) = m(q("e2"));
  } else if (L == "XXVI") {
    // identity
  }
  return B;
}

namespace {

// Entry grids for the closed forms.  q arguments are actual powers p^e.
Mat<MPoly> star_entries(const std::string& L, uint32_t p, const Params& ps) {
  Ring r{p, vars_abcd()};
  auto qof = [&](const char* name) { return ipow(p, (uint32_t)get_param(ps, name)); };
  auto A = [&](long long e) { return r.mono("a", e); };
  auto B = [&](long long e) { return r.mono("b", e); };
  auto C = [&](long long e) { return r.mono("c", e); };
  auto D = [&](long long e) { return r.mono("d", e); };
  Mat<MPoly> M(4, 4, r.zero());
  long long h = (p > 2) ? inv_mod(2, p) : 0;  // 1/2, valid when p odd
  if (L == "I") {
    long long Q = qof("e1");
    long long s = inv_mod(6, p);
    MPoly ad2bc = A(1) * D(1) + (B(1) * C(1)).scaled(2);
    MPoly adhbc = A(1) * D(1) + (B(1) * C(1)).scaled(h);
    M.at(0, 0) = A(3 * Q);
    M.at(0, 1) = A(2 * Q) * B(Q);
    M.at(0, 2) = (A(Q) * B(2 * Q)).scaled(h);
    M.at(0, 3) = B(3 * Q).scaled(s);
    M.at(1, 0) = (A(2 * Q) * C(Q)).scaled(3);
    M.at(1, 1) = A(Q) * ad2bc.var_power_scale((uint32_t)Q);
    M.at(1, 2) = B(Q) * adhbc.var_power_scale((uint32_t)Q);
    M.at(1, 3) = (B(2 * Q) * D(Q)).scaled(h);
    M.at(2, 0) = (A(Q) * C(2 * Q)).scaled(6);
    M.at(2, 1) = (C(Q) * adhbc.var_power_scale((uint32_t)Q)).scaled(4);
    M.at(2, 2) = D(Q) * ad2bc.var_power_scale((uint32_t)Q);
    M.at(2, 3) = B(Q) * D(2 * Q);
    M.at(3, 0) = C(3 * Q).scaled(6);
    M.at(3, 1) = (C(2 * Q) * D(Q)).scaled(6);
    M.at(3, 2) = (C(Q) * D(2 * Q)).scaled(3);
    M.at(3, 3) = D(3 * Q);
  } else if (L == "II") {
    long long Q = qof("e1");
    M.at(0, 0) = A(p * Q);
    M.at(0, 1) = A(2 * Q) * B(Q);
    M.at(0, 2) = (A(Q) * B(2 * Q)).scaled(h);
    M.at(0, 3) = B(p * Q);
    M.at(1, 1) = A(Q);
    M.at(1, 2) = B(Q);
    M.at(2, 1) = C(Q);
    M.at(2, 2) = D(Q);
    M.at(3, 0) = C(p * Q);
    M.at(3, 1) = C(2 * Q) * D(Q);
    M.at(3, 2) = (C(Q) * D(2 * Q)).scaled(h);
    M.at(3, 3) = D(p * Q);
  } else if (L == "IV") {
    long long Q1 = qof("e1"), Q2 = qof("e2");
    Mat<MPoly> M1(2, 2, r.zero()), M2(2, 2, r.zero());
    M2.at(0, 0) = A(Q2); M2.at(0, 1) = B(Q2); M2.at(1, 0) = C(Q2); M2.at(1, 1) = D(Q2);
    M1.at(0, 0) = A(Q1); M1.at(0, 1) = B(Q1); M1.at(1, 0) = C(Q1); M1.at(1, 1) = D(Q1);
    M = kron_product(M2, M1);
  } else if (L == "V") {
    long long Q = qof("e1");
    M.at(0, 0) = A(2 * Q);
    M.at(0, 1) = A(Q) * B(Q);
    M.at(0, 3) = B(2 * Q);
    M.at(1, 1) = r.one();
    M.at(2, 0) = A(Q) * C(Q);
    M.at(2, 1) = B(Q) * C(Q);
    M.at(2, 2) = r.one();
    M.at(2, 3) = B(Q) * D(Q);
    M.at(3, 0) = C(2 * Q);
    M.at(3, 1) = C(Q) * D(Q);
    M.at(3, 3) = D(2 * Q);
  } else if (L == "VII") {
    long long Q = qof("e1");
    M.at(0, 0) = A(p * Q);
    M.at(0, 3) = B(p * Q);
    M.at(1, 0) = (A(2 * Q) * C(Q)).scaled(h);
    M.at(1, 1) = A(Q);
    M.at(1, 2) = B(Q);
    M.at(1, 3) = (B(2 * Q) * D(Q)).scaled(h);
    M.at(2, 0) = A(Q) * C(2 * Q);
    M.at(2, 1) = C(Q);
    M.at(2, 2) = D(Q);
    M.at(2, 3) = B(Q) * D(2 * Q);
    M.at(3, 0) = C(p * Q);
    M.at(3, 3) = D(p * Q);
  } else if (L == "IX") {
    long long Q = qof("e1");
    M.at(0, 0) = A(2 * Q);
    M.at(0, 1) = A(Q) * B(Q);
    M.at(0, 3) = B(2 * Q).scaled(h);
    M.at(1, 0) = (A(Q) * C(Q)).scaled(2);
    M.at(1, 1) = A(Q) * D(Q) + B(Q) * C(Q);
    M.at(1, 3) = B(Q) * D(Q);
    M.at(2, 2) = r.one();
    M.at(3, 0) = C(2 * Q).scaled(2);
    M.at(3, 1) = (C(Q) * D(Q)).scaled(2);
    M.at(3, 3) = D(2 * Q);
  } else if (L == "XI") {
    long long Q = qof("e1");
    M.at(0, 0) = A(2 * Q);
    M.at(0, 1) = A(Q) * B(Q);
    M.at(0, 3) = B(2 * Q);
    M.at(1, 1) = r.one();
    M.at(2, 2) = r.one();
    M.at(3, 0) = C(2 * Q);
    M.at(3, 1) = C(Q) * D(Q);
    M.at(3, 3) = D(2 * Q);
  } else if (L == "XV") {
    long long Q2 = qof("e2"), Q3 = qof("e3");
    M.at(0, 0) = A(Q2);
    M.at(0, 3) = B(Q2);
    M.at(1, 1) = A(Q3);
    M.at(1, 2) = B(Q3);
    M.at(2, 1) = C(Q3);
    M.at(2, 2) = D(Q3);
    M.at(3, 0) = C(Q2);
    M.at(3, 3) = D(Q2);
  } else if (L == "XIX") {
    long long Q = qof("e1");
    M.at(0, 0) = A(2 * Q);
    M.at(0, 3) = B(2 * Q);
    M.at(1, 1) = r.one();
    M.at(2, 0) = A(Q) * C(Q);
    M.at(2, 2) = r.one();
    M.at(2, 3) = B(Q) * D(Q);
    M.at(3, 0) = C(2 * Q);
    M.at(3, 3) = D(2 * Q);
  } else if (L == "XXI") {
    long long Q = qof("e1");
    M.at(0, 0) = A(2 * Q);
    M.at(0, 2) = A(Q) * B(Q);
    M.at(0, 3) = B(2 * Q);
    M.at(1, 0) = A(Q) * C(Q);
    M.at(1, 1) = r.one();
    M.at(1, 2) = B(Q) * C(Q);
    M.at(1, 3) = B(Q) * D(Q);
    M.at(2, 2) = r.one();
    M.at(3, 0) = C(2 * Q);
    M.at(3, 2) = C(Q) * D(Q);
    M.at(3, 3) = D(2 * Q);
  } else if (L == "XXII") {
    long long Q = qof("e1");
    M.at(0, 0) = A(Q);
    M.at(0, 2) = B(Q);
    M.at(1, 1) = A(Q);
    M.at(1, 3) = B(Q);
    M.at(2, 0) = C(Q);
    M.at(2, 2) = D(Q);
    M.at(3, 1) = C(Q);
    M.at(3, 3) = D(Q);
  } else if (L == "XXIV") {
    long long Q = qof("e2");
    M.at(0, 0) = A(Q);
    M.at(0, 3) = B(Q);
    M.at(1, 1) = r.one();
    M.at(2, 2) = r.one();
    M.at(3, 0) = C(Q);
    M.at(3, 3) = D(Q);
  } else if (L == "XXVI") {
    M = Mat<MPoly>::identity(4, r.zero(), r.one());
  } else {
    fail(Err::BadParams, "no star closed form for " + L);
  }
  return M;
}

Mat<MPoly> sharp_entries(const std::string& L, uint32_t p, const Params& ps) {
  Ring r{p, vars_abcd()};
  auto qof = [&](const char* name) { return ipow(p, (uint32_t)get_param(ps, name)); };
  auto A = [&](long long e) { return r.mono("a", e); };
  auto B = [&](long long e) { return r.mono("b", e); };
  auto C = [&](long long e) { return r.mono("c", e); };
  auto D = [&](long long e) { return r.mono("d", e); };
  Mat<MPoly> M(4, 4, r.zero());
  long long h = (p > 2) ? inv_mod(2, p) : 0;
  if (L == "I") {
    long long Q = qof("e1");
    M.at(0, 0) = A(3 * Q);
    M.at(0, 1) = A(2 * Q) * B(Q);
    M.at(0, 2) = A(Q) * B(2 * Q);
    M.at(0, 3) = B(3 * Q);
    M.at(1, 0) = (A(2 * Q) * C(Q)).scaled(3);
    M.at(1, 1) = A(Q) * (A(Q) * D(Q) + (B(Q) * C(Q)).scaled(2));
    M.at(1, 2) = B(Q) * ((A(Q) * D(Q)).scaled(2) + B(Q) * C(Q));
    M.at(1, 3) = (B(2 * Q) * D(Q)).scaled(3);
    M.at(2, 0) = (A(Q) * C(2 * Q)).scaled(3);
    M.at(2, 1) = C(Q) * ((A(Q) * D(Q)).scaled(2) + B(Q) * C(Q));
    M.at(2, 2) = D(Q) * (A(Q) * D(Q) + (B(Q) * C(Q)).scaled(2));
    M.at(2, 3) = (B(Q) * D(2 * Q)).scaled(3);
    M.at(3, 0) = C(3 * Q);
    M.at(3, 1) = C(2 * Q) * D(Q);
    M.at(3, 2) = C(Q) * D(2 * Q);
    M.at(3, 3) = D(3 * Q);
  } else if (L == "II") {
    long long Q = qof("e1");
    M.at(0, 0) = A(3 * Q);
    M.at(0, 1) = B(3 * Q);
    M.at(0, 2) = A(2 * Q) * B(Q);
    M.at(0, 3) = (A(Q) * B(2 * Q)).scaled(h);
    M.at(1, 0) = C(3 * Q);
    M.at(1, 1) = D(3 * Q);
    M.at(1, 2) = C(2 * Q) * D(Q);
    M.at(1, 3) = (C(Q) * D(2 * Q)).scaled(h);
    M.at(2, 2) = A(Q);
    M.at(2, 3) = B(Q);
    M.at(3, 2) = C(Q);
    M.at(3, 3) = D(Q);
  } else if (L == "IV") {
    M = star_entries("IV", p, ps);
  } else if (L == "V") {
    long long Q = qof("e1");
    M.at(0, 0) = r.one();
    M.at(1, 0) = A(Q) * B(Q);
    M.at(1, 1) = A(2 * Q);
    M.at(1, 2) = B(2 * Q);
    M.at(2, 0) = C(Q) * D(Q);
    M.at(2, 1) = C(2 * Q);
    M.at(2, 2) = D(2 * Q);
    M.at(3, 0) = B(Q) * C(Q);
    M.at(3, 1) = A(Q) * C(Q);
    M.at(3, 2) = B(Q) * D(Q);
    M.at(3, 3) = r.one();
  } else if (L == "VII") {
    long long Q = qof("e1");
    M.at(0, 0) = A(Q);
    M.at(0, 1) = B(Q);
    M.at(0, 2) = (A(2 * Q) * C(Q)).scaled(h);
    M.at(0, 3) = (B(2 * Q) * D(Q)).scaled(h);
    M.at(1, 0) = C(Q);
    M.at(1, 1) = D(Q);
    M.at(1, 2) = A(Q) * C(2 * Q);
    M.at(1, 3) = B(Q) * D(2 * Q);
    M.at(2, 2) = A(3 * Q);
    M.at(2, 3) = B(3 * Q);
    M.at(3, 2) = C(3 * Q);
    M.at(3, 3) = D(3 * Q);
  } else if (L == "IX") {
    long long Q = qof("e1");
    M.at(0, 0) = A(2 * Q);
    M.at(0, 1) = A(Q) * B(Q);
    M.at(0, 2) = B(2 * Q);
    M.at(1, 0) = (A(Q) * C(Q)).scaled(2);
    M.at(1, 1) = A(Q) * D(Q) + B(Q) * C(Q);
    M.at(1, 2) = (B(Q) * D(Q)).scaled(2);
    M.at(2, 0) = C(2 * Q);
    M.at(2, 1) = C(Q) * D(Q);
    M.at(2, 2) = D(2 * Q);
    M.at(3, 3) = r.one();
  } else if (L == "XI") {
    long long Q = qof("e1");
    M.at(0, 0) = A(2 * Q);
    M.at(0, 1) = B(2 * Q);
    M.at(0, 2) = A(Q) * B(Q);
    M.at(1, 0) = C(2 * Q);
    M.at(1, 1) = D(2 * Q);
    M.at(1, 2) = C(Q) * D(Q);
    M.at(2, 2) = r.one();
    M.at(3, 3) = r.one();
  } else if (L == "XV") {
    long long Q2 = qof("e2"), Q3 = qof("e3");
    M.at(0, 0) = A(Q2);
    M.at(0, 1) = B(Q2);
    M.at(1, 0) = C(Q2);
    M.at(1, 1) = D(Q2);
    M.at(2, 2) = A(Q3);
    M.at(2, 3) = B(Q3);
    M.at(3, 2) = C(Q3);
    M.at(3, 3) = D(Q3);
  } else if (L == "XIX") {
    long long Q = qof("e1");
    M.at(0, 0) = A(2 * Q);
    M.at(0, 1) = B(2 * Q);
    M.at(1, 0) = C(2 * Q);
    M.at(1, 1) = D(2 * Q);
    M.at(2, 0) = A(Q) * C(Q);
    M.at(2, 1) = B(Q) * D(Q);
    M.at(2, 2) = r.one();
    M.at(3, 3) = r.one();
  } else if (L == "XXIV") {
    long long Q = qof("e2");
    M.at(0, 0) = A(Q);
    M.at(0, 1) = B(Q);
    M.at(1, 0) = C(Q);
    M.at(1, 1) = D(Q);
    M.at(2, 2) = r.one();
    M.at(3, 3) = r.one();
  } else if (L == "XXVI") {
    M = Mat<MPoly>::identity(4, r.zero(), r.one());
  } else {
    fail(Err::BadParams, "no sharp closed form for " + L);
  }
  return M;
}

Mat<MPoly> small_entries(const std::string& L, uint32_t p, const Params& ps) {
  Ring r{p, vars_abcd()};
  auto A = [&](long long e) { return r.mono("a", e); };
  auto B = [&](long long e) { return r.mono("b", e); };
  auto C = [&](long long e) { return r.mono("c", e); };
  auto D = [&](long long e) { return r.mono("d", e); };
  if (L == "1") return Mat<MPoly>::identity(1, r.zero(), r.one());
  if (L == "2.2") return Mat<MPoly>::identity(2, r.zero(), r.one());
  if (L == "3.1d" || L == "3.2c") return Mat<MPoly>::identity(3, r.zero(), r.one());
  long long Q = ipow(p, (uint32_t)get_param(ps, "e"));
  if (L == "2.1") {
    Mat<MPoly> M(2, 2, r.zero());
    M.at(0, 0) = A(Q);
    M.at(0, 1) = B(Q);
    M.at(1, 0) = C(Q);
    M.at(1, 1) = D(Q);
    return M;
  }
  Mat<MPoly> M(3, 3, r.zero());
  if (L == "3.1a") {
    M.at(0, 0) = A(2 * Q);
    M.at(0, 1) = B(2 * Q);
    M.at(1, 0) = C(2 * Q);
    M.at(1, 1) = D(2 * Q);
    M.at(2, 0) = A(Q) * C(Q);
    M.at(2, 1) = B(Q) * D(Q);
    M.at(2, 2) = r.one();
  } else if (L == "3.1b") {
    M.at(0, 0) = A(2 * Q);
    M.at(0, 1) = B(2 * Q);
    M.at(0, 2) = A(Q) * B(Q);
    M.at(1, 0) = C(2 * Q);
    M.at(1, 1) = D(2 * Q);
    M.at(1, 2) = C(Q) * D(Q);
    M.at(2, 2) = r.one();
  } else if (L == "3.1c" || L == "3.2b") {
    M.at(0, 0) = A(Q);
    M.at(0, 1) = B(Q);
    M.at(1, 0) = C(Q);
    M.at(1, 1) = D(Q);
    M.at(2, 2) = r.one();
  } else if (L == "3.2a") {
    long long h = inv_mod(2, p);
    (void)h;
    M.at(0, 0) = A(2 * Q);
    M.at(0, 1) = A(Q) * B(Q);
    M.at(0, 2) = B(2 * Q);
    M.at(1, 0) = (A(Q) * C(Q)).scaled(2);
    M.at(1, 1) = A(Q) * D(Q) + B(Q) * C(Q);
    M.at(1, 2) = (B(Q) * D(Q)).scaled(2);
    M.at(2, 0) = C(2 * Q);
    M.at(2, 1) = C(Q) * D(Q);
    M.at(2, 2) = D(2 * Q);
  } else {
    fail(Err::BadParams, "unknown small family " + L);
  }
  return M;
}

Mat<MPoly> plus_entries(const std::string& L, uint32_t p) {
  Params ps;
  if (L == "IV") {
    // sigma+ for (IV) is the untwisted tensor square M (x) M
    Ring r{p, vars_abcd()};
    Mat<MPoly> M2(2, 2, r.zero());
    M2.at(0, 0) = r.mono("a", 1);
    M2.at(0, 1) = r.mono("b", 1);
    M2.at(1, 0) = r.mono("c", 1);
    M2.at(1, 1) = r.mono("d", 1);
    return kron_product(M2, M2);
  }
  if (L == "XV") {
    ps["e2"] = 0;
    ps["e3"] = 0;
    return sharp_entries("XV", p, ps);
  }
  if (L == "XXVI") return sharp_entries("XXVI", p, ps);
  ps["e1"] = 0;
  ps["e2"] = 0;
  Ring r{p, vars_abcd()};
  auto A = [&](long long e) { return r.mono("a", e); };
  auto B = [&](long long e) { return r.mono("b", e); };
  auto C = [&](long long e) { return r.mono("c", e); };
  auto D = [&](long long e) { return r.mono("d", e); };
  long long h = (p > 2) ? inv_mod(2, p) : 0;
  Mat<MPoly> M(4, 4, r.zero());
  if (L == "I") {
    long long s = inv_mod(6, p);
    MPoly ad2bc = A(1) * D(1) + (B(1) * C(1)).scaled(2);
    MPoly adhbc = A(1) * D(1) + (B(1) * C(1)).scaled(h);
    M.at(0, 0) = A(3);
    M.at(0, 1) = A(2) * B(1);
    M.at(0, 2) = (A(1) * B(2)).scaled(h);
    M.at(0, 3) = B(3).scaled(s);
    M.at(1, 0) = (A(2) * C(1)).scaled(3);
    M.at(1, 1) = A(1) * ad2bc;
    M.at(1, 2) = B(1) * adhbc;
    M.at(1, 3) = (B(2) * D(1)).scaled(h);
    M.at(2, 0) = (A(1) * C(2)).scaled(6);
    M.at(2, 1) = (C(1) * adhbc).scaled(4);
    M.at(2, 2) = D(1) * ad2bc;
    M.at(2, 3) = B(1) * D(2);
    M.at(3, 0) = C(3).scaled(6);
    M.at(3, 1) = (C(2) * D(1)).scaled(6);
    M.at(3, 2) = (C(1) * D(2)).scaled(3);
    M.at(3, 3) = D(3);
  } else if (L == "II") {
    M.at(0, 0) = A(3);
    M.at(0, 1) = B(3);
    M.at(0, 2) = A(2) * B(1);
    M.at(0, 3) = (A(1) * B(2)).scaled(h);
    M.at(1, 0) = C(3);
    M.at(1, 1) = D(3);
    M.at(1, 2) = C(2) * D(1);
    M.at(1, 3) = (C(1) * D(2)).scaled(h);
    M.at(2, 2) = A(1);
    M.at(2, 3) = B(1);
    M.at(3, 2) = C(1);
    M.at(3, 3) = D(1);
  } else if (L == "V") {
    M.at(0, 0) = r.one();
    M.at(1, 0) = A(1) * B(1);
    M.at(1, 1) = A(2);
    M.at(1, 2) = B(2);
    M.at(2, 0) = C(1) * D(1);
    M.at(2, 1) = C(2);
    M.at(2, 2) = D(2);
    M.at(3, 0) = B(1) * C(1);
    M.at(3, 1) = A(1) * C(1);
    M.at(3, 2) = B(1) * D(1);
    M.at(3, 3) = r.one();
  } else if (L == "VII") {
    M.at(0, 0) = A(1);
    M.at(0, 1) = B(1);
    M.at(0, 2) = (A(2) * C(1)).scaled(h);
    M.at(0, 3) = (B(2) * D(1)).scaled(h);
    M.at(1, 0) = C(1);
    M.at(1, 1) = D(1);
    M.at(1, 2) = A(1) * C(2);
    M.at(1, 3) = B(1) * D(2);
    M.at(2, 2) = A(3);
    M.at(2, 3) = B(3);
    M.at(3, 2) = C(3);
    M.at(3, 3) = D(3);
  } else if (L == "IX") {
    M.at(0, 0) = A(2);
    M.at(0, 1) = A(1) * B(1);
    M.at(0, 2) = B(2).scaled(h);
    M.at(1, 0) = (A(1) * C(1)).scaled(2);
    M.at(1, 1) = A(1) * D(1) + B(1) * C(1);
    M.at(1, 2) = B(1) * D(1);
    M.at(2, 0) = C(2).scaled(2);
    M.at(2, 1) = (C(1) * D(1)).scaled(2);
    M.at(2, 2) = D(2);
    M.at(3, 3) = r.one();
  } else if (L == "XI") {
    M.at(0, 0) = A(2);
    M.at(0, 1) = B(2);
    M.at(0, 2) = A(1) * B(1);
    M.at(1, 0) = C(2);
    M.at(1, 1) = D(2);
    M.at(1, 2) = C(1) * D(1);
    M.at(2, 2) = r.one();
    M.at(3, 3) = r.one();
  } else if (L == "XIX") {
    M.at(0, 0) = A(2);
    M.at(0, 1) = B(2);
    M.at(1, 0) = C(2);
    M.at(1, 1) = D(2);
    M.at(2, 0) = A(1) * C(1);
    M.at(2, 1) = B(1) * D(1);
    M.at(2, 2) = r.one();
    M.at(3, 3) = r.one();
  } else if (L == "XXIV") {
    M.at(0, 0) = A(1);
    M.at(0, 1) = B(1);
    M.at(1, 0) = C(1);
    M.at(1, 1) = D(1);
    M.at(2, 2) = r.one();
    M.at(3, 3) = r.one();
  } else {
    fail(Err::BadParams, "no plus form for " + L);
  }
  return M;
}

}  // namespace

ClosedFormRep build_sigma(const FormSpec& s) {
  validate_form(s);
  Mat<MPoly> M;
  switch (s.family) {
    case Family::Star: M = star_entries(s.label, s.p, s.params); break;
    case Family::Sharp: M = sharp_entries(s.label, s.p, s.params); break;
    case Family::Plus: M = plus_entries(s.label, s.p); break;
    case Family::Small: M = small_entries(s.label, s.p, s.params); break;
    default: fail(Err::BadParams, "build_sigma needs star/sharp/plus/small");
  }
  RewriteSystem rs = sl2_blocks_of(vars_abcd());
  for (size_t i = 0; i < M.rows(); ++i)
    for (size_t j = 0; j < M.cols(); ++j) M.at(i, j) = sl2_reduce(M.at(i, j), rs);
  ClosedFormRep rep;
  rep.p = s.p;
  rep.n = M.rows();
  rep.entries = M;
  return rep;
}

FqMat conjugator_for(const std::string& lemma, const FieldCtx* F) {
  auto P = [&](size_t l, size_t m) { return fq_swap(F, 4, l, m); };
  auto I = [&]() { return fq_identity(F, 4); };
  if (lemma == "5.2") return I();
  if (lemma == "5.4") return P(3, 4) * P(2, 3);
  if (lemma == "5.6") return I();
  if (lemma == "5.8") return P(3, 4) * P(1, 2);
  if (lemma == "5.10") return P(1, 2) * P(2, 3);
  if (lemma == "5.12") return P(3, 4);
  if (lemma == "5.14") return P(3, 4) * P(2, 3);
  if (lemma == "5.16") return P(3, 4) * P(2, 3);
  if (lemma == "5.18") return P(2, 3) * P(3, 4) * P(2, 3);
  // 5.20: the swap moving (XXI)*'s middle fixed line into (V)*'s second
  // row; the P2 P1 matrix pair belongs to the sigma+ shapes, not these.
  if (lemma == "5.20") return P(2, 3);
  if (lemma == "5.21") return P(3, 4);
  if (lemma == "5.22") return P(3, 4) * P(2, 3);
  if (lemma == "6.1") return fq_diag_ints(F, {1, 1, 2, 6});
  if (lemma == "6.3") return P(3, 4) * P(2, 3);
  if (lemma == "6.5") return I();
  if (lemma == "6.7") return P(3, 4) * P(1, 2);
  if (lemma == "6.9") return P(1, 2) * P(2, 3);
  // 6.11: the swap needs the extra column scaling diag(1,1,2,1) to absorb
  // the 1/2 coefficients of (IX)* into (IX)#'s normalization.
  if (lemma == "6.11") return P(3, 4) * fq_diag_ints(F, {1, 1, 2, 1});
  if (lemma == "6.13") return P(3, 4) * P(2, 3);
  if (lemma == "6.15") return P(3, 4) * P(2, 3);
  if (lemma == "6.17") return P(2, 3) * P(3, 4) * P(2, 3);
  if (lemma == "6.19") return P(3, 4) * P(2, 3);
  if (lemma == "6.21") return I();
  fail(Err::UnknownLemma, "no conjugator table entry for lemma " + lemma);
}

std::vector<ConjIdentity> conjugation_identities() {
  using R = ConjIdentity::Rhs;
  return {
      {"5.2", "I", R::PlusFrob, "I", "e1"},
      {"5.4", "II", R::PlusFrob, "II", "e1"},
      {"5.6", "IV", R::TensorSplit, "", ""},
      {"5.8", "V", R::PlusFrob, "V", "e1"},
      {"5.10", "VII", R::PlusFrob, "VII", "e1"},
      {"5.12", "IX", R::PlusFrob, "IX", "e1"},
      {"5.14", "XI", R::PlusFrob, "XI", "e1"},
      {"5.16", "XV", R::DiagSplit, "", ""},
      {"5.18", "XIX", R::PlusFrob, "XIX", "e1"},
      {"5.20", "XXI", R::StarOther, "V", ""},
      {"5.21", "XXII", R::StarOther, "XV", ""},
      {"5.22", "XXIV", R::PlusFrob, "XXIV", "e2"},
      {"6.1", "I", R::Sharp, "I", ""},
      {"6.3", "II", R::Sharp, "II", ""},
      {"6.5", "IV", R::Sharp, "IV", ""},
      {"6.7", "V", R::Sharp, "V", ""},
      {"6.9", "VII", R::Sharp, "VII", ""},
      {"6.11", "IX", R::Sharp, "IX", ""},
      {"6.13", "XI", R::Sharp, "XI", ""},
      {"6.15", "XV", R::Sharp, "XV", ""},
      {"6.17", "XIX", R::Sharp, "XIX", ""},
      {"6.19", "XXIV", R::Sharp, "XXIV", ""},
      {"6.21", "XXVI", R::Sharp, "XXVI", ""},
  };
}

std::pair<int, int> expected_d(const std::string& L) {
  if (L == "I" || L == "II" || L == "IV" || L == "VII" || L == "XV" || L == "XXII") return {0, 0};
  if (L == "V" || L == "IX") return {1, 1};
  if (L == "XI") return {1, 2};
  if (L == "XIX") return {2, 1};
  if (L == "XXI") return {1, 1};  // equivalent to (V)*
  if (L == "XXIV") return {2, 2};
  if (L == "XXVI") return {4, 4};
  fail(Err::BadParams, "no d entry for form " + L);
}

std::vector<Params> enumerate_params(const std::string& L, Family fam, uint32_t p,
                                     long long maxE) {
  std::vector<Params> out;
  auto es = [&](long long lo) {
    std::vector<long long> v;
    for (long long e = lo; e <= maxE; ++e) v.push_back(e);
    return v;
  };
  if (fam == Family::Small) {
    if (L == "1" || L == "2.2" || L == "3.1d" || L == "3.2c") {
      out.push_back({});
    } else {
      for (long long e : es(0)) out.push_back({{"e", e}});
    }
    return out;
  }
  if (fam == Family::Star || fam == Family::Sharp || fam == Family::Plus) {
    if (L == "XXVI") {
      out.push_back({});
    } else if (L == "IV") {
      for (long long e1 : es(0))
        for (long long e2 : es(e1 + 1)) out.push_back({{"e1", e1}, {"e2", e2}});
    } else if (L == "XV") {
      for (long long e3 : es(0))
        for (long long e2 : es(e3)) out.push_back({{"e2", e2}, {"e3", e3}});
    } else if (L == "XXIV") {
      for (long long e2 : es(0)) out.push_back({{"e2", e2}});
    } else {
      for (long long e1 : es(0)) out.push_back({{"e1", e1}});
    }
    return out;
  }
  // Borel forms: free d parameters take their minimal and maximal legal values
  int idx = roman_index(L);
  switch (idx) {
    case 1: case 2: case 3: case 7: case 8: case 9: case 21:
      for (long long e1 : es(0)) out.push_back({{"e1", e1}});
      break;
    case 4: case 10: case 18:
      for (long long e1 : es(0))
        for (long long e2 : es(e1 + 1)) out.push_back({{"e1", e1}, {"e2", e2}});
      break;
    case 5:
      for (long long e1 : es(0))
        for (long long f : es(e1 + 1)) out.push_back({{"e1", e1}, {"f", f}});
      break;
    case 6: case 12: case 20:
      for (long long e1 : es(0))
        for (long long d2 : {0LL, 64LL}) out.push_back({{"e1", e1}, {"d2", d2}});
      break;
    case 11: case 19:
      for (long long e1 : es(0))
        for (long long e3 : es(e1 + 1)) out.push_back({{"e1", e1}, {"e3", e3}});
      break;
    case 13: case 14:
      for (long long e3 : es(0))
        for (long long e1 : es(e3 + 1)) out.push_back({{"e1", e1}, {"e3", e3}});
      break;
    case 15:
      for (long long e3 : es(0))
        for (long long e2 : es(e3)) out.push_back({{"e2", e2}, {"e3", e3}});
      break;
    case 16:
      for (long long e3 : es(0))
        for (long long e4 : es(e3 + 1)) out.push_back({{"e3", e3}, {"e4", e4}});
      break;
    case 17:
      for (long long e3 : es(0))
        for (long long d1 : {ipow(p, (uint32_t)e3), 64LL})
          if (d1 >= ipow(p, (uint32_t)e3)) out.push_back({{"e3", e3}, {"d1", d1}});
      break;
    case 22: case 23:
      for (long long e1 : es(0))
        for (long long d1 : {ipow(p, (uint32_t)e1), 2 * ipow(p, (uint32_t)e1)})
          out.push_back({{"e1", e1}, {"d1", d1}});
      break;
    case 24:
      for (long long e2 : es(0))
        for (long long d2 : {0LL, ipow(p, (uint32_t)e2)}) out.push_back({{"e2", e2}, {"d2", d2}});
      break;
    case 25:
      for (long long e3 : es(0))
        for (long long d1 : {ipow(p, (uint32_t)e3), 2 * ipow(p, (uint32_t)e3)})
          out.push_back({{"e3", e3}, {"d1", d1}});
      break;
    case 26:
      out.push_back({{"d1", 0}, {"d2", 0}});
      out.push_back({{"d1", 64}, {"d2", 0}});
      out.push_back({{"d1", 64}, {"d2", 64}});
      break;
    default: fail(Err::BadParams, "unknown form " + L);
  }
  return out;
}

}  // namespace sl2hom
