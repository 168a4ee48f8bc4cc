// Batch front-end: build, verify, extend, classify, decompose catalog
// entries and user-supplied generator data; emits machine-readable reports.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "sl2hom/report.hpp"

using namespace sl2hom;

namespace {

struct CommonArgs {
  std::string form;
  uint32_t p = 2;
  uint32_t m = 1;
  std::string params;
  std::string mode = "auto";
  uint64_t seed = 12345;
  uint64_t budget = 1000000;
  std::string out;
  int jobs = 1;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool needs_form = true) {
  auto* opt = cmd->add_option("--form", a.form, "catalog form id, e.g. borel:IX or sharp:XV");
  if (needs_form) opt->required();
  cmd->add_option("--p", a.p, "characteristic")->required();
  cmd->add_option("--m", a.m, "extension degree of the working field");
  cmd->add_option("--params", a.params, "form parameters, e.g. e1=0,e2=1");
  cmd->add_option("--mode", a.mode, "symbolic | exhaustive | auto")
      ->check(CLI::IsMember({"symbolic", "exhaustive", "auto"}));
  cmd->add_option("--seed", a.seed, "seed for sampled checks");
  cmd->add_option("--budget", a.budget, "enumeration / search budget");
  cmd->add_option("--out", a.out, "write the JSON report to this file");
  cmd->add_option("--jobs", a.jobs, "parallel jobs (suite)");
}

Mode mode_of(const std::string& s) {
  if (s == "symbolic") return Mode::Symbolic;
  if (s == "exhaustive") return Mode::Exhaustive;
  return Mode::Auto;
}

int emit(const json& report, const std::string& out, int code) {
  json j = report;
  j["schema"] = 1;
  std::string text = j.dump(2);
  if (!out.empty()) {
    std::ofstream f(out);
    f << text << "\n";
  } else {
    std::cout << text << "\n";
  }
  return code;
}

GenDatum datum_from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(Err::BadParams, "cannot open " + path);
  json j;
  f >> j;
  GenDatum d;
  d.p = j.at("p").get<uint32_t>();
  auto read_mat = [&](const json& rows, VarListPtr vars) {
    size_t n = rows.size();
    Mat<MPoly> m(n, n, MPoly(d.p, vars));
    for (size_t i = 0; i < n; ++i)
      for (size_t jx = 0; jx < n; ++jx)
        m.at(i, jx) = MPoly::parse(d.p, vars, rows[i][jx].get<std::string>());
    return m;
  };
  d.phiPlus = read_mat(j.at("phiPlus"), vars_t());
  auto w = j.at("weights");
  for (size_t i = 0; i < 4; ++i) d.weights[i] = w[i].get<long long>();
  if (j.contains("phiMinus")) d.phiMinus = read_mat(j.at("phiMinus"), vars_s());
  return d;
}

FormSpec spec_of(const CommonArgs& a) {
  return FormSpec::parse(a.form, a.p, parse_params(a.params));
}

FqRep rep_of(const CommonArgs& a, const std::string& datumFile,
             std::shared_ptr<const FieldCtx>& ctxOut, long long maxE) {
  if (!datumFile.empty()) {
    GenDatum d = datum_from_file(datumFile);
    ctxOut = a.m > 1 ? FieldCtx::make(d.p, a.m) : analysis_field(d.p, maxE);
    return rep_of_gen_datum(d, ctxOut.get());
  }
  FormSpec spec = spec_of(a);
  ctxOut = a.m > 1 ? FieldCtx::make(a.p, a.m) : analysis_field(a.p, maxE);
  return rep_of_closed_form(build_sigma(spec), ctxOut.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification, classification and decomposition for homomorphisms "
               "SL(2,k) -> SL(n,k), n <= 4, in positive characteristic"};
  app.require_subcommand(1);

  CommonArgs a;
  std::string datumFile, form2, params2;
  long long maxE = 2, bound = 0;
  std::string primesArg = "2,3,5";

  auto* cat = app.add_subcommand("catalog", "build and print a catalog entry");
  add_common(cat, a);
  auto* vb = app.add_subcommand("verify-borel", "Borel-pair homomorphism criterion");
  add_common(vb, a);
  auto* vs = app.add_subcommand("verify-sl2", "SL(2) multiplicativity of a closed form");
  add_common(vs, a);
  auto* ex = app.add_subcommand("extend", "solve for phi^- or certify a contradiction");
  add_common(ex, a);
  ex->add_option("--bound", bound, "degree bound for phi^- entries (default: weight-derived)");
  auto* inv = app.add_subcommand("invariants", "signature of a catalog form");
  add_common(inv, a);
  inv->add_option("--maxe", maxE, "exponent ceiling for the working field choice");
  auto* cl = app.add_subcommand("classify", "identify a rep inside the canonical catalog");
  add_common(cl, a, false);
  cl->add_option("--datum", datumFile, "JSON file with a generator datum to classify");
  cl->add_option("--maxe", maxE, "catalog exponent ceiling");
  auto* de = app.add_subcommand("decompose", "indecomposable decomposition");
  add_common(de, a);
  de->add_option("--maxe", maxE, "catalog exponent ceiling");
  auto* eq = app.add_subcommand("equiv", "equivalence of two catalog forms");
  add_common(eq, a);
  eq->add_option("--form2", form2, "second form id")->required();
  eq->add_option("--params2", params2, "second form parameters");
  auto* su = app.add_subcommand("suite", "run the acceptance battery");
  su->add_option("--primes", primesArg, "comma-separated characteristics (default 2,3,5)");
  su->add_option("--maxe", maxE, "exponent ceiling (default 1; criterion 5 uses 2)");
  su->add_option("--seed", a.seed, "seed");
  su->add_option("--budget", a.budget, "pair-enumeration budget");
  su->add_option("--out", a.out, "write the JSON report to this file");
  su->add_option("--jobs", a.jobs, "parallel jobs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cat->parsed()) {
      FormSpec spec = spec_of(a);
      json j = to_json(spec);
      if (spec.family == Family::Borel) {
        GenDatum d = build_borel_pair(spec);
        j["phiPlus"] = to_json(d.phiPlus);
        j["weights"] = d.weights;
        j["partition"] = borel_partition(spec);
      } else {
        ClosedFormRep r = build_sigma(spec);
        j["entries"] = to_json(r.entries);
        if (spec.family != Family::Small) j["weights"] = torus_weights(spec);
      }
      return emit(j, a.out, 0);
    }

    if (vb->parsed()) {
      FormSpec spec = spec_of(a);
      if (spec.family != Family::Borel) fail(Err::BadParams, "verify-borel needs a borel form");
      GenDatum d = build_borel_pair(spec);
      CheckReport r = check_borel_pair(d, mode_of(a.mode), FieldCtx::make(a.p, a.m));
      json j = to_json(r);
      j["form"] = spec.str();
      return emit(j, a.out, r.passed ? 0 : 1);
    }

    if (vs->parsed()) {
      FormSpec spec = spec_of(a);
      ClosedFormRep r = build_sigma(spec);
      CheckReport rep = check_sl2_homomorphism(r, mode_of(a.mode), FieldCtx::make(a.p, a.m),
                                               a.budget, 10000, a.seed);
      json j = to_json(rep);
      j["form"] = spec.str();
      return emit(j, a.out, rep.passed ? 0 : 1);
    }

    if (ex->parsed()) {
      if (a.mode == "symbolic") {
        std::cerr << "extend requires the rational-argument relation; symbolic mode is not "
                     "available\n";
        return 2;
      }
      FormSpec spec = spec_of(a);
      if (spec.family != Family::Borel) fail(Err::BadParams, "extend needs a borel form");
      GenDatum d = build_borel_pair(spec);
      PhiMinusSolution sol = solve_phi_minus(d, bound);
      json j = to_json(sol);
      j["form"] = spec.str();
      if (sol.status == PhiMinusSolution::Status::Unique) {
        GenDatum full = d;
        full.phiMinus = sol.phiMinus;
        j["sigma"] = to_json(assemble_sigma(full).entries);
        return emit(j, a.out, 0);
      }
      return emit(j, a.out, 1);
    }

    if (inv->parsed()) {
      FormSpec spec = spec_of(a);
      auto ctx = a.m > 1 ? FieldCtx::make(a.p, a.m) : analysis_field(a.p, maxE);
      Signature s = signature_of_form(spec, ctx);
      json j = to_json(s);
      j["form"] = spec.str();
      j["q"] = ctx->q();
      return emit(j, a.out, 0);
    }

    if (cl->parsed()) {
      if (a.form.empty() && datumFile.empty()) {
        std::cerr << "classify needs --form or --datum\n";
        return 2;
      }
      std::shared_ptr<const FieldCtx> ctx;
      FqRep rep = rep_of(a, datumFile, ctx, maxE);
      FormSpec got = classify(rep, maxE, rep.n == 4 ? Scope::Sharp4 : Scope::SmallN, a.seed);
      json j = to_json(got);
      j["q"] = ctx->q();
      return emit(j, a.out, 0);
    }

    if (de->parsed()) {
      FormSpec spec = spec_of(a);
      auto ctx = a.m > 1 ? FieldCtx::make(a.p, a.m) : analysis_field(a.p, maxE);
      FqRep rep = rep_of_closed_form(build_sigma(spec), ctx.get());
      DecompositionReport r = decompose(rep, maxE, a.budget, a.seed);
      json j = to_json(r);
      j["form"] = spec.str();
      j["q"] = ctx->q();
      return emit(j, a.out, 0);
    }

    if (eq->parsed()) {
      FormSpec s1 = spec_of(a);
      FormSpec s2 = FormSpec::parse(form2, a.p, parse_params(params2));
      auto ctx = a.m > 1 ? FieldCtx::make(a.p, a.m) : analysis_field(a.p, maxE);
      FqRep r1 = rep_of_closed_form(build_sigma(s1), ctx.get());
      FqRep r2 = rep_of_closed_form(build_sigma(s2), ctx.get());
      EquivalenceResult res = check_equivalence(r1, r2, a.budget, 4096, a.seed);
      json j;
      j["equivalent"] = res.equivalent;
      j["exact"] = res.exact;
      if (!res.note.empty()) j["note"] = res.note;
      if (res.conjugator) j["conjugator"] = to_json(*res.conjugator);
      j["forms"] = {s1.str(), s2.str()};
      j["q"] = ctx->q();
      return emit(j, a.out, res.equivalent ? 0 : 1);
    }

    if (su->parsed()) {
      SuiteOptions opt;
      opt.primes.clear();
      for (const auto& [k, v] : parse_params([&] {
             // reuse key=value parser by turning "2,3,5" into indexed pairs
             std::string s;
             int i = 0;
             size_t pos = 0;
             std::string src = primesArg;
             while (pos < src.size()) {
               size_t c = src.find(',', pos);
               if (c == std::string::npos) c = src.size();
               if (!s.empty()) s += ",";
               s += "p" + std::to_string(i++) + "=" + src.substr(pos, c - pos);
               pos = c + 1;
             }
             return s;
           }()))
        opt.primes.push_back((uint32_t)v);
      std::sort(opt.primes.begin(), opt.primes.end());
      opt.maxE = maxE == 2 ? 1 : maxE;  // default kept at 1 unless overridden
      if (su->count("--maxe")) opt.maxE = maxE;
      opt.maxEClassify = std::max<long long>(opt.maxE, 2);
      opt.seed = a.seed;
      opt.budget = a.budget;
      auto results = run_acceptance(opt);
      json j;
      j["criteria"] = json::array();
      bool all = true;
      for (const auto& r : results) {
        std::cout << "criterion " << r.number << " [" << (r.passed ? "PASS" : "FAIL") << "] "
                  << r.name << " (" << r.checks << " checks, " << r.seconds << "s)\n";
        if (!r.passed)
          for (const auto& f : r.failures) std::cout << "    " << f << "\n";
        all = all && r.passed;
        j["criteria"].push_back(to_json(r));
      }
      j["passed"] = all;
      if (!a.out.empty()) {
        json withSchema = j;
        withSchema["schema"] = 1;
        std::ofstream f(a.out);
        f << withSchema.dump(2) << "\n";
      }
      return all ? 0 : 1;
    }
  } catch (const ToolError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
