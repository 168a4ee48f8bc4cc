#ifndef SL2HOM_REPORT_HPP
#define SL2HOM_REPORT_HPP

#include <json.hpp>

#include "sl2hom/analyze.hpp"
#include "sl2hom/suite.hpp"

namespace sl2hom {

using json = nlohmann::json;

json to_json(const Fq& x);
json to_json(const FqMat& m);
json to_json(const Mat<MPoly>& m);
json to_json(const CheckReport& r);
json to_json(const Signature& s);
json to_json(const FormSpec& s);
json to_json(const PhiMinusSolution& s);
json to_json(const DecompositionReport& d);
json to_json(const CriterionResult& c);

Params parse_params(const std::string& text);  // "e1=0,e2=1"

}  // namespace sl2hom

#endif
