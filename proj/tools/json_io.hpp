#pragma once

#include "cmpl/continuation.hpp"
#include "cmpl/criterion.hpp"
#include "json.hpp"

namespace cmpl::cli {

using nlohmann::json;

json to_json(const VAdicNumber& x);
json to_json(const InfLaurent& x);
json to_json(const ExtElem& x);
json to_json(const ExtVector& v);
json to_json(const ExtMatrix& m);
json to_json(const FracMatrix& m);
json to_json(const TorsionResult& t);
std::string t_string(const Poly& a);

}  // namespace cmpl::cli
