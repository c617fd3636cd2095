#pragma once

#include <fstream>

#include "cmpl/ratfunc.hpp"
#include "json.hpp"

inline const nlohmann::json& golden() {
  static const nlohmann::json j = [] {
    std::ifstream in(std::string(CMPL_FIXTURES_DIR) + "/golden.json");
    return nlohmann::json::parse(in);
  }();
  return j;
}

inline cmpl::Poly poly_of(const cmpl::FieldPtr& F, const nlohmann::json& a) {
  return cmpl::Poly(F, a.get<std::vector<cmpl::Fq>>());
}

inline cmpl::RatFunc rat_of(const cmpl::FieldPtr& F, const nlohmann::json& x) {
  return cmpl::RatFunc(poly_of(F, x["num"]), poly_of(F, x["den"]));
}
