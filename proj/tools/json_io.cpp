#include "json_io.hpp"

namespace cmpl::cli {

json to_json(const VAdicNumber& x) {
  json j;
  j["place"] = "v";
  j["v"] = x.place()->v().to_string("theta");
  j["exact_zero"] = x.is_exact_zero();
  j["zero_to_precision"] = x.is_zero();
  if (x.is_exact_zero()) {
    j["value"] = "0";
    return j;
  }
  j["abs_prec"] = x.abs_prec();
  j["val"] = x.val();
  if (x.prec() > 0) {
    j["unit"] = x.unit().to_string("theta");
    if (x.val() >= 0) j["mod_v_power"] = x.mod_power(x.abs_prec()).to_string("theta");
  }
  j["value"] = x.to_string();
  return j;
}

json to_json(const InfLaurent& x) {
  json j;
  j["place"] = "inf";
  j["exact"] = x.is_exact();
  if (x.is_exact_zero()) {
    j["value"] = "0";
    return j;
  }
  if (!x.is_exact()) j["prec"] = x.prec();
  if (!x.is_zero()) {
    j["val"] = x.val();
    std::vector<Fq> c;
    for (std::size_t k = 0; k < x.mantissa().size(); ++k) c.push_back(x.mantissa().coeff(k));
    j["coeffs"] = c;
  }
  j["value"] = x.to_string();
  return j;
}

json to_json(const ExtElem& x) { return x.to_string(); }

json to_json(const ExtVector& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

json to_json(const ExtMatrix& m) {
  json j = json::array();
  for (std::size_t a = 0; a < m.rows(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < m.cols(); ++b) row.push_back(to_json(m(a, b)));
    j.push_back(row);
  }
  return j;
}

json to_json(const FracMatrix& m) { return to_json(m.to_ext()); }

std::string t_string(const Poly& a) { return a.to_string("t"); }

json to_json(const TorsionResult& t) {
  json j;
  j["found"] = t.found;
  j["certificate"] = t.found ? t_string(t.a) : "inconclusive";
  j["degree_bound"] = t.degree_bound;
  return j;
}

}  // namespace cmpl::cli
