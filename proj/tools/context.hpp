#pragma once

#include <optional>
#include <string>

#include "cmpl/embedding.hpp"
#include "cmpl/parse.hpp"

namespace cmpl::cli {

struct Options {
  unsigned q = 3;
  std::string fq_modulus;
  std::string s = "1";
  std::string u;
  std::string point;
  std::string ext_minpoly;
  std::string v = "theta";
  std::string place = "v";
  std::optional<long> prec;
  long deg_bound = 4;
  std::optional<long> height;
  std::string out;
  unsigned long seed = 0;
  long n = 3;
  std::size_t root = 0;
  unsigned jobs = 1;
  std::string filter;
  std::string fixtures;
  std::string multiplier;
  bool exp = false;
};

/// Fields, place and embedding built from the options.
struct Context {
  FieldPtr F;
  ExtPtr K;
  PlacePtr P;
  EmbeddingPtr emb;

  static Context make(const Options& o, bool need_place);
};

}  // namespace cmpl::cli
