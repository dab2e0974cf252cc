#pragma once
#include <stdexcept>
#include <string>

namespace unifac {

enum class Err {
  non_prime,
  degree_too_large,
  no_zsigmondy,
  degree_mismatch,
  not_even,
  search_exhausted,
  tail_regime,
  singular,
  dimension_too_small,
  dimension_mismatch,
  no_split,
  group_too_large,
  bound_exceeded,
  zero_lambda,
  odd_weight,
  not_in_l,
  dependent_pair,
  shape_mismatch,
  depth_explosion,
  hypothesis_violated,
  parse_error,
  lemma_unknown,
  cap_exceeded,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Err code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace unifac
