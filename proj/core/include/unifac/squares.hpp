#pragma once
#include <array>

#include "unifac/finite_field.hpp"

namespace unifac::forms {

/// lam = b1^2 + b2^2 + b3^2 + b4^2 with all b_i nonzero; least solution in
/// element-code order. Requires characteristic > 3.
std::array<uint32_t, 4> four_squares(const gf::FiniteField& f, uint32_t lam);

/// lam = a^2 + b^2, zeros allowed; least solution in element-code order.
std::array<uint32_t, 2> two_squares(const gf::FiniteField& f, uint32_t lam);

}  // namespace unifac::forms
