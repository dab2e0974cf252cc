#pragma once
#include "unifac/form_space.hpp"
#include "unifac/witness.hpp"

namespace unifac::forms {

using SpWitness = Witness<mat::Matrix>;

/// The six-letter Borel word X(lam) Y(-1/lam) X(lam) X(-1) Y(1) X(-1) in
/// Sp(2d,q), whose product is diag(lam,1,..,1 | 1/lam,1,..,1) in the
/// (e_1..e_d, f_1..f_d) basis. X(t)/Y(t) are the one-parameter upper/lower
/// unipotent isometries with t in the corner. Tags "X" and "Y".
SpWitness sp_borel_torus_word(uint32_t lam, uint32_t d, uint64_t q);

mat::Matrix sp_x_letter(const FormSpace& s, uint32_t t);
mat::Matrix sp_y_letter(const FormSpace& s, uint32_t t);

/// u = pi(v) + phi(v) over Z_2 with v the canonical vector of weight
/// floor(d/2) (ones first); u must have even weight.
std::pair<perm::Permutation, perm::Permutation> even_weight_decompose(
    const std::vector<uint32_t>& u);

}  // namespace unifac::forms
