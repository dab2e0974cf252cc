#pragma once
#include "unifac/matrix.hpp"

namespace unifac::mat {

/// A(a,b) + B(a,b) = (x,y) componentwise for the diagonal action of SL(d,q)
/// on pairs of vectors: A a + B a = x and A b + B b = y. Requires d >= 3 and
/// a, b linearly independent.
std::pair<Matrix, Matrix> pair_span_decompose(const std::vector<uint32_t>& x,
                                              const std::vector<uint32_t>& y,
                                              const std::vector<uint32_t>& a,
                                              const std::vector<uint32_t>& b,
                                              const gf::FiniteField& f);

}  // namespace unifac::mat
