#pragma once

#include "wittsig/matrix.hpp"

namespace wittsig {

// left * A * right = diagonal, left and right unimodular, the diagonal
// nonnegative with d_1 | d_2 | ... (zeros last).
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Basis (as columns) of the lattice spanned by the columns of `generators`.
// The result has as many columns as the rank of the generator matrix.
IntMatrix lattice_basis(const IntMatrix& generators);

}  // namespace wittsig
