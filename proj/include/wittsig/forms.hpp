#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "wittsig/matrix.hpp"

namespace wittsig {

// Nondegenerate symmetric integer Gram matrix (L, b). Rank 0 is the empty
// form with determinant 1.
class IntegerSymmetricForm {
 public:
  // Validates squareness, symmetry and nondegeneracy.
  explicit IntegerSymmetricForm(IntMatrix gram);

  std::size_t rank() const noexcept { return gram_.rows(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return gram_(i, j); }
  const mpz_class& determinant() const noexcept { return det_; }

 private:
  IntMatrix gram_;
  mpz_class det_;
};

// Diagonal entries a_1..a_n with transition P such that P B P^T = diag(a).
struct DiagonalRationalForm {
  std::vector<mpq_class> entries;
  RatMatrix transition;
};

struct FormReport {
  std::size_t rank = 0;
  mpz_class determinant;
  int signature = 0;
  bool is_even = false;
};

IntegerSymmetricForm form_from_rows(const std::vector<std::vector<mpz_class>>& rows);
IntegerSymmetricForm form_from_rows(const std::vector<std::vector<long>>& rows);

// Fraction-free Bareiss elimination with row pivoting.
mpz_class bareiss_determinant(IntMatrix m);

mpz_class determinant(const IntegerSymmetricForm& f);
int signature(const IntegerSymmetricForm& f);
bool is_even(const IntegerSymmetricForm& f);

// Symmetric row/column elimination. Pivots prefer the smallest remaining
// index with nonzero diagonal; when every remaining diagonal entry vanishes
// the basis vector e_k is replaced by e_k + e_j for the first j > k with
// b(e_k, e_j) != 0.
DiagonalRationalForm diagonalize(const IntegerSymmetricForm& f);

// Same elimination with pivot preference following `pivot_order` (a
// permutation of 0..n-1) instead of index order. The transition still acts
// on the original basis.
DiagonalRationalForm diagonalize(const IntegerSymmetricForm& f,
                                 std::span<const std::size_t> pivot_order);

IntegerSymmetricForm direct_sum(const IntegerSymmetricForm& a, const IntegerSymmetricForm& b);

// Number of positive minus number of negative entries.
int sign_count(std::span<const mpq_class> entries);

FormReport report(const IntegerSymmetricForm& f);

}  // namespace wittsig
