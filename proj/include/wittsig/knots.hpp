#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "wittsig/forms.hpp"
#include "wittsig/matrix.hpp"
#include "wittsig/witt.hpp"

namespace wittsig {

// Seifert matrix xi of a knot: det(xi - xi^T) = 1.
class SeifertMatrix {
 public:
  explicit SeifertMatrix(IntMatrix entries);
  static SeifertMatrix from_rows(const std::vector<std::vector<mpz_class>>& rows);
  static SeifertMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t size() const noexcept { return entries_.rows(); }
  const IntMatrix& entries() const noexcept { return entries_; }

 private:
  IntMatrix entries_;
};

// Seifert matrix of the connected sum.
SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b);

// xi + xi^T, always even.
IntegerSymmetricForm symmetrize(const SeifertMatrix& s);

int knot_signature(const SeifertMatrix& s);
mpz_class knot_determinant(const SeifertMatrix& s);

// sigma = 0 mod 4 when |det| = 1 mod 4, sigma = 2 mod 4 when |det| = 3 mod 4.
bool murasugi_check(const SeifertMatrix& s);

struct KnotReport {
  int signature = 0;
  mpz_class determinant;
  // sigma mod 4 predicted by |det|.
  int murasugi_class = 0;
  bool murasugi_holds = false;
  WittClassQ witt_class;
  bool boundary_zero = false;
  std::optional<int> signature_mod_8;
};

KnotReport analyze_knot(const SeifertMatrix& s);

// P(p, q, r) with p, q odd, r even and pq + pr + qr != 0.
class PretzelKnot {
 public:
  PretzelKnot(std::int64_t p, std::int64_t q, std::int64_t r);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  std::int64_t r() const noexcept { return r_; }

 private:
  std::int64_t p_, q_, r_;
};

mpz_class pretzel_determinant(const PretzelKnot& k);

// <p> + <q> + <r> + <pqr>, omitting <+-1> summands that do not affect d.
// Throws DegenerateParameter when r = 0.
WittClassQ pretzel_witt_class(const PretzelKnot& k);

// -(p+q) + Sign(p) + Sign(q) - Sign(pq(p+q)) + Sign((p+q)(pq+pr+qr)).
// Throws DegenerateParameter when p + q = 0.
int pretzel_signature(const PretzelKnot& k);

}  // namespace wittsig
