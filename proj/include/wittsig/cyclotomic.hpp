#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace wittsig {

// Coefficients of Phi_n, lowest degree first, via
// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
const std::vector<mpz_class>& cyclotomic_polynomial(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

// Exact element sum_k c_k zeta_n^k of Z[zeta_n], zeta_n = exp(2 pi i / n),
// stored in the power basis 1, zeta, ..., zeta^(phi(n)-1) after reduction
// modulo Phi_n. Equal elements have equal coefficient vectors.
class CyclotomicSum {
 public:
  // `exponent_counts` maps k (taken mod n) to its integer multiplicity.
  CyclotomicSum(std::uint64_t order, const std::map<std::uint64_t, mpz_class>& exponent_counts);

  std::uint64_t order() const noexcept { return order_; }
  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }

  friend bool operator==(const CyclotomicSum&, const CyclotomicSum&) = default;

 private:
  std::uint64_t order_;
  std::vector<mpz_class> coeffs_;
};

}  // namespace wittsig
