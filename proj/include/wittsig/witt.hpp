#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace wittsig {

// ---------------------------------------------------------------------------
// Integer plumbing: primality, factorization, square classes.
// ---------------------------------------------------------------------------

struct PrimeFactorization {
  // Sorted by prime, exponents positive.
  std::vector<std::pair<mpz_class, unsigned>> factors;

  mpz_class product() const;
};

// Largest input for which the Miller-Rabin base set {2..41} is deterministic.
const mpz_class& primality_limit();

// Deterministic for n < primality_limit(); throws NumberTooLarge beyond it.
bool is_prime(const mpz_class& n);

// Complete factorization of |n|, n != 0. Trial division to 10^6, then
// Brent-Pollard rho with Miller-Rabin certification of the cofactors.
PrimeFactorization factorize(const mpz_class& n);

// Product of the primes dividing n to an odd power, carrying the sign of n.
mpz_class squarefree_part(const mpz_class& n);

// Euler criterion; u must be coprime to the odd prime p.
bool quadratic_residue(const mpz_class& u, const mpz_class& p);

// ---------------------------------------------------------------------------
// Witt classes.
// ---------------------------------------------------------------------------

// Element of W(Q) written as <a_1> + ... + <a_k> with every a_i a nonzero
// square-free integer (<a/b> = <ab> up to squares).
class WittClassQ {
 public:
  WittClassQ() = default;

  // Throws ZeroEntry on any zero.
  static WittClassQ from_diagonal(std::span<const mpq_class> entries);
  static WittClassQ from_integers(std::span<const mpz_class> entries);

  const std::vector<mpz_class>& entries() const noexcept { return entries_; }
  std::size_t rank() const noexcept { return entries_.size(); }

  // Sum of entry signs; the splitting W(Q) -> Z.
  int signature() const;

  // -<a> = <-a>
  WittClassQ negated() const;

  friend WittClassQ operator+(const WittClassQ& a, const WittClassQ& b);

 private:
  std::vector<mpz_class> entries_;
};

WittClassQ witt_from_diagonal(std::span<const mpq_class> entries);

// Canonical element of W(F_p). For odd p the class is determined by the rank
// parity together with the square class of the signed discriminant
// (-1)^(r(r-1)/2) * det; the class is zero iff the rank is even and that
// value is a square, i.e. det = (-1)^(r/2) up to squares. For p = 2 only the
// rank parity matters.
class FiniteWittClass {
 public:
  explicit FiniteWittClass(mpz_class prime);

  // <u_1> + ... + <u_k> over F_p; units are reduced mod p and must be nonzero.
  static FiniteWittClass from_diagonal(const mpz_class& prime, std::span<const mpz_class> units);

  const mpz_class& prime() const noexcept { return prime_; }
  int rank_parity() const noexcept { return rank_parity_; }
  bool disc_is_square() const noexcept { return disc_square_; }
  bool zero() const noexcept { return rank_parity_ == 0 && disc_square_; }

  // Adds the one-dimensional form <u>, u a unit mod p.
  void add_unit(const mpz_class& u);

  friend bool operator==(const FiniteWittClass&, const FiniteWittClass&) = default;
  friend FiniteWittClass finite_witt_add(const FiniteWittClass& x, const FiniteWittClass& y);

 private:
  mpz_class prime_;
  int rank_parity_ = 0;
  bool disc_square_ = true;
  bool minus_one_square_ = true;
};

// Throws PrimeMismatch when the primes differ.
FiniteWittClass finite_witt_add(const FiniteWittClass& x, const FiniteWittClass& y);
bool finite_witt_is_zero(const FiniteWittClass& x);

// Residue of the single generator <a> at p, computed from a = (u/v) p^n
// without any normalization of a.
FiniteWittClass boundary_of_rational(const mpq_class& a, const mpz_class& p);

// d_p of a class; throws NotPrime.
FiniteWittClass boundary_at_prime(const WittClassQ& c, const mpz_class& p);

// Primes at which some entry has odd valuation, ascending.
std::vector<mpz_class> relevant_primes(const WittClassQ& c);

// d_p for every relevant prime.
std::vector<FiniteWittClass> boundary_table(const WittClassQ& c);

bool boundary_is_zero(const WittClassQ& c);
bool witt_q_is_zero(const WittClassQ& c);
bool witt_q_equal(const WittClassQ& a, const WittClassQ& b);

}  // namespace wittsig
