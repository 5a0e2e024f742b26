#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "wittsig/cyclotomic.hpp"
#include "wittsig/forms.hpp"
#include "wittsig/matrix.hpp"

namespace wittsig {

inline constexpr std::uint64_t kDefaultGroupBound = 10'000;
inline constexpr std::uint64_t kDefaultDeterminantBound = 1'000'000;

// (L#/L, lambda_b) as a sum of cyclic groups Z/d_1 + ... + Z/d_k with
// d_1 | ... | d_k, all d_i > 1.
struct DiscriminantForm {
  std::vector<mpz_class> orders;
  // lambda(g_i, g_j) reduced into [0, 1).
  RatMatrix linking;
  // b(g_i, g_i) reduced into [0, 2).
  std::vector<mpq_class> quad_diag;
  // g_i in L-coordinates; column i of the Smith transform divided by d_i.
  std::vector<std::vector<mpq_class>> generators;

  std::size_t rank() const noexcept { return orders.size(); }
  mpz_class order() const;
  mpz_class exponent() const { return orders.empty() ? mpz_class(1) : orders.back(); }
};

DiscriminantForm discriminant_form(const IntegerSymmetricForm& f);

// sum x_i y_j lambda(g_i, g_j) reduced into [0, 1). Throws LengthMismatch.
mpq_class linking_value(const DiscriminantForm& d, std::span<const mpz_class> x,
                        std::span<const mpz_class> y);

// Brute force; intended for groups within the enumeration bound.
bool is_nondegenerate(const DiscriminantForm& d, std::uint64_t bound = kDefaultGroupBound);

// Subgroup given by generators, each a coefficient vector on g_1..g_k.
struct Subgroup {
  std::vector<std::vector<mpz_class>> generators;
  mpz_class order;
};

// H with |H|^2 = |G| and lambda|HxH = 0, or nullopt after exhausting all
// candidates. Throws GroupTooLarge when |G| > bound.
std::optional<Subgroup> find_metabolizer(const DiscriminantForm& d,
                                         std::uint64_t bound = kDefaultGroupBound);

// Gram matrix of L_1 = L + span(representatives of H). Throws NotIsotropic if
// b is not integral on L_1.
IntegerSymmetricForm overlattice_form(const IntegerSymmetricForm& f, const DiscriminantForm& d,
                                      const Subgroup& h);

// G(b) = sum over L#/L of exp(pi i b(u,u)) as a multiset of exponents:
// `terms[r]` counts cosets with b(u,u) = r / N mod 2.
struct GaussSumValue {
  std::uint64_t denominator = 1;  // N
  std::map<std::uint64_t, std::uint64_t> terms;

  std::uint64_t total() const;
  std::complex<long double> approx() const;
  // The same value in Z[zeta_{2N}].
  CyclotomicSum exact() const;
};

GaussSumValue gauss_sum(const IntegerSymmetricForm& f,
                        std::uint64_t enum_bound = kDefaultDeterminantBound, unsigned jobs = 1);

struct GaussSumCheck {
  GaussSumValue value;
  int signature = 0;
  // Present when |det| is a perfect square: coefficient-wise comparison in
  // the cyclotomic ring of order lcm(8, 2N).
  std::optional<bool> exact_match;
  bool numeric_match = false;
  long double numeric_error = 0;

  bool holds() const { return exact_match.value_or(numeric_match); }
};

inline constexpr long double kGaussTolerance = 1e-9L;

GaussSumCheck check_gauss_sum(const IntegerSymmetricForm& f,
                              std::uint64_t enum_bound = kDefaultDeterminantBound,
                              unsigned jobs = 1);
bool gauss_sum_check(const IntegerSymmetricForm& f,
                     std::uint64_t enum_bound = kDefaultDeterminantBound);

struct MainTheoremReport {
  bool is_even = false;
  mpz_class det;
  bool det_odd = false;
  bool boundary_zero = false;
  bool metabolizer_searched = false;
  std::optional<Subgroup> metabolizer;
  int signature = 0;
  int signature_mod_8 = 0;
  bool theorem_applies = false;
  bool conclusion_holds = false;
  // Metabolizer search ran and its verdict differs from boundary_zero.
  bool vanishing_disagreement = false;
};

MainTheoremReport verify_main_theorem(const IntegerSymmetricForm& f,
                                      std::uint64_t group_bound = kDefaultGroupBound);

}  // namespace wittsig
