#include "wittsig/cyclotomic.hpp"

#include <mutex>

#include "wittsig/error.hpp"

namespace wittsig {

namespace {

// Exact division of a by the monic b; both lowest degree first.
std::vector<mpz_class> divide_exact(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<mpz_class> q(a.size() - db);
  for (std::size_t k = a.size(); k-- > db;) {
    const mpz_class c = a[k];
    q[k - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  return q;
}

std::uint64_t radical(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    r *= p;
    while (n % p == 0) n /= p;
  }
  return n > 1 ? r * n : r;
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) throw Error(Errc::Malformed, "cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<std::uint64_t, std::vector<mpz_class>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<mpz_class> poly(n + 1);
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d)
    if (n % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

CyclotomicSum::CyclotomicSum(std::uint64_t order,
                             const std::map<std::uint64_t, mpz_class>& exponent_counts)
    : order_(order) {
  if (order == 0) throw Error(Errc::Malformed, "cyclotomic order must be positive");
  std::vector<mpz_class> poly(order);
  for (const auto& [k, c] : exponent_counts) poly[k % order] += c;

  // Phi_n(x) = Phi_rad(x^(n/rad)): divide by a sparse monic polynomial.
  const std::uint64_t rad = radical(order);
  const std::uint64_t stride = order / rad;
  const auto& base = cyclotomic_polynomial(rad);
  const std::size_t degree = (base.size() - 1) * stride;
  for (std::size_t k = poly.size(); k-- > degree;) {
    const mpz_class c = poly[k];
    if (c == 0) continue;
    const std::size_t shift = k - degree;
    for (std::size_t j = 0; j < base.size(); ++j)
      if (base[j] != 0) poly[shift + j * stride] -= c * base[j];
  }
  poly.resize(degree);
  coeffs_ = std::move(poly);
}

}  // namespace wittsig
