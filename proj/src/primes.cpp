#include <algorithm>
#include <map>

#include "wittsig/error.hpp"
#include "wittsig/witt.hpp"

namespace wittsig {

namespace {

constexpr unsigned long kTrialLimit = 1'000'000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin_round(const mpz_class& n, const mpz_class& d, unsigned s, unsigned long base) {
  mpz_class a = base;
  mpz_class x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const mpz_class minus_one = n - 1;
  if (x == 1 || x == minus_one) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == minus_one) return true;
  }
  return false;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Brent's variant; returns a nontrivial factor of the composite n.
mpz_class pollard_brent(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto step = [&](const mpz_class& v) -> mpz_class { return (v * v + c) % n; };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const mpz_class f = pollard_brent(n);
  split(f, out);
  split(n / f, out);
}

}  // namespace

mpz_class PrimeFactorization::product() const {
  mpz_class p = 1;
  for (const auto& [prime, e] : factors) {
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), prime.get_mpz_t(), e);
    p *= power;
  }
  return p;
}

const mpz_class& primality_limit() {
  static const mpz_class limit("3317044064679887385961981");
  return limit;
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  static constexpr unsigned long kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long b : kBases) {
    if (n == b) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
  }
  if (n >= primality_limit())
    throw Error(Errc::NumberTooLarge,
                "primality of " + n.get_str() + " exceeds the deterministic Miller-Rabin range");
  mpz_class d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  for (unsigned long b : kBases)
    if (!miller_rabin_round(n, d, s, b)) return false;
  return true;
}

PrimeFactorization factorize(const mpz_class& n) {
  if (n == 0) throw Error(Errc::ZeroEntry, "cannot factorize 0");
  mpz_class rest = abs(n);
  std::map<mpz_class, unsigned> found;
  for (unsigned long p : small_primes()) {
    if (mpz_cmp_ui(rest.get_mpz_t(), p * p) < 0) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e) found[mpz_class(p)] = e;
  }
  if (rest != 1) {
    // No factor <= 10^6 remains, so anything below 10^12 is prime.
    static const mpz_class kProvenPrimeBelow = mpz_class(kTrialLimit) * kTrialLimit;
    if (rest < kProvenPrimeBelow)
      ++found[rest];
    else
      split(rest, found);
  }
  PrimeFactorization out;
  out.factors.assign(found.begin(), found.end());
  return out;
}

mpz_class squarefree_part(const mpz_class& n) {
  mpz_class s = sgn(n) < 0 ? -1 : 1;
  for (const auto& [p, e] : factorize(n).factors)
    if (e % 2) s *= p;
  return s;
}

bool quadratic_residue(const mpz_class& u, const mpz_class& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()))
    throw Error(Errc::NotPrime, "quadratic_residue needs an odd prime, got " + p.get_str());
  mpz_class r = u % p;
  if (r < 0) r += p;
  if (gcd(r, p) != 1) throw Error(Errc::NotCoprime, u.get_str() + " is not coprime to " + p.get_str());
  mpz_class e = (p - 1) / 2, x;
  mpz_powm(x.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return x == 1;
}

}  // namespace wittsig
