#include <algorithm>
#include <set>

#include "wittsig/error.hpp"
#include "wittsig/witt.hpp"

namespace wittsig {

WittClassQ WittClassQ::from_diagonal(std::span<const mpq_class> entries) {
  WittClassQ c;
  c.entries_.reserve(entries.size());
  for (const auto& a : entries) {
    if (a == 0) throw Error(Errc::ZeroEntry, "Witt class entry is zero");
    // <a/b> = <ab (1/b)^2>
    c.entries_.push_back(squarefree_part(a.get_num() * a.get_den()));
  }
  return c;
}

WittClassQ WittClassQ::from_integers(std::span<const mpz_class> entries) {
  WittClassQ c;
  c.entries_.reserve(entries.size());
  for (const auto& a : entries) {
    if (a == 0) throw Error(Errc::ZeroEntry, "Witt class entry is zero");
    c.entries_.push_back(squarefree_part(a));
  }
  return c;
}

int WittClassQ::signature() const {
  int s = 0;
  for (const auto& a : entries_) s += sgn(a);
  return s;
}

WittClassQ WittClassQ::negated() const {
  WittClassQ c = *this;
  for (auto& a : c.entries_) a = -a;
  return c;
}

WittClassQ operator+(const WittClassQ& a, const WittClassQ& b) {
  WittClassQ c = a;
  c.entries_.insert(c.entries_.end(), b.entries_.begin(), b.entries_.end());
  return c;
}

WittClassQ witt_from_diagonal(std::span<const mpq_class> entries) {
  return WittClassQ::from_diagonal(entries);
}

FiniteWittClass::FiniteWittClass(mpz_class prime) : prime_(std::move(prime)) {
  if (prime_ != 2) minus_one_square_ = mpz_fdiv_ui(prime_.get_mpz_t(), 4) == 1;
}

FiniteWittClass FiniteWittClass::from_diagonal(const mpz_class& prime,
                                               std::span<const mpz_class> units) {
  FiniteWittClass c(prime);
  for (const auto& u : units) c.add_unit(u);
  return c;
}

void FiniteWittClass::add_unit(const mpz_class& u) {
  if (mpz_divisible_p(u.get_mpz_t(), prime_.get_mpz_t()))
    throw Error(Errc::NotCoprime, u.get_str() + " is zero modulo " + prime_.get_str());
  if (prime_ != 2) {
    // d(x + <u>) = d(x) * u * (-1)^rank(x)
    bool square = disc_square_ == quadratic_residue(u, prime_);
    if (rank_parity_ == 1 && !minus_one_square_) square = !square;
    disc_square_ = square;
  }
  rank_parity_ ^= 1;
}

FiniteWittClass finite_witt_add(const FiniteWittClass& x, const FiniteWittClass& y) {
  if (x.prime() != y.prime())
    throw Error(Errc::PrimeMismatch,
                "cannot add classes over F_" + x.prime().get_str() + " and F_" + y.prime().get_str());
  FiniteWittClass out = x;
  out.rank_parity_ = x.rank_parity_ ^ y.rank_parity_;
  if (x.prime_ != 2) {
    bool square = x.disc_square_ == y.disc_square_;
    if (x.rank_parity_ == 1 && y.rank_parity_ == 1 && !x.minus_one_square_) square = !square;
    out.disc_square_ = square;
  }
  return out;
}

bool finite_witt_is_zero(const FiniteWittClass& x) { return x.zero(); }

namespace {

// Splits a = u * p^n with u coprime to p; returns n.
long strip(mpz_class& a, const mpz_class& p) {
  long n = 0;
  while (a != 0 && mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    ++n;
  }
  return n;
}

void require_prime(const mpz_class& p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, p.get_str() + " is not prime");
}

}  // namespace

FiniteWittClass boundary_of_rational(const mpq_class& a, const mpz_class& p) {
  require_prime(p);
  if (a == 0) throw Error(Errc::ZeroEntry, "Witt class entry is zero");
  mpz_class num = a.get_num(), den = a.get_den();
  const long n = strip(num, p) - strip(den, p);
  FiniteWittClass c(p);
  if (n % 2 != 0) c.add_unit(num * den);
  return c;
}

FiniteWittClass boundary_at_prime(const WittClassQ& c, const mpz_class& p) {
  require_prime(p);
  FiniteWittClass out(p);
  for (const auto& a : c.entries()) {
    mpz_class u = a;
    if (strip(u, p) % 2 != 0) out.add_unit(u);
  }
  return out;
}

std::vector<mpz_class> relevant_primes(const WittClassQ& c) {
  std::set<mpz_class> primes;
  for (const auto& a : c.entries())
    for (const auto& [p, e] : factorize(a).factors)
      if (e % 2) primes.insert(p);
  return {primes.begin(), primes.end()};
}

std::vector<FiniteWittClass> boundary_table(const WittClassQ& c) {
  std::vector<FiniteWittClass> out;
  for (const auto& p : relevant_primes(c)) out.push_back(boundary_at_prime(c, p));
  return out;
}

bool boundary_is_zero(const WittClassQ& c) {
  const auto table = boundary_table(c);
  return std::all_of(table.begin(), table.end(), [](const auto& x) { return x.zero(); });
}

bool witt_q_is_zero(const WittClassQ& c) { return c.signature() == 0 && boundary_is_zero(c); }

bool witt_q_equal(const WittClassQ& a, const WittClassQ& b) {
  return witt_q_is_zero(a + b.negated());
}

}  // namespace wittsig
