#include <cmath>
#include <numbers>
#include <numeric>
#include <thread>

#include "wittsig/discriminant.hpp"
#include "wittsig/error.hpp"

namespace wittsig {

namespace {

using Counts = std::map<std::uint64_t, std::uint64_t>;

// Quadratic values are tracked as T = b(u,u) * E^2 mod 2E^2, E the group
// exponent, updated incrementally along an odometer over the coefficients.
struct Enumerator {
  std::vector<std::uint64_t> orders;
  std::vector<std::uint64_t> weights;  // k x k, symmetric
  std::uint64_t exponent = 1;
  std::uint64_t modulus = 2;  // 2 E^2

  std::uint64_t w(std::size_t i, std::size_t j) const { return weights[i * orders.size() + j]; }

  void walk(std::size_t level, std::uint64_t t, std::vector<std::uint64_t> lin, Counts& out) const {
    const std::size_t k = orders.size();
    if (level == k) {
      ++out[(t / exponent) % (2 * exponent)];
      return;
    }
    for (std::uint64_t c = 0; c < orders[level]; ++c) {
      walk(level + 1, t, lin, out);
      t = (t + 2 * lin[level] + w(level, level)) % modulus;
      for (std::size_t j = 0; j < k; ++j) lin[j] = (lin[j] + w(level, j)) % modulus;
    }
  }

  // Cosets whose first coefficient lies in [begin, end).
  Counts slice(std::uint64_t begin, std::uint64_t end) const {
    Counts out;
    const std::size_t k = orders.size();
    for (std::uint64_t c0 = begin; c0 < end; ++c0) {
      const auto c = static_cast<unsigned __int128>(c0);
      const std::uint64_t t = static_cast<std::uint64_t>(c * c * w(0, 0) % modulus);
      std::vector<std::uint64_t> lin(k);
      for (std::size_t j = 0; j < k; ++j)
        lin[j] = static_cast<std::uint64_t>(c * w(0, j) % modulus);
      walk(1, t, std::move(lin), out);
    }
    return out;
  }
};

std::uint64_t to_u64(const mpq_class& q) {
  if (q.get_den() != 1) throw Error(Errc::Malformed, "expected an integer weight");
  return q.get_num().get_ui();
}

}  // namespace

std::uint64_t GaussSumValue::total() const {
  std::uint64_t n = 0;
  for (const auto& [r, c] : terms) n += c;
  return n;
}

std::complex<long double> GaussSumValue::approx() const {
  std::complex<long double> sum = 0;
  for (const auto& [r, c] : terms) {
    const long double angle =
        std::numbers::pi_v<long double> * static_cast<long double>(r) / denominator;
    sum += static_cast<long double>(c) * std::polar(1.0L, angle);
  }
  return sum;
}

CyclotomicSum GaussSumValue::exact() const {
  std::map<std::uint64_t, mpz_class> counts;
  for (const auto& [r, c] : terms) counts[r] = mpz_class(static_cast<unsigned long>(c));
  return CyclotomicSum(2 * denominator, counts);
}

GaussSumValue gauss_sum(const IntegerSymmetricForm& f, std::uint64_t enum_bound, unsigned jobs) {
  if (!is_even(f)) throw Error(Errc::NotEven, "Gauss sum needs an even form");
  if (abs(f.determinant()) > enum_bound)
    throw Error(Errc::DeterminantTooLarge, "|det| = " + mpz_class(abs(f.determinant())).get_str() +
                                               " exceeds the enumeration bound");
  const DiscriminantForm d = discriminant_form(f);
  GaussSumValue value;
  const std::size_t k = d.rank();
  if (k == 0) {
    value.terms[0] = 1;
    return value;
  }

  Enumerator en;
  en.exponent = d.exponent().get_ui();
  const mpz_class e2 = d.exponent() * d.exponent();
  en.modulus = 2 * e2.get_ui();
  for (const auto& o : d.orders) en.orders.push_back(o.get_ui());
  en.weights.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      // Diagonal weights need b(g,g) mod 2; cross terms only enter doubled.
      const mpq_class base = i == j ? d.quad_diag[i] : d.linking(i, j);
      en.weights[i * k + j] = to_u64(base * e2) % en.modulus;
    }
  value.denominator = en.exponent;

  const std::uint64_t first = en.orders[0];
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(first)));
  if (jobs == 1) {
    value.terms = en.slice(0, first);
    return value;
  }
  std::vector<Counts> partial(jobs);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t begin = first * w / jobs, end = first * (w + 1) / jobs;
    workers.emplace_back([&, w, begin, end] { partial[w] = en.slice(begin, end); });
  }
  for (auto& t : workers) t.join();
  for (const auto& part : partial)
    for (const auto& [r, c] : part) value.terms[r] += c;
  return value;
}

GaussSumCheck check_gauss_sum(const IntegerSymmetricForm& f, std::uint64_t enum_bound,
                              unsigned jobs) {
  GaussSumCheck check;
  check.value = gauss_sum(f, enum_bound, jobs);
  check.signature = signature(f);

  const mpz_class abs_det = abs(f.determinant());
  const long double magnitude = std::sqrt(static_cast<long double>(abs_det.get_d()));
  const long double angle = 2 * std::numbers::pi_v<long double> * check.signature / 8;
  const auto predicted = std::polar(magnitude, angle);
  check.numeric_error = std::abs(check.value.approx() - predicted);
  check.numeric_match = check.numeric_error < kGaussTolerance;

  if (mpz_perfect_square_p(abs_det.get_mpz_t())) {
    const mpz_class root = sqrt(abs_det);
    const std::uint64_t two_n = 2 * check.value.denominator;
    const std::uint64_t order = std::lcm<std::uint64_t>(8, two_n);
    std::map<std::uint64_t, mpz_class> lhs;
    for (const auto& [r, c] : check.value.terms)
      lhs[r * (order / two_n)] += mpz_class(static_cast<unsigned long>(c));
    const long long step = static_cast<long long>(order / 8);
    const long long raw = static_cast<long long>(check.signature) * step;
    const long long m = static_cast<long long>(order);
    const auto exponent = static_cast<std::uint64_t>(((raw % m) + m) % m);
    check.exact_match = CyclotomicSum(order, lhs) == CyclotomicSum(order, {{exponent, root}});
  }
  return check;
}

bool gauss_sum_check(const IntegerSymmetricForm& f, std::uint64_t enum_bound) {
  return check_gauss_sum(f, enum_bound).holds();
}

}  // namespace wittsig
