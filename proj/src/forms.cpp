#include "wittsig/forms.hpp"

#include <numeric>
#include <string>

#include "wittsig/error.hpp"

namespace wittsig {

mpz_class bareiss_determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntegerSymmetricForm::IntegerSymmetricForm(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.square()) throw Error(Errc::NotSquare, "Gram matrix is not square");
  const std::size_t n = gram_.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram_(i, j) != gram_(j, i))
        throw Error(Errc::NotSymmetric, "Gram matrix is not symmetric at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
  det_ = bareiss_determinant(gram_);
  if (det_ == 0) throw Error(Errc::Degenerate, "Gram matrix has determinant 0");
}

IntegerSymmetricForm form_from_rows(const std::vector<std::vector<mpz_class>>& rows) {
  const std::size_t n = rows.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw Error(Errc::NotSquare, "row " + std::to_string(i) + " has " +
                                       std::to_string(rows[i].size()) + " entries, expected " +
                                       std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return IntegerSymmetricForm(std::move(m));
}

IntegerSymmetricForm form_from_rows(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<mpz_class>> big;
  big.reserve(rows.size());
  for (const auto& row : rows) big.emplace_back(row.begin(), row.end());
  return form_from_rows(big);
}

mpz_class determinant(const IntegerSymmetricForm& f) { return f.determinant(); }

bool is_even(const IntegerSymmetricForm& f) {
  for (std::size_t i = 0; i < f.rank(); ++i)
    if (mpz_odd_p(f(i, i).get_mpz_t())) return false;
  return true;
}

namespace {

// Works on a copy of the Gram matrix with pivot preference given by `order`.
DiagonalRationalForm eliminate(const IntegerSymmetricForm& f, std::span<const std::size_t> order) {
  const std::size_t n = f.rank();
  // Reorder the basis first so that the default policy (smallest index)
  // realizes the requested preference; the permutation is folded into P.
  RatMatrix perm(n, n);
  for (std::size_t i = 0; i < n; ++i) perm(i, order[i]) = 1;
  RatMatrix b = perm * to_rational(f.gram()) * perm.transpose();
  RatMatrix p = perm;

  std::vector<mpq_class> entries;
  entries.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && b(pivot, pivot) == 0) ++pivot;
    if (pivot == n) {
      std::size_t partner = k + 1;
      while (partner < n && b(k, partner) == 0) ++partner;
      if (partner == n) throw Error(Errc::Degenerate, "form is degenerate");
      // e_k -> e_k + e_partner
      b.add_row(k, partner, 1);
      b.add_col(k, partner, 1);
      p.add_row(k, partner, 1);
    } else if (pivot != k) {
      b.swap_rows(k, pivot);
      b.swap_cols(k, pivot);
      p.swap_rows(k, pivot);
    }
    const mpq_class head = b(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (b(i, k) == 0) continue;
      const mpq_class factor = -b(i, k) / head;
      b.add_row(i, k, factor);
      b.add_col(i, k, factor);
      p.add_row(i, k, factor);
    }
    entries.push_back(head);
  }
  return {std::move(entries), std::move(p)};
}

}  // namespace

DiagonalRationalForm diagonalize(const IntegerSymmetricForm& f) {
  std::vector<std::size_t> order(f.rank());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return eliminate(f, order);
}

DiagonalRationalForm diagonalize(const IntegerSymmetricForm& f,
                                 std::span<const std::size_t> pivot_order) {
  const std::size_t n = f.rank();
  if (pivot_order.size() != n)
    throw Error(Errc::LengthMismatch, "pivot order length differs from rank");
  std::vector<bool> seen(n, false);
  for (std::size_t i : pivot_order) {
    if (i >= n || seen[i]) throw Error(Errc::Malformed, "pivot order is not a permutation");
    seen[i] = true;
  }
  return eliminate(f, pivot_order);
}

int sign_count(std::span<const mpq_class> entries) {
  int s = 0;
  for (const auto& a : entries) s += sgn(a);
  return s;
}

int signature(const IntegerSymmetricForm& f) { return sign_count(diagonalize(f).entries); }

IntegerSymmetricForm direct_sum(const IntegerSymmetricForm& a, const IntegerSymmetricForm& b) {
  const std::size_t n = a.rank(), m = b.rank();
  IntMatrix g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b(i, j);
  return IntegerSymmetricForm(std::move(g));
}

FormReport report(const IntegerSymmetricForm& f) {
  return {f.rank(), f.determinant(), signature(f), is_even(f)};
}

}  // namespace wittsig
