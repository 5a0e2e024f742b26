#include "wittsig/smith.hpp"

#include <optional>

namespace wittsig {

namespace {

struct Position {
  std::size_t row, col;
};

// Smallest nonzero |entry| in the block starting at (t, t).
std::optional<Position> smallest_entry(const IntMatrix& a, std::size_t t) {
  std::optional<Position> best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      if (!best || mpz_cmpabs(a(i, j).get_mpz_t(), a(best->row, best->col).get_mpz_t()) < 0) best = Position{i, j};
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix left = IntMatrix::identity(m);
  IntMatrix right = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      const auto pos = smallest_entry(a, t);
      if (!pos) break;
      a.swap_rows(t, pos->row);
      left.swap_rows(t, pos->row);
      a.swap_cols(t, pos->col);
      right.swap_cols(t, pos->col);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_row(i, t, -q);
        left.add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_col(j, t, -q);
        right.add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and reduce again.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            a.add_row(t, i, 1);
            left.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < m; ++j) left(t, j) = -left(t, j);
    }
  }
  return {std::move(left), std::move(a), std::move(right)};
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  // Column echelon form by extended-gcd column operations.
  IntMatrix g = generators;
  const std::size_t m = g.rows(), n = g.cols();
  std::size_t next = 0;
  for (std::size_t i = 0; i < m && next < n; ++i) {
    for (std::size_t j = next + 1; j < n; ++j) {
      if (g(i, j) == 0) continue;
      if (g(i, next) == 0) {
        g.swap_cols(next, j);
        continue;
      }
      mpz_class d, s, t;
      mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g(i, next).get_mpz_t(),
                 g(i, j).get_mpz_t());
      const mpz_class a = g(i, next) / d, b = g(i, j) / d;
      // [c_next, c_j] <- [s c_next + t c_j, -b c_next + a c_j]; determinant 1.
      for (std::size_t r = 0; r < m; ++r) {
        const mpz_class x = g(r, next), y = g(r, j);
        g(r, next) = s * x + t * y;
        g(r, j) = a * y - b * x;
      }
    }
    if (g(i, next) != 0) ++next;
  }
  IntMatrix basis(m, next);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < next; ++c) basis(r, c) = g(r, c);
  return basis;
}

}  // namespace wittsig
