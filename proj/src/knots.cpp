#include "wittsig/knots.hpp"

#include <string>

#include "wittsig/error.hpp"

namespace wittsig {

SeifertMatrix::SeifertMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.square()) throw Error(Errc::NotSquare, "Seifert matrix is not square");
  const std::size_t n = entries_.rows();
  IntMatrix skew(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) skew(i, j) = entries_(i, j) - entries_(j, i);
  const mpz_class d = bareiss_determinant(skew);
  if (d != 1)
    throw Error(Errc::InvalidSeifert, "det(xi - xi^T) = " + d.get_str() + ", expected 1");
}

SeifertMatrix SeifertMatrix::from_rows(const std::vector<std::vector<mpz_class>>& rows) {
  const std::size_t n = rows.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw Error(Errc::NotSquare, "row " + std::to_string(i) + " has the wrong length");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return SeifertMatrix(std::move(m));
}

SeifertMatrix SeifertMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<mpz_class>> big;
  for (const auto& row : rows) big.emplace_back(row.begin(), row.end());
  return from_rows(big);
}

SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  const std::size_t n = a.size(), m = b.size();
  IntMatrix e(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e(i, j) = a.entries()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) e(n + i, n + j) = b.entries()(i, j);
  return SeifertMatrix(std::move(e));
}

IntegerSymmetricForm symmetrize(const SeifertMatrix& s) {
  const std::size_t n = s.size();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = s.entries()(i, j) + s.entries()(j, i);
  return IntegerSymmetricForm(std::move(g));
}

int knot_signature(const SeifertMatrix& s) { return signature(symmetrize(s)); }

mpz_class knot_determinant(const SeifertMatrix& s) { return symmetrize(s).determinant(); }

namespace {

int murasugi_class_of(const mpz_class& det) {
  return mpz_fdiv_ui(mpz_class(abs(det)).get_mpz_t(), 4) == 1 ? 0 : 2;
}

bool congruent_mod4(int sigma, int cls) { return ((sigma % 4) + 4) % 4 == cls; }

}  // namespace

bool murasugi_check(const SeifertMatrix& s) {
  const auto f = symmetrize(s);
  return congruent_mod4(signature(f), murasugi_class_of(f.determinant()));
}

KnotReport analyze_knot(const SeifertMatrix& s) {
  const auto form = symmetrize(s);
  const auto diag = diagonalize(form);
  KnotReport r;
  r.signature = sign_count(diag.entries);
  r.determinant = form.determinant();
  r.murasugi_class = murasugi_class_of(r.determinant);
  r.murasugi_holds = congruent_mod4(r.signature, r.murasugi_class);
  r.witt_class = witt_from_diagonal(diag.entries);
  r.boundary_zero = boundary_is_zero(r.witt_class);
  if (r.boundary_zero) r.signature_mod_8 = ((r.signature % 8) + 8) % 8;
  return r;
}

PretzelKnot::PretzelKnot(std::int64_t p, std::int64_t q, std::int64_t r) : p_(p), q_(q), r_(r) {
  if (p % 2 == 0 || q % 2 == 0 || r % 2 != 0)
    throw Error(Errc::DegenerateParameter, "pretzel knot needs p, q odd and r even");
  if (pretzel_determinant(*this) == 0)
    throw Error(Errc::DegenerateParameter, "pq + pr + qr = 0");
}

mpz_class pretzel_determinant(const PretzelKnot& k) {
  const mpz_class p = static_cast<long>(k.p()), q = static_cast<long>(k.q()),
                  r = static_cast<long>(k.r());
  return p * q + p * r + q * r;
}

WittClassQ pretzel_witt_class(const PretzelKnot& k) {
  if (k.r() == 0) throw Error(Errc::DegenerateParameter, "r = 0 gives the entry <0>");
  const mpz_class p = static_cast<long>(k.p()), q = static_cast<long>(k.q()),
                  r = static_cast<long>(k.r());
  const std::vector<mpz_class> entries{p, q, r, p * q * r};
  return WittClassQ::from_integers(entries);
}

int pretzel_signature(const PretzelKnot& k) {
  const mpz_class p = static_cast<long>(k.p()), q = static_cast<long>(k.q());
  const mpz_class sum = p + q;
  if (sum == 0) throw Error(Errc::DegenerateParameter, "p + q = 0 leaves Sign(0) undefined");
  const mpz_class det = pretzel_determinant(k);
  const int sigma = -static_cast<int>(sum.get_si()) + sgn(p) + sgn(q) - sgn(p * q * sum) +
                    sgn(sum * det);
  return sigma;
}

}  // namespace wittsig
