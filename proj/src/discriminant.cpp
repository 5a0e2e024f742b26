#include "wittsig/discriminant.hpp"

#include <string>

#include "wittsig/error.hpp"
#include "wittsig/smith.hpp"
#include "wittsig/witt.hpp"

namespace wittsig {

namespace {

// q reduced into [0, m).
mpq_class reduce_mod(const mpq_class& q, const mpz_class& m) {
  mpz_class k;
  mpz_class scaled_den = q.get_den() * m;
  mpz_fdiv_q(k.get_mpz_t(), q.get_num().get_mpz_t(), scaled_den.get_mpz_t());
  mpq_class r = q - mpq_class(k * m);
  r.canonicalize();
  return r;
}

}  // namespace

mpz_class DiscriminantForm::order() const {
  mpz_class n = 1;
  for (const auto& d : orders) n *= d;
  return n;
}

DiscriminantForm discriminant_form(const IntegerSymmetricForm& f) {
  const std::size_t n = f.rank();
  const SmithForm snf = smith_normal_form(f.gram());
  const IntMatrix transformed = snf.right.transpose() * f.gram() * snf.right;

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (snf.diagonal(i, i) != 1) kept.push_back(i);

  DiscriminantForm d;
  const std::size_t k = kept.size();
  d.linking = RatMatrix(k, k);
  for (std::size_t a = 0; a < k; ++a) {
    const std::size_t i = kept[a];
    const mpz_class& di = snf.diagonal(i, i);
    d.orders.push_back(di);
    std::vector<mpq_class> g(n);
    for (std::size_t r = 0; r < n; ++r) {
      g[r] = mpq_class(snf.right(r, i), di);
      g[r].canonicalize();
    }
    d.generators.push_back(std::move(g));
    for (std::size_t b = 0; b < k; ++b) {
      const std::size_t j = kept[b];
      mpq_class v(transformed(i, j), di * snf.diagonal(j, j));
      v.canonicalize();
      d.linking(a, b) = reduce_mod(v, 1);
    }
    mpq_class self(transformed(i, i), di * di);
    self.canonicalize();
    d.quad_diag.push_back(reduce_mod(self, 2));
  }
  return d;
}

mpq_class linking_value(const DiscriminantForm& d, std::span<const mpz_class> x,
                        std::span<const mpz_class> y) {
  if (x.size() != d.rank() || y.size() != d.rank())
    throw Error(Errc::LengthMismatch, "coefficient vectors must have length " +
                                          std::to_string(d.rank()));
  mpq_class sum = 0;
  for (std::size_t i = 0; i < d.rank(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d.rank(); ++j) sum += x[i] * y[j] * d.linking(i, j);
  }
  return reduce_mod(sum, 1);
}

IntegerSymmetricForm overlattice_form(const IntegerSymmetricForm& f, const DiscriminantForm& d,
                                      const Subgroup& h) {
  const std::size_t n = f.rank();
  const mpz_class scale = d.exponent();
  IntMatrix gens(n, n + h.generators.size());
  for (std::size_t i = 0; i < n; ++i) gens(i, i) = scale;
  for (std::size_t c = 0; c < h.generators.size(); ++c) {
    const auto& coeffs = h.generators[c];
    if (coeffs.size() != d.rank())
      throw Error(Errc::LengthMismatch, "subgroup generator has wrong length");
    for (std::size_t r = 0; r < n; ++r) {
      mpq_class v = 0;
      for (std::size_t i = 0; i < d.rank(); ++i) v += coeffs[i] * d.generators[i][r];
      v *= scale;
      if (v.get_den() != 1) throw Error(Errc::Malformed, "representative not in (1/exponent)L");
      gens(r, n + c) = v.get_num();
    }
  }
  const IntMatrix basis = lattice_basis(gens);
  const IntMatrix gram = basis.transpose() * f.gram() * basis;
  const mpz_class denom = scale * scale;
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!mpz_divisible_p(gram(i, j).get_mpz_t(), denom.get_mpz_t()))
        throw Error(Errc::NotIsotropic, "b is not integral on the overlattice");
      out(i, j) = gram(i, j) / denom;
    }
  return IntegerSymmetricForm(std::move(out));
}

MainTheoremReport verify_main_theorem(const IntegerSymmetricForm& f, std::uint64_t group_bound) {
  MainTheoremReport r;
  r.is_even = is_even(f);
  r.det = f.determinant();
  r.det_odd = mpz_odd_p(r.det.get_mpz_t()) != 0;
  const auto diag = diagonalize(f);
  r.signature = sign_count(diag.entries);
  r.signature_mod_8 = ((r.signature % 8) + 8) % 8;
  r.boundary_zero = boundary_is_zero(witt_from_diagonal(diag.entries));

  if (abs(r.det) <= group_bound) {
    r.metabolizer_searched = true;
    r.metabolizer = find_metabolizer(discriminant_form(f), group_bound);
    r.vanishing_disagreement = r.metabolizer.has_value() != r.boundary_zero;
  }
  r.theorem_applies = r.is_even && r.det_odd && r.boundary_zero;
  r.conclusion_holds = r.signature_mod_8 == 0;
  return r;
}

}  // namespace wittsig
