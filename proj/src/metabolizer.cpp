#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "wittsig/discriminant.hpp"
#include "wittsig/error.hpp"
#include "wittsig/witt.hpp"

namespace wittsig {

namespace {

// Explicit enumeration of a small G = Z/d_1 + ... + Z/d_k. Elements are
// indexed in mixed radix with the first coordinate varying fastest.
class SmallGroup {
 public:
  SmallGroup(const DiscriminantForm& d, std::uint64_t bound) {
    const mpz_class size = d.order();
    if (size > bound)
      throw Error(Errc::GroupTooLarge, "discriminant group has order " + size.get_str() +
                                           " > bound " + std::to_string(bound));
    size_ = size.get_ui();
    for (const auto& o : d.orders) orders_.push_back(o.get_ui());
    exponent_ = orders_.empty() ? 1 : orders_.back();
    const std::size_t k = orders_.size();
    linking_.assign(k * k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const mpq_class scaled = d.linking(i, j) * exponent_;
        linking_[i * k + j] = mpz_class(scaled.get_num() / scaled.get_den()).get_ui();
      }
    coords_.resize(size_ * k);
    dual_.resize(size_ * k);
    for (std::uint64_t e = 0; e < size_; ++e) {
      std::uint64_t rest = e;
      for (std::size_t i = 0; i < k; ++i) {
        coords_[e * k + i] = rest % orders_[i];
        rest /= orders_[i];
      }
      // exponent * lambda(e, g_j) mod exponent
      for (std::size_t j = 0; j < k; ++j) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < k; ++i)
          v = (v + coords_[e * k + i] * linking_[i * k + j]) % exponent_;
        dual_[e * k + j] = v;
      }
    }
  }

  std::uint64_t size() const { return size_; }
  std::size_t rank() const { return orders_.size(); }
  const std::uint64_t* coords(std::uint64_t e) const { return &coords_[e * rank()]; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t index = 0, radix = 1;
    const auto* x = coords(a);
    const auto* y = coords(b);
    for (std::size_t i = 0; i < rank(); ++i) {
      index += ((x[i] + y[i]) % orders_[i]) * radix;
      radix *= orders_[i];
    }
    return index;
  }

  // exponent * lambda(a, b) mod exponent
  std::uint64_t pairing(std::uint64_t a, std::uint64_t b) const {
    const auto* x = coords(b);
    const auto* row = &dual_[a * rank()];
    std::uint64_t sum = 0;
    for (std::size_t j = 0; j < rank(); ++j) sum += row[j] * x[j];
    return sum % exponent_;
  }

  std::uint64_t basis_element(std::size_t i) const {
    std::uint64_t radix = 1;
    for (std::size_t j = 0; j < i; ++j) radix *= orders_[j];
    return radix;
  }

  std::uint64_t element_order(std::uint64_t e) const {
    const auto* x = coords(e);
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < rank(); ++i)
      order = std::lcm(order, orders_[i] / std::gcd(x[i], orders_[i]));
    return order;
  }

  std::vector<mpz_class> coefficient_vector(std::uint64_t e) const {
    const auto* x = coords(e);
    return std::vector<mpz_class>(x, x + rank());
  }

 private:
  std::uint64_t size_ = 1;
  std::uint64_t exponent_ = 1;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint64_t> linking_;
  std::vector<std::uint64_t> coords_;
  std::vector<std::uint64_t> dual_;
};

class MetabolizerSearch {
 public:
  MetabolizerSearch(const SmallGroup& g, std::vector<std::uint64_t> candidates,
                    std::uint64_t target)
      : g_(g), target_(target), candidates_(std::move(candidates)), stamp_(g.size(), 0) {}

  std::optional<std::vector<std::uint64_t>> run() {
    std::vector<char> member(g_.size(), 0);
    member[0] = 1;
    std::vector<std::uint64_t> elements{0};
    if (extend(elements, member, candidates_, 0)) return tuple_;
    return std::nullopt;
  }

 private:
  // Depth-first over isotropic subgroups. Each subgroup is expanded once and
  // `candidates` holds the isotropic elements orthogonal to the current one.
  bool extend(const std::vector<std::uint64_t>& elements, const std::vector<char>& member,
              const std::vector<std::uint64_t>& candidates, std::size_t depth) {
    if (elements.size() == target_) return true;
    if (skip_.size() <= depth) skip_.emplace_back(g_.size(), 0);
    std::vector<std::uint64_t> skipped;
    bool found = false;
    for (const std::uint64_t x : candidates) {
      if (member[x] || skip_[depth][x]) continue;
      // H + <x> as the union of cosets H + j x, j = 0 .. k-1.
      ++epoch_;
      std::vector<std::uint64_t> grown = elements;
      std::vector<std::uint64_t> coset = elements;
      for (;;) {
        for (auto& e : coset) e = g_.add(e, x);
        if (member[coset.front()] || stamp_[coset.front()] == epoch_) break;
        for (auto e : coset) stamp_[e] = epoch_;
        grown.insert(grown.end(), coset.begin(), coset.end());
      }
      // j x + h generates the same subgroup when gcd(j, k) = 1.
      const std::size_t h = elements.size();
      const std::uint64_t k = grown.size() / h;
      for (std::uint64_t j = 1; j < k; ++j)
        if (std::gcd(j, k) == 1)
          for (std::size_t i = 0; i < h; ++i) {
            skip_[depth][grown[j * h + i]] = 1;
            skipped.push_back(grown[j * h + i]);
          }
      if (grown.size() > target_) continue;
      std::vector<std::uint64_t> key = grown;
      std::sort(key.begin(), key.end());
      if (!visited_.insert(std::move(key)).second) continue;
      std::vector<char> grown_member = member;
      for (std::size_t i = h; i < grown.size(); ++i) grown_member[grown[i]] = 1;
      std::vector<std::uint64_t> next;
      for (const std::uint64_t c : candidates)
        if (!grown_member[c] && g_.pairing(c, x) == 0) next.push_back(c);
      tuple_.push_back(x);
      if (extend(grown, grown_member, next, depth + 1)) {
        found = true;
        break;
      }
      tuple_.pop_back();
    }
    for (auto e : skipped) skip_[depth][e] = 0;
    return found;
  }

  const SmallGroup& g_;
  std::uint64_t target_;
  std::vector<std::uint64_t> candidates_;
  std::vector<std::uint64_t> tuple_;
  std::set<std::vector<std::uint64_t>> visited_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  std::vector<std::vector<char>> skip_;
};

}  // namespace

bool is_nondegenerate(const DiscriminantForm& d, std::uint64_t bound) {
  const SmallGroup g(d, bound);
  for (std::uint64_t x = 1; x < g.size(); ++x) {
    bool pairs = false;
    for (std::size_t i = 0; i < g.rank() && !pairs; ++i)
      pairs = g.pairing(x, g.basis_element(i)) != 0;
    if (!pairs) return false;
  }
  return true;
}

std::optional<Subgroup> find_metabolizer(const DiscriminantForm& d, std::uint64_t bound) {
  const SmallGroup g(d, bound);
  const std::uint64_t root = mpz_class(sqrt(mpz_class(g.size()))).get_ui();
  if (root * root != g.size()) return std::nullopt;

  // H is the sum of its primary parts, which are mutually orthogonal, and
  // |H|^2 = |G| holds prime by prime. Search each primary part separately.
  Subgroup h;
  h.order = root;
  for (const auto& [p, e] : factorize(mpz_class(g.size())).factors) {
    const std::uint64_t prime = p.get_ui();
    std::uint64_t part = 1;
    for (unsigned i = 0; i < e; ++i) part *= prime;
    std::uint64_t target = 1;
    for (unsigned i = 0; i < e / 2; ++i) target *= prime;
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t x = 1; x < g.size(); ++x)
      if (part % g.element_order(x) == 0 && g.pairing(x, x) == 0) candidates.push_back(x);
    MetabolizerSearch search(g, std::move(candidates), target);
    auto tuple = search.run();
    if (!tuple) return std::nullopt;
    for (auto x : *tuple) h.generators.push_back(g.coefficient_vector(x));
  }
  return h;
}

}  // namespace wittsig
