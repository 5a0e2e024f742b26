#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace wittsig {

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

// p, q run over the odd and r over the even integers of their ranges;
// m over odd 1..m_max. A range with lo > hi is rejected; a range holding no
// integer of the right parity is a valid, empty window.
struct SearchWindow {
  IntRange p, q, r;
  std::int64_t m_max = 0;

  // |p|, |q| <= pq, |r| <= r, m <= m.
  static SearchWindow symmetric(std::int64_t pq, std::int64_t r, std::int64_t m);
};

struct SolutionRecord {
  std::int64_t p = 0, q = 0, r = 0, m = 0;
  int sign = 0;
  int p_plus_q_mod_8 = 0;

  auto operator<=>(const SolutionRecord&) const = default;
};

struct SearchOptions {
  unsigned jobs = 1;
  // Keep only records with p <= q.
  bool dedup = false;
};

// Every (p, q, r) in the window with pq + pr + qr = sign * m^2, m odd and
// m <= m_max; sorted lexicographically.
std::vector<SolutionRecord> search(const SearchWindow& w, int sign, SearchOptions options = {});

// Every sign = -1 solution in the window has p + q = 0 mod 8.
bool verify_negative_restriction(const SearchWindow& w, unsigned jobs = 1);

// Residues of p + q mod 8 compatible with pq + pr + qr = sign * m^2 mod 8
// for p, q, m odd and r even.
std::set<int> residue_prefilter(int sign);

// One sign = +1 solution with p + q = 2 mod 8 and one with 6 mod 8.
// Throws NotFound when the window lacks either.
std::pair<SolutionRecord, SolutionRecord> witness_both_positive_residues(const SearchWindow& w);

}  // namespace wittsig
