#include "wittsig/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "wittsig/error.hpp"

namespace wittsig {

namespace {

void validate(const SearchWindow& w, int sign) {
  if (sign != 1 && sign != -1) throw Error(Errc::InvalidWindow, "sign must be +1 or -1");
  for (const IntRange* r : {&w.p, &w.q, &w.r})
    if (r->lo > r->hi) throw Error(Errc::InvalidWindow, "range has lo > hi");
}

std::int64_t first_with_parity(std::int64_t lo, int parity) {
  return ((lo % 2) + 2) % 2 == parity ? lo : lo + 1;
}

std::int64_t isqrt(std::int64_t v) {
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

int mod8(std::int64_t v) { return static_cast<int>(((v % 8) + 8) % 8); }

std::vector<SolutionRecord> scan(const SearchWindow& w, int sign, bool dedup,
                                 const std::vector<std::int64_t>& ps) {
  std::vector<SolutionRecord> out;
  const std::int64_t q0 = first_with_parity(w.q.lo, 1);
  const std::int64_t r0 = first_with_parity(w.r.lo, 0);
  for (std::int64_t p : ps)
    for (std::int64_t q = q0; q <= w.q.hi; q += 2) {
      if (dedup && p > q) continue;
      for (std::int64_t r = r0; r <= w.r.hi; r += 2) {
        const std::int64_t value = sign * (p * q + p * r + q * r);
        if (value <= 0) continue;
        const std::int64_t m = isqrt(value);
        if (m * m != value || m % 2 == 0 || m > w.m_max) continue;
        out.push_back({p, q, r, m, sign, mod8(p + q)});
      }
    }
  return out;
}

}  // namespace

SearchWindow SearchWindow::symmetric(std::int64_t pq, std::int64_t r, std::int64_t m) {
  return {{-pq, pq}, {-pq, pq}, {-r, r}, m};
}

std::vector<SolutionRecord> search(const SearchWindow& w, int sign, SearchOptions options) {
  validate(w, sign);
  std::vector<std::int64_t> ps;
  for (std::int64_t p = first_with_parity(w.p.lo, 1); p <= w.p.hi; p += 2) ps.push_back(p);

  std::vector<SolutionRecord> out;
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, ps.size()));
  if (jobs <= 1) {
    out = scan(w, sign, options.dedup, ps);
  } else {
    std::vector<std::vector<SolutionRecord>> parts(jobs);
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      std::vector<std::int64_t> slice;
      for (std::size_t i = j; i < ps.size(); i += jobs) slice.push_back(ps[i]);
      workers.emplace_back([&, j, slice = std::move(slice)] {
        parts[j] = scan(w, sign, options.dedup, slice);
      });
    }
    for (auto& t : workers) t.join();
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_negative_restriction(const SearchWindow& w, unsigned jobs) {
  const auto records = search(w, -1, {jobs, false});
  return std::all_of(records.begin(), records.end(),
                     [](const SolutionRecord& s) { return s.p_plus_q_mod_8 == 0; });
}

std::set<int> residue_prefilter(int sign) {
  if (sign != 1 && sign != -1) throw Error(Errc::InvalidWindow, "sign must be +1 or -1");
  std::set<int> out;
  for (int p = 1; p < 8; p += 2)
    for (int q = 1; q < 8; q += 2)
      for (int r = 0; r < 8; r += 2)
        for (int m = 1; m < 8; m += 2)
          if (mod8(p * q + p * r + q * r - sign * m * m) == 0) out.insert(mod8(p + q));
  return out;
}

std::pair<SolutionRecord, SolutionRecord> witness_both_positive_residues(const SearchWindow& w) {
  const auto records = search(w, 1);
  auto two = std::find_if(records.begin(), records.end(),
                          [](const auto& s) { return s.p_plus_q_mod_8 == 2; });
  auto six = std::find_if(records.begin(), records.end(),
                          [](const auto& s) { return s.p_plus_q_mod_8 == 6; });
  if (two == records.end() || six == records.end())
    throw Error(Errc::NotFound, "window lacks a solution with residue 2 or 6");
  return {*two, *six};
}

}  // namespace wittsig
