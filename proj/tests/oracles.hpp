// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library under test beyond constructing values.

#ifndef FINV_TESTS_ORACLES_HPP
#define FINV_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle
{

using Seq = std::vector<int>;

inline Seq from_digits(std::string const &s)
{
  Seq v;
  for (char c : s)
    v.push_back(c - '0');
  return v;
}

inline std::vector<Seq> all_permutations(int n)
{
  Seq v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Seq> out;
  do
    out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Pair the smallest unassigned position with itself or with a larger one.
inline void for_each_involution(int n, std::function<void(Seq const &)> const &visit)
{
  Seq v(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    while (i <= n && v[i - 1] != 0)
      ++i;
    if (i > n) {
      visit(v);
      return;
    }
    v[i - 1] = i;
    rec(i + 1);
    v[i - 1] = 0;
    for (int j = i + 1; j <= n; ++j) {
      if (v[j - 1] != 0)
        continue;
      v[i - 1] = j;
      v[j - 1] = i;
      rec(i + 1);
      v[i - 1] = 0;
      v[j - 1] = 0;
    }
  };
  rec(1);
}

inline std::vector<Seq> all_involutions(int n)
{
  std::vector<Seq> out;
  for_each_involution(n, [&](Seq const &v) { out.push_back(v); });
  return out;
}

inline Seq standardized(Seq const &v)
{
  Seq sorted = v;
  std::sort(sorted.begin(), sorted.end());
  Seq out;
  for (int x : v)
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) -
                                   sorted.begin()) + 1);
  return out;
}

// Every index subset of the pattern's size, compared after standardization.
inline bool contains(Seq const &p, Seq const &pattern)
{
  int const n = static_cast<int>(p.size());
  int const k = static_cast<int>(pattern.size());
  if (k > n)
    return false;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Seq sub;
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)])
        sub.push_back(p[static_cast<std::size_t>(i)]);
    if (standardized(sub) == pattern)
      return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

inline bool avoids(Seq const &p, std::vector<Seq> const &patterns)
{
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](Seq const &q) { return contains(p, q); });
}

// Windows [lo, hi] (1-indexed) whose value set is a run of consecutive
// integers, 2 <= size <= n - 1.
inline std::vector<std::pair<int, int>> proper_intervals(Seq const &p)
{
  int const n = static_cast<int>(p.size());
  std::vector<std::pair<int, int>> out;
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo + 1; hi <= n; ++hi) {
      if (hi - lo + 1 == n)
        continue;
      std::set<int> values(p.begin() + lo - 1, p.begin() + hi);
      if (*values.rbegin() - *values.begin() == hi - lo)
        out.emplace_back(lo, hi);
    }
  return out;
}

inline bool simple(Seq const &p) { return p.size() >= 4 && proper_intervals(p).empty(); }

// Block boundaries where the prefix is mapped onto itself.
inline std::vector<Seq> components(Seq const &p)
{
  std::vector<Seq> out;
  Seq block;
  int hi = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    block.push_back(p[i]);
    hi = std::max(hi, p[i]);
    if (hi == static_cast<int>(i + 1)) {
      out.push_back(standardized(block));
      block.clear();
    }
  }
  return out;
}

inline bool skew_decomposable(Seq const &p)
{
  int const n = static_cast<int>(p.size());
  for (int k = 1; k < n; ++k) {
    int lo = n + 1;
    for (int i = 0; i < k; ++i)
      lo = std::min(lo, p[static_cast<std::size_t>(i)]);
    if (lo == n - k + 1)
      return true;
  }
  return false;
}

inline int fixed_points(Seq const &p)
{
  int k = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    k += p[i] == static_cast<int>(i + 1);
  return k;
}

inline Seq reverse_complement(Seq const &p)
{
  int const n = static_cast<int>(p.size());
  Seq q(p.size());
  for (int i = 1; i <= n; ++i)
    q[static_cast<std::size_t>(i - 1)] = n + 1 - p[static_cast<std::size_t>(n - i)];
  return q;
}

// Forward labels read literally from the cycle notation: write the cycles
// ordered by smallest element, fixed points as 1-cycles; the label of the
// second element i of a transposition is its position among the entries
// >= i, counted from the left.
inline std::vector<int> cycle_notation_labels(Seq const &p)
{
  std::vector<int> listing;
  for (int i = 1; i <= static_cast<int>(p.size()); ++i) {
    int const j = p[static_cast<std::size_t>(i - 1)];
    if (j == i) {
      listing.push_back(i);
    } else if (j > i) {
      listing.push_back(i);
      listing.push_back(j);
    }
  }
  std::vector<int> labels;
  for (int i = 1; i <= static_cast<int>(p.size()); ++i) {
    if (p[static_cast<std::size_t>(i - 1)] >= i)
      continue;
    int position = 0;
    for (int x : listing) {
      if (x >= i)
        ++position;
      if (x == i)
        break;
    }
    labels.push_back(position);
  }
  return labels;
}

inline std::vector<std::uint64_t> motzkin_numbers(int n_max)
{
  std::vector<std::uint64_t> m{1, 1};
  for (int n = 2; n <= n_max; ++n) {
    std::uint64_t v = m[static_cast<std::size_t>(n - 1)];
    for (int k = 0; k <= n - 2; ++k)
      v += m[static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(n - 2 - k)];
    m.push_back(v);
  }
  return m;
}

inline std::vector<std::uint64_t> involution_numbers(int n_max)
{
  std::vector<std::uint64_t> a{1, 1};
  for (int n = 2; n <= n_max; ++n)
    a.push_back(a[static_cast<std::size_t>(n - 1)] +
                static_cast<std::uint64_t>(n - 1) * a[static_cast<std::size_t>(n - 2)]);
  return a;
}

} // namespace oracle

#endif
