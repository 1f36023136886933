#ifndef FINV_PERMUTATION_HPP
#define FINV_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace finv
{

// A permutation of {1..n} in one-line notation, n >= 1. All positions and
// values are 1-indexed.
class Permutation
{
public:
  // Throws Error(NotABijection) unless values is a bijection on {1..n}
  // with n >= 1.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values))
  {}

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(_values.size()); }

  // Value at 1-indexed position i.
  int operator()(int i) const { return _values[static_cast<std::size_t>(i - 1)]; }

  std::span<int const> values() const noexcept { return _values; }

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<int> values) : _values(std::move(values)) {}

  friend Permutation standardize(std::span<int const> values);

  std::vector<int> _values;
};

Permutation make_permutation(std::span<int const> values);

// The permutation order-isomorphic to a sequence of distinct integers.
Permutation standardize(std::span<int const> values);

// Accepts "468152937", "4 6 8 1 5 2 9 3 7", "4,6,8", and "529416(10)837".
// Throws Error(Parse) or Error(NotABijection).
Permutation parse_permutation(std::string_view text);

// Space separated, e.g. "4 6 8 1 5 2 9 3 7".
std::string to_string(Permutation const &p);

// Contiguous digits when n <= 9, otherwise space separated. Used for
// pattern names such as "4321".
std::string to_compact_string(Permutation const &p);

bool is_involution(Permutation const &p) noexcept;

struct Transposition
{
  int lo; // m_i, an excedance position
  int hi; // M_i, the matching deficiency position

  friend bool operator==(Transposition const &, Transposition const &) = default;
};

struct CycleDecomposition
{
  int length = 0;
  std::vector<Transposition> transpositions; // sorted by lo
  std::vector<int> fixed_points;             // ascending

  Permutation to_permutation() const;
};

// Throws Error(NotAnInvolution).
CycleDecomposition cycle_decomposition(Permutation const &p);

// True iff some subsequence of p is order-isomorphic to pattern.
bool contains_pattern(Permutation const &p, Permutation const &pattern);

bool avoids_all(Permutation const &p, std::span<Permutation const> patterns);

// q(i) = n + 1 - p(n + 1 - i)
Permutation reverse_complement(Permutation const &p);

enum class PositionRole
{
  Excedance,
  Deficiency,
  Fixed,
};

std::vector<PositionRole> position_roles(Permutation const &p);

int fixed_point_count(Permutation const &p) noexcept;

} // namespace finv

#endif
