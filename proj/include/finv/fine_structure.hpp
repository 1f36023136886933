#ifndef FINV_FINE_STRUCTURE_HPP
#define FINV_FINE_STRUCTURE_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "finv/motzkin.hpp"
#include "finv/permutation.hpp"

namespace finv
{

// Contiguous position window [lo, hi] whose image is a contiguous range.
struct Interval
{
  int lo;
  int hi;

  int size() const noexcept { return hi - lo + 1; }
  friend bool operator==(Interval const &, Interval const &) = default;
};

// The alpha / beta / gamma / delta partition of a pattern class, plus the
// single point.
enum class FineClass
{
  One,
  Type12,
  Type21,
  Simple,
  InflationOfSimple,
};

inline constexpr FineClass all_fine_classes[] = {
  FineClass::One, FineClass::Type12, FineClass::Type21, FineClass::Simple,
  FineClass::InflationOfSimple,
};

// "one", "type12", "type21", "simple", "inflation_of_simple"
std::string_view to_token(FineClass c) noexcept;
std::optional<FineClass> parse_fine_class(std::string_view token) noexcept;

// skeleton[blocks...] == source
struct Decomposition
{
  Permutation skeleton;
  std::vector<Permutation> blocks;
};

// Every interval with 2 <= size <= n - 1, ordered by lo then hi.
std::vector<Interval> proper_intervals(Permutation const &p);

// Simple of length > 2; 1, 12 and 21 are excluded.
bool is_simple(Permutation const &p);

// Also accepts the degenerate simples 1, 12 and 21.
bool is_simple_inclusive(Permutation const &p);

// Irreducible path, no two adjacent horizontal steps, and no up steps
// U_i U_{i+1} adjacent while D_i D_{i+1} are adjacent too. Lengths below 4
// are never simple. Throws Error(OutOfDomain) unless p is an involution
// avoiding 4321.
bool is_simple_via_path(Permutation const &p);

// Standardized restrictions to the finest partition into intervals A with
// p(A) = A, left to right.
std::vector<Permutation> connected_components(Permutation const &p);

bool is_sum_decomposable(Permutation const &p) noexcept;
bool is_skew_decomposable(Permutation const &p) noexcept;

// Throws Error(NotAnInvolution).
FineClass classify(Permutation const &p);

// Throws Error(Undecomposable) for n == 1.
Decomposition skeleton_decomposition(Permutation const &p);

// Throws Error(ArityMismatch).
Permutation inflate(Permutation const &skeleton, std::span<Permutation const> blocks);

// Inserts a horizontal step so that it becomes step number slot (1..n+1) of
// the unitary path of p. Throws Error(OutOfDomain) unless p is an involution
// avoiding 4321, Error(PositionOutOfRange) for a bad slot.
Permutation insert_fixed_point(Permutation const &p, int slot);

// Inserts one horizontal step between U_i and U_{i+1} for every pair of
// adjacent up steps whose partner down steps are adjacent as well. Throws
// Error(NotADyckPath) or Error(NotIrreducible).
LabelledMotzkinPath break_consecutiveness(LabelledMotzkinPath const &path);

// An involution of the form 21[1..k, 1..k] (middle == 0) or
// 321[1..k, 1..m, 1..k].
struct Type21NormalForm
{
  int outer;
  int middle;

  Permutation to_permutation() const;
  friend bool operator==(Type21NormalForm const &, Type21NormalForm const &) = default;
};

std::optional<Type21NormalForm> type21_normal_form(Permutation const &p);

// Plot connections of an involution, indexed by transposition rank i
// (0-based, transpositions sorted by their smaller element). Excedances
// i, i+1 are up-connected when adjacent in one-line notation; likewise the
// deficiencies for down-connected.
bool up_connected(CycleDecomposition const &cd, std::size_t i);
bool down_connected(CycleDecomposition const &cd, std::size_t i);

// Some i with both an upper and the symmetric lower connection.
bool has_symmetric_connection(Permutation const &p);

// Two adjacent positions that are both fixed.
bool has_adjacent_fixed_points(Permutation const &p) noexcept;

} // namespace finv

#endif
