#include "finv/fine_structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "finv/error.hpp"

namespace finv
{

namespace
{

Permutation const &pattern_4321()
{
  static Permutation const p{4, 3, 2, 1};
  return p;
}

bool is_interval(Permutation const &p, int lo, int hi)
{
  int mn = p(lo), mx = p(lo);
  for (int i = lo + 1; i <= hi; ++i) {
    mn = std::min(mn, p(i));
    mx = std::max(mx, p(i));
  }
  return mx - mn == hi - lo;
}

Permutation restrict_to(Permutation const &p, int lo, int hi)
{
  return standardize(p.values().subspan(static_cast<std::size_t>(lo - 1),
                                        static_cast<std::size_t>(hi - lo + 1)));
}

} // anonymous namespace

std::string_view to_token(FineClass c) noexcept
{
  switch (c) {
  case FineClass::One: return "one";
  case FineClass::Type12: return "type12";
  case FineClass::Type21: return "type21";
  case FineClass::Simple: return "simple";
  case FineClass::InflationOfSimple: return "inflation_of_simple";
  }
  return "one";
}

std::optional<FineClass> parse_fine_class(std::string_view token) noexcept
{
  for (FineClass c : all_fine_classes)
    if (to_token(c) == token)
      return c;
  return std::nullopt;
}

std::vector<Interval> proper_intervals(Permutation const &p)
{
  int const n = p.size();
  std::vector<Interval> out;
  for (int lo = 1; lo <= n; ++lo) {
    int mn = p(lo), mx = p(lo);
    for (int hi = lo + 1; hi <= n; ++hi) {
      mn = std::min(mn, p(hi));
      mx = std::max(mx, p(hi));
      int const len = hi - lo + 1;
      if (len < n && mx - mn == hi - lo)
        out.push_back({lo, hi});
    }
  }
  return out;
}

bool is_simple(Permutation const &p)
{
  return p.size() >= 4 && proper_intervals(p).empty();
}

bool is_simple_inclusive(Permutation const &p)
{
  return p.size() <= 2 || is_simple(p);
}

bool is_simple_via_path(Permutation const &p)
{
  if (!is_involution(p) || contains_pattern(p, pattern_4321()))
    throw Error(ErrorCode::OutOfDomain,
                to_string(p) + " is not an involution avoiding 4321");
  if (p.size() < 4)
    return false;

  auto const path = path_of_involution(p);
  if (!is_irreducible(path))
    return false;

  auto const steps = path.steps();
  for (std::size_t i = 0; i + 1 < steps.size(); ++i)
    if (steps[i] == Step::Horizontal && steps[i + 1] == Step::Horizontal)
      return false;

  // Unitary labelling pairs the i-th up step with the i-th down step.
  std::vector<std::size_t> ups, downs;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::Up)
      ups.push_back(i);
    else if (steps[i] == Step::Down)
      downs.push_back(i);
  }
  for (std::size_t i = 0; i + 1 < ups.size(); ++i)
    if (ups[i + 1] == ups[i] + 1 && downs[i + 1] == downs[i] + 1)
      return false;
  return true;
}

std::vector<Permutation> connected_components(Permutation const &p)
{
  std::vector<Permutation> out;
  int start = 1;
  int mx = 0;
  for (int i = 1; i <= p.size(); ++i) {
    mx = std::max(mx, p(i));
    if (mx == i) {
      out.push_back(restrict_to(p, start, i));
      start = i + 1;
    }
  }
  return out;
}

bool is_sum_decomposable(Permutation const &p) noexcept
{
  int mx = 0;
  for (int i = 1; i < p.size(); ++i) {
    mx = std::max(mx, p(i));
    if (mx == i)
      return true;
  }
  return false;
}

bool is_skew_decomposable(Permutation const &p) noexcept
{
  int const n = p.size();
  int mn = n + 1;
  for (int i = 1; i < n; ++i) {
    mn = std::min(mn, p(i));
    if (mn == n - i + 1)
      return true;
  }
  return false;
}

FineClass classify(Permutation const &p)
{
  if (!is_involution(p))
    throw Error(ErrorCode::NotAnInvolution, to_string(p) + " is not an involution");
  if (p.size() == 1)
    return FineClass::One;
  if (is_sum_decomposable(p))
    return FineClass::Type12;
  if (is_skew_decomposable(p))
    return FineClass::Type21;
  if (is_simple(p))
    return FineClass::Simple;
  return FineClass::InflationOfSimple;
}

Decomposition skeleton_decomposition(Permutation const &p)
{
  int const n = p.size();
  if (n == 1)
    throw Error(ErrorCode::Undecomposable, "a permutation of length 1 has no skeleton");

  // The shortest prefix forming a block of 12 (resp. 21) and the rest.
  int mx = 0, mn = n + 1;
  for (int i = 1; i < n; ++i) {
    mx = std::max(mx, p(i));
    if (mx == i)
      return {Permutation{1, 2}, {restrict_to(p, 1, i), restrict_to(p, i + 1, n)}};
  }
  for (int i = 1; i < n; ++i) {
    mn = std::min(mn, p(i));
    if (mn == n - i + 1)
      return {Permutation{2, 1}, {restrict_to(p, 1, i), restrict_to(p, i + 1, n)}};
  }

  // Neither sum nor skew decomposable: the maximal proper intervals are
  // disjoint and the quotient is simple.
  std::vector<Interval> blocks;
  for (int lo = 1; lo <= n;) {
    int best = lo;
    for (int hi = lo + 1; hi <= n; ++hi)
      if (hi - lo + 1 < n && is_interval(p, lo, hi))
        best = hi;
    blocks.push_back({lo, best});
    lo = best + 1;
  }
  std::vector<int> representatives;
  std::vector<Permutation> patterns;
  for (auto const &b : blocks) {
    representatives.push_back(p(b.lo));
    patterns.push_back(restrict_to(p, b.lo, b.hi));
  }
  Decomposition d{standardize(representatives), std::move(patterns)};
  if (!is_simple(d.skeleton))
    throw Error(ErrorCode::InternalMismatch,
                "skeleton " + to_string(d.skeleton) + " of " + to_string(p) + " is not simple");
  return d;
}

Permutation inflate(Permutation const &skeleton, std::span<Permutation const> blocks)
{
  int const k = skeleton.size();
  if (static_cast<int>(blocks.size()) != k)
    throw Error(ErrorCode::ArityMismatch,
                "skeleton of length " + std::to_string(k) + " needs " + std::to_string(k) +
                  " blocks, got " + std::to_string(blocks.size()));

  // Value offset of block i: total size of the blocks whose skeleton value
  // is smaller.
  std::vector<int> size_by_value(static_cast<std::size_t>(k + 1), 0);
  for (int i = 1; i <= k; ++i)
    size_by_value[static_cast<std::size_t>(skeleton(i))] = blocks[static_cast<std::size_t>(i - 1)].size();
  std::vector<int> offset_by_value(static_cast<std::size_t>(k + 1), 0);
  for (int v = 2; v <= k; ++v)
    offset_by_value[static_cast<std::size_t>(v)] =
      offset_by_value[static_cast<std::size_t>(v - 1)] + size_by_value[static_cast<std::size_t>(v - 1)];

  std::vector<int> out;
  for (int i = 1; i <= k; ++i) {
    int const offset = offset_by_value[static_cast<std::size_t>(skeleton(i))];
    for (int v : blocks[static_cast<std::size_t>(i - 1)].values())
      out.push_back(offset + v);
  }
  return Permutation(std::move(out));
}

Permutation insert_fixed_point(Permutation const &p, int slot)
{
  if (!is_involution(p) || contains_pattern(p, pattern_4321()))
    throw Error(ErrorCode::OutOfDomain,
                to_string(p) + " is not an involution avoiding 4321");
  if (slot < 1 || slot > p.size() + 1)
    throw Error(ErrorCode::PositionOutOfRange,
                "slot " + std::to_string(slot) + " not in 1.." + std::to_string(p.size() + 1));
  auto const path = path_of_involution(p);
  std::vector<Step> steps(path.steps().begin(), path.steps().end());
  steps.insert(steps.begin() + (slot - 1), Step::Horizontal);
  return involution_of_path(LabelledMotzkinPath::unitary(std::move(steps)));
}

LabelledMotzkinPath break_consecutiveness(LabelledMotzkinPath const &path)
{
  auto const steps = path.steps();
  if (std::find(steps.begin(), steps.end(), Step::Horizontal) != steps.end() ||
      !is_unitary(path))
    throw Error(ErrorCode::NotADyckPath, to_string(path) + " is not a unitary Dyck path");
  if (!is_irreducible(path))
    throw Error(ErrorCode::NotIrreducible, to_string(path) + " is not irreducible");

  std::vector<std::size_t> ups, downs;
  for (std::size_t i = 0; i < steps.size(); ++i)
    (steps[i] == Step::Up ? ups : downs).push_back(i);

  // Breaking pair i in the up gap leaves every other pair untouched, and the
  // up gap is the leftmost of the two candidate slots.
  std::vector<bool> break_after(steps.size(), false);
  for (std::size_t i = 0; i + 1 < ups.size(); ++i)
    if (ups[i + 1] == ups[i] + 1 && downs[i + 1] == downs[i] + 1)
      break_after[ups[i]] = true;

  std::vector<Step> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    out.push_back(steps[i]);
    if (break_after[i])
      out.push_back(Step::Horizontal);
  }
  return LabelledMotzkinPath::unitary(std::move(out));
}

Permutation Type21NormalForm::to_permutation() const
{
  auto const outer_block = Permutation::identity(outer);
  if (middle == 0)
    return inflate(Permutation{2, 1}, std::vector<Permutation>{outer_block, outer_block});
  return inflate(Permutation{3, 2, 1},
                 std::vector<Permutation>{outer_block, Permutation::identity(middle), outer_block});
}

std::optional<Type21NormalForm> type21_normal_form(Permutation const &p)
{
  int const n = p.size();
  for (int k = 1; 2 * k <= n; ++k) {
    Type21NormalForm form{k, n - 2 * k};
    if (form.to_permutation() == p)
      return form;
  }
  return std::nullopt;
}

bool up_connected(CycleDecomposition const &cd, std::size_t i)
{
  return cd.transpositions[i + 1].lo == cd.transpositions[i].lo + 1;
}

bool down_connected(CycleDecomposition const &cd, std::size_t i)
{
  return std::abs(cd.transpositions[i + 1].hi - cd.transpositions[i].hi) == 1;
}

bool has_symmetric_connection(Permutation const &p)
{
  auto const cd = cycle_decomposition(p);
  for (std::size_t i = 0; i + 1 < cd.transpositions.size(); ++i)
    if (up_connected(cd, i) && down_connected(cd, i))
      return true;
  return false;
}

bool has_adjacent_fixed_points(Permutation const &p) noexcept
{
  for (int i = 1; i < p.size(); ++i)
    if (p(i) == i && p(i + 1) == i + 1)
      return true;
  return false;
}

} // namespace finv
