#ifndef FINV_MOTZKIN_HPP
#define FINV_MOTZKIN_HPP

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finv/permutation.hpp"

namespace finv
{

// Generation order is U < H < D.
enum class Step : char
{
  Up = 'U',
  Horizontal = 'H',
  Down = 'D',
};

enum class LabellingKind
{
  Unitary,
  Maximal,
  Other,
};

enum class LabellingFilter
{
  Unitary,
  Maximal,
  Other,
  All,
};

// A Motzkin path with a label 1 <= label <= h(D) on every down step, h(D)
// being the height at which the down step starts. Labels are stored in
// down-step order.
class LabelledMotzkinPath
{
public:
  // Throws Error(NegativeHeight | NonzeroFinalHeight | LabelOutOfRange).
  LabelledMotzkinPath(std::vector<Step> steps, std::vector<int> labels);

  static LabelledMotzkinPath unitary(std::vector<Step> steps);
  static LabelledMotzkinPath maximal(std::vector<Step> steps);

  int size() const noexcept { return static_cast<int>(_steps.size()); }
  std::span<Step const> steps() const noexcept { return _steps; }
  std::span<int const> labels() const noexcept { return _labels; }

  // Height at which each down step starts, in down-step order.
  std::vector<int> down_heights() const;

  // Height after each step; the last entry is 0.
  std::vector<int> height_profile() const;

  friend bool operator==(LabelledMotzkinPath const &, LabelledMotzkinPath const &) = default;

private:
  struct Unchecked {};
  LabelledMotzkinPath(Unchecked, std::vector<Step> steps, std::vector<int> labels)
    : _steps(std::move(steps)), _labels(std::move(labels))
  {}

  friend LabelledMotzkinPath path_of_involution(Permutation const &p);
  friend void for_each_path(int, LabellingFilter, std::span<Step const>,
                            std::function<void(LabelledMotzkinPath const &)> const &);

  std::vector<Step> _steps;
  std::vector<int> _labels;
};

LabelledMotzkinPath validate_path(std::vector<Step> steps, std::vector<int> labels);

// Parses "UUUDHDUDD" or "UUD[2]UHUD[3]D[2]D[1]". Unbracketed down steps take
// label 1, or h(D) when default_maximal is set.
LabelledMotzkinPath parse_path(std::string_view text, bool default_maximal = false);

// Step letters; bracketed labels on every down step unless the labelling is
// unitary.
std::string to_string(LabelledMotzkinPath const &path);

std::string steps_string(std::span<Step const> steps);

// Multi-line ASCII drawing using '/', '_' and '\\'.
std::string draw_path(LabelledMotzkinPath const &path);

// Throws Error(NotAnInvolution).
LabelledMotzkinPath path_of_involution(Permutation const &p);

// Reading left to right, a down step with label k closes the k-th smallest
// still-open up-step position.
Permutation involution_of_path(LabelledMotzkinPath const &path);

bool is_unitary(LabelledMotzkinPath const &path) noexcept;
bool is_maximal(LabelledMotzkinPath const &path);

// Unitary takes precedence when a labelling is both unitary and maximal.
LabellingKind labelling_kind(LabelledMotzkinPath const &path);

// Touches the axis only at its endpoints.
bool is_irreducible(LabelledMotzkinPath const &path);

// Visits every labelled path of length n whose labelling passes the filter
// and whose steps start with prefix, in lexicographic order of steps
// (U < H < D) and then labels.
void for_each_path(int n, LabellingFilter filter, std::span<Step const> prefix,
                   std::function<void(LabelledMotzkinPath const &)> const &visit);

void for_each_path(int n, LabellingFilter filter,
                   std::function<void(LabelledMotzkinPath const &)> const &visit);

std::vector<LabelledMotzkinPath> enumerate_paths(int n, LabellingFilter filter);

// All step prefixes of the given length that extend to a Motzkin path of
// length n, in generation order.
std::vector<std::vector<Step>> path_prefixes(int n, int prefix_length);

// Reverses the steps swapping U and D; labels are those of the
// reverse-complemented involution.
LabelledMotzkinPath reflect_path(LabelledMotzkinPath const &path);

std::string_view to_string(LabellingKind kind) noexcept;

} // namespace finv

#endif
