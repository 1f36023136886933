#ifndef FINV_GENERATING_FUNCTIONS_HPP
#define FINV_GENERATING_FUNCTIONS_HPP

#include <functional>
#include <string_view>
#include <variant>
#include <vector>

#include "finv/series.hpp"

namespace finv
{

inline constexpr int default_series_order = 24;

// Involutions avoiding 4321 by length, without constant term (Motzkin
// numbers 1, 2, 4, 9, 21, ...).
Series gf_I4321(int order = default_series_order);

// Inflations of 21 in I(4321): x^2 / ((1 - x^2)(1 - x)).
Series gf_beta_I4321(int order = default_series_order);

// Simple involutions of length > 2 in I(4321) and their inflations, as
// (f + 1) x^2 - beta. Cross-checked against the closed radical form; throws
// Error(InternalMismatch) if the two disagree.
Series gf_gamma_plus_delta(int order = default_series_order);

// 1/4 (2 - 2/(x - 1)^2 - 3/(x - 1) - 2x - 1/(1 + x) - 2 sqrt(1 - 2x - 3x^2))
Series gf_gamma_plus_delta_closed(int order = default_series_order);

// Simple involutions of length > 2 in I(4321) by length. Cross-checked
// against the diagonal of gf_gamma_xy.
Series gf_gamma_x(int order = default_series_order);

// Proper inflations of simple involutions, (gamma + delta) - gamma.
Series gf_delta_I4321(int order = default_series_order);

// I(4321) by length (x) and fixed points (y), including the constant 1.
BivarSeries gf_f_xy(int order = default_series_order);

// x^2 / ((1 - x^2)(1 - xy))
BivarSeries gf_beta_xy(int order = default_series_order);

// (gamma + delta)(x, y) with x marking length and y fixed points.
BivarSeries gf_gamma_plus_delta_xy(int order = default_series_order);

// The same objects after y -> y/x: the coefficient of x^n y^k counts
// involutions of length n + k with k fixed points and n/2 transpositions.
BivarSeries gf_gamma_plus_delta_xy_substituted(int order = default_series_order);

// Simple involutions of I(4321) in the substituted convention above.
BivarSeries gf_gamma_xy(int order = default_series_order);

// gamma(x, y) with x^2 -> x^2/(1 - x^2) and y -> y/(1 - y). Equals
// gf_gamma_plus_delta_xy_substituted when inflation works as expected.
BivarSeries inflate_gamma_xy(BivarSeries const &gamma);

// f = x + alpha + beta + (gamma + delta), with
// alpha = (x + beta + gamma + delta)(x + alpha + beta + gamma + delta).
struct FineSystemI4321
{
  Series f;
  Series alpha;
  Series beta;
  Series gamma_delta;

  // LHS - RHS of every equation of the system; all zero when it holds.
  std::vector<Series> residuals() const;
};

FineSystemI4321 gf_system_I4321(int order = default_series_order);

// f = x + alpha + beta for a class with no simple involutions of length > 2.
struct TwoPartSystem
{
  using Rule = std::function<Series(Series const &f, Series const &alpha, Series const &beta)>;

  Series f;
  Series alpha;
  Series beta;
  Series closed_form;

  // Right-hand sides of the beta and alpha equations.
  Rule beta_rule;
  Rule alpha_rule;

  std::vector<Series> residuals() const;
};

TwoPartSystem gf_system_I4321_132(int order = default_series_order);
TwoPartSystem gf_system_I4321_312(int order = default_series_order);
TwoPartSystem gf_system_I3412_123(int order = default_series_order);
TwoPartSystem gf_system_I3412_1234(int order = default_series_order);
// Shared by I(3412, 132) and I(3412, 213).
TwoPartSystem gf_system_I3412_132(int order = default_series_order);

// Solved f of each system, checked against the closed form (throws
// Error(InternalMismatch) on disagreement).
Series gf_I4321_132(int order = default_series_order);
Series gf_I4321_312(int order = default_series_order);
Series gf_I3412_123(int order = default_series_order);
Series gf_I3412_1234(int order = default_series_order);
Series gf_I3412_132(int order = default_series_order);

using AnySeries = std::variant<Series, BivarSeries>;

// Registered names, e.g. "I4321", "gamma_x", "f_xy". Throws
// Error(UnknownSeries).
AnySeries named_series(std::string_view name, int order = default_series_order);
std::vector<std::string_view> series_names();

} // namespace finv

#endif
