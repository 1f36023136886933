#include "finv/generating_functions.hpp"

#include <array>

#include "finv/error.hpp"

namespace finv
{

namespace
{

Series poly(std::initializer_list<long> c, int order)
{
  return Series::from_integers(c, order);
}

Series x_(int order) { return Series::variable(order); }
Series one(int order) { return Series::constant(1, order); }

void require_equal(Series const &a, Series const &b, char const *what)
{
  if (!(a == b))
    throw Error(ErrorCode::InternalMismatch, std::string(what) + ": the two derivations disagree");
}

// sqrt(1 - 2x - 3x^2)
Series motzkin_radical(int order)
{
  return series_sqrt(poly({1, -2, -3}, order));
}

// (1 - x - sqrt(1 - 2x - 3x^2)) / 2, the irreducible involutions of I(4321)
// counted with the two extra steps.
Series irreducible_numerator(int order)
{
  return (poly({1, -1}, order) - motzkin_radical(order)) * Rational(1, 2);
}

Series closed_I4321_132(int order)
{
  // -(x - x^3 + x^4) / ((x - 1)^3 (1 + x))
  Series num = -poly({0, 1, 0, -1, 1}, order);
  Series den = poly({-1, 1}, order) * poly({-1, 1}, order) * poly({-1, 1}, order) * poly({1, 1}, order);
  return num / den;
}

} // anonymous namespace

Series gf_I4321(int order)
{
  // -1 + (1 - x - sqrt(1 - 2x - 3x^2)) / (2x^2); the two lowest numerator
  // coefficients must cancel before the shift.
  Series shifted = irreducible_numerator(order + 2).shifted_down(2);
  return shifted - one(order);
}

Series gf_beta_I4321(int order)
{
  return Series::monomial(1, 2, order) / (poly({1, 0, -1}, order) * poly({1, -1}, order));
}

Series gf_gamma_plus_delta_closed(int order)
{
  Series const xm1 = poly({-1, 1}, order);
  Series s = Series::constant(2, order);
  s -= Series::constant(2, order) / (xm1 * xm1);
  s -= Series::constant(3, order) / xm1;
  s -= Series::monomial(2, 1, order);
  s -= one(order) / poly({1, 1}, order);
  s -= motzkin_radical(order) * Rational(2);
  return s * Rational(1, 4);
}

Series gf_gamma_plus_delta(int order)
{
  Series const f = gf_I4321(order);
  Series route = (f + one(order)) * Series::monomial(1, 2, order) - gf_beta_I4321(order);
  require_equal(route, gf_gamma_plus_delta_closed(order), "gamma + delta");
  return route;
}

BivarSeries gf_gamma_xy(int order)
{
  // 1/2 (1/(1+y) - 2x^2(1+y) - sqrt(-4 + 4/(1+x^2) + 1/(1+y)^2))
  Series const inv_1py = one(order) / poly({1, 1}, order);
  Series const inv_1px2 = one(order) / poly({1, 0, 1}, order);

  BivarSeries radicand = BivarSeries::in_x(inv_1px2 * Rational(4) - Series::constant(4, order), order) +
                         BivarSeries::in_y(inv_1py * inv_1py, order);
  BivarSeries s = BivarSeries::in_y(inv_1py, order);
  s -= BivarSeries::in_x(Series::monomial(2, 2, order), order) * BivarSeries::in_y(poly({1, 1}, order), order);
  s -= bivar_sqrt(radicand);
  return s * Rational(1, 2);
}

Series gf_gamma_x(int order)
{
  Series const inv_1px = one(order) / poly({1, 1}, order);
  Series const inv_1px2 = one(order) / poly({1, 0, 1}, order);
  Series radicand = Series::constant(-4, order) + inv_1px2 * Rational(4) + inv_1px * inv_1px;
  Series s = inv_1px - Series::monomial(2, 2, order) * poly({1, 1}, order) - series_sqrt(radicand);
  s *= Rational(1, 2);
  require_equal(s, gf_gamma_xy(order).diagonal(), "gamma(x)");
  return s;
}

Series gf_delta_I4321(int order)
{
  return gf_gamma_plus_delta(order) - gf_gamma_x(order);
}

namespace
{

// sqrt(1 - 2xy + x^2 y^2 - 4x^2) at x-order nx
BivarSeries fixed_point_radical(int nx, int ny)
{
  BivarSeries r = BivarSeries::constant(1, nx, ny);
  r.coefficient(1, 1) = -2;
  r.coefficient(2, 2) = 1;
  r.coefficient(2, 0) = -4;
  return bivar_sqrt(r);
}

// 1 - xy
BivarSeries one_minus_xy(int nx, int ny)
{
  BivarSeries r = BivarSeries::constant(1, nx, ny);
  r.coefficient(1, 1) = -1;
  return r;
}

} // anonymous namespace

BivarSeries gf_f_xy(int order)
{
  int const nx = order + 2;
  BivarSeries numerator = one_minus_xy(nx, order) - fixed_point_radical(nx, order);
  return numerator.shifted_down_x(2) * Rational(1, 2);
}

BivarSeries gf_beta_xy(int order)
{
  BivarSeries num(order, order);
  num.coefficient(2, 0) = 1;
  BivarSeries den = BivarSeries::in_x(poly({1, 0, -1}, order), order) * one_minus_xy(order, order);
  return num / den;
}

BivarSeries gf_gamma_plus_delta_xy(int order)
{
  BivarSeries first = (one_minus_xy(order, order) - fixed_point_radical(order, order)) * Rational(1, 2);
  return first - gf_beta_xy(order);
}

BivarSeries gf_gamma_plus_delta_xy_substituted(int order)
{
  // 1/2 (1 - y - sqrt((1 - y)^2 - 4x^2)) - x^2 / ((1 - x^2)(1 - y))
  BivarSeries radicand = BivarSeries::in_y(poly({1, -2, 1}, order), order) -
                         BivarSeries::in_x(Series::monomial(4, 2, order), order);
  BivarSeries first =
    (BivarSeries::in_y(poly({1, -1}, order), order) - bivar_sqrt(radicand)) * Rational(1, 2);
  BivarSeries num(order, order);
  num.coefficient(2, 0) = 1;
  BivarSeries den =
    BivarSeries::in_x(poly({1, 0, -1}, order), order) * BivarSeries::in_y(poly({1, -1}, order), order);
  return first - num / den;
}

BivarSeries inflate_gamma_xy(BivarSeries const &gamma)
{
  int const nx = gamma.order_x();
  int const ny = gamma.order_y();
  // x -> x / sqrt(1 - x^2) turns every x^2 into x^2 / (1 - x^2).
  Series gx = x_(nx) / series_sqrt(poly({1, 0, -1}, nx));
  Series gy = x_(ny) / poly({1, -1}, ny);
  return bivar_compose(gamma, gx, gy);
}

std::vector<Series> FineSystemI4321::residuals() const
{
  int const n = f.order();
  Series const x = x_(n);
  Series const connected = x + beta + gamma_delta;
  return {
    f - (x + alpha + beta + gamma_delta),
    f - gf_I4321(n),
    beta - Series::monomial(1, 2, n) / (poly({1, 0, -1}, n) * poly({1, -1}, n)),
    alpha - connected * (x + alpha + beta + gamma_delta),
    gamma_delta - gf_gamma_plus_delta_closed(n),
  };
}

FineSystemI4321 gf_system_I4321(int order)
{
  Series const x = x_(order);
  FineSystemI4321 sys;
  sys.f = gf_I4321(order);
  sys.beta = gf_beta_I4321(order);
  sys.gamma_delta = gf_gamma_plus_delta(order);
  // alpha = A (x + alpha + B) with A = x + beta + gamma_delta and
  // B = beta + gamma_delta, solved for alpha.
  Series const a = x + sys.beta + sys.gamma_delta;
  Series const b = sys.beta + sys.gamma_delta;
  sys.alpha = a * (x + b) / (one(order) - a);
  for (auto const &r : sys.residuals())
    if (!r.is_zero())
      throw Error(ErrorCode::InternalMismatch, "system for I(4321) does not close");
  return sys;
}

std::vector<Series> TwoPartSystem::residuals() const
{
  Series const x = x_(f.order());
  return {
    f - (x + alpha + beta),
    beta - beta_rule(f, alpha, beta),
    alpha - alpha_rule(f, alpha, beta),
    f - closed_form,
  };
}

namespace
{

TwoPartSystem checked(TwoPartSystem sys, char const *name)
{
  for (auto const &r : sys.residuals())
    if (!r.is_zero())
      throw Error(ErrorCode::InternalMismatch, std::string("system for ") + name + " does not close");
  return sys;
}

} // anonymous namespace

TwoPartSystem gf_system_I4321_132(int order)
{
  // beta as for I(4321); alpha = (x + beta) x/(1 - x)
  TwoPartSystem sys;
  sys.beta_rule = [](Series const &f, Series const &, Series const &) {
    return gf_beta_I4321(f.order());
  };
  sys.alpha_rule = [](Series const &, Series const &, Series const &beta) {
    int const n = beta.order();
    return (x_(n) + beta) * x_(n) / poly({1, -1}, n);
  };
  sys.beta = gf_beta_I4321(order);
  sys.alpha = sys.alpha_rule(sys.beta, sys.beta, sys.beta);
  sys.f = x_(order) + sys.alpha + sys.beta;
  sys.closed_form = closed_I4321_132(order);
  return checked(std::move(sys), "I(4321, 132)");
}

TwoPartSystem gf_system_I4321_312(int order)
{
  // beta = x^2 + x^3; alpha = (x + beta) f
  TwoPartSystem sys;
  sys.beta_rule = [](Series const &f, Series const &, Series const &) {
    return poly({0, 0, 1, 1}, f.order());
  };
  sys.alpha_rule = [](Series const &f, Series const &, Series const &beta) {
    return (x_(f.order()) + beta) * f;
  };
  sys.beta = poly({0, 0, 1, 1}, order);
  Series const connected = x_(order) + sys.beta;
  sys.f = connected / (one(order) - connected);
  sys.alpha = connected * sys.f;
  sys.closed_form = poly({0, -1, -1, -1}, order) / poly({-1, 1, 1, 1}, order);
  return checked(std::move(sys), "I(4321, 312)");
}

TwoPartSystem gf_system_I3412_123(int order)
{
  // beta = x^2 f + x^2; alpha = (x + x^2/(1 - x)) x/(1 - x)
  TwoPartSystem sys;
  sys.beta_rule = [](Series const &f, Series const &, Series const &) {
    Series const x2 = Series::monomial(1, 2, f.order());
    return x2 * f + x2;
  };
  sys.alpha_rule = [](Series const &f, Series const &, Series const &) {
    int const n = f.order();
    Series const t = x_(n) / poly({1, -1}, n);
    return (x_(n) + Series::monomial(1, 2, n) / poly({1, -1}, n)) * t;
  };
  Series const x2 = Series::monomial(1, 2, order);
  sys.alpha = sys.alpha_rule(x2, x2, x2);
  // f = x + alpha + x^2 f + x^2
  sys.f = (x_(order) + sys.alpha + x2) / poly({1, 0, -1}, order);
  sys.beta = x2 * sys.f + x2;
  sys.closed_form = closed_I4321_132(order);
  return checked(std::move(sys), "I(3412, 123)");
}

TwoPartSystem gf_system_I3412_1234(int order)
{
  // beta = x^2 f + x^2;
  // alpha = (F x^2 + x^2 - x^2/(1 - x)) x/(1 - x) + x/(1 - x) F, with F the
  // generating function of I(3412, 123).
  TwoPartSystem sys;
  sys.beta_rule = [](Series const &f, Series const &, Series const &) {
    Series const x2 = Series::monomial(1, 2, f.order());
    return x2 * f + x2;
  };
  sys.alpha_rule = [](Series const &f, Series const &, Series const &) {
    int const n = f.order();
    Series const x2 = Series::monomial(1, 2, n);
    Series const t = x_(n) / poly({1, -1}, n);
    Series const big_f = closed_I4321_132(n);
    return (big_f * x2 + x2 - x2 / poly({1, -1}, n)) * t + t * big_f;
  };
  Series const x2 = Series::monomial(1, 2, order);
  sys.alpha = sys.alpha_rule(x2, x2, x2);
  sys.f = (x_(order) + sys.alpha + x2) / poly({1, 0, -1}, order);
  sys.beta = x2 * sys.f + x2;
  // x(-1 + x + x^2 - 3x^3 - x^4 + 2x^5 - x^6) / ((x - 1)^5 (1 + x)^2)
  Series num = poly({0, -1, 1, 1, -3, -1, 2, -1}, order);
  Series den = one(order);
  for (int i = 0; i < 5; ++i)
    den *= poly({-1, 1}, order);
  den *= poly({1, 1}, order) * poly({1, 1}, order);
  sys.closed_form = num / den;
  return checked(std::move(sys), "I(3412, 1234)");
}

TwoPartSystem gf_system_I3412_132(int order)
{
  // beta = x^2 f + x^2; alpha = (x + beta) x/(1 - x)
  TwoPartSystem sys;
  sys.beta_rule = [](Series const &f, Series const &, Series const &) {
    Series const x2 = Series::monomial(1, 2, f.order());
    return x2 * f + x2;
  };
  sys.alpha_rule = [](Series const &, Series const &, Series const &beta) {
    int const n = beta.order();
    return (x_(n) + beta) * x_(n) / poly({1, -1}, n);
  };
  // f = x + (x + x^2 + x^2 f) t + x^2 f + x^2 with t = x/(1 - x), linear in f.
  Series const x = x_(order);
  Series const x2 = Series::monomial(1, 2, order);
  Series const t = x / poly({1, -1}, order);
  sys.f = (x + x2) * (one(order) + t) / (one(order) - x2 - x2 * t);
  sys.beta = x2 * sys.f + x2;
  sys.alpha = sys.alpha_rule(sys.f, sys.f, sys.beta);
  sys.closed_form = poly({0, 1, 1}, order) / poly({1, -1, -1}, order);
  return checked(std::move(sys), "I(3412, 132)");
}

Series gf_I4321_132(int order) { return gf_system_I4321_132(order).f; }
Series gf_I4321_312(int order) { return gf_system_I4321_312(order).f; }
Series gf_I3412_123(int order) { return gf_system_I3412_123(order).f; }
Series gf_I3412_1234(int order) { return gf_system_I3412_1234(order).f; }
Series gf_I3412_132(int order) { return gf_system_I3412_132(order).f; }

namespace
{

struct Entry
{
  std::string_view name;
  AnySeries (*build)(int order);
};

constexpr std::array<Entry, 18> registry{{
  {"I4321", [](int n) -> AnySeries { return gf_I4321(n); }},
  {"I3412", [](int n) -> AnySeries { return gf_I4321(n); }},
  {"alpha_I4321", [](int n) -> AnySeries { return gf_system_I4321(n).alpha; }},
  {"beta_I4321", [](int n) -> AnySeries { return gf_beta_I4321(n); }},
  {"gamma_plus_delta", [](int n) -> AnySeries { return gf_gamma_plus_delta(n); }},
  {"gamma_x", [](int n) -> AnySeries { return gf_gamma_x(n); }},
  {"delta_I4321", [](int n) -> AnySeries { return gf_delta_I4321(n); }},
  {"I4321_132", [](int n) -> AnySeries { return gf_I4321_132(n); }},
  {"I4321_312", [](int n) -> AnySeries { return gf_I4321_312(n); }},
  {"I3412_123", [](int n) -> AnySeries { return gf_I3412_123(n); }},
  {"I3412_1234", [](int n) -> AnySeries { return gf_I3412_1234(n); }},
  {"I3412_132", [](int n) -> AnySeries { return gf_I3412_132(n); }},
  {"I3412_213", [](int n) -> AnySeries { return gf_I3412_132(n); }},
  {"f_xy", [](int n) -> AnySeries { return gf_f_xy(n); }},
  {"beta_xy", [](int n) -> AnySeries { return gf_beta_xy(n); }},
  {"gamma_plus_delta_xy", [](int n) -> AnySeries { return gf_gamma_plus_delta_xy(n); }},
  {"gamma_plus_delta_xy_substituted",
   [](int n) -> AnySeries { return gf_gamma_plus_delta_xy_substituted(n); }},
  {"gamma_xy", [](int n) -> AnySeries { return gf_gamma_xy(n); }},
}};

} // anonymous namespace

AnySeries named_series(std::string_view name, int order)
{
  if (order < 1)
    throw Error(ErrorCode::OutOfRange, "series order must be >= 1");
  for (auto const &e : registry)
    if (e.name == name)
      return e.build(order);
  throw Error(ErrorCode::UnknownSeries, "unknown series '" + std::string(name) + "'");
}

std::vector<std::string_view> series_names()
{
  std::vector<std::string_view> out;
  for (auto const &e : registry)
    out.push_back(e.name);
  return out;
}

} // namespace finv
