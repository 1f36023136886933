#ifndef FINV_SERIES_HPP
#define FINV_SERIES_HPP

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace finv
{

using Rational = mpq_class;

// Truncated power series c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}) with exact
// rational coefficients. Binary operations truncate to the smaller order.
class Series
{
public:
  explicit Series(int order = 0);
  Series(std::vector<Rational> coefficients, int order);

  static Series constant(Rational const &c, int order);
  static Series monomial(Rational const &c, int degree, int order);
  static Series variable(int order) { return monomial(1, 1, order); }
  static Series from_integers(std::initializer_list<long> coefficients, int order);

  int order() const noexcept { return static_cast<int>(_c.size()) - 1; }

  // Coefficient of x^k; zero beyond the stored range for k > order is not
  // meaningful, so callers must keep k <= order.
  Rational const &operator[](int k) const { return _c[static_cast<std::size_t>(k)]; }
  Rational &operator[](int k) { return _c[static_cast<std::size_t>(k)]; }

  std::span<Rational const> coefficients() const noexcept { return _c; }

  bool is_zero() const;

  Series truncated(int order) const;

  // Multiply by x^k; the order is unchanged.
  Series shifted_up(int k) const;

  // Divide by x^k. The k lowest coefficients must vanish, otherwise
  // Error(InternalMismatch) is thrown. The order drops by k.
  Series shifted_down(int k) const;

  Series operator-() const;
  Series &operator+=(Series const &rhs);
  Series &operator-=(Series const &rhs);
  Series &operator*=(Series const &rhs);
  Series &operator*=(Rational const &rhs);

  friend Series operator+(Series a, Series const &b) { return a += b; }
  friend Series operator-(Series a, Series const &b) { return a -= b; }
  friend Series operator*(Series a, Series const &b) { return a *= b; }
  friend Series operator*(Series a, Rational const &b) { return a *= b; }
  friend Series operator*(Rational const &a, Series b) { return b *= a; }

  // Coefficientwise equality up to the smaller of the two orders.
  friend bool operator==(Series const &a, Series const &b);

private:
  std::vector<Rational> _c;
};

Series series_add(Series const &a, Series const &b);
Series series_sub(Series const &a, Series const &b);
Series series_mul(Series const &a, Series const &b);

// q with q * b == a. Throws Error(DivisionByNonUnit) when b_0 == 0.
Series series_div(Series const &a, Series const &b);
Series operator/(Series const &a, Series const &b);

// s with s * s == a and s_0 == 1. Throws Error(BadConstantTerm) unless
// a_0 == 1.
Series series_sqrt(Series const &a);

// outer(inner(x)). Throws Error(NonzeroInnerConstant) unless inner_0 == 0.
Series series_compose(Series const &outer, Series const &inner);

// "c0 + c1*x + c2*x^2 + ... + O(x^{N+1})", zero terms omitted.
std::string to_string(Series const &s, char variable = 'x');

// JSON array of exact coefficient strings ("3", "-1/2").
std::string to_json(Series const &s);

// One "n a(n)" line per coefficient, from first_index on.
std::string to_bfile(Series const &s, int first_index = 0);

// Power series in x and y truncated modulo (x^{Nx+1}, y^{Ny+1}), stored as a
// series in x whose coefficients are series in y.
class BivarSeries
{
public:
  BivarSeries(int order_x = 0, int order_y = 0);

  static BivarSeries constant(Rational const &c, int order_x, int order_y);
  static BivarSeries in_x(Series const &s, int order_y);
  static BivarSeries in_y(Series const &s, int order_x);

  int order_x() const noexcept { return static_cast<int>(_rows.size()) - 1; }
  int order_y() const noexcept { return _rows.empty() ? 0 : _rows.front().order(); }

  // Coefficient of x^i y^j.
  Rational const &coefficient(int i, int j) const { return _rows[static_cast<std::size_t>(i)][j]; }
  Rational &coefficient(int i, int j) { return _rows[static_cast<std::size_t>(i)][j]; }

  // Coefficient of x^i as a series in y.
  Series const &x_coefficient(int i) const { return _rows[static_cast<std::size_t>(i)]; }

  bool is_zero() const;

  // Divide by x^k with the same vanishing check as Series::shifted_down.
  BivarSeries shifted_down_x(int k) const;

  // f(x, 1); exact when every x^i row is a polynomial of degree <= order_y.
  Series at_y_equals_one() const;

  // sum over i + j == n of c_{ij}, for n <= min(order_x, order_y).
  Series diagonal() const;

  BivarSeries operator-() const;
  BivarSeries &operator+=(BivarSeries const &rhs);
  BivarSeries &operator-=(BivarSeries const &rhs);
  BivarSeries &operator*=(BivarSeries const &rhs);
  BivarSeries &operator*=(Rational const &rhs);

  friend BivarSeries operator+(BivarSeries a, BivarSeries const &b) { return a += b; }
  friend BivarSeries operator-(BivarSeries a, BivarSeries const &b) { return a -= b; }
  friend BivarSeries operator*(BivarSeries a, BivarSeries const &b) { return a *= b; }
  friend BivarSeries operator*(BivarSeries a, Rational const &b) { return a *= b; }
  friend BivarSeries operator*(Rational const &a, BivarSeries b) { return b *= a; }

  friend bool operator==(BivarSeries const &a, BivarSeries const &b);

private:
  std::vector<Series> _rows;

  friend BivarSeries bivar_div(BivarSeries const &, BivarSeries const &);
  friend BivarSeries bivar_sqrt(BivarSeries const &);
  friend BivarSeries bivar_compose(BivarSeries const &, Series const &, Series const &);
};

// Throws Error(DivisionByNonUnit) when the constant term is zero.
BivarSeries bivar_div(BivarSeries const &a, BivarSeries const &b);
BivarSeries operator/(BivarSeries const &a, BivarSeries const &b);

// Throws Error(BadConstantTerm) unless the constant term is 1.
BivarSeries bivar_sqrt(BivarSeries const &a);

// f(gx(x), gy(y)). Both substitutions need a zero constant term.
BivarSeries bivar_compose(BivarSeries const &f, Series const &gx, Series const &gy);

// One line per x power: "x^n: <polynomial in y>".
std::string to_string(BivarSeries const &s);

// JSON array indexed by x power of arrays indexed by y power.
std::string to_json(BivarSeries const &s);

// "i k c" for every nonzero coefficient c of x^i y^k.
std::string to_bfile(BivarSeries const &s);

} // namespace finv

#endif
