#include "finv/series.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "finv/error.hpp"

namespace finv
{

namespace
{

std::string term(Rational const &c, int k, char var, bool first)
{
  std::string out;
  Rational mag = abs(c);
  if (first)
    out = sgn(c) < 0 ? "-" : "";
  else
    out = sgn(c) < 0 ? " - " : " + ";
  if (k == 0) {
    out += mag.get_str();
    return out;
  }
  if (mag != 1)
    out += mag.get_str() + "*";
  out += var;
  if (k > 1)
    out += "^" + std::to_string(k);
  return out;
}

} // anonymous namespace

// Series

Series::Series(int order) : _c(static_cast<std::size_t>(std::max(order, 0)) + 1) {}

Series::Series(std::vector<Rational> coefficients, int order) : _c(std::move(coefficients))
{
  _c.resize(static_cast<std::size_t>(std::max(order, 0)) + 1);
}

Series Series::constant(Rational const &c, int order)
{
  Series s(order);
  s[0] = c;
  return s;
}

Series Series::monomial(Rational const &c, int degree, int order)
{
  Series s(order);
  if (degree <= order)
    s[degree] = c;
  return s;
}

Series Series::from_integers(std::initializer_list<long> coefficients, int order)
{
  std::vector<Rational> c;
  for (long v : coefficients)
    c.emplace_back(v);
  return Series(std::move(c), order);
}

bool Series::is_zero() const
{
  return std::all_of(_c.begin(), _c.end(), [](Rational const &v) { return sgn(v) == 0; });
}

Series Series::truncated(int order) const
{
  return Series(std::vector<Rational>(_c.begin(), _c.begin() + std::min<std::ptrdiff_t>(
                                                                 order + 1, static_cast<std::ptrdiff_t>(_c.size()))),
                std::min(order, this->order()));
}

Series Series::shifted_up(int k) const
{
  Series out(order());
  for (int i = 0; i + k <= order(); ++i)
    out[i + k] = _c[static_cast<std::size_t>(i)];
  return out;
}

Series Series::shifted_down(int k) const
{
  for (int i = 0; i < k && i <= order(); ++i)
    if (sgn(_c[static_cast<std::size_t>(i)]) != 0)
      throw Error(ErrorCode::InternalMismatch,
                  "coefficient of x^" + std::to_string(i) + " is " + _c[static_cast<std::size_t>(i)].get_str() +
                    ", expected 0 before dividing by x^" + std::to_string(k));
  if (k > order())
    throw Error(ErrorCode::InternalMismatch, "shift exceeds truncation order");
  return Series(std::vector<Rational>(_c.begin() + k, _c.end()), order() - k);
}

Series Series::operator-() const
{
  Series out(*this);
  for (auto &v : out._c)
    v = -v;
  return out;
}

Series &Series::operator+=(Series const &rhs)
{
  _c.resize(static_cast<std::size_t>(std::min(order(), rhs.order())) + 1);
  for (std::size_t i = 0; i < _c.size(); ++i)
    _c[i] += rhs._c[i];
  return *this;
}

Series &Series::operator-=(Series const &rhs)
{
  _c.resize(static_cast<std::size_t>(std::min(order(), rhs.order())) + 1);
  for (std::size_t i = 0; i < _c.size(); ++i)
    _c[i] -= rhs._c[i];
  return *this;
}

Series &Series::operator*=(Series const &rhs)
{
  int const n = std::min(order(), rhs.order());
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (sgn(_c[static_cast<std::size_t>(i)]) == 0)
      continue;
    for (int j = 0; i + j <= n; ++j)
      out[static_cast<std::size_t>(i + j)] += _c[static_cast<std::size_t>(i)] * rhs._c[static_cast<std::size_t>(j)];
  }
  _c = std::move(out);
  return *this;
}

Series &Series::operator*=(Rational const &rhs)
{
  for (auto &v : _c)
    v *= rhs;
  return *this;
}

bool operator==(Series const &a, Series const &b)
{
  int const n = std::min(a.order(), b.order());
  for (int i = 0; i <= n; ++i)
    if (a[i] != b[i])
      return false;
  return true;
}

Series series_add(Series const &a, Series const &b) { return a + b; }
Series series_sub(Series const &a, Series const &b) { return a - b; }
Series series_mul(Series const &a, Series const &b) { return a * b; }

Series series_div(Series const &a, Series const &b)
{
  if (sgn(b[0]) == 0)
    throw Error(ErrorCode::DivisionByNonUnit, "divisor has zero constant term");
  int const n = std::min(a.order(), b.order());
  Series q(n);
  for (int k = 0; k <= n; ++k) {
    Rational acc = a[k];
    for (int i = 0; i < k; ++i)
      acc -= q[i] * b[k - i];
    q[k] = acc / b[0];
  }
  return q;
}

Series operator/(Series const &a, Series const &b) { return series_div(a, b); }

Series series_sqrt(Series const &a)
{
  if (a[0] != 1)
    throw Error(ErrorCode::BadConstantTerm,
                "square root needs constant term 1, got " + a[0].get_str());
  int const n = a.order();
  Series s(n);
  s[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational acc = a[k];
    for (int i = 1; i < k; ++i)
      acc -= s[i] * s[k - i];
    s[k] = acc / 2;
  }
  return s;
}

Series series_compose(Series const &outer, Series const &inner)
{
  if (sgn(inner[0]) != 0)
    throw Error(ErrorCode::NonzeroInnerConstant,
                "inner series has constant term " + inner[0].get_str());
  int const n = std::min(outer.order(), inner.order());
  Series inner_n = inner.truncated(n);
  Series result = Series::constant(outer[n], n);
  for (int k = n - 1; k >= 0; --k) {
    result *= inner_n;
    result[0] += outer[k];
  }
  return result;
}

std::string to_string(Series const &s, char variable)
{
  std::string out;
  for (int k = 0; k <= s.order(); ++k) {
    if (sgn(s[k]) == 0)
      continue;
    out += term(s[k], k, variable, out.empty());
  }
  if (out.empty())
    out = "0";
  out += std::string(" + O(") + variable + "^" + std::to_string(s.order() + 1) + ")";
  return out;
}

std::string to_json(Series const &s)
{
  nlohmann::json j = nlohmann::json::array();
  for (auto const &c : s.coefficients())
    j.push_back(c.get_str());
  return j.dump();
}

std::string to_bfile(Series const &s, int first_index)
{
  std::ostringstream os;
  for (int k = std::max(first_index, 0); k <= s.order(); ++k)
    os << k << ' ' << s[k].get_str() << '\n';
  return os.str();
}

// BivarSeries

BivarSeries::BivarSeries(int order_x, int order_y)
  : _rows(static_cast<std::size_t>(std::max(order_x, 0)) + 1, Series(order_y))
{}

BivarSeries BivarSeries::constant(Rational const &c, int order_x, int order_y)
{
  BivarSeries b(order_x, order_y);
  b.coefficient(0, 0) = c;
  return b;
}

BivarSeries BivarSeries::in_x(Series const &s, int order_y)
{
  BivarSeries b(s.order(), order_y);
  for (int i = 0; i <= s.order(); ++i)
    b.coefficient(i, 0) = s[i];
  return b;
}

BivarSeries BivarSeries::in_y(Series const &s, int order_x)
{
  BivarSeries b(order_x, s.order());
  b._rows[0] = s;
  return b;
}

bool BivarSeries::is_zero() const
{
  return std::all_of(_rows.begin(), _rows.end(), [](Series const &r) { return r.is_zero(); });
}

BivarSeries BivarSeries::shifted_down_x(int k) const
{
  if (k > order_x())
    throw Error(ErrorCode::InternalMismatch, "shift exceeds truncation order");
  for (int i = 0; i < k; ++i)
    if (!_rows[static_cast<std::size_t>(i)].is_zero())
      throw Error(ErrorCode::InternalMismatch,
                  "coefficient of x^" + std::to_string(i) + " does not vanish before dividing by x^" +
                    std::to_string(k));
  BivarSeries out(order_x() - k, order_y());
  for (int i = 0; i <= out.order_x(); ++i)
    out._rows[static_cast<std::size_t>(i)] = _rows[static_cast<std::size_t>(i + k)];
  return out;
}

Series BivarSeries::at_y_equals_one() const
{
  Series out(order_x());
  for (int i = 0; i <= order_x(); ++i)
    for (auto const &c : _rows[static_cast<std::size_t>(i)].coefficients())
      out[i] += c;
  return out;
}

Series BivarSeries::diagonal() const
{
  int const n = std::min(order_x(), order_y());
  Series out(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j)
      out[i + j] += coefficient(i, j);
  return out;
}

BivarSeries BivarSeries::operator-() const
{
  BivarSeries out(*this);
  for (auto &r : out._rows)
    r = -r;
  return out;
}

BivarSeries &BivarSeries::operator+=(BivarSeries const &rhs)
{
  _rows.resize(static_cast<std::size_t>(std::min(order_x(), rhs.order_x())) + 1);
  for (std::size_t i = 0; i < _rows.size(); ++i)
    _rows[i] += rhs._rows[i];
  return *this;
}

BivarSeries &BivarSeries::operator-=(BivarSeries const &rhs)
{
  _rows.resize(static_cast<std::size_t>(std::min(order_x(), rhs.order_x())) + 1);
  for (std::size_t i = 0; i < _rows.size(); ++i)
    _rows[i] -= rhs._rows[i];
  return *this;
}

BivarSeries &BivarSeries::operator*=(BivarSeries const &rhs)
{
  int const nx = std::min(order_x(), rhs.order_x());
  int const ny = std::min(order_y(), rhs.order_y());
  std::vector<Series> out(static_cast<std::size_t>(nx) + 1, Series(ny));
  for (int i = 0; i <= nx; ++i) {
    if (_rows[static_cast<std::size_t>(i)].is_zero())
      continue;
    for (int j = 0; i + j <= nx; ++j)
      out[static_cast<std::size_t>(i + j)] += _rows[static_cast<std::size_t>(i)] * rhs._rows[static_cast<std::size_t>(j)];
  }
  _rows = std::move(out);
  return *this;
}

BivarSeries &BivarSeries::operator*=(Rational const &rhs)
{
  for (auto &r : _rows)
    r *= rhs;
  return *this;
}

bool operator==(BivarSeries const &a, BivarSeries const &b)
{
  int const n = std::min(a.order_x(), b.order_x());
  for (int i = 0; i <= n; ++i)
    if (!(a.x_coefficient(i) == b.x_coefficient(i)))
      return false;
  return true;
}

BivarSeries bivar_div(BivarSeries const &a, BivarSeries const &b)
{
  if (sgn(b.coefficient(0, 0)) == 0)
    throw Error(ErrorCode::DivisionByNonUnit, "divisor has zero constant term");
  int const nx = std::min(a.order_x(), b.order_x());
  int const ny = std::min(a.order_y(), b.order_y());
  BivarSeries q(nx, ny);
  for (int k = 0; k <= nx; ++k) {
    Series acc = a._rows[static_cast<std::size_t>(k)].truncated(ny);
    for (int i = 0; i < k; ++i)
      acc -= q._rows[static_cast<std::size_t>(i)] * b._rows[static_cast<std::size_t>(k - i)];
    q._rows[static_cast<std::size_t>(k)] = series_div(acc, b._rows[0]);
  }
  return q;
}

BivarSeries operator/(BivarSeries const &a, BivarSeries const &b) { return bivar_div(a, b); }

BivarSeries bivar_sqrt(BivarSeries const &a)
{
  if (a.coefficient(0, 0) != 1)
    throw Error(ErrorCode::BadConstantTerm,
                "square root needs constant term 1, got " + a.coefficient(0, 0).get_str());
  int const nx = a.order_x();
  BivarSeries s(nx, a.order_y());
  s._rows[0] = series_sqrt(a._rows[0]);
  Series const twice_s0 = s._rows[0] * Rational(2);
  for (int k = 1; k <= nx; ++k) {
    Series acc = a._rows[static_cast<std::size_t>(k)];
    for (int i = 1; i < k; ++i)
      acc -= s._rows[static_cast<std::size_t>(i)] * s._rows[static_cast<std::size_t>(k - i)];
    s._rows[static_cast<std::size_t>(k)] = series_div(acc, twice_s0);
  }
  return s;
}

BivarSeries bivar_compose(BivarSeries const &f, Series const &gx, Series const &gy)
{
  if (sgn(gx[0]) != 0 || sgn(gy[0]) != 0)
    throw Error(ErrorCode::NonzeroInnerConstant, "substituted series must have zero constant term");
  int const nx = std::min(f.order_x(), gx.order());
  int const ny = std::min(f.order_y(), gy.order());
  BivarSeries out(nx, ny);
  Series power = Series::constant(1, nx);
  Series const gx_n = gx.truncated(nx);
  for (int i = 0; i <= nx; ++i) {
    Series const row = series_compose(f._rows[static_cast<std::size_t>(i)].truncated(ny), gy.truncated(ny));
    // gx^i (x) row(gy(y)) is an outer product.
    for (int a = 0; a <= nx; ++a) {
      if (sgn(power[a]) == 0)
        continue;
      for (int b = 0; b <= ny; ++b)
        out._rows[static_cast<std::size_t>(a)][b] += power[a] * row[b];
    }
    power *= gx_n;
  }
  return out;
}

std::string to_string(BivarSeries const &s)
{
  std::string out;
  for (int i = 0; i <= s.order_x(); ++i) {
    out += "x^" + std::to_string(i) + ": ";
    std::string poly;
    for (int j = 0; j <= s.order_y(); ++j)
      if (sgn(s.coefficient(i, j)) != 0)
        poly += term(s.coefficient(i, j), j, 'y', poly.empty());
    out += poly.empty() ? "0" : poly;
    out += '\n';
  }
  return out;
}

std::string to_json(BivarSeries const &s)
{
  nlohmann::json j = nlohmann::json::array();
  for (int i = 0; i <= s.order_x(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k <= s.order_y(); ++k)
      row.push_back(s.coefficient(i, k).get_str());
    j.push_back(std::move(row));
  }
  return j.dump();
}

std::string to_bfile(BivarSeries const &s)
{
  std::ostringstream os;
  for (int i = 0; i <= s.order_x(); ++i)
    for (int k = 0; k <= s.order_y(); ++k)
      if (sgn(s.coefficient(i, k)) != 0)
        os << i << ' ' << k << ' ' << s.coefficient(i, k).get_str() << '\n';
  return os.str();
}

} // namespace finv
