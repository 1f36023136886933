#include "finv/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "finv/error.hpp"

namespace finv
{

namespace
{

bool is_bijection(std::span<int const> values)
{
  int const n = static_cast<int>(values.size());
  std::vector<char> seen(values.size() + 1, 0);
  for (int v : values) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

} // anonymous namespace

Permutation::Permutation(std::vector<int> values) : _values(std::move(values))
{
  if (_values.empty())
    throw Error(ErrorCode::NotABijection, "permutation must have length >= 1");
  if (!is_bijection(_values))
    throw Error(ErrorCode::NotABijection,
                "values are not a bijection on 1.." + std::to_string(_values.size()));
}

Permutation Permutation::identity(int n)
{
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation make_permutation(std::span<int const> values)
{
  return Permutation(std::vector<int>(values.begin(), values.end()));
}

Permutation standardize(std::span<int const> values)
{
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> out(values.size());
  for (std::size_t r = 0; r < order.size(); ++r)
    out[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
  if (out.empty())
    throw Error(ErrorCode::NotABijection, "cannot standardize an empty sequence");
  return Permutation(Permutation::Unchecked{}, std::move(out));
}

Permutation parse_permutation(std::string_view text)
{
  bool const has_separator =
    text.find_first_of(" \t,") != std::string_view::npos;

  std::vector<int> values;
  std::size_t i = 0;
  auto fail = [&](std::string const &why) -> Error {
    return Error(ErrorCode::Parse,
                 "cannot parse permutation '" + std::string(text) + "': " + why);
  };

  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == ',') {
      ++i;
    } else if (c == '(') {
      auto close = text.find(')', i);
      if (close == std::string_view::npos)
        throw fail("unbalanced '('");
      int v = 0;
      auto inner = text.substr(i + 1, close - i - 1);
      auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), v);
      if (ec != std::errc{} || ptr != inner.data() + inner.size() || inner.empty())
        throw fail("bad parenthesized entry");
      values.push_back(v);
      i = close + 1;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (has_separator) {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
          ++j;
        int v = 0;
        std::from_chars(text.data() + i, text.data() + j, v);
        values.push_back(v);
        i = j;
      } else {
        values.push_back(c - '0');
        ++i;
      }
    } else {
      throw fail(std::string("unexpected character '") + c + "'");
    }
  }
  if (values.empty())
    throw fail("empty");
  return Permutation(std::move(values));
}

std::string to_string(Permutation const &p)
{
  std::string out;
  for (int v : p.values()) {
    if (!out.empty())
      out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string to_compact_string(Permutation const &p)
{
  if (p.size() > 9)
    return to_string(p);
  std::string out;
  for (int v : p.values())
    out += static_cast<char>('0' + v);
  return out;
}

bool is_involution(Permutation const &p) noexcept
{
  for (int i = 1; i <= p.size(); ++i)
    if (p(p(i)) != i)
      return false;
  return true;
}

Permutation CycleDecomposition::to_permutation() const
{
  std::vector<int> v(static_cast<std::size_t>(length), 0);
  for (auto const &t : transpositions) {
    v[static_cast<std::size_t>(t.lo - 1)] = t.hi;
    v[static_cast<std::size_t>(t.hi - 1)] = t.lo;
  }
  for (int f : fixed_points)
    v[static_cast<std::size_t>(f - 1)] = f;
  return Permutation(std::move(v));
}

CycleDecomposition cycle_decomposition(Permutation const &p)
{
  if (!is_involution(p))
    throw Error(ErrorCode::NotAnInvolution, to_string(p) + " is not an involution");
  CycleDecomposition cd;
  cd.length = p.size();
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) == i)
      cd.fixed_points.push_back(i);
    else if (p(i) > i)
      cd.transpositions.push_back({i, p(i)});
  }
  return cd;
}

bool contains_pattern(Permutation const &p, Permutation const &pattern)
{
  int const n = p.size();
  int const k = pattern.size();
  if (k > n)
    return false;

  // For each pattern entry j, the earlier entries holding the nearest
  // smaller and nearest larger values. A partial embedding stays
  // order-isomorphic iff each new value sits strictly between the images of
  // those two neighbours.
  std::vector<int> below(static_cast<std::size_t>(k), -1);
  std::vector<int> above(static_cast<std::size_t>(k), -1);
  for (int j = 0; j < k; ++j) {
    int const qj = pattern(j + 1);
    for (int t = 0; t < j; ++t) {
      int const qt = pattern(t + 1);
      if (qt < qj && (below[j] < 0 || qt > pattern(below[j] + 1)))
        below[j] = t;
      if (qt > qj && (above[j] < 0 || qt < pattern(above[j] + 1)))
        above[j] = t;
    }
  }

  std::vector<int> chosen(static_cast<std::size_t>(k), 0);
  auto search = [&](auto &&self, int j, int start) -> bool {
    if (j == k)
      return true;
    for (int i = start; i <= n - (k - j) + 1; ++i) {
      int const v = p(i);
      if (below[j] >= 0 && v < chosen[below[j]])
        continue;
      if (above[j] >= 0 && v > chosen[above[j]])
        continue;
      chosen[j] = v;
      if (self(self, j + 1, i + 1))
        return true;
    }
    return false;
  };
  return search(search, 0, 1);
}

bool avoids_all(Permutation const &p, std::span<Permutation const> patterns)
{
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](Permutation const &q) { return contains_pattern(p, q); });
}

Permutation reverse_complement(Permutation const &p)
{
  int const n = p.size();
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    v[static_cast<std::size_t>(i - 1)] = n + 1 - p(n + 1 - i);
  return Permutation(std::move(v));
}

std::vector<PositionRole> position_roles(Permutation const &p)
{
  std::vector<PositionRole> roles;
  roles.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) > i)
      roles.push_back(PositionRole::Excedance);
    else if (p(i) < i)
      roles.push_back(PositionRole::Deficiency);
    else
      roles.push_back(PositionRole::Fixed);
  }
  return roles;
}

int fixed_point_count(Permutation const &p) noexcept
{
  int count = 0;
  for (int i = 1; i <= p.size(); ++i)
    count += (p(i) == i);
  return count;
}

} // namespace finv
