#include "finv/census.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "finv/error.hpp"
#include "finv/generating_functions.hpp"
#include "finv/motzkin.hpp"

namespace finv
{

namespace
{

Permutation const p4321{4, 3, 2, 1};
Permutation const p3412{3, 4, 1, 2};

bool contains(std::vector<Permutation> const &set, Permutation const &p)
{
  return std::find(set.begin(), set.end(), p) != set.end();
}

struct Plan
{
  LabellingFilter filter;
  std::vector<Permutation> residual; // patterns still to be filtered
};

Plan make_plan(CensusQuery const &q)
{
  if (q.n < 1)
    throw Error(ErrorCode::OutOfRange, "census length must be >= 1");
  for (auto const &p : q.avoid)
    if (p.size() < 3 || p.size() > 4)
      throw Error(ErrorCode::OutOfRange,
                  "pattern " + to_compact_string(p) + " must have length 3 or 4");

  GenerationStrategy s = q.strategy;
  if (s == GenerationStrategy::Auto) {
    if (contains(q.avoid, p4321))
      s = GenerationStrategy::UnitaryPaths;
    else if (contains(q.avoid, p3412))
      s = GenerationStrategy::MaximalPaths;
    else
      s = GenerationStrategy::AllLabellings;
  }

  Plan plan{LabellingFilter::All, {}};
  Permutation const *characterized = nullptr;
  switch (s) {
  case GenerationStrategy::UnitaryPaths:
    if (!contains(q.avoid, p4321))
      throw Error(ErrorCode::OutOfDomain, "unitary-path generation needs 4321 in the avoid set");
    plan.filter = LabellingFilter::Unitary;
    characterized = &p4321;
    break;
  case GenerationStrategy::MaximalPaths:
    if (!contains(q.avoid, p3412))
      throw Error(ErrorCode::OutOfDomain, "maximal-path generation needs 3412 in the avoid set");
    plan.filter = LabellingFilter::Maximal;
    characterized = &p3412;
    break;
  case GenerationStrategy::AllLabellings:
  case GenerationStrategy::Auto:
    break;
  }
  for (auto const &p : q.avoid)
    if (!characterized || p != *characterized)
      if (!contains(plan.residual, p))
        plan.residual.push_back(p);
  return plan;
}

void scan(int n, Plan const &plan, std::span<Step const> prefix,
          std::function<void(Permutation const &)> const &visit)
{
  for_each_path(n, plan.filter, prefix, [&](LabelledMotzkinPath const &path) {
    Permutation p = involution_of_path(path);
    if (avoids_all(p, plan.residual))
      visit(p);
  });
}

// Runs work(prefix_index) for every prefix, spread over the given number of
// threads. Each index is processed exactly once.
void parallel_over(std::size_t count, unsigned threads, std::function<void(std::size_t)> const &work)
{
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++)
        work(i);
    });
}

int shard_prefix_length(int n) { return std::min(n, 6); }

BucketKey key_for(Permutation const &p, GroupBy g)
{
  BucketKey k;
  if (g == GroupBy::FineClass || g == GroupBy::FineClassAndFixedPoints)
    k.fine_class = classify(p);
  if (g == GroupBy::FixedPoints || g == GroupBy::FineClassAndFixedPoints)
    k.fixed_points = fixed_point_count(p);
  return k;
}

using BucketMap = std::map<BucketKey, Bucket>;

void tally(BucketMap &m, Permutation const &p, GroupBy g, std::size_t cap)
{
  auto key = key_for(p, g);
  auto &b = m[key];
  b.key = key;
  ++b.count;
  if (b.witnesses.size() < cap)
    b.witnesses.push_back(p);
}

void merge_into(BucketMap &dst, BucketMap const &src, std::size_t cap)
{
  for (auto const &[key, b] : src) {
    auto &d = dst[key];
    d.key = key;
    d.count += b.count;
    for (auto const &w : b.witnesses) {
      if (d.witnesses.size() >= cap)
        break;
      d.witnesses.push_back(w);
    }
  }
}

std::string key_cell(std::optional<FineClass> c) { return c ? std::string(to_token(*c)) : ""; }
std::string key_cell(std::optional<int> k) { return k ? std::to_string(*k) : ""; }

std::string pattern_names(std::vector<Permutation> const &avoid)
{
  std::string out;
  for (auto const &p : avoid) {
    if (!out.empty())
      out += ',';
    out += to_compact_string(p);
  }
  return out;
}

} // anonymous namespace

std::string_view to_string(GroupBy g) noexcept
{
  switch (g) {
  case GroupBy::None: return "none";
  case GroupBy::FineClass: return "fine_class";
  case GroupBy::FixedPoints: return "fixed_points";
  case GroupBy::FineClassAndFixedPoints: return "fine_class,fixed_points";
  }
  return "none";
}

std::uint64_t CensusReport::count(BucketKey const &key) const
{
  for (auto const &b : buckets)
    if (b.key == key)
      return b.count;
  return 0;
}

std::vector<Permutation> parse_pattern_list(std::string_view text)
{
  std::vector<Permutation> out;
  std::size_t i = 0;
  while (i < text.size()) {
    auto j = text.find_first_of(", ", i);
    if (j == std::string_view::npos)
      j = text.size();
    if (j > i) {
      auto p = parse_permutation(text.substr(i, j - i));
      if (p.size() < 3 || p.size() > 4)
        throw Error(ErrorCode::OutOfRange,
                    "pattern " + to_compact_string(p) + " must have length 3 or 4");
      out.push_back(std::move(p));
    }
    i = j + 1;
  }
  return out;
}

void for_each_involution(CensusQuery const &q,
                         std::function<void(Permutation const &)> const &visit)
{
  Plan const plan = make_plan(q);
  if (q.threads <= 1) {
    scan(q.n, plan, {}, visit);
    return;
  }
  auto const prefixes = path_prefixes(q.n, shard_prefix_length(q.n));
  std::vector<std::vector<Permutation>> shards(prefixes.size());
  parallel_over(prefixes.size(), q.threads, [&](std::size_t i) {
    scan(q.n, plan, prefixes[i], [&](Permutation const &p) { shards[i].push_back(p); });
  });
  for (auto const &shard : shards)
    for (auto const &p : shard)
      visit(p);
}

std::vector<Permutation> enumerate_involutions(CensusQuery const &q)
{
  std::vector<Permutation> out;
  for_each_involution(q, [&](Permutation const &p) { out.push_back(p); });
  return out;
}

CensusReport run_census(CensusQuery const &q)
{
  Plan const plan = make_plan(q);
  auto const prefixes = path_prefixes(q.n, shard_prefix_length(q.n));
  std::vector<BucketMap> partial(prefixes.size());
  parallel_over(prefixes.size(), q.threads, [&](std::size_t i) {
    scan(q.n, plan, prefixes[i],
         [&](Permutation const &p) { tally(partial[i], p, q.group_by, q.witness_cap); });
  });

  BucketMap merged;
  if (q.group_by == GroupBy::FineClass)
    for (FineClass c : all_fine_classes)
      merged[BucketKey{c, std::nullopt}].key = BucketKey{c, std::nullopt};
  for (auto const &m : partial)
    merge_into(merged, m, q.witness_cap);

  CensusReport r;
  r.n = q.n;
  r.avoid = q.avoid;
  r.group_by = q.group_by;
  for (auto &[key, b] : merged) {
    r.total += b.count;
    r.buckets.push_back(std::move(b));
  }
  if (q.group_by == GroupBy::None && r.buckets.empty())
    r.buckets.push_back(Bucket{});
  return r;
}

std::string format_report(CensusReport const &r, ReportFormat format, bool with_witnesses)
{
  bool const by_class =
    r.group_by == GroupBy::FineClass || r.group_by == GroupBy::FineClassAndFixedPoints;
  bool const by_fixed =
    r.group_by == GroupBy::FixedPoints || r.group_by == GroupBy::FineClassAndFixedPoints;

  auto witnesses_of = [](Bucket const &b) {
    std::string out;
    for (auto const &w : b.witnesses) {
      if (!out.empty())
        out += ';';
      out += to_string(w);
    }
    return out;
  };

  std::ostringstream os;
  switch (format) {
  case ReportFormat::Json: {
    nlohmann::json j;
    j["n"] = r.n;
    j["avoid"] = nlohmann::json::array();
    for (auto const &p : r.avoid)
      j["avoid"].push_back(to_compact_string(p));
    j["group_by"] = std::string(to_string(r.group_by));
    j["total"] = r.total;
    j["buckets"] = nlohmann::json::array();
    for (auto const &b : r.buckets) {
      nlohmann::json jb;
      if (by_class)
        jb["fine_class"] = key_cell(b.key.fine_class);
      if (by_fixed)
        jb["fixed_points"] = b.key.fixed_points.value_or(0);
      jb["count"] = b.count;
      if (with_witnesses) {
        jb["witnesses"] = nlohmann::json::array();
        for (auto const &w : b.witnesses)
          jb["witnesses"].push_back(to_string(w));
      }
      j["buckets"].push_back(std::move(jb));
    }
    os << j.dump() << '\n';
    break;
  }
  case ReportFormat::Csv: {
    if (by_class)
      os << "fine_class,";
    if (by_fixed)
      os << "fixed_points,";
    os << "count";
    if (with_witnesses)
      os << ",witnesses";
    os << '\n';
    for (auto const &b : r.buckets) {
      if (by_class)
        os << key_cell(b.key.fine_class) << ',';
      if (by_fixed)
        os << key_cell(b.key.fixed_points) << ',';
      os << b.count;
      if (with_witnesses)
        os << ',' << witnesses_of(b);
      os << '\n';
    }
    break;
  }
  case ReportFormat::Text: {
    os << "n = " << r.n << ", avoiding {" << pattern_names(r.avoid) << "}, grouped by "
       << to_string(r.group_by) << '\n';
    if (r.group_by != GroupBy::None) {
      for (auto const &b : r.buckets) {
        std::string label;
        if (by_class)
          label += key_cell(b.key.fine_class);
        if (by_class && by_fixed)
          label += " / ";
        if (by_fixed)
          label += key_cell(b.key.fixed_points) + " fixed";
        os << "  " << label << std::string(label.size() < 32 ? 32 - label.size() : 1, ' ')
           << b.count << '\n';
        if (with_witnesses && !b.witnesses.empty())
          os << "    " << witnesses_of(b) << '\n';
      }
    } else if (with_witnesses && !r.buckets.empty()) {
      os << "  " << witnesses_of(r.buckets.front()) << '\n';
    }
    os << "  total" << std::string(27, ' ') << r.total << '\n';
    break;
  }
  }
  return os.str();
}

std::vector<Permutation> appendix_listing(int n)
{
  if (n < 5 || n > 10)
    throw Error(ErrorCode::OutOfRange, "appendix listings cover lengths 5..10");
  CensusQuery q;
  q.n = n;
  q.avoid = {p4321};
  std::vector<Permutation> out;
  for_each_involution(q, [&](Permutation const &p) {
    if (is_simple(p))
      out.push_back(p);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Reconciliation

namespace
{

enum class Selection
{
  All,
  Type12,
  Type21,
  Simple,
  Inflation,
  SimpleOrInflation,
};

enum class Axis
{
  Length,                // univariate coefficient of x^n
  LengthAndFixed,        // coefficient of x^n y^k
  TranspositionsAndFixed // coefficient of x^(n-k) y^k
};

struct Target
{
  std::string_view name;
  std::vector<Permutation> avoid;
  Selection selection;
  Axis axis;
};

std::vector<Target> const &targets()
{
  static std::vector<Target> const t = {
    {"I4321", {p4321}, Selection::All, Axis::Length},
    {"I3412", {p3412}, Selection::All, Axis::Length},
    {"alpha_I4321", {p4321}, Selection::Type12, Axis::Length},
    {"beta_I4321", {p4321}, Selection::Type21, Axis::Length},
    {"gamma_plus_delta", {p4321}, Selection::SimpleOrInflation, Axis::Length},
    {"gamma_x", {p4321}, Selection::Simple, Axis::Length},
    {"delta_I4321", {p4321}, Selection::Inflation, Axis::Length},
    {"I4321_132", {p4321, Permutation{1, 3, 2}}, Selection::All, Axis::Length},
    {"I4321_312", {p4321, Permutation{3, 1, 2}}, Selection::All, Axis::Length},
    {"I3412_123", {p3412, Permutation{1, 2, 3}}, Selection::All, Axis::Length},
    {"I3412_1234", {p3412, Permutation{1, 2, 3, 4}}, Selection::All, Axis::Length},
    {"I3412_132", {p3412, Permutation{1, 3, 2}}, Selection::All, Axis::Length},
    {"I3412_213", {p3412, Permutation{2, 1, 3}}, Selection::All, Axis::Length},
    {"f_xy", {p4321}, Selection::All, Axis::LengthAndFixed},
    {"beta_xy", {p4321}, Selection::Type21, Axis::LengthAndFixed},
    {"gamma_plus_delta_xy", {p4321}, Selection::SimpleOrInflation, Axis::LengthAndFixed},
    {"gamma_plus_delta_xy_substituted", {p4321}, Selection::SimpleOrInflation,
     Axis::TranspositionsAndFixed},
    {"gamma_xy", {p4321}, Selection::Simple, Axis::TranspositionsAndFixed},
  };
  return t;
}

bool selected(Selection s, FineClass c)
{
  switch (s) {
  case Selection::All: return true;
  case Selection::Type12: return c == FineClass::Type12;
  case Selection::Type21: return c == FineClass::Type21;
  case Selection::Simple: return c == FineClass::Simple;
  case Selection::Inflation: return c == FineClass::InflationOfSimple;
  case Selection::SimpleOrInflation:
    return c == FineClass::Simple || c == FineClass::InflationOfSimple;
  }
  return false;
}

std::string histogram_string(std::map<int, Rational> const &h)
{
  std::string out = "{";
  for (auto const &[k, v] : h) {
    if (sgn(v) == 0)
      continue;
    if (out.size() > 1)
      out += ", ";
    out += std::to_string(k) + ": " + v.get_str();
  }
  return out + "}";
}

} // anonymous namespace

bool Reconciliation::all_pass() const
{
  return !rows.empty() &&
         std::all_of(rows.begin(), rows.end(), [](ReconcileRow const &r) { return r.pass; });
}

std::vector<std::string_view> reconcilable_series()
{
  std::vector<std::string_view> out;
  for (auto const &t : targets())
    out.push_back(t.name);
  return out;
}

Reconciliation reconcile(std::string_view series_name, int n_max, unsigned threads)
{
  auto const &all = targets();
  auto it = std::find_if(all.begin(), all.end(),
                         [&](Target const &t) { return t.name == series_name; });
  if (it == all.end())
    throw Error(ErrorCode::UnknownSeries, "unknown series '" + std::string(series_name) + "'");
  if (n_max < 1)
    throw Error(ErrorCode::OutOfRange, "reconcile needs n_max >= 1");
  Target const &target = *it;

  AnySeries const series = named_series(series_name, n_max);

  Reconciliation out;
  out.series = std::string(series_name);
  for (int n = 1; n <= n_max; ++n) {
    CensusQuery q;
    q.n = n;
    q.avoid = target.avoid;
    q.group_by = GroupBy::FineClassAndFixedPoints;
    q.witness_cap = 1;
    q.threads = threads;
    auto const report = run_census(q);

    std::map<int, Rational> census_hist;
    std::map<int, Permutation> witness;
    for (auto const &b : report.buckets) {
      if (!b.key.fine_class || !selected(target.selection, *b.key.fine_class))
        continue;
      int const k = *b.key.fixed_points;
      census_hist[k] += Rational(static_cast<unsigned long>(b.count));
      if (!b.witnesses.empty() && !witness.count(k))
        witness.emplace(k, b.witnesses.front());
    }

    ReconcileRow row;
    row.n = n;
    if (target.axis == Axis::Length) {
      Rational total = 0;
      for (auto const &[k, v] : census_hist)
        total += v;
      Rational const &expected = std::get<Series>(series)[n];
      row.expected = expected.get_str();
      row.actual = total.get_str();
      row.pass = expected == total;
      if (sgn(expected) == 0 && sgn(total) == 0)
        continue;
      if (!row.pass)
        row.detail = "census " + row.actual + " vs series " + row.expected;
    } else {
      auto const &bs = std::get<BivarSeries>(series);
      std::map<int, Rational> series_hist;
      for (int k = 0; k <= n; ++k) {
        int const xi = target.axis == Axis::LengthAndFixed ? n : n - k;
        if (xi <= bs.order_x() && k <= bs.order_y())
          series_hist[k] = bs.coefficient(xi, k);
      }
      row.expected = histogram_string(series_hist);
      row.actual = histogram_string(census_hist);
      if (row.expected == "{}" && row.actual == "{}")
        continue;
      row.pass = true;
      for (int k = 0; k <= n && row.pass; ++k) {
        Rational const s = series_hist.count(k) ? series_hist[k] : Rational(0);
        Rational const c = census_hist.count(k) ? census_hist[k] : Rational(0);
        if (s != c) {
          row.pass = false;
          row.detail = std::to_string(k) + " fixed points: census " + c.get_str() + " vs series " +
                       s.get_str();
          if (witness.count(k))
            row.detail += ", e.g. " + to_string(witness.at(k));
        }
      }
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string format_reconciliation(Reconciliation const &r, ReportFormat format)
{
  std::ostringstream os;
  switch (format) {
  case ReportFormat::Json: {
    nlohmann::json j;
    j["series"] = r.series;
    j["all_pass"] = r.all_pass();
    j["rows"] = nlohmann::json::array();
    for (auto const &row : r.rows) {
      nlohmann::json jr{{"n", row.n}, {"series", row.expected}, {"census", row.actual},
                        {"pass", row.pass}};
      if (!row.detail.empty())
        jr["detail"] = row.detail;
      j["rows"].push_back(std::move(jr));
    }
    os << j.dump() << '\n';
    break;
  }
  case ReportFormat::Csv:
    os << "n,series,census,status\n";
    for (auto const &row : r.rows)
      os << row.n << ",\"" << row.expected << "\",\"" << row.actual << "\","
         << (row.pass ? "pass" : "FAIL") << '\n';
    break;
  case ReportFormat::Text:
    for (auto const &row : r.rows) {
      os << (row.pass ? "pass" : "FAIL") << "  n=" << row.n << "  series=" << row.expected
         << "  census=" << row.actual;
      if (!row.detail.empty())
        os << "  (" << row.detail << ")";
      os << '\n';
    }
    os << r.series << ": " << (r.all_pass() ? "all rows pass" : "MISMATCH") << '\n';
    break;
  }
  return os.str();
}

std::string format_bfile(std::vector<std::pair<int, std::uint64_t>> const &terms)
{
  std::ostringstream os;
  for (auto const &[n, a] : terms)
    os << n << ' ' << a << '\n';
  return os.str();
}

} // namespace finv
