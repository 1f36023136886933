#ifndef FINV_CENSUS_HPP
#define FINV_CENSUS_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finv/fine_structure.hpp"
#include "finv/permutation.hpp"

namespace finv
{

enum class GroupBy
{
  None,
  FineClass,
  FixedPoints,
  FineClassAndFixedPoints,
};

std::string_view to_string(GroupBy g) noexcept;

// How involutions are produced before filtering by the remaining patterns.
enum class GenerationStrategy
{
  Auto,          // unitary paths if 4321 is avoided, maximal if 3412 is
  UnitaryPaths,  // requires 4321 in the avoid set
  MaximalPaths,  // requires 3412 in the avoid set
  AllLabellings, // every labelled path, every pattern filtered
};

struct CensusQuery
{
  int n = 1;
  std::vector<Permutation> avoid;
  GroupBy group_by = GroupBy::None;
  std::size_t witness_cap = 100;
  unsigned threads = 1;
  GenerationStrategy strategy = GenerationStrategy::Auto;
};

struct BucketKey
{
  std::optional<FineClass> fine_class;
  std::optional<int> fixed_points;

  friend auto operator<=>(BucketKey const &, BucketKey const &) = default;
};

struct Bucket
{
  BucketKey key;
  std::uint64_t count = 0;
  std::vector<Permutation> witnesses;
};

struct CensusReport
{
  int n = 0;
  std::vector<Permutation> avoid;
  GroupBy group_by = GroupBy::None;
  std::uint64_t total = 0;
  std::vector<Bucket> buckets; // sorted by key

  // Zero when the bucket is absent.
  std::uint64_t count(BucketKey const &key) const;
};

enum class ReportFormat
{
  Text,
  Csv,
  Json,
};

// "4321,132" or "4321 132". Patterns must have length 3 or 4; throws
// Error(Parse) or Error(OutOfRange).
std::vector<Permutation> parse_pattern_list(std::string_view text);

// Throws Error(OutOfRange) for n < 1 or a pattern of length other than 3, 4,
// and Error(OutOfDomain) for a strategy the avoid set does not support.
void for_each_involution(CensusQuery const &q,
                         std::function<void(Permutation const &)> const &visit);

std::vector<Permutation> enumerate_involutions(CensusQuery const &q);

CensusReport run_census(CensusQuery const &q);

std::string format_report(CensusReport const &r, ReportFormat format, bool with_witnesses = false);

// Every simple involution of length n in I(4321), lexicographically sorted.
// Throws Error(OutOfRange) unless 5 <= n <= 10.
std::vector<Permutation> appendix_listing(int n);

struct ReconcileRow
{
  int n = 0;
  std::string expected; // from the series
  std::string actual;   // from the census
  bool pass = false;
  std::string detail;   // first discrepancy, when failing
};

struct Reconciliation
{
  std::string series;
  std::vector<ReconcileRow> rows;

  bool all_pass() const;
};

// Compares census counts with the coefficients of a named series for
// n = 1..n_max. Lengths where both sides are zero get no row. Throws
// Error(UnknownSeries).
Reconciliation reconcile(std::string_view series_name, int n_max, unsigned threads = 1);

std::vector<std::string_view> reconcilable_series();

std::string format_reconciliation(Reconciliation const &r, ReportFormat format);

// "n a(n)" lines.
std::string format_bfile(std::vector<std::pair<int, std::uint64_t>> const &terms);

} // namespace finv

#endif
