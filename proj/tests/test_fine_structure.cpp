#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "finv/error.hpp"
#include "finv/fine_structure.hpp"
#include "oracles.hpp"

using namespace finv;

namespace
{

Permutation P(std::string const &s) { return parse_permutation(s); }

ErrorCode code_of(std::function<void()> const &f)
{
  try {
    f();
  } catch (Error const &e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalMismatch;
}

oracle::Seq V(Permutation const &p) { return {p.values().begin(), p.values().end()}; }

void for_each_I4321(int n, std::function<void(Permutation const &)> const &visit)
{
  for_each_path(n, LabellingFilter::Unitary,
                [&](LabelledMotzkinPath const &path) { visit(involution_of_path(path)); });
}

void for_each_I3412(int n, std::function<void(Permutation const &)> const &visit)
{
  for_each_path(n, LabellingFilter::Maximal,
                [&](LabelledMotzkinPath const &path) { visit(involution_of_path(path)); });
}

FineClass oracle_class(oracle::Seq const &v)
{
  if (v.size() == 1)
    return FineClass::One;
  if (oracle::components(v).size() > 1)
    return FineClass::Type12;
  if (oracle::skew_decomposable(v))
    return FineClass::Type21;
  if (oracle::simple(v))
    return FineClass::Simple;
  return FineClass::InflationOfSimple;
}

// Deficiency points of transpositions i and i + 1 (ordered by smaller
// element) sit at adjacent positions of the plot.
bool oracle_down_connected(oracle::Seq const &v, std::size_t i)
{
  std::vector<int> hi;
  for (int j = 1; j <= static_cast<int>(v.size()); ++j)
    if (v[static_cast<std::size_t>(j - 1)] > j)
      hi.push_back(v[static_cast<std::size_t>(j - 1)]);
  return std::abs(hi[i + 1] - hi[i]) == 1;
}

std::set<oracle::Seq> type21_normal_forms(int n)
{
  std::set<oracle::Seq> out;
  for (int k = 1; 2 * k <= n; ++k) {
    int const m = n - 2 * k;
    oracle::Seq v;
    for (int x = k + m + 1; x <= n; ++x)
      v.push_back(x);
    for (int x = k + 1; x <= k + m; ++x)
      v.push_back(x);
    for (int x = 1; x <= k; ++x)
      v.push_back(x);
    out.insert(v);
  }
  return out;
}

std::vector<Step> steps_of(std::string const &s)
{
  std::vector<Step> out;
  for (char c : s)
    out.push_back(static_cast<Step>(c));
  return out;
}

} // namespace

TEST_CASE("intervals")
{
  CHECK(proper_intervals(P("468152937")).empty());
  CHECK(proper_intervals(P("2413")).empty());
  CHECK_FALSE(proper_intervals(P("628951734")).empty());

  for (int n = 1; n <= 8; ++n)
    for (auto const &v : oracle::all_permutations(n)) {
      std::vector<std::pair<int, int>> got;
      for (auto const &iv : proper_intervals(Permutation(v)))
        got.emplace_back(iv.lo, iv.hi);
      REQUIRE(got == oracle::proper_intervals(v));
    }
}

TEST_CASE("simplicity")
{
  CHECK(is_simple(P("42513")));
  CHECK_FALSE(is_simple(P("3412")));
  CHECK(is_simple(P("35142")));
  CHECK(is_simple(P("2413")));
  CHECK_FALSE(is_simple(P("21")));
  CHECK(is_simple_inclusive(P("1")));
  CHECK(is_simple_inclusive(P("12")));
  CHECK(is_simple_inclusive(P("21")));
  CHECK_FALSE(is_simple_inclusive(P("123")));
  CHECK_FALSE(is_simple_inclusive(P("321")));
  CHECK(is_simple_inclusive(P("2413")));

  for (int n = 1; n <= 8; ++n)
    for (auto const &v : oracle::all_permutations(n))
      REQUIRE(is_simple(Permutation(v)) == oracle::simple(v));
}

TEST_CASE("path criterion for simplicity")
{
  CHECK(is_simple_via_path(P("468152937")));
  CHECK_FALSE(is_simple_via_path(P("628951734")));
  CHECK_FALSE(is_simple_via_path(P("3412")));
  CHECK_FALSE(is_simple_via_path(P("321")));
  CHECK(code_of([] { is_simple_via_path(P("932857641")); }) == ErrorCode::OutOfDomain);
  CHECK(code_of([] { is_simple_via_path(P("2314")); }) == ErrorCode::OutOfDomain);

  for (int n = 1; n <= 12; ++n)
    for_each_I4321(n, [&](Permutation const &p) { REQUIRE(is_simple_via_path(p) == is_simple(p)); });
}

TEST_CASE("connected components")
{
  CHECK(connected_components(P("21435")) == std::vector<Permutation>{P("21"), P("21"), P("1")});
  CHECK(connected_components(P("468152937")) == std::vector<Permutation>{P("468152937")});
  CHECK(connected_components(P("3412")) == std::vector<Permutation>{P("3412")});

  for (int n = 1; n <= 8; ++n)
    for (auto const &v : oracle::all_permutations(n)) {
      std::vector<oracle::Seq> got;
      for (auto const &c : connected_components(Permutation(v)))
        got.push_back(V(c));
      REQUIRE(got == oracle::components(v));
      REQUIRE(is_sum_decomposable(Permutation(v)) == (got.size() > 1));
      REQUIRE(is_skew_decomposable(Permutation(v)) == oracle::skew_decomposable(v));
    }
}

TEST_CASE("classification")
{
  CHECK(classify(P("456123")) == FineClass::Type21);
  CHECK(classify(P("42513")) == FineClass::Simple);
  CHECK(classify(P("12")) == FineClass::Type12);
  CHECK(classify(P("21")) == FineClass::Type21);
  CHECK(classify(P("1")) == FineClass::One);
  CHECK(classify(P("351624")) == FineClass::Simple);
  CHECK(code_of([] { classify(P("2314")); }) == ErrorCode::NotAnInvolution);

  CHECK(to_token(FineClass::InflationOfSimple) == "inflation_of_simple");
  for (FineClass c : all_fine_classes)
    CHECK(parse_fine_class(to_token(c)) == c);
  CHECK_FALSE(parse_fine_class("simpler").has_value());

  for (int n = 1; n <= 10; ++n)
    oracle::for_each_involution(n, [&](oracle::Seq const &v) {
      REQUIRE(classify(Permutation(v)) == oracle_class(v));
    });
}

TEST_CASE("inflation")
{
  std::vector<Permutation> const two123{P("123"), P("123")};
  CHECK(inflate(P("21"), two123) == P("456123"));
  std::vector<Permutation> const ones{P("1"), P("1"), P("1")};
  CHECK(inflate(P("321"), ones) == P("321"));
  std::vector<Permutation> const mid{P("1"), P("12"), P("1")};
  CHECK(inflate(P("321"), mid) == P("4231"));
  std::vector<Permutation> const pair{P("1"), P("1")};
  CHECK(inflate(P("12"), pair) == P("12"));
  CHECK(code_of([&] { inflate(P("21"), ones); }) == ErrorCode::ArityMismatch);
}

TEST_CASE("skeleton decomposition")
{
  auto const d = skeleton_decomposition(P("3614725"));
  CHECK(d.skeleton == P("3614725"));
  CHECK(d.blocks == std::vector<Permutation>(7, P("1")));

  auto const s = skeleton_decomposition(P("214365"));
  CHECK(s.skeleton == P("12"));
  CHECK(s.blocks == std::vector<Permutation>{P("21"), P("2143")});

  // Left-minimal rule: the first block of a skew sum is as short as possible.
  auto const k = skeleton_decomposition(P("4321"));
  CHECK(k.skeleton == P("21"));
  CHECK(k.blocks == std::vector<Permutation>{P("1"), P("321")});
  CHECK(inflate(P("21"), std::vector<Permutation>{P("21"), P("21")}) == P("4321"));

  CHECK(code_of([] { skeleton_decomposition(P("1")); }) == ErrorCode::Undecomposable);

  for (int n = 2; n <= 10; ++n)
    oracle::for_each_involution(n, [&](oracle::Seq const &v) {
      Permutation const p(v);
      auto const dec = skeleton_decomposition(p);
      REQUIRE(inflate(dec.skeleton, dec.blocks) == p);
      auto const sk = V(dec.skeleton);
      bool const trivial = sk == oracle::Seq{1, 2} || sk == oracle::Seq{2, 1};
      REQUIRE((trivial || oracle::simple(sk)));
      if (sk == oracle::Seq{1, 2})
        REQUIRE(oracle::components(V(dec.blocks.front())).size() == 1);
      if (sk == oracle::Seq{2, 1})
        REQUIRE_FALSE(oracle::skew_decomposable(V(dec.blocks.front())));
    });
}

TEST_CASE("inserting a fixed point")
{
  CHECK(insert_fixed_point(P("351624"), 4) == P("3614725"));
  CHECK(insert_fixed_point(P("21"), 2) == P("321"));
  auto const reducible = insert_fixed_point(P("351624"), 1);
  CHECK(connected_components(reducible).size() == 2);
  CHECK(reducible == P("1462735"));
  CHECK(code_of([] { insert_fixed_point(P("21"), 0); }) == ErrorCode::PositionOutOfRange);
  CHECK(code_of([] { insert_fixed_point(P("21"), 4); }) == ErrorCode::PositionOutOfRange);
  CHECK(code_of([] { insert_fixed_point(P("4321"), 2); }) == ErrorCode::OutOfDomain);
  CHECK(code_of([] { insert_fixed_point(P("2314"), 2); }) == ErrorCode::OutOfDomain);

  // Simple members of I(321) of even length stay simple with one more fixed
  // point at any interior slot.
  oracle::Seq const s321{3, 2, 1};
  int checked = 0;
  for (int n = 4; n <= 10; n += 2)
    for_each_I4321(n, [&](Permutation const &p) {
      if (!is_simple(p) || !oracle::avoids(V(p), {s321}))
        return;
      for (int slot = 2; slot <= n; ++slot) {
        auto const q = insert_fixed_point(p, slot);
        REQUIRE(is_simple(q));
        REQUIRE_FALSE(oracle::contains(V(q), {4, 3, 2, 1}));
        ++checked;
      }
    });
  CHECK(checked > 0);
}

TEST_CASE("breaking consecutiveness")
{
  auto const a = break_consecutiveness(LabelledMotzkinPath::unitary(steps_of("UUDD")));
  CHECK(to_string(a) == "UHUDD");
  CHECK(involution_of_path(a) == P("42513"));
  auto const u = break_consecutiveness(LabelledMotzkinPath::unitary(steps_of("UD")));
  CHECK(to_string(u) == "UD");
  auto const b = break_consecutiveness(LabelledMotzkinPath::unitary(steps_of("UUUDDD")));
  CHECK(to_string(b) == "UHUHUDDD");
  CHECK(is_simple(involution_of_path(b)));
  CHECK(code_of([] { break_consecutiveness(parse_path("UHD")); }) == ErrorCode::NotADyckPath);
  CHECK(code_of([] { break_consecutiveness(parse_path("UDUD")); }) == ErrorCode::NotIrreducible);

  // Against exhaustive search over sets of inserted horizontal steps: the
  // result is simple, avoids HH, and no smaller insertion set works.
  for (int n = 4; n <= 12; n += 2)
    for_each_path(n, LabellingFilter::Unitary, [&](LabelledMotzkinPath const &path) {
      auto const steps = path.steps();
      if (std::find(steps.begin(), steps.end(), Step::Horizontal) != steps.end() ||
          !is_irreducible(path))
        return;
      auto const out = break_consecutiveness(path);
      auto const q = involution_of_path(out);
      REQUIRE(is_simple(q));
      REQUIRE(oracle::simple(V(q)));
      auto const s = steps_string(out.steps());
      REQUIRE(s.find("HH") == std::string::npos);
      int const inserted = out.size() - n;

      int best = n;
      int const gaps = n - 1; // interior gaps only
      for (unsigned mask = 0; mask < (1u << gaps); ++mask) {
        int const bits = std::popcount(mask);
        if (bits >= best)
          continue;
        std::vector<Step> t;
        for (int i = 0; i < n; ++i) {
          t.push_back(steps[static_cast<std::size_t>(i)]);
          if (i < gaps && (mask >> i & 1u))
            t.push_back(Step::Horizontal);
        }
        if (oracle::simple(V(involution_of_path(LabelledMotzkinPath::unitary(t)))))
          best = bits;
      }
      REQUIRE(inserted == best);
    });
}

TEST_CASE("down connections and consecutive excedances")
{
  for (int n = 2; n <= 10; ++n)
    oracle::for_each_involution(n, [&](oracle::Seq const &v) {
      auto const cd = cycle_decomposition(Permutation(v));
      for (std::size_t i = 0; i + 1 < cd.transpositions.size(); ++i) {
        REQUIRE(down_connected(cd, i) == oracle_down_connected(v, i));
        REQUIRE(up_connected(cd, i) == (cd.transpositions[i + 1].lo == cd.transpositions[i].lo + 1));
      }
    });

  for (int n = 2; n <= 10; ++n)
    for_each_I4321(n, [&](Permutation const &p) {
      auto const cd = cycle_decomposition(p);
      for (std::size_t i = 0; i + 1 < cd.transpositions.size(); ++i)
        REQUIRE(down_connected(cd, i) ==
                (cd.transpositions[i + 1].hi == cd.transpositions[i].hi + 1));
    });

  // Outside I(4321) the equivalence fails.
  auto const labelled = cycle_decomposition(P("932857641"));
  CHECK(down_connected(labelled, 2));
  CHECK(labelled.transpositions[3].hi != labelled.transpositions[2].hi + 1);
}

TEST_CASE("no adjacent fixed points in simple members")
{
  CHECK(has_adjacent_fixed_points(P("12")));
  CHECK_FALSE(has_adjacent_fixed_points(P("42513")));
  for (int n = 4; n <= 12; ++n)
    for_each_I4321(n, [&](Permutation const &p) {
      if (is_simple(p)) {
        REQUIRE_FALSE(has_adjacent_fixed_points(p));
        REQUIRE(steps_string(path_of_involution(p).steps()).find("HH") == std::string::npos);
      }
    });
}

TEST_CASE("simple members have no symmetric connection")
{
  CHECK(has_symmetric_connection(P("3412")));
  for (int n = 4; n <= 12; ++n)
    for_each_I4321(n, [&](Permutation const &p) {
      if (is_simple(p))
        REQUIRE_FALSE(has_symmetric_connection(p));
    });
}

TEST_CASE("normal forms of skew-decomposable members")
{
  CHECK(type21_normal_form(P("456123")) == Type21NormalForm{3, 0});
  CHECK(type21_normal_form(P("4231")) == Type21NormalForm{1, 2});
  CHECK_FALSE(type21_normal_form(P("42513")).has_value());
  CHECK((Type21NormalForm{2, 1}.to_permutation() == P("45312")));

  for (int n = 2; n <= 10; ++n) {
    auto const forms = type21_normal_forms(n);
    std::size_t seen = 0;
    for_each_I4321(n, [&](Permutation const &p) {
      if (classify(p) != FineClass::Type21)
        return;
      ++seen;
      REQUIRE(forms.count(V(p)) == 1);
      auto const nf = type21_normal_form(p);
      REQUIRE(nf.has_value());
      REQUIRE(nf->to_permutation() == p);
    });
    CHECK(seen == forms.size());
  }
}

TEST_CASE("members without symmetric connections or adjacent fixed points, by component")
{
  // Literally, every such member is simple or 12[simple, rest]. The
  // statement overlooks 321, which has no symmetric connection and no
  // adjacent fixed points but is skew-decomposable; what holds is that
  // every connected component is simple (in the inclusive sense) or 321.
  CHECK_FALSE(has_symmetric_connection(P("321")));
  CHECK_FALSE(has_adjacent_fixed_points(P("321")));
  CHECK(classify(P("321")) == FineClass::Type21);

  for (int n = 1; n <= 11; ++n)
    for_each_I4321(n, [&](Permutation const &p) {
      if (has_symmetric_connection(p) || has_adjacent_fixed_points(p))
        return;
      for (auto const &c : connected_components(p))
        REQUIRE((is_simple_inclusive(c) || c == P("321")));
    });
}

TEST_CASE("reverse-complement preserves the fine class")
{
  for (int n = 1; n <= 10; ++n)
    for_each_I4321(n, [&](Permutation const &p) {
      auto const q = reverse_complement(p);
      REQUIRE(classify(q) == classify(p));
      REQUIRE(is_simple(q) == is_simple(p));
    });
}

TEST_CASE("I(3412) has no simple members and connected members fill the corners")
{
  for (int n = 1; n <= 12; ++n)
    for_each_I3412(n, [&](Permutation const &p) {
      if (n > 2)
        REQUIRE_FALSE(is_simple(p));
      if (n >= 2 && connected_components(p).size() == 1) {
        REQUIRE(p(1) == n);
        REQUIRE(p(n) == 1);
      }
    });
}

TEST_CASE("each path criterion for simplicity is needed")
{
  // Each path fails exactly one criterion.
  CHECK(steps_string(path_of_involution(P("2143")).steps()) == "UDUD"); // reducible
  CHECK(steps_string(path_of_involution(P("4231")).steps()) == "UHHD"); // HH
  CHECK(steps_string(path_of_involution(P("3412")).steps()) == "UUDD"); // consecutive pair
  for (auto const *s : {"2143", "4231", "3412"})
    CHECK_FALSE(is_simple_via_path(P(s)));
}
