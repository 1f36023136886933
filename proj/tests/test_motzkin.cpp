#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finv/error.hpp"
#include "finv/fine_structure.hpp"
#include "finv/motzkin.hpp"
#include "oracles.hpp"

using namespace finv;

namespace
{

Permutation P(std::string const &s) { return parse_permutation(s); }

std::vector<Step> S(std::string const &s)
{
  std::vector<Step> out;
  for (char c : s)
    out.push_back(static_cast<Step>(c));
  return out;
}

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

std::vector<int> labels_of(LabelledMotzkinPath const &p)
{
  return {p.labels().begin(), p.labels().end()};
}

} // namespace

TEST_CASE("forward map examples")
{
  auto const plain = path_of_involution(P("468152937"));
  CHECK(steps_string(plain.steps()) == "UUUDHDUDD");
  CHECK(labels_of(plain) == std::vector<int>{1, 1, 1, 1});
  CHECK(to_string(plain) == "UUUDHDUDD");

  auto const labelled = path_of_involution(P("932857641"));
  CHECK(steps_string(labelled.steps()) == "UUDUHUDDD");
  CHECK(labels_of(labelled) == std::vector<int>{2, 3, 2, 1});
  CHECK(to_string(labelled) == "UUD[2]UHUD[3]D[2]D[1]");

  auto const id = path_of_involution(Permutation::identity(4));
  CHECK(steps_string(id.steps()) == "HHHH");
  CHECK(id.labels().empty());

  CHECK(code_of([] { path_of_involution(P("2314")); }) == ErrorCode::NotAnInvolution);
}

TEST_CASE("inverse map")
{
  CHECK(involution_of_path(LabelledMotzkinPath::unitary(S("UUDHUDD"))) == P("3614725"));
  CHECK(involution_of_path(LabelledMotzkinPath::unitary(S("UUUDDD"))) == P("456123"));
  CHECK(involution_of_path(validate_path(S("UUDUHUDDD"), {2, 3, 2, 1})) == P("932857641"));
  CHECK(involution_of_path(parse_path("UUD[2]UHUD[3]D[2]D[1]")) == P("932857641"));
  // Maximal labelling closes the most recent up step.
  CHECK(involution_of_path(LabelledMotzkinPath::maximal(S("UUUDDD"))) == P("654321"));
}

TEST_CASE("validation")
{
  CHECK(code_of([] { validate_path(S("UDU"), {1}); }) == ErrorCode::NonzeroFinalHeight);
  CHECK(code_of([] { validate_path(S("UD"), {2}); }) == ErrorCode::LabelOutOfRange);
  CHECK(code_of([] { validate_path(S("UD"), {0}); }) == ErrorCode::LabelOutOfRange);
  CHECK(code_of([] { validate_path(S("DU"), {1}); }) == ErrorCode::NegativeHeight);
  CHECK(code_of([] { validate_path(S("UD"), {}); }) == ErrorCode::LabelOutOfRange);
  CHECK_NOTHROW(validate_path(S("UUDD"), {2, 1}));
  CHECK(code_of([] { parse_path("UXD"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_path("UD[x]"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_path("UD[2]"); }) == ErrorCode::LabelOutOfRange);
}

TEST_CASE("text format")
{
  CHECK(to_string(parse_path("UUDD")) == "UUDD");
  CHECK(to_string(parse_path("UUDD", true)) == "UUD[2]D[1]");
  CHECK(to_string(parse_path("UUD[2]D")) == "UUD[2]D[1]");
  auto const p = parse_path("UUD[2]UHUD[3]D[2]D[1]");
  CHECK(parse_path(to_string(p)) == p);
}

TEST_CASE("labelling kinds")
{
  auto const plain = path_of_involution(P("468152937"));
  auto const labelled = path_of_involution(P("932857641"));
  CHECK(labelling_kind(plain) == LabellingKind::Unitary);
  CHECK(labelling_kind(labelled) == LabellingKind::Maximal);
  CHECK(labelling_kind(validate_path(S("UUDD"), {1, 1})) == LabellingKind::Unitary);
  CHECK(labelling_kind(validate_path(S("UUUDDD"), {2, 1, 1})) == LabellingKind::Other);
  CHECK(is_maximal(validate_path(S("UD"), {1})));
  CHECK(is_unitary(validate_path(S("UD"), {1})));
  CHECK(to_string(LabellingKind::Other) == "other");
}

TEST_CASE("irreducibility")
{
  CHECK(is_irreducible(parse_path("UUUDDD")));
  CHECK_FALSE(is_irreducible(parse_path("UDUD")));
  CHECK(is_irreducible(parse_path("UUUDHDUDD")));
  CHECK(path_of_involution(P("468152937")).height_profile() ==
        std::vector<int>{1, 2, 3, 2, 2, 1, 2, 1, 0});
  CHECK(is_irreducible(parse_path("H")));
  CHECK_FALSE(is_irreducible(parse_path("HH")));
}

TEST_CASE("enumeration examples and order")
{
  std::vector<std::string> got;
  for (auto const &p : enumerate_paths(3, LabellingFilter::Unitary))
    got.push_back(to_string(p));
  CHECK(got == std::vector<std::string>{"UHD", "UDH", "HUD", "HHH"});
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"HHH", "HUD", "UDH", "UHD"});

  auto const one = enumerate_paths(1, LabellingFilter::All);
  REQUIRE(one.size() == 1);
  CHECK(to_string(one[0]) == "H");
  CHECK(enumerate_paths(4, LabellingFilter::All).size() == 10);

  // Lexicographic by steps (U < H < D), then labels.
  auto rank = [](Step s) { return s == Step::Up ? 0 : s == Step::Horizontal ? 1 : 2; };
  auto key = [&](LabelledMotzkinPath const &p) {
    std::vector<int> k;
    for (Step s : p.steps())
      k.push_back(rank(s));
    for (int l : p.labels())
      k.push_back(l);
    return k;
  };
  auto const all = enumerate_paths(7, LabellingFilter::All);
  for (std::size_t i = 1; i < all.size(); ++i)
    REQUIRE(key(all[i - 1]) < key(all[i]));
}

TEST_CASE("enumeration counts")
{
  auto const motzkin = oracle::motzkin_numbers(14);
  auto const inv = oracle::involution_numbers(12);
  for (int n = 1; n <= 14; ++n) {
    std::uint64_t unitary = 0;
    for_each_path(n, LabellingFilter::Unitary, [&](LabelledMotzkinPath const &) { ++unitary; });
    CHECK(unitary == motzkin[static_cast<std::size_t>(n)]);
  }
  for (int n = 1; n <= 12; ++n) {
    std::uint64_t all = 0, maximal = 0, other = 0, unitary = 0;
    for_each_path(n, LabellingFilter::All, [&](LabelledMotzkinPath const &) { ++all; });
    for_each_path(n, LabellingFilter::Maximal, [&](LabelledMotzkinPath const &) { ++maximal; });
    for_each_path(n, LabellingFilter::Other, [&](LabelledMotzkinPath const &) { ++other; });
    for_each_path(n, LabellingFilter::Unitary, [&](LabelledMotzkinPath const &) { ++unitary; });
    CHECK(all == inv[static_cast<std::size_t>(n)]);
    CHECK(maximal == motzkin[static_cast<std::size_t>(n)]);
    // A labelling can be unitary and maximal at once.
    std::uint64_t both = 0;
    for_each_path(n, LabellingFilter::Unitary, [&](LabelledMotzkinPath const &p) {
      both += is_maximal(p);
    });
    CHECK(unitary + maximal - both + other == all);
  }
}

TEST_CASE("prefix sharding reproduces the full enumeration")
{
  for (int n : {1, 4, 7, 9}) {
    for (auto filter : {LabellingFilter::Unitary, LabellingFilter::Maximal, LabellingFilter::All}) {
      auto const whole = enumerate_paths(n, filter);
      std::vector<LabelledMotzkinPath> pieces;
      for (auto const &prefix : path_prefixes(n, std::min(n, 4)))
        for_each_path(n, filter, prefix, [&](LabelledMotzkinPath const &p) { pieces.push_back(p); });
      CHECK(pieces == whole);
    }
  }
}

TEST_CASE("round trips")
{
  for (int n = 1; n <= 10; ++n)
    oracle::for_each_involution(n, [&](oracle::Seq const &v) {
      Permutation const p(v);
      REQUIRE(involution_of_path(path_of_involution(p)) == p);
    });
  for (int n = 1; n <= 8; ++n)
    for_each_path(n, LabellingFilter::All, [&](LabelledMotzkinPath const &q) {
      REQUIRE(path_of_involution(involution_of_path(q)) == q);
    });
}

TEST_CASE("forward labels match the cycle-notation reading")
{
  for (int n = 1; n <= 10; ++n)
    oracle::for_each_involution(n, [&](oracle::Seq const &v) {
      REQUIRE(labels_of(path_of_involution(Permutation(v))) == oracle::cycle_notation_labels(v));
    });
}

TEST_CASE("labelling characterizations")
{
  oracle::Seq const s4321{4, 3, 2, 1}, s3412{3, 4, 1, 2}, s321{3, 2, 1};
  for (int n = 1; n <= 10; ++n)
    oracle::for_each_involution(n, [&](oracle::Seq const &v) {
      auto const path = path_of_involution(Permutation(v));
      REQUIRE(oracle::avoids(v, {s4321}) == is_unitary(path));
      REQUIRE(oracle::avoids(v, {s3412}) == is_maximal(path));
      REQUIRE(oracle::avoids(v, {s3412}) ==
              (labelling_kind(path) == LabellingKind::Maximal ||
               (labelling_kind(path) == LabellingKind::Unitary && is_maximal(path))));

      bool h_on_axis = true;
      auto const heights = path.height_profile();
      for (std::size_t i = 0; i < path.steps().size(); ++i)
        if (path.steps()[i] == Step::Horizontal && heights[i] != 0)
          h_on_axis = false;
      REQUIRE(oracle::avoids(v, {s321}) == (is_unitary(path) && h_on_axis));

      REQUIRE(is_irreducible(path) == (oracle::components(v).size() == 1));
      REQUIRE(is_irreducible(path) == (connected_components(Permutation(v)).size() == 1));
    });
}

TEST_CASE("reflection")
{
  auto const r = reflect_path(path_of_involution(P("468152937")));
  CHECK(r == path_of_involution(P("371859246")));
  CHECK(to_string(r) == "UUDUHUDDD");
  CHECK(reflect_path(parse_path("HHH")) == parse_path("HHH"));
  CHECK(reflect_path(parse_path("UUDD")) == parse_path("UUDD"));

  Permutation const p4321{4, 3, 2, 1};
  for (int n = 1; n <= 10; ++n)
    oracle::for_each_involution(n, [&](oracle::Seq const &v) {
      Permutation const p(v);
      auto const path = path_of_involution(p);
      auto const reflected = reflect_path(path);
      REQUIRE(reflected == path_of_involution(reverse_complement(p)));
      if (is_unitary(path))
        REQUIRE(is_unitary(reflected));
      if (is_maximal(path))
        REQUIRE(is_maximal(reflected));
    });
}

TEST_CASE("drawing")
{
  CHECK(draw_path(parse_path("UUUDHDUDD")) == "  /\\_\n"
                                              " /   \\/\\\n"
                                              "/       \\\n");
  CHECK(draw_path(parse_path("HH")) == "__\n");
  auto const labelled = draw_path(parse_path("UUD[2]UHUD[3]D[2]D[1]"));
  CHECK(labelled.substr(labelled.rfind('\n', labelled.size() - 2) + 1) == "  2   321\n");
}
