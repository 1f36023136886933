// Command-line front end. Talks to the library only through finv.h.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "finv/finv.h"

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_verification = 1;
constexpr int exit_usage = 2;

// A failed library call; carries the status for the "error: token" line.
struct Failure
{
  finv_status status;
  std::string message;
};

void check(finv_status s)
{
  if (s != FINV_OK)
    throw Failure{s, finv_last_error()};
}

struct StringDeleter
{
  void operator()(char *s) const { finv_free_string(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

template <class T, void (*Free)(T *)>
struct HandleDeleter
{
  void operator()(T *p) const { Free(p); }
};
using Perm = std::unique_ptr<finv_perm, HandleDeleter<finv_perm, finv_perm_free>>;
using Path = std::unique_ptr<finv_path, HandleDeleter<finv_path, finv_path_free>>;
using Report = std::unique_ptr<finv_report, HandleDeleter<finv_report, finv_report_free>>;
using SeriesHandle = std::unique_ptr<finv_series, HandleDeleter<finv_series, finv_series_free>>;
using Recon =
  std::unique_ptr<finv_reconciliation, HandleDeleter<finv_reconciliation, finv_reconciliation_free>>;

std::string take(char *s)
{
  OwnedString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

Perm parse_perm(std::string const &text)
{
  finv_perm *p = nullptr;
  check(finv_perm_parse(text.c_str(), &p));
  return Perm(p);
}

std::string perm_string(finv_perm const *p)
{
  char *s = nullptr;
  check(finv_perm_to_string(p, &s));
  return take(s);
}

std::vector<int> perm_values(finv_perm const *p)
{
  std::vector<int> v;
  for (size_t i = 1; i <= finv_perm_size(p); ++i)
    v.push_back(finv_perm_at(p, i));
  return v;
}

finv_format parse_format(std::string const &f)
{
  if (f == "csv")
    return FINV_FORMAT_CSV;
  if (f == "json")
    return FINV_FORMAT_JSON;
  if (f == "bfile")
    return FINV_FORMAT_BFILE;
  return FINV_FORMAT_TEXT;
}

finv_group_by parse_group(std::vector<std::string> const &by)
{
  bool cls = false, fixed = false;
  for (auto const &b : by) {
    cls = cls || b == "class";
    fixed = fixed || b == "fixed";
  }
  if (cls && fixed)
    return FINV_GROUP_FINE_CLASS_AND_FIXED_POINTS;
  if (cls)
    return FINV_GROUP_FINE_CLASS;
  if (fixed)
    return FINV_GROUP_FIXED_POINTS;
  return FINV_GROUP_NONE;
}

int default_series_order()
{
  if (char const *env = std::getenv("FINV_SERIES_ORDER")) {
    try {
      int v = std::stoi(env);
      if (v >= 1)
        return v;
    } catch (std::exception const &) {
    }
    std::cerr << "warning: ignoring FINV_SERIES_ORDER=" << env << '\n';
  }
  return 24;
}

std::string json_int_array(std::vector<int> const &v)
{
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

int fixed_points(std::vector<int> const &v)
{
  int k = 0;
  for (size_t i = 0; i < v.size(); ++i)
    k += v[i] == static_cast<int>(i + 1);
  return k;
}

char const *footer = R"~(Output formats:
  permutations  space separated one-line notation; input also accepts
                "468152937", "4,6,8,...", and "(10)" for entries >= 10
  paths         U/H/D letters; down-step labels in brackets ("D[2]") unless
                every label is 1
  count         text table, csv (one row per bucket), json object, or
                bfile ("n a(n)" lines for lengths 1..N)
  enumerate     lines, csv (permutation,fixed_points,fine_class), or json
                (one array per involution inside a top-level array)
  series        text ("c0 + c1*x + ..." or one "x^n: ..." line per power for
                bivariate series), json (coefficient strings), or bfile
                ("n a(n)", bivariate "n k c")
  reconcile     text, csv or json pass/fail table

Exit status: 0 success, 1 verification failure, 2 usage or domain error.
Environment: FINV_SERIES_ORDER sets the default --order (24).)~";

} // anonymous namespace

int main(int argc, char **argv)
{
  CLI::App app{"Pattern-avoiding involutions: census, paths, fine structure and series",
               "finv"};
  app.require_subcommand(1);
  app.footer(footer);

  // count
  auto *count = app.add_subcommand("count", "Count involutions of length n avoiding patterns");
  int count_n = 0;
  std::string count_avoid;
  std::vector<std::string> count_by;
  std::string count_format = "text";
  bool count_witnesses = false;
  size_t witness_cap = 100;
  unsigned count_threads = 1;
  count->add_option("--n", count_n, "Length")->required()->check(CLI::PositiveNumber);
  count->add_option("--avoid", count_avoid, "Patterns, e.g. 4321 or 4321,132");
  count->add_option("--by", count_by, "Group by class, fixed, or both")
    ->check(CLI::IsMember({"class", "fixed"}))
    ->delimiter(',');
  count->add_option("--format", count_format, "text, csv, json or bfile")
    ->check(CLI::IsMember({"text", "csv", "json", "bfile"}));
  count->add_flag("--witnesses", count_witnesses, "List witnesses per bucket");
  count->add_option("--witness-cap", witness_cap, "Witnesses kept per bucket")
    ->default_val(100);
  count->add_option("--threads", count_threads, "Worker threads")->check(CLI::PositiveNumber);

  // enumerate
  auto *enumerate = app.add_subcommand("enumerate", "List involutions of length n avoiding patterns");
  int enum_n = 0;
  std::string enum_avoid;
  std::string enum_format = "lines";
  unsigned enum_threads = 1;
  enumerate->add_option("--n", enum_n, "Length")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--avoid", enum_avoid, "Patterns, e.g. 4321 or 3412,132");
  enumerate->add_option("--format", enum_format, "lines, csv or json")
    ->check(CLI::IsMember({"lines", "csv", "json"}));
  enumerate->add_option("--threads", enum_threads, "Worker threads")->check(CLI::PositiveNumber);

  // classify
  auto *classify = app.add_subcommand("classify", "Fine class and decomposition of an involution");
  std::string classify_perm;
  classify->add_option("perm", classify_perm, "Involution")->required();

  // path
  auto *path = app.add_subcommand("path", "Labelled Motzkin path of an involution");
  std::string path_perm;
  bool path_draw = false;
  path->add_option("perm", path_perm, "Involution")->required();
  path->add_flag("--draw", path_draw, "Append an ASCII drawing");

  // unpath
  auto *unpath = app.add_subcommand("unpath", "Involution of a labelled Motzkin path");
  std::string unpath_text;
  bool unpath_maximal = false;
  unpath->add_option("path", unpath_text, "Path such as UUD[2]UHUD[3]D[2]D[1]")->required();
  unpath->add_flag("--maximal", unpath_maximal, "Unlabelled down steps take the maximal label");

  // rc
  auto *rc = app.add_subcommand("rc", "Reverse-complement");
  std::string rc_perm;
  rc->add_option("perm", rc_perm, "Permutation")->required();

  // series
  auto *series = app.add_subcommand("series", "Coefficients of a named generating function");
  std::string series_name;
  int series_order = default_series_order();
  std::string series_format = "text";
  bool series_list = false;
  series->add_option("name", series_name, "Series name (see --list)");
  series->add_option("--order", series_order, "Truncation order")->check(CLI::PositiveNumber);
  series->add_option("--format", series_format, "text, json or bfile")
    ->check(CLI::IsMember({"text", "json", "bfile"}));
  series->add_flag("--list", series_list, "List the series names");

  // reconcile
  auto *reconcile = app.add_subcommand("reconcile", "Compare census counts with a named series");
  std::string recon_name;
  int recon_max = 10;
  std::string recon_format = "text";
  unsigned recon_threads = 1;
  reconcile->add_option("name", recon_name, "Series name, or 'all'")->required();
  reconcile->add_option("--max", recon_max, "Largest length")->check(CLI::PositiveNumber);
  reconcile->add_option("--format", recon_format, "text, csv or json")
    ->check(CLI::IsMember({"text", "csv", "json"}));
  reconcile->add_option("--threads", recon_threads, "Worker threads")->check(CLI::PositiveNumber);

  // appendix
  auto *appendix = app.add_subcommand("appendix", "Simple involutions of I_n(4321), 5 <= n <= 10");
  int appendix_n = 0;
  appendix->add_option("--n", appendix_n, "Length")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*count) {
      finv_census_options o = finv_census_defaults();
      o.avoid = count_avoid.c_str();
      o.group_by = parse_group(count_by);
      o.witness_cap = witness_cap;
      o.threads = count_threads;
      if (count_format == "bfile") {
        for (int n = 1; n <= count_n; ++n) {
          o.n = n;
          finv_report *r = nullptr;
          check(finv_census(&o, &r));
          Report report(r);
          std::cout << n << ' ' << finv_report_total(r) << '\n';
        }
        return exit_ok;
      }
      o.n = count_n;
      finv_report *r = nullptr;
      check(finv_census(&o, &r));
      Report report(r);
      char *text = nullptr;
      check(finv_report_format(r, parse_format(count_format), count_witnesses, &text));
      std::cout << take(text);
      return exit_ok;
    }

    if (*enumerate) {
      finv_census_options o = finv_census_defaults();
      o.n = enum_n;
      o.avoid = enum_avoid.c_str();
      o.threads = enum_threads;
      struct Sink
      {
        std::string format;
        bool first = true;
        std::optional<Failure> failure;
      } sink{enum_format};
      if (sink.format == "csv")
        std::cout << "permutation,fixed_points,fine_class\n";
      if (sink.format == "json")
        std::cout << "[";
      auto visit = [](finv_perm const *p, void *user) -> int {
        auto &s = *static_cast<Sink *>(user);
        try {
          if (s.format == "json") {
            std::cout << (s.first ? "\n" : ",\n") << json_int_array(perm_values(p));
          } else if (s.format == "csv") {
            char *token = nullptr;
            check(finv_classify(p, &token, nullptr));
            std::cout << perm_string(p) << ',' << fixed_points(perm_values(p)) << ','
                      << take(token) << '\n';
          } else {
            std::cout << perm_string(p) << '\n';
          }
        } catch (Failure const &f) {
          s.failure = f;
          return 1;
        }
        s.first = false;
        return 0;
      };
      check(finv_enumerate(&o, visit, &sink));
      if (sink.failure)
        throw *sink.failure;
      if (sink.format == "json")
        std::cout << (sink.first ? "]\n" : "\n]\n");
      return exit_ok;
    }

    if (*classify) {
      auto p = parse_perm(classify_perm);
      char *token = nullptr;
      char *sketch = nullptr;
      check(finv_classify(p.get(), &token, &sketch));
      std::string const t = take(token);
      std::cout << t << '\n' << "  " << take(sketch) << '\n';
      return exit_ok;
    }

    if (*path) {
      auto p = parse_perm(path_perm);
      finv_path *h = nullptr;
      check(finv_path_of_involution(p.get(), &h));
      Path handle(h);
      char *text = nullptr;
      check(finv_path_to_string(h, &text));
      std::cout << take(text) << '\n';
      if (path_draw) {
        char *drawing = nullptr;
        check(finv_path_draw(h, &drawing));
        std::cout << take(drawing);
      }
      return exit_ok;
    }

    if (*unpath) {
      finv_path *h = nullptr;
      check(finv_path_parse(unpath_text.c_str(), unpath_maximal, &h));
      Path handle(h);
      finv_perm *p = nullptr;
      check(finv_path_to_involution(h, &p));
      Perm perm(p);
      std::cout << perm_string(p) << '\n';
      return exit_ok;
    }

    if (*rc) {
      auto p = parse_perm(rc_perm);
      finv_perm *q = nullptr;
      check(finv_perm_reverse_complement(p.get(), &q));
      Perm result(q);
      std::cout << perm_string(q) << '\n';
      return exit_ok;
    }

    if (*series) {
      if (series_list) {
        for (size_t i = 0; i < finv_series_name_count(); ++i)
          std::cout << finv_series_name(i) << '\n';
        return exit_ok;
      }
      if (series_name.empty()) {
        std::cerr << "error: usage: series needs a name (see --list)\n";
        return exit_usage;
      }
      finv_series *s = nullptr;
      check(finv_series_named(series_name.c_str(), series_order, &s));
      SeriesHandle handle(s);
      char *text = nullptr;
      check(finv_series_format(s, parse_format(series_format), &text));
      std::cout << take(text);
      return exit_ok;
    }

    if (*reconcile) {
      std::vector<std::string> names;
      if (recon_name == "all") {
        for (size_t i = 0; i < finv_series_name_count(); ++i)
          names.emplace_back(finv_series_name(i));
      } else {
        names.push_back(recon_name);
      }
      bool all_pass = true;
      for (auto const &name : names) {
        finv_reconciliation *r = nullptr;
        check(finv_reconcile(name.c_str(), recon_max, recon_threads, &r));
        Recon handle(r);
        char *text = nullptr;
        check(finv_reconciliation_format(r, parse_format(recon_format), &text));
        std::cout << take(text);
        all_pass = all_pass && finv_reconciliation_all_pass(r);
      }
      return all_pass ? exit_ok : exit_verification;
    }

    if (*appendix) {
      char *text = nullptr;
      check(finv_appendix(appendix_n, &text));
      std::cout << take(text);
      return exit_ok;
    }
  } catch (Failure const &f) {
    std::cerr << "error: " << finv_status_token(f.status) << ": " << f.message << '\n';
    return exit_usage;
  }
  return exit_usage;
}
