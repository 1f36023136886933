#include "finv/finv.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "finv/census.hpp"
#include "finv/error.hpp"
#include "finv/fine_structure.hpp"
#include "finv/generating_functions.hpp"
#include "finv/motzkin.hpp"

struct finv_perm
{
  finv::Permutation value;
};

struct finv_path
{
  finv::LabelledMotzkinPath value;
};

struct finv_report
{
  finv::CensusReport value;
};

struct finv_series
{
  finv::AnySeries value;
};

struct finv_reconciliation
{
  finv::Reconciliation value;
};

namespace
{

thread_local std::string last_error;

struct InvalidArgument
{
  char const *what;
};

struct StopEnumeration
{};

static_assert(static_cast<int>(finv::ErrorCode::OutOfRange) + 1 == FINV_ERR_OUT_OF_RANGE);

finv_status status_of(finv::ErrorCode code)
{
  // The enumerators are declared in the same order, offset by FINV_OK.
  return static_cast<finv_status>(static_cast<int>(code) + 1);
}

template <class F>
finv_status guarded(F &&f)
{
  try {
    f();
    last_error.clear();
    return FINV_OK;
  } catch (finv::Error const &e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (InvalidArgument const &e) {
    last_error = e.what;
    return FINV_ERR_INVALID_ARGUMENT;
  } catch (std::exception const &e) {
    last_error = e.what();
    return FINV_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return FINV_ERR_INTERNAL;
  }
}

void require(void const *p, char const *what)
{
  if (!p)
    throw InvalidArgument{what};
}

char *dup_string(std::string const &s)
{
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

finv::ReportFormat report_format(finv_format f)
{
  switch (f) {
  case FINV_FORMAT_TEXT: return finv::ReportFormat::Text;
  case FINV_FORMAT_CSV: return finv::ReportFormat::Csv;
  case FINV_FORMAT_JSON: return finv::ReportFormat::Json;
  case FINV_FORMAT_BFILE: break;
  }
  throw InvalidArgument{"format not available for reports"};
}

finv::CensusQuery make_query(finv_census_options const *o)
{
  require(o, "options is null");
  finv::CensusQuery q;
  q.n = o->n;
  if (o->avoid)
    q.avoid = finv::parse_pattern_list(o->avoid);
  switch (o->group_by) {
  case FINV_GROUP_NONE: q.group_by = finv::GroupBy::None; break;
  case FINV_GROUP_FINE_CLASS: q.group_by = finv::GroupBy::FineClass; break;
  case FINV_GROUP_FIXED_POINTS: q.group_by = finv::GroupBy::FixedPoints; break;
  case FINV_GROUP_FINE_CLASS_AND_FIXED_POINTS:
    q.group_by = finv::GroupBy::FineClassAndFixedPoints;
    break;
  default: throw InvalidArgument{"unknown group_by"};
  }
  q.witness_cap = o->witness_cap;
  q.threads = o->threads == 0 ? 1 : o->threads;
  return q;
}

std::string sketch_of(finv::Permutation const &p, finv::FineClass c)
{
  if (c == finv::FineClass::One || c == finv::FineClass::Simple)
    return finv::to_compact_string(p);
  auto const d = finv::skeleton_decomposition(p);
  std::string out = finv::to_compact_string(d.skeleton) + "[";
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    if (i)
      out += ", ";
    out += finv::to_compact_string(d.blocks[i]);
  }
  return out + "]";
}

} // anonymous namespace

extern "C" {

const char *finv_status_token(finv_status status)
{
  switch (status) {
  case FINV_OK: return "ok";
  case FINV_ERR_INVALID_ARGUMENT: return "invalid_argument";
  case FINV_ERR_INTERNAL: return "internal";
  default: break;
  }
  int const code = static_cast<int>(status) - 1;
  if (code >= 0 && code <= static_cast<int>(finv::ErrorCode::OutOfRange))
    return finv::error_token(static_cast<finv::ErrorCode>(code)).data();
  return "unknown_status";
}

const char *finv_last_error(void) { return last_error.c_str(); }

void finv_free_string(char *s) { std::free(s); }

// Permutations

finv_status finv_perm_parse(const char *text, finv_perm **out)
{
  return guarded([&] {
    require(text, "text is null");
    require(out, "out is null");
    *out = new finv_perm{finv::parse_permutation(text)};
  });
}

finv_status finv_perm_from_values(const int *values, size_t n, finv_perm **out)
{
  return guarded([&] {
    require(out, "out is null");
    if (n > 0)
      require(values, "values is null");
    std::vector<int> v;
    if (n > 0)
      v.assign(values, values + n);
    *out = new finv_perm{finv::Permutation(std::move(v))};
  });
}

finv_perm *finv_perm_clone(const finv_perm *p)
{
  if (!p)
    return nullptr;
  return new (std::nothrow) finv_perm{p->value};
}

void finv_perm_free(finv_perm *p) { delete p; }

size_t finv_perm_size(const finv_perm *p) { return p ? static_cast<size_t>(p->value.size()) : 0; }

int finv_perm_at(const finv_perm *p, size_t i)
{
  if (!p || i < 1 || i > static_cast<size_t>(p->value.size()))
    return 0;
  return p->value(static_cast<int>(i));
}

finv_status finv_perm_to_string(const finv_perm *p, char **out)
{
  return guarded([&] {
    require(p, "permutation is null");
    require(out, "out is null");
    *out = dup_string(finv::to_string(p->value));
  });
}

int finv_perm_is_involution(const finv_perm *p) { return p && finv::is_involution(p->value); }

finv_status finv_perm_contains(const finv_perm *p, const finv_perm *pattern, int *out)
{
  return guarded([&] {
    require(p, "permutation is null");
    require(pattern, "pattern is null");
    require(out, "out is null");
    *out = finv::contains_pattern(p->value, pattern->value);
  });
}

finv_status finv_perm_reverse_complement(const finv_perm *p, finv_perm **out)
{
  return guarded([&] {
    require(p, "permutation is null");
    require(out, "out is null");
    *out = new finv_perm{finv::reverse_complement(p->value)};
  });
}

finv_status finv_perm_is_simple(const finv_perm *p, int *out)
{
  return guarded([&] {
    require(p, "permutation is null");
    require(out, "out is null");
    *out = finv::is_simple(p->value);
  });
}

finv_status finv_classify(const finv_perm *p, char **class_token, char **sketch)
{
  return guarded([&] {
    require(p, "permutation is null");
    require(class_token, "class_token is null");
    auto const c = finv::classify(p->value);
    std::string const s = sketch ? sketch_of(p->value, c) : std::string();
    char *token = dup_string(std::string(finv::to_token(c)));
    if (sketch) {
      try {
        *sketch = dup_string(s);
      } catch (...) {
        std::free(token);
        throw;
      }
    }
    *class_token = token;
  });
}

// Paths

finv_status finv_path_of_involution(const finv_perm *p, finv_path **out)
{
  return guarded([&] {
    require(p, "permutation is null");
    require(out, "out is null");
    *out = new finv_path{finv::path_of_involution(p->value)};
  });
}

finv_status finv_path_parse(const char *text, int default_maximal, finv_path **out)
{
  return guarded([&] {
    require(text, "text is null");
    require(out, "out is null");
    *out = new finv_path{finv::parse_path(text, default_maximal != 0)};
  });
}

void finv_path_free(finv_path *path) { delete path; }

finv_status finv_path_to_involution(const finv_path *path, finv_perm **out)
{
  return guarded([&] {
    require(path, "path is null");
    require(out, "out is null");
    *out = new finv_perm{finv::involution_of_path(path->value)};
  });
}

finv_status finv_path_to_string(const finv_path *path, char **out)
{
  return guarded([&] {
    require(path, "path is null");
    require(out, "out is null");
    *out = dup_string(finv::to_string(path->value));
  });
}

finv_status finv_path_draw(const finv_path *path, char **out)
{
  return guarded([&] {
    require(path, "path is null");
    require(out, "out is null");
    *out = dup_string(finv::draw_path(path->value));
  });
}

const char *finv_path_kind(const finv_path *path)
{
  if (!path)
    return "";
  return finv::to_string(finv::labelling_kind(path->value)).data();
}

int finv_path_is_irreducible(const finv_path *path)
{
  return path && finv::is_irreducible(path->value);
}

// Census

finv_census_options finv_census_defaults(void)
{
  finv_census_options o;
  o.n = 1;
  o.avoid = nullptr;
  o.group_by = FINV_GROUP_NONE;
  o.witness_cap = 100;
  o.threads = 1;
  return o;
}

finv_status finv_census(const finv_census_options *options, finv_report **out)
{
  return guarded([&] {
    require(out, "out is null");
    *out = new finv_report{finv::run_census(make_query(options))};
  });
}

void finv_report_free(finv_report *r) { delete r; }

uint64_t finv_report_total(const finv_report *r) { return r ? r->value.total : 0; }

finv_status finv_report_format(const finv_report *r, finv_format format, int with_witnesses,
                               char **out)
{
  return guarded([&] {
    require(r, "report is null");
    require(out, "out is null");
    *out = dup_string(finv::format_report(r->value, report_format(format), with_witnesses != 0));
  });
}

finv_status finv_enumerate(const finv_census_options *options, finv_perm_visitor visit, void *user)
{
  return guarded([&] {
    if (!visit)
      throw InvalidArgument{"visitor is null"};
    auto const q = make_query(options);
    try {
      finv::for_each_involution(q, [&](finv::Permutation const &p) {
        finv_perm handle{p};
        if (visit(&handle, user) != 0)
          throw StopEnumeration{};
      });
    } catch (StopEnumeration const &) {
    }
  });
}

finv_status finv_appendix(int n, char **out)
{
  return guarded([&] {
    require(out, "out is null");
    std::string text;
    for (auto const &p : finv::appendix_listing(n))
      text += finv::to_compact_string(p) + '\n';
    *out = dup_string(text);
  });
}

// Series

size_t finv_series_name_count(void) { return finv::series_names().size(); }

const char *finv_series_name(size_t i)
{
  auto const names = finv::series_names();
  // Names are string literals, so the pointer outlives the vector.
  return i < names.size() ? names[i].data() : nullptr;
}

finv_status finv_series_named(const char *name, int order, finv_series **out)
{
  return guarded([&] {
    require(name, "name is null");
    require(out, "out is null");
    *out = new finv_series{finv::named_series(name, order)};
  });
}

void finv_series_free(finv_series *s) { delete s; }

int finv_series_is_bivariate(const finv_series *s)
{
  return s && std::holds_alternative<finv::BivarSeries>(s->value);
}

finv_status finv_series_coefficient(const finv_series *s, int i, int j, char **out)
{
  return guarded([&] {
    require(s, "series is null");
    require(out, "out is null");
    if (auto const *u = std::get_if<finv::Series>(&s->value)) {
      if (j != 0 || i < 0 || i > u->order())
        throw finv::Error(finv::ErrorCode::OutOfRange, "coefficient index outside the truncation");
      *out = dup_string((*u)[i].get_str());
    } else {
      auto const &b = std::get<finv::BivarSeries>(s->value);
      if (i < 0 || j < 0 || i > b.order_x() || j > b.order_y())
        throw finv::Error(finv::ErrorCode::OutOfRange, "coefficient index outside the truncation");
      *out = dup_string(b.coefficient(i, j).get_str());
    }
  });
}

finv_status finv_series_format(const finv_series *s, finv_format format, char **out)
{
  return guarded([&] {
    require(s, "series is null");
    require(out, "out is null");
    std::string text = std::visit(
      [&](auto const &v) -> std::string {
        switch (format) {
        case FINV_FORMAT_TEXT: return finv::to_string(v);
        case FINV_FORMAT_JSON: return finv::to_json(v);
        case FINV_FORMAT_BFILE: return finv::to_bfile(v);
        case FINV_FORMAT_CSV: break;
        }
        throw InvalidArgument{"format not available for series"};
      },
      s->value);
    if (!text.empty() && text.back() != '\n')
      text += '\n';
    *out = dup_string(text);
  });
}

// Reconciliation

finv_status finv_reconcile(const char *name, int n_max, unsigned threads,
                           finv_reconciliation **out)
{
  return guarded([&] {
    require(name, "name is null");
    require(out, "out is null");
    *out = new finv_reconciliation{finv::reconcile(name, n_max, threads == 0 ? 1 : threads)};
  });
}

void finv_reconciliation_free(finv_reconciliation *r) { delete r; }

int finv_reconciliation_all_pass(const finv_reconciliation *r) { return r && r->value.all_pass(); }

size_t finv_reconciliation_row_count(const finv_reconciliation *r)
{
  return r ? r->value.rows.size() : 0;
}

finv_status finv_reconciliation_format(const finv_reconciliation *r, finv_format format,
                                       char **out)
{
  return guarded([&] {
    require(r, "reconciliation is null");
    require(out, "out is null");
    *out = dup_string(finv::format_reconciliation(r->value, report_format(format)));
  });
}

} // extern "C"
