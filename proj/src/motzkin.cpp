#include "finv/motzkin.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "finv/error.hpp"

namespace finv
{

namespace
{

int count_downs(std::span<Step const> steps)
{
  return static_cast<int>(std::count(steps.begin(), steps.end(), Step::Down));
}

std::vector<int> start_heights_of_downs(std::span<Step const> steps)
{
  std::vector<int> out;
  int h = 0;
  for (Step s : steps) {
    if (s == Step::Up)
      ++h;
    else if (s == Step::Down)
      out.push_back(h--);
  }
  return out;
}

} // anonymous namespace

LabelledMotzkinPath::LabelledMotzkinPath(std::vector<Step> steps, std::vector<int> labels)
  : _steps(std::move(steps)), _labels(std::move(labels))
{
  if (static_cast<int>(_labels.size()) != count_downs(_steps))
    throw Error(ErrorCode::LabelOutOfRange,
                "expected one label per down step, got " + std::to_string(_labels.size()));

  int h = 0;
  std::size_t d = 0;
  for (std::size_t i = 0; i < _steps.size(); ++i) {
    switch (_steps[i]) {
    case Step::Up: ++h; break;
    case Step::Horizontal: break;
    case Step::Down: {
      int const label = _labels[d++];
      if (h == 0)
        throw Error(ErrorCode::NegativeHeight,
                    "path goes below the axis at step " + std::to_string(i + 1));
      if (label < 1 || label > h)
        throw Error(ErrorCode::LabelOutOfRange,
                    "label " + std::to_string(label) + " at step " + std::to_string(i + 1) +
                      " not in 1.." + std::to_string(h));
      --h;
      break;
    }
    }
  }
  if (h != 0)
    throw Error(ErrorCode::NonzeroFinalHeight,
                "path ends at height " + std::to_string(h));
}

LabelledMotzkinPath LabelledMotzkinPath::unitary(std::vector<Step> steps)
{
  std::vector<int> labels(static_cast<std::size_t>(count_downs(steps)), 1);
  return LabelledMotzkinPath(std::move(steps), std::move(labels));
}

LabelledMotzkinPath LabelledMotzkinPath::maximal(std::vector<Step> steps)
{
  auto labels = start_heights_of_downs(steps);
  // A down step from height 0 yields label 0 and fails validation below.
  return LabelledMotzkinPath(std::move(steps), std::move(labels));
}

std::vector<int> LabelledMotzkinPath::down_heights() const
{
  return start_heights_of_downs(_steps);
}

std::vector<int> LabelledMotzkinPath::height_profile() const
{
  std::vector<int> out;
  out.reserve(_steps.size());
  int h = 0;
  for (Step s : _steps) {
    h += (s == Step::Up) - (s == Step::Down);
    out.push_back(h);
  }
  return out;
}

LabelledMotzkinPath validate_path(std::vector<Step> steps, std::vector<int> labels)
{
  return LabelledMotzkinPath(std::move(steps), std::move(labels));
}

LabelledMotzkinPath parse_path(std::string_view text, bool default_maximal)
{
  std::vector<Step> steps;
  std::vector<int> labels;
  int h = 0;
  auto fail = [&](std::string const &why) {
    return Error(ErrorCode::Parse, "cannot parse path '" + std::string(text) + "': " + why);
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char const c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (c == 'U') {
      steps.push_back(Step::Up);
      ++h;
    } else if (c == 'H') {
      steps.push_back(Step::Horizontal);
    } else if (c == 'D') {
      steps.push_back(Step::Down);
      int label = default_maximal ? h : 1;
      if (i + 1 < text.size() && text[i + 1] == '[') {
        auto close = text.find(']', i + 1);
        if (close == std::string_view::npos)
          throw fail("unbalanced '['");
        auto inner = text.substr(i + 2, close - i - 2);
        auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), label);
        if (inner.empty() || ec != std::errc{} || ptr != inner.data() + inner.size())
          throw fail("bad label");
        i = close;
      }
      labels.push_back(label);
      --h;
    } else if (c == ' ' || c == '\t') {
      continue;
    } else {
      throw fail(std::string("unexpected character '") + text[i] + "'");
    }
  }
  if (steps.empty())
    throw fail("empty");
  return LabelledMotzkinPath(std::move(steps), std::move(labels));
}

std::string steps_string(std::span<Step const> steps)
{
  std::string out;
  out.reserve(steps.size());
  for (Step s : steps)
    out += static_cast<char>(s);
  return out;
}

std::string to_string(LabelledMotzkinPath const &path)
{
  if (is_unitary(path))
    return steps_string(path.steps());
  std::string out;
  std::size_t d = 0;
  for (Step s : path.steps()) {
    out += static_cast<char>(s);
    if (s == Step::Down)
      out += "[" + std::to_string(path.labels()[d++]) + "]";
  }
  return out;
}

std::string draw_path(LabelledMotzkinPath const &path)
{
  auto const profile = path.height_profile();
  int const top = profile.empty() ? 0 : *std::max_element(profile.begin(), profile.end());
  int const rows = top + 1;
  int const width = path.size();
  std::vector<std::string> grid(static_cast<std::size_t>(rows),
                                std::string(static_cast<std::size_t>(width), ' '));
  int h = 0;
  for (int i = 0; i < width; ++i) {
    switch (path.steps()[static_cast<std::size_t>(i)]) {
    case Step::Up:
      grid[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)] = '/';
      ++h;
      break;
    case Step::Horizontal:
      grid[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)] = '_';
      break;
    case Step::Down:
      --h;
      grid[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)] = '\\';
      break;
    }
  }
  std::string out;
  for (int r = rows - 1; r >= 0; --r) {
    auto line = grid[static_cast<std::size_t>(r)];
    line.erase(line.find_last_not_of(' ') + 1);
    if (line.empty() && out.empty())
      continue;
    out += line + '\n';
  }
  if (!is_unitary(path)) {
    std::string line(static_cast<std::size_t>(width), ' ');
    std::size_t d = 0;
    for (int i = 0; i < width; ++i) {
      if (path.steps()[static_cast<std::size_t>(i)] != Step::Down)
        continue;
      int const label = path.labels()[d++];
      line[static_cast<std::size_t>(i)] = label < 10 ? static_cast<char>('0' + label) : '+';
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + '\n';
  }
  return out;
}

LabelledMotzkinPath path_of_involution(Permutation const &p)
{
  if (!is_involution(p))
    throw Error(ErrorCode::NotAnInvolution, to_string(p) + " is not an involution");
  int const n = p.size();
  std::vector<Step> steps;
  std::vector<int> labels;
  steps.reserve(static_cast<std::size_t>(n));
  // Open excedance positions, ascending. The label of the deficiency at M
  // is one plus the number of open positions left of its partner m, i.e.
  // the excedances before m whose partners lie beyond M.
  std::vector<int> open;
  for (int i = 1; i <= n; ++i) {
    int const v = p(i);
    if (v == i) {
      steps.push_back(Step::Horizontal);
    } else if (v > i) {
      steps.push_back(Step::Up);
      open.push_back(i);
    } else {
      steps.push_back(Step::Down);
      auto it = std::find(open.begin(), open.end(), v);
      labels.push_back(static_cast<int>(it - open.begin()) + 1);
      open.erase(it);
    }
  }
  return LabelledMotzkinPath(LabelledMotzkinPath::Unchecked{}, std::move(steps),
                             std::move(labels));
}

Permutation involution_of_path(LabelledMotzkinPath const &path)
{
  int const n = path.size();
  std::vector<int> values(static_cast<std::size_t>(n), 0);
  std::vector<int> open;
  std::size_t d = 0;
  for (int i = 1; i <= n; ++i) {
    switch (path.steps()[static_cast<std::size_t>(i - 1)]) {
    case Step::Horizontal:
      values[static_cast<std::size_t>(i - 1)] = i;
      break;
    case Step::Up:
      open.push_back(i);
      break;
    case Step::Down: {
      auto it = open.begin() + (path.labels()[d++] - 1);
      int const m = *it;
      open.erase(it);
      values[static_cast<std::size_t>(i - 1)] = m;
      values[static_cast<std::size_t>(m - 1)] = i;
      break;
    }
    }
  }
  return Permutation(std::move(values));
}

bool is_unitary(LabelledMotzkinPath const &path) noexcept
{
  auto labels = path.labels();
  return std::all_of(labels.begin(), labels.end(), [](int l) { return l == 1; });
}

bool is_maximal(LabelledMotzkinPath const &path)
{
  auto const heights = path.down_heights();
  return std::equal(heights.begin(), heights.end(), path.labels().begin(),
                    path.labels().end());
}

LabellingKind labelling_kind(LabelledMotzkinPath const &path)
{
  if (is_unitary(path))
    return LabellingKind::Unitary;
  if (is_maximal(path))
    return LabellingKind::Maximal;
  return LabellingKind::Other;
}

bool is_irreducible(LabelledMotzkinPath const &path)
{
  auto const profile = path.height_profile();
  for (std::size_t i = 0; i + 1 < profile.size(); ++i)
    if (profile[i] == 0)
      return false;
  return true;
}

void for_each_path(int n, LabellingFilter filter, std::span<Step const> prefix,
                   std::function<void(LabelledMotzkinPath const &)> const &visit)
{
  if (n < 1 || static_cast<int>(prefix.size()) > n)
    return;

  std::vector<Step> steps(prefix.begin(), prefix.end());
  int height = 0;
  for (Step s : steps) {
    height += (s == Step::Up) - (s == Step::Down);
    if (height < 0)
      return;
  }
  steps.reserve(static_cast<std::size_t>(n));

  std::vector<int> heights;
  std::vector<int> labels;

  auto emit_labellings = [&]() {
    heights = start_heights_of_downs(steps);
    std::size_t const downs = heights.size();
    switch (filter) {
    case LabellingFilter::Unitary:
      labels.assign(downs, 1);
      visit(LabelledMotzkinPath(LabelledMotzkinPath::Unchecked{}, steps, labels));
      return;
    case LabellingFilter::Maximal:
      visit(LabelledMotzkinPath(LabelledMotzkinPath::Unchecked{}, steps, heights));
      return;
    case LabellingFilter::Other:
    case LabellingFilter::All:
      break;
    }
    // Odometer over 1..h(D) per down step, last label varying fastest.
    labels.assign(downs, 1);
    while (true) {
      bool const skip =
        filter == LabellingFilter::Other &&
        (std::all_of(labels.begin(), labels.end(), [](int l) { return l == 1; }) ||
         labels == heights);
      if (!skip)
        visit(LabelledMotzkinPath(LabelledMotzkinPath::Unchecked{}, steps, labels));
      std::size_t k = downs;
      while (k > 0 && labels[k - 1] == heights[k - 1])
        --k;
      if (k == 0)
        return;
      ++labels[k - 1];
      std::fill(labels.begin() + static_cast<std::ptrdiff_t>(k), labels.end(), 1);
    }
  };

  auto extend = [&](auto &&self, int h) -> void {
    int const remaining = n - static_cast<int>(steps.size());
    if (remaining == 0) {
      if (h == 0)
        emit_labellings();
      return;
    }
    if (h + 1 <= remaining - 1) {
      steps.push_back(Step::Up);
      self(self, h + 1);
      steps.pop_back();
    }
    if (h <= remaining - 1) {
      steps.push_back(Step::Horizontal);
      self(self, h);
      steps.pop_back();
    }
    if (h > 0) {
      steps.push_back(Step::Down);
      self(self, h - 1);
      steps.pop_back();
    }
  };
  if (height <= n - static_cast<int>(steps.size()))
    extend(extend, height);
}

void for_each_path(int n, LabellingFilter filter,
                   std::function<void(LabelledMotzkinPath const &)> const &visit)
{
  for_each_path(n, filter, std::span<Step const>{}, visit);
}

std::vector<LabelledMotzkinPath> enumerate_paths(int n, LabellingFilter filter)
{
  std::vector<LabelledMotzkinPath> out;
  for_each_path(n, filter, [&](LabelledMotzkinPath const &p) { out.push_back(p); });
  return out;
}

std::vector<std::vector<Step>> path_prefixes(int n, int prefix_length)
{
  std::vector<std::vector<Step>> out;
  std::vector<Step> cur;
  auto extend = [&](auto &&self, int h) -> void {
    if (static_cast<int>(cur.size()) == prefix_length) {
      out.push_back(cur);
      return;
    }
    int const remaining = n - static_cast<int>(cur.size());
    if (h + 1 <= remaining - 1) {
      cur.push_back(Step::Up);
      self(self, h + 1);
      cur.pop_back();
    }
    if (h <= remaining - 1) {
      cur.push_back(Step::Horizontal);
      self(self, h);
      cur.pop_back();
    }
    if (h > 0) {
      cur.push_back(Step::Down);
      self(self, h - 1);
      cur.pop_back();
    }
  };
  if (prefix_length >= 0 && prefix_length <= n)
    extend(extend, 0);
  return out;
}

LabelledMotzkinPath reflect_path(LabelledMotzkinPath const &path)
{
  auto reflected = path_of_involution(reverse_complement(involution_of_path(path)));
  // Reverse-complement swaps excedances and deficiencies and mirrors
  // positions, so the step shape must be the mirrored one.
  std::vector<Step> mirrored(path.steps().rbegin(), path.steps().rend());
  for (Step &s : mirrored) {
    if (s == Step::Up)
      s = Step::Down;
    else if (s == Step::Down)
      s = Step::Up;
  }
  if (!std::equal(mirrored.begin(), mirrored.end(), reflected.steps().begin(),
                  reflected.steps().end()))
    throw Error(ErrorCode::InternalMismatch, "reflected path shape mismatch");
  return reflected;
}

std::string_view to_string(LabellingKind kind) noexcept
{
  switch (kind) {
  case LabellingKind::Unitary: return "unitary";
  case LabellingKind::Maximal: return "maximal";
  case LabellingKind::Other: return "other";
  }
  return "other";
}

} // namespace finv
