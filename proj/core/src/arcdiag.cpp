#include "nestgen/arcdiag.hpp"

#include <algorithm>

#include "nestgen/errors.hpp"

namespace nestgen {

namespace {

void check_arcs(std::span<const Arc> arcs, NestingMode mode) {
  for (const Arc& a : arcs) {
    if (a.left > a.right) {
      throw InvalidInput("arc with left endpoint after right endpoint");
    }
    if (mode == NestingMode::Plain && a.degenerate()) {
      throw InvalidInput("degenerate arc in plain nesting mode");
    }
  }
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<Arc> arcs_right_of(const std::vector<Arc>& arcs, int origin) {
  std::vector<Arc> out;
  for (const Arc& a : arcs) {
    if (a.left > origin) out.push_back(a);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Arc> longest_nesting_chain(std::span<const Arc> arcs,
                                       NestingMode mode) {
  check_arcs(arcs, mode);
  std::vector<Arc> sorted(arcs.begin(), arcs.end());
  // Ties on the left endpoint sort by ascending right endpoint so that a
  // strictly decreasing run of right endpoints never uses two of them.
  std::sort(sorted.begin(), sorted.end());

  // tails[len-1] = index of the arc ending the best chain of that length,
  // chosen to have the largest possible right endpoint.
  std::vector<std::size_t> tails;
  std::vector<std::ptrdiff_t> parent(sorted.size(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const int r = sorted[i].right;
    auto pos = std::partition_point(tails.begin(), tails.end(), [&](std::size_t t) {
      return sorted[t].right > r;
    });
    if (pos != tails.begin()) parent[i] = static_cast<std::ptrdiff_t>(*(pos - 1));
    if (pos == tails.end()) {
      tails.push_back(i);
    } else {
      *pos = i;
    }
  }

  std::vector<Arc> chain;
  if (tails.empty()) return chain;
  for (auto i = static_cast<std::ptrdiff_t>(tails.back()); i >= 0; i = parent[i]) {
    chain.push_back(sorted[static_cast<std::size_t>(i)]);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

int max_nesting(std::span<const Arc> arcs, NestingMode mode) {
  return static_cast<int>(longest_nesting_chain(arcs, mode).size());
}

// ---------------------------------------------------------------------------

bool PartitionLabel::valid() const {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0) return false;
    if (i && s[i] > s[i - 1]) return false;
  }
  return true;
}

bool PartitionLabel::is_zero() const {
  return std::all_of(s.begin(), s.end(), [](int x) { return x == 0; });
}

std::string PartitionLabel::to_string() const { return "[" + join(s) + "]"; }

bool PermutationLabel::valid() const {
  if (h < 0 || r.size() != s.size()) return false;
  auto chain_ok = [&](const std::vector<int>& v) {
    int prev = h;
    for (int x : v) {
      if (x < 0 || x > prev) return false;
      prev = x;
    }
    return true;
  };
  return chain_ok(r) && chain_ok(s);
}

std::string PermutationLabel::to_string() const {
  return "[" + std::to_string(h) + ";" + join(r) + ";" + join(s) + "]";
}

std::string PartitionStep::to_string() const {
  switch (kind) {
    case Kind::FixedPoint: return "fixed-point";
    case Kind::SemiOpener: return "semi-opener";
    case Kind::SemiTransitory: return "semi-transitory(" + std::to_string(index) + ")";
    case Kind::Closer: return "closer(" + std::to_string(index) + ")";
  }
  return "?";
}

std::string PermutationStep::to_string() const {
  switch (kind) {
    case Kind::FixedPoint: return "fixed-point";
    case Kind::SemiOpener: return "semi-opener";
    case Kind::UpperSemiTransitory:
      return "upper-semi-transitory(" + std::to_string(upper) + ")";
    case Kind::LowerSemiTransitory:
      return "lower-semi-transitory(" + std::to_string(lower) + ")";
    case Kind::Closer:
      return "closer(" + std::to_string(upper) + "," + std::to_string(lower) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------

OpenPartitionDiagram::OpenPartitionDiagram(int n, std::vector<Arc> closed_arcs,
                                           std::vector<int> open_arcs)
    : n_(n), closed_(std::move(closed_arcs)), open_(std::move(open_arcs)) {
  if (n_ < 0) throw InvalidInput("negative diagram size");
  std::vector<int> as_left(n_ + 1, 0), as_right(n_ + 1, 0);
  auto in_range = [&](int v) { return v >= 1 && v <= n_; };
  for (const Arc& a : closed_) {
    if (!in_range(a.left) || !in_range(a.right) || a.left >= a.right) {
      throw InvalidInput("closed arc out of range or not left < right");
    }
    ++as_left[a.left];
    ++as_right[a.right];
  }
  for (int v : open_) {
    if (!in_range(v)) throw InvalidInput("semi-arc origin out of range");
    ++as_left[v];
  }
  for (int v = 1; v <= n_; ++v) {
    if (as_left[v] > 1 || as_right[v] > 1) {
      throw InvalidInput("vertex " + std::to_string(v) +
                         " is an endpoint of too many arcs");
    }
  }
  std::sort(closed_.begin(), closed_.end());
  std::sort(open_.begin(), open_.end());
}

std::vector<int> OpenPartitionDiagram::fixed_points() const {
  std::vector<char> touched(n_ + 1, 0);
  for (const Arc& a : closed_) touched[a.left] = touched[a.right] = 1;
  for (int v : open_) touched[v] = 1;
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v) {
    if (!touched[v]) out.push_back(v);
  }
  return out;
}

std::vector<Arc> OpenPartitionDiagram::nesting_arcs(NestingMode mode) const {
  std::vector<Arc> arcs = closed_;
  if (mode == NestingMode::Enhanced) {
    for (int v : fixed_points()) arcs.push_back({v, v});
  }
  return arcs;
}

std::vector<std::vector<int>> OpenPartitionDiagram::blocks() const {
  if (!open_.empty()) throw InvalidInput("diagram still has semi-arcs");
  std::vector<int> next(n_ + 1, 0);
  std::vector<char> is_right(n_ + 1, 0);
  for (const Arc& a : closed_) {
    next[a.left] = a.right;
    is_right[a.right] = 1;
  }
  std::vector<std::vector<int>> out;
  for (int v = 1; v <= n_; ++v) {
    if (is_right[v]) continue;
    auto& block = out.emplace_back();
    for (int u = v; u != 0; u = next[u]) block.push_back(u);
  }
  return out;
}

OpenPermutationDiagram::OpenPermutationDiagram(int n, std::vector<Arc> upper_arcs,
                                               std::vector<Arc> lower_arcs,
                                               std::vector<int> upper_open,
                                               std::vector<int> lower_open)
    : n_(n),
      upper_(std::move(upper_arcs)),
      lower_(std::move(lower_arcs)),
      upper_open_(std::move(upper_open)),
      lower_open_(std::move(lower_open)) {
  if (n_ < 0) throw InvalidInput("negative diagram size");
  if (upper_open_.size() != lower_open_.size()) {
    throw InvalidInput("upper and lower semi-arc counts differ");
  }
  auto in_range = [&](int v) { return v >= 1 && v <= n_; };
  // Each vertex has one outgoing end (upper-left or lower-right) and one
  // incoming end (upper-right or lower-left), or is a loop.
  std::vector<int> out(n_ + 1, 0), in(n_ + 1, 0), loops(n_ + 1, 0);
  for (const Arc& a : upper_) {
    if (!in_range(a.left) || !in_range(a.right) || a.left > a.right) {
      throw InvalidInput("upper arc out of range or reversed");
    }
    if (a.degenerate()) {
      ++loops[a.left];
    } else {
      ++out[a.left];
      ++in[a.right];
    }
  }
  for (const Arc& a : lower_) {
    if (!in_range(a.left) || !in_range(a.right) || a.left >= a.right) {
      throw InvalidInput("lower arc out of range or not left < right");
    }
    ++in[a.left];
    ++out[a.right];
  }
  for (int v : upper_open_) {
    if (!in_range(v)) throw InvalidInput("upper semi-arc origin out of range");
    ++out[v];
  }
  for (int v : lower_open_) {
    if (!in_range(v)) throw InvalidInput("lower semi-arc origin out of range");
    ++in[v];
  }
  for (int v = 1; v <= n_; ++v) {
    const bool loop_ok = loops[v] == 1 && out[v] == 0 && in[v] == 0;
    const bool path_ok = loops[v] == 0 && out[v] == 1 && in[v] == 1;
    if (!loop_ok && !path_ok) {
      throw InvalidInput("vertex " + std::to_string(v) +
                         " does not have permutation degree");
    }
  }
  std::sort(upper_.begin(), upper_.end());
  std::sort(lower_.begin(), lower_.end());
  std::sort(upper_open_.begin(), upper_open_.end());
  std::sort(lower_open_.begin(), lower_open_.end());
}

std::vector<int> OpenPermutationDiagram::fixed_points() const {
  std::vector<int> out;
  for (const Arc& a : upper_) {
    if (a.degenerate()) out.push_back(a.left);
  }
  return out;
}

std::vector<int> OpenPermutationDiagram::permutation() const {
  if (!upper_open_.empty()) throw InvalidInput("diagram still has semi-arcs");
  std::vector<int> sigma(static_cast<std::size_t>(n_), 0);
  for (const Arc& a : upper_) sigma[a.left - 1] = a.right;
  for (const Arc& a : lower_) sigma[a.right - 1] = a.left;
  return sigma;
}

// ---------------------------------------------------------------------------

int nesting_index(const OpenPartitionDiagram& d, int semi_arc_origin,
                  NestingMode mode) {
  const auto& open = d.open_arcs();
  if (!std::binary_search(open.begin(), open.end(), semi_arc_origin)) {
    throw InvalidInput("no semi-arc originates at vertex " +
                       std::to_string(semi_arc_origin));
  }
  return max_nesting(arcs_right_of(d.nesting_arcs(mode), semi_arc_origin), mode);
}

int upper_nesting_index(const OpenPermutationDiagram& d, int semi_arc_origin) {
  const auto& open = d.upper_open();
  if (!std::binary_search(open.begin(), open.end(), semi_arc_origin)) {
    throw InvalidInput("no upper semi-arc originates at vertex " +
                       std::to_string(semi_arc_origin));
  }
  return max_nesting(arcs_right_of(d.upper_arcs(), semi_arc_origin),
                     NestingMode::Enhanced);
}

int lower_nesting_index(const OpenPermutationDiagram& d, int semi_arc_origin) {
  const auto& open = d.lower_open();
  if (!std::binary_search(open.begin(), open.end(), semi_arc_origin)) {
    throw InvalidInput("no lower semi-arc originates at vertex " +
                       std::to_string(semi_arc_origin));
  }
  return max_nesting(arcs_right_of(d.lower_arcs(), semi_arc_origin),
                     NestingMode::Plain);
}

// The outermost semi-arc sees a superset of the arcs any other semi-arc
// sees, so it carries the maximal index.
bool is_nonnesting(const OpenPartitionDiagram& d, int k, NestingMode mode) {
  if (k == kUnbounded) return true;
  if (max_nesting(d.nesting_arcs(mode), mode) >= k) return false;
  if (!d.open_arcs().empty() &&
      nesting_index(d, d.open_arcs().front(), mode) >= k - 1) {
    return false;
  }
  return true;
}

bool is_nonnesting(const OpenPermutationDiagram& d, int k) {
  if (k == kUnbounded) return true;
  if (max_nesting(d.upper_arcs(), NestingMode::Enhanced) >= k) return false;
  if (max_nesting(d.lower_arcs(), NestingMode::Plain) >= k) return false;
  if (!d.upper_open().empty()) {
    if (upper_nesting_index(d, d.upper_open().front()) >= k - 1) return false;
    if (lower_nesting_index(d, d.lower_open().front()) >= k - 1) return false;
  }
  return true;
}

namespace {

void check_label_k(int k) {
  if (k < 1 || k == kUnbounded) {
    throw InvalidInput("labels need a finite forbidden nesting size k >= 1");
  }
}

std::vector<int> tail_counts(const std::vector<int>& indices, int length,
                             int from) {
  std::vector<int> out(static_cast<std::size_t>(length), 0);
  for (int idx : indices) {
    for (int i = 0; i < length && i + from <= idx; ++i) ++out[i];
  }
  return out;
}

}  // namespace

PartitionLabel partition_label(const OpenPartitionDiagram& d, int k,
                               NestingMode mode) {
  check_label_k(k);
  if (!is_nonnesting(d, k, mode)) {
    throw ConstraintViolated("diagram contains a regular or future " +
                             std::to_string(k) + "-nesting");
  }
  std::vector<int> idx;
  for (int origin : d.open_arcs()) idx.push_back(nesting_index(d, origin, mode));
  return PartitionLabel{tail_counts(idx, k - 1, 0)};
}

PermutationLabel permutation_label(const OpenPermutationDiagram& d, int k) {
  check_label_k(k);
  if (!is_nonnesting(d, k)) {
    throw ConstraintViolated("permutation diagram contains a regular or future " +
                             std::to_string(k) + "-nesting");
  }
  std::vector<int> up, low;
  for (int origin : d.upper_open()) up.push_back(upper_nesting_index(d, origin));
  for (int origin : d.lower_open()) low.push_back(lower_nesting_index(d, origin));
  const int len = std::max(0, k - 2);
  return PermutationLabel{static_cast<int>(d.upper_open().size()),
                          tail_counts(up, len, 1), tail_counts(low, len, 1)};
}

// ---------------------------------------------------------------------------

OpenPartitionDiagram apply_step(const OpenPartitionDiagram& d, PartitionStep step) {
  const int v = d.size() + 1;
  std::vector<Arc> closed = d.closed_arcs();
  std::vector<int> open = d.open_arcs();
  using K = PartitionStep::Kind;
  switch (step.kind) {
    case K::FixedPoint:
      break;
    case K::SemiOpener:
      open.push_back(v);
      break;
    case K::SemiTransitory:
    case K::Closer: {
      if (step.index < 0 || step.index >= static_cast<int>(open.size())) {
        throw InvalidInput("close index " + std::to_string(step.index) +
                           " out of range for " + std::to_string(open.size()) +
                           " semi-arcs");
      }
      closed.push_back({open[step.index], v});
      open.erase(open.begin() + step.index);
      if (step.kind == K::SemiTransitory) open.push_back(v);
      break;
    }
  }
  return OpenPartitionDiagram(v, std::move(closed), std::move(open));
}

OpenPermutationDiagram apply_step(const OpenPermutationDiagram& d,
                                  PermutationStep step) {
  const int v = d.size() + 1;
  std::vector<Arc> upper = d.upper_arcs();
  std::vector<Arc> lower = d.lower_arcs();
  std::vector<int> uo = d.upper_open();
  std::vector<int> lo = d.lower_open();
  auto check = [](int i, std::size_t size, const char* side) {
    if (i < 0 || i >= static_cast<int>(size)) {
      throw InvalidInput(std::string(side) + " close index " + std::to_string(i) +
                         " out of range for " + std::to_string(size) +
                         " semi-arcs");
    }
  };
  using K = PermutationStep::Kind;
  switch (step.kind) {
    case K::FixedPoint:
      upper.push_back({v, v});
      break;
    case K::SemiOpener:
      uo.push_back(v);
      lo.push_back(v);
      break;
    case K::UpperSemiTransitory:
      check(step.upper, uo.size(), "upper");
      upper.push_back({uo[step.upper], v});
      uo.erase(uo.begin() + step.upper);
      uo.push_back(v);
      break;
    case K::LowerSemiTransitory:
      check(step.lower, lo.size(), "lower");
      lower.push_back({lo[step.lower], v});
      lo.erase(lo.begin() + step.lower);
      lo.push_back(v);
      break;
    case K::Closer:
      check(step.upper, uo.size(), "upper");
      check(step.lower, lo.size(), "lower");
      upper.push_back({uo[step.upper], v});
      lower.push_back({lo[step.lower], v});
      uo.erase(uo.begin() + step.upper);
      lo.erase(lo.begin() + step.lower);
      break;
  }
  return OpenPermutationDiagram(v, std::move(upper), std::move(lower), std::move(uo),
                                std::move(lo));
}

std::vector<PartitionStep> legal_steps(const OpenPartitionDiagram& d, int k,
                                       NestingMode mode) {
  const int m = static_cast<int>(d.open_arcs().size());
  std::vector<PartitionStep> candidates{PartitionStep::fixed_point(),
                                        PartitionStep::semi_opener()};
  for (int i = 0; i < m; ++i) candidates.push_back(PartitionStep::semi_transitory(i));
  for (int i = 0; i < m; ++i) candidates.push_back(PartitionStep::closer(i));
  if (k == kUnbounded) return candidates;

  std::vector<PartitionStep> out;
  for (const auto& step : candidates) {
    if (is_nonnesting(apply_step(d, step), k, mode)) out.push_back(step);
  }
  return out;
}

std::vector<PermutationStep> legal_steps(const OpenPermutationDiagram& d, int k) {
  const int h = static_cast<int>(d.upper_open().size());
  std::vector<PermutationStep> candidates{PermutationStep::fixed_point(),
                                          PermutationStep::semi_opener()};
  for (int u = 0; u < h; ++u) {
    candidates.push_back(PermutationStep::upper_semi_transitory(u));
  }
  for (int l = 0; l < h; ++l) {
    candidates.push_back(PermutationStep::lower_semi_transitory(l));
  }
  for (int u = 0; u < h; ++u) {
    for (int l = 0; l < h; ++l) candidates.push_back(PermutationStep::closer(u, l));
  }
  if (k == kUnbounded) return candidates;

  std::vector<PermutationStep> out;
  for (const auto& step : candidates) {
    if (is_nonnesting(apply_step(d, step), k)) out.push_back(step);
  }
  return out;
}

// ---------------------------------------------------------------------------

OpenPermutationDiagram perm_to_diagram(std::span<const int> sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int x : sigma) {
    if (x < 1 || x > n || seen[x]) throw InvalidInput("not a permutation of 1..n");
    seen[x] = 1;
  }
  std::vector<Arc> upper, lower;
  for (int i = 1; i <= n; ++i) {
    const int j = sigma[i - 1];
    if (i <= j) {
      upper.push_back({i, j});
    } else {
      lower.push_back({j, i});
    }
  }
  return OpenPermutationDiagram(n, std::move(upper), std::move(lower), {}, {});
}

}  // namespace nestgen
