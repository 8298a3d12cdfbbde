#include "nestgen/gentree.hpp"

#include <algorithm>

#include "nestgen/errors.hpp"

namespace nestgen {

std::string to_string(Family f) {
  switch (f) {
    case Family::Partition: return "partitions";
    case Family::PartitionEnhanced: return "partitions-enhanced";
    case Family::Permutation: return "permutations";
    case Family::OpenPartition: return "open-partitions";
    case Family::OpenPermutation: return "open-permutations";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::Partition, Family::PartitionEnhanced, Family::Permutation,
                   Family::OpenPartition, Family::OpenPermutation}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

void FamilySpec::validate() const {
  if (constrained() && k < 2) {
    throw InvalidInput("forbidden nesting size k must be at least 2, got " +
                       std::to_string(k));
  }
}

// ---------------------------------------------------------------------------
// Succession rules

namespace {

template <class Label>
ChildMultiset<Label> aggregate(std::vector<Label> children) {
  std::sort(children.begin(), children.end());
  ChildMultiset<Label> out;
  for (auto& c : children) {
    if (!out.empty() && out.back().first == c) {
      ++out.back().second;
    } else {
      out.emplace_back(std::move(c), 1);
    }
  }
  return out;
}

// `e` is [top, e_1, ..., e_{L-1}] where top is s_0 (partitions) or h
// (permutations). Returns every way of closing one semi-arc without creating
// a future L+1-nesting, as the updated vector; e[0] is left untouched.
//  - closing a semi-arc of index j-1 < L-1: the semi-arcs above it that had
//    index j-1 move to index j, so e_j becomes any i in [e_j, e_{j-1} - 1]
//    and e_1..e_{j-1} lose the closed semi-arc;
//  - closing the outermost semi-arc when it has index L-1: every e_i drops.
std::vector<std::vector<int>> closings(const std::vector<int>& e) {
  const std::size_t len = e.size();
  std::vector<std::vector<int>> out;
  if (e[len - 1] >= 1) {
    auto c = e;
    for (std::size_t p = 1; p < len; ++p) --c[p];
    out.push_back(std::move(c));
  }
  for (std::size_t j = 1; j < len; ++j) {
    for (int i = e[j]; i <= e[j - 1] - 1; ++i) {
      auto c = e;
      for (std::size_t p = 1; p < j; ++p) --c[p];
      c[j] = i;
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<int> with_top(int top, const std::vector<int>& tail) {
  std::vector<int> e;
  e.reserve(tail.size() + 1);
  e.push_back(top);
  e.insert(e.end(), tail.begin(), tail.end());
  return e;
}

std::vector<int> drop_top(std::vector<int> e) {
  e.erase(e.begin());
  return e;
}

}  // namespace

ChildMultiset<PartitionLabel> successors_partition(const PartitionLabel& label,
                                                   NestingMode mode) {
  const auto& s = label.s;
  if (s.empty()) throw InvalidInput("partition label must have at least one entry");
  std::vector<PartitionLabel> children;

  if (mode == NestingMode::Plain) {
    children.push_back(label);
  } else if (s.size() >= 2) {
    auto c = s;
    c[1] = s[0];
    children.push_back({std::move(c)});
  } else if (s[0] == 0) {
    // With a single entry every index-1 semi-arc is already forbidden, so a
    // fixed point is only allowed under no semi-arc at all.
    children.push_back(label);
  }

  {
    auto c = s;
    ++c[0];
    children.push_back({std::move(c)});
  }

  for (auto& c : closings(s)) {
    children.push_back({c});  // semi-transitory
    --c[0];
    children.push_back({std::move(c)});  // closer
  }
  return aggregate(std::move(children));
}

ChildMultiset<PermutationLabel> successors_permutation(const PermutationLabel& label) {
  const int h = label.h;
  if (label.r.size() != label.s.size()) {
    throw InvalidInput("permutation label sides differ in length");
  }
  std::vector<PermutationLabel> children;

  if (!label.r.empty()) {
    auto c = label;
    c.r[0] = h;
    children.push_back(std::move(c));
  } else if (h == 0) {
    children.push_back(label);
  }

  {
    auto c = label;
    ++c.h;
    children.push_back(std::move(c));
  }

  std::vector<std::vector<int>> up, low;
  for (auto& e : closings(with_top(h, label.r))) up.push_back(drop_top(std::move(e)));
  for (auto& e : closings(with_top(h, label.s))) low.push_back(drop_top(std::move(e)));

  for (const auto& r : up) children.push_back({h, r, label.s});
  for (const auto& s : low) children.push_back({h, label.r, s});
  for (const auto& r : up) {
    for (const auto& s : low) children.push_back({h - 1, r, s});
  }
  return aggregate(std::move(children));
}

ChildMultiset<PartitionLabel> successors_open_partition(const PartitionLabel& label) {
  if (label.s.size() != 1) throw InvalidInput("open partition label is [m]");
  const int m = label.s[0];
  ChildMultiset<PartitionLabel> out;
  if (m > 0) out.push_back({{{m - 1}}, static_cast<std::uint64_t>(m)});
  out.push_back({{{m}}, static_cast<std::uint64_t>(m) + 1});
  out.push_back({{{m + 1}}, 1});
  return out;
}

ChildMultiset<PermutationLabel> successors_open_permutation(
    const PermutationLabel& label) {
  if (!label.r.empty() || !label.s.empty()) {
    throw InvalidInput("open permutation label is [h;;]");
  }
  const auto h = static_cast<std::uint64_t>(label.h);
  ChildMultiset<PermutationLabel> out;
  if (h > 0) out.push_back({{label.h - 1, {}, {}}, h * h});
  out.push_back({{label.h, {}, {}}, 2 * h + 1});
  out.push_back({{label.h + 1, {}, {}}, 1});
  return out;
}

// ---------------------------------------------------------------------------
// Level-by-level counting

BigInt LevelDistribution::total() const {
  BigInt sum = 0;
  for (const auto& [label, count] : entries) sum += count;
  return sum;
}

BigInt LevelDistribution::zero_count() const {
  for (const auto& [label, count] : entries) {
    if (std::all_of(label.begin(), label.end(), [](int x) { return x == 0; })) {
      return count;
    }
  }
  return 0;
}

namespace {

FlatLabel flatten(const PartitionLabel& l) { return l.s; }

FlatLabel flatten(const PermutationLabel& l) {
  FlatLabel out{l.h};
  out.insert(out.end(), l.r.begin(), l.r.end());
  out.insert(out.end(), l.s.begin(), l.s.end());
  return out;
}

int top(const PartitionLabel& l) { return l.s[0]; }
int top(const PermutationLabel& l) { return l.h; }

// Pushes the root through `rule` for N levels; `visit(n, map)` sees each
// level in label order.
template <class Label, class Rule, class Visit>
void run_levels(Label root, Rule rule, int N, const CountOptions& options,
                Visit visit) {
  if (N < 0) throw InvalidInput("level count must be nonnegative");
  std::map<Label, BigInt> current;
  current.emplace(std::move(root), 1);
  visit(0, current);
  for (int n = 0; n < N; ++n) {
    const int horizon = N - (n + 1);
    std::map<Label, BigInt> next;
    for (const auto& [label, count] : current) {
      for (const auto& [child, mult] : rule(label)) {
        if (options.prune_to_horizon && top(child) > horizon) continue;
        BigInt& slot = next[child];
        mpz_addmul_ui(slot.get_mpz_t(), count.get_mpz_t(), mult);
      }
      if (next.size() > options.max_labels) {
        throw ResourceExceeded("label budget of " + std::to_string(options.max_labels) +
                                   " exceeded while building level " +
                                   std::to_string(n + 1),
                               n);
      }
    }
    current = std::move(next);
    visit(n + 1, current);
  }
}

template <class Visit>
void dispatch_levels(const FamilySpec& spec, int N, const CountOptions& options,
                     Visit&& visit) {
  spec.validate();
  const int len = spec.k - 1;
  switch (spec.family) {
    case Family::Partition:
    case Family::PartitionEnhanced: {
      const NestingMode mode = spec.family == Family::Partition ? NestingMode::Plain
                                                                : NestingMode::Enhanced;
      run_levels(PartitionLabel{std::vector<int>(static_cast<std::size_t>(len), 0)},
                 [mode](const PartitionLabel& l) { return successors_partition(l, mode); },
                 N, options, visit);
      break;
    }
    case Family::Permutation: {
      const std::vector<int> zeros(static_cast<std::size_t>(len - 1), 0);
      run_levels(PermutationLabel{0, zeros, zeros},
                 [](const PermutationLabel& l) { return successors_permutation(l); }, N,
                 options, visit);
      break;
    }
    case Family::OpenPartition:
      run_levels(PartitionLabel{{0}},
                 [](const PartitionLabel& l) { return successors_open_partition(l); }, N,
                 options, visit);
      break;
    case Family::OpenPermutation:
      run_levels(PermutationLabel{0, {}, {}},
                 [](const PermutationLabel& l) { return successors_open_permutation(l); },
                 N, options, visit);
      break;
  }
}

}  // namespace

std::vector<LevelDistribution> count_levels(const FamilySpec& spec, int N,
                                            const CountOptions& options) {
  std::vector<LevelDistribution> out;
  dispatch_levels(spec, N, options, [&](int n, const auto& level) {
    LevelDistribution dist;
    dist.level = n;
    for (const auto& [label, count] : level) dist.entries.emplace(flatten(label), count);
    out.push_back(std::move(dist));
  });
  return out;
}

std::vector<BigInt> count_sequence(const FamilySpec& spec, int N,
                                   std::size_t max_labels) {
  CountOptions options;
  options.prune_to_horizon = true;
  options.max_labels = max_labels;
  std::vector<BigInt> out;
  dispatch_levels(spec, N, options, [&](int, const auto& level) {
    BigInt zero = 0;
    if (!level.empty() && top(level.begin()->first) == 0) {
      // Label invariants force every entry to zero once the top entry is.
      zero = level.begin()->second;
    }
    out.push_back(zero);
  });
  return out;
}

std::vector<BigInt> level_totals(const FamilySpec& spec, int N,
                                 std::size_t max_labels) {
  CountOptions options;
  options.max_labels = max_labels;
  std::vector<BigInt> out;
  dispatch_levels(spec, N, options, [&](int, const auto& level) {
    BigInt sum = 0;
    for (const auto& [label, count] : level) sum += count;
    out.push_back(sum);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Streams

PartitionDiagramStream::PartitionDiagramStream(int k, NestingMode mode, int n,
                                               bool closed_only)
    : k_(k), mode_(mode), n_(n), closed_only_(closed_only) {
  if (n < 0) throw InvalidInput("diagram size must be nonnegative");
}

void PartitionDiagramStream::push(OpenPartitionDiagram d) {
  auto steps = legal_steps(d, k_, mode_);
  stack_.push_back({std::move(d), std::move(steps), 0});
}

std::optional<OpenPartitionDiagram> PartitionDiagramStream::next() {
  if (root_pending_) {
    root_pending_ = false;
    if (n_ == 0) return OpenPartitionDiagram{};
    push(OpenPartitionDiagram{});
  }
  while (!stack_.empty()) {
    Frame& frame = stack_.back();
    if (frame.next == frame.steps.size()) {
      stack_.pop_back();
      continue;
    }
    auto child = apply_step(frame.diagram, frame.steps[frame.next++]);
    const auto open = static_cast<int>(child.open_arcs().size());
    if (child.size() == n_) {
      if (!closed_only_ || open == 0) return child;
      continue;
    }
    if (closed_only_ && open > n_ - child.size()) continue;
    push(std::move(child));
  }
  return std::nullopt;
}

PermutationDiagramStream::PermutationDiagramStream(int k, int n, bool closed_only)
    : k_(k), n_(n), closed_only_(closed_only) {
  if (n < 0) throw InvalidInput("diagram size must be nonnegative");
}

void PermutationDiagramStream::push(OpenPermutationDiagram d) {
  auto steps = legal_steps(d, k_);
  stack_.push_back({std::move(d), std::move(steps), 0});
}

std::optional<OpenPermutationDiagram> PermutationDiagramStream::next() {
  if (root_pending_) {
    root_pending_ = false;
    if (n_ == 0) return OpenPermutationDiagram{};
    push(OpenPermutationDiagram{});
  }
  while (!stack_.empty()) {
    Frame& frame = stack_.back();
    if (frame.next == frame.steps.size()) {
      stack_.pop_back();
      continue;
    }
    auto child = apply_step(frame.diagram, frame.steps[frame.next++]);
    const auto open = static_cast<int>(child.upper_open().size());
    if (child.size() == n_) {
      if (!closed_only_ || open == 0) return child;
      continue;
    }
    if (closed_only_ && open > n_ - child.size()) continue;
    push(std::move(child));
  }
  return std::nullopt;
}

}  // namespace nestgen
