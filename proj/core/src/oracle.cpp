#include "nestgen/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "nestgen/closedform.hpp"
#include "nestgen/errors.hpp"

namespace nestgen {

RgsIterator::RgsIterator(int n) {
  if (n < 0) throw InvalidInput("RgsIterator: n must be nonnegative");
  a_.assign(static_cast<std::size_t>(n), 1);
  prefix_max_.assign(static_cast<std::size_t>(n), 1);
}

Blocks RgsIterator::blocks() const {
  Blocks out;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    const auto b = static_cast<std::size_t>(a_[i] - 1);
    if (b == out.size()) out.emplace_back();
    out[b].push_back(static_cast<int>(i) + 1);
  }
  return out;
}

bool RgsIterator::next() {
  for (std::size_t i = a_.size(); i-- > 1;) {
    if (a_[i] <= prefix_max_[i - 1]) {
      ++a_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], a_[i]);
      for (std::size_t j = i + 1; j < a_.size(); ++j) {
        a_[j] = 1;
        prefix_max_[j] = prefix_max_[i];
      }
      return true;
    }
  }
  return false;
}

std::vector<Arc> partition_to_arcs(const Blocks& blocks) {
  std::vector<int> all;
  for (const auto& b : blocks) {
    if (b.empty()) throw InvalidInput("empty block");
    if (!std::is_sorted(b.begin(), b.end())) throw InvalidInput("block not sorted");
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<int>(i) + 1) throw InvalidInput("blocks do not partition 1..n");
  }
  std::vector<Arc> arcs;
  for (const auto& b : blocks) {
    for (std::size_t i = 1; i < b.size(); ++i) arcs.push_back({b[i - 1], b[i]});
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

std::vector<Arc> partition_fixed_points(const Blocks& blocks) {
  std::vector<Arc> out;
  for (const auto& b : blocks) {
    if (b.size() == 1) out.push_back({b[0], b[0]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool nests(const Arc& outer, const Arc& inner, NestingMode mode) {
  if (outer.degenerate()) return false;
  if (inner.degenerate() && mode == NestingMode::Plain) return false;
  return outer.left < inner.left && inner.right < outer.right;
}

bool is_nesting(std::span<const Arc> arcs, NestingMode mode) {
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    for (std::size_t b = a + 1; b < arcs.size(); ++b) {
      if (!nests(arcs[a], arcs[b], mode) && !nests(arcs[b], arcs[a], mode)) return false;
    }
  }
  return true;
}

int max_nesting_by_subsets(std::span<const Arc> arcs, NestingMode mode) {
  if (arcs.size() > 24) throw ResourceExceeded("subset search limited to 24 arcs", 0);
  int best = 0;
  const std::uint32_t total = 1u << arcs.size();
  std::vector<Arc> chosen;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    const int bits = std::popcount(mask);
    if (bits <= best) continue;
    chosen.clear();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (mask & (1u << i)) chosen.push_back(arcs[i]);
    }
    if (is_nesting(chosen, mode)) best = bits;
  }
  return best;
}

std::vector<std::vector<Arc>> all_nestings(std::span<const Arc> arcs, int size,
                                           NestingMode mode) {
  std::vector<Arc> sorted(arcs.begin(), arcs.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<Arc>> out;
  if (size <= 0 || size > static_cast<int>(sorted.size())) return out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(size));
  std::iota(pick.begin(), pick.end(), 0);
  const std::size_t m = sorted.size();
  for (;;) {
    std::vector<Arc> subset;
    for (std::size_t i : pick) subset.push_back(sorted[i]);
    if (is_nesting(subset, mode)) {
      std::sort(subset.begin(), subset.end(), [](const Arc& a, const Arc& b) {
        return a.left != b.left ? a.left < b.left : a.right > b.right;
      });
      out.push_back(std::move(subset));
    }
    std::size_t i = pick.size();
    while (i > 0 && pick[i - 1] == m - pick.size() + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

namespace {

void check_permutation(std::span<const int> sigma) {
  std::vector<char> seen(sigma.size() + 1, 0);
  for (int x : sigma) {
    if (x < 1 || x > static_cast<int>(sigma.size()) || seen[x]) {
      throw InvalidInput("not a permutation of 1..n");
    }
    seen[x] = 1;
  }
}

}  // namespace

std::vector<Arc> upper_arcs(std::span<const int> sigma) {
  check_permutation(sigma);
  std::vector<Arc> out;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const int from = static_cast<int>(i) + 1;
    if (from <= sigma[i]) out.push_back({from, sigma[i]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Arc> lower_arcs(std::span<const int> sigma) {
  check_permutation(sigma);
  std::vector<Arc> out;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const int from = static_cast<int>(i) + 1;
    if (sigma[i] < from) out.push_back({sigma[i], from});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool partition_avoids(const Blocks& blocks, int k, NestingMode mode) {
  std::vector<Arc> arcs = partition_to_arcs(blocks);
  if (mode == NestingMode::Enhanced) {
    auto fixed = partition_fixed_points(blocks);
    arcs.insert(arcs.end(), fixed.begin(), fixed.end());
  }
  return max_nesting(arcs, mode) < k;
}

bool permutation_avoids(std::span<const int> sigma, int k) {
  return max_nesting(upper_arcs(sigma), NestingMode::Enhanced) < k &&
         max_nesting(lower_arcs(sigma), NestingMode::Plain) < k;
}

std::optional<NestingWitness> contains_knesting(std::span<const int> sigma, int k) {
  if (k < 1) throw InvalidInput("k must be positive");
  const auto up = upper_arcs(sigma);
  auto chain = longest_nesting_chain(up, NestingMode::Enhanced);
  if (static_cast<int>(chain.size()) >= k) {
    return NestingWitness{true, {chain.end() - k, chain.end()}};
  }
  const auto low = lower_arcs(sigma);
  chain = longest_nesting_chain(low, NestingMode::Plain);
  if (static_cast<int>(chain.size()) >= k) {
    return NestingWitness{false, {chain.end() - k, chain.end()}};
  }
  return std::nullopt;
}

std::vector<NestingWitness> all_knestings(std::span<const int> sigma, int k) {
  std::vector<NestingWitness> out;
  for (auto& arcs : all_nestings(upper_arcs(sigma), k, NestingMode::Enhanced)) {
    out.push_back({true, std::move(arcs)});
  }
  for (auto& arcs : all_nestings(lower_arcs(sigma), k, NestingMode::Plain)) {
    out.push_back({false, std::move(arcs)});
  }
  return out;
}

namespace {

void guard(Family family, int n) {
  if (n < 0) throw InvalidInput("n must be nonnegative");
  const BigInt objects = family == Family::Permutation ? factorial(n) : bell(n);
  if (objects > kOracleLimit) {
    throw ResourceExceeded("brute force over " + to_decimal(objects) + " objects exceeds " +
                               std::to_string(kOracleLimit),
                           n);
  }
}

template <class F>
void for_each_partition(int n, F&& f) {
  RgsIterator it(n);
  do {
    f(it.blocks());
  } while (it.next());
}

template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    f(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

NestingMode mode_of(Family family) {
  switch (family) {
    case Family::Partition: return NestingMode::Plain;
    case Family::PartitionEnhanced: return NestingMode::Enhanced;
    default: throw InvalidInput("oracle covers partitions, partitions-enhanced and permutations");
  }
}

}  // namespace

BigInt oracle_count(Family family, int k, int n) {
  if (k < 1) throw InvalidInput("k must be positive");
  guard(family, n);
  long count = 0;
  if (family == Family::Permutation) {
    for_each_permutation(n, [&](const std::vector<int>& s) { count += permutation_avoids(s, k); });
  } else {
    const NestingMode mode = mode_of(family);
    for_each_partition(n, [&](const Blocks& b) { count += partition_avoids(b, k, mode); });
  }
  return count;
}

std::vector<Blocks> accepted_partitions(int k, NestingMode mode, int n) {
  guard(Family::Partition, n);
  std::vector<Blocks> out;
  for_each_partition(n, [&](const Blocks& b) {
    if (partition_avoids(b, k, mode)) out.push_back(b);
  });
  return out;
}

std::vector<std::vector<int>> accepted_permutations(int k, int n) {
  guard(Family::Permutation, n);
  std::vector<std::vector<int>> out;
  for_each_permutation(n, [&](const std::vector<int>& s) {
    if (permutation_avoids(s, k)) out.push_back(s);
  });
  return out;
}

}  // namespace nestgen
