#pragma once

// Brute force straight from the definitions: every set partition or
// permutation of size n is generated and tested.

#include <optional>
#include <span>
#include <vector>

#include "nestgen/arcdiag.hpp"
#include "nestgen/bigint.hpp"
#include "nestgen/gentree.hpp"

namespace nestgen {

using Blocks = std::vector<std::vector<int>>;

/// Restricted growth strings a(1..n): a(1) = 1, a(i+1) <= 1 + max a(1..i).
class RgsIterator {
 public:
  explicit RgsIterator(int n);
  const std::vector<int>& current() const noexcept { return a_; }
  Blocks blocks() const;
  /// Advances; false once every string has been visited.
  bool next();

 private:
  std::vector<int> a_;
  std::vector<int> prefix_max_;
};

/// Consecutive elements of each block. Throws InvalidInput unless the
/// blocks partition {1..n} for some n.
std::vector<Arc> partition_to_arcs(const Blocks& blocks);
/// Singletons of the partition as degenerate arcs.
std::vector<Arc> partition_fixed_points(const Blocks& blocks);

/// Pairwise test from the definition: i < i' <= j' < j, where the inner arc
/// may be degenerate only in Enhanced mode.
bool nests(const Arc& outer, const Arc& inner, NestingMode mode);
bool is_nesting(std::span<const Arc> arcs, NestingMode mode);

/// Largest pairwise-nested subset by trying subsets; at most 24 arcs.
int max_nesting_by_subsets(std::span<const Arc> arcs, NestingMode mode);
/// Every pairwise-nested subset of the given size, outermost arc first.
std::vector<std::vector<Arc>> all_nestings(std::span<const Arc> arcs, int size,
                                           NestingMode mode);

/// Upper arcs (i, sigma(i)) for i <= sigma(i), fixed points degenerate.
std::vector<Arc> upper_arcs(std::span<const int> sigma);
/// Lower arcs (sigma(i), i) for sigma(i) < i.
std::vector<Arc> lower_arcs(std::span<const int> sigma);

bool partition_avoids(const Blocks& blocks, int k, NestingMode mode);
bool permutation_avoids(std::span<const int> sigma, int k);

struct NestingWitness {
  bool upper = true;
  std::vector<Arc> arcs;  ///< outermost first
};

/// An upper enhanced or lower plain k-nesting of sigma, if any.
std::optional<NestingWitness> contains_knesting(std::span<const int> sigma, int k);
std::vector<NestingWitness> all_knestings(std::span<const int> sigma, int k);

inline constexpr long kOracleLimit = 10'000'000;

/// Number of objects of size n whose (enhanced) nestings stay below k.
/// Family must be Partition, PartitionEnhanced or Permutation; k may be
/// kUnbounded. Throws ResourceExceeded past kOracleLimit objects.
BigInt oracle_count(Family family, int k, int n);

std::vector<Blocks> accepted_partitions(int k, NestingMode mode, int n);
std::vector<std::vector<int>> accepted_permutations(int k, int n);

}  // namespace nestgen
