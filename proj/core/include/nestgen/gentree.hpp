#pragma once

// Generating trees for k-nonnesting open diagrams.
//
// Succession rules map a label to the multiset of its children's labels.
// Counting never materialises the tree: each level is a distribution
// label -> number of nodes, pushed through the rule to get the next one.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nestgen/arcdiag.hpp"
#include "nestgen/bigint.hpp"

namespace nestgen {

enum class Family {
  Partition,
  PartitionEnhanced,
  Permutation,
  OpenPartition,    ///< all open partition diagrams, no nesting constraint
  OpenPermutation,  ///< all open permutation diagrams
};

std::string to_string(Family f);
/// Accepts the CLI spellings (partitions, partitions-enhanced, ...).
std::optional<Family> parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::Partition;
  int k = 3;  ///< forbidden nesting size; ignored for the open families

  bool constrained() const noexcept {
    return family == Family::Partition || family == Family::PartitionEnhanced ||
           family == Family::Permutation;
  }
  /// Throws InvalidInput when a constrained family has k < 2.
  void validate() const;
  auto operator<=>(const FamilySpec&) const = default;
};

template <class Label>
using ChildMultiset = std::vector<std::pair<Label, std::uint64_t>>;

/// Rule for k-nonnesting partitions; label length is k-1 for forbidden
/// size k. Enhanced differs only in the fixed-point child.
ChildMultiset<PartitionLabel> successors_partition(const PartitionLabel& label,
                                                   NestingMode mode);

/// Rule for permutations; upper side enhanced, lower side plain.
ChildMultiset<PermutationLabel> successors_permutation(const PermutationLabel& label);

/// Label [m], m = number of semi-arcs: m -> m, m+1, m^m, (m-1)^m.
ChildMultiset<PartitionLabel> successors_open_partition(const PartitionLabel& label);
/// Label [h;;]: h -> h, h+1, h^{2h}, (h-1)^{h^2}.
ChildMultiset<PermutationLabel> successors_open_permutation(
    const PermutationLabel& label);

/// Labels flattened to integers: partitions [s_0..], permutations [h, r.., s..].
using FlatLabel = std::vector<int>;

struct LevelDistribution {
  int level = 0;
  std::map<FlatLabel, BigInt> entries;

  BigInt total() const;
  /// Count of the all-zero label (closed diagrams).
  BigInt zero_count() const;
};

struct CountOptions {
  /// Drop labels that cannot return to the zero label by level N. Zero
  /// counts are unaffected; totals and distributions are then partial.
  bool prune_to_horizon = false;
  /// Distinct labels allowed in one level before ResourceExceeded.
  std::size_t max_labels = 20'000'000;
};

/// Levels 0..N of the generating tree for `spec`.
std::vector<LevelDistribution> count_levels(const FamilySpec& spec, int N,
                                            const CountOptions& options = {});

/// a(n) for n = 0..N: zero-label counts, i.e. the number of closed
/// k-nonnesting partitions or permutations of size n.
std::vector<BigInt> count_sequence(const FamilySpec& spec, int N,
                                   std::size_t max_labels = 20'000'000);

/// Total number of nodes per level, n = 0..N.
std::vector<BigInt> level_totals(const FamilySpec& spec, int N,
                                 std::size_t max_labels = 20'000'000);

// ---------------------------------------------------------------------------
// Exhaustive generation

/// Depth-first walk of the generating tree, emitting every diagram of size
/// n exactly once. Steps are tried in the order of legal_steps().
class PartitionDiagramStream {
 public:
  PartitionDiagramStream(int k, NestingMode mode, int n, bool closed_only);
  std::optional<OpenPartitionDiagram> next();

 private:
  struct Frame {
    OpenPartitionDiagram diagram;
    std::vector<PartitionStep> steps;
    std::size_t next = 0;
  };
  void push(OpenPartitionDiagram d);

  int k_;
  NestingMode mode_;
  int n_;
  bool closed_only_;
  bool root_pending_ = true;
  std::vector<Frame> stack_;
};

class PermutationDiagramStream {
 public:
  PermutationDiagramStream(int k, int n, bool closed_only);
  std::optional<OpenPermutationDiagram> next();

 private:
  struct Frame {
    OpenPermutationDiagram diagram;
    std::vector<PermutationStep> steps;
    std::size_t next = 0;
  };
  void push(OpenPermutationDiagram d);

  int k_;
  int n_;
  bool closed_only_;
  bool root_pending_ = true;
  std::vector<Frame> stack_;
};

}  // namespace nestgen
