#pragma once

// Open arc diagrams for set partitions and permutations.
//
// Vertices are numbered 1..n. A closed arc is a pair (left, right); a
// semi-arc is identified by its left endpoint alone. Semi-arcs are kept
// sorted by left endpoint, and the one with the smallest left endpoint is
// the outermost ("top" for upper semi-arcs, "bottom" for lower ones).
//
// Throughout, `k` is the forbidden nesting size: a "k-nonnesting" diagram
// has no k-nesting and no future k-nesting, and its label has k-1 entries
// per side.

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace nestgen {

struct Arc {
  int left = 0;
  int right = 0;

  bool degenerate() const noexcept { return left == right; }
  auto operator<=>(const Arc&) const = default;
};

enum class NestingMode {
  Plain,     ///< strict containment i < i' < j' < j, no degenerate arcs
  Enhanced,  ///< degenerate arcs (fixed points) may be the innermost member
};

/// Passing this as `k` removes the nesting constraint entirely.
inline constexpr int kUnbounded = std::numeric_limits<int>::max();

/// Size of the largest set of pairwise nested arcs.
///
/// Longest-chain formulation: sort by left endpoint and take the longest
/// strictly decreasing run of right endpoints. O(m log m).
/// Throws InvalidInput on a degenerate arc in Plain mode or on left > right.
int max_nesting(std::span<const Arc> arcs, NestingMode mode);

/// One largest nesting, outermost arc first.
std::vector<Arc> longest_nesting_chain(std::span<const Arc> arcs,
                                       NestingMode mode);

// ---------------------------------------------------------------------------
// Labels

struct PartitionLabel {
  std::vector<int> s;  ///< s[i] = number of semi-arcs with index >= i

  bool valid() const;
  bool is_zero() const;
  std::string to_string() const;
  auto operator<=>(const PartitionLabel&) const = default;
};

struct PermutationLabel {
  int h = 0;             ///< number of upper (= lower) semi-arcs
  std::vector<int> r;    ///< upper, enhanced nesting index >= i, i = 1..k-2
  std::vector<int> s;    ///< lower, plain nesting index >= i

  bool valid() const;
  bool is_zero() const { return h == 0; }
  std::string to_string() const;
  auto operator<=>(const PermutationLabel&) const = default;
};

// ---------------------------------------------------------------------------
// Build steps

struct PartitionStep {
  enum class Kind : std::uint8_t { FixedPoint, SemiOpener, SemiTransitory, Closer };

  Kind kind = Kind::FixedPoint;
  int index = -1;  ///< position in open_arcs() of the semi-arc being closed

  static PartitionStep fixed_point() { return {Kind::FixedPoint, -1}; }
  static PartitionStep semi_opener() { return {Kind::SemiOpener, -1}; }
  static PartitionStep semi_transitory(int i) { return {Kind::SemiTransitory, i}; }
  static PartitionStep closer(int i) { return {Kind::Closer, i}; }

  std::string to_string() const;
  auto operator<=>(const PartitionStep&) const = default;
};

struct PermutationStep {
  enum class Kind : std::uint8_t {
    FixedPoint,
    SemiOpener,
    UpperSemiTransitory,
    LowerSemiTransitory,
    Closer,
  };

  Kind kind = Kind::FixedPoint;
  int upper = -1;  ///< position in upper_open()
  int lower = -1;  ///< position in lower_open()

  static PermutationStep fixed_point() { return {Kind::FixedPoint, -1, -1}; }
  static PermutationStep semi_opener() { return {Kind::SemiOpener, -1, -1}; }
  static PermutationStep upper_semi_transitory(int u) {
    return {Kind::UpperSemiTransitory, u, -1};
  }
  static PermutationStep lower_semi_transitory(int l) {
    return {Kind::LowerSemiTransitory, -1, l};
  }
  static PermutationStep closer(int u, int l) { return {Kind::Closer, u, l}; }

  std::string to_string() const;
  auto operator<=>(const PermutationStep&) const = default;
};

// ---------------------------------------------------------------------------
// Diagrams

class OpenPartitionDiagram {
 public:
  OpenPartitionDiagram() = default;

  /// Validates vertex degrees; closed arcs are stored sorted and
  /// open arcs sorted increasingly. Throws InvalidInput.
  OpenPartitionDiagram(int n, std::vector<Arc> closed_arcs,
                       std::vector<int> open_arcs);

  int size() const noexcept { return n_; }
  const std::vector<Arc>& closed_arcs() const noexcept { return closed_; }
  const std::vector<int>& open_arcs() const noexcept { return open_; }

  /// Vertices incident to no arc or semi-arc.
  std::vector<int> fixed_points() const;

  /// Closed arcs plus, in Enhanced mode, fixed points as degenerate arcs.
  std::vector<Arc> nesting_arcs(NestingMode mode) const;

  /// Blocks of the set partition; requires no semi-arcs.
  std::vector<std::vector<int>> blocks() const;

  bool operator==(const OpenPartitionDiagram&) const = default;

 private:
  int n_ = 0;
  std::vector<Arc> closed_;
  std::vector<int> open_;
};

class OpenPermutationDiagram {
 public:
  OpenPermutationDiagram() = default;

  /// Upper arcs may be degenerate (fixed points). Throws InvalidInput when a
  /// vertex does not have exactly one outgoing and one incoming end, or when
  /// the semi-arc counts differ.
  OpenPermutationDiagram(int n, std::vector<Arc> upper_arcs,
                         std::vector<Arc> lower_arcs, std::vector<int> upper_open,
                         std::vector<int> lower_open);

  int size() const noexcept { return n_; }
  const std::vector<Arc>& upper_arcs() const noexcept { return upper_; }
  const std::vector<Arc>& lower_arcs() const noexcept { return lower_; }
  const std::vector<int>& upper_open() const noexcept { return upper_open_; }
  const std::vector<int>& lower_open() const noexcept { return lower_open_; }

  std::vector<int> fixed_points() const;

  /// One-line notation (1-based); requires no semi-arcs.
  std::vector<int> permutation() const;

  bool operator==(const OpenPermutationDiagram&) const = default;

 private:
  int n_ = 0;
  std::vector<Arc> upper_;
  std::vector<Arc> lower_;
  std::vector<int> upper_open_;
  std::vector<int> lower_open_;
};

// ---------------------------------------------------------------------------
// Nesting indices and labels

/// Largest j such that a j-nesting (enhanced: counting fixed points) lies
/// entirely to the right of the semi-arc opened at `semi_arc_origin`.
int nesting_index(const OpenPartitionDiagram& d, int semi_arc_origin,
                  NestingMode mode);

/// Enhanced index over upper arcs (fixed points included).
int upper_nesting_index(const OpenPermutationDiagram& d, int semi_arc_origin);
/// Plain index over lower arcs.
int lower_nesting_index(const OpenPermutationDiagram& d, int semi_arc_origin);

/// No regular and no future k-nesting.
bool is_nonnesting(const OpenPartitionDiagram& d, int k, NestingMode mode);
bool is_nonnesting(const OpenPermutationDiagram& d, int k);

/// Throws ConstraintViolated if `d` is not k-nonnesting.
PartitionLabel partition_label(const OpenPartitionDiagram& d, int k,
                               NestingMode mode);
PermutationLabel permutation_label(const OpenPermutationDiagram& d, int k);

/// Steps whose result is still k-nonnesting, in generation order.
std::vector<PartitionStep> legal_steps(const OpenPartitionDiagram& d, int k,
                                       NestingMode mode);
std::vector<PermutationStep> legal_steps(const OpenPermutationDiagram& d, int k);

/// Adds vertex n+1. Throws InvalidInput on an out-of-range close index.
OpenPartitionDiagram apply_step(const OpenPartitionDiagram& d, PartitionStep step);
OpenPermutationDiagram apply_step(const OpenPermutationDiagram& d,
                                  PermutationStep step);

/// Throws InvalidInput unless `sigma` is a bijection on {1..n}.
OpenPermutationDiagram perm_to_diagram(std::span<const int> sigma);

}  // namespace nestgen
