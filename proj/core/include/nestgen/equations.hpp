#pragma once

// Fixed-point solvers for the functional equations of the generating trees.
//
//   A  3-nonnesting open partition diagrams, variables u, v
//   Q  k-nonnesting open partition diagrams, variables v0..v{k-2}
//   P  same, avoiding enhanced nestings
//   F  3-nonnesting open permutation diagrams, variables u, v, w
//   B  P for k = 3 after specialisation; B(1,1) gives the level totals
//
// Each solve iterates G <- 1 + z*Phi(G) from G = 1, gaining one z-order per
// round. Every division is exact and is checked.

#include <cstddef>
#include <string>
#include <vector>

#include "nestgen/bigint.hpp"
#include "nestgen/series.hpp"

namespace nestgen {

enum class Equation { A, Q, P, F, B };

std::string to_string(Equation eq);

struct SolveOptions {
  /// Closer term of F with F(uw,1,w) instead of F(uv,1,w) in its first
  /// numerator. That variant leaves a division remainder.
  bool uw_closer_variant = false;
};

struct SolveStats {
  int iterations = 0;
  std::size_t exact_divisions = 0;
  std::size_t final_terms = 0;
};

/// Largest N accepted; catalytic caps are 2N+2 and must fit in an exponent.
inline constexpr int kMaxSeriesOrder = 126;

/// `k` is the forbidden nesting size for Q and P (k >= 2) and is ignored
/// otherwise. Throws InvalidInput, or DivisibilityError if an exact
/// division leaves a remainder.
TruncatedSeries solve_equation(Equation eq, int k, int N, const SolveOptions& options = {},
                               SolveStats* stats = nullptr);

/// Counting sequence n = 0..N read off the solution: the constant term in
/// the catalytic variables for A, Q, P and F, and B(1,1) for B.
std::vector<BigInt> equation_counts(Equation eq, int k, int N);

}  // namespace nestgen
