#pragma once

// Classical and closed-form reference sequences.

#include <string>
#include <vector>

#include "nestgen/bigint.hpp"

namespace nestgen {

struct SequenceTable {
  std::string name;
  int offset = 0;  ///< index of terms[0]
  std::vector<BigInt> terms;
};

/// Bell triangle. n >= 0.
BigInt bell(int n);
BigInt catalan(int n);
/// Product-of-binomials formula. n >= 1.
BigInt baxter(int n);
BigInt binomial(int n, int k);
BigInt factorial(int n);
BigInt stirling2(int n, int m);

/// sum_m S(n,m) 2^m: set partitions with two-coloured blocks.
BigInt open_partition_count(int n);
/// sum_j C(n,j)^2 j!: partial permutations.
BigInt open_permutation_count(int n);
/// Same numbers through the exponential formula: a cycle of length i takes
/// one of i+1 colours.
BigInt open_permutation_count_by_cycles(int n);

/// Terms f(first)..f(last).
SequenceTable tabulate(const std::string& name, int first, int last, BigInt (*f)(int));

// ---------------------------------------------------------------------------
// Explicit formula for 3-nonnesting set partitions (experimental)

/// How the unbound index p of the double sum is resolved. Multinomials are
/// read as N!/(a! b! c! (N-a-b-c)!), zero when any part is negative.
enum class FormulaReading {
  Trinomial,   ///< single inner sum, p = n-k-q-r
  FreeP,       ///< single inner sum, p, q, r summed independently
  TwoSum,      ///< two inner sums, p = n-k-q-r
};

std::string to_string(FormulaReading r);

/// N!/(a! b! c! (N-a-b-c)!), or 0 if any part is negative.
BigInt multinomial(int N, int a, int b, int c);

/// sum_{i+j+k=n} multinomial(n;i,j,k)^2 (1 - k/(j+1)).
BigRational formula_first_sum(int n);

/// n! [z^n] e^{2z}/(1-z).
BigInt egf_first_sum_claim(int n);

/// Evaluates the formula for n under a reading. Uses the 3-nonnesting
/// generating-tree distribution for the A_{i,j}(k) factors.
BigRational formula_3nn_partitions(int n, FormulaReading reading);

struct FormulaRow {
  int n = 0;
  BigRational value;
  bool integral = false;
  BigInt reference;
  bool matches = false;
};

struct FormulaReport {
  FormulaReading reading = FormulaReading::Trinomial;
  std::vector<FormulaRow> rows;  ///< n = 0..max_n
  bool all_match = false;
  int first_mismatch = -1;
};

/// One report per reading against the 3-nonnesting reference sequence.
std::vector<FormulaReport> formula_3nn_report(int max_n);

struct EgfRow {
  int n = 0;
  BigRational first_sum;
  BigInt claimed;
  bool agrees = false;
};

std::vector<EgfRow> first_sum_egf_report(int max_n);

}  // namespace nestgen
