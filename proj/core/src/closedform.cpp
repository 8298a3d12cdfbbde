#include "nestgen/closedform.hpp"

#include <algorithm>

#include "nestgen/errors.hpp"
#include "nestgen/gentree.hpp"
#include "nestgen/refdata.hpp"

namespace nestgen {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw InvalidInput(std::string(what) + ": n must be nonnegative");
}

}  // namespace

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(int n) {
  require_nonnegative(n, "factorial");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt bell(int n) {
  require_nonnegative(n, "bell");
  std::vector<BigInt> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<BigInt> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

BigInt catalan(int n) {
  require_nonnegative(n, "catalan");
  return binomial(2 * n, n) / (n + 1);
}

BigInt baxter(int n) {
  if (n < 1) throw InvalidInput("baxter: n must be at least 1");
  BigInt sum = 0;
  for (int r = 1; r <= n; ++r) {
    sum += binomial(n + 1, r - 1) * binomial(n + 1, r) * binomial(n + 1, r + 1);
  }
  BigInt den = binomial(n + 1, 1) * binomial(n + 1, 2);
  if (!mpz_divisible_p(sum.get_mpz_t(), den.get_mpz_t())) {
    throw DivisibilityError("baxter: sum not divisible");
  }
  return sum / den;
}

BigInt stirling2(int n, int m) {
  require_nonnegative(n, "stirling2");
  if (m < 0 || m > n) return 0;
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[m];
}

BigInt open_partition_count(int n) {
  require_nonnegative(n, "open_partition_count");
  BigInt sum = 0;
  BigInt pow2 = 1;
  for (int m = 0; m <= n; ++m, pow2 *= 2) sum += stirling2(n, m) * pow2;
  return sum;
}

BigInt open_permutation_count(int n) {
  require_nonnegative(n, "open_permutation_count");
  BigInt sum = 0;
  for (int j = 0; j <= n; ++j) {
    BigInt c = binomial(n, j);
    sum += c * c * factorial(j);
  }
  return sum;
}

BigInt open_permutation_count_by_cycles(int n) {
  require_nonnegative(n, "open_permutation_count_by_cycles");
  std::vector<BigInt> a(static_cast<std::size_t>(n) + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int i = 1; i <= m; ++i) {
      a[m] += binomial(m - 1, i - 1) * factorial(i - 1) * (i + 1) * a[m - i];
    }
  }
  return a[n];
}

SequenceTable tabulate(const std::string& name, int first, int last, BigInt (*f)(int)) {
  SequenceTable t{name, first, {}};
  for (int n = first; n <= last; ++n) t.terms.push_back(f(n));
  return t;
}

// ---------------------------------------------------------------------------

std::string to_string(FormulaReading r) {
  switch (r) {
    case FormulaReading::Trinomial: return "trinomial";
    case FormulaReading::FreeP: return "free-p";
    case FormulaReading::TwoSum: return "two-sum";
  }
  return "?";
}

BigInt multinomial(int N, int a, int b, int c) {
  const int rest = N - a - b - c;
  if (N < 0 || a < 0 || b < 0 || c < 0 || rest < 0) return 0;
  return factorial(N) / (factorial(a) * factorial(b) * factorial(c) * factorial(rest));
}

BigRational formula_first_sum(int n) {
  require_nonnegative(n, "formula_first_sum");
  BigRational sum = 0;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      const int k = n - i - j;
      BigInt m = multinomial(n, i, j, k);
      sum += BigRational(m * m) * (BigRational(1) - BigRational(k, j + 1));
    }
  }
  sum.canonicalize();
  return sum;
}

BigInt egf_first_sum_claim(int n) {
  require_nonnegative(n, "egf_first_sum_claim");
  BigInt sum = 0;
  BigInt pow2 = 1;
  for (int j = 0; j <= n; ++j, pow2 *= 2) sum += factorial(n) / factorial(j) * pow2;
  return sum;
}

namespace {

using Distribution = std::vector<LevelDistribution>;

BigRational inner_single(int n, int k, int i, bool free_p) {
  const int m = n - k;
  BigRational sum = 0;
  for (int q = 0; q <= m; ++q) {
    for (int r = 0; q + r <= m; ++r) {
      const int p_lo = free_p ? 0 : m - q - r;
      for (int p = p_lo; p <= m - q - r; ++p) {
        BigInt a = multinomial(m, p, q, r);
        BigInt b = multinomial(m - 1, p - i, q + i, r - 1);
        if (a == 0 || b == 0) continue;
        sum += BigRational(a * b) * (BigRational(r - 1, q + i + 1) - 1);
      }
    }
  }
  return sum;
}

BigRational inner_two_sum(int n, int k, int i) {
  const int m = n - k;
  BigRational sum = 0;
  for (int q = 0; q <= m; ++q) {
    for (int r = 0; q + r <= m; ++r) {
      const int p = m - q - r;
      BigInt a = multinomial(m, p, q, r);
      sum += a * multinomial(m - 1, p - i, i + 1 - q, r - 2);
      sum -= a * multinomial(m - 1, p - i, q - 1, r + i);
    }
  }
  return sum;
}

BigRational evaluate(int n, FormulaReading reading, const Distribution& levels) {
  BigRational value = formula_first_sum(n);
  for (int k = 0; k < n; ++k) {
    for (const auto& [label, count] : levels.at(static_cast<std::size_t>(k)).entries) {
      const int i = label.at(0);
      BigRational inner = reading == FormulaReading::TwoSum
                              ? inner_two_sum(n, k, i)
                              : inner_single(n, k, i, reading == FormulaReading::FreeP);
      value += BigRational(count) * inner;
    }
  }
  value.canonicalize();
  return value;
}

Distribution three_nonnesting_levels(int n) {
  return count_levels({Family::Partition, 3}, std::max(n - 1, 0));
}

}  // namespace

BigRational formula_3nn_partitions(int n, FormulaReading reading) {
  require_nonnegative(n, "formula_3nn_partitions");
  return evaluate(n, reading, three_nonnesting_levels(n));
}

std::vector<FormulaReport> formula_3nn_report(int max_n) {
  require_nonnegative(max_n, "formula_3nn_report");
  const ReferenceSequence& ref = lookup({Family::Partition, 3});
  if (max_n > static_cast<int>(ref.terms.size())) {
    throw InvalidInput("formula report: reference has only " +
                       std::to_string(ref.terms.size()) + " terms");
  }
  const Distribution levels = three_nonnesting_levels(max_n);
  std::vector<FormulaReport> out;
  for (auto reading : {FormulaReading::Trinomial, FormulaReading::FreeP, FormulaReading::TwoSum}) {
    FormulaReport report{reading, {}, true, -1};
    for (int n = 0; n <= max_n; ++n) {
      FormulaRow row;
      row.n = n;
      row.value = evaluate(n, reading, levels);
      row.integral = row.value.get_den() == 1;
      row.reference = n == 0 ? BigInt(1) : from_decimal(ref.terms[static_cast<std::size_t>(n - 1)]);
      row.matches = row.integral && row.value.get_num() == row.reference;
      if (!row.matches && report.all_match) {
        report.all_match = false;
        report.first_mismatch = n;
      }
      report.rows.push_back(std::move(row));
    }
    out.push_back(std::move(report));
  }
  return out;
}

std::vector<EgfRow> first_sum_egf_report(int max_n) {
  require_nonnegative(max_n, "first_sum_egf_report");
  std::vector<EgfRow> out;
  for (int n = 0; n <= max_n; ++n) {
    EgfRow row{n, formula_first_sum(n), egf_first_sum_claim(n), false};
    row.agrees = row.first_sum == BigRational(row.claimed);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace nestgen
