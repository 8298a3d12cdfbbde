// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "nestgen/closedform.hpp"
#include "nestgen/equations.hpp"
#include "nestgen/gentree.hpp"
#include "nestgen/oracle.hpp"
#include "nestgen/refdata.hpp"
#include "nestgen/serialize.hpp"
#include "rule_geometry.hpp"

using namespace nestgen;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + to_decimal(x);
  return s;
}

void compare(Outcome& o, const std::string& what, const std::vector<BigInt>& expected,
             const std::vector<BigInt>& actual) {
  if (expected != actual) o.fail(what + ": expected " + join(expected) + " got " + join(actual));
}

std::vector<BigInt> range(const std::vector<BigInt>& v, int first, int last) {
  return {v.begin() + first, v.begin() + last + 1};
}

Outcome table(Family family, int first_k, int last_k) {
  Outcome o;
  for (int k = first_k; k <= last_k; ++k) {
    const auto& ref = lookup({family, k});
    if (fnv1a64(joined_terms(ref)) != ref.checksum) o.fail(ref.oeis_id + " checksum");
    const int N = static_cast<int>(ref.terms.size());
    std::vector<BigInt> expected;
    for (const auto& t : ref.terms) expected.push_back(from_decimal(t));
    compare(o, ref.oeis_id, expected, range(count_sequence({family, k}, N), 1, N));
  }
  return o;
}

Outcome series_vs_dp() {
  const int N = 15;
  Outcome o;
  compare(o, "A", count_sequence({Family::Partition, 3}, N), equation_counts(Equation::A, 3, N));
  compare(o, "Q k=4", count_sequence({Family::Partition, 4}, N),
          equation_counts(Equation::Q, 4, N));
  for (int k : {3, 4}) {
    compare(o, "P k=" + std::to_string(k), count_sequence({Family::PartitionEnhanced, k}, N),
            equation_counts(Equation::P, k, N));
  }
  compare(o, "F", count_sequence({Family::Permutation, 3}, N), equation_counts(Equation::F, 3, N));
  return o;
}

Outcome oracle_vs_dp() {
  Outcome o;
  for (int k : {2, 3, 4}) {
    for (Family f : {Family::Partition, Family::PartitionEnhanced}) {
      std::vector<BigInt> brute;
      for (int n = 0; n <= 10; ++n) brute.push_back(oracle_count(f, k, n));
      compare(o, to_string(f) + " k=" + std::to_string(k), brute, count_sequence({f, k}, 10));
    }
    std::vector<BigInt> brute;
    for (int n = 0; n <= 8; ++n) brute.push_back(oracle_count(Family::Permutation, k, n));
    compare(o, "permutations k=" + std::to_string(k), brute,
            count_sequence({Family::Permutation, k}, 8));
  }
  return o;
}

Outcome baxter_check() {
  Outcome o;
  const auto b = equation_counts(Equation::B, 3, 25);
  std::vector<BigInt> expected;
  for (int n = 0; n <= 25; ++n) expected.push_back(baxter(n + 1));
  compare(o, "B(1,1)", expected, b);
  return o;
}

Outcome egf_check() {
  Outcome o;
  std::vector<BigInt> p, q;
  for (int n = 0; n <= 12; ++n) {
    BigInt s = 0;
    for (int m = 0; m <= n; ++m) s += stirling2(n, m) << m;
    p.push_back(s);
  }
  for (int n = 0; n <= 10; ++n) {
    BigInt s = 0;
    for (int j = 0; j <= n; ++j) s += binomial(n, j) * binomial(n, j) * factorial(j);
    q.push_back(s);
  }
  compare(o, "open partitions", p, level_totals({Family::OpenPartition, 0}, 12));
  compare(o, "open permutations", q, level_totals({Family::OpenPermutation, 0}, 10));
  return o;
}

Outcome catalan_check() {
  Outcome o;
  std::vector<BigInt> cat, brute;
  for (int n = 0; n <= 8; ++n) {
    cat.push_back(catalan(n));
    brute.push_back(oracle_count(Family::Permutation, 2, n));
  }
  compare(o, "dp", cat, count_sequence({Family::Permutation, 2}, 8));
  compare(o, "oracle", cat, brute);
  return o;
}

Outcome rule_geometry() {
  Outcome o;
  long diagrams = 0;
  for (int k : {2, 3}) {
    for (auto mode : {NestingMode::Plain, NestingMode::Enhanced}) {
      auto r = check::partition_agreement(k, mode, 9);
      diagrams += r.diagrams;
      if (r.mismatches) o.fail("partition label " + r.first_mismatch);
    }
    auto r = check::permutation_agreement(k, 7);
    diagrams += r.diagrams;
    if (r.mismatches) o.fail("permutation label " + r.first_mismatch);
  }
  auto size = [](const auto& m) {
    std::uint64_t s = 0;
    for (const auto& [l, c] : m) s += c;
    return s;
  };
  if (size(successors_permutation({2, {0}, {0}})) != 10) o.fail("|children([2;0;0])| != 10");
  if (size(successors_permutation({4, {2}, {1}})) != 21) o.fail("|children([4;2;1])| != 21");
  if (o.ok) o.note = std::to_string(diagrams) + " diagrams";
  return o;
}

Outcome formula_report() {
  Outcome o;
  const auto reports = formula_3nn_report(12);
  const auto& ref = lookup({Family::Partition, 3});
  std::string summary;
  for (const auto& rep : reports) {
    if (rep.rows.size() != 13) o.fail("wrong row count");
    int first = -1;
    for (const auto& row : rep.rows) {
      const BigInt want = row.n == 0 ? BigInt(1) : from_decimal(ref.terms[row.n - 1]);
      if (row.reference != want) o.fail("reference at n=" + std::to_string(row.n));
      if (row.integral != (row.value.get_den() == 1)) o.fail("integral flag");
      if (row.matches != (row.integral && row.value.get_num() == row.reference)) {
        o.fail("match flag at n=" + std::to_string(row.n));
      }
      if (!row.matches && first < 0) first = row.n;
    }
    if (rep.first_mismatch != first || rep.all_match != (first < 0)) o.fail("summary flags");
    summary += (summary.empty() ? "" : "; ") + to_string(rep.reading) + ": " +
               (rep.all_match ? "matches" : "mismatch from n=" + std::to_string(first));
  }
  if (reports.size() != 3) o.fail("expected three readings");
  if (o.ok) o.note = summary;
  return o;
}

Outcome generation() {
  Outcome o;
  auto lines_of = [&](std::vector<std::string> args) {
    std::ostringstream out, err;
    if (cli::run(args, out, err) != 0) o.fail("generate failed: " + err.str());
    std::vector<Json> docs;
    std::istringstream in(out.str());
    for (std::string l; std::getline(in, l);) docs.push_back(Json::parse(l));
    return docs;
  };
  auto parts = lines_of({"generate", "--family", "partitions", "--k", "3", "--n", "4", "--closed-only"});
  std::set<std::string> seen;
  for (const auto& d : parts) {
    if (!seen.insert(d.dump()).second) o.fail("duplicate partition");
    if (!partition_avoids(d.at("blocks").get<Blocks>(), 3, NestingMode::Plain)) {
      o.fail("partition with a 3-nesting");
    }
  }
  if (parts.size() != 15) o.fail(std::to_string(parts.size()) + " partitions, want 15");
  auto perms =
      lines_of({"generate", "--family", "permutations", "--k", "3", "--n", "5", "--closed-only"});
  seen.clear();
  for (const auto& d : perms) {
    if (!seen.insert(d.dump()).second) o.fail("duplicate permutation");
    if (!permutation_avoids(d.at("permutation").get<std::vector<int>>(), 3)) {
      o.fail("permutation with a 3-nesting");
    }
  }
  if (perms.size() != 118) o.fail(std::to_string(perms.size()) + " permutations, want 118");
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "partition table k=3..7, 21 terms", 10, [] { return table(Family::Partition, 3, 7); }},
      {2, "enhanced partition table k=3..7, 21 terms", 10,
       [] { return table(Family::PartitionEnhanced, 3, 7); }},
      {3, "permutation table k=3..6", 300, [] { return table(Family::Permutation, 3, 6); }},
      {4, "series equals DP for n<=15", 60, series_vs_dp},
      {5, "oracle equals DP", 120, oracle_vs_dp},
      {6, "B(1,1) equals Baxter numbers for n<=25", 30, baxter_check},
      {7, "open diagram totals equal EGF sums", 60, egf_check},
      {8, "2-nonnesting permutations are Catalan for n<=8", 60, catalan_check},
      {9, "succession rules agree with apply_step", 120, rule_geometry},
      {10, "formula report is produced and consistent", 60, formula_report},
      {11, "generate --closed-only emits 15 and 118 valid diagrams", 60, generation},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.budget_s) {
      o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_s) + " s");
    }
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ("
              << std::fixed << std::setprecision(2) << secs << " s)";
    if (!o.note.empty()) std::cout << " -- " << o.note;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
