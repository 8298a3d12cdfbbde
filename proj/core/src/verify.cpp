#include "nestgen/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "nestgen/closedform.hpp"
#include "nestgen/equations.hpp"
#include "nestgen/errors.hpp"
#include "nestgen/gentree.hpp"
#include "nestgen/oracle.hpp"
#include "nestgen/refdata.hpp"

namespace nestgen {

std::string to_string(Suite s) {
  switch (s) {
    case Suite::Tables: return "paper-tables";
    case Suite::CrossMethods: return "cross-methods";
    case Suite::Baxter: return "baxter";
    case Suite::Egf: return "egf";
    case Suite::Formula: return "formula";
    case Suite::All: return "all";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::Tables, Suite::CrossMethods, Suite::Baxter, Suite::Egf,
                  Suite::Formula, Suite::All}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::ExperimentalMismatch: return "experimental-mismatch";
  }
  return "?";
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

namespace {

using Seq = std::vector<BigInt>;

std::string join(const Seq& v) {
  std::string out;
  for (const auto& x : v) {
    if (!out.empty()) out += ',';
    out += to_decimal(x);
  }
  return out;
}

Seq slice(const Seq& v, std::size_t from, std::size_t to) {
  to = std::min(to, v.size());
  if (from >= to) return {};
  return {v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to)};
}

class Runner {
 public:
  Runner(std::string suite, const VerifyOptions& options) : options_(options) {
    report_.suite = std::move(suite);
  }

  int cap(int n) const { return options_.max_n ? std::min(n, *options_.max_n) : n; }
  std::size_t labels() const { return options_.max_labels; }

  // `produce` returns (expected, actual).
  void sequences(const std::string& id, const std::function<std::pair<Seq, Seq>()>& produce,
                 bool experimental = false) {
    const auto start = std::chrono::steady_clock::now();
    auto [expected, actual] = produce();
    CheckResult c;
    c.id = id;
    c.expected = join(expected);
    c.actual = join(actual);
    if (expected != actual) {
      c.status = experimental ? CheckStatus::ExperimentalMismatch : CheckStatus::Fail;
      std::size_t i = 0;
      while (i < expected.size() && i < actual.size() && expected[i] == actual[i]) ++i;
      c.detail = "first difference at position " + std::to_string(i);
    }
    finish(c, start);
  }

  void predicate(const std::string& id, const std::string& expected, const std::string& actual,
                 bool ok, std::string detail = {}, bool experimental = false) {
    CheckResult c{id, expected, actual,
                  ok ? CheckStatus::Pass
                     : (experimental ? CheckStatus::ExperimentalMismatch : CheckStatus::Fail),
                  std::move(detail), 0};
    report_.checks.push_back(std::move(c));
  }

  VerificationReport take() { return std::move(report_); }

 private:
  void finish(CheckResult& c, std::chrono::steady_clock::time_point start) {
    c.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    report_.checks.push_back(std::move(c));
  }

  VerifyOptions options_;
  VerificationReport report_;
};

std::string family_id(const FamilySpec& spec) {
  return to_string(spec.family) + " k=" + std::to_string(spec.k);
}

void table_checks(Runner& r) {
  for (const auto& ref : all_references()) {
    r.predicate("checksum " + ref.oeis_id, std::to_string(ref.checksum),
                std::to_string(fnv1a64(joined_terms(ref))),
                fnv1a64(joined_terms(ref)) == ref.checksum);
    const int N = r.cap(static_cast<int>(ref.terms.size()));
    if (N < 1) continue;
    r.sequences("table " + ref.oeis_id + " " + family_id(ref.family), [&] {
      Seq expected;
      for (int n = 1; n <= N; ++n) expected.push_back(from_decimal(ref.terms[static_cast<std::size_t>(n - 1)]));
      Seq actual = slice(count_sequence(ref.family, N, r.labels()), 1, static_cast<std::size_t>(N) + 1);
      return std::pair{expected, actual};
    });
  }
}

void cross_methods(Runner& r) {
  const int N = r.cap(15);
  struct Pair {
    Equation eq;
    int k;
    FamilySpec spec;
  };
  const Pair pairs[] = {
      {Equation::A, 3, {Family::Partition, 3}},
      {Equation::Q, 2, {Family::Partition, 2}},
      {Equation::Q, 3, {Family::Partition, 3}},
      {Equation::Q, 4, {Family::Partition, 4}},
      {Equation::P, 2, {Family::PartitionEnhanced, 2}},
      {Equation::P, 3, {Family::PartitionEnhanced, 3}},
      {Equation::P, 4, {Family::PartitionEnhanced, 4}},
      {Equation::F, 3, {Family::Permutation, 3}},
  };
  for (const auto& p : pairs) {
    r.sequences("series " + to_string(p.eq) + " vs dp " + family_id(p.spec), [&] {
      return std::pair{count_sequence(p.spec, N, r.labels()), equation_counts(p.eq, p.k, N)};
    });
  }
  r.sequences("series B(1,1) vs dp level totals partitions-enhanced k=3", [&] {
    return std::pair{level_totals({Family::PartitionEnhanced, 3}, N, r.labels()),
                     equation_counts(Equation::B, 3, N)};
  });

  const int NP = r.cap(10);
  for (Family f : {Family::Partition, Family::PartitionEnhanced}) {
    for (int k : {2, 3, 4}) {
      const FamilySpec spec{f, k};
      r.sequences("oracle vs dp " + family_id(spec), [&] {
        Seq oracle;
        for (int n = 0; n <= NP; ++n) oracle.push_back(oracle_count(f, k, n));
        return std::pair{oracle, count_sequence(spec, NP, r.labels())};
      });
    }
  }
  const int NS = r.cap(8);
  for (int k : {2, 3, 4}) {
    const FamilySpec spec{Family::Permutation, k};
    r.sequences("oracle vs dp " + family_id(spec), [&] {
      Seq oracle;
      for (int n = 0; n <= NS; ++n) oracle.push_back(oracle_count(Family::Permutation, k, n));
      return std::pair{oracle, count_sequence(spec, NS, r.labels())};
    });
  }
  r.sequences("catalan vs dp permutations k=2", [&] {
    Seq expected;
    for (int n = 0; n <= NS; ++n) expected.push_back(catalan(n));
    return std::pair{expected, count_sequence({Family::Permutation, 2}, NS, r.labels())};
  });
  r.sequences("bell vs oracle partitions unbounded", [&] {
    Seq expected, actual;
    for (int n = 0; n <= NP; ++n) {
      expected.push_back(bell(n));
      actual.push_back(oracle_count(Family::Partition, kUnbounded, n));
    }
    return std::pair{expected, actual};
  });
}

void baxter_suite(Runner& r) {
  const int N = r.cap(25);
  const Seq series = equation_counts(Equation::B, 3, N);
  r.sequences("B(1,1) vs baxter(n+1)", [&] {
    Seq expected;
    for (int n = 0; n <= N; ++n) expected.push_back(baxter(n + 1));
    return std::pair{expected, series};
  });
  const auto& ref = baxter_reference();
  r.sequences("B(1,1) vs A001181 terms", [&] {
    Seq expected;
    for (const auto& t : ref.terms) expected.push_back(from_decimal(t));
    expected.resize(std::min(expected.size(), series.size()));
    return std::pair{expected, slice(series, 0, expected.size())};
  });
  const int Z = std::min(N, 4);
  const TruncatedSeries b = solve_equation(Equation::B, 3, Z);
  std::size_t shown = 0;
  bool ok = true;
  std::string bad;
  for (const auto& t : baxter_series_terms()) {
    if (t.z > Z) continue;
    ++shown;
    if (b.coefficient({t.z, t.u, t.v}) != t.coefficient) {
      ok = false;
      bad = "z^" + std::to_string(t.z) + " u^" + std::to_string(t.u) + " v^" + std::to_string(t.v);
    }
  }
  std::size_t present = 0;
  for (const auto& [e, c] : b.terms()) present += e[0] <= Z;
  ok = ok && present == shown;
  r.predicate("B(u,v) expansion through z^" + std::to_string(Z), std::to_string(shown) + " terms",
              std::to_string(present) + " terms", ok, bad);
}

void egf_suite(Runner& r) {
  const int NP = r.cap(12);
  r.sequences("open partition totals vs stirling sum", [&] {
    Seq expected;
    for (int n = 0; n <= NP; ++n) expected.push_back(open_partition_count(n));
    return std::pair{expected, level_totals({Family::OpenPartition, 0}, NP, r.labels())};
  });
  const int NS = r.cap(10);
  r.sequences("open permutation totals vs partial permutations", [&] {
    Seq expected;
    for (int n = 0; n <= NS; ++n) expected.push_back(open_permutation_count(n));
    return std::pair{expected, level_totals({Family::OpenPermutation, 0}, NS, r.labels())};
  });
  r.sequences("partial permutations vs coloured cycles", [&] {
    Seq a, b;
    for (int n = 0; n <= NS; ++n) {
      a.push_back(open_permutation_count(n));
      b.push_back(open_permutation_count_by_cycles(n));
    }
    return std::pair{a, b};
  });
}

void formula_suite(Runner& r) {
  const int N = r.cap(12);
  for (const auto& report : formula_3nn_report(N)) {
    Seq expected;
    std::string values;
    for (const auto& row : report.rows) {
      expected.push_back(row.reference);
      if (!values.empty()) values += ',';
      values += row.value.get_str();
    }
    std::string detail = report.all_match
                             ? std::string("all rows match")
                             : "first mismatch at n=" + std::to_string(report.first_mismatch);
    r.predicate("formula reading " + to_string(report.reading), join(expected), values,
                report.all_match, detail, true);
  }
  Seq claimed;
  std::string sums;
  bool agree = true;
  for (const auto& row : first_sum_egf_report(N)) {
    claimed.push_back(row.claimed);
    if (!sums.empty()) sums += ',';
    sums += row.first_sum.get_str();
    agree = agree && row.agrees;
  }
  r.predicate("first sum vs exp(2z)/(1-z)", join(claimed), sums, agree, {}, true);
}

}  // namespace

VerificationReport run_suite(Suite suite, const VerifyOptions& options) {
  Runner r(to_string(suite), options);
  auto want = [&](Suite s) { return suite == Suite::All || suite == s; };
  if (want(Suite::Tables)) table_checks(r);
  if (want(Suite::CrossMethods)) cross_methods(r);
  if (want(Suite::Baxter)) baxter_suite(r);
  if (want(Suite::Egf)) egf_suite(r);
  if (want(Suite::Formula)) formula_suite(r);
  return r.take();
}

Json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j{{"id", c.id},
           {"expected", c.expected},
           {"actual", c.actual},
           {"status", to_string(c.status)},
           {"runtime_ms", c.runtime_ms}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  return {{"suite", report.suite},
          {"checks", std::move(checks)},
          {"overall", report.passed() ? "pass" : "fail"}};
}

}  // namespace nestgen
