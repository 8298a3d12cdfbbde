#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

#include "nestgen/closedform.hpp"
#include "nestgen/equations.hpp"
#include "nestgen/errors.hpp"
#include "nestgen/gentree.hpp"
#include "nestgen/oracle.hpp"
#include "nestgen/refdata.hpp"
#include "nestgen/serialize.hpp"
#include "nestgen/verify.hpp"

namespace nestgen::cli {

namespace {

struct Args {
  std::string family;
  int k = 3;
  int n = 0;
  std::string format = "plain";
  bool all_labels = false;
  bool full = false;
  bool closed_only = false;
  std::string suite;
  int max_n = -1;
  std::size_t max_labels = 20'000'000;
};

void print_sequence(std::ostream& out, const Args& a, const std::vector<BigInt>& terms,
                    int offset) {
  if (a.format == "json") {
    Json j{{"family", a.family}, {"k", a.k}, {"offset", offset}, {"terms", to_json(terms)}};
    out << j.dump() << '\n';
  } else if (a.format == "csv") {
    out << "n,count\n";
    for (std::size_t i = 0; i < terms.size(); ++i) {
      out << offset + static_cast<int>(i) << ',' << to_decimal(terms[i]) << '\n';
    }
  } else {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i) out << ',';
      out << to_decimal(terms[i]);
    }
    out << '\n';
  }
}

std::vector<BigInt> from_one(std::vector<BigInt> v) {
  if (!v.empty()) v.erase(v.begin());
  return v;
}

FamilySpec spec_of(const Args& a) {
  auto f = parse_family(a.family);
  if (!f) throw InvalidInput("unknown family " + a.family);
  FamilySpec spec{*f, a.k};
  spec.validate();
  return spec;
}

void require_n(const Args& a) {
  if (a.n < 0) throw InvalidInput("--n must be nonnegative");
}

int cmd_count(const Args& a, std::ostream& out) {
  require_n(a);
  const FamilySpec spec = spec_of(a);
  if (a.all_labels) {
    CountOptions options;
    options.max_labels = a.max_labels;
    auto levels = count_levels(spec, a.n, options);
    if (a.format == "csv") {
      out << "n,label,count\n";
      for (const auto& level : levels) {
        for (const auto& [label, count] : level.entries) {
          out << level.level << ',';
          for (std::size_t i = 0; i < label.size(); ++i) out << (i ? ";" : "") << label[i];
          out << ',' << to_decimal(count) << '\n';
        }
      }
    } else {
      for (const auto& level : levels) out << to_json(level).dump() << '\n';
    }
    return kOk;
  }
  const auto terms = spec.constrained() ? count_sequence(spec, a.n, a.max_labels)
                                        : level_totals(spec, a.n, a.max_labels);
  print_sequence(out, a, from_one(terms), 1);
  return kOk;
}

int cmd_series(const Args& a, std::ostream& out) {
  require_n(a);
  Equation eq;
  int order = a.n;
  if (a.family == "partitions") {
    eq = a.k == 3 ? Equation::A : Equation::Q;
  } else if (a.family == "partitions-enhanced") {
    eq = Equation::P;
  } else if (a.family == "permutations3") {
    eq = Equation::F;
  } else {
    eq = Equation::B;
    order = std::max(a.n - 1, 0);
  }
  const TruncatedSeries g = solve_equation(eq, a.k, order);
  if (a.full) {
    out << "#";
    for (const auto& v : g.vars()) out << ' ' << v;
    out << '\n' << g.dump();
    return kOk;
  }
  if (eq == Equation::B) {
    auto terms = g.sequence_at_one();
    if (a.n == 0) terms.clear();
    print_sequence(out, a, terms, 1);
  } else {
    print_sequence(out, a, from_one(g.constant_term_sequence()), 1);
  }
  return kOk;
}

int cmd_generate(const Args& a, std::ostream& out) {
  require_n(a);
  const FamilySpec spec = spec_of(a);
  if (spec.family == Family::Permutation) {
    PermutationDiagramStream stream(a.k, a.n, a.closed_only);
    while (auto d = stream.next()) out << to_json(*d).dump() << '\n';
  } else if (spec.family == Family::Partition || spec.family == Family::PartitionEnhanced) {
    const NestingMode mode =
        spec.family == Family::Partition ? NestingMode::Plain : NestingMode::Enhanced;
    PartitionDiagramStream stream(a.k, mode, a.n, a.closed_only);
    while (auto d = stream.next()) out << to_json(*d).dump() << '\n';
  } else {
    throw InvalidInput("generate covers partitions, partitions-enhanced and permutations");
  }
  return kOk;
}

int cmd_oracle(const Args& a, std::ostream& out) {
  require_n(a);
  const FamilySpec spec = spec_of(a);
  std::vector<BigInt> terms;
  for (int n = 1; n <= a.n; ++n) terms.push_back(oracle_count(spec.family, a.k, n));
  print_sequence(out, a, terms, 1);
  return kOk;
}

int cmd_refdata(const Args& a, std::ostream& out) {
  const ReferenceSequence& seq =
      a.family == "baxter" ? baxter_reference() : lookup(spec_of(a));
  if (a.format == "json") {
    out << to_json(seq).dump() << '\n';
  } else {
    out << joined_terms(seq) << '\n';
  }
  return kOk;
}

int cmd_verify(const Args& a, std::ostream& out) {
  VerifyOptions options;
  if (a.max_n >= 0) options.max_n = a.max_n;
  options.max_labels = a.max_labels;
  const VerificationReport report = run_suite(*parse_suite(a.suite), options);
  if (a.format == "json") {
    out << to_json(report).dump(2) << '\n';
  } else {
    for (const auto& c : report.checks) {
      std::string status = to_string(c.status);
      std::transform(status.begin(), status.end(), status.begin(),
                     [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
      out << status << ' ' << c.id;
      if (c.status != CheckStatus::Pass) {
        out << "  expected=" << c.expected << " actual=" << c.actual;
        if (!c.detail.empty()) out << " (" << c.detail << ')';
      }
      out << '\n';
    }
    out << "overall: " << (report.passed() ? "pass" : "fail") << '\n';
  }
  return report.passed() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generating-tree enumeration of k-nonnesting partitions and permutations",
               "nestgen"};
  app.require_subcommand(1);
  Args a;

  const std::vector<std::string> counted{"partitions", "partitions-enhanced", "permutations",
                                         "open-partitions", "open-permutations"};
  const std::vector<std::string> objects{"partitions", "partitions-enhanced", "permutations"};
  const std::vector<std::string> formats{"plain", "json", "csv"};

  auto common = [&](CLI::App* sub, const std::vector<std::string>& families) {
    sub->add_option("--family", a.family)->required()->check(CLI::IsMember(families));
    sub->add_option("--k", a.k, "forbidden nesting size")->capture_default_str();
    sub->add_option("--format", a.format)->check(CLI::IsMember(formats))->capture_default_str();
  };

  auto* count = app.add_subcommand("count", "count objects by the generating tree");
  common(count, counted);
  count->add_option("--n", a.n)->required();
  count->add_flag("--all-labels", a.all_labels, "emit the full label distribution per level");
  count->add_option("--max-labels", a.max_labels, "label budget per level");

  auto* series = app.add_subcommand("series", "solve a functional equation");
  common(series, {"partitions", "partitions-enhanced", "permutations3", "baxter"});
  series->add_option("--n", a.n)->required();
  series->add_flag("--full", a.full, "dump the full multivariate truncation");

  auto* generate = app.add_subcommand("generate", "stream diagrams as JSON lines");
  common(generate, objects);
  generate->add_option("--n", a.n)->required();
  generate->add_flag("--closed-only", a.closed_only, "only diagrams without semi-arcs");

  auto* oracle = app.add_subcommand("oracle", "count by brute force");
  common(oracle, objects);
  oracle->add_option("--n", a.n)->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", a.suite)
      ->required()
      ->check(CLI::IsMember({"paper-tables", "cross-methods", "baxter", "egf", "formula", "all"}));
  verify->add_option("--max-n", a.max_n);
  verify->add_option("--format", a.format)->check(CLI::IsMember({"plain", "json"}));
  verify->add_option("--max-labels", a.max_labels);

  auto* refdata = app.add_subcommand("refdata", "print an embedded reference sequence");
  common(refdata, {"partitions", "partitions-enhanced", "permutations", "baxter"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (count->parsed()) return cmd_count(a, out);
    if (series->parsed()) return cmd_series(a, out);
    if (generate->parsed()) return cmd_generate(a, out);
    if (oracle->parsed()) return cmd_oracle(a, out);
    if (verify->parsed()) return cmd_verify(a, out);
    if (refdata->parsed()) return cmd_refdata(a, out);
  } catch (const ResourceExceeded& e) {
    err << "error: " << e.what() << " (last completed level " << e.level() << ")\n";
    return kResource;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotFound& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace nestgen::cli
