#include "nestgen/equations.hpp"

#include <functional>
#include <initializer_list>
#include <utility>

#include "nestgen/errors.hpp"

namespace nestgen {

namespace {

class Solver {
 public:
  Solver(std::vector<std::string> vars, int N, SolveStats* stats)
      : vars_(std::move(vars)), stats_(stats) {
    caps_.assign(vars_.size(), 2 * N + 2);
    caps_[0] = N;
  }

  TruncatedSeries one() const { return TruncatedSeries::constant(vars_, caps_, 1); }

  Exponents mono(std::initializer_list<std::string> names) const {
    Exponents e(vars_.size(), 0);
    for (const auto& n : names) ++e[index(n)];
    return e;
  }

  TruncatedSeries times(const TruncatedSeries& f,
                        std::initializer_list<std::string> names) const {
    return f.shifted(mono(names));
  }

  TruncatedSeries over(const TruncatedSeries& f, const Exponents& e) {
    count();
    return f.divide_by_monomial(e);
  }

  TruncatedSeries over_one_minus(const TruncatedSeries& f, const std::string& var) {
    count();
    return f.divide_by_one_minus(var);
  }

  TruncatedSeries run(int N, const std::function<TruncatedSeries(const TruncatedSeries&)>& phi) {
    TruncatedSeries g = one();
    const Exponents z = mono({vars_[0]});
    for (int m = 0; m < N; ++m) {
      g = one() + phi(g).shifted(z).truncated(m + 1);
      if (stats_) ++stats_->iterations;
    }
    if (stats_) stats_->final_terms = g.num_terms();
    return g;
  }

  const std::vector<std::string>& vars() const { return vars_; }

 private:
  std::size_t index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) return i;
    }
    throw InvalidInput("unknown variable " + name);
  }
  void count() {
    if (stats_) ++stats_->exact_divisions;
  }

  std::vector<std::string> vars_;
  std::vector<int> caps_;
  SolveStats* stats_;
};

const VarImage kZero = VarImage::zero();
const VarImage kOne = VarImage::one();

TruncatedSeries solve_a(int N, SolveStats* stats) {
  Solver s({"z", "u", "v"}, N, stats);
  return s.run(N, [&](const TruncatedSeries& g) {
    TruncatedSeries x =
        s.over_one_minus(g - g.substitute({{"u", VarImage::times({"v"})}, {"v", kOne}}), "v") +
        s.over(g - g.substitute({{"v", kZero}}), s.mono({"v"}));
    return g + s.times(g, {"u"}) + x + s.over(x, s.mono({"u"}));
  });
}

std::vector<std::string> catalytic_names(int L) {
  std::vector<std::string> vars{"z"};
  for (int i = 0; i < L; ++i) vars.push_back("v" + std::to_string(i));
  return vars;
}

// v0 v1 ... v{j-1}
Exponents prefix_monomial(std::size_t nvars, int j) {
  Exponents e(nvars, 0);
  for (int i = 0; i < j; ++i) e[static_cast<std::size_t>(i) + 1] = 1;
  return e;
}

Substitution collapse(int j) {
  const std::string prev = "v" + std::to_string(j - 1);
  const std::string cur = "v" + std::to_string(j);
  return {{prev, VarImage::times({cur})}, {cur, kOne}};
}

TruncatedSeries solve_q(int k, int N, SolveStats* stats) {
  const int L = k - 1;
  Solver s(catalytic_names(L), N, stats);
  const std::size_t nv = s.vars().size();
  const std::string last = "v" + std::to_string(L - 1);
  return s.run(N, [&](const TruncatedSeries& g) {
    TruncatedSeries inner = g + s.over(g - g.substitute({{last, kZero}}), prefix_monomial(nv, L));
    for (int j = 1; j < L; ++j) {
      TruncatedSeries t = s.over_one_minus(g - g.substitute(collapse(j)), "v" + std::to_string(j));
      inner += s.over(t, prefix_monomial(nv, j));
    }
    return inner + s.times(inner, {"v0"});
  });
}

TruncatedSeries solve_p(int k, int N, SolveStats* stats) {
  const int L = k - 1;
  Solver s(catalytic_names(L), N, stats);
  const std::size_t nv = s.vars().size();
  const std::string last = "v" + std::to_string(L - 1);
  if (L == 1) {
    // A fixed point is only possible with no semi-arc open.
    return s.run(N, [&](const TruncatedSeries& g) {
      TruncatedSeries g0 = g.substitute({{"v0", kZero}});
      TruncatedSeries closing = s.over(g - g0, s.mono({"v0"}));
      return s.times(g, {"v0"}) + g0 + closing + s.times(closing, {"v0"});
    });
  }
  return s.run(N, [&](const TruncatedSeries& g) {
    TruncatedSeries rest = s.over(g - g.substitute({{last, kZero}}), prefix_monomial(nv, L));
    for (int j = 2; j < L; ++j) {
      TruncatedSeries t = s.over_one_minus(g - g.substitute(collapse(j)), "v" + std::to_string(j));
      rest += s.over(t, prefix_monomial(nv, j));
    }
    TruncatedSeries out = s.times(g, {"v0"}) + rest + s.times(rest, {"v0"});
    TruncatedSeries c = g.substitute(collapse(1));
    TruncatedSeries num = g + s.times(g, {"v0"}) - c - s.times(c, {"v0", "v1"});
    return out + s.over(s.over_one_minus(num, "v1"), s.mono({"v0"}));
  });
}

TruncatedSeries solve_b(int N, SolveStats* stats) {
  Solver s({"z", "u", "v"}, N, stats);
  return s.run(N, [&](const TruncatedSeries& g) {
    TruncatedSeries guv = g.substitute({{"u", VarImage::times({"v"})}, {"v", kOne}});
    TruncatedSeries gu0 = g.substitute({{"v", kZero}});
    return s.times(g, {"u"}) + s.over_one_minus(g - s.times(guv, {"v"}), "v") +
           s.over(g - gu0, s.mono({"v"})) +
           s.over(s.over_one_minus(g - guv, "v"), s.mono({"u"})) +
           s.over(g - gu0, s.mono({"u", "v"}));
  });
}

TruncatedSeries solve_f(int N, const SolveOptions& options, SolveStats* stats) {
  Solver s({"z", "u", "v", "w"}, N, stats);
  const VarImage uv = VarImage::times({"v"});
  const VarImage uw = VarImage::times({"w"});
  return s.run(N, [&](const TruncatedSeries& g) {
    const TruncatedSeries g_uv_1_w = g.substitute({{"u", uv}, {"v", kOne}});
    const TruncatedSeries g_uw_v_1 = g.substitute({{"u", uw}, {"w", kOne}});
    const TruncatedSeries g_u_0_w = g.substitute({{"v", kZero}});
    const TruncatedSeries g_u_v_0 = g.substitute({{"w", kZero}});
    const TruncatedSeries g_uvw_1_1 =
        g.substitute({{"u", VarImage::times({"v", "w"})}, {"v", kOne}, {"w", kOne}});
    const TruncatedSeries g_uw_0_1 = g.substitute({{"u", uw}, {"v", kZero}, {"w", kOne}});
    const TruncatedSeries g_uv_1_0 = g.substitute({{"u", uv}, {"v", kOne}, {"w", kZero}});
    const TruncatedSeries g_u_0_0 = g.substitute({{"v", kZero}, {"w", kZero}});

    TruncatedSeries out = s.times(g, {"u"});
    out += s.over_one_minus(g - s.times(g_uv_1_w, {"v"}), "v");
    out += s.over(g - g_u_0_w, s.mono({"v"}));
    out += s.over_one_minus(g - g_uw_v_1, "w");
    out += s.over(g - g_u_v_0, s.mono({"w"}));

    const TruncatedSeries first =
        options.uw_closer_variant ? g.substitute({{"u", uw}, {"v", kOne}}) : g_uv_1_w;
    TruncatedSeries t1 = g - first - g_uw_v_1 + g_uvw_1_1;
    out += s.over(s.over_one_minus(s.over_one_minus(t1, "v"), "w"), s.mono({"u"}));
    TruncatedSeries t2 = g - g_u_0_w - g_uw_v_1 + g_uw_0_1;
    out += s.over(s.over_one_minus(t2, "w"), s.mono({"u", "v"}));
    TruncatedSeries t3 = g - g_u_v_0 - g_uv_1_w + g_uv_1_0;
    out += s.over(s.over_one_minus(t3, "v"), s.mono({"u", "w"}));
    TruncatedSeries t4 = g - g_u_0_w - g_u_v_0 + g_u_0_0;
    out += s.over(t4, s.mono({"u", "v", "w"}));
    return out;
  });
}

}  // namespace

std::string to_string(Equation eq) {
  switch (eq) {
    case Equation::A: return "A";
    case Equation::Q: return "Q";
    case Equation::P: return "P";
    case Equation::F: return "F";
    case Equation::B: return "B";
  }
  return "?";
}

TruncatedSeries solve_equation(Equation eq, int k, int N, const SolveOptions& options,
                               SolveStats* stats) {
  if (N < 0 || N > kMaxSeriesOrder) {
    throw InvalidInput("series order must be in 0.." + std::to_string(kMaxSeriesOrder));
  }
  if ((eq == Equation::Q || eq == Equation::P) && (k < 2 || k > 8)) {
    throw InvalidInput("k must be in 2..8 for Q and P");
  }
  switch (eq) {
    case Equation::A: return solve_a(N, stats);
    case Equation::Q: return solve_q(k, N, stats);
    case Equation::P: return solve_p(k, N, stats);
    case Equation::F: return solve_f(N, options, stats);
    case Equation::B: return solve_b(N, stats);
  }
  throw InvalidInput("unknown equation");
}

std::vector<BigInt> equation_counts(Equation eq, int k, int N) {
  TruncatedSeries g = solve_equation(eq, k, N);
  return eq == Equation::B ? g.sequence_at_one() : g.constant_term_sequence();
}

}  // namespace nestgen
