#pragma once

// Truncated multivariate power series with exact integer coefficients.
//
// Variable 0 is always the size variable z; the rest are catalytic
// variables. Each variable has a degree cap; terms beyond a cap are dropped.
// At most 8 variables, each exponent at most 255.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nestgen/bigint.hpp"

namespace nestgen {

using Exponents = std::vector<int>;

/// Image of one variable under a substitution.
struct VarImage {
  enum class Kind { Keep, Zero, One, Product };

  Kind kind = Kind::Keep;
  std::vector<std::string> factors;  ///< for Product: x -> x * y * ...

  static VarImage keep() { return {}; }
  static VarImage zero() { return {Kind::Zero, {}}; }
  static VarImage one() { return {Kind::One, {}}; }
  /// The variable itself times the named neighbours, e.g. u -> u*v.
  static VarImage times(std::vector<std::string> neighbours) {
    return {Kind::Product, std::move(neighbours)};
  }
};

/// Per-variable images; variables not listed are kept.
using Substitution = std::map<std::string, VarImage>;

class TruncatedSeries {
 public:
  static constexpr std::size_t kMaxVars = 8;
  static constexpr int kMaxExponent = 255;

  /// `vars[0]` is the size variable. Throws InvalidInput on bad shapes.
  TruncatedSeries(std::vector<std::string> vars, std::vector<int> caps);

  static TruncatedSeries constant(std::vector<std::string> vars, std::vector<int> caps,
                                  const BigInt& c);

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::vector<int>& caps() const noexcept { return caps_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t var_index(const std::string& name) const;

  BigInt coefficient(const Exponents& e) const;
  /// Adds c to the coefficient of x^e; silently drops e beyond the caps.
  void add_term(const Exponents& e, const BigInt& c);

  /// Sorted (exponents, coefficient) pairs, size variable most significant.
  std::vector<std::pair<Exponents, BigInt>> terms() const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    return a -= b;
  }
  bool operator==(const TruncatedSeries& other) const;

  /// Multiply by a monomial, truncating.
  TruncatedSeries shifted(const Exponents& e) const;
  /// Exact division by a monomial; throws DivisibilityError otherwise.
  TruncatedSeries divide_by_monomial(const Exponents& e) const;
  /// Exact division by (1 - x); throws DivisibilityError on a nonzero
  /// remainder, i.e. when the series does not vanish at x = 1.
  TruncatedSeries divide_by_one_minus(const std::string& var) const;

  /// Simultaneous substitution. Only catalytic variables may be substituted,
  /// and product images may only name catalytic variables.
  TruncatedSeries substitute(const Substitution& sub) const;

  /// Drops terms whose size exponent exceeds `max_order`.
  TruncatedSeries truncated(int max_order) const;

  /// [x^0 for all catalytic x] z^n, n = 0..cap(z).
  std::vector<BigInt> constant_term_sequence() const;
  /// Sum of all coefficients of z^n, i.e. every catalytic variable at 1.
  std::vector<BigInt> sequence_at_one() const;

  /// One "e0 e1 ...: coefficient" line per term, in sorted order.
  std::string dump() const;

 private:
  using Key = std::uint64_t;
  Key pack(const Exponents& e) const;
  Exponents unpack(Key key) const;
  bool within_caps(const Exponents& e) const;
  void check_compatible(const TruncatedSeries& other) const;

  std::vector<std::string> vars_;
  std::vector<int> caps_;
  std::map<Key, BigInt> terms_;
};

/// (f - g) / (1 - x): the finite geometric-sum identity used by the
/// functional equations. Remainder must vanish.
TruncatedSeries divided_difference_one_minus(const TruncatedSeries& f,
                                             const TruncatedSeries& g,
                                             const std::string& var);
/// (f - g) / x.
TruncatedSeries divided_difference_var(const TruncatedSeries& f,
                                       const TruncatedSeries& g,
                                       const std::string& var);

}  // namespace nestgen
