#include "nestgen/series.hpp"

#include <algorithm>
#include <set>

#include "nestgen/errors.hpp"

namespace nestgen {

namespace {

constexpr int kShiftBits = 8;

int shift_of(std::size_t i) {
  return static_cast<int>((TruncatedSeries::kMaxVars - 1 - i) * kShiftBits);
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<std::string> vars, std::vector<int> caps)
    : vars_(std::move(vars)), caps_(std::move(caps)) {
  if (vars_.empty() || vars_.size() > kMaxVars) {
    throw InvalidInput("a series needs between 1 and 8 variables");
  }
  if (caps_.size() != vars_.size()) throw InvalidInput("one cap per variable");
  for (int c : caps_) {
    if (c < 0 || c > kMaxExponent) throw InvalidInput("cap out of range 0..255");
  }
  std::set<std::string> names(vars_.begin(), vars_.end());
  if (names.size() != vars_.size()) throw InvalidInput("duplicate variable name");
}

TruncatedSeries TruncatedSeries::constant(std::vector<std::string> vars,
                                          std::vector<int> caps, const BigInt& c) {
  TruncatedSeries s(std::move(vars), std::move(caps));
  s.add_term(Exponents(s.vars_.size(), 0), c);
  return s;
}

std::size_t TruncatedSeries::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw InvalidInput("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

TruncatedSeries::Key TruncatedSeries::pack(const Exponents& e) const {
  Key key = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    key |= static_cast<Key>(e[i]) << shift_of(i);
  }
  return key;
}

Exponents TruncatedSeries::unpack(Key key) const {
  Exponents e(vars_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = static_cast<int>((key >> shift_of(i)) & 0xffu);
  }
  return e;
}

bool TruncatedSeries::within_caps(const Exponents& e) const {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) throw InvalidInput("negative exponent");
    if (e[i] > caps_[i]) return false;
  }
  return true;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& other) const {
  if (vars_ != other.vars_ || caps_ != other.caps_) {
    throw InvalidInput("series over different variables or caps");
  }
}

BigInt TruncatedSeries::coefficient(const Exponents& e) const {
  if (e.size() != vars_.size()) throw InvalidInput("exponent vector length mismatch");
  if (!within_caps(e)) return 0;
  auto it = terms_.find(pack(e));
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TruncatedSeries::add_term(const Exponents& e, const BigInt& c) {
  if (e.size() != vars_.size()) throw InvalidInput("exponent vector length mismatch");
  if (c == 0 || !within_caps(e)) return;
  auto [it, inserted] = terms_.try_emplace(pack(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<std::pair<Exponents, BigInt>> TruncatedSeries::terms() const {
  std::vector<std::pair<Exponents, BigInt>> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.emplace_back(unpack(key), c);
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  check_compatible(other);
  for (const auto& [key, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  check_compatible(other);
  for (const auto& [key, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
  return vars_ == other.vars_ && caps_ == other.caps_ && terms_ == other.terms_;
}

TruncatedSeries TruncatedSeries::shifted(const Exponents& e) const {
  TruncatedSeries out(vars_, caps_);
  for (const auto& [key, c] : terms_) {
    Exponents x = unpack(key);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += e.at(i);
    out.add_term(x, c);
  }
  return out;
}

TruncatedSeries TruncatedSeries::divide_by_monomial(const Exponents& e) const {
  if (e.size() != vars_.size()) throw InvalidInput("exponent vector length mismatch");
  TruncatedSeries out(vars_, caps_);
  for (const auto& [key, c] : terms_) {
    Exponents x = unpack(key);
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] -= e[i];
      if (x[i] < 0) {
        throw DivisibilityError("term not divisible by " + vars_[i] + "^" +
                                std::to_string(e[i]));
      }
    }
    out.terms_.emplace(pack(x), c);
  }
  return out;
}

TruncatedSeries TruncatedSeries::divide_by_one_minus(const std::string& var) const {
  const std::size_t v = var_index(var);
  if (v == 0) throw InvalidInput("cannot divide by (1 - size variable)");
  const Key mask = ~(static_cast<Key>(0xffu) << shift_of(v));

  // Column by column in `var`: q_e = sum_{e' <= e} p_{e'}.
  std::map<Key, std::map<int, BigInt>> columns;
  for (const auto& [key, c] : terms_) {
    const int e = static_cast<int>((key >> shift_of(v)) & 0xffu);
    columns[key & mask].emplace(e, c);
  }

  TruncatedSeries out(vars_, caps_);
  for (const auto& [rest, column] : columns) {
    BigInt running = 0;
    for (auto it = column.begin(); it != column.end(); ++it) {
      running += it->second;
      auto nxt = std::next(it);
      if (nxt == column.end()) break;
      if (running == 0) continue;
      for (int e = it->first; e < nxt->first; ++e) {
        out.terms_.emplace(rest | (static_cast<Key>(e) << shift_of(v)), running);
      }
    }
    if (running != 0) {
      Exponents x = unpack(rest);
      std::string where;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (i != v && x[i]) where += " " + vars_[i] + "^" + std::to_string(x[i]);
      }
      throw DivisibilityError("division by (1 - " + var +
                              ") leaves remainder at" + (where.empty() ? " 1" : where));
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::substitute(const Substitution& sub) const {
  const std::size_t nv = vars_.size();
  std::vector<VarImage::Kind> kind(nv, VarImage::Kind::Keep);
  std::vector<std::vector<std::size_t>> factors(nv);
  for (const auto& [name, image] : sub) {
    const std::size_t i = var_index(name);
    if (i == 0 && image.kind != VarImage::Kind::Keep) {
      throw InvalidInput("the size variable cannot be substituted");
    }
    kind[i] = image.kind;
    if (image.kind == VarImage::Kind::Product) {
      if (image.factors.empty()) throw InvalidInput("empty product substitution");
      for (const auto& f : image.factors) {
        const std::size_t j = var_index(f);
        if (j == 0 || j == i) {
          throw InvalidInput("unsupported substitution " + name + " -> " + name + "*" + f);
        }
        factors[i].push_back(j);
      }
    } else if (!image.factors.empty()) {
      throw InvalidInput("factors given for a non-product substitution");
    }
  }

  TruncatedSeries out(vars_, caps_);
  for (const auto& [key, c] : terms_) {
    const Exponents x = unpack(key);
    Exponents y(nv, 0);
    bool vanishes = false;
    for (std::size_t i = 0; i < nv && !vanishes; ++i) {
      switch (kind[i]) {
        case VarImage::Kind::Keep:
          y[i] += x[i];
          break;
        case VarImage::Kind::Zero:
          vanishes = x[i] > 0;
          break;
        case VarImage::Kind::One:
          break;
        case VarImage::Kind::Product:
          y[i] += x[i];
          for (std::size_t j : factors[i]) y[j] += x[i];
          break;
      }
    }
    if (!vanishes) out.add_term(y, c);
  }
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int max_order) const {
  TruncatedSeries out(vars_, caps_);
  for (const auto& [key, c] : terms_) {
    if (static_cast<int>(key >> shift_of(0)) <= max_order) out.terms_.emplace(key, c);
  }
  return out;
}

std::vector<BigInt> TruncatedSeries::constant_term_sequence() const {
  std::vector<BigInt> out(static_cast<std::size_t>(caps_[0]) + 1, 0);
  const Key catalytic = (static_cast<Key>(1) << shift_of(0)) - 1;
  for (const auto& [key, c] : terms_) {
    if ((key & catalytic) == 0) out[key >> shift_of(0)] = c;
  }
  return out;
}

std::vector<BigInt> TruncatedSeries::sequence_at_one() const {
  std::vector<BigInt> out(static_cast<std::size_t>(caps_[0]) + 1, 0);
  for (const auto& [key, c] : terms_) out[key >> shift_of(0)] += c;
  return out;
}

std::string TruncatedSeries::dump() const {
  std::string out;
  for (const auto& [key, c] : terms_) {
    const Exponents x = unpack(key);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(x[i]);
    }
    out += ": " + to_decimal(c) + "\n";
  }
  return out;
}

TruncatedSeries divided_difference_one_minus(const TruncatedSeries& f,
                                             const TruncatedSeries& g,
                                             const std::string& var) {
  return (f - g).divide_by_one_minus(var);
}

TruncatedSeries divided_difference_var(const TruncatedSeries& f,
                                       const TruncatedSeries& g,
                                       const std::string& var) {
  TruncatedSeries diff = f - g;
  Exponents e(diff.vars().size(), 0);
  e[diff.var_index(var)] = 1;
  return diff.divide_by_monomial(e);
}

}  // namespace nestgen
