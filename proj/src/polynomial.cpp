#include "waring/polynomial.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace waring {

Monomial Monomial::of(Variable v, unsigned exponent) {
  Monomial m;
  m.set(v.slot(), exponent);
  return m;
}

void Monomial::set(std::size_t slot, unsigned exponent) {
  if (slot >= kNumVariables) throw std::out_of_range("monomial slot out of range");
  if (exponent > 255) throw std::overflow_error("monomial exponent exceeds 255");
  exps_[slot] = static_cast<std::uint8_t>(exponent);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  unsigned overflow = 0;
  for (std::size_t i = 0; i < kNumVariables; ++i) {
    const unsigned s = unsigned{exps_[i]} + unsigned{other.exps_[i]};
    overflow |= s;
    r.exps_[i] = static_cast<std::uint8_t>(s);
  }
  if (overflow > 255) throw std::overflow_error("monomial exponent exceeds 255");
  return r;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (std::size_t i = 0; i < kNumVariables; ++i) d += exps_[i];
  return d;
}

unsigned Monomial::degree(VarClass cls) const {
  std::size_t lo = 0, hi = 0;
  switch (cls) {
  case VarClass::a: lo = kSlotA, hi = kSlotX; break;
  case VarClass::x: lo = kSlotX, hi = kSlotU; break;
  case VarClass::u: lo = kSlotU, hi = kSlotY; break;
  case VarClass::y: lo = kSlotY, hi = kSlotSym; break;
  case VarClass::sym: lo = kSlotSym, hi = kNumVariables; break;
  }
  unsigned d = 0;
  for (std::size_t i = lo; i < hi; ++i) d += exps_[i];
  return d;
}

bool Monomial::is_one() const { return *this == Monomial{}; }

std::size_t Monomial::hash() const {
  std::array<std::uint64_t, kWidth / 8> words{};
  std::memcpy(words.data(), exps_.data(), kWidth);
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : words) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < kNumVariables; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += Variable::from_slot(i).name();
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

std::vector<Term> drain(Accumulator& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(), [](const Term& l, const Term& r) { return l.mono > r.mono; });
  return out;
}

} // namespace

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.push_back({Monomial{}, constant});
}

Polynomial Polynomial::variable(Variable v) { return monomial(Monomial::of(v), 1); }

Polynomial Polynomial::monomial(const Monomial& m, const Rational& coef) {
  Polynomial p;
  if (coef != 0) p.terms_.push_back({m, coef});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  Accumulator acc;
  for (auto& t : terms) acc[t.mono] += t.coef;
  Polynomial p;
  p.terms_ = drain(acc);
  return p;
}

Polynomial Polynomial::from_canonical(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& k) { return t.mono > k; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end() || (i != terms_.end() && i->mono > j->mono)) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->mono > i->mono) {
      merged.push_back(*j++);
    } else {
      Rational c = i->coef + j->coef;
      if (c != 0) merged.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  Accumulator acc;
  acc.reserve(p.size() * q.size());
  for (const auto& s : p.terms_)
    for (const auto& t : q.terms_) acc[s.mono * t.mono] += s.coef * t.coef;
  Polynomial r;
  r.terms_ = drain(acc);
  return r;
}

Polynomial multiply_transform(const Polynomial& p, const Polynomial& q, const TermTransform& transform) {
  Accumulator acc;
  Rational c;
  for (const auto& s : p.terms())
    for (const auto& t : q.terms()) {
      Monomial m = s.mono * t.mono;
      c = s.coef * t.coef;
      if (transform(m, c)) acc[m] += c;
    }
  return Polynomial::from_canonical(drain(acc));
}

Polynomial map_terms(const Polynomial& p, const TermTransform& transform) {
  Accumulator acc;
  for (const auto& t : p.terms()) {
    Term u = t;
    if (transform(u.mono, u.coef)) acc[u.mono] += u.coef;
  }
  return Polynomial::from_canonical(drain(acc));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::map<Variable, Polynomial>& bindings) const {
  // Powers of each bound variable are memoized across terms.
  std::map<std::pair<std::size_t, unsigned>, Polynomial> powers;
  auto power_of = [&](std::size_t slot, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(slot, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, bindings.at(Variable::from_slot(slot)).pow(e)).first;
    return it->second;
  };
  std::vector<std::pair<std::size_t, bool>> bound(kNumVariables);
  for (std::size_t s = 0; s < kNumVariables; ++s) bound[s] = {s, bindings.count(Variable::from_slot(s)) > 0};

  Polynomial result;
  for (const auto& t : terms_) {
    Monomial kept;
    Polynomial factor(t.coef);
    for (std::size_t s = 0; s < kNumVariables; ++s) {
      const unsigned e = t.mono[s];
      if (e == 0) continue;
      if (bound[s].second)
        factor *= power_of(s, e);
      else
        kept.set(s, e);
    }
    result += factor * Polynomial::monomial(kept, 1);
  }
  return result;
}

Rational Polynomial::evaluate(const std::map<Variable, Rational>& values) const {
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t s = 0; s < kNumVariables; ++s) {
      const unsigned e = t.mono[s];
      if (e == 0) continue;
      auto it = values.find(Variable::from_slot(s));
      if (it == values.end())
        throw std::invalid_argument("evaluate: variable " + Variable::from_slot(s).name() + " is unbound");
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
      v *= pw;
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::derivative(Variable v) const {
  const std::size_t s = v.slot();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const unsigned e = t.mono[s];
    if (e == 0) continue;
    Term d{t.mono, t.coef * e};
    d.mono.set(s, e - 1);
    out.push_back(std::move(d));
  }
  return from_terms(std::move(out));
}

unsigned Polynomial::max_degree(VarClass cls) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree(cls));
  return d;
}

unsigned Polynomial::min_degree(VarClass cls) const {
  if (terms_.empty()) return 0;
  unsigned d = ~0U;
  for (const auto& t : terms_) d = std::min(d, t.mono.degree(cls));
  return d;
}

bool Polynomial::is_homogeneous(VarClass cls, unsigned degree) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.degree(cls) == degree; });
}

bool Polynomial::uses_only(std::initializer_list<VarClass> classes) const {
  for (VarClass c : {VarClass::a, VarClass::x, VarClass::u, VarClass::y, VarClass::sym}) {
    if (std::find(classes.begin(), classes.end(), c) != classes.end()) continue;
    if (max_degree(c) > 0) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    const bool unit = c == 1;
    if (t.mono.is_one()) {
      out << c.get_str();
    } else {
      if (!unit) out << c.get_str() << "*";
      out << t.mono.to_string();
    }
    first = false;
  }
  return out.str();
}

} // namespace waring
