#include "waring/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>
#include <stdexcept>

namespace waring {

std::size_t SymbolicAtom::arity() const {
  switch (kind) {
  case AtomKind::Contraction: return 1;
  case AtomKind::BracketSSS: return 3;
  case AtomKind::BracketSSU: return 2;
  }
  return 0;
}

bool SymbolicAtom::mentions(std::uint8_t symbol) const {
  for (std::size_t i = 0; i < arity(); ++i)
    if (symbols[i] == symbol) return true;
  return false;
}

std::string SymbolicAtom::to_string() const {
  auto letter = [](std::uint8_t s) { return static_cast<char>('a' + s); };
  std::string out;
  switch (kind) {
  case AtomKind::Contraction: out = std::string(1, letter(symbols[0])) + "_x"; break;
  case AtomKind::BracketSSS: out = {'[', letter(symbols[0]), letter(symbols[1]), letter(symbols[2]), ']'}; break;
  case AtomKind::BracketSSU: out = {'[', letter(symbols[0]), letter(symbols[1]), 'u', ']'}; break;
  }
  if (exponent != 1) out += "^" + std::to_string(exponent);
  return out;
}

std::string Signature::to_string() const {
  return "(" + std::to_string(degree) + "," + std::to_string(order) + "," + std::to_string(klass) + ")";
}

SymbolicExpression::SymbolicExpression(std::vector<SymbolicAtom> atoms) {
  for (auto& a : atoms) {
    if (a.exponent == 0) throw std::invalid_argument("symbolic factor with exponent 0");
    for (std::size_t i = a.arity(); i < 3; ++i) a.symbols[i] = 0;
    for (std::size_t i = 0; i < a.arity(); ++i) {
      if (a.symbols[i] >= kMaxSymbols) throw std::invalid_argument("unknown umbral letter");
      for (std::size_t j = 0; j < i; ++j)
        if (a.symbols[i] == a.symbols[j]) throw std::invalid_argument("repeated symbol in bracket " + a.to_string());
    }
  }
  std::sort(atoms.begin(), atoms.end(), [](const SymbolicAtom& l, const SymbolicAtom& r) {
    return std::tie(l.kind, l.symbols) < std::tie(r.kind, r.symbols);
  });
  for (auto& a : atoms) {
    if (!atoms_.empty() && atoms_.back().same_base(a))
      atoms_.back().exponent += a.exponent;
    else
      atoms_.push_back(a);
  }
}

std::vector<std::uint8_t> SymbolicExpression::symbols() const {
  std::vector<std::uint8_t> out;
  for (const auto& a : atoms_)
    for (std::size_t i = 0; i < a.arity(); ++i) out.push_back(a.symbols[i]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

unsigned SymbolicExpression::symbol_degree(std::uint8_t symbol) const {
  unsigned d = 0;
  for (const auto& a : atoms_) d += a.degree_in(symbol);
  return d;
}

std::string SymbolicExpression::to_string() const {
  std::string out;
  for (const auto& a : atoms_) {
    if (!out.empty()) out += ' ';
    out += a.to_string();
  }
  return out;
}

SymbolicExpression SymbolicExpression::relabel(const std::array<std::uint8_t, 6>& perm) const {
  std::vector<SymbolicAtom> atoms = atoms_;
  for (auto& a : atoms)
    for (std::size_t i = 0; i < a.arity(); ++i) a.symbols[i] = perm.at(a.symbols[i]);
  return SymbolicExpression(std::move(atoms));
}

namespace {

class SymbolicParser {
public:
  explicit SymbolicParser(std::string_view text) : text_(text) {}

  SymbolicExpression parse() {
    std::vector<SymbolicAtom> atoms;
    skip_space();
    if (at_end()) throw ParseError("empty symbolic expression", pos_);
    atoms.push_back(factor());
    while (true) {
      const std::size_t before = pos_;
      skip_space();
      if (at_end()) break;
      if (peek() == '*') {
        ++pos_;
        skip_space();
      } else if (before == pos_) {
        throw ParseError("expected '*' or whitespace between factors", pos_);
      }
      atoms.push_back(factor());
    }
    return SymbolicExpression(std::move(atoms));
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::uint8_t letter() {
    const char c = peek();
    if (c < 'a' || c > 'z' || c == 'u' || c == 'x') throw ParseError("expected an umbral letter a..f", pos_);
    if (c > 'f') throw ParseError(std::string("unknown symbol letter '") + c + "'", pos_);
    ++pos_;
    return static_cast<std::uint8_t>(c - 'a');
  }

  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  SymbolicAtom factor() {
    SymbolicAtom atom;
    const std::size_t start = pos_;
    if (peek() == '[') {
      ++pos_;
      atom.symbols[0] = letter();
      atom.symbols[1] = letter();
      if (peek() == 'u') {
        ++pos_;
        atom.kind = AtomKind::BracketSSU;
      } else {
        atom.symbols[2] = letter();
        atom.kind = AtomKind::BracketSSS;
      }
      expect(']');
      for (std::size_t i = 0; i < atom.arity(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (atom.symbols[i] == atom.symbols[j]) throw ParseError("repeated symbol in bracket", start);
    } else {
      atom.symbols[0] = letter();
      expect('_');
      expect('x');
      atom.kind = AtomKind::Contraction;
    }
    if (peek() == '^') {
      ++pos_;
      const std::size_t digits = pos_;
      unsigned e = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + static_cast<unsigned>(peek() - '0');
        if (e > 64) throw ParseError("exponent too large", digits);
        ++pos_;
      }
      if (pos_ == digits) throw ParseError("expected exponent after '^'", pos_);
      if (e == 0) throw ParseError("exponent must be positive", digits);
      atom.exponent = e;
    }
    return atom;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Polynomial sym_var(std::uint8_t symbol, std::size_t i) { return Polynomial::variable(Variable::sym(symbol, i)); }

// det of the 3x3 matrix whose rows are given as polynomial triples.
Polynomial det3(const std::array<std::array<Polynomial, 3>, 3>& r) {
  return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
         r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
}

std::array<Polynomial, 3> symbol_row(std::uint8_t s) { return {sym_var(s, 0), sym_var(s, 1), sym_var(s, 2)}; }

} // namespace

SymbolicExpression parse_symbolic(std::string_view text) { return SymbolicParser(text).parse(); }

Signature signature(const SymbolicExpression& expr) {
  Signature sig;
  for (auto s : expr.symbols()) {
    const unsigned d = expr.symbol_degree(s);
    if (d != 4)
      throw std::invalid_argument(std::string("umbral letter ") + static_cast<char>('a' + s) + " has degree " +
                                  std::to_string(d) + ", expected 4");
    ++sig.degree;
  }
  for (const auto& a : expr.atoms()) {
    sig.order += a.x_degree();
    sig.klass += a.u_degree();
  }
  return sig;
}

Polynomial atom_polynomial(const SymbolicAtom& atom) {
  Polynomial base;
  switch (atom.kind) {
  case AtomKind::Contraction:
    for (std::size_t i = 0; i < 3; ++i) base += sym_var(atom.symbols[0], i) * Polynomial::variable(Variable::x(i));
    break;
  case AtomKind::BracketSSS:
    base = det3({symbol_row(atom.symbols[0]), symbol_row(atom.symbols[1]), symbol_row(atom.symbols[2])});
    break;
  case AtomKind::BracketSSU:
    base = det3({symbol_row(atom.symbols[0]), symbol_row(atom.symbols[1]),
                 std::array<Polynomial, 3>{Polynomial::variable(Variable::u(0)), Polynomial::variable(Variable::u(1)),
                                           Polynomial::variable(Variable::u(2))}});
    break;
  }
  return base.pow(atom.exponent);
}

Polynomial expand(const SymbolicExpression& expr) {
  Polynomial result(1);
  for (const auto& a : expr.atoms()) result *= atom_polynomial(a);
  return result;
}

} // namespace waring
