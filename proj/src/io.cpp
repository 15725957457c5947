#include "waring/io.hpp"

#include "waring/errors.hpp"

#include <cctype>
#include <iomanip>
#include <set>
#include <sstream>

namespace waring {

namespace {

class PolynomialParser {
public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
    return p;
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool starts_primary() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == '(';
  }

  Polynomial expr() {
    Polynomial p = term();
    while (true) {
      skip_space();
      if (peek() == '+') {
        ++pos_;
        p += term();
      } else if (peek() == '-') {
        ++pos_;
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = unary();
    while (true) {
      skip_space();
      if (peek() == '*') {
        ++pos_;
        p *= unary();
      } else if (peek() == '/') {
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        const Polynomial d = unary();
        if (!d.is_constant()) throw ParseError("division by a non-constant", at);
        if (d.is_zero()) throw ParseError("division by zero", at);
        p *= Rational(1 / d.constant_term());
      } else if (starts_primary()) {
        p *= unary();
      } else {
        return p;
      }
    }
  }

  Polynomial unary() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::size_t at = pos_;
    unsigned e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + static_cast<unsigned>(peek() - '0');
      if (e > 64) throw ParseError("exponent too large", at);
      ++pos_;
    }
    if (pos_ == at) throw ParseError("expected a nonnegative integer exponent", at);
    return base.pow(e);
  }

  Polynomial primary() {
    skip_space();
    const std::size_t at = pos_;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return Polynomial(Rational(Integer(std::string(text_.substr(at, pos_ - at)), 10)));
    }
    if (peek() == 'x') {
      ++pos_;
      const char d = peek();
      if (d < '0' || d > '2') throw ParseError("expected variable x0, x1 or x2", at);
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected variable x0, x1 or x2", at);
      return Polynomial::variable(Variable::x(static_cast<std::size_t>(d - '0')));
    }
    if (peek() == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_space();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (at_end()) throw ParseError("unexpected end of expression", pos_);
    throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string fixed(double v, int digits) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

} // namespace

Polynomial parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

TernaryQuartic parse_quartic_text(std::string_view text) {
  const Polynomial p = parse_polynomial(text);
  if (!p.is_homogeneous(VarClass::x, 4)) {
    std::string degrees;
    std::set<unsigned> seen;
    for (const auto& t : p.terms()) seen.insert(t.mono.degree(VarClass::x));
    for (auto d : seen) degrees += (degrees.empty() ? "" : ",") + std::to_string(d);
    throw ParseError("not a homogeneous quartic (term degrees " + degrees + ")", 0);
  }
  return TernaryQuartic::from_polynomial(p);
}

TernaryQuartic parse_quartic_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("structured quartic must be a JSON object", 0);
  TernaryQuartic f;
  std::set<MultiIndex> seen;
  for (const auto& [key, value] : doc.items()) {
    MultiIndex idx;
    try {
      idx = parse_multi_index(key);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0);
    }
    if (idx.degree() != 4) throw ParseError("index " + key + " does not have total degree 4", 0);
    if (!seen.insert(idx).second) throw ParseError("index " + key + " given twice", 0);
    Rational c;
    if (value.is_string()) {
      try {
        c = parse_rational(value.get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
      }
    } else if (value.is_number_integer()) {
      c = Rational(Integer(value.dump(), 10));
    } else {
      throw ParseError("coefficient of " + key + " must be a \"p/q\" string or an integer", 0);
    }
    f.set_coeff(idx, c);
  }
  return f;
}

TernaryQuartic parse_quartic(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    return parse_quartic_json(doc);
  }
  return parse_quartic_text(text);
}

nlohmann::json quartic_to_json(const TernaryQuartic& f) {
  nlohmann::json out = nlohmann::json::object();
  const auto idx = monomials_of_degree(4);
  for (std::size_t i = 0; i < idx.size(); ++i) out[idx[i].to_string()] = to_string(f.coeff(i));
  return out;
}

nlohmann::json report_to_json(const TernaryQuartic& f, const ClassificationReport& report, double elapsed_ms) {
  nlohmann::json out;
  out["schema"] = kReportSchema;
  out["input"] = {{"text", f.to_string()}, {"coefficients", quartic_to_json(f)}};
  out["border_rank"] = report.border_rank;
  out["vanishing"] = report.vanishing;
  out["rank_profile"] = {{"alpha1", report.rank_profile.rank(1)},
                         {"alpha2", report.rank_profile.rank(2)},
                         {"alpha3", report.rank_profile.rank(3)}};
  out["in_W2_open"] = report.in_W2_open ? nlohmann::json(*report.in_W2_open) : nlohmann::json(nullptr);
  out["elapsed_ms"] = elapsed_ms;
  return out;
}

std::string report_to_table(const TernaryQuartic& f, const ClassificationReport& report, double elapsed_ms) {
  std::ostringstream out;
  out << "input        : " << f.to_string() << "\n";
  out << "border rank  : " << report.border_rank << "\n";
  out << "vanishing    :";
  for (const auto& [name, v] : report.vanishing) out << " " << name << (v ? "=0" : "!=0");
  out << "\n";
  out << "rank alpha_k : " << report.rank_profile.rank(1) << " " << report.rank_profile.rank(2) << " "
      << report.rank_profile.rank(3) << "  (k = 1, 2, 3)\n";
  if (report.in_W2_open) out << "in W2 open   : " << (*report.in_W2_open ? "yes" : "no") << "\n";
  out << "elapsed      : " << fixed(elapsed_ms, 2) << " ms\n";
  return out.str();
}

nlohmann::json form_to_json(std::string_view name, const ConcomitantForm& form) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : form.value.terms()) terms.push_back({{"monomial", t.mono.to_string()}, {"coefficient", to_string(t.coef)}});
  return {{"name", name},
          {"signature", {form.signature.degree, form.signature.order, form.signature.klass}},
          {"generic", form.generic},
          {"zero", form.value.is_zero()},
          {"terms", terms}};
}

nlohmann::json catalecticant_to_json(const CatalecticantMatrix& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < c.entries.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t s = 0; s < c.entries.cols(); ++s) row.push_back(to_string(c.entries(r, s)));
    rows.push_back(row);
  }
  nlohmann::json row_idx = nlohmann::json::array(), col_idx = nlohmann::json::array();
  for (const auto& m : c.row_indices()) row_idx.push_back(m.to_string());
  for (const auto& m : c.col_indices()) col_idx.push_back(m.to_string());
  nlohmann::json out{{"k", c.k}, {"rows", row_idx}, {"cols", col_idx}, {"matrix", rows}, {"rank", rank(c.entries)}};
  if (c.entries.rows() == c.entries.cols()) out["det"] = to_string(determinant(c.entries));
  return out;
}

nlohmann::json power_sum_to_json(const PowerSumSample& sample) {
  nlohmann::json forms = nlohmann::json::array();
  for (const auto& l : sample.summands)
    forms.push_back({to_string(l[0]), to_string(l[1]), to_string(l[2])});
  return {{"text", sample.form.to_string()}, {"coefficients", quartic_to_json(sample.form)}, {"summands", forms}};
}

} // namespace waring
