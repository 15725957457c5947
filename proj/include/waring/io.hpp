#ifndef WARING_IO_HPP
#define WARING_IO_HPP

#include "waring/apolarity.hpp"
#include "waring/classifier.hpp"
#include "waring/generators.hpp"
#include "waring/quartic.hpp"
#include "waring/umbral.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace waring {

/// Parses a polynomial expression in x0, x1, x2:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary | unary)*     juxtaposition multiplies
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := integer | 'x0' | 'x1' | 'x2' | '(' expr ')'
/// Division is only by nonzero constants, so "3/4*x0^4" and "x0^4/2" work.
/// Throws ParseError.
Polynomial parse_polynomial(std::string_view text);

/// parse_polynomial followed by the homogeneous-quartic check; terms of any
/// other degree are a ParseError, never dropped.
TernaryQuartic parse_quartic_text(std::string_view text);

/// Structured form: {"(i0,i1,i2)": "p/q", ...}. Missing indices are zero;
/// values may be strings or JSON integers. Throws ParseError.
TernaryQuartic parse_quartic_json(const nlohmann::json& doc);

/// Text beginning with '{' is read as the structured form, anything else as
/// a polynomial expression.
TernaryQuartic parse_quartic(std::string_view text);

/// {"(4,0,0)": "1", ...} with all 15 indices and exact "p/q" strings.
nlohmann::json quartic_to_json(const TernaryQuartic& f);

inline constexpr std::string_view kReportSchema = "waring-report/1";

nlohmann::json report_to_json(const TernaryQuartic& f, const ClassificationReport& report, double elapsed_ms);
std::string report_to_table(const TernaryQuartic& f, const ClassificationReport& report, double elapsed_ms);

nlohmann::json form_to_json(std::string_view name, const ConcomitantForm& form);
nlohmann::json catalecticant_to_json(const CatalecticantMatrix& c);
nlohmann::json power_sum_to_json(const PowerSumSample& sample);

} // namespace waring

#endif
