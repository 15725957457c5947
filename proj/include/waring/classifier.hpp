#ifndef WARING_CLASSIFIER_HPP
#define WARING_CLASSIFIER_HPP

#include "waring/apolarity.hpp"
#include "waring/catalog.hpp"
#include "waring/quartic.hpp"
#include "waring/umbral.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace waring {

/// Ratios in the combined elements of U4 and U5:
///   P_5_0_4_I - kU4Ratio * P_5_0_4_II   and   kU5Ratio * P_6_0_0 - P_3_0_0^2.
/// They depend on normalization conventions and are re-derived from sample
/// forms by derive_combination in the test suites.
inline constexpr long kU4Ratio = 3;
inline constexpr long kU5Ratio = 3;

/// scalar * product of catalog entries.
struct ConcomitantTerm {
  Rational scalar;
  std::vector<std::string_view> factors;
};

/// A linear combination of products of catalog entries with one common
/// signature, e.g. 3 P_6_0_0 - P_3_0_0^2.
struct CombinedConcomitant {
  std::string label;
  std::vector<ConcomitantTerm> terms;

  static CombinedConcomitant single(std::string_view name);
  Signature signature() const;
};

enum class ListName { U1, U2, U3, U4, U5, V };

std::string_view to_string(ListName name);

struct VanishingList {
  ListName name;
  std::vector<CombinedConcomitant> elements;
};

const VanishingList& vanishing_list(ListName name);

/// The U list whose vanishing characterizes W_s; s in 1..5.
const VanishingList& membership_list(int s);

/// Evaluates catalog entries at one numeric quartic, memoizing each entry.
class QuarticEvaluator {
public:
  /// Throws std::invalid_argument for the zero form.
  explicit QuarticEvaluator(TernaryQuartic f);

  const TernaryQuartic& form() const { return form_; }
  const ConcomitantForm& entry(std::string_view name);
  ConcomitantForm evaluate(const CombinedConcomitant& c);
  bool vanishes(const CombinedConcomitant& c) { return is_identically_zero(evaluate(c)); }
  /// Every element of the list is identically zero.
  bool list_vanishes(ListName name);

private:
  TernaryQuartic form_;
  std::map<std::string, ConcomitantForm, std::less<>> memo_;
};

/// Generic evaluation of a combined concomitant from the expansion cache.
ConcomitantForm evaluate_generic(const CombinedConcomitant& c, GenericExpansionCache& cache);

/// F in W_s, i.e. U_s vanishes at F. Throws for s outside 1..5 or F = 0.
bool membership(const TernaryQuartic& f, int s);

/// Least s in 1..5 with F in W_s, else 6. Throws for F = 0.
int border_rank(const TernaryQuartic& f);

/// (U2 = 0 and V != 0) or U1 = 0. Throws for F = 0.
bool in_W2_open(const TernaryQuartic& f);

struct ClassificationReport {
  int border_rank = 6;
  /// Keyed by "U1".."U5" and "V"; true when every element vanishes.
  std::map<std::string, bool> vanishing;
  RankProfile rank_profile;
  /// Present when border_rank <= 2.
  std::optional<bool> in_W2_open;

  /// U_s = 0 implies U_{s+1} = 0 for s = 1..4.
  bool vanishing_is_monotone() const;
};

ClassificationReport classify(const TernaryQuartic& f);

/// Agreement of the concomitant verdicts with catalecticant rank conditions:
/// W_3 <=> rank alpha_2 <= 3, W_4 <=> rank alpha_2 <= 4, W_5 <=> det alpha_2 = 0.
struct CrossCheckReport {
  RankProfile ranks;
  Rational det_alpha2;
  bool in_W3 = false;
  bool in_W4 = false;
  bool in_W5 = false;
  bool agree3 = false;
  bool agree4 = false;
  bool agree5 = false;

  bool all_agree() const { return agree3 && agree4 && agree5; }
};

CrossCheckReport cross_check(const TernaryQuartic& f);

/// The unique lambda with a - lambda * b vanishing at every sample.
/// Throws std::invalid_argument for mismatched signatures, when no single
/// lambda works, or when b (and a) vanish at every sample.
Rational derive_combination(const CombinedConcomitant& a, const CombinedConcomitant& b,
                            std::span<const TernaryQuartic> samples);

} // namespace waring

#endif
