#ifndef WARING_APOLARITY_HPP
#define WARING_APOLARITY_HPP

#include "waring/linear_form.hpp"
#include "waring/matrix.hpp"
#include "waring/multi_index.hpp"
#include "waring/polynomial.hpp"
#include "waring/quartic.hpp"

#include <array>
#include <span>
#include <vector>

namespace waring {

/// Matrix of the apolarity map alpha_k of a quartic. Rows are indexed by the
/// degree-k multi-indices J, columns by the degree-(4-k) multi-indices K
/// (both in monomials_of_degree order), and entry (J, K) = b_{J+K}.
///
/// Differentiation gives G(d/dx) F = sum_K (4!/K!) x^K sum_J g_J b_{J+K},
/// so this Hankel matrix differs from the differentiation matrix only by an
/// invertible diagonal factor on the column side; ranks agree and the left
/// kernel is exactly the space of apolar degree-k forms.
struct CatalecticantMatrix {
  int k = 0;
  RationalMatrix entries;

  std::span<const MultiIndex> row_indices() const { return monomials_of_degree(k); }
  std::span<const MultiIndex> col_indices() const { return monomials_of_degree(4 - k); }
};

/// Throws std::invalid_argument unless 0 <= k <= 4.
CatalecticantMatrix catalecticant(const TernaryQuartic& f, int k);

/// The same matrix with entries a_{J+K} in the generic coefficient variables.
std::vector<std::vector<Polynomial>> generic_catalecticant(int k);

/// Ranks of alpha_1, alpha_2, alpha_3.
struct RankProfile {
  std::array<std::size_t, 3> ranks{};
  std::size_t rank(int k) const { return ranks.at(static_cast<std::size_t>(k - 1)); }
  bool operator==(const RankProfile&) const = default;
};

/// Throws std::invalid_argument for the zero form.
RankProfile rank_profile(const TernaryQuartic& f);

/// Basis of the degree-k forms G(y) with G(d/dx) F = 0, in reduced echelon
/// form over the y-monomials (leading coefficient 1, pivots in
/// monomials_of_degree order). Throws for k outside 1..4 or F = 0.
std::vector<Polynomial> apolar_forms(const TernaryQuartic& f, int k);

/// G(d/dx) F == 0, computed by differentiating F. G must be a homogeneous
/// polynomial of degree <= 4 in y0, y1, y2; otherwise std::invalid_argument.
bool annihilates(const Polynomial& g, const TernaryQuartic& f);

/// Basis of (I_Z)_4 for the points Z of the dual plane, as quartic forms in
/// y: the kernel of evaluation at the points.
std::vector<Polynomial> ideal_degree4(std::span<const LinearForm> points);

/// Reye containment (I_Z)_4 inside ker alpha_{4,F}. Throws
/// std::invalid_argument for duplicate (proportional) points or an empty set.
bool reye_check(std::span<const LinearForm> points, const TernaryQuartic& f);

} // namespace waring

#endif
