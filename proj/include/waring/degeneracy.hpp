#ifndef WARING_DEGENERACY_HPP
#define WARING_DEGENERACY_HPP

#include "waring/rational.hpp"

#include <vector>

namespace waring {

/// Expected codimension (e-s)(e-s+1)/2 of the locus where a twisted
/// symmetric map of a rank-e bundle has rank <= s.
long expected_codimension(int e, int s);

/// Degree of the symmetric degeneracy locus {rank <= s} of a twisted
/// symmetric map E -> E* (x) L of a rank-e bundle, for a base whose Chow
/// ring is generated by a hyperplane class h of degree 1:
///
///   2^(e-s) * det[ z_(e-s-2i+j+1) ]_{1 <= i,j <= e-s}
///
/// where z_k = c_k(E* (x) sqrt L) / h^k are given as `chern` = {z_0 = 1, z_1, ..., z_e}
/// and z_k = 0 for k < 0 or k > e. The value is the coefficient of
/// h^expected_codimension(e, s).
///
/// Throws std::invalid_argument when s < 0 or s >= e, the series has fewer
/// than e+1 terms or z_0 != 1, and std::domain_error when the result is not
/// an integer.
Integer degeneracy_degree(int e, int s, const std::vector<Rational>& chern);

/// z_k = C(6,k) / 2^k: E = S^2 V (x) O(-1) and L = O(-1) on the P^14 of
/// ternary quartics, where E* (x) sqrt L splits as six copies of O(1/2).
std::vector<Rational> waring_chern_series();

/// Degree of the rank-<=s locus of the middle catalecticant; s in 0..5.
Integer degree_of_Ws(int s);

} // namespace waring

#endif
