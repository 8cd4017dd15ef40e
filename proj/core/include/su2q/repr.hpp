#pragma once

#include <Eigen/Core>

#include <complex>

#include "su2q/group.hpp"

namespace su2q {

/// Matrix t^l(g) of the (2l+1)-dimensional irreducible unitary
/// representation, evaluated from the explicit polynomial in the entries
/// a, b, c, d of to_matrix(g). Row index i = (two_m + two_l)/2, column
/// j = (two_n + two_l)/2, so t^{1/2}(g) == to_matrix(g).
///
/// For two_l > 60 the factorial ratios are combined in log space to avoid
/// overflow; below that the direct double-precision tables are exact enough.
Eigen::MatrixXcd wigner(const GroupElement& g, int two_l);

/// Trace of t^l(g); a class function with character(e, two_l) = 2l+1.
std::complex<double> character(const GroupElement& g, int two_l);

}  // namespace su2q
