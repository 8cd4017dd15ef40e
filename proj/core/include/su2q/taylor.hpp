#pragma once

#include <complex>
#include <vector>

#include "su2q/fourier.hpp"
#include "su2q/group.hpp"
#include "su2q/half_int.hpp"
#include "su2q/symbols.hpp"

namespace su2q {

/// Taylor machinery at the identity: monomials
///   q_alpha = q_+^a1 q_-^a2 q_0^a3   (band |alpha|/2),
/// and dual differential operators d^{(alpha)}, expressed in the ordered
/// monomials d0^b3 d+^b1 d-^b2 and fixed by the biorthogonality system
///   d^{(beta)} [x -> q_alpha(x^{-1})] (e) = alpha! delta_{alpha beta},
/// for |alpha|, |beta| <= order. This is exactly the pairing the composition
/// and adjoint expansions consume.
struct TaylorBasis {
    int order = 0;
    std::vector<Exponent3> alphas;                   // all |alpha| <= order
    std::vector<BandLimitedFunction> monomials;      // q_alpha per alphas[i]
    std::vector<std::vector<std::complex<double>>> dual;  // dual[ai][bi]

    int index_of(const Exponent3& a) const;
};

/// Builds the basis. The grid is used to form the monomial products and must
/// satisfy exactness_two_l >= 2*N. Throws std::runtime_error if the
/// biorthogonality system is singular.
TaylorBasis taylor_basis(int N, const QuadratureGrid& grid);

/// (d^{(alpha)} u)(e) for a band-limited u.
std::complex<double> dual_derivative_at_identity(const TaylorBasis& basis,
                                                 const Exponent3& alpha,
                                                 const BandLimitedFunction& u);

/// d^{(alpha)} applied to the x-dependence of a symbol (a dual-coefficient
/// combination of ordered x_derivative monomials).
Symbol dual_derivative(const TaylorBasis& basis, const Exponent3& alpha, const Symbol& sigma);

/// Taylor polynomial P_N u(x) = sum_{|alpha| <= N} q_alpha(x^{-1})
/// (d^{(alpha)} u)(e) / alpha!.
std::complex<double> taylor_polynomial(const TaylorBasis& basis, const BandLimitedFunction& u,
                                       int N, const GroupElement& x);

}  // namespace su2q
