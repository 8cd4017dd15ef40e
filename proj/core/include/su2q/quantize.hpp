#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "su2q/fourier.hpp"
#include "su2q/group.hpp"
#include "su2q/symbols.hpp"
#include "su2q/taylor.hpp"

namespace su2q {

/// A linear operator given only through its action on coefficient stacks.
/// out_two_L bounds the band of the output for band-limited input of band
/// in_two_L (differential operators keep the band, multiplications grow it).
struct OperatorOracle {
    std::function<BandLimitedFunction(const BandLimitedFunction&)> apply;
    /// Output band for input band two_L.
    std::function<int(int)> out_band;
    /// Oracles must be safe to call concurrently or declare themselves
    /// serial; extract_symbol honors the declaration.
    bool concurrent_safe = true;
};

/// Oracles for the named operators and for compositions "a*b" (b applied
/// first). Names: identity, partial_plus, partial_minus, partial_zero,
/// laplacian, d1, d2, d3, mult_q_plus, mult_q_minus, mult_q_zero.
OperatorOracle builtin_operator(const std::string& spec);

/// Op(sigma) f at every node of the evaluation grid:
///   Af(x) = sum_l (2l+1) Tr(t^l(x) sigma(x, l) fhat(l)),
/// summed over two_l <= min(sigma.two_L, f.two_L).
std::vector<std::complex<double>> op_apply(const Symbol& sigma, const BandLimitedFunction& f,
                                           const QuadratureGrid& eval_grid);
/// Same, evaluated at the symbol's own x grid.
std::vector<std::complex<double>> op_apply(const Symbol& sigma, const BandLimitedFunction& f);

/// Op(sigma) as an oracle (apply + analyze on an internally built grid that
/// is exact for the output band sigma.x_two_L + f.two_L).
OperatorOracle quantize(const Symbol& sigma);

/// sigma_A(x, l)_{mn} = sum_k conj(t^l_{km}(x)) (A t^l_{kn})(x), assembled
/// by feeding every basis element through A. A linearity spot check is run
/// first; failure throws std::invalid_argument. The result's x band is
/// declared as grid.exactness_two_l / 2 (the largest the grid certifies) and
/// the x_invariant flag is set when node variation stays below 1e-12.
Symbol extract_symbol(const OperatorOracle& a, int two_L,
                      std::shared_ptr<const QuadratureGrid> grid);

/// Composition expansion of Theorem-type
///   sigma_{AB} = sum_{|alpha| < N} (1/alpha!) (Delta^alpha sigma_A)
///                (d^{(alpha)} sigma_B),
/// with Delta^alpha the iterated stencils and d^{(alpha)} the dual
/// operators of the Taylor basis. Result band: sigma_A.two_L - (N-1).
Symbol compose_expansion(const Symbol& sigma_a, const Symbol& sigma_b, int N,
                         const TaylorBasis& taylor);

/// Adjoint expansion: sum_{|alpha| < N} (1/alpha!) Delta^alpha d^{(alpha)}
/// (sigma_A(x, l)^*).
Symbol adjoint_expansion(const Symbol& sigma_a, int N, const TaylorBasis& taylor);

/// L^2 boundedness certificate (derivative depth 2 = smallest integer above
/// dim/2 = 3/2) plus the truncated empirical operator norm.
struct L2Report {
    /// max over |beta| <= 2, nodes and l of |d^beta sigma(x, l)|_op.
    double certificate = 0.0;
    /// Per-band maxima of the same quantity, indexed by two_l.
    std::vector<double> per_band;
    /// Operator norm of the truncated Op(sigma) in the Peter-Weyl basis
    /// (power iteration, 200 steps or 1e-10 relative change).
    double empirical_norm = 0.0;
    /// False when the per-band certificate keeps growing with l (slope of
    /// log c(l) against log(1+l) above 0.1 on the upper half of the band),
    /// i.e. the finite data does not support a uniform bound.
    bool certifiable = true;
};

L2Report l2_bound_estimate(const Symbol& sigma);

/// Multiplies sigma(x, l) by (1 + l(l+1))^{-mu/2}; combined with
/// l2_bound_estimate this certifies H^mu -> L^2 boundedness.
Symbol sobolev_reweight(const Symbol& sigma, double mu);

/// Largest singular value of the truncated Op(sigma) matrix in the
/// orthonormal Peter-Weyl basis (bands up to sigma.two_L on both sides).
double empirical_op_norm(const Symbol& sigma);

}  // namespace su2q
