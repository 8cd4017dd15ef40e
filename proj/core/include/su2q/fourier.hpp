#pragma once

#include <Eigen/Core>

#include <complex>
#include <vector>

#include "su2q/group.hpp"
#include "su2q/half_int.hpp"

namespace su2q {

/// A function on SU(2) represented by its Fourier coefficient stack
/// { fhat(l) : 2l <= two_L }, one (2l+1)x(2l+1) complex matrix per l, with
///   fhat(l)_{mn} = integral of f(x) * conj(t^l_{nm}(x))  (note the
/// transposition: the coefficient is taken against t^l(x)^*), and the
/// inversion  f(x) = sum_l (2l+1) Tr(t^l(x) fhat(l)).
struct BandLimitedFunction {
    int two_L = 0;
    std::vector<Eigen::MatrixXcd> coeffs;  // indexed by two_l = 0..two_L
    /// Set by forward() when the grid could not integrate the analysis
    /// products exactly, i.e. the result is a projection, not an identity.
    bool approximate = false;

    static BandLimitedFunction zero(int two_L);

    /// Coefficient stack of the matrix element t^l_{mn} itself: the single
    /// entry fhat(l)[(two_n+two_l)/2, (two_m+two_l)/2] = 1/(2l+1).
    static BandLimitedFunction basis_element(int two_l, int two_m, int two_n, int two_L);

    Eigen::MatrixXcd& at(int two_l) { return coeffs[static_cast<std::size_t>(two_l)]; }
    const Eigen::MatrixXcd& at(int two_l) const { return coeffs[static_cast<std::size_t>(two_l)]; }
};

BandLimitedFunction operator+(const BandLimitedFunction& f, const BandLimitedFunction& g);
BandLimitedFunction operator*(std::complex<double> c, const BandLimitedFunction& f);

/// Analysis: samples at the grid nodes -> coefficient stack of band two_L.
/// Exact when the samples come from a function of band <= two_L and
/// grid.exactness_two_l >= 2*two_L; otherwise the result is the quadrature
/// projection and is flagged approximate.
BandLimitedFunction forward(const std::vector<std::complex<double>>& samples,
                            const QuadratureGrid& grid, int two_L);

/// Synthesis at a single point: sum_l (2l+1) Tr(t^l(x) fhat(l)).
std::complex<double> inverse(const BandLimitedFunction& f, const GroupElement& x);

/// Synthesis at every grid node (parallel over nodes).
std::vector<std::complex<double>> synthesize(const BandLimitedFunction& f,
                                             const QuadratureGrid& grid);

/// Convolution (f * g)(x) = integral f(x y^{-1}) g(y) dy on the coefficient
/// side: the product order is reversed, (f*g)hat(l) = ghat(l) * fhat(l).
BandLimitedFunction convolve(const BandLimitedFunction& f, const BandLimitedFunction& g);

/// sqrt( sum_l (2l+1) |fhat(l)|_HS^2 ), the L^2 norm by Plancherel.
double plancherel_norm(const BandLimitedFunction& f);

/// Pointwise product computed by synthesis on a grid exact for the product
/// band and re-analysis at band f.two_L + g.two_L.
BandLimitedFunction pointwise_product(const BandLimitedFunction& f, const BandLimitedFunction& g);

/// Coefficients of x -> f(x^{-1}).
BandLimitedFunction compose_with_inverse(const BandLimitedFunction& f);

/// Offset of band two_l in a coefficient stack flattened per
/// (two_l, row, col) row-major; total length stack_size(two_L).
int stack_offset(int two_l);
int stack_size(int two_L);
Eigen::VectorXcd stack(const BandLimitedFunction& f);
BandLimitedFunction unstack(const Eigen::VectorXcd& v, int two_L);

/// Analysis/synthesis over one grid with the representation samples
/// t^l(x_j) computed once. The hot loops (extraction, operator norms,
/// multiplication operators) run through this instead of re-evaluating
/// matrix elements per call.
class GridTransform {
  public:
    GridTransform(std::shared_ptr<const QuadratureGrid> grid, int table_two_L);

    const QuadratureGrid& grid() const { return *grid_; }
    std::shared_ptr<const QuadratureGrid> grid_ptr() const { return grid_; }
    int table_two_L() const { return table_two_L_; }

    /// t^{l}(x_node) for two_l <= table_two_L.
    const Eigen::MatrixXcd& sample(int two_l, std::size_t node) const {
        return table_[static_cast<std::size_t>(two_l)][node];
    }

    BandLimitedFunction analyze(const std::vector<std::complex<double>>& samples,
                                int two_L) const;
    std::vector<std::complex<double>> synthesize(const BandLimitedFunction& f) const;

    /// Dense stacked-coefficient maps: analysis (stack_size x nodes) and
    /// synthesis (nodes x stack_size).
    Eigen::MatrixXcd analysis_matrix(int two_L) const;
    Eigen::MatrixXcd synthesis_matrix(int two_L) const;

  private:
    std::shared_ptr<const QuadratureGrid> grid_;
    int table_two_L_;
    std::vector<std::vector<Eigen::MatrixXcd>> table_;
};

}  // namespace su2q
