#pragma once

#include <Eigen/Core>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "su2q/diffops.hpp"
#include "su2q/fourier.hpp"
#include "su2q/group.hpp"
#include "su2q/half_int.hpp"

namespace su2q {

/// Full symbol sigma(x, l): for every two_l <= two_L a field of
/// (2l+1)x(2l+1) matrices sampled at the nodes of an x grid, with
/// x-dependence band-limited at x_two_L. The grid must be exact for the
/// declared x band (exactness_two_l >= 2*x_two_L) so entries can be
/// re-analyzed losslessly. Difference operators shrink two_L by one
/// half-step at the top; the stored band is always the valid band.
struct Symbol {
    int two_L = 0;
    int x_two_L = 0;
    std::shared_ptr<const QuadratureGrid> grid;
    /// data[two_l][node], matrices addressed by i = (two_m + two_l)/2 (m = i - l).
    std::vector<std::vector<Eigen::MatrixXcd>> data;
    bool x_invariant = false;

    static Symbol zero(int two_L, int x_two_L, std::shared_ptr<const QuadratureGrid> grid);

    const Eigen::MatrixXcd& at(int two_l, std::size_t node) const {
        return data[static_cast<std::size_t>(two_l)][node];
    }
    Eigen::MatrixXcd& at(int two_l, std::size_t node) {
        return data[static_cast<std::size_t>(two_l)][node];
    }
    std::size_t nodes() const { return grid->size(); }
};

/// x-invariant symbols of the identity and of the invariant fields,
/// replicated over the given x grid.
/// name is one of: identity, partial_plus, partial_minus, partial_zero, laplacian.
Symbol builtin_symbol(const std::string& name, int two_L,
                      std::shared_ptr<const QuadratureGrid> grid);

/// Symbol phi(x) * I of the multiplication operator f -> phi * f.
Symbol multiplication_symbol(const BandLimitedFunction& phi, int two_L,
                             std::shared_ptr<const QuadratureGrid> grid);

/// The three first-order trigonometric polynomials driving the difference
/// calculus, as coefficient stacks of band 1/2:
///   q_plus = t^{1/2}_{+1/2,-1/2},  q_minus = t^{1/2}_{-1/2,+1/2},
///   q_zero = t^{1/2}_{-1/2,-1/2} - t^{1/2}_{+1/2,+1/2},
/// so that difference_by_function(q_dir, .) agrees with difference(dir, .).
BandLimitedFunction q_function(char dir);  // '+', '-', '0'

enum class DiffDir { plus, minus, zero, bar_zero };

DiffDir diff_dir_from_name(const std::string& name);

/// Entrywise difference stencils acting in l (pointwise in x); output band
/// is two_L - 1. Legs reaching past the stored band are zero-extended.
Symbol difference(DiffDir dir, const Symbol& sigma);

/// Iterated stencils Delta_+^plus Delta_-^minus Delta_0^zero.
Symbol difference_power(const Exponent3& alpha, const Symbol& sigma);

/// Kernel-side difference: synthesize the right-convolution kernel of
/// sigma(x, .), multiply by q pointwise, re-analyze. Output band is
/// two_L - q.two_L. If work_grid is given it must satisfy
/// exactness_two_l >= 2*(two_L + q.two_L); otherwise one is built.
Symbol difference_by_function(const BandLimitedFunction& q, const Symbol& sigma,
                              const QuadratureGrid* work_grid = nullptr);

/// Left-invariant x-derivative d0^zero d+^plus d-^minus applied entrywise to
/// the x-dependence (analyze, multiply, synthesize; exact for the declared
/// x band).
Symbol x_derivative(const Exponent3& beta, const Symbol& sigma);

/// sigma_{A_u}(x, l) = t^l(u)^* sigma(x u^{-1}, l) t^l(u); the translated
/// x-dependence is re-synthesized from the band-limited entries.
Symbol pushforward(const Symbol& sigma, const GroupElement& u);

/// The same symbol sampled on another grid (exact for band-limited
/// x-dependence; the target grid must certify x_two_L).
Symbol resample(const Symbol& sigma, std::shared_ptr<const QuadratureGrid> target);

/// Both sides of the discrete Leibniz formula for
/// Delta^alpha (a sigma_{d0}): LHS is the iterated stencil of the product,
/// RHS is (col - alpha_+/2 + alpha_-/2) Delta^alpha a + alpha_0 *
/// bar Delta_0 Delta_+^{a1} Delta_-^{a2} Delta_0^{a3-1} a.
std::pair<Symbol, Symbol> leibniz_check_data(const Exponent3& alpha, const Symbol& a);

// Pointwise symbol algebra (per x node and per l).
Symbol add(const Symbol& a, const Symbol& b);
Symbol scale(std::complex<double> c, const Symbol& a);
/// Matrix product a(x,l) * b(x,l); declared x band is the sum of the inputs'.
Symbol matmul(const Symbol& a, const Symbol& b);
/// Conjugate transpose sigma(x,l)^* per point.
Symbol adjoint_pointwise(const Symbol& a);

/// Largest entrywise deviation over two_l <= band_two_l (and all nodes).
double max_abs_diff(const Symbol& a, const Symbol& b, int band_two_l);
/// Largest entrywise magnitude over two_l <= band_two_l.
double max_abs(const Symbol& a, int band_two_l);

/// How far the sampled entries are from being band-limited at x_two_L:
/// max deviation between samples and their analyze-truncate-resynthesize
/// round trip.
double x_band_violation(const Symbol& sigma);

}  // namespace su2q
