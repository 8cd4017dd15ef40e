#pragma once

#include <Eigen/Core>

#include <complex>
#include <vector>

namespace su2q {

/// A point of SU(2), stored as a unit quaternion (x0, x1, x2, x3). The
/// matching 2x2 special-unitary matrix is
///
///   [[ x0 + i x3,  x1 + i x2 ],
///    [ -x1 + i x2, x0 - i x3 ]]
///
/// which identifies the unit sphere of the quaternions with SU(2); the
/// Hamilton product realizes the group law.
class GroupElement {
  public:
    GroupElement() : x_{1.0, 0.0, 0.0, 0.0} {}

    /// Normalizes the given quaternion. Throws std::invalid_argument if its
    /// Euclidean norm is below 1e-8.
    static GroupElement from_quaternion(double x0, double x1, double x2, double x3);

    static GroupElement identity() { return GroupElement(); }

    double x0() const { return x_[0]; }
    double x1() const { return x_[1]; }
    double x2() const { return x_[2]; }
    double x3() const { return x_[3]; }

    Eigen::Matrix2cd to_matrix() const;

    GroupElement inverse() const;

    friend GroupElement multiply(const GroupElement& g, const GroupElement& h);

  private:
    GroupElement(double x0, double x1, double x2, double x3) : x_{x0, x1, x2, x3} {}
    double x_[4];
};

GroupElement multiply(const GroupElement& g, const GroupElement& h);

/// One-parameter subgroups: omega1/omega2/omega3 are rotations generated by
/// the su(2) basis Y1, Y2, Y3 (half the Pauli matrices up to factors of i);
/// omega3(t) = diag(e^{it/2}, e^{-it/2}).
GroupElement omega1(double t);
GroupElement omega2(double t);
GroupElement omega3(double t);

/// z-y-z Euler angles: from_euler(phi, theta, psi) = omega3(phi) * omega2(theta) * omega3(psi).
/// psi has period 4*pi so that half-integer representations are single valued.
GroupElement from_euler(double phi, double theta, double psi);

/// Product quadrature rule for the normalized Haar measure. Weights sum to 1
/// and every matrix element t^l_{mn} with 2l <= exactness_two_l integrates
/// exactly (to 0 for l > 0, to 1 for the constant).
struct QuadratureGrid {
    std::vector<GroupElement> nodes;
    std::vector<double> weights;
    int exactness_two_l = 0;

    std::size_t size() const { return nodes.size(); }
};

/// Builds the rule: uniform in phi over [0, 2*pi), uniform in psi over
/// [0, 4*pi), Gauss-Legendre in cos(theta). Node counts grow linearly in
/// two_l_max, total size O(two_l_max^3).
QuadratureGrid quadrature_grid(int two_l_max);

/// Weighted sum of samples over the grid. Exact for integrands of band
/// <= exactness_two_l. Throws std::invalid_argument on a length mismatch.
std::complex<double> haar_integrate(const std::vector<std::complex<double>>& values,
                                    const QuadratureGrid& grid);

}  // namespace su2q
