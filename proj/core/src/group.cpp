#include "su2q/group.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace su2q {

using std::numbers::pi;

GroupElement GroupElement::from_quaternion(double x0, double x1, double x2, double x3) {
    const double norm = std::sqrt(x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3);
    if (norm <= 1e-8) {
        throw std::invalid_argument("GroupElement::from_quaternion: quaternion norm " +
                                    std::to_string(norm) + " too close to zero to normalize");
    }
    return GroupElement(x0 / norm, x1 / norm, x2 / norm, x3 / norm);
}

Eigen::Matrix2cd GroupElement::to_matrix() const {
    const std::complex<double> i(0.0, 1.0);
    Eigen::Matrix2cd u;
    u << x_[0] + i * x_[3], x_[1] + i * x_[2],
        -x_[1] + i * x_[2], x_[0] - i * x_[3];
    return u;
}

GroupElement GroupElement::inverse() const {
    // Unit quaternion inverse = conjugate.
    return GroupElement(x_[0], -x_[1], -x_[2], -x_[3]);
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
    // Hamilton product; matches to_matrix(g) * to_matrix(h).
    const double a0 = g.x_[0], a1 = g.x_[1], a2 = g.x_[2], a3 = g.x_[3];
    const double b0 = h.x_[0], b1 = h.x_[1], b2 = h.x_[2], b3 = h.x_[3];
    GroupElement r(a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                   a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                   a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                   a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0);
    // Renormalize to keep long products on the sphere.
    const double n = std::sqrt(r.x_[0] * r.x_[0] + r.x_[1] * r.x_[1] + r.x_[2] * r.x_[2] +
                               r.x_[3] * r.x_[3]);
    for (double& c : r.x_) c /= n;
    return r;
}

GroupElement omega1(double t) {
    return GroupElement::from_quaternion(std::cos(t / 2), 0.0, std::sin(t / 2), 0.0);
}

GroupElement omega2(double t) {
    return GroupElement::from_quaternion(std::cos(t / 2), -std::sin(t / 2), 0.0, 0.0);
}

GroupElement omega3(double t) {
    return GroupElement::from_quaternion(std::cos(t / 2), 0.0, 0.0, std::sin(t / 2));
}

GroupElement from_euler(double phi, double theta, double psi) {
    return multiply(multiply(omega3(phi), omega2(theta)), omega3(psi));
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int k = 0; k < n; ++k) {
        double t = std::cos(pi * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = t;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            double step = p1 / dp;
            t -= step;
            if (std::abs(step) < 1e-15) break;
        }
        x[k] = t;
        w[k] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

}  // namespace

QuadratureGrid quadrature_grid(int two_l_max) {
    if (two_l_max < 0) throw std::invalid_argument("quadrature_grid: two_l_max must be >= 0");

    // phi integrates e^{-im phi} exactly for 0 < |m| <= two_l_max / 2 once
    // n_phi > two_l_max / 2; psi integrates e^{-in psi} over [0, 4 pi) for
    // 0 < |2n| <= two_l_max once n_psi > two_l_max. Entries with m = n = 0
    // reduce to Legendre polynomials of degree l in cos(theta).
    const int n_phi = two_l_max / 2 + 1;
    const int n_psi = two_l_max + 1;
    const int n_theta = two_l_max / 4 + 1;

    std::vector<double> u, wu;
    gauss_legendre(n_theta, u, wu);

    QuadratureGrid grid;
    grid.exactness_two_l = two_l_max;
    grid.nodes.reserve(static_cast<std::size_t>(n_phi) * n_theta * n_psi);
    grid.weights.reserve(grid.nodes.capacity());
    for (int a = 0; a < n_phi; ++a) {
        const double phi = 2.0 * pi * a / n_phi;
        for (int b = 0; b < n_theta; ++b) {
            const double theta = std::acos(u[b]);
            for (int c = 0; c < n_psi; ++c) {
                const double psi = 4.0 * pi * c / n_psi;
                grid.nodes.push_back(from_euler(phi, theta, psi));
                grid.weights.push_back(wu[b] / (2.0 * n_phi * n_psi));
            }
        }
    }
    return grid;
}

std::complex<double> haar_integrate(const std::vector<std::complex<double>>& values,
                                    const QuadratureGrid& grid) {
    if (values.size() != grid.size()) {
        throw std::invalid_argument("haar_integrate: " + std::to_string(values.size()) +
                                    " samples for " + std::to_string(grid.size()) + " nodes");
    }
    std::complex<double> sum = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j) sum += grid.weights[j] * values[j];
    return sum;
}

}  // namespace su2q
