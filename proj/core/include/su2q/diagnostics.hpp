#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

#include "su2q/group.hpp"
#include "su2q/half_int.hpp"
#include "su2q/symbols.hpp"

namespace su2q {

/// <k> = (1 + k^2)^{1/2}, fixed repo-wide.
inline double angle_bracket(double k) { return std::sqrt(1.0 + k * k); }

struct DecayWitness {
    std::size_t node = 0;
    int two_l = 0;
    int i = 0;  // row index (unused for operator-norm checks)
    int j = 0;  // column index
};

struct DecayCheck {
    Exponent3 alpha;
    Exponent3 beta;
    int N = 0;
    double C = 0.0;  // exact maximum of the normalized ratio over the sample
    DecayWitness witness;
    bool pass = false;
};

/// Necessity report for the symbol-class inequalities. Finite-band data can
/// only falsify membership in an asymptotic class, never prove it; the
/// interpretation field repeats that.
struct DecayReport {
    std::vector<DecayCheck> checks;
    double order_m = 0.0;
    double tolerance = 0.0;
    double max_c = 0.0;
    bool all_pass = true;
    std::string interpretation;
};

/// Entrywise inequalities |Delta^alpha d^beta sigma_{A_u}(x,l)_{ij}| <=
/// C <i-j>^{-N} (1+l)^{m-|alpha|} over the supplied u sample set, all
/// |alpha| <= alpha_max, |beta| <= beta_max, N <= N_max. C is the actual
/// maximum of the ratio (no fitting slack); pass means C <= tolerance.
DecayReport class_report(const Symbol& sigma, double m, int alpha_max, int beta_max, int N_max,
                         const std::vector<GroupElement>& u_samples, double tolerance);

/// Operator-norm inequalities |Delta^alpha d^beta sigma(x,l)|_op <=
/// C <t^l>^{m-|alpha|} with <t^l> = (1+l(l+1))^{1/2}; same reporting
/// contract with N = 0 and entry witnesses unused.
DecayReport sigma0_inequalities(const Symbol& sigma, double m, int alpha_max, int beta_max,
                                double tolerance);

/// count deterministic Halton quaternions plus the Weyl elements
/// w1, w2, w3 = omega_j(pi/2); reproducible by construction.
std::vector<GroupElement> diagnostic_sample_points(int count);

/// (|M|_op, |M|_linf); the first never falls below the second.
std::pair<double, double> opnorm_vs_linf(const Eigen::MatrixXcd& m);

/// Entrywise decay |M_ij| <= constant * <i-j>^{-rate}.
struct DecayCertificate {
    double constant = 0.0;
    double rate = 0.0;
};

/// Upper bound |M|_op <= c * sum_{k in Z} <k>^{-r} implied by a decay
/// certificate with r > 1 (tail bounded by the integral estimate).
double certified_opnorm_bound(const DecayCertificate& cert);

struct ProductDecayResult {
    /// Certificate for AB with rate min(r, s), constant from the Peetre
    /// split c_A c_B (2^r S(s) + 2^s S(r)); empty if a rate is <= 1.
    std::optional<DecayCertificate> certificate;
    /// max |(AB)_{ik}| <i-k>^{rate} over the finite truncation.
    double empirical_constant = 0.0;
    bool verified = false;
};

ProductDecayResult banded_product_decay(const Eigen::MatrixXcd& a, const DecayCertificate& ca,
                                        const Eigen::MatrixXcd& b, const DecayCertificate& cb);

}  // namespace su2q
