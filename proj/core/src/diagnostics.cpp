#include "su2q/diagnostics.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <numbers>

#include "su2q/parallel.hpp"

namespace su2q {

namespace {

constexpr const char* kNecessityNote =
    "finite-band necessity check: S^m is an asymptotic class, so truncated "
    "data can falsify membership but not prove it";

double zeta_bracket_sum(double r) {
    // sum_{k in Z} <k>^{-r}, upper bound (integral tail), needs r > 1.
    const int cutoff = 200000;
    double sum = 1.0;
    for (int k = 1; k <= cutoff; ++k) sum += 2.0 * std::pow(1.0 + double(k) * k, -r / 2.0);
    sum += 2.0 * std::pow(static_cast<double>(cutoff), 1.0 - r) / (r - 1.0);
    return sum;
}

void fold_in_entrywise(DecayCheck& check, const Symbol& t, double m, double tolerance) {
    const double growth_exp = m - check.alpha.order();
    for (int two_l = 0; two_l <= t.two_L; ++two_l) {
        const double growth = std::pow(1.0 + half(two_l), growth_exp);
        for (std::size_t node = 0; node < t.nodes(); ++node) {
            const Eigen::MatrixXcd& mat = t.at(two_l, node);
            for (int i = 0; i < dim_of(two_l); ++i)
                for (int j = 0; j < dim_of(two_l); ++j) {
                    const double decay =
                        std::pow(angle_bracket(static_cast<double>(i - j)), -check.N);
                    const double ratio = std::abs(mat(i, j)) / (decay * growth);
                    if (ratio > check.C) {
                        check.C = ratio;
                        check.witness = DecayWitness{node, two_l, i, j};
                    }
                }
        }
    }
    check.pass = check.C <= tolerance;
}

}  // namespace

DecayReport class_report(const Symbol& sigma, double m, int alpha_max, int beta_max, int N_max,
                         const std::vector<GroupElement>& u_samples, double tolerance) {
    DecayReport report;
    report.order_m = m;
    report.tolerance = tolerance;
    report.interpretation = kNecessityNote;

    const auto alphas = exponents_up_to(alpha_max);
    const auto betas = exponents_up_to(beta_max);
    for (const auto& alpha : alphas)
        for (const auto& beta : betas)
            for (int N = 0; N <= N_max; ++N) {
                DecayCheck check;
                check.alpha = alpha;
                check.beta = beta;
                check.N = N;
                report.checks.push_back(check);
            }

    for (const GroupElement& u : u_samples) {
        const Symbol pushed = pushforward(sigma, u);
        for (const auto& beta : betas) {
            const Symbol derived = x_derivative(beta, pushed);
            for (const auto& alpha : alphas) {
                if (sigma.two_L < alpha.order()) continue;
                const Symbol t = difference_power(alpha, derived);
                for (auto& check : report.checks)
                    if (check.alpha == alpha && check.beta == beta)
                        fold_in_entrywise(check, t, m, tolerance);
            }
        }
    }

    for (const auto& check : report.checks) {
        report.max_c = std::max(report.max_c, check.C);
        report.all_pass = report.all_pass && check.pass;
    }
    return report;
}

DecayReport sigma0_inequalities(const Symbol& sigma, double m, int alpha_max, int beta_max,
                                double tolerance) {
    DecayReport report;
    report.order_m = m;
    report.tolerance = tolerance;
    report.interpretation = kNecessityNote;

    for (const auto& alpha : exponents_up_to(alpha_max)) {
        if (sigma.two_L < alpha.order()) continue;
        for (const auto& beta : exponents_up_to(beta_max)) {
            DecayCheck check;
            check.alpha = alpha;
            check.beta = beta;
            const Symbol t = difference_power(alpha, x_derivative(beta, sigma));
            const double growth_exp = m - alpha.order();
            for (int two_l = 0; two_l <= t.two_L; ++two_l) {
                const double l = half(two_l);
                const double growth = std::pow(std::sqrt(1.0 + l * (l + 1.0)), growth_exp);
                for (std::size_t node = 0; node < t.nodes(); ++node) {
                    const double ratio = opnorm_vs_linf(t.at(two_l, node)).first / growth;
                    if (ratio > check.C) {
                        check.C = ratio;
                        check.witness = DecayWitness{node, two_l, 0, 0};
                    }
                }
            }
            check.pass = check.C <= tolerance;
            report.max_c = std::max(report.max_c, check.C);
            report.all_pass = report.all_pass && check.pass;
            report.checks.push_back(check);
        }
    }
    return report;
}

std::vector<GroupElement> diagnostic_sample_points(int count) {
    auto halton = [](int index, int base) {
        double f = 1.0, r = 0.0;
        while (index > 0) {
            f /= base;
            r += f * (index % base);
            index /= base;
        }
        return r;
    };
    std::vector<GroupElement> points;
    points.reserve(static_cast<std::size_t>(count) + 3);
    for (int k = 1; k <= count; ++k) {
        points.push_back(GroupElement::from_quaternion(
            2.0 * halton(k, 2) - 1.0, 2.0 * halton(k, 3) - 1.0, 2.0 * halton(k, 5) - 1.0,
            2.0 * halton(k, 7) - 1.0));
    }
    const double quarter = std::numbers::pi / 2.0;
    points.push_back(omega1(quarter));
    points.push_back(omega2(quarter));
    points.push_back(omega3(quarter));
    return points;
}

std::pair<double, double> opnorm_vs_linf(const Eigen::MatrixXcd& m) {
    if (m.rows() == 0 || m.cols() == 0) return {0.0, 0.0};
    const double op = Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
    const double linf = m.cwiseAbs().maxCoeff();
    return {op, linf};
}

double certified_opnorm_bound(const DecayCertificate& cert) {
    if (cert.rate <= 1.0)
        throw std::invalid_argument("certified_opnorm_bound: rate must exceed 1");
    return cert.constant * zeta_bracket_sum(cert.rate);
}

ProductDecayResult banded_product_decay(const Eigen::MatrixXcd& a, const DecayCertificate& ca,
                                        const Eigen::MatrixXcd& b, const DecayCertificate& cb) {
    ProductDecayResult result;
    const Eigen::MatrixXcd ab = a * b;

    const double rate = std::min(ca.rate, cb.rate);
    if (ca.rate > 1.0 && cb.rate > 1.0) {
        // Peetre-type split: |(AB)_{ik}| <= c_A c_B (2^r S(s) + 2^s S(r)) <i-k>^{-min(r,s)}.
        const double constant =
            ca.constant * cb.constant *
            (std::pow(2.0, ca.rate) * zeta_bracket_sum(cb.rate) +
             std::pow(2.0, cb.rate) * zeta_bracket_sum(ca.rate));
        result.certificate = DecayCertificate{constant, rate};
    }

    double worst = 0.0;
    for (Eigen::Index i = 0; i < ab.rows(); ++i)
        for (Eigen::Index k = 0; k < ab.cols(); ++k)
            worst = std::max(worst, std::abs(ab(i, k)) *
                                        std::pow(angle_bracket(static_cast<double>(i - k)), rate));
    result.empirical_constant = worst;
    result.verified = result.certificate && worst <= result.certificate->constant;
    return result;
}

}  // namespace su2q
