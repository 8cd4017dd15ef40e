#include "su2q/repr.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "su2q/half_int.hpp"

namespace su2q {

namespace {

constexpr int kLogSpaceThreshold = 60;  // two_l beyond which factorials leave double range

const double* factorial_table() {
    static const std::vector<double> table = [] {
        std::vector<double> f(kLogSpaceThreshold + 2, 1.0);
        for (std::size_t k = 1; k < f.size(); ++k) f[k] = f[k - 1] * static_cast<double>(k);
        return f;
    }();
    return table.data();
}

// z^k with the 0^0 := 1 convention used for vanishing matrix entries.
std::complex<double> ipow(std::complex<double> z, int k) {
    std::complex<double> r = 1.0;
    while (k-- > 0) r *= z;
    return r;
}

std::complex<double> log_ipow(std::complex<double> z, int k, double& log_mag) {
    if (k == 0) return 1.0;
    if (z == std::complex<double>(0.0, 0.0)) return 0.0;
    log_mag += k * std::log(std::abs(z));
    return std::polar(1.0, k * std::arg(z));
}

}  // namespace

Eigen::MatrixXcd wigner(const GroupElement& g, int two_l) {
    if (two_l < 0) throw std::invalid_argument("wigner: two_l must be >= 0");

    const Eigen::Matrix2cd u = g.to_matrix();
    const std::complex<double> a = u(0, 0), b = u(0, 1), c = u(1, 0), d = u(1, 1);
    const int dim = dim_of(two_l);
    Eigen::MatrixXcd t(dim, dim);

    const bool log_space = two_l > kLogSpaceThreshold;
    const double* fact = factorial_table();

    for (int row = 0; row < dim; ++row) {
        const int two_m = label_of(row, two_l);
        const int lm = (two_l - two_m) / 2;  // l - m
        const int lpm = (two_l + two_m) / 2; // l + m
        for (int col = 0; col < dim; ++col) {
            const int two_n = label_of(col, two_l);
            const int ln = (two_l - two_n) / 2;  // l - n
            const int lpn = (two_l + two_n) / 2; // l + n
            const int nm = (two_n + two_m) / 2;  // n + m

            // All factorial arguments must be nonnegative: i >= max(0, -(n+m)),
            // i <= min(l-n, l-m).
            const int i_lo = std::max(0, -nm);
            const int i_hi = std::min(ln, lm);

            std::complex<double> sum = 0.0;
            if (!log_space) {
                for (int i = i_lo; i <= i_hi; ++i) {
                    const double ratio = fact[ln] * fact[lpn] /
                                         (fact[i] * fact[ln - i] * fact[lm - i] * fact[nm + i]);
                    sum += ratio * ipow(a, i) * ipow(b, lm - i) * ipow(c, ln - i) * ipow(d, nm + i);
                }
                const double pre = std::sqrt(fact[lm] * fact[lpm] / (fact[ln] * fact[lpn]));
                t(row, col) = pre * sum;
            } else {
                const double log_pre = 0.5 * (std::lgamma(lm + 1.0) + std::lgamma(lpm + 1.0) -
                                              std::lgamma(ln + 1.0) - std::lgamma(lpn + 1.0));
                for (int i = i_lo; i <= i_hi; ++i) {
                    double log_mag = log_pre + std::lgamma(ln + 1.0) + std::lgamma(lpn + 1.0) -
                                     std::lgamma(i + 1.0) - std::lgamma(ln - i + 1.0) -
                                     std::lgamma(lm - i + 1.0) - std::lgamma(nm + i + 1.0);
                    std::complex<double> phase = log_ipow(a, i, log_mag);
                    phase *= log_ipow(b, lm - i, log_mag);
                    phase *= log_ipow(c, ln - i, log_mag);
                    phase *= log_ipow(d, nm + i, log_mag);
                    sum += std::exp(log_mag) * phase;
                }
                t(row, col) = sum;
            }
        }
    }
    return t;
}

std::complex<double> character(const GroupElement& g, int two_l) {
    return wigner(g, two_l).trace();
}

}  // namespace su2q
