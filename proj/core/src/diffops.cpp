#include "su2q/diffops.hpp"

#include <cmath>
#include <stdexcept>

#include "su2q/half_int.hpp"
#include "su2q/repr.hpp"

namespace su2q {

Field field_from_name(const std::string& name) {
    if (name == "d1") return Field::d1;
    if (name == "d2") return Field::d2;
    if (name == "d3") return Field::d3;
    if (name == "partial_plus" || name == "plus") return Field::partial_plus;
    if (name == "partial_minus" || name == "minus") return Field::partial_minus;
    if (name == "partial_zero" || name == "zero") return Field::partial_zero;
    if (name == "laplacian") return Field::laplacian;
    throw std::invalid_argument("unknown field name: " + name);
}

std::string field_name(Field f) {
    switch (f) {
        case Field::d1: return "d1";
        case Field::d2: return "d2";
        case Field::d3: return "d3";
        case Field::partial_plus: return "partial_plus";
        case Field::partial_minus: return "partial_minus";
        case Field::partial_zero: return "partial_zero";
        case Field::laplacian: return "laplacian";
    }
    return "?";
}

Eigen::MatrixXcd multiplier(Field f, int two_l) {
    const int dim = dim_of(two_l);
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(dim, dim);
    const std::complex<double> i(0.0, 1.0);

    switch (f) {
        case Field::partial_plus:
            // entry at (m, n) = (n + 1, n); weights exact in doubled integers
            for (int col = 0; col + 1 < dim; ++col) {
                const int two_n = label_of(col, two_l);
                const double w = std::sqrt(static_cast<double>(two_l - two_n) *
                                           (two_l + two_n + 2)) / 2.0;
                s(col + 1, col) = -w;
            }
            break;
        case Field::partial_minus:
            // entry at (m, n) = (n - 1, n)
            for (int col = 1; col < dim; ++col) {
                const int two_n = label_of(col, two_l);
                const double w = std::sqrt(static_cast<double>(two_l + two_n) *
                                           (two_l - two_n + 2)) / 2.0;
                s(col - 1, col) = -w;
            }
            break;
        case Field::partial_zero:
            for (int k = 0; k < dim; ++k) s(k, k) = half(label_of(k, two_l));
            break;
        case Field::laplacian: {
            const double ll1 = half(two_l) * (half(two_l) + 1.0);
            s = -ll1 * Eigen::MatrixXcd::Identity(dim, dim);
            break;
        }
        case Field::d1:
            s = -0.5 * i * (multiplier(Field::partial_minus, two_l) +
                            multiplier(Field::partial_plus, two_l));
            break;
        case Field::d2:
            s = 0.5 * (multiplier(Field::partial_minus, two_l) -
                       multiplier(Field::partial_plus, two_l));
            break;
        case Field::d3:
            s = -i * multiplier(Field::partial_zero, two_l);
            break;
    }
    return s;
}

BandLimitedFunction apply_field(Field f, const BandLimitedFunction& fhat) {
    BandLimitedFunction out = BandLimitedFunction::zero(fhat.two_L);
    out.approximate = fhat.approximate;
    for (int two_l = 0; two_l <= fhat.two_L; ++two_l)
        out.at(two_l) = multiplier(f, two_l) * fhat.at(two_l);
    return out;
}

Eigen::MatrixXcd rotated_multiplier(const GroupElement& u, int two_l) {
    const Eigen::MatrixXcd t = wigner(u, two_l);
    return t.adjoint() * multiplier(Field::partial_zero, two_l) * t;
}

}  // namespace su2q
