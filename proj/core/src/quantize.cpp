#include "su2q/quantize.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "su2q/diffops.hpp"
#include "su2q/parallel.hpp"
#include "su2q/repr.hpp"

namespace su2q {

namespace {

BandLimitedFunction multiply_by(const BandLimitedFunction& phi, const BandLimitedFunction& f) {
    return pointwise_product(phi, f);
}

OperatorOracle atom_operator(const std::string& name) {
    OperatorOracle op;
    if (name == "identity") {
        op.apply = [](const BandLimitedFunction& f) { return f; };
        op.out_band = [](int two_L) { return two_L; };
        return op;
    }
    if (name == "mult_q_plus" || name == "mult_q_minus" || name == "mult_q_zero") {
        const char dir = name == "mult_q_plus" ? '+' : (name == "mult_q_minus" ? '-' : '0');
        const BandLimitedFunction q = q_function(dir);
        op.apply = [q](const BandLimitedFunction& f) { return multiply_by(q, f); };
        op.out_band = [](int two_L) { return two_L + 1; };
        return op;
    }
    const Field field = field_from_name(name);
    op.apply = [field](const BandLimitedFunction& f) { return apply_field(field, f); };
    op.out_band = [](int two_L) { return two_L; };
    return op;
}

}  // namespace

OperatorOracle builtin_operator(const std::string& spec) {
    std::vector<OperatorOracle> parts;
    std::size_t start = 0;
    while (start <= spec.size()) {
        const std::size_t sep = spec.find('*', start);
        const std::string name = spec.substr(start, sep == std::string::npos ? sep : sep - start);
        if (name.empty()) throw std::invalid_argument("builtin_operator: empty name in: " + spec);
        parts.push_back(atom_operator(name));
        if (sep == std::string::npos) break;
        start = sep + 1;
    }
    if (parts.size() == 1) return parts.front();

    OperatorOracle op;
    op.apply = [parts](const BandLimitedFunction& f) {
        BandLimitedFunction g = f;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) g = it->apply(g);
        return g;
    };
    op.out_band = [parts](int two_L) {
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) two_L = it->out_band(two_L);
        return two_L;
    };
    return op;
}

std::vector<std::complex<double>> op_apply(const Symbol& sigma, const BandLimitedFunction& f) {
    const int two_L = std::min(sigma.two_L, f.two_L);
    std::vector<std::complex<double>> out(sigma.nodes());
    parallel_for(sigma.nodes(), [&](std::size_t j) {
        std::complex<double> sum = 0.0;
        for (int two_l = 0; two_l <= two_L; ++two_l) {
            const Eigen::MatrixXcd t = wigner(sigma.grid->nodes[j], two_l);
            sum += static_cast<double>(dim_of(two_l)) *
                   (t * sigma.at(two_l, j) * f.at(two_l)).trace();
        }
        out[j] = sum;
    });
    return out;
}

std::vector<std::complex<double>> op_apply(const Symbol& sigma, const BandLimitedFunction& f,
                                           const QuadratureGrid& eval_grid) {
    const bool same_grid = &eval_grid == sigma.grid.get() ||
                           (eval_grid.size() == sigma.grid->size() &&
                            eval_grid.exactness_two_l == sigma.grid->exactness_two_l);
    if (same_grid) return op_apply(sigma, f);
    const Symbol moved = resample(sigma, std::make_shared<QuadratureGrid>(eval_grid));
    return op_apply(moved, f);
}

OperatorOracle quantize(const Symbol& sigma) {
    // The oracle owns a copy of the symbol.
    const auto s = std::make_shared<const Symbol>(sigma);
    const int x_band = sigma.x_two_L;
    const int l_band = sigma.two_L;
    OperatorOracle op;
    op.out_band = [x_band, l_band](int two_L) { return std::min(two_L, l_band) + x_band; };
    op.apply = [s, x_band, l_band](const BandLimitedFunction& f) {
        const int out_two_L = std::min(f.two_L, l_band) + x_band;
        const QuadratureGrid grid = quadrature_grid(2 * out_two_L);
        return forward(op_apply(*s, f, grid), grid, out_two_L);
    };
    return op;
}

Symbol extract_symbol(const OperatorOracle& a, int two_L,
                      std::shared_ptr<const QuadratureGrid> grid) {
    if (!a.apply) throw std::invalid_argument("extract_symbol: oracle has no apply function");

    // Linearity spot check on a deterministic random pair.
    {
        std::mt19937 rng(12345);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        const int probe_two_L = std::min(two_L, 2);
        BandLimitedFunction f = BandLimitedFunction::zero(probe_two_L);
        BandLimitedFunction g = BandLimitedFunction::zero(probe_two_L);
        for (int two_l = 0; two_l <= probe_two_L; ++two_l)
            for (int r = 0; r < dim_of(two_l); ++r)
                for (int c = 0; c < dim_of(two_l); ++c) {
                    f.at(two_l)(r, c) = std::complex<double>(u(rng), u(rng));
                    g.at(two_l)(r, c) = std::complex<double>(u(rng), u(rng));
                }
        const std::complex<double> w(0.7, -0.3);
        const BandLimitedFunction lhs = a.apply(f + w * g);
        const BandLimitedFunction rhs = a.apply(f) + w * a.apply(g);
        double worst = 0.0;
        for (int two_l = 0; two_l <= std::min(lhs.two_L, rhs.two_L); ++two_l)
            worst = std::max(worst, (lhs.at(two_l) - rhs.at(two_l)).cwiseAbs().maxCoeff());
        if (worst > 1e-10)
            throw std::invalid_argument("extract_symbol: oracle failed linearity check (" +
                                        std::to_string(worst) + ")");
    }

    Symbol out = Symbol::zero(two_L, grid->exactness_two_l / 2, grid);
    const auto nodes = grid->size();

    for (int two_l = 0; two_l <= two_L; ++two_l) {
        const int dim = dim_of(two_l);
        // Images of all basis elements t^l_{kn}; parallel over (k, n) when
        // the oracle allows it.
        std::vector<std::vector<std::complex<double>>> images(
            static_cast<std::size_t>(dim) * dim);
        auto run_one = [&](std::size_t idx) {
            const int k = static_cast<int>(idx) / dim;
            const int n = static_cast<int>(idx) % dim;
            const BandLimitedFunction basis = BandLimitedFunction::basis_element(
                two_l, label_of(k, two_l), label_of(n, two_l), two_l);
            const BandLimitedFunction img = a.apply(basis);
            images[idx].resize(nodes);
            for (std::size_t j = 0; j < nodes; ++j)
                images[idx][j] = inverse(img, grid->nodes[j]);
        };
        if (a.concurrent_safe)
            parallel_for(images.size(), run_one);
        else
            for (std::size_t idx = 0; idx < images.size(); ++idx) run_one(idx);

        for (std::size_t j = 0; j < nodes; ++j) {
            const Eigen::MatrixXcd t = wigner(grid->nodes[j], two_l);
            Eigen::MatrixXcd sig(dim, dim);
            for (int m = 0; m < dim; ++m)
                for (int n = 0; n < dim; ++n) {
                    std::complex<double> sum = 0.0;
                    for (int k = 0; k < dim; ++k)
                        sum += std::conj(t(k, m)) *
                               images[static_cast<std::size_t>(k) * dim + n][j];
                    sig(m, n) = sum;
                }
            out.at(two_l, j) = sig;
        }
    }

    // Flag node-independence.
    double variation = 0.0;
    for (int two_l = 0; two_l <= two_L; ++two_l)
        for (std::size_t j = 1; j < nodes; ++j)
            variation = std::max(variation,
                                 (out.at(two_l, j) - out.at(two_l, 0)).cwiseAbs().maxCoeff());
    out.x_invariant = variation < 1e-12;
    return out;
}

Symbol compose_expansion(const Symbol& sigma_a, const Symbol& sigma_b, int N,
                         const TaylorBasis& taylor) {
    if (N < 1) throw std::invalid_argument("compose_expansion: N must be >= 1");
    if (N - 1 > taylor.order)
        throw std::invalid_argument("compose_expansion: N exceeds Taylor basis order");
    if (sigma_a.two_L < N - 1)
        throw std::invalid_argument("compose_expansion: band exhausted by difference steps");

    Symbol acc = matmul(sigma_a, sigma_b);  // alpha = 0 term
    for (const Exponent3& alpha : taylor.alphas) {
        if (alpha.order() == 0 || alpha.order() >= N) continue;
        const Symbol da = difference_power(alpha, sigma_a);
        const Symbol db = dual_derivative(taylor, alpha, sigma_b);
        acc = add(acc, scale(1.0 / factorial_of(alpha), matmul(da, db)));
    }
    return acc;
}

Symbol adjoint_expansion(const Symbol& sigma_a, int N, const TaylorBasis& taylor) {
    if (N < 1) throw std::invalid_argument("adjoint_expansion: N must be >= 1");
    if (N - 1 > taylor.order)
        throw std::invalid_argument("adjoint_expansion: N exceeds Taylor basis order");
    if (sigma_a.two_L < N - 1)
        throw std::invalid_argument("adjoint_expansion: band exhausted by difference steps");

    const Symbol star = adjoint_pointwise(sigma_a);
    Symbol acc = star;
    for (const Exponent3& alpha : taylor.alphas) {
        if (alpha.order() == 0 || alpha.order() >= N) continue;
        const Symbol term = difference_power(alpha, dual_derivative(taylor, alpha, star));
        acc = add(acc, scale(1.0 / factorial_of(alpha), term));
    }
    return acc;
}

namespace {

double op_norm(const Eigen::MatrixXcd& m) {
    // Largest singular value via power iteration on m^H m with a fixed
    // deterministic start; small matrices converge quickly.
    if (m.rows() == 0) return 0.0;
    const Eigen::MatrixXcd b = m.adjoint() * m;
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(b.rows());
    v.normalize();
    double lambda = 0.0;
    for (int it = 0; it < 200; ++it) {
        const Eigen::VectorXcd w = b * v;
        const double nw = w.norm();
        if (nw == 0.0) return 0.0;
        const double next = std::real(v.dot(w));
        v = w / nw;
        if (it > 0 && std::abs(next - lambda) <= 1e-10 * std::max(1.0, std::abs(next))) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    return std::sqrt(std::max(0.0, lambda));
}

}  // namespace

double empirical_op_norm(const Symbol& sigma) {
    const int two_L = sigma.two_L;
    // Orthonormal coordinates v_{l,r,c} = sqrt(2l+1) fhat(l)_{rc}.
    std::vector<int> offset(static_cast<std::size_t>(two_L) + 2, 0);
    for (int two_l = 0; two_l <= two_L; ++two_l)
        offset[static_cast<std::size_t>(two_l) + 1] =
            offset[static_cast<std::size_t>(two_l)] + dim_of(two_l) * dim_of(two_l);
    const int dim_total = offset.back();

    const int out_two_L = two_L + sigma.x_two_L;
    const auto grid = std::make_shared<const QuadratureGrid>(quadrature_grid(2 * out_two_L));
    const Symbol moved = resample(sigma, grid);

    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim_total, dim_total);
    std::vector<Eigen::VectorXcd> columns(static_cast<std::size_t>(dim_total));
    parallel_for(static_cast<std::size_t>(dim_total), [&](std::size_t col) {
        // Locate (two_l, r, c) for this column.
        int two_l = 0;
        while (offset[static_cast<std::size_t>(two_l) + 1] <= static_cast<int>(col)) ++two_l;
        const int rest = static_cast<int>(col) - offset[static_cast<std::size_t>(two_l)];
        const int dim = dim_of(two_l);
        const int r = rest / dim;
        const int c = rest % dim;

        BandLimitedFunction f = BandLimitedFunction::zero(two_L);
        f.at(two_l)(r, c) = 1.0 / std::sqrt(static_cast<double>(dim));
        const BandLimitedFunction img = forward(op_apply(moved, f), *grid, two_L);

        Eigen::VectorXcd v(dim_total);
        for (int tl = 0; tl <= two_L; ++tl) {
            const int d = dim_of(tl);
            const double scale = std::sqrt(static_cast<double>(d));
            for (int rr = 0; rr < d; ++rr)
                for (int cc = 0; cc < d; ++cc)
                    v(offset[static_cast<std::size_t>(tl)] + rr * d + cc) =
                        scale * img.at(tl)(rr, cc);
        }
        columns[col] = v;
    });
    for (int col = 0; col < dim_total; ++col) op.col(col) = columns[static_cast<std::size_t>(col)];
    return op_norm(op);
}

L2Report l2_bound_estimate(const Symbol& sigma) {
    L2Report report;
    report.per_band.assign(static_cast<std::size_t>(sigma.two_L) + 1, 0.0);

    const auto betas = exponents_up_to(2);  // k = 2 > dim/2
    std::vector<Symbol> derived;
    derived.reserve(betas.size());
    for (const auto& beta : betas) derived.push_back(x_derivative(beta, sigma));

    for (int two_l = 0; two_l <= sigma.two_L; ++two_l) {
        double band_max = 0.0;
        for (const auto& d : derived)
            for (std::size_t j = 0; j < sigma.nodes(); ++j)
                band_max = std::max(band_max, op_norm(d.at(two_l, j)));
        report.per_band[static_cast<std::size_t>(two_l)] = band_max;
        report.certificate = std::max(report.certificate, band_max);
    }

    // Growth heuristic: slope of log c(l) vs log(1+l) over the upper half.
    const int lo = sigma.two_L / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (int two_l = lo; two_l <= sigma.two_L; ++two_l) {
        const double c = report.per_band[static_cast<std::size_t>(two_l)];
        if (c <= 0.0) continue;
        const double x = std::log1p(half(two_l));
        const double y = std::log(c);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count >= 2 && sxx * count - sx * sx > 1e-12) {
        const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
        report.certifiable = slope <= 0.1;
    }

    report.empirical_norm = empirical_op_norm(sigma);
    return report;
}

Symbol sobolev_reweight(const Symbol& sigma, double mu) {
    Symbol out = sigma;
    for (int two_l = 0; two_l <= sigma.two_L; ++two_l) {
        const double l = half(two_l);
        const double w = std::pow(1.0 + l * (l + 1.0), -mu / 2.0);
        for (auto& m : out.data[static_cast<std::size_t>(two_l)]) m *= w;
    }
    return out;
}

}  // namespace su2q
