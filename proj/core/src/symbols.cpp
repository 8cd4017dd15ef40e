#include "su2q/symbols.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "su2q/parallel.hpp"
#include "su2q/repr.hpp"

namespace su2q {

namespace {

void require_grid(const Symbol& s) {
    if (!s.grid) throw std::invalid_argument("Symbol: missing x grid");
}

void require_same_grid(const Symbol& a, const Symbol& b) {
    require_grid(a);
    require_grid(b);
    if (a.grid->size() != b.grid->size() ||
        a.grid->exactness_two_l != b.grid->exactness_two_l)
        throw std::invalid_argument("symbols sampled on different x grids");
}

double stencil_weight(int a, int b) {
    // sqrt(a/2 * b/2) for doubled-integer factors, 0 if either is negative.
    if (a <= 0 || b <= 0) return 0.0;
    return 0.5 * std::sqrt(static_cast<double>(a) * static_cast<double>(b));
}

}  // namespace

Symbol Symbol::zero(int two_L, int x_two_L, std::shared_ptr<const QuadratureGrid> grid) {
    if (!grid) throw std::invalid_argument("Symbol::zero: missing grid");
    if (grid->exactness_two_l < 2 * x_two_L)
        throw std::invalid_argument(
            "Symbol::zero: grid exactness " + std::to_string(grid->exactness_two_l) +
            " cannot certify x band " + std::to_string(x_two_L) + " (need >= " +
            std::to_string(2 * x_two_L) + ")");
    Symbol s;
    s.two_L = two_L;
    s.x_two_L = x_two_L;
    s.grid = std::move(grid);
    s.data.resize(static_cast<std::size_t>(two_L) + 1);
    for (int two_l = 0; two_l <= two_L; ++two_l)
        s.data[static_cast<std::size_t>(two_l)].assign(
            s.grid->size(), Eigen::MatrixXcd::Zero(dim_of(two_l), dim_of(two_l)));
    return s;
}

Symbol builtin_symbol(const std::string& name, int two_L,
                      std::shared_ptr<const QuadratureGrid> grid) {
    Symbol s = Symbol::zero(two_L, 0, std::move(grid));
    s.x_invariant = true;
    for (int two_l = 0; two_l <= two_L; ++two_l) {
        Eigen::MatrixXcd m;
        if (name == "identity") {
            m = Eigen::MatrixXcd::Identity(dim_of(two_l), dim_of(two_l));
        } else {
            m = multiplier(field_from_name(name), two_l);
        }
        for (auto& node_m : s.data[static_cast<std::size_t>(two_l)]) node_m = m;
    }
    return s;
}

Symbol multiplication_symbol(const BandLimitedFunction& phi, int two_L,
                             std::shared_ptr<const QuadratureGrid> grid) {
    Symbol s = Symbol::zero(two_L, phi.two_L, grid);
    const auto values = synthesize(phi, *s.grid);
    for (int two_l = 0; two_l <= two_L; ++two_l) {
        const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim_of(two_l), dim_of(two_l));
        for (std::size_t j = 0; j < s.nodes(); ++j)
            s.data[static_cast<std::size_t>(two_l)][j] = values[j] * id;
    }
    return s;
}

BandLimitedFunction q_function(char dir) {
    BandLimitedFunction q = BandLimitedFunction::zero(1);
    switch (dir) {
        case '+':  // t^{1/2}_{+-}
            q = BandLimitedFunction::basis_element(1, 1, -1, 1);
            break;
        case '-':  // t^{1/2}_{-+}
            q = BandLimitedFunction::basis_element(1, -1, 1, 1);
            break;
        case '0':  // t_{--} - t_{++}
            q = BandLimitedFunction::basis_element(1, -1, -1, 1) +
                std::complex<double>(-1.0) * BandLimitedFunction::basis_element(1, 1, 1, 1);
            break;
        default:
            throw std::invalid_argument("q_function: dir must be '+', '-' or '0'");
    }
    return q;
}

DiffDir diff_dir_from_name(const std::string& name) {
    if (name == "plus") return DiffDir::plus;
    if (name == "minus") return DiffDir::minus;
    if (name == "zero") return DiffDir::zero;
    if (name == "bar0" || name == "bar_zero") return DiffDir::bar_zero;
    throw std::invalid_argument("unknown difference direction: " + name);
}

Symbol difference(DiffDir dir, const Symbol& sigma) {
    require_grid(sigma);
    if (sigma.two_L < 1)
        throw std::invalid_argument("difference: symbol band must be >= 1/2");

    Symbol out = Symbol::zero(sigma.two_L - 1, sigma.x_two_L, sigma.grid);
    out.x_invariant = sigma.x_invariant;

    // Entry of sigma at (doubled) labels, zero outside the stored band.
    auto leg = [&sigma](int two_l, std::size_t j, int two_r, int two_c) -> std::complex<double> {
        if (two_l < 0 || two_l > sigma.two_L) return 0.0;
        if (std::abs(two_r) > two_l || std::abs(two_c) > two_l) return 0.0;
        return sigma.at(two_l, j)(index_of(two_r, two_l), index_of(two_c, two_l));
    };

    parallel_for(sigma.nodes(), [&](std::size_t j) {
        for (int two_l = 0; two_l <= out.two_L; ++two_l) {
            const double inv = 1.0 / (static_cast<double>(two_l) + 1.0);  // 1/(2l+1)
            Eigen::MatrixXcd& m = out.at(two_l, j);
            for (int two_r = -two_l; two_r <= two_l; two_r += 2) {
                for (int two_c = -two_l; two_c <= two_l; two_c += 2) {
                    std::complex<double> v = 0.0;
                    switch (dir) {
                        case DiffDir::minus:
                            v = stencil_weight(two_l - two_c, two_l + two_r) *
                                    leg(two_l - 1, j, two_r - 1, two_c + 1) -
                                stencil_weight(two_l + two_c + 2, two_l - two_r + 2) *
                                    leg(two_l + 1, j, two_r - 1, two_c + 1);
                            break;
                        case DiffDir::plus:
                            v = stencil_weight(two_l + two_c, two_l - two_r) *
                                    leg(two_l - 1, j, two_r + 1, two_c - 1) -
                                stencil_weight(two_l - two_c + 2, two_l + two_r + 2) *
                                    leg(two_l + 1, j, two_r + 1, two_c - 1);
                            break;
                        case DiffDir::zero:
                            v = stencil_weight(two_l - two_c, two_l - two_r) *
                                    leg(two_l - 1, j, two_r + 1, two_c + 1) +
                                stencil_weight(two_l + two_c + 2, two_l + two_r + 2) *
                                    leg(two_l + 1, j, two_r + 1, two_c + 1) -
                                stencil_weight(two_l + two_c, two_l + two_r) *
                                    leg(two_l - 1, j, two_r - 1, two_c - 1) -
                                stencil_weight(two_l - two_c + 2, two_l - two_r + 2) *
                                    leg(two_l + 1, j, two_r - 1, two_c - 1);
                            break;
                        case DiffDir::bar_zero:
                            v = 0.5 * (stencil_weight(two_l - two_c, two_l - two_r) *
                                           leg(two_l - 1, j, two_r + 1, two_c + 1) +
                                       stencil_weight(two_l + two_c + 2, two_l + two_r + 2) *
                                           leg(two_l + 1, j, two_r + 1, two_c + 1) +
                                       stencil_weight(two_l + two_c, two_l + two_r) *
                                           leg(two_l - 1, j, two_r - 1, two_c - 1) +
                                       stencil_weight(two_l - two_c + 2, two_l - two_r + 2) *
                                           leg(two_l + 1, j, two_r - 1, two_c - 1));
                            break;
                    }
                    m(index_of(two_r, two_l), index_of(two_c, two_l)) = inv * v;
                }
            }
        }
    });
    return out;
}

Symbol difference_power(const Exponent3& alpha, const Symbol& sigma) {
    Symbol out = sigma;
    for (int k = 0; k < alpha.plus; ++k) out = difference(DiffDir::plus, out);
    for (int k = 0; k < alpha.minus; ++k) out = difference(DiffDir::minus, out);
    for (int k = 0; k < alpha.zero; ++k) out = difference(DiffDir::zero, out);
    return out;
}

Symbol difference_by_function(const BandLimitedFunction& q, const Symbol& sigma,
                              const QuadratureGrid* work_grid) {
    require_grid(sigma);
    const int two_q = q.two_L;
    if (sigma.two_L < two_q)
        throw std::invalid_argument("difference_by_function: symbol band below q band");

    const int needed = 2 * (sigma.two_L + two_q);
    QuadratureGrid own;
    if (work_grid) {
        if (work_grid->exactness_two_l < needed)
            throw std::invalid_argument(
                "difference_by_function: work grid exactness " +
                std::to_string(work_grid->exactness_two_l) + " below required " +
                std::to_string(needed));
    } else {
        own = quadrature_grid(needed);
        work_grid = &own;
    }

    if (std::abs(inverse(q, GroupElement::identity())) > 1e-12)
        std::cerr << "su2q: difference_by_function: q(e) != 0; "
                     "result is not a difference operator in the usual sense\n";

    const GridTransform work(std::make_shared<QuadratureGrid>(*work_grid), sigma.two_L);
    const auto q_samples = work.synthesize(q);

    Symbol out = Symbol::zero(sigma.two_L - two_q, sigma.x_two_L, sigma.grid);
    out.x_invariant = sigma.x_invariant;

    parallel_for(sigma.nodes(), [&](std::size_t j) {
        // Kernel of sigma(x_j, .): s(y) = sum_l (2l+1) Tr(sigma(x_j, l) t^l(y)).
        BandLimitedFunction kernel_coeffs = BandLimitedFunction::zero(sigma.two_L);
        for (int two_l = 0; two_l <= sigma.two_L; ++two_l)
            kernel_coeffs.at(two_l) = sigma.at(two_l, j);
        auto prod = work.synthesize(kernel_coeffs);
        for (std::size_t y = 0; y < prod.size(); ++y) prod[y] *= q_samples[y];
        const BandLimitedFunction res = work.analyze(prod, out.two_L);
        for (int two_l = 0; two_l <= out.two_L; ++two_l) out.at(two_l, j) = res.at(two_l);
    });
    return out;
}

Symbol x_derivative(const Exponent3& beta, const Symbol& sigma) {
    require_grid(sigma);
    if (beta.order() == 0) return sigma;

    Symbol out = Symbol::zero(sigma.two_L, sigma.x_two_L, sigma.grid);
    if (sigma.x_invariant) {
        out.x_invariant = true;  // derivatives of constants vanish
        return out;
    }

    const GridTransform xf(sigma.grid, sigma.x_two_L);

    // Block-diagonal derivative action on stacked coefficients:
    // ghat(l') -> M0^z M+^p M-^m ghat(l').
    const int ncoef = stack_size(sigma.x_two_L);
    Eigen::MatrixXcd deriv = Eigen::MatrixXcd::Zero(ncoef, ncoef);
    for (int two_l = 0; two_l <= sigma.x_two_L; ++two_l) {
        const int dim = dim_of(two_l);
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
        for (int k = 0; k < beta.minus; ++k) m = multiplier(Field::partial_minus, two_l) * m;
        for (int k = 0; k < beta.plus; ++k) m = multiplier(Field::partial_plus, two_l) * m;
        for (int k = 0; k < beta.zero; ++k) m = multiplier(Field::partial_zero, two_l) * m;
        // Left multiplication mixes rows within each column of ghat(l').
        const int base = stack_offset(two_l);
        for (int c = 0; c < dim; ++c)
            for (int r = 0; r < dim; ++r)
                for (int r2 = 0; r2 < dim; ++r2)
                    deriv(base + r * dim + c, base + r2 * dim + c) = m(r, r2);
    }
    const Eigen::MatrixXcd apply = xf.synthesis_matrix(sigma.x_two_L) * deriv *
                                   xf.analysis_matrix(sigma.x_two_L);

    parallel_for(static_cast<std::size_t>(sigma.two_L) + 1, [&](std::size_t k) {
        const int two_l = static_cast<int>(k);
        const int dim = dim_of(two_l);
        const auto n = static_cast<Eigen::Index>(sigma.nodes());
        Eigen::VectorXcd v(n);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) {
                for (Eigen::Index j = 0; j < n; ++j)
                    v(j) = sigma.at(two_l, static_cast<std::size_t>(j))(r, c);
                const Eigen::VectorXcd w = apply * v;
                for (Eigen::Index j = 0; j < n; ++j)
                    out.at(two_l, static_cast<std::size_t>(j))(r, c) = w(j);
            }
    });
    return out;
}

Symbol pushforward(const Symbol& sigma, const GroupElement& u) {
    require_grid(sigma);
    Symbol out = Symbol::zero(sigma.two_L, sigma.x_two_L, sigma.grid);
    out.x_invariant = sigma.x_invariant;

    // Evaluation of the band-limited x-dependence at the translated nodes
    // x_j u^{-1}, as a nodes x nodes map.
    const GridTransform xf(sigma.grid, sigma.x_two_L);
    const auto n = static_cast<Eigen::Index>(sigma.nodes());
    Eigen::MatrixXcd translated_synthesis(n, stack_size(sigma.x_two_L));
    const GroupElement uinv = u.inverse();
    for (Eigen::Index j = 0; j < n; ++j) {
        const GroupElement y = multiply(sigma.grid->nodes[static_cast<std::size_t>(j)], uinv);
        for (int two_l = 0; two_l <= sigma.x_two_L; ++two_l) {
            const Eigen::MatrixXcd t = wigner(y, two_l);
            const int dim = dim_of(two_l);
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c)
                    translated_synthesis(j, stack_offset(two_l) + r * dim + c) =
                        static_cast<double>(dim) * t(c, r);
        }
    }
    const Eigen::MatrixXcd translate = translated_synthesis * xf.analysis_matrix(sigma.x_two_L);

    parallel_for(static_cast<std::size_t>(sigma.two_L) + 1, [&](std::size_t k) {
        const int two_l = static_cast<int>(k);
        const int dim = dim_of(two_l);
        const Eigen::MatrixXcd tu = wigner(u, two_l);
        std::vector<Eigen::MatrixXcd> shifted(static_cast<std::size_t>(n),
                                              Eigen::MatrixXcd::Zero(dim, dim));
        Eigen::VectorXcd v(n);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) {
                for (Eigen::Index j = 0; j < n; ++j)
                    v(j) = sigma.at(two_l, static_cast<std::size_t>(j))(r, c);
                const Eigen::VectorXcd w = translate * v;
                for (Eigen::Index j = 0; j < n; ++j) shifted[static_cast<std::size_t>(j)](r, c) = w(j);
            }
        for (Eigen::Index j = 0; j < n; ++j)
            out.at(two_l, static_cast<std::size_t>(j)) = tu.adjoint() * shifted[static_cast<std::size_t>(j)] * tu;
    });
    return out;
}

Symbol resample(const Symbol& sigma, std::shared_ptr<const QuadratureGrid> target) {
    require_grid(sigma);
    Symbol out = Symbol::zero(sigma.two_L, sigma.x_two_L, std::move(target));
    out.x_invariant = sigma.x_invariant;
    if (sigma.x_invariant) {
        for (int two_l = 0; two_l <= sigma.two_L; ++two_l)
            for (std::size_t j = 0; j < out.nodes(); ++j) out.at(two_l, j) = sigma.at(two_l, 0);
        return out;
    }

    const GridTransform xf(sigma.grid, sigma.x_two_L);
    const GridTransform target_xf(out.grid, sigma.x_two_L);
    const Eigen::MatrixXcd map =
        target_xf.synthesis_matrix(sigma.x_two_L) * xf.analysis_matrix(sigma.x_two_L);
    const auto n_out = static_cast<Eigen::Index>(out.nodes());

    const auto n_in = static_cast<Eigen::Index>(sigma.nodes());
    parallel_for(static_cast<std::size_t>(sigma.two_L) + 1, [&](std::size_t k) {
        const int two_l = static_cast<int>(k);
        const int dim = dim_of(two_l);
        Eigen::VectorXcd v(n_in);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) {
                for (Eigen::Index j = 0; j < n_in; ++j)
                    v(j) = sigma.at(two_l, static_cast<std::size_t>(j))(r, c);
                const Eigen::VectorXcd w = map * v;
                for (Eigen::Index j = 0; j < n_out; ++j)
                    out.at(two_l, static_cast<std::size_t>(j))(r, c) = w(j);
            }
    });
    return out;
}

std::pair<Symbol, Symbol> leibniz_check_data(const Exponent3& alpha, const Symbol& a) {
    require_grid(a);
    const Symbol product = matmul(a, builtin_symbol("partial_zero", a.two_L, a.grid));
    const Symbol lhs = difference_power(alpha, product);

    // Weight (col - alpha_+/2 + alpha_-/2) entrywise on Delta^alpha a.
    const Symbol da = difference_power(alpha, a);
    Symbol rhs = Symbol::zero(da.two_L, da.x_two_L, da.grid);
    rhs.x_invariant = da.x_invariant;
    for (int two_l = 0; two_l <= da.two_L; ++two_l) {
        for (std::size_t j = 0; j < da.nodes(); ++j) {
            Eigen::MatrixXcd m = da.at(two_l, j);
            for (int c = 0; c < dim_of(two_l); ++c) {
                const double weight = half(label_of(c, two_l) - alpha.plus + alpha.minus);
                m.col(c) *= weight;
            }
            rhs.at(two_l, j) = m;
        }
    }
    if (alpha.zero > 0) {
        Exponent3 reduced = alpha;
        reduced.zero -= 1;
        const Symbol tail =
            difference(DiffDir::bar_zero, difference_power(reduced, a));
        rhs = add(rhs, scale(static_cast<double>(alpha.zero), tail));
    }
    return {lhs, rhs};
}

Symbol add(const Symbol& a, const Symbol& b) {
    require_same_grid(a, b);
    const int two_L = std::min(a.two_L, b.two_L);
    Symbol out = Symbol::zero(two_L, std::max(a.x_two_L, b.x_two_L), a.grid);
    out.x_invariant = a.x_invariant && b.x_invariant;
    for (int two_l = 0; two_l <= two_L; ++two_l)
        for (std::size_t j = 0; j < out.nodes(); ++j)
            out.at(two_l, j) = a.at(two_l, j) + b.at(two_l, j);
    return out;
}

Symbol scale(std::complex<double> c, const Symbol& a) {
    Symbol out = a;
    for (auto& per_l : out.data)
        for (auto& m : per_l) m *= c;
    return out;
}

Symbol matmul(const Symbol& a, const Symbol& b) {
    require_same_grid(a, b);
    const int two_L = std::min(a.two_L, b.two_L);
    const int x_band = a.x_two_L + b.x_two_L;
    Symbol out = Symbol::zero(two_L, x_band, a.grid);
    out.x_invariant = a.x_invariant && b.x_invariant;
    for (int two_l = 0; two_l <= two_L; ++two_l)
        for (std::size_t j = 0; j < out.nodes(); ++j)
            out.at(two_l, j) = a.at(two_l, j) * b.at(two_l, j);
    return out;
}

Symbol adjoint_pointwise(const Symbol& a) {
    Symbol out = a;
    for (auto& per_l : out.data)
        for (auto& m : per_l) m = m.adjoint().eval();
    return out;
}

double max_abs_diff(const Symbol& a, const Symbol& b, int band_two_l) {
    require_same_grid(a, b);
    const int two_L = std::min({band_two_l, a.two_L, b.two_L});
    double worst = 0.0;
    for (int two_l = 0; two_l <= two_L; ++two_l)
        for (std::size_t j = 0; j < a.nodes(); ++j)
            worst = std::max(worst,
                             (a.at(two_l, j) - b.at(two_l, j)).cwiseAbs().maxCoeff());
    return worst;
}

double max_abs(const Symbol& a, int band_two_l) {
    const int two_L = std::min(band_two_l, a.two_L);
    double worst = 0.0;
    for (int two_l = 0; two_l <= two_L; ++two_l)
        for (std::size_t j = 0; j < a.nodes(); ++j)
            worst = std::max(worst, a.at(two_l, j).cwiseAbs().maxCoeff());
    return worst;
}

double x_band_violation(const Symbol& sigma) {
    require_grid(sigma);
    const GridTransform xf(sigma.grid, sigma.x_two_L);
    const Eigen::MatrixXcd round_trip =
        xf.synthesis_matrix(sigma.x_two_L) * xf.analysis_matrix(sigma.x_two_L);
    const auto n = static_cast<Eigen::Index>(sigma.nodes());
    double worst = 0.0;
    for (int two_l = 0; two_l <= sigma.two_L; ++two_l) {
        const int dim = dim_of(two_l);
        Eigen::VectorXcd v(n);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) {
                for (Eigen::Index j = 0; j < n; ++j)
                    v(j) = sigma.at(two_l, static_cast<std::size_t>(j))(r, c);
                worst = std::max(worst, (round_trip * v - v).cwiseAbs().maxCoeff());
            }
    }
    return worst;
}

}  // namespace su2q
