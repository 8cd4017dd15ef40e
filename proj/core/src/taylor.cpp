#include "su2q/taylor.hpp"

#include <Eigen/LU>

#include <stdexcept>

#include "su2q/diffops.hpp"

namespace su2q {

namespace {

// (d0^z d+^p d-^m g)(e) = sum_l (2l+1) Tr(M0^z M+^p M-^m ghat(l)).
std::complex<double> ordered_monomial_at_identity(const Exponent3& beta,
                                                  const BandLimitedFunction& g) {
    std::complex<double> sum = 0.0;
    for (int two_l = 0; two_l <= g.two_L; ++two_l) {
        const int dim = dim_of(two_l);
        Eigen::MatrixXcd m = g.at(two_l);
        for (int k = 0; k < beta.minus; ++k) m = multiplier(Field::partial_minus, two_l) * m;
        for (int k = 0; k < beta.plus; ++k) m = multiplier(Field::partial_plus, two_l) * m;
        for (int k = 0; k < beta.zero; ++k) m = multiplier(Field::partial_zero, two_l) * m;
        sum += static_cast<double>(dim) * m.trace();
    }
    return sum;
}

BandLimitedFunction product_on_grid(const QuadratureGrid& grid, const BandLimitedFunction& f,
                                    const BandLimitedFunction& g, int out_two_L) {
    const auto fs = synthesize(f, grid);
    const auto gs = synthesize(g, grid);
    std::vector<std::complex<double>> prod(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) prod[j] = fs[j] * gs[j];
    return forward(prod, grid, out_two_L);
}

}  // namespace

int TaylorBasis::index_of(const Exponent3& a) const {
    for (std::size_t i = 0; i < alphas.size(); ++i)
        if (alphas[i] == a) return static_cast<int>(i);
    throw std::invalid_argument("TaylorBasis: exponent beyond stored order");
}

TaylorBasis taylor_basis(int N, const QuadratureGrid& grid) {
    if (N < 0) throw std::invalid_argument("taylor_basis: order must be >= 0");
    if (grid.exactness_two_l < 2 * N)
        throw std::invalid_argument("taylor_basis: grid exactness " +
                                    std::to_string(grid.exactness_two_l) +
                                    " below required " + std::to_string(2 * N));

    TaylorBasis basis;
    basis.order = N;
    basis.alphas = exponents_up_to(N);
    const std::size_t count = basis.alphas.size();

    // Monomials by degree: q_alpha = q_(alpha - e) * q_e for the first
    // nonzero component e.
    basis.monomials.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Exponent3& a = basis.alphas[i];
        if (a.order() == 0) {
            BandLimitedFunction one = BandLimitedFunction::zero(0);
            one.at(0)(0, 0) = 1.0;
            basis.monomials[i] = one;
            continue;
        }
        Exponent3 rest = a;
        char dir;
        if (a.plus > 0) {
            rest.plus -= 1;
            dir = '+';
        } else if (a.minus > 0) {
            rest.minus -= 1;
            dir = '-';
        } else {
            rest.zero -= 1;
            dir = '0';
        }
        const BandLimitedFunction& lower =
            basis.monomials[static_cast<std::size_t>(basis.index_of(rest))];
        basis.monomials[i] = product_on_grid(grid, lower, q_function(dir), a.order());
    }

    // Biorthogonality matrix M[b][a] = (d^b q_alpha^inv)(e).
    Eigen::MatrixXcd M(count, count);
    for (std::size_t ai = 0; ai < count; ++ai) {
        const BandLimitedFunction flipped = compose_with_inverse(basis.monomials[ai]);
        for (std::size_t bi = 0; bi < count; ++bi)
            M(static_cast<Eigen::Index>(bi), static_cast<Eigen::Index>(ai)) =
                ordered_monomial_at_identity(basis.alphas[bi], flipped);
    }

    Eigen::FullPivLU<Eigen::MatrixXcd> lu(M.transpose());
    if (!lu.isInvertible())
        throw std::runtime_error("taylor_basis: biorthogonality system is singular");

    basis.dual.assign(count, std::vector<std::complex<double>>(count, 0.0));
    for (std::size_t ai = 0; ai < count; ++ai) {
        Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(count));
        rhs(static_cast<Eigen::Index>(ai)) = factorial_of(basis.alphas[ai]);
        const Eigen::VectorXcd c = lu.solve(rhs);
        for (std::size_t bi = 0; bi < count; ++bi)
            basis.dual[ai][bi] = c(static_cast<Eigen::Index>(bi));
    }
    return basis;
}

std::complex<double> dual_derivative_at_identity(const TaylorBasis& basis,
                                                 const Exponent3& alpha,
                                                 const BandLimitedFunction& u) {
    const auto ai = static_cast<std::size_t>(basis.index_of(alpha));
    std::complex<double> sum = 0.0;
    for (std::size_t bi = 0; bi < basis.alphas.size(); ++bi) {
        const std::complex<double> c = basis.dual[ai][bi];
        if (c == std::complex<double>(0.0, 0.0)) continue;
        sum += c * ordered_monomial_at_identity(basis.alphas[bi], u);
    }
    return sum;
}

Symbol dual_derivative(const TaylorBasis& basis, const Exponent3& alpha, const Symbol& sigma) {
    const auto ai = static_cast<std::size_t>(basis.index_of(alpha));
    Symbol out = Symbol::zero(sigma.two_L, sigma.x_two_L, sigma.grid);
    out.x_invariant = sigma.x_invariant;
    for (std::size_t bi = 0; bi < basis.alphas.size(); ++bi) {
        const std::complex<double> c = basis.dual[ai][bi];
        if (c == std::complex<double>(0.0, 0.0)) continue;
        out = add(out, scale(c, x_derivative(basis.alphas[bi], sigma)));
    }
    return out;
}

std::complex<double> taylor_polynomial(const TaylorBasis& basis, const BandLimitedFunction& u,
                                       int N, const GroupElement& x) {
    if (N > basis.order) throw std::invalid_argument("taylor_polynomial: N beyond basis order");
    const GroupElement xinv = x.inverse();
    std::complex<double> sum = 0.0;
    for (std::size_t ai = 0; ai < basis.alphas.size(); ++ai) {
        const Exponent3& a = basis.alphas[ai];
        if (a.order() > N) continue;
        sum += inverse(basis.monomials[ai], xinv) *
               dual_derivative_at_identity(basis, a, u) / factorial_of(a);
    }
    return sum;
}

}  // namespace su2q
