#include "su2q/fourier.hpp"

#include <stdexcept>

#include "su2q/parallel.hpp"
#include "su2q/repr.hpp"

namespace su2q {

BandLimitedFunction BandLimitedFunction::zero(int two_L) {
    if (two_L < 0) throw std::invalid_argument("BandLimitedFunction: two_L must be >= 0");
    BandLimitedFunction f;
    f.two_L = two_L;
    f.coeffs.reserve(static_cast<std::size_t>(two_L) + 1);
    for (int two_l = 0; two_l <= two_L; ++two_l)
        f.coeffs.emplace_back(Eigen::MatrixXcd::Zero(dim_of(two_l), dim_of(two_l)));
    return f;
}

BandLimitedFunction BandLimitedFunction::basis_element(int two_l, int two_m, int two_n,
                                                       int two_L) {
    BandLimitedFunction f = zero(two_L);
    f.at(two_l)(index_of(two_n, two_l), index_of(two_m, two_l)) = 1.0 / dim_of(two_l);
    return f;
}

BandLimitedFunction operator+(const BandLimitedFunction& f, const BandLimitedFunction& g) {
    const int two_L = std::max(f.two_L, g.two_L);
    BandLimitedFunction h = BandLimitedFunction::zero(two_L);
    for (int two_l = 0; two_l <= two_L; ++two_l) {
        if (two_l <= f.two_L) h.at(two_l) += f.at(two_l);
        if (two_l <= g.two_L) h.at(two_l) += g.at(two_l);
    }
    return h;
}

BandLimitedFunction operator*(std::complex<double> c, const BandLimitedFunction& f) {
    BandLimitedFunction h = f;
    for (auto& m : h.coeffs) m *= c;
    return h;
}

BandLimitedFunction forward(const std::vector<std::complex<double>>& samples,
                            const QuadratureGrid& grid, int two_L) {
    if (samples.size() != grid.size())
        throw std::invalid_argument("forward: sample count does not match grid size");

    BandLimitedFunction f = BandLimitedFunction::zero(two_L);
    f.approximate = grid.exactness_two_l < 2 * two_L;

    // Per l the node sum runs in sequential grid order, so the result does
    // not depend on the thread count.
    parallel_for(static_cast<std::size_t>(two_L) + 1, [&](std::size_t k) {
        const int two_l = static_cast<int>(k);
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim_of(two_l), dim_of(two_l));
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const Eigen::MatrixXcd t = wigner(grid.nodes[j], two_l);
            // fhat(l)_{mn} = sum_j w_j f(x_j) conj(t^l_{nm}(x_j)) = (w f t^*)_{mn}.
            acc += (grid.weights[j] * samples[j]) * t.adjoint();
        }
        f.at(two_l) = acc;
    });
    return f;
}

std::complex<double> inverse(const BandLimitedFunction& f, const GroupElement& x) {
    std::complex<double> sum = 0.0;
    for (int two_l = 0; two_l <= f.two_L; ++two_l) {
        const Eigen::MatrixXcd t = wigner(x, two_l);
        sum += static_cast<double>(dim_of(two_l)) * (t * f.at(two_l)).trace();
    }
    return sum;
}

std::vector<std::complex<double>> synthesize(const BandLimitedFunction& f,
                                             const QuadratureGrid& grid) {
    std::vector<std::complex<double>> out(grid.size());
    parallel_for(grid.size(), [&](std::size_t j) { out[j] = inverse(f, grid.nodes[j]); });
    return out;
}

BandLimitedFunction convolve(const BandLimitedFunction& f, const BandLimitedFunction& g) {
    if (f.two_L != g.two_L)
        throw std::invalid_argument("convolve: band limits differ");
    BandLimitedFunction h = BandLimitedFunction::zero(f.two_L);
    for (int two_l = 0; two_l <= f.two_L; ++two_l) h.at(two_l) = g.at(two_l) * f.at(two_l);
    return h;
}

double plancherel_norm(const BandLimitedFunction& f) {
    double sum = 0.0;
    for (int two_l = 0; two_l <= f.two_L; ++two_l)
        sum += dim_of(two_l) * f.at(two_l).squaredNorm();
    return std::sqrt(sum);
}

BandLimitedFunction pointwise_product(const BandLimitedFunction& f,
                                      const BandLimitedFunction& g) {
    const int two_L = f.two_L + g.two_L;
    const QuadratureGrid grid = quadrature_grid(2 * two_L);
    const auto fs = synthesize(f, grid);
    const auto gs = synthesize(g, grid);
    std::vector<std::complex<double>> prod(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) prod[j] = fs[j] * gs[j];
    return forward(prod, grid, two_L);
}

BandLimitedFunction compose_with_inverse(const BandLimitedFunction& f) {
    // Resample at inverse nodes and re-analyze; inversion preserves the band.
    const QuadratureGrid grid = quadrature_grid(2 * f.two_L);
    std::vector<std::complex<double>> samples(grid.size());
    parallel_for(grid.size(), [&](std::size_t j) {
        samples[j] = inverse(f, grid.nodes[j].inverse());
    });
    return forward(samples, grid, f.two_L);
}

int stack_offset(int two_l) {
    int off = 0;
    for (int k = 0; k < two_l; ++k) off += dim_of(k) * dim_of(k);
    return off;
}

int stack_size(int two_L) { return stack_offset(two_L + 1); }

Eigen::VectorXcd stack(const BandLimitedFunction& f) {
    Eigen::VectorXcd v(stack_size(f.two_L));
    for (int two_l = 0; two_l <= f.two_L; ++two_l) {
        const int dim = dim_of(two_l);
        const int base = stack_offset(two_l);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) v(base + r * dim + c) = f.at(two_l)(r, c);
    }
    return v;
}

BandLimitedFunction unstack(const Eigen::VectorXcd& v, int two_L) {
    BandLimitedFunction f = BandLimitedFunction::zero(two_L);
    for (int two_l = 0; two_l <= two_L; ++two_l) {
        const int dim = dim_of(two_l);
        const int base = stack_offset(two_l);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) f.at(two_l)(r, c) = v(base + r * dim + c);
    }
    return f;
}

GridTransform::GridTransform(std::shared_ptr<const QuadratureGrid> grid, int table_two_L)
    : grid_(std::move(grid)), table_two_L_(table_two_L) {
    if (!grid_) throw std::invalid_argument("GridTransform: missing grid");
    table_.resize(static_cast<std::size_t>(table_two_L_) + 1);
    for (int two_l = 0; two_l <= table_two_L_; ++two_l)
        table_[static_cast<std::size_t>(two_l)].resize(grid_->size());
    parallel_for(grid_->size(), [&](std::size_t j) {
        for (int two_l = 0; two_l <= table_two_L_; ++two_l)
            table_[static_cast<std::size_t>(two_l)][j] = wigner(grid_->nodes[j], two_l);
    });
}

BandLimitedFunction GridTransform::analyze(const std::vector<std::complex<double>>& samples,
                                           int two_L) const {
    if (two_L > table_two_L_) throw std::invalid_argument("GridTransform::analyze: band beyond table");
    if (samples.size() != grid_->size())
        throw std::invalid_argument("GridTransform::analyze: sample count mismatch");
    BandLimitedFunction f = BandLimitedFunction::zero(two_L);
    f.approximate = grid_->exactness_two_l < 2 * two_L;
    parallel_for(static_cast<std::size_t>(two_L) + 1, [&](std::size_t k) {
        const int two_l = static_cast<int>(k);
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim_of(two_l), dim_of(two_l));
        for (std::size_t j = 0; j < grid_->size(); ++j)
            acc += (grid_->weights[j] * samples[j]) * sample(two_l, j).adjoint();
        f.at(two_l) = acc;
    });
    return f;
}

std::vector<std::complex<double>> GridTransform::synthesize(const BandLimitedFunction& f) const {
    if (f.two_L > table_two_L_)
        throw std::invalid_argument("GridTransform::synthesize: band beyond table");
    std::vector<std::complex<double>> out(grid_->size());
    parallel_for(grid_->size(), [&](std::size_t j) {
        std::complex<double> sum = 0.0;
        for (int two_l = 0; two_l <= f.two_L; ++two_l)
            sum += static_cast<double>(dim_of(two_l)) * (sample(two_l, j) * f.at(two_l)).trace();
        out[j] = sum;
    });
    return out;
}

Eigen::MatrixXcd GridTransform::analysis_matrix(int two_L) const {
    if (two_L > table_two_L_)
        throw std::invalid_argument("GridTransform::analysis_matrix: band beyond table");
    const auto n = static_cast<Eigen::Index>(grid_->size());
    Eigen::MatrixXcd a(stack_size(two_L), n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (int two_l = 0; two_l <= two_L; ++two_l) {
            const Eigen::MatrixXcd& t = sample(two_l, static_cast<std::size_t>(j));
            const int dim = dim_of(two_l);
            const int base = stack_offset(two_l);
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c)
                    a(base + r * dim + c, j) =
                        grid_->weights[static_cast<std::size_t>(j)] * std::conj(t(c, r));
        }
    }
    return a;
}

Eigen::MatrixXcd GridTransform::synthesis_matrix(int two_L) const {
    if (two_L > table_two_L_)
        throw std::invalid_argument("GridTransform::synthesis_matrix: band beyond table");
    const auto n = static_cast<Eigen::Index>(grid_->size());
    Eigen::MatrixXcd s(n, stack_size(two_L));
    for (Eigen::Index j = 0; j < n; ++j) {
        for (int two_l = 0; two_l <= two_L; ++two_l) {
            const Eigen::MatrixXcd& t = sample(two_l, static_cast<std::size_t>(j));
            const int dim = dim_of(two_l);
            const int base = stack_offset(two_l);
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c)
                    s(j, base + r * dim + c) = static_cast<double>(dim) * t(c, r);
        }
    }
    return s;
}

}  // namespace su2q
