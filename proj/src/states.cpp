#include "wignerlab/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wignerlab {

namespace {

ComplexMatrix outer(const std::vector<Complex>& v) {
    ComplexMatrix m(static_cast<int>(v.size()));
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) m(r, c) = v[r] * std::conj(v[c]);
    return m;
}

double norm2(const std::vector<Complex>& v) {
    double s = 0;
    for (const Complex& z : v) s += std::norm(z);
    return s;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m) {
    if (m.dim() != 2 && m.dim() != 4)
        throw std::invalid_argument("density matrix: dimension must be 2 or 4, got " + std::to_string(m.dim()));
    if (!m.all_finite()) throw std::invalid_argument("density matrix: entries must be finite");

    const double herm = frobenius_norm(m - adjoint(m));
    if (herm > 1e-10)
        throw std::invalid_argument("density matrix: hermiticity residual " + fmt(herm) + " exceeds 1e-10");
    const double tr_res = std::abs(trace(m) - Complex(1, 0));
    if (tr_res > 1e-10)
        throw std::invalid_argument("density matrix: trace residual " + fmt(tr_res) + " exceeds 1e-10");
    const double min_eig = hermitian_eigenvalues(m).eigenvalues.front();
    if (min_eig < -1e-9)
        throw std::invalid_argument("density matrix: minimum eigenvalue " + fmt(min_eig) + " is below -1e-9");

    return DensityMatrix(m, herm, tr_res, min_eig);
}

DensityMatrix bell(BellKind kind) {
    const double r = 1.0 / std::sqrt(2.0);
    std::vector<Complex> v(4, 0.0);
    switch (kind) {
        case BellKind::phi_plus:  v[0] = r; v[3] = r;  break;
        case BellKind::phi_minus: v[0] = r; v[3] = -r; break;
        case BellKind::psi_plus:  v[1] = r; v[2] = r;  break;
        case BellKind::psi_minus: v[1] = r; v[2] = -r; break;
    }
    return DensityMatrix::from_matrix(outer(v));
}

DensityMatrix werner(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("werner: parameter x must lie in [0,1], got " + fmt(x));
    const ComplexMatrix singlet = bell(BellKind::psi_minus).matrix();
    return DensityMatrix::from_matrix(x * singlet + (0.25 * (1.0 - x)) * ComplexMatrix::identity(4));
}

DensityMatrix coherent(Complex xi) {
    if (!std::isfinite(xi.real()) || !std::isfinite(xi.imag()))
        throw std::invalid_argument("coherent: parameter must be finite");
    const double n = std::sqrt(1.0 + std::norm(xi));
    return DensityMatrix::from_matrix(outer({1.0 / n, xi / n}));
}

DensityMatrix maximally_mixed(int dim) {
    return DensityMatrix::from_matrix((1.0 / dim) * ComplexMatrix::identity(dim));
}

DensityMatrix pure_state(const std::vector<Complex>& amplitudes) {
    if (amplitudes.size() != 2 && amplitudes.size() != 4)
        throw std::invalid_argument("pure_state: amplitude vector must have length 2 or 4");
    if (std::abs(norm2(amplitudes) - 1.0) > 1e-10)
        throw std::invalid_argument("pure_state: amplitude vector is not normalized (norm^2 = " +
                                    fmt(norm2(amplitudes)) + ")");
    return DensityMatrix::from_matrix(outer(amplitudes));
}

DensityMatrix product(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != 2 || b.dim() != 2)
        throw std::invalid_argument("product: both factors must be one-qubit states");
    return DensityMatrix::from_matrix(tensor(a.matrix(), b.matrix()));
}

DensityMatrix mixture(const std::vector<double>& weights, const std::vector<DensityMatrix>& components) {
    if (weights.empty() || weights.size() != components.size())
        throw std::invalid_argument("mixture: weights and components must be nonempty and equal in length");
    double sum = 0;
    for (double w : weights) {
        if (!(w >= 0)) throw std::invalid_argument("mixture: weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-10)
        throw std::invalid_argument("mixture: weights must sum to 1 (got " + fmt(sum) + ")");
    const int dim = components.front().dim();
    ComplexMatrix acc = ComplexMatrix::zero(dim);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (components[i].dim() != dim) throw std::invalid_argument("mixture: component dimensions differ");
        acc = acc + weights[i] * components[i].matrix();
    }
    return DensityMatrix::from_matrix(acc);
}

namespace {

std::vector<Complex> haar_vector(Rng& rng, int dim) {
    std::vector<Complex> v(dim);
    for (Complex& z : v) z = rng.gaussian_complex();
    const double n = std::sqrt(norm2(v));
    for (Complex& z : v) z /= n;
    return v;
}

}  // namespace

DensityMatrix random_pure(Rng& rng, int dim) {
    if (dim != 2 && dim != 4) throw std::invalid_argument("random_pure: dim must be 2 or 4");
    return DensityMatrix::from_matrix(outer(haar_vector(rng, dim)));
}

DensityMatrix random_mixed(Rng& rng, int dim, int rank) {
    if (dim != 2 && dim != 4) throw std::invalid_argument("random_mixed: dim must be 2 or 4");
    if (rank < 1 || rank > dim)
        throw std::invalid_argument("random_mixed: rank must lie in [1, dim], got " + std::to_string(rank));
    std::vector<std::vector<Complex>> g(dim, std::vector<Complex>(rank));
    for (auto& row : g)
        for (Complex& z : row) z = rng.gaussian_complex();
    ComplexMatrix m(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            Complex s = 0;
            for (int k = 0; k < rank; ++k) s += g[r][k] * std::conj(g[c][k]);
            m(r, c) = s;
        }
    const double tr = trace(m).real();
    return DensityMatrix::from_matrix((1.0 / tr) * m);
}

DensityMatrix random_separable(Rng& rng, int k) {
    if (k < 1 || k > 16) throw std::invalid_argument("random_separable: k must lie in [1,16]");
    std::vector<double> w(k);
    double sum = 0;
    for (double& wi : w) {
        wi = rng.exponential();
        sum += wi;
    }
    ComplexMatrix acc = ComplexMatrix::zero(4);
    for (int i = 0; i < k; ++i) {
        const ComplexMatrix pa = outer(haar_vector(rng, 2));
        const ComplexMatrix pb = outer(haar_vector(rng, 2));
        acc = acc + (w[i] / sum) * tensor(pa, pb);
    }
    return DensityMatrix::from_matrix(acc);
}

namespace {

double named_param(const StateSpec::Named& n, const std::string& key) {
    auto it = n.params.find(key);
    if (it == n.params.end())
        throw std::invalid_argument("state." + n.name + ": missing parameter \"" + key + "\"");
    return it->second;
}

}  // namespace

DensityMatrix to_density(const StateSpec& spec) {
    struct Visitor {
        DensityMatrix operator()(const StateSpec::Named& n) const {
            if (n.name == "werner") return werner(named_param(n, "x"));
            if (n.name == "coherent") return coherent({named_param(n, "re"), named_param(n, "im")});
            if (n.name == "bell") {
                if (n.kind == "phi_plus") return bell(BellKind::phi_plus);
                if (n.kind == "phi_minus") return bell(BellKind::phi_minus);
                if (n.kind == "psi_plus") return bell(BellKind::psi_plus);
                if (n.kind == "psi_minus") return bell(BellKind::psi_minus);
                throw std::invalid_argument("state.bell.kind: unknown kind \"" + n.kind + "\"");
            }
            throw std::invalid_argument("state.named.name: unknown state \"" + n.name + "\"");
        }
        DensityMatrix operator()(const StateSpec::Matrix& m) const {
            return DensityMatrix::from_matrix(m.value);
        }
        DensityMatrix operator()(const StateSpec::Pure& p) const { return pure_state(p.amplitudes); }
        DensityMatrix operator()(const StateSpec::Mixture& m) const {
            std::vector<DensityMatrix> comps;
            comps.reserve(m.components.size());
            for (const StateSpec& s : m.components) comps.push_back(to_density(s));
            return mixture(m.weights, comps);
        }
        DensityMatrix operator()(const StateSpec::Product& p) const {
            if (p.factors.size() != 2)
                throw std::invalid_argument("state.product: exactly two factors required");
            return product(to_density(p.factors[0]), to_density(p.factors[1]));
        }
    };
    return std::visit(Visitor{}, spec.value);
}

}  // namespace wignerlab
