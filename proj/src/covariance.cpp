#include "wignerlab/covariance.hpp"

#include <cmath>
#include <stdexcept>

namespace wignerlab {

namespace {

double expval(const ComplexMatrix& rho, const ComplexMatrix& op) {
    double s = 0;
    for (int r = 0; r < rho.dim(); ++r)
        for (int c = 0; c < rho.dim(); ++c) s += (rho(r, c) * op(c, r)).real();
    return s;
}

Axis third_axis(Axis i, Axis j) {
    return static_cast<Axis>(3 - static_cast<int>(i) - static_cast<int>(j));
}

}  // namespace

ComplexMatrix axis_operator(Axis i) {
    return 0.5 * (ComplexMatrix::identity(2) - pauli_for_axis(i));
}

const ComplexMatrix& pauli_for_axis(Axis i) {
    switch (i) {
        case Axis::vertical: return pauli_x();
        case Axis::diagonal: return pauli_y();
        case Axis::horizontal: return pauli_z();
    }
    throw std::invalid_argument("pauli_for_axis: bad axis");
}

int axis_symbol(Axis i, int q, int p) {
    switch (i) {
        case Axis::vertical: return p;
        case Axis::diagonal: return (q + p) & 1;
        case Axis::horizontal: return q;
    }
    throw std::invalid_argument("axis_symbol: bad axis");
}

ComplexMatrix anticom(Axis i, Axis j, AnticommutatorKind kind) {
    const ComplexMatrix xi = axis_operator(i);
    if (i == j) return xi;  // projector: both conventions reduce to xi_i
    const ComplexMatrix xj = axis_operator(j);
    if (kind == AnticommutatorKind::standard) return 0.5 * (matmul(xi, xj) + matmul(xj, xi));
    return 0.5 * (xi + xj - axis_operator(third_axis(i, j)));
}

Mat3 CovarianceReport::block_a() const {
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = v[i][j];
    return m;
}

Mat3 CovarianceReport::block_b() const {
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = v[i + 3][j + 3];
    return m;
}

Mat3 CovarianceReport::block_c() const {
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = v[i][j + 3];
    return m;
}

double CovarianceReport::trace_a() const { return v[0][0] + v[1][1] + v[2][2]; }
double CovarianceReport::trace_b() const { return v[3][3] + v[4][4] + v[5][5]; }
double CovarianceReport::trace_c() const { return v[0][3] + v[1][4] + v[2][5]; }

Mat3 covariance_single_of_matrix(const ComplexMatrix& m, AnticommutatorKind kind) {
    if (m.dim() != 2) throw std::invalid_argument("covariance_single: requires a one-qubit state");
    std::array<double, 3> mean{};
    for (int i = 0; i < 3; ++i) mean[i] = expval(m, axis_operator(static_cast<Axis>(i)));
    Mat3 v{};
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            const double second = expval(m, anticom(static_cast<Axis>(i), static_cast<Axis>(j), kind));
            v[i][j] = v[j][i] = second - mean[i] * mean[j];
        }
    return v;
}

Mat3 covariance_single(const DensityMatrix& rho, AnticommutatorKind kind) {
    return covariance_single_of_matrix(rho.matrix(), kind);
}

CovarianceReport covariance_two_of_matrix(const ComplexMatrix& m, AnticommutatorKind kind) {
    if (m.dim() != 4) throw std::invalid_argument("covariance_two: requires a two-qubit state");
    const ComplexMatrix id = ComplexMatrix::identity(2);

    std::array<ComplexMatrix, 3> xi;
    for (int i = 0; i < 3; ++i) xi[i] = axis_operator(static_cast<Axis>(i));

    std::array<double, 3> mean1{}, mean2{};
    for (int i = 0; i < 3; ++i) {
        mean1[i] = expval(m, tensor(xi[i], id));
        mean2[i] = expval(m, tensor(id, xi[i]));
    }

    CovarianceReport rep;
    rep.kind = kind;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            const ComplexMatrix ac = anticom(static_cast<Axis>(i), static_cast<Axis>(j), kind);
            rep.v[i][j] = rep.v[j][i] = expval(m, tensor(ac, id)) - mean1[i] * mean1[j];
            rep.v[i + 3][j + 3] = rep.v[j + 3][i + 3] = expval(m, tensor(id, ac)) - mean2[i] * mean2[j];
        }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double cij = expval(m, tensor(xi[i], xi[j])) - mean1[i] * mean2[j];
            rep.v[i][j + 3] = cij;
            rep.v[j + 3][i] = cij;
        }
    for (int l = 0; l < 3; ++l) {
        rep.chi1[l] = expval(m, tensor(pauli_for_axis(static_cast<Axis>(l)), id));
        rep.chi2[l] = expval(m, tensor(id, pauli_for_axis(static_cast<Axis>(l))));
    }
    return rep;
}

CovarianceReport covariance_two(const DensityMatrix& rho, AnticommutatorKind kind) {
    return covariance_two_of_matrix(rho.matrix(), kind);
}

CovarianceReport moments_from_wigner(const WignerGrid& w) {
    if (w.n_qubits != 2) throw std::invalid_argument("moments_from_wigner: requires a two-qubit grid");
    if (std::abs(w.sum() - 1.0) > 1e-8)
        throw std::invalid_argument("moments_from_wigner: grid is not normalized (sum = " +
                                    std::to_string(w.sum()) + ")");

    // first moments, second moments of symbol products, and cross moments,
    // all as plain grid sums
    std::array<double, 3> mean1{}, mean2{};
    Mat3 second1{}, second2{}, cross{};
    for (int q1 = 0; q1 < 2; ++q1)
        for (int q2 = 0; q2 < 2; ++q2)
            for (int p1 = 0; p1 < 2; ++p1)
                for (int p2 = 0; p2 < 2; ++p2) {
                    const double wv = w.values[8 * q1 + 4 * q2 + 2 * p1 + p2];
                    std::array<int, 3> s1{}, s2{};
                    for (int i = 0; i < 3; ++i) {
                        s1[i] = axis_symbol(static_cast<Axis>(i), q1, p1);
                        s2[i] = axis_symbol(static_cast<Axis>(i), q2, p2);
                    }
                    for (int i = 0; i < 3; ++i) {
                        mean1[i] += s1[i] * wv;
                        mean2[i] += s2[i] * wv;
                        for (int j = 0; j < 3; ++j) {
                            second1[i][j] += s1[i] * s1[j] * wv;
                            second2[i][j] += s2[i] * s2[j] * wv;
                            cross[i][j] += s1[i] * s2[j] * wv;
                        }
                    }
                }

    CovarianceReport rep;
    rep.kind = AnticommutatorKind::discrete;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            rep.v[i][j] = second1[i][j] - mean1[i] * mean1[j];
            rep.v[i + 3][j + 3] = second2[i][j] - mean2[i] * mean2[j];
            rep.v[i][j + 3] = cross[i][j] - mean1[i] * mean2[j];
            rep.v[j + 3][i] = rep.v[i][j + 3];
        }
    for (int l = 0; l < 3; ++l) {
        rep.chi1[l] = 1.0 - 2.0 * mean1[l];
        rep.chi2[l] = 1.0 - 2.0 * mean2[l];
    }
    return rep;
}

}  // namespace wignerlab
