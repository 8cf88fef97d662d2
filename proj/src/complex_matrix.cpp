#include "wignerlab/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wignerlab {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {
    if (dim < 1) throw std::invalid_argument("ComplexMatrix: dimension must be >= 1");
}

ComplexMatrix::ComplexMatrix(int dim, std::initializer_list<Complex> entries) : ComplexMatrix(dim) {
    if (entries.size() != a_.size())
        throw std::invalid_argument("ComplexMatrix: entry count does not match dimension");
    std::copy(entries.begin(), entries.end(), a_.begin());
}

ComplexMatrix ComplexMatrix::zero(int dim) { return ComplexMatrix(dim); }

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const Complex& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m(2, {0.0, 1.0, 1.0, 0.0});
    return m;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m(2, {0.0, Complex(0, -1), Complex(0, 1), 0.0});
    return m;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m(2, {1.0, 0.0, 0.0, -1.0});
    return m;
}

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.dim() != b.dim())
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
}

}  // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "operator+");
    ComplexMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) + b(r, c);
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "operator-");
    ComplexMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) - b(r, c);
    return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out(r, c) = s * a(r, c);
    return out;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) { return Complex(s, 0) * a; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "matmul");
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex(0, 0)) continue;
            for (int c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
        }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out(r, c) = std::conj(a(c, r));
    return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out(r, c) = a(c, r);
    return out;
}

Complex trace(const ComplexMatrix& a) {
    Complex t = 0;
    for (int i = 0; i < a.dim(); ++i) t += a(i, i);
    return t;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int n = a.dim() * b.dim();
    if (n > 16) throw std::invalid_argument("tensor: result dimension exceeds the supported maximum of 16");
    ComplexMatrix out(n);
    for (int ra = 0; ra < a.dim(); ++ra)
        for (int ca = 0; ca < a.dim(); ++ca)
            for (int rb = 0; rb < b.dim(); ++rb)
                for (int cb = 0; cb < b.dim(); ++cb)
                    out(ra * b.dim() + rb, ca * b.dim() + cb) = a(ra, ca) * b(rb, cb);
    return out;
}

ComplexMatrix partial_transpose_second(const ComplexMatrix& a) {
    if (a.dim() != 4) throw std::invalid_argument("partial_transpose_second: requires a 4x4 matrix");
    ComplexMatrix out(4);
    for (int m = 0; m < 2; ++m)
        for (int mu = 0; mu < 2; ++mu)
            for (int n = 0; n < 2; ++n)
                for (int nu = 0; nu < 2; ++nu)
                    out(2 * m + mu, 2 * n + nu) = a(2 * m + nu, 2 * n + mu);
    return out;
}

Complex frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "frobenius_inner");
    Complex s = 0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) s += std::conj(a(r, c)) * b(r, c);
    return s;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

double offdiag_norm(const ComplexMatrix& a) {
    double s = 0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

bool is_hermitian(const ComplexMatrix& a) {
    return frobenius_norm(a - adjoint(a)) <= 1e-10 * frobenius_norm(a);
}

EigenResult hermitian_eigenvalues(const ComplexMatrix& a) {
    if (!is_hermitian(a)) throw std::invalid_argument("hermitian_eigenvalues: input is not Hermitian");
    const int n = a.dim();
    const double anorm = frobenius_norm(a);
    if (anorm == 0.0) return {std::vector<double>(n, 0.0), 0.0};

    const double threshold = 1e-13 * anorm;
    ComplexMatrix m = a;
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (offdiag_norm(m) < threshold) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = std::abs(m(p, q));
                if (apq <= threshold / (2.0 * n)) continue;
                const double phi = std::arg(m(p, q));
                const double tau = (m(q, q).real() - m(p, p).real()) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex se_pos = s * std::polar(1.0, phi);   // s e^{i phi}
                const Complex se_neg = std::conj(se_pos);
                // m <- R^dag m R with R the identity outside the (p,q) plane,
                // R(p,p)=R(q,q)=c, R(p,q)=s e^{i phi}, R(q,p)=-s e^{-i phi}.
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const Complex mkp = m(k, p), mkq = m(k, q);
                    m(k, p) = c * mkp - se_neg * mkq;
                    m(k, q) = se_pos * mkp + c * mkq;
                    m(p, k) = std::conj(m(k, p));
                    m(q, k) = std::conj(m(k, q));
                }
                const double app = m(p, p).real(), aqq = m(q, q).real();
                m(p, p) = app - t * apq;
                m(q, q) = aqq + t * apq;
                m(p, q) = 0.0;
                m(q, p) = 0.0;
            }
        }
    }

    EigenResult result;
    result.offdiag_residual = offdiag_norm(m);
    if (result.offdiag_residual >= threshold)
        throw std::runtime_error("hermitian_eigenvalues: no convergence after 100 sweeps, residual " +
                                 std::to_string(result.offdiag_residual));
    result.eigenvalues.resize(n);
    for (int i = 0; i < n; ++i) result.eigenvalues[i] = m(i, i).real();
    std::sort(result.eigenvalues.begin(), result.eigenvalues.end());
    return result;
}

bool is_psd(const ComplexMatrix& a, double tol) {
    return hermitian_eigenvalues(a).eigenvalues.front() >= -tol;
}

}  // namespace wignerlab
