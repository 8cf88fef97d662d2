#include "wignerlab/phase_space.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace wignerlab {

namespace {

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    // tr(a b) for Hermitian a, b; the imaginary part is rounding noise.
    double s = 0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) s += (a(r, c) * b(c, r)).real();
    return s;
}

const std::array<ComplexMatrix, 4>& phase_point_ops1() {
    static const std::array<ComplexMatrix, 4> ops = [] {
        std::array<ComplexMatrix, 4> out{ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2)};
        for (int q = 0; q < 2; ++q)
            for (int p = 0; p < 2; ++p) {
                const double sq = (q == 0) ? 1.0 : -1.0;
                const double sp = (p == 0) ? 1.0 : -1.0;
                out[2 * q + p] = 0.5 * (ComplexMatrix::identity(2) + sq * pauli_z() + sp * pauli_x() +
                                        (sq * sp) * pauli_y());
            }
        return out;
    }();
    return ops;
}

const std::array<ComplexMatrix, 16>& phase_point_ops2() {
    static const std::array<ComplexMatrix, 16> ops = [] {
        std::array<ComplexMatrix, 16> out;
        const auto& one = phase_point_ops1();
        for (int q1 = 0; q1 < 2; ++q1)
            for (int q2 = 0; q2 < 2; ++q2)
                for (int p1 = 0; p1 < 2; ++p1)
                    for (int p2 = 0; p2 < 2; ++p2)
                        out[8 * q1 + 4 * q2 + 2 * p1 + p2] = tensor(one[2 * q1 + p1], one[2 * q2 + p2]);
        return out;
    }();
    return ops;
}

const std::array<ComplexMatrix, 16>& shift_ops2() {
    static const std::array<ComplexMatrix, 16> ops = [] {
        std::array<ComplexMatrix, 16> out;
        for (int u1 = 0; u1 < 2; ++u1)
            for (int u2 = 0; u2 < 2; ++u2)
                for (int v1 = 0; v1 < 2; ++v1)
                    for (int v2 = 0; v2 < 2; ++v2)
                        out[8 * u1 + 4 * u2 + 2 * v1 + v2] = tensor(shift_operator(u1, v1), shift_operator(u2, v2));
        return out;
    }();
    return ops;
}

int grid_size(int n_qubits) { return n_qubits == 1 ? 4 : 16; }

void require_qubits(int n_qubits, const char* what) {
    if (n_qubits != 1 && n_qubits != 2)
        throw std::invalid_argument(std::string(what) + ": grids cover one or two qubits only");
}

}  // namespace

WignerGrid WignerGrid::zeros(int n_qubits) {
    require_qubits(n_qubits, "WignerGrid");
    return {n_qubits, std::vector<double>(grid_size(n_qubits), 0.0)};
}

double WignerGrid::sum() const {
    double s = 0;
    for (double v : values) s += v;
    return s;
}

double WignerGrid::min_value() const { return *std::min_element(values.begin(), values.end()); }
double WignerGrid::max_value() const { return *std::max_element(values.begin(), values.end()); }

CharGrid CharGrid::zeros(int n_qubits) {
    require_qubits(n_qubits, "CharGrid");
    return {n_qubits, std::vector<double>(grid_size(n_qubits), 0.0)};
}

double CharGrid::sum_of_squares() const {
    double s = 0;
    for (double v : values) s += v * v;
    return s;
}

const ComplexMatrix& shift_operator(int u, int v) {
    static const ComplexMatrix id = ComplexMatrix::identity(2);
    if (u == 0 && v == 0) return id;
    if (u == 1 && v == 0) return pauli_x();
    if (u == 0 && v == 1) return pauli_z();
    if (u == 1 && v == 1) return pauli_y();
    throw std::invalid_argument("shift_operator: indices must be bits");
}

ComplexMatrix phase_point_operator(const PhasePoint1& a) { return phase_point_ops1()[WignerGrid::index(a)]; }

ComplexMatrix phase_point_operator(const PhasePoint2& a) { return phase_point_ops2()[WignerGrid::index(a)]; }

WignerGrid wigner_transform(const ComplexMatrix& m) {
    if (m.dim() == 2) {
        WignerGrid w = WignerGrid::zeros(1);
        for (int i = 0; i < 4; ++i) w.values[i] = 0.5 * real_trace_product(m, phase_point_ops1()[i]);
        return w;
    }
    if (m.dim() == 4) {
        WignerGrid w = WignerGrid::zeros(2);
        for (int i = 0; i < 16; ++i) w.values[i] = 0.25 * real_trace_product(m, phase_point_ops2()[i]);
        return w;
    }
    throw std::invalid_argument("wigner_transform: matrix dimension must be 2 or 4");
}

WignerGrid wigner_of(const DensityMatrix& rho) { return wigner_transform(rho.matrix()); }

DensityReconstruction density_of(const WignerGrid& w) {
    require_qubits(w.n_qubits, "density_of");
    if (std::abs(w.sum() - 1.0) > 1e-8)
        throw std::invalid_argument("density_of: grid is not normalized (sum = " + std::to_string(w.sum()) + ")");
    const int dim = w.n_qubits == 1 ? 2 : 4;
    ComplexMatrix m = ComplexMatrix::zero(dim);
    for (std::size_t i = 0; i < w.values.size(); ++i) {
        const ComplexMatrix& op = (dim == 2) ? phase_point_ops1()[i] : phase_point_ops2()[i];
        m = m + w.values[i] * op;
    }
    DensityReconstruction out{m, 0.0, false};
    out.min_eigenvalue = hermitian_eigenvalues(m).eigenvalues.front();
    out.psd = out.min_eigenvalue >= -1e-9;
    return out;
}

CharGrid char_transform(const ComplexMatrix& m) {
    if (m.dim() == 2) {
        CharGrid chi = CharGrid::zeros(1);
        for (int u = 0; u < 2; ++u)
            for (int v = 0; v < 2; ++v) chi.values[2 * u + v] = real_trace_product(m, shift_operator(u, v));
        return chi;
    }
    if (m.dim() == 4) {
        CharGrid chi = CharGrid::zeros(2);
        for (int i = 0; i < 16; ++i) chi.values[i] = real_trace_product(m, shift_ops2()[i]);
        return chi;
    }
    throw std::invalid_argument("char_transform: matrix dimension must be 2 or 4");
}

CharGrid char_of(const DensityMatrix& rho) { return char_transform(rho.matrix()); }

namespace {

// Fourier kernel pairing a Wigner point with a characteristic index:
// (-1)^(p*u + q*v) per qubit. This is the pairing under which the grid of
// tr(rho S(u,v)) values and the Wigner grid are mutual transforms.
int kernel_sign1(int q, int p, int u, int v) { return ((p * u + q * v) & 1) ? -1 : 1; }

}  // namespace

WignerGrid wigner_from_char(const CharGrid& chi) {
    require_qubits(chi.n_qubits, "wigner_from_char");
    WignerGrid w = WignerGrid::zeros(chi.n_qubits);
    if (chi.n_qubits == 1) {
        for (int q = 0; q < 2; ++q)
            for (int p = 0; p < 2; ++p) {
                double s = 0;
                for (int u = 0; u < 2; ++u)
                    for (int v = 0; v < 2; ++v) s += kernel_sign1(q, p, u, v) * chi.values[2 * u + v];
                w.values[2 * q + p] = s / 4.0;
            }
        return w;
    }
    for (int q1 = 0; q1 < 2; ++q1)
        for (int q2 = 0; q2 < 2; ++q2)
            for (int p1 = 0; p1 < 2; ++p1)
                for (int p2 = 0; p2 < 2; ++p2) {
                    double s = 0;
                    for (int u1 = 0; u1 < 2; ++u1)
                        for (int u2 = 0; u2 < 2; ++u2)
                            for (int v1 = 0; v1 < 2; ++v1)
                                for (int v2 = 0; v2 < 2; ++v2)
                                    s += kernel_sign1(q1, p1, u1, v1) * kernel_sign1(q2, p2, u2, v2) *
                                         chi.values[8 * u1 + 4 * u2 + 2 * v1 + v2];
                    w.values[8 * q1 + 4 * q2 + 2 * p1 + p2] = s / 16.0;
                }
    return w;
}

CharGrid char_from_wigner(const WignerGrid& w) {
    require_qubits(w.n_qubits, "char_from_wigner");
    CharGrid chi = CharGrid::zeros(w.n_qubits);
    if (w.n_qubits == 1) {
        for (int u = 0; u < 2; ++u)
            for (int v = 0; v < 2; ++v) {
                double s = 0;
                for (int q = 0; q < 2; ++q)
                    for (int p = 0; p < 2; ++p) s += kernel_sign1(q, p, u, v) * w.values[2 * q + p];
                chi.values[2 * u + v] = s;
            }
        return chi;
    }
    for (int u1 = 0; u1 < 2; ++u1)
        for (int u2 = 0; u2 < 2; ++u2)
            for (int v1 = 0; v1 < 2; ++v1)
                for (int v2 = 0; v2 < 2; ++v2) {
                    double s = 0;
                    for (int q1 = 0; q1 < 2; ++q1)
                        for (int q2 = 0; q2 < 2; ++q2)
                            for (int p1 = 0; p1 < 2; ++p1)
                                for (int p2 = 0; p2 < 2; ++p2)
                                    s += kernel_sign1(q1, p1, u1, v1) * kernel_sign1(q2, p2, u2, v2) *
                                         w.values[8 * q1 + 4 * q2 + 2 * p1 + p2];
                    chi.values[8 * u1 + 4 * u2 + 2 * v1 + v2] = s;
                }
    return chi;
}

WignerGrid translate(const WignerGrid& w, QubitShift s) {
    if (w.n_qubits != 1) throw std::invalid_argument("translate: one shift given for a two-qubit grid");
    WignerGrid out = WignerGrid::zeros(1);
    for (int q = 0; q < 2; ++q)
        for (int p = 0; p < 2; ++p) out.values[2 * q + p] = w.values[2 * ((q + s.a) & 1) + ((p + s.b) & 1)];
    return out;
}

WignerGrid translate(const WignerGrid& w, QubitShift s1, QubitShift s2) {
    if (w.n_qubits != 2) throw std::invalid_argument("translate: two shifts given for a one-qubit grid");
    WignerGrid out = WignerGrid::zeros(2);
    for (int q1 = 0; q1 < 2; ++q1)
        for (int q2 = 0; q2 < 2; ++q2)
            for (int p1 = 0; p1 < 2; ++p1)
                for (int p2 = 0; p2 < 2; ++p2)
                    out.values[8 * q1 + 4 * q2 + 2 * p1 + p2] =
                        w.values[8 * ((q1 + s1.a) & 1) + 4 * ((q2 + s2.a) & 1) + 2 * ((p1 + s1.b) & 1) +
                                 ((p2 + s2.b) & 1)];
    return out;
}

namespace {

void validate_line(const Line& l) {
    const bool bits = (l.u == 0 || l.u == 1) && (l.v == 0 || l.v == 1) && (l.c == 0 || l.c == 1);
    if (!bits || (l.u == 0 && l.v == 0))
        throw std::invalid_argument("slice: line coefficients must be bits with (u,v) != (0,0)");
}

bool line_contains(const Line& l, int q, int p) { return ((l.u * q + l.v * p) & 1) == l.c; }

}  // namespace

std::vector<Slice> Striation::slices() const {
    std::vector<Slice> out;
    const int n = static_cast<int>(directions.size());
    const int combos = 1 << n;
    for (int mask = 0; mask < combos; ++mask) {
        Slice s;
        for (int i = 0; i < n; ++i)
            s.lines.push_back({directions[i].first, directions[i].second, (mask >> i) & 1});
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Striation> all_striations(int n_qubits) {
    require_qubits(n_qubits, "all_striations");
    static const std::array<std::pair<int, int>, 3> dirs = {{{1, 0}, {0, 1}, {1, 1}}};
    std::vector<Striation> out;
    if (n_qubits == 1) {
        for (const auto& d : dirs) out.push_back({{d}});
        return out;
    }
    for (const auto& d1 : dirs)
        for (const auto& d2 : dirs) out.push_back({{d1, d2}});
    return out;
}

double slice_probability(const WignerGrid& w, const Slice& s) {
    if (static_cast<int>(s.lines.size()) != w.n_qubits)
        throw std::invalid_argument("slice_probability: slice and grid qubit counts differ");
    for (const Line& l : s.lines) validate_line(l);
    double sum = 0;
    if (w.n_qubits == 1) {
        for (int q = 0; q < 2; ++q)
            for (int p = 0; p < 2; ++p)
                if (line_contains(s.lines[0], q, p)) sum += w.values[2 * q + p];
        return sum;
    }
    for (int q1 = 0; q1 < 2; ++q1)
        for (int q2 = 0; q2 < 2; ++q2)
            for (int p1 = 0; p1 < 2; ++p1)
                for (int p2 = 0; p2 < 2; ++p2)
                    if (line_contains(s.lines[0], q1, p1) && line_contains(s.lines[1], q2, p2))
                        sum += w.values[8 * q1 + 4 * q2 + 2 * p1 + p2];
    return sum;
}

ComplexMatrix slice_projector(const Slice& s) {
    if (s.lines.size() != 1 && s.lines.size() != 2)
        throw std::invalid_argument("slice_projector: slice must cover one or two qubits");
    for (const Line& l : s.lines) validate_line(l);
    if (s.lines.size() == 1) {
        ComplexMatrix m = ComplexMatrix::zero(2);
        for (int q = 0; q < 2; ++q)
            for (int p = 0; p < 2; ++p)
                if (line_contains(s.lines[0], q, p)) m = m + phase_point_operator(PhasePoint1{q, p});
        return 0.5 * m;
    }
    ComplexMatrix m = ComplexMatrix::zero(4);
    for (int q1 = 0; q1 < 2; ++q1)
        for (int q2 = 0; q2 < 2; ++q2)
            for (int p1 = 0; p1 < 2; ++p1)
                for (int p2 = 0; p2 < 2; ++p2)
                    if (line_contains(s.lines[0], q1, p1) && line_contains(s.lines[1], q2, p2))
                        m = m + phase_point_operator(PhasePoint2{q1, p1, q2, p2});
    return 0.25 * m;
}

double wf_inner(const WignerGrid& a, const WignerGrid& b) {
    if (a.n_qubits != b.n_qubits) throw std::invalid_argument("wf_inner: grid sizes differ");
    double s = 0;
    for (std::size_t i = 0; i < a.values.size(); ++i) s += a.values[i] * b.values[i];
    return (a.n_qubits == 1 ? 2.0 : 4.0) * s;
}

double char_inner(const CharGrid& a, const CharGrid& b) {
    if (a.n_qubits != b.n_qubits) throw std::invalid_argument("char_inner: grid sizes differ");
    double s = 0;
    for (std::size_t i = 0; i < a.values.size(); ++i) s += a.values[i] * b.values[i];
    return s / (a.n_qubits == 1 ? 2.0 : 4.0);
}

double purity(const WignerGrid& w) { return wf_inner(w, w); }

}  // namespace wignerlab
