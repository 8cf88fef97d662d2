// phase_space.hpp — the discrete phase-space kernel for one and two
// qubits: phase-point operators, Wigner and characteristic transforms,
// translations, slices and striations, inner products and purity.
//
// Index conventions used by every grid in the project:
//   one qubit : flat index 2q + p for points (q, p)
//   two qubits: flat index 8q1 + 4q2 + 2p1 + p2
// Characteristic grids mirror these with (u, v) in place of (q, p). The
// Pauli attached to a characteristic index is S(0,0)=I, S(1,0)=sigma_x,
// S(0,1)=sigma_z, S(1,1)=sigma_y.

#pragma once

#include <vector>

#include "wignerlab/complex_matrix.hpp"
#include "wignerlab/states.hpp"

namespace wignerlab {

struct PhasePoint1 {
    int q = 0, p = 0;
};

struct PhasePoint2 {
    int q1 = 0, p1 = 0, q2 = 0, p2 = 0;
};

struct WignerGrid {
    int n_qubits = 1;
    std::vector<double> values;  // 4 or 16 reals, flat order as above

    static WignerGrid zeros(int n_qubits);
    static int index(const PhasePoint1& a) { return 2 * a.q + a.p; }
    static int index(const PhasePoint2& a) { return 8 * a.q1 + 4 * a.q2 + 2 * a.p1 + a.p2; }

    double at(const PhasePoint1& a) const { return values[index(a)]; }
    double at(const PhasePoint2& a) const { return values[index(a)]; }
    double& at(const PhasePoint1& a) { return values[index(a)]; }
    double& at(const PhasePoint2& a) { return values[index(a)]; }

    double sum() const;
    double min_value() const;
    double max_value() const;
};

struct CharGrid {
    int n_qubits = 1;
    std::vector<double> values;  // flat order 2u+v / 8u1+4u2+2v1+v2

    static CharGrid zeros(int n_qubits);
    double sum_of_squares() const;
};

// S(u,v): the Pauli attached to characteristic index (u,v); doubles as the
// phase-space translation by (a,b) = (u,v) under conjugation.
const ComplexMatrix& shift_operator(int u, int v);

// 2x2 Hermitian, trace 1, tr(A^2) = 2; pairwise Frobenius-orthogonal.
ComplexMatrix phase_point_operator(const PhasePoint1& a);

// Tensor product of the one-qubit operators, first factor = qubit 1.
ComplexMatrix phase_point_operator(const PhasePoint2& a);

// (1/N) tr(m A(alpha)) for every phase-space point; accepts any Hermitian
// matrix of dimension 2 or 4 (no state validation).
WignerGrid wigner_transform(const ComplexMatrix& m);
WignerGrid wigner_of(const DensityMatrix& rho);

// sum_alpha W(alpha) A(alpha). The grid must be normalized to within
// 1e-8. The result is Hermitian with unit trace but need not be positive;
// the PSD check (tolerance 1e-9) is reported alongside the matrix.
struct DensityReconstruction {
    ComplexMatrix matrix;
    double min_eigenvalue = 0.0;
    bool psd = false;
};
DensityReconstruction density_of(const WignerGrid& w);

// tr(m S(u,v)) / tr(m S(u1,v1) x S(u2,v2)) per characteristic index.
CharGrid char_transform(const ComplexMatrix& m);
CharGrid char_of(const DensityMatrix& rho);

// Discrete Fourier pair linking the two grids; mutually inverse, and
// wigner_from_char(char_of(rho)) reproduces wigner_of(rho).
WignerGrid wigner_from_char(const CharGrid& chi);
CharGrid char_from_wigner(const WignerGrid& w);

struct QubitShift {
    int a = 0, b = 0;
};

// Index remap W'(q,p) = W(q+a, p+b) (mod-2 sums); matches conjugation by
// the shift operators.
WignerGrid translate(const WignerGrid& w, QubitShift s);
WignerGrid translate(const WignerGrid& w, QubitShift s1, QubitShift s2);

// Line in one qubit's 2x2 phase space: points (q,p) with uq + vp = c
// (mod 2); (u,v) must not be (0,0). Each line holds exactly two points.
struct Line {
    int u = 0, v = 0, c = 0;
};

// Product of per-qubit lines; one line per qubit.
struct Slice {
    std::vector<Line> lines;
};

// A maximal set of parallel slices: fixed per-qubit directions (u,v),
// all offsets. Partitions the phase space (2 slices for one qubit, 4 for
// two qubits).
struct Striation {
    std::vector<std::pair<int, int>> directions;  // (u,v) per qubit
    std::vector<Slice> slices() const;
};

// The 3 (one qubit) or 9 (two qubits) striations.
std::vector<Striation> all_striations(int n_qubits);

// sum of W over the slice; a genuine measurement probability.
double slice_probability(const WignerGrid& w, const Slice& s);

// (1/N) sum of phase-point operators over the slice; a projector.
ComplexMatrix slice_projector(const Slice& s);

// N * sum_alpha Wa(alpha) Wb(alpha) = tr(rho_a rho_b).
double wf_inner(const WignerGrid& a, const WignerGrid& b);

// (1/N) * sum_beta chi_a(beta) chi_b(beta) = tr(rho_a rho_b).
double char_inner(const CharGrid& a, const CharGrid& b);

// wf_inner(w, w); lies in [1/N, 1] for valid states.
double purity(const WignerGrid& w);

}  // namespace wignerlab
