// covariance.hpp — axis operators and first/second phase-space moments:
// single-qubit and two-qubit covariance matrices under the standard and
// discrete anticommutator conventions, computed from operators or from
// Wigner-grid sums.

#pragma once

#include <array>

#include "wignerlab/phase_space.hpp"
#include "wignerlab/states.hpp"

namespace wignerlab {

// Axis order used for every 3-vector and matrix block below.
// vertical pairs with sigma_x, diagonal with sigma_y, horizontal with
// sigma_z, so the horizontal operator is diagonal in the computational
// basis (eigenvalue q on |q>) and the vertical one generates the vertical
// striation.
enum class Axis { vertical = 0, diagonal = 1, horizontal = 2 };

enum class AnticommutatorKind { standard, discrete };

using Mat3 = std::array<std::array<double, 3>, 3>;
using Mat6 = std::array<std::array<double, 6>, 6>;

// (I - pauli)/2: a projector with eigenvalues {0, 1}.
ComplexMatrix axis_operator(Axis i);

const ComplexMatrix& pauli_for_axis(Axis i);

// Phase-space symbol of the axis operator at point (q,p):
// vertical -> p, diagonal -> (q+p) mod 2, horizontal -> q.
int axis_symbol(Axis i, int q, int p);

// standard: (xi_i xi_j + xi_j xi_i)/2.
// discrete: (xi_i + xi_j - |eps_ijk| xi_k)/2, whose expectation is the
// grid sum of the symbol product. Both reduce to xi_i when i == j.
ComplexMatrix anticom(Axis i, Axis j, AnticommutatorKind kind);

struct CovarianceReport {
    AnticommutatorKind kind = AnticommutatorKind::discrete;
    Mat6 v{};                          // [A C; C^T B]
    std::array<double, 3> chi1{};      // tr(rho pauli_l x I)
    std::array<double, 3> chi2{};      // tr(rho I x pauli_l)

    Mat3 block_a() const;
    Mat3 block_b() const;
    Mat3 block_c() const;
    double trace_a() const;
    double trace_b() const;
    double trace_c() const;
};

// V_ij = <{xi_i, xi_j}_kind> - <xi_i><xi_j>; symmetric, diagonal in
// [0, 1/4] for valid states, trace >= 1/2.
Mat3 covariance_single(const DensityMatrix& rho, AnticommutatorKind kind);

// Same moments for any Hermitian unit-trace 2x2 matrix (no PSD demand).
Mat3 covariance_single_of_matrix(const ComplexMatrix& m, AnticommutatorKind kind);

CovarianceReport covariance_two(const DensityMatrix& rho, AnticommutatorKind kind);

// Moments of any Hermitian unit-trace 4x4 matrix; used on partially
// transposed states, which may fail positivity.
CovarianceReport covariance_two_of_matrix(const ComplexMatrix& m, AnticommutatorKind kind);

// The same report computed purely as sums over a normalized two-qubit
// Wigner grid (kind = discrete); agrees with the operator path.
CovarianceReport moments_from_wigner(const WignerGrid& w);

}  // namespace wignerlab
