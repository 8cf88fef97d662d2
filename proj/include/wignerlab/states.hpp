// states.hpp — validated density matrices plus the constructors and
// samplers used throughout the project: Bell and Werner states, spin
// coherent states, products, mixtures, and random pure/mixed/separable
// ensembles.

#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "wignerlab/complex_matrix.hpp"
#include "wignerlab/rng.hpp"

namespace wignerlab {

// A Hermitian, unit-trace, positive-semidefinite matrix of dimension 2 or 4.
// Construction validates all three invariants (residuals are kept as
// metadata) and throws std::invalid_argument naming the violated one.
class DensityMatrix {
public:
    static DensityMatrix from_matrix(const ComplexMatrix& m);

    const ComplexMatrix& matrix() const { return mat_; }
    int dim() const { return mat_.dim(); }
    double hermiticity_residual() const { return herm_residual_; }
    double trace_residual() const { return trace_residual_; }
    double min_eigenvalue() const { return min_eigenvalue_; }

private:
    DensityMatrix(ComplexMatrix m, double herm, double tr, double eig)
        : mat_(std::move(m)), herm_residual_(herm), trace_residual_(tr), min_eigenvalue_(eig) {}

    ComplexMatrix mat_;
    double herm_residual_;
    double trace_residual_;
    double min_eigenvalue_;
};

enum class BellKind { phi_plus, phi_minus, psi_plus, psi_minus };

DensityMatrix bell(BellKind kind);

// x * |psi_minus><psi_minus| + (1-x) * I/4, valid for x in [0,1].
DensityMatrix werner(double x);

// Projector onto (|0> + xi|1>) / sqrt(1 + |xi|^2).
DensityMatrix coherent(Complex xi);

DensityMatrix maximally_mixed(int dim);

// Projector onto a normalized amplitude vector (dim 2 or 4); the vector
// must already be normalized to within 1e-10.
DensityMatrix pure_state(const std::vector<Complex>& amplitudes);

DensityMatrix product(const DensityMatrix& a, const DensityMatrix& b);

DensityMatrix mixture(const std::vector<double>& weights, const std::vector<DensityMatrix>& components);

// Projector onto a Haar-distributed unit vector (normalized vector of
// independent standard complex Gaussians), dim 2 or 4.
DensityMatrix random_pure(Rng& rng, int dim);

// G G^dag / tr(G G^dag) with G a dim x rank matrix of independent
// standard complex Gaussians.
DensityMatrix random_mixed(Rng& rng, int dim, int rank);

// sum_i p_i |psi_i><psi_i| (x) |phi_i><phi_i| with Haar-random pure
// factors and flat-Dirichlet weights; 1 <= k <= 16 components.
DensityMatrix random_separable(Rng& rng, int k);

// Serializable description of a state; the JSON schema lives in
// states_json.hpp and the CLI consumes it.
struct StateSpec {
    struct Named {
        std::string name;                      // "werner" | "bell" | "coherent"
        std::string kind;                      // bell flavour, when name == "bell"
        std::map<std::string, double> params;  // "x" for werner, "re"/"im" for coherent
    };
    struct Matrix {
        ComplexMatrix value;
    };
    struct Pure {
        std::vector<Complex> amplitudes;
    };
    struct Mixture {
        std::vector<double> weights;
        std::vector<StateSpec> components;
    };
    struct Product {
        std::vector<StateSpec> factors;  // exactly two, each one-qubit
    };

    std::variant<Named, Matrix, Pure, Mixture, Product> value;
};

DensityMatrix to_density(const StateSpec& spec);

}  // namespace wignerlab
