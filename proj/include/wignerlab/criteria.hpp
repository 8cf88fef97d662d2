// criteria.hpp — separability and entanglement tests, each returning an
// evidence-carrying verdict, plus the exact partial-transpose eigenvalue
// oracle used as ground truth. One-sided tests answer Inconclusive on the
// side they cannot certify.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wignerlab/covariance.hpp"
#include "wignerlab/phase_space.hpp"
#include "wignerlab/states.hpp"

namespace wignerlab {

enum class Decision { entangled, separable, inconclusive };

const char* to_string(Decision d);

struct Verdict {
    std::string criterion;
    Decision decision = Decision::inconclusive;
    // Raw scalars backing the decision; "margin" is always present and
    // positive when the criterion decided.
    std::map<std::string, double> evidence;
    double tolerance = 0.0;
};

// Wigner grid of a state, of its partial transpose, and the pointwise
// difference term: w_pt(alpha) = w(alpha) - tau(alpha).
struct PtPair {
    WignerGrid w;
    WignerGrid w_pt;
    WignerGrid tau;
};

// Negativity cutoff below which the grid-negativity test claims
// entanglement: (1 - sqrt(3))/8.
extern const double kNegativityThreshold;

// Entangled when min W < threshold - tol, otherwise Inconclusive; the
// bound is one-sided. Two-qubit grids only.
Verdict negativity_criterion(const WignerGrid& w, double tol);

// Builds w from rho, w_pt from the partially transposed matrix, and tau
// from its own trace formula, so the pair identity cross-checks two
// independent computation paths.
PtPair wigner_pt(const DensityMatrix& rho);

// Separable iff the minimum eigenvalue of the partial transpose is
// >= -tol, else Entangled. Exact for two qubits; never Inconclusive.
Verdict ppt_oracle(const DensityMatrix& rho, double tol);

// sum_alpha w_pt(alpha) * w_prime(alpha). A negative value certifies
// entanglement of the state behind `pt`. The witness grid must describe a
// valid state (normalized, PSD reconstruction); invalid witnesses are
// rejected.
double witness_overlap(const PtPair& pt, const WignerGrid& w_prime);

// Separable when both grids are >= -tol everywhere, else Inconclusive.
Verdict dual_nonnegativity(const DensityMatrix& rho, double tol);

// Entangled when trA + trB + 2 trC < 1 - tol, else Inconclusive.
Verdict lur_trace(const CovarianceReport& report, double tol);

// Entangled when sum_i |C_ii| > (trA + trB - 1)/2 + tol, else
// Inconclusive.
Verdict lur_generalized(const CovarianceReport& report, double tol);

// Positivity report for an uncertainty matrix; PSD for every valid state
// (a state-validity certificate, not a separability test).
struct PsdReport {
    std::string name;
    double min_eigenvalue = 0.0;
    double tolerance = 0.0;
    bool psd() const { return min_eigenvalue >= -tolerance; }
};

// 3x3 Hermitian uncertainty matrix: standard-kind covariance plus the
// skew commutator term (i/4) eps_jkl chi_l.
PsdReport gup_single(const DensityMatrix& rho, double tol);

// 6x6 block analogue for two qubits.
PsdReport gup_two(const DensityMatrix& rho, double tol);

// The 6x6 uncertainty matrix rebuilt on the partially transposed state;
// a negative eigenvalue certifies entanglement, otherwise Inconclusive.
Verdict gup_pt(const DensityMatrix& rho, double tol);

// Raised when a criterion contradicts the exact oracle; a test-oracle
// failure, not a recoverable state.
class ConsistencyError : public std::runtime_error {
public:
    ConsistencyError(Verdict criterion, Verdict oracle);
    const Verdict& criterion_verdict() const { return criterion_; }
    const Verdict& oracle_verdict() const { return oracle_; }

private:
    Verdict criterion_;
    Verdict oracle_;
};

struct CriteriaRun {
    std::vector<Verdict> verdicts;  // negativity, dual_nonnegativity, lur_trace, lur_generalized, gup_pt
    Verdict oracle;
};

// Runs every criterion and the oracle; throws ConsistencyError if a
// detector claims Entangled on an oracle-separable state or
// dual_nonnegativity claims Separable on an oracle-entangled state.
CriteriaRun run_all(const DensityMatrix& rho, double tol);

}  // namespace wignerlab
