#include "wignerlab/criteria.hpp"

#include <algorithm>
#include <cmath>

namespace wignerlab {

const double kNegativityThreshold = (1.0 - std::sqrt(3.0)) / 8.0;

const char* to_string(Decision d) {
    switch (d) {
        case Decision::entangled: return "Entangled";
        case Decision::separable: return "Separable";
        case Decision::inconclusive: return "Inconclusive";
    }
    return "?";
}

Verdict negativity_criterion(const WignerGrid& w, double tol) {
    if (w.n_qubits != 2) throw std::invalid_argument("negativity_criterion: requires a two-qubit grid");
    const double min_w = w.min_value();
    Verdict v;
    v.criterion = "negativity";
    v.tolerance = tol;
    v.evidence["min_w"] = min_w;
    v.evidence["threshold"] = kNegativityThreshold;
    v.evidence["margin"] = kNegativityThreshold - min_w;
    v.decision = (min_w < kNegativityThreshold - tol) ? Decision::entangled : Decision::inconclusive;
    return v;
}

PtPair wigner_pt(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("wigner_pt: requires a two-qubit state");
    PtPair pair;
    pair.w = wigner_of(rho);
    pair.w_pt = wigner_transform(partial_transpose_second(rho.matrix()));
    pair.tau = WignerGrid::zeros(2);
    for (int q1 = 0; q1 < 2; ++q1)
        for (int p1 = 0; p1 < 2; ++p1) {
            const ComplexMatrix op = tensor(phase_point_operator(PhasePoint1{q1, p1}), pauli_y());
            const double t = frobenius_inner(op, rho.matrix()).real();  // tr(rho op), op Hermitian
            for (int q2 = 0; q2 < 2; ++q2)
                for (int p2 = 0; p2 < 2; ++p2) {
                    const double sign = ((q2 + p2) & 1) ? -1.0 : 1.0;
                    pair.tau.values[8 * q1 + 4 * q2 + 2 * p1 + p2] = sign * t / 4.0;
                }
        }
    return pair;
}

Verdict ppt_oracle(const DensityMatrix& rho, double tol) {
    if (rho.dim() != 4) throw std::invalid_argument("ppt_oracle: requires a two-qubit state");
    const double min_eig =
        hermitian_eigenvalues(partial_transpose_second(rho.matrix())).eigenvalues.front();
    Verdict v;
    v.criterion = "ppt_oracle";
    v.tolerance = tol;
    v.evidence["min_eigenvalue"] = min_eig;
    v.evidence["margin"] = min_eig;
    v.decision = (min_eig >= -tol) ? Decision::separable : Decision::entangled;
    return v;
}

double witness_overlap(const PtPair& pt, const WignerGrid& w_prime) {
    if (w_prime.n_qubits != 2) throw std::invalid_argument("witness_overlap: witness must be a two-qubit grid");
    const DensityReconstruction rec = density_of(w_prime);  // rejects unnormalized grids
    if (!rec.psd)
        throw std::invalid_argument("witness_overlap: witness grid is not a valid state (min eigenvalue " +
                                    std::to_string(rec.min_eigenvalue) + ")");
    double s = 0;
    for (int i = 0; i < 16; ++i) s += pt.w_pt.values[i] * w_prime.values[i];
    return s;
}

Verdict dual_nonnegativity(const DensityMatrix& rho, double tol) {
    const PtPair pair = wigner_pt(rho);
    const double min_w = pair.w.min_value();
    const double min_w_pt = pair.w_pt.min_value();
    Verdict v;
    v.criterion = "dual_nonnegativity";
    v.tolerance = tol;
    v.evidence["min_w"] = min_w;
    v.evidence["min_w_pt"] = min_w_pt;
    v.evidence["margin"] = std::min(min_w, min_w_pt);
    v.decision = (std::min(min_w, min_w_pt) >= -tol) ? Decision::separable : Decision::inconclusive;
    return v;
}

Verdict lur_trace(const CovarianceReport& report, double tol) {
    const double sum = report.trace_a() + report.trace_b() + 2.0 * report.trace_c();
    Verdict v;
    v.criterion = "lur_trace";
    v.tolerance = tol;
    v.evidence["sum"] = sum;
    v.evidence["margin"] = 1.0 - sum;
    v.decision = (sum < 1.0 - tol) ? Decision::entangled : Decision::inconclusive;
    return v;
}

Verdict lur_generalized(const CovarianceReport& report, double tol) {
    const double lhs = std::abs(report.v[0][3]) + std::abs(report.v[1][4]) + std::abs(report.v[2][5]);
    const double rhs = 0.5 * (report.trace_a() + report.trace_b() - 1.0);
    Verdict v;
    v.criterion = "lur_generalized";
    v.tolerance = tol;
    v.evidence["abs_correlation_sum"] = lhs;
    v.evidence["bound"] = rhs;
    v.evidence["margin"] = lhs - rhs;
    v.decision = (lhs > rhs + tol) ? Decision::entangled : Decision::inconclusive;
    return v;
}

namespace {

int levi_civita(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    // even permutations of (0,1,2)
    if ((i == 0 && j == 1 && k == 2) || (i == 1 && j == 2 && k == 0) || (i == 2 && j == 0 && k == 1)) return 1;
    return -1;
}

// 3x3 Hermitian block V + (i/4) eps_jkl chi_l: the Gram matrix of the
// centered axis operators, whose skew part is half the commutator
// expectation.
ComplexMatrix uncertainty_block(const Mat3& v, const std::array<double, 3>& chi) {
    ComplexMatrix m(3);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            double skew = 0;
            for (int l = 0; l < 3; ++l) skew += levi_civita(j, k, l) * chi[l];
            m(j, k) = Complex(v[j][k], 0.25 * skew);
        }
    return m;
}

std::array<double, 3> pauli_expectations(const ComplexMatrix& rho) {
    std::array<double, 3> chi{};
    for (int l = 0; l < 3; ++l)
        chi[l] = frobenius_inner(pauli_for_axis(static_cast<Axis>(l)), rho).real();
    return chi;
}

ComplexMatrix uncertainty_matrix_two(const CovarianceReport& rep) {
    ComplexMatrix m(6);
    const ComplexMatrix a = uncertainty_block(rep.block_a(), rep.chi1);
    const ComplexMatrix b = uncertainty_block(rep.block_b(), rep.chi2);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            m(j, k) = a(j, k);
            m(j + 3, k + 3) = b(j, k);
            m(j, k + 3) = rep.v[j][k + 3];
            m(k + 3, j) = rep.v[k + 3][j];
        }
    return m;
}

}  // namespace

PsdReport gup_single(const DensityMatrix& rho, double tol) {
    if (rho.dim() != 2) throw std::invalid_argument("gup_single: requires a one-qubit state");
    const Mat3 v = covariance_single(rho, AnticommutatorKind::standard);
    const ComplexMatrix m = uncertainty_block(v, pauli_expectations(rho.matrix()));
    return {"gup_single", hermitian_eigenvalues(m).eigenvalues.front(), tol};
}

PsdReport gup_two(const DensityMatrix& rho, double tol) {
    if (rho.dim() != 4) throw std::invalid_argument("gup_two: requires a two-qubit state");
    const CovarianceReport rep = covariance_two(rho, AnticommutatorKind::standard);
    const ComplexMatrix m = uncertainty_matrix_two(rep);
    return {"gup_two", hermitian_eigenvalues(m).eigenvalues.front(), tol};
}

Verdict gup_pt(const DensityMatrix& rho, double tol) {
    if (rho.dim() != 4) throw std::invalid_argument("gup_pt: requires a two-qubit state");
    const CovarianceReport rep =
        covariance_two_of_matrix(partial_transpose_second(rho.matrix()), AnticommutatorKind::standard);
    const double min_eig = hermitian_eigenvalues(uncertainty_matrix_two(rep)).eigenvalues.front();
    Verdict v;
    v.criterion = "gup_pt";
    v.tolerance = tol;
    v.evidence["min_eigenvalue"] = min_eig;
    v.evidence["margin"] = -min_eig;
    v.decision = (min_eig < -tol) ? Decision::entangled : Decision::inconclusive;
    return v;
}

ConsistencyError::ConsistencyError(Verdict criterion, Verdict oracle)
    : std::runtime_error("criterion " + criterion.criterion + " says " + to_string(criterion.decision) +
                         " but ppt_oracle says " + to_string(oracle.decision)),
      criterion_(std::move(criterion)),
      oracle_(std::move(oracle)) {}

CriteriaRun run_all(const DensityMatrix& rho, double tol) {
    if (rho.dim() != 4) throw std::invalid_argument("run_all: requires a two-qubit state");

    CriteriaRun run;
    run.oracle = ppt_oracle(rho, tol);

    const PtPair pair = wigner_pt(rho);
    const CovarianceReport rep = covariance_two(rho, AnticommutatorKind::discrete);

    run.verdicts.push_back(negativity_criterion(pair.w, tol));
    run.verdicts.push_back(dual_nonnegativity(rho, tol));
    run.verdicts.push_back(lur_trace(rep, tol));
    run.verdicts.push_back(lur_generalized(rep, tol));
    run.verdicts.push_back(gup_pt(rho, tol));

    for (const Verdict& v : run.verdicts) {
        if (v.decision == Decision::entangled && run.oracle.decision == Decision::separable)
            throw ConsistencyError(v, run.oracle);
        if (v.decision == Decision::separable && run.oracle.decision == Decision::entangled)
            throw ConsistencyError(v, run.oracle);
    }
    return run;
}

}  // namespace wignerlab
