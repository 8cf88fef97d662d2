#include <doctest.h>

#include <cmath>

#include "test_helpers.hpp"
#include "wignerlab/phase_space.hpp"
#include "wignerlab/states.hpp"

using namespace wignerlab;
using testing_oracles::max_abs_diff;
using testing_oracles::random_state;

namespace {

const double kSqrt3 = std::sqrt(3.0);
const Complex kXiMin = Complex(1, 1) / (1.0 - kSqrt3);  // coherent state with the most negative grid value

// Singlet fixture: -1/8 where q1==q2 and p1==p2, +1/8 elsewhere.
WignerGrid singlet_fixture() {
    WignerGrid w = WignerGrid::zeros(2);
    for (int q1 = 0; q1 < 2; ++q1)
        for (int q2 = 0; q2 < 2; ++q2)
            for (int p1 = 0; p1 < 2; ++p1)
                for (int p2 = 0; p2 < 2; ++p2)
                    w.values[8 * q1 + 4 * q2 + 2 * p1 + p2] = (q1 == q2 && p1 == p2) ? -0.125 : 0.125;
    return w;
}

WignerGrid werner_fixture(double x) {
    WignerGrid w = WignerGrid::zeros(2);
    for (int q1 = 0; q1 < 2; ++q1)
        for (int q2 = 0; q2 < 2; ++q2)
            for (int p1 = 0; p1 < 2; ++p1)
                for (int p2 = 0; p2 < 2; ++p2)
                    w.values[8 * q1 + 4 * q2 + 2 * p1 + p2] =
                        (q1 == q2 && p1 == p2) ? (1 - 3 * x) / 16 : (1 + x) / 16;
    return w;
}

}  // namespace

TEST_CASE("phase-point operators: one qubit") {
    const ComplexMatrix a00 = phase_point_operator(PhasePoint1{0, 0});
    const ComplexMatrix expected =
        0.5 * (ComplexMatrix::identity(2) + pauli_z() + pauli_x() + pauli_y());
    CHECK(max_abs_diff(a00, expected) == 0.0);

    for (int q = 0; q < 2; ++q)
        for (int p = 0; p < 2; ++p) {
            const ComplexMatrix a = phase_point_operator(PhasePoint1{q, p});
            CHECK(std::abs(trace(a) - Complex(1, 0)) < 1e-15);
            CHECK(frobenius_inner(a, a).real() == doctest::Approx(2.0).epsilon(1e-15));
            CHECK(max_abs_diff(a, adjoint(a)) == 0.0);
        }

    // pairwise orthogonality, tr(A A') = 2 delta
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const ComplexMatrix ai = phase_point_operator(PhasePoint1{i / 2, i % 2});
            const ComplexMatrix aj = phase_point_operator(PhasePoint1{j / 2, j % 2});
            CHECK(frobenius_inner(ai, aj).real() == doctest::Approx(i == j ? 2.0 : 0.0).epsilon(1e-15));
        }
}

TEST_CASE("phase-point operators: two qubits") {
    ComplexMatrix sum = ComplexMatrix::zero(4);
    for (int q1 = 0; q1 < 2; ++q1)
        for (int q2 = 0; q2 < 2; ++q2)
            for (int p1 = 0; p1 < 2; ++p1)
                for (int p2 = 0; p2 < 2; ++p2) {
                    const PhasePoint2 pt{q1, p1, q2, p2};
                    const ComplexMatrix a = phase_point_operator(pt);
                    CHECK(max_abs_diff(a, tensor(phase_point_operator(PhasePoint1{q1, p1}),
                                                 phase_point_operator(PhasePoint1{q2, p2}))) == 0.0);
                    CHECK(frobenius_inner(a, a).real() == doctest::Approx(4.0).epsilon(1e-15));
                    sum = sum + a;
                }
    CHECK(max_abs_diff(0.25 * sum, ComplexMatrix::identity(4)) < 1e-15);

    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < i; ++j) {
            const PhasePoint2 pi{(i >> 3) & 1, (i >> 1) & 1, (i >> 2) & 1, i & 1};
            const PhasePoint2 pj{(j >> 3) & 1, (j >> 1) & 1, (j >> 2) & 1, j & 1};
            CHECK(std::abs(frobenius_inner(phase_point_operator(pi), phase_point_operator(pj))) < 1e-15);
        }
}

TEST_CASE("wigner_of: fixtures") {
    const WignerGrid uniform = wigner_of(maximally_mixed(4));
    for (double v : uniform.values) CHECK(v == doctest::Approx(1.0 / 16).epsilon(1e-15));

    CHECK(max_abs_diff(wigner_of(bell(BellKind::psi_minus)).values, singlet_fixture().values) < 1e-15);

    for (double x : {0.2, 1.0 / 3.0, 0.8})
        CHECK(max_abs_diff(wigner_of(werner(x)).values, werner_fixture(x).values) < 1e-15);
}

TEST_CASE("density_of: reconstruction and the PSD flag") {
    WignerGrid uniform{2, std::vector<double>(16, 1.0 / 16)};
    const DensityReconstruction rec = density_of(uniform);
    CHECK(rec.psd);
    CHECK(max_abs_diff(rec.matrix, 0.25 * ComplexMatrix::identity(4)) < 1e-15);

    const DensityReconstruction singlet_rec = density_of(singlet_fixture());
    CHECK(singlet_rec.psd);
    CHECK(max_abs_diff(singlet_rec.matrix, bell(BellKind::psi_minus).matrix()) < 1e-12);

    // a delta grid reconstructs the phase-point operator, which is not PSD
    WignerGrid delta = WignerGrid::zeros(1);
    delta.values[0] = 1.0;
    const DensityReconstruction d = density_of(delta);
    CHECK_FALSE(d.psd);
    CHECK(max_abs_diff(d.matrix, phase_point_operator(PhasePoint1{0, 0})) < 1e-15);
    CHECK(d.min_eigenvalue == doctest::Approx((1 - kSqrt3) / 2).epsilon(1e-12));

    WignerGrid bad{2, std::vector<double>(16, 1.0)};
    CHECK_THROWS_AS(density_of(bad), std::invalid_argument);
}

TEST_CASE("round trips: density <-> wigner on random states") {
    Rng rng(21);
    for (int rep = 0; rep < 1000; ++rep) {
        const int dim = (rep % 2 == 0) ? 4 : 2;
        const DensityMatrix rho = random_state(rng, dim);
        const WignerGrid w = wigner_of(rho);
        CHECK(std::abs(w.sum() - 1.0) < 1e-10);
        const DensityReconstruction rec = density_of(w);
        CHECK(max_abs_diff(rec.matrix, rho.matrix()) < 1e-10);
        if (dim == 2) {
            // provable one-qubit range: [(1-sqrt3)/4, (1+sqrt3)/4]
            CHECK(w.min_value() >= (1 - kSqrt3) / 4 - 1e-9);
            CHECK(w.max_value() <= (1 + kSqrt3) / 4 + 1e-9);
        }
    }
}

TEST_CASE("char_of: fixtures and purity rule") {
    const CharGrid chi_mixed = char_of(maximally_mixed(4));
    CHECK(chi_mixed.values[0] == doctest::Approx(1.0).epsilon(1e-15));
    for (int i = 1; i < 16; ++i) CHECK(std::abs(chi_mixed.values[i]) < 1e-15);

    // singlet: -1 exactly where both qubits carry the same non-identity Pauli
    const CharGrid chi = char_of(bell(BellKind::psi_minus));
    for (int u1 = 0; u1 < 2; ++u1)
        for (int u2 = 0; u2 < 2; ++u2)
            for (int v1 = 0; v1 < 2; ++v1)
                for (int v2 = 0; v2 < 2; ++v2) {
                    const double val = chi.values[8 * u1 + 4 * u2 + 2 * v1 + v2];
                    if (u1 == 0 && v1 == 0 && u2 == 0 && v2 == 0)
                        CHECK(val == doctest::Approx(1.0).epsilon(1e-14));
                    else if (u1 == u2 && v1 == v2)
                        CHECK(val == doctest::Approx(-1.0).epsilon(1e-14));
                    else
                        CHECK(std::abs(val) < 1e-15);
                }

    for (BellKind k : {BellKind::phi_plus, BellKind::phi_minus, BellKind::psi_plus, BellKind::psi_minus})
        CHECK(0.25 * char_of(bell(k)).sum_of_squares() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("fourier link: mutual inverses and path agreement") {
    CharGrid delta = CharGrid::zeros(2);
    delta.values[0] = 1.0;
    const WignerGrid flat = wigner_from_char(delta);
    for (double v : flat.values) CHECK(v == doctest::Approx(1.0 / 16).epsilon(1e-15));

    const WignerGrid w = wigner_of(werner(0.7));
    CHECK(max_abs_diff(wigner_from_char(char_from_wigner(w)).values, w.values) < 1e-12);
    const CharGrid c = char_of(werner(0.7));
    CHECK(max_abs_diff(char_from_wigner(wigner_from_char(c)).values, c.values) < 1e-12);

    Rng rng(22);
    for (int rep = 0; rep < 100; ++rep) {
        const DensityMatrix rho = random_state(rng, rep % 2 ? 2 : 4);
        CHECK(max_abs_diff(wigner_from_char(char_of(rho)).values, wigner_of(rho).values) < 1e-12);
    }
}

TEST_CASE("characteristic values stay in [-1, 1] with unit zero entry") {
    Rng rng(23);
    for (int rep = 0; rep < 200; ++rep) {
        const CharGrid chi = char_of(random_state(rng, rep % 2 ? 2 : 4));
        CHECK(std::abs(chi.values[0] - 1.0) < 1e-12);
        for (double v : chi.values) {
            CHECK(v >= -1.0 - 1e-10);
            CHECK(v <= 1.0 + 1e-10);
        }
    }
}

TEST_CASE("translate: fixed points and covariance") {
    const WignerGrid w0 = wigner_of(coherent(0.0));  // |0><0|
    CHECK(max_abs_diff(translate(w0, QubitShift{0, 0}).values, w0.values) == 0.0);

    // shifting (a,b)=(1,0) matches conjugation by sigma_x: |0><0| -> |1><1|
    const ComplexMatrix flipped = matmul(matmul(pauli_x(), coherent(0.0).matrix()), pauli_x());
    CHECK(max_abs_diff(translate(w0, QubitShift{1, 0}).values, wigner_transform(flipped).values) < 1e-15);

    Rng rng(24);
    const DensityMatrix rho = random_state(rng, 4);
    const WignerGrid w = wigner_of(rho);
    for (int mask = 0; mask < 16; ++mask) {
        const QubitShift s1{(mask >> 3) & 1, (mask >> 2) & 1};
        const QubitShift s2{(mask >> 1) & 1, mask & 1};
        const ComplexMatrix shift = tensor(shift_operator(s1.a, s1.b), shift_operator(s2.a, s2.b));
        const ComplexMatrix conj = matmul(matmul(shift, rho.matrix()), adjoint(shift));
        CHECK(max_abs_diff(translate(w, s1, s2).values, wigner_transform(conj).values) < 1e-12);
    }

    // a shift on qubit 2 leaves qubit-1 slice probabilities unchanged
    const WignerGrid moved = translate(w, QubitShift{0, 0}, QubitShift{1, 1});
    for (int c = 0; c < 2; ++c) {
        const Slice lower{{Line{1, 0, c}, Line{1, 0, 0}}};
        const Slice upper{{Line{1, 0, c}, Line{1, 0, 1}}};
        const double q1_prob = slice_probability(w, lower) + slice_probability(w, upper);
        const double q1_prob_moved = slice_probability(moved, lower) + slice_probability(moved, upper);
        CHECK(q1_prob == doctest::Approx(q1_prob_moved).epsilon(1e-12));
    }
}

TEST_CASE("slices and striations") {
    WignerGrid uniform{2, std::vector<double>(16, 1.0 / 16)};
    CHECK(slice_probability(uniform, Slice{{Line{1, 0, 0}, Line{0, 1, 1}}}) ==
          doctest::Approx(0.25).epsilon(1e-15));

    // singlet through the q1=0, q2=0 slice: the four cells cancel
    const WignerGrid ws = wigner_of(bell(BellKind::psi_minus));
    CHECK(std::abs(slice_probability(ws, Slice{{Line{1, 0, 0}, Line{1, 0, 0}}})) < 1e-15);

    CHECK(all_striations(1).size() == 3);
    CHECK(all_striations(2).size() == 9);

    Rng rng(25);
    for (int rep = 0; rep < 50; ++rep) {
        const int dim = rep % 2 ? 2 : 4;
        const DensityMatrix rho = random_state(rng, dim);
        const WignerGrid w = wigner_of(rho);
        for (const Striation& st : all_striations(dim == 2 ? 1 : 2)) {
            double total = 0;
            for (const Slice& s : st.slices()) {
                const double p = slice_probability(w, s);
                CHECK(p >= -1e-10);
                // dual route: trace against the projector built from the operator sum
                const ComplexMatrix proj = slice_projector(s);
                CHECK(max_abs_diff(matmul(proj, proj), proj) < 1e-13);
                CHECK(p == doctest::Approx(frobenius_inner(proj, rho.matrix()).real()).epsilon(1e-10));
                total += p;
            }
            CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
        }
    }

    CHECK_THROWS_AS(slice_probability(uniform, Slice{{Line{0, 0, 0}, Line{1, 0, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(slice_probability(uniform, Slice{{Line{1, 0, 0}}}), std::invalid_argument);
}

TEST_CASE("wf_inner and purity") {
    const WignerGrid ws = wigner_of(bell(BellKind::psi_minus));
    const WignerGrid wp = wigner_of(bell(BellKind::phi_plus));
    CHECK(wf_inner(ws, ws) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(wf_inner(ws, wp)) < 1e-13);

    for (double x : {0.0, 0.25, 0.7, 1.0}) {
        CHECK(wf_inner(wigner_of(werner(x)), wp) == doctest::Approx((1 - x) / 4).epsilon(1e-12));
        CHECK(purity(wigner_of(werner(x))) == doctest::Approx((1 + 3 * x * x) / 4).epsilon(1e-12));
    }

    WignerGrid uniform{2, std::vector<double>(16, 1.0 / 16)};
    CHECK(purity(uniform) == doctest::Approx(0.25).epsilon(1e-15));

    CHECK_THROWS_AS(wf_inner(ws, wigner_of(coherent(0.0))), std::invalid_argument);
}

TEST_CASE("purity channel agreement across W, chi and the matrix") {
    Rng rng(26);
    for (int rep = 0; rep < 300; ++rep) {
        const int dim = rep % 2 ? 2 : 4;
        const DensityMatrix a = random_state(rng, dim);
        const DensityMatrix b = random_state(rng, dim);
        const double via_w = wf_inner(wigner_of(a), wigner_of(b));
        const double via_chi = char_inner(char_of(a), char_of(b));
        const double via_matrix = frobenius_inner(a.matrix(), b.matrix()).real();
        CHECK(std::abs(via_w - via_matrix) < 1e-10);
        CHECK(std::abs(via_chi - via_matrix) < 1e-10);

        const double p = purity(wigner_of(a));
        CHECK(p >= 1.0 / dim - 1e-10);
        CHECK(p <= 1.0 + 1e-10);
    }
}

TEST_CASE("one-qubit extremes are attained at the expected states") {
    // the most negative cell: coherent state at xi = (1+i)/(1-sqrt 3)
    const WignerGrid wmin = wigner_of(coherent(kXiMin));
    CHECK(wmin.min_value() == doctest::Approx((1 - kSqrt3) / 4).epsilon(1e-12));

    // the most positive cell value is (1+sqrt 3)/4, attained on the Bloch
    // vector aligned with a phase-point operator's principal axis
    const ComplexMatrix rho_max =
        0.5 * (ComplexMatrix::identity(2) + (1.0 / kSqrt3) * (pauli_x() + pauli_y() + pauli_z()));
    const WignerGrid wmax = wigner_transform(rho_max);
    CHECK(wmax.max_value() == doctest::Approx((1 + kSqrt3) / 4).epsilon(1e-12));

    // random pure states approach both bounds and never exceed them
    Rng rng(27);
    double best_min = 1.0, best_max = 0.0;
    for (int rep = 0; rep < 20000; ++rep) {
        const WignerGrid w = wigner_of(random_pure(rng, 2));
        best_min = std::min(best_min, w.min_value());
        best_max = std::max(best_max, w.max_value());
        CHECK(w.min_value() >= (1 - kSqrt3) / 4 - 1e-9);
        CHECK(w.max_value() <= (1 + kSqrt3) / 4 + 1e-9);
    }
    CHECK(best_min < (1 - kSqrt3) / 4 + 0.01);
    CHECK(best_max > (1 + kSqrt3) / 4 - 0.01);
}
