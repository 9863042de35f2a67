#include "fae/oracle.hpp"
#include "fae/simulator.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace sim = fae::sim;

namespace {

double good_amplitude(const sim::Vector& v) {
    double best = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if ((i & 3) == 3) best = std::max(best, std::abs(v[i]));
    return best;
}

} // namespace

TEST(Chi, GoodAmplitude) {
    const auto zero = sim::build_chi(0.0);
    EXPECT_NEAR(good_amplitude(sim::prepared_state(zero)), 0.0, 1e-15);

    const auto full = sim::build_chi(std::numbers::pi / 2);
    EXPECT_NEAR(good_amplitude(sim::prepared_state(full)), 0.25 / std::sqrt(2.0), 1e-14); // n = 1
    EXPECT_NEAR(sim::good_mass(sim::prepared_state(full)), 1.0 / 16, 1e-14);
}

TEST(Chi, ColumnsAreUnitVectors) {
    for (int n = 1; n <= 3; ++n) {
        for (double ta : {0.0, 0.3, 1.0, 2.5}) {
            const auto chi = sim::build_chi(ta, n);
            EXPECT_EQ(chi.dim(), Eigen::Index{1} << (n + 2));
            for (Eigen::Index k = 0; k < chi.dim(); ++k) EXPECT_NEAR(chi.matrix.col(k).norm(), 1.0, 1e-12);
            EXPECT_LT(sim::unitarity_defect(chi.matrix), 1e-12);
        }
    }
}

TEST(Chi, RejectsRegisterSize) {
    EXPECT_ANY_THROW(sim::build_chi(0.1, 0));
    EXPECT_ANY_THROW(sim::build_chi(0.1, 4));
}

TEST(Reflections, AreInvolutions) {
    for (int n = 1; n <= 3; ++n) {
        const auto z = sim::reflect_zero(n);
        const auto g = sim::reflect_good(n);
        const auto id = sim::Matrix::Identity(z.rows(), z.cols());
        EXPECT_LT((z * z - id).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_LT((g * g - id).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Grover, IdentityChiGivesProductOfReflections) {
    sim::UnitaryOp id{1, sim::Matrix::Identity(8, 8)};
    const auto q = sim::build_grover(id);
    const sim::Matrix expect = sim::reflect_zero(1) * sim::reflect_good(1);
    EXPECT_LT((q.matrix - expect).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Grover, SingleStepProbability) {
    const auto chi = sim::build_chi(std::numbers::pi / 2);
    const auto q = sim::build_grover(chi);
    EXPECT_LT(sim::unitarity_defect(q.matrix), 1e-10);
    EXPECT_NEAR(sim::p11_after(chi, q, 0), 1.0 / 16, 1e-14);
    EXPECT_NEAR(sim::p11_after(chi, q, 1), 121.0 / 256, 1e-13);
    EXPECT_NEAR(sim::p11_after(chi, q, 1), fae::good_probability(fae::kMaxTheta, 1), 1e-13);

    const auto dark = sim::build_chi(0.0);
    EXPECT_NEAR(sim::p11_after(dark, sim::build_grover(dark), 0), 0.0, 1e-15);
}

TEST(Grover, RotationIdentity) {
    for (int n = 1; n <= 2; ++n) {
        for (double ta : {0.05, 0.4, 0.9, 1.3, 2.0}) {
            const auto chi = sim::build_chi(ta, n);
            const auto q = sim::build_grover(chi);
            const double theta = std::asin(std::sin(ta) / 4);
            const auto seq = sim::p11_sequence(chi, q, 400);
            ASSERT_EQ(seq.size(), 401u);
            for (std::uint64_t m = 0; m <= 400; ++m)
                ASSERT_NEAR(seq[m], fae::good_probability(theta, m), 1e-10) << "m=" << m << " ta=" << ta;
            EXPECT_DOUBLE_EQ(seq[17], sim::p11_after(chi, q, 17));
        }
    }
}
