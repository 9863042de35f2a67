#include "fae/bounds.hpp"
#include "fae/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace b = fae::bounds;
using std::numbers::pi;

TEST(ChooseEll, Examples) {
    EXPECT_EQ(b::choose_ell(2 * pi / 3), 1);
    EXPECT_EQ(b::choose_ell(1e-3), 12);
    EXPECT_EQ(b::choose_ell(1e-2), 8);
    EXPECT_NEAR(std::log2(2 * pi / 3e-3), 11.032, 1e-3);
    EXPECT_NEAR(std::log2(2 * pi / 3e-2), 7.710, 1e-3);
}

TEST(ChooseEll, RoundTrip) {
    for (int ell = 1; ell <= 30; ++ell) {
        EXPECT_EQ(b::choose_ell(b::epsilon_for_ell(ell)), ell);
        EXPECT_EQ(b::choose_ell(b::epsilon_for_ell(ell) * 0.99), ell + 1);
        if (ell > 1) EXPECT_EQ(b::choose_ell(b::epsilon_for_ell(ell) * 1.99), ell);
    }
}

TEST(ChooseEll, Domain) {
    EXPECT_THROW(b::choose_ell(0.0), fae::DomainError);
    EXPECT_THROW(b::choose_ell(-1.0), fae::DomainError);
    EXPECT_THROW(b::choose_ell(2.5), fae::DomainError);
    EXPECT_THROW(b::choose_ell(std::nan("")), fae::DomainError);
}

TEST(QueryBound, Values) {
    // mpmath: (4100 / eps) ln(4 log2(2 pi / (3 eps)) / delta)
    EXPECT_NEAR(b::theorem1_bound(1e-3, 0.05), 27809707.93, 0.01);
    EXPECT_NEAR(b::theorem1_bound(1e-3, 0.05), 2.78e7, 0.005e7);
    EXPECT_LE(std::log(std::log2(2 * pi / (3 * 1e-20))), 6.0);
    EXPECT_NEAR(std::log(std::log2(2 * pi / (3 * 1e-20))), 4.2122, 1e-4);
    EXPECT_THROW(b::theorem1_bound(0.0, 0.05), fae::DomainError);
    EXPECT_THROW(b::theorem1_bound(2 * pi / 3, 0.05), fae::DomainError);
    EXPECT_THROW(b::theorem1_bound(1e-3, 1.0), fae::DomainError);
}

TEST(WorstCase, Values) {
    EXPECT_DOUBLE_EQ(b::worst_case_count(1, 0.01), 1944 * std::log(200.0));
    EXPECT_NEAR(b::worst_case_count(5, 0.01), 319297.80, 0.01);
    EXPECT_NEAR(b::worst_case_count(5, 0.01), 3.193e5, 0.0005e5);
    EXPECT_THROW(b::worst_case_count(0, 0.01), fae::DomainError);
}

TEST(Counts, NominalAndExact) {
    EXPECT_EQ(b::paper_count(8, 3, 10300, 5150), 10300u * 7 + 2u * 5150 * 248);
    EXPECT_EQ(b::exact_count(8, 3, 10300, 5150), b::paper_count(8, 3, 10300, 5150) + 5150u * 4 * 5);
    // First stage only: both conventions agree.
    EXPECT_EQ(b::paper_count(5, 5, 10300, 5150), 10300u * 31);
    EXPECT_EQ(b::exact_count(5, 5, 10300, 5150), 10300u * 31);
    // Worst case j0 = 1 with n_second = n_first / 2 reduces to n_first (2^ell - 1).
    EXPECT_EQ(b::paper_count(6, 1, 10300, 5150), 10300u * 63);
}

TEST(Counts, NominalCountUnderQueryBound) {
    for (int ell = 1; ell <= 30; ++ell) {
        const double delta_c = 0.01;
        for (int j0 = 1; j0 <= ell; ++j0) {
            const auto n = static_cast<double>(b::paper_count(ell, j0, 10300, 5150));
            EXPECT_LE(n, b::theorem1_bound(b::epsilon_for_ell(ell), 2 * ell * delta_c)) << ell << ' ' << j0;
        }
    }
}

TEST(Competitor, Values) {
    EXPECT_NEAR(b::competitor_bound(1e-3, 0.05), 6223979072.24, 0.5);
    EXPECT_NEAR(b::competitor_bound(1e-3, 0.05), 6.22e9, 0.005e9);
    EXPECT_NEAR(b::competitor_bound(1e-3, 0.05) / b::theorem1_bound(1e-3, 0.05), 223.806, 1e-3);
    double prev = INFINITY;
    for (double eps = 1e-7; eps < 0.4; eps *= 1.7) {
        const double v = b::competitor_bound(eps, 0.05);
        EXPECT_LT(v, prev);
        prev = v;
    }
    EXPECT_THROW(b::competitor_bound(3 * pi / 20, 0.05), fae::DomainError);
}

TEST(Competitor, RatioAtLeastHundred) {
    for (double delta : {1e-6, 1e-3, 0.05, 0.2}) {
        for (double eps = 1e-6; eps <= 1e-3; eps *= 1.3) {
            EXPECT_GE(b::competitor_bound(eps, delta) / b::theorem1_bound(eps, delta), 100.0);
        }
    }
}

TEST(Report, Fields) {
    const auto r = b::make_report(1e-3, 0.05);
    EXPECT_EQ(r.ell, 12);
    EXPECT_DOUBLE_EQ(r.delta_c, 0.05 / 24);
    EXPECT_DOUBLE_EQ(r.fae_bound, b::theorem1_bound(1e-3, 0.05));
    EXPECT_DOUBLE_EQ(r.worst_case_count, b::worst_case_count(12, 0.05 / 24));
    for (double eps : {1e-6, 1e-3, 0.01, 0.1}) {
        for (double delta : {1e-6, 0.01, 0.5}) {
            const auto rep = b::make_report(eps, delta);
            EXPECT_GT(rep.fae_bound, 0.0);
            EXPECT_GT(rep.worst_case_count, 0.0);
            EXPECT_LT(rep.fae_bound, rep.competitor_bound);
        }
    }
}
