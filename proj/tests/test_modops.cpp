#include <random>

#include <gtest/gtest.h>

#include <pendpond/modops.hpp>

#include "test_support.hpp"

using namespace pendpond;
using pendpond::testing::random_series;

namespace {

const IntegerRing zz;

Series<IntegerRing> naturals(std::size_t order)
{
    std::vector<mpz_class> c;
    for (std::size_t n = 0; n <= order; ++n)
        c.emplace_back(static_cast<unsigned long>(n));
    return Series<IntegerRing>(zz, std::move(c));
}

} // namespace

TEST(ModopsU, Basics)
{
    std::mt19937_64 rng(1);
    auto f = random_series(rng, 40);
    EXPECT_EQ(u_ell(substitute_qpow(f, 3), 3), f);
    EXPECT_EQ(u_ell(Series<IntegerRing>::one(zz, 9), 3), Series<IntegerRing>::one(zz, 3));
    auto u = u_ell(naturals(30), 3);
    EXPECT_EQ(u.order(), 10u);
    for (std::size_t n = 0; n <= 10; ++n)
        EXPECT_EQ(u.coeff(n), 3 * n);
    EXPECT_THROW((void)u_ell(f, 4), domain_error);
}

TEST(ModopsU, AlphaIteratesThree)
{
    std::mt19937_64 rng(2);
    auto a = random_series(rng, 300);
    EXPECT_EQ(u_alpha(a, 0), u_ell(a, 3));
    auto f = random_series(rng, 10);
    EXPECT_EQ(u_alpha(substitute_qpow(f, 27), 1), f);
    auto u = u_alpha(a, 1);
    for (std::size_t n = 0; n <= u.order(); ++n)
        EXPECT_EQ(u.coeff(n), a.coeff(27 * n));
    EXPECT_EQ(u, extract_progression(a, 27, 0));
    EXPECT_THROW((void)u_alpha(random_series(rng, 20), 1), truncation_error);
}

TEST(ModopsU, CommutesWithReductionModM)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_series(rng, 200, 100000);
        EXPECT_EQ(from_integers(u_alpha(a, 1), ModRing(6)), u_alpha(from_integers(a, ModRing(6)), 1));
    }
}

TEST(ModopsL, Offsets)
{
    EXPECT_EQ(L_step(1), 27u);
    EXPECT_EQ(L_offset(1, 0), 26u);
    EXPECT_EQ(L_offset(1, 1), 19u);
    EXPECT_EQ(L_step(2), 243u);
    EXPECT_EQ(L_offset(2, 0), 233u);
    EXPECT_EQ(L_offset(2, 1), 172u);
}

TEST(ModopsL, MatchesTheProgressionForm)
{
    for (int beta : {0, 1}) {
        auto l = make_L(1, beta, 60);
        EXPECT_EQ(l.coeff(0), 0) << beta;
        EXPECT_EQ(l, make_L_closed_form(1, beta, 60)) << beta;
    }
}

TEST(ModopsL, CoefficientsAreDivisible)
{
    auto l0 = make_L(1, 0, 60);
    for (const auto& c : l0.coeffs())
        ASSERT_TRUE(zz.divisible_by(c, 6));
    auto l1 = make_L(1, 1, 60);
    for (const auto& c : l1.coeffs())
        ASSERT_TRUE(zz.divisible_by(c, 3));
}

TEST(ModopsCongruence, ReportsFirstFailure)
{
    auto pond = table(PartitionKind::pond, 700);
    auto r = check_congruence(pond, 3, 2, 2, 200);
    EXPECT_TRUE(r.holds);
    EXPECT_FALSE(r.first_failure);
    auto bad = check_congruence(pond, 3, 0, 2, 200);
    ASSERT_TRUE(bad.first_failure.has_value());
    EXPECT_FALSE(bad.holds);
    EXPECT_FALSE(zz.divisible_by(pond.coeff(3 * *bad.first_failure), 2));
    EXPECT_THROW((void)check_congruence(pond, 3, 2, 2, 600), truncation_error);
    auto j = to_json(bad);
    EXPECT_EQ(j["holds"], false);
    EXPECT_TRUE(j["first_failure"].is_string());
    EXPECT_TRUE(to_json(r)["first_failure"].is_null());
}

TEST(ModopsCongruence, ReportInvariantOnRandomTables)
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        auto t = random_series(rng, 120, 4);
        std::uint64_t m = 1 + rng() % 6;
        std::uint64_t r = rng() % m;
        std::uint64_t mod = 2 + rng() % 3;
        auto rep = check_congruence(t, m, r, mod, 10);
        EXPECT_EQ(rep.holds, !rep.first_failure.has_value());
        if (rep.first_failure) {
            EXPECT_FALSE(zz.divisible_by(t.coeff(m * *rep.first_failure + r), mod));
            for (std::uint64_t n = 0; n < *rep.first_failure; ++n)
                EXPECT_TRUE(zz.divisible_by(t.coeff(m * n + r), mod));
        }
    }
}

TEST(ModopsCongruence, ScanFindsTheKnownProgressions)
{
    auto pond = table(PartitionKind::pond, 2000, ModRing(4));
    auto found = scan_congruences(pond, 4, 3, 600);
    EXPECT_NE(std::find(found.begin(), found.end(), std::pair<std::uint64_t, std::uint64_t>{3, 1}),
              found.end());
    auto pond3 = table(PartitionKind::pond, 5600, ModRing(3));
    auto found3 = scan_congruences(pond3, 3, 27, 200);
    EXPECT_NE(std::find(found3.begin(), found3.end(),
                        std::pair<std::uint64_t, std::uint64_t>{27, 26}),
              found3.end());
    EXPECT_THROW((void)scan_congruences(pond3, 3, 27, 300), truncation_error);
}

TEST(ModopsCongruence, ModularTableRejectsIncompatibleModulus)
{
    auto t = table(PartitionKind::pond, 100, ModRing(6));
    EXPECT_THROW((void)check_congruence(t, 3, 2, 4, 10), ring_mismatch);
    EXPECT_TRUE(check_congruence(t, 3, 2, 2, 30).holds);
}
