#include <gtest/gtest.h>

#include <pendpond/cusps.hpp>

using namespace pendpond;
using E = EtaQuotient;

TEST(Cusps, SetAndWidthsAtLevelTwelve)
{
    auto cusps = cusp_set(12);
    ASSERT_EQ(cusps.size(), 6u);
    std::int64_t total_width = 0;
    for (const auto& c : cusps)
        total_width += cusp_width(12, c);
    // index of Gamma0(12) in SL2(Z)
    EXPECT_EQ(total_width, 24);
    EXPECT_EQ(cusp_width(12, {0, 1}), 12);
    EXPECT_EQ(cusp_width(12, {1, 12}), 1);
    EXPECT_EQ(cusp_width(12, {1, 4}), 3);
}

TEST(Cusps, CountAndIndexIdentity)
{
    // sum of widths equals the index N prod (1 + 1/p)
    for (std::int64_t n : {1, 2, 4, 9, 12, 27, 36, 324}) {
        std::int64_t index = n;
        auto m = n;
        for (std::int64_t p = 2; p <= m; ++p)
            if (m % p == 0) {
                index = index / p * (p + 1);
                while (m % p == 0)
                    m /= p;
            }
        std::int64_t total = 0;
        for (const auto& c : cusp_set(n))
            total += cusp_width(n, c);
        EXPECT_EQ(total, index) << n;
    }
    // number of cusps is sum over d | N of phi(gcd(d, N/d)): 3 * 12 at 4 * 81
    EXPECT_EQ(cusp_set(324).size(), 36u);
    EXPECT_EQ(cusp_set(12).size(), 6u);
    EXPECT_EQ(cusp_set(9).size(), 4u);
}

TEST(Cusps, OrdersOfHauptmoduln)
{
    auto x = make_hauptmodul(Hauptmodul::x);
    EXPECT_EQ(eta_order_at_cusp(x, 12, {1, 12}), 1);
    EXPECT_EQ(eta_order_at_cusp(x, 12, {1, 4}), -1);
    EXPECT_EQ(eta_order_at_cusp(make_hauptmodul(Hauptmodul::z1), 12, {0, 1}), 1);
    EXPECT_THROW((void)eta_order_at_cusp(x, 12, {1, 5}), domain_error);
    EXPECT_THROW((void)eta_order_at_cusp(E::f(5), 12, {1, 12}), domain_error);
}

TEST(Cusps, HauptmodulnHaveOneSimplePole)
{
    for (auto h : {Hauptmodul::x, Hauptmodul::y, Hauptmodul::z1, Hauptmodul::z2}) {
        auto t = cusp_orders(make_hauptmodul(h), 12);
        EXPECT_EQ(t.degree(), 0);
        int poles = 0;
        for (const auto& o : t.orders) {
            if (o < 0) {
                EXPECT_EQ(o, -1);
                ++poles;
            }
        }
        EXPECT_EQ(poles, 1);
    }
}

TEST(Cusps, ModularityOfTheBuildingBlocks)
{
    for (auto h : {Hauptmodul::x, Hauptmodul::y, Hauptmodul::z1, Hauptmodul::z2}) {
        auto r = is_modular_function(make_hauptmodul(h), 12);
        EXPECT_TRUE(r.passes());
        EXPECT_EQ(r.orders.degree(), 0);
    }
    for (int beta : {0, 1}) {
        auto r = is_modular_function(make_P(1, beta), 324);
        EXPECT_TRUE(r.passes()) << beta;
        EXPECT_EQ(r.orders.degree(), 0);
    }
}

TEST(Cusps, ModularityFailures)
{
    auto f1 = is_modular_function(E::f(1), 1);
    EXPECT_FALSE(f1.weight_zero);
    EXPECT_FALSE(f1.passes());

    // f2/f1: weight zero, but sum delta r = 1
    auto r = is_modular_function(E::f(2) / E::f(1), 2);
    EXPECT_TRUE(r.weight_zero);
    EXPECT_FALSE(r.delta_sum_ok);

    // correct eta exponents with a wrong q-power
    auto shifted = E::q_power(2) * E::f(2, 2) * E::f(12, 4) / (E::f(4, 4) * E::f(6, 2));
    auto s = is_modular_function(shifted, 12);
    EXPECT_FALSE(s.shift_consistent);
    EXPECT_FALSE(s.passes());
    EXPECT_NE(s.orders.degree(), 0);
}

TEST(Cusps, Json)
{
    auto j = to_json(is_modular_function(make_hauptmodul(Hauptmodul::x), 12));
    EXPECT_EQ(j["passes"], true);
    EXPECT_EQ(j["orders"]["degree"], "0");
    EXPECT_EQ(j["orders"]["cusps"].size(), 6u);
}
