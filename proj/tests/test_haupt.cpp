#include <gtest/gtest.h>

#include <pendpond/haupt.hpp>
#include <pendpond/modops.hpp>

#include "test_support.hpp"

using namespace pendpond;

namespace {

const IntegerRing zz;

// The level-12 polynomial of L_1^(0) over (1 - 3x)^11 (1 + 3x)^8, content 6.
const std::vector<long> printed_l10 = {
    0,           135,         7784,        246674,      2988256,     29350555,
    147829632,   639848952,   1430421984,  2416633758,  754252560,   -3857299380,
    -6302175840, -3695798178, 3775356864,  6406422840,  765275040,   -1944188325,
    -573956280,  9565938,     0,           -4782969};

const LocalizedPolyRep& rep_l10()
{
    static const LocalizedPolyRep rep = reduce(make_L(1, 0, 60));
    return rep;
}

const LocalizedPolyRep& rep_l11()
{
    static const LocalizedPolyRep rep = reduce(make_L(1, 1, 60));
    return rep;
}

Series<RationalRing> to_q(const Series<IntegerRing>& s) { return from_integers(s, RationalRing{}); }

} // namespace

TEST(HauptReduce, PolynomialInput)
{
    auto x = expand(make_hauptmodul(Hauptmodul::x), 40, zz);
    auto z1 = expand(make_hauptmodul(Hauptmodul::z1), 40, zz);
    auto rep = reduce(z1 * x);
    EXPECT_EQ(rep.a, 0);
    EXPECT_EQ(rep.b, 0);
    EXPECT_EQ(rep.content, 1);
    EXPECT_EQ(rep.poly, (std::vector<mpz_class>{0, 1, -3}));
}

TEST(HauptReduce, RationalInput)
{
    auto x = expand(make_hauptmodul(Hauptmodul::x), 60, zz);
    auto z1 = expand(make_hauptmodul(Hauptmodul::z1), 60, zz);
    auto z2 = expand(make_hauptmodul(Hauptmodul::z2), 60, zz);
    auto f = scale(x, mpz_class(4)) * pow(z1, -2) * pow(z2, -1);
    auto rep = reduce(f);
    EXPECT_EQ(rep.a, 2);
    EXPECT_EQ(rep.b, 1);
    EXPECT_EQ(rep.content, 4);
    EXPECT_EQ(rep.poly, (std::vector<mpz_class>{0, 1}));
}

TEST(HauptReduce, LOneZeroMatchesThePrintedPolynomial)
{
    const auto& rep = rep_l10();
    EXPECT_EQ(rep.a, 11);
    EXPECT_EQ(rep.b, 8);
    EXPECT_EQ(rep.content, 6);
    ASSERT_EQ(rep.poly.size(), printed_l10.size());
    for (std::size_t k = 0; k < printed_l10.size(); ++k)
        EXPECT_EQ(rep.poly[k], printed_l10[k]) << "x^" << k;
}

TEST(HauptReduce, LOneOneContent)
{
    const auto& rep = rep_l11();
    EXPECT_TRUE(zz.divisible_by(rep.content, 3));
    EXPECT_FALSE(zz.divisible_by(rep.content, 2));
    // the x-representation of L_1^(1) is not the L_1^(0) polynomial; the
    // shared polynomial appears only after sigma
    EXPECT_NE(rep.poly, rep_l10().poly);
}

TEST(HauptReduce, RoundTrip)
{
    EXPECT_EQ(reconstruct(rep_l10(), 60), make_L(1, 0, 60));
    EXPECT_EQ(reconstruct(rep_l11(), 60), make_L(1, 1, 60));
}

TEST(HauptReduce, Failures)
{
    // f1 has no pole at infinity and is not a level-12 function
    auto f1 = expand(EtaQuotient::f(1), 60, zz);
    EXPECT_THROW((void)reduce(f1, 3), reduction_error);
    EXPECT_THROW((void)reduce(f1.truncated(10)), truncation_error);
}

TEST(HauptReduce, Json)
{
    auto j = to_json(rep_l10());
    EXPECT_EQ(j["content"], "6");
    EXPECT_EQ(j["a"], 11);
    EXPECT_EQ(j["poly"][1], "135");
    auto back = localized_rep_from_json(j);
    EXPECT_EQ(back.poly, rep_l10().poly);
    EXPECT_EQ(back.content, rep_l10().content);
}

TEST(HauptSigma, MapsLOneZeroToMinusTwoLOneOne)
{
    auto lhs = sigma_apply(rep_l10(), 60);
    EXPECT_EQ(lhs, scale(to_q(make_L(1, 1, 60)), mpq_class(-2)));
}

TEST(HauptSigma, MapsLOneOneToMinusHalfLOneZero)
{
    auto lhs = sigma_apply(rep_l11(), 60);
    EXPECT_EQ(lhs, scale(to_q(make_L(1, 0, 60)), mpq_class(-1, 2)));
}

TEST(HauptSigma, ConstantAndInvolution)
{
    LocalizedPolyRep one{zz, 1, {1}, 0, 0};
    EXPECT_EQ(sigma_apply(one, 30), Series<RationalRing>::one(RationalRing{}, 30));

    // sigma(sigma(x)) = x: (1 - y)/(1 + 3y) as a rep in y is (1 - t)/(1 + 3t)
    LocalizedPolyRep mobius{zz, 1, {1, -1}, 0, 1};
    EXPECT_EQ(sigma_apply(mobius, 60), to_q(expand(make_hauptmodul(Hauptmodul::x), 60, zz)));
    EXPECT_EQ(evaluate(to_rational(mobius), to_q(expand(make_hauptmodul(Hauptmodul::x), 60, zz))),
              to_q(expand(make_hauptmodul(Hauptmodul::y), 60, zz)));
}

TEST(HauptSigma, OddModularRingAgreesWithRationals)
{
    ModRing f7(7);
    LocalizedRep<ModRing> rep{f7, f7.from_integer(rep_l10().content), {}, rep_l10().a,
                              rep_l10().b};
    for (const auto& c : rep_l10().poly)
        rep.poly.push_back(f7.from_integer(c));
    auto expected = from_integers(scale(make_L(1, 1, 40), mpz_class(-2)), f7);
    EXPECT_EQ(sigma_apply_in(rep, 40), expected);
}

TEST(HauptRelations, Hold)
{
    auto r = verify_relations(200);
    EXPECT_TRUE(r.z1_is_1_minus_3x);
    EXPECT_TRUE(r.z2_is_1_plus_3x);
    EXPECT_TRUE(r.y_is_mobius_of_x);
    EXPECT_TRUE(r.x_is_mobius_of_y);
    EXPECT_EQ(to_json(r)["holds"], true);
}
