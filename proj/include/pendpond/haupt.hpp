#ifndef PENDPOND_HAUPT_HPP
#define PENDPOND_HAUPT_HPP

// Level-12 modular functions written as
//
//     content * p(x) / ((1 - 3x)^a (1 + 3x)^b)
//
// with x the Hauptmodul q f2^2 f12^4 / (f4^4 f6^2), and the substitution
// sigma: x -> y = (1 - x)/(1 + 3x).

#include <cstddef>
#include <numeric>
#include <optional>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "eta_quotient.hpp"
#include "series.hpp"

namespace pendpond {

template <class Ring>
struct LocalizedRep {
    using value_type = typename Ring::value_type;

    Ring ring;
    value_type content;
    std::vector<value_type> poly; // primitive part, p_0 .. p_d
    int a = 0;                    // exponent of (1 - 3x)
    int b = 0;                    // exponent of (1 + 3x)

    std::vector<value_type> full_poly() const
    {
        std::vector<value_type> out;
        out.reserve(poly.size());
        for (const auto& c : poly)
            out.push_back(ring.mul(content, c));
        return out;
    }
};

using LocalizedPolyRep = LocalizedRep<IntegerRing>;

inline nlohmann::json to_json(const LocalizedPolyRep& rep)
{
    nlohmann::json poly = nlohmann::json::array();
    for (const auto& c : rep.poly)
        poly.push_back(c.get_str());
    return {{"content", rep.content.get_str()}, {"poly", poly}, {"a", rep.a}, {"b", rep.b}};
}

inline LocalizedPolyRep localized_rep_from_json(const nlohmann::json& j)
{
    LocalizedPolyRep rep;
    rep.content = IntegerRing{}.parse(j.at("content").get<std::string>());
    for (const auto& c : j.at("poly"))
        rep.poly.push_back(IntegerRing{}.parse(c.get<std::string>()));
    rep.a = j.at("a").get<int>();
    rep.b = j.at("b").get<int>();
    return rep;
}

namespace detail {

// Peel p_k x^k off `s` for k = 0..degree; x = q + O(q^2) makes this triangular.
// Returns the coefficients if everything above `degree` then vanishes.
template <class Ring>
std::optional<std::vector<typename Ring::value_type>>
eliminate(Series<Ring> s, const std::vector<Series<Ring>>& x_powers, std::size_t degree)
{
    const auto& ring = s.ring();
    std::vector<typename Ring::value_type> poly;
    poly.reserve(degree + 1);
    for (std::size_t k = 0; k <= degree; ++k) {
        auto c = s.coeffs()[k];
        if (!ring.is_zero(c)) {
            const auto& xk = x_powers[k];
            for (std::size_t i = k; i <= s.order(); ++i)
                ring.sub_mul(s.mutable_coeff(i), c, xk.coeffs()[i]);
        }
        poly.push_back(std::move(c));
    }
    if (!s.is_zero())
        return std::nullopt;
    while (!poly.empty() && ring.is_zero(poly.back()))
        poly.pop_back();
    return poly;
}

template <class Ring>
void extract_content(LocalizedRep<Ring>& rep, std::vector<typename Ring::value_type> full)
{
    if constexpr (std::is_same_v<Ring, IntegerRing>) {
        mpz_class g = 0;
        for (const auto& c : full)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        rep.content = g;
        if (g != 0)
            for (auto& c : full)
                mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    } else {
        rep.content = rep.ring.one();
    }
    rep.poly = std::move(full);
}

} // namespace detail

// Finds the least (a, b), ordered by a + b then a, with a, b <= max_ab, such
// that L z1^a z2^b is a polynomial in x of degree <= L.order - guard whose
// expansion also matches the `guard` coefficients above that degree.
template <class Ring>
LocalizedRep<Ring> reduce(const Series<Ring>& L, int max_ab = 16, std::size_t guard = 20)
{
    if (max_ab < 0)
        throw domain_error("max_ab must be >= 0");
    if (L.order() < guard + 1)
        throw truncation_error("series of order " + std::to_string(L.order()) +
                               " leaves no degree budget with a guard zone of " +
                               std::to_string(guard));
    const auto& ring = L.ring();
    auto order = L.order();
    auto degree = order - guard;

    auto x = expand(make_hauptmodul(Hauptmodul::x), order, ring);
    auto z1 = expand(make_hauptmodul(Hauptmodul::z1), order, ring);
    auto z2 = expand(make_hauptmodul(Hauptmodul::z2), order, ring);

    std::vector<Series<Ring>> x_powers{Series<Ring>::one(ring, order)};
    for (std::size_t k = 1; k <= degree; ++k)
        x_powers.push_back(x_powers.back() * x);

    std::vector<Series<Ring>> z2_powers{Series<Ring>::one(ring, order)};
    for (int k = 1; k <= max_ab; ++k)
        z2_powers.push_back(z2_powers.back() * z2);

    // L z1^a, grown on demand
    std::vector<Series<Ring>> l_z1{L};

    for (int total = 0; total <= 2 * max_ab; ++total) {
        for (int a = std::max(0, total - max_ab); a <= std::min(total, max_ab); ++a) {
            int b = total - a;
            while (static_cast<int>(l_z1.size()) <= a)
                l_z1.push_back(l_z1.back() * z1);
            auto poly = detail::eliminate(l_z1[a] * z2_powers[b], x_powers, degree);
            if (!poly)
                continue;
            LocalizedRep<Ring> rep{ring, ring.one(), {}, a, b};
            detail::extract_content(rep, std::move(*poly));
            return rep;
        }
    }
    throw reduction_error("no localized polynomial representation with a, b <= " +
                          std::to_string(max_ab) + " and degree <= " + std::to_string(degree));
}

// content * p(v) / ((1 - 3v)^a (1 + 3v)^b), computed in v's ring.
template <class Ring>
Series<Ring> evaluate(const LocalizedRep<Ring>& rep, const Series<Ring>& v)
{
    const auto& ring = v.ring();
    auto order = v.order();
    Series<Ring> acc(ring, order);
    for (auto it = rep.poly.rbegin(); it != rep.poly.rend(); ++it) {
        acc = acc * v;
        ring.add_to(acc.mutable_coeff(0), *it);
    }
    acc = scale(acc, rep.content);
    auto one = Series<Ring>::one(ring, order);
    auto three_v = scale(v, ring.from_int(3));
    if (rep.a != 0)
        acc = acc * pow(one - three_v, -rep.a);
    if (rep.b != 0)
        acc = acc * pow(one + three_v, -rep.b);
    return acc;
}

inline LocalizedRep<RationalRing> to_rational(const LocalizedPolyRep& rep)
{
    LocalizedRep<RationalRing> out{RationalRing{}, mpq_class(rep.content), {}, rep.a, rep.b};
    for (const auto& c : rep.poly)
        out.poly.emplace_back(c);
    return out;
}

// The source series of a representation: evaluation at x.
template <class Ring>
Series<Ring> reconstruct(const LocalizedRep<Ring>& rep, std::size_t order)
{
    return evaluate(rep, expand(make_hauptmodul(Hauptmodul::x), order, rep.ring));
}

// sigma(rep) = content * p(y) / ((1 - 3y)^a (1 + 3y)^b). The constant terms
// of 1 - 3y and 1 + 3y are -2 and 4, so over Z this is computed in Q.
inline Series<RationalRing> sigma_apply(const LocalizedPolyRep& rep, std::size_t order)
{
    return evaluate(to_rational(rep),
                    expand(make_hauptmodul(Hauptmodul::y), order, RationalRing{}));
}

// Same substitution inside a ring where -2 and 4 are units (Q, or Z/p for odd p).
template <class Ring>
Series<Ring> sigma_apply_in(const LocalizedRep<Ring>& rep, std::size_t order)
{
    return evaluate(rep, expand(make_hauptmodul(Hauptmodul::y), order, rep.ring));
}

struct HauptRelationsReport {
    std::size_t order = 0;
    bool z1_is_1_minus_3x = false;
    bool z2_is_1_plus_3x = false;
    bool y_is_mobius_of_x = false; // y (1 + 3x) = 1 - x
    bool x_is_mobius_of_y = false; // (1 - y)/(1 + 3y) = x

    bool holds() const
    {
        return z1_is_1_minus_3x && z2_is_1_plus_3x && y_is_mobius_of_x && x_is_mobius_of_y;
    }
};

inline HauptRelationsReport verify_relations(std::size_t order)
{
    IntegerRing zz;
    auto x = expand(make_hauptmodul(Hauptmodul::x), order, zz);
    auto y = expand(make_hauptmodul(Hauptmodul::y), order, zz);
    auto z1 = expand(make_hauptmodul(Hauptmodul::z1), order, zz);
    auto z2 = expand(make_hauptmodul(Hauptmodul::z2), order, zz);
    auto one = Series<IntegerRing>::one(zz, order);
    auto three_x = scale(x, mpz_class(3));
    auto three_y = scale(y, mpz_class(3));

    HauptRelationsReport rep;
    rep.order = order;
    rep.z1_is_1_minus_3x = z1 == one - three_x;
    rep.z2_is_1_plus_3x = z2 == one + three_x;
    rep.y_is_mobius_of_x = y * (one + three_x) == one - x;
    // divide in Q: 1 + 3y has constant term 4
    RationalRing qq;
    auto yq = from_integers(y, qq);
    auto one_q = Series<RationalRing>::one(qq, order);
    auto three_yq = scale(yq, mpq_class(3));
    rep.x_is_mobius_of_y = (one_q - yq) * invert(one_q + three_yq) == from_integers(x, qq);
    return rep;
}

inline nlohmann::json to_json(const HauptRelationsReport& r)
{
    return {{"order", std::to_string(r.order)},
            {"z1_is_1_minus_3x", r.z1_is_1_minus_3x},
            {"z2_is_1_plus_3x", r.z2_is_1_plus_3x},
            {"y_is_mobius_of_x", r.y_is_mobius_of_x},
            {"x_is_mobius_of_y", r.x_is_mobius_of_y},
            {"holds", r.holds()}};
}

} // namespace pendpond

#endif
