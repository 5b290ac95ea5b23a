#ifndef PENDPOND_CUSPS_HPP
#define PENDPOND_CUSPS_HPP

// Cusps of Gamma0(N), orders of eta quotients at them, and the standard
// sufficient conditions for an eta quotient to be a modular function on
// Gamma0(N).
//
// Orders are measured in the local uniformizer at each cusp:
//
//   ord_{a/c}(prod eta(delta tau)^r) = N / (24 gcd(c^2, N)) * sum_delta gcd(c, delta)^2 r / delta
//
// so that a modular function has sum over cusps of ord = 0. The q-order at a
// cusp is ord / width.

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "errors.hpp"
#include "eta_quotient.hpp"

namespace pendpond {

// The cusp a/c with c | N. c == 1 is the cusp 0, c == N is infinity.
struct Cusp {
    std::int64_t a = 0;
    std::int64_t c = 1;

    bool operator==(const Cusp&) const = default;
};

inline std::string to_string(const Cusp& cusp)
{
    if (cusp.c == 1)
        return "0";
    return std::to_string(cusp.a) + "/" + std::to_string(cusp.c);
}

inline std::vector<std::int64_t> divisors(std::int64_t n)
{
    if (n < 1)
        throw domain_error("divisors of a non-positive integer");
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0)
            out.push_back(d);
    return out;
}

// One representative a/c per Gamma0(N)-orbit: c runs over the divisors of N,
// a over the units mod gcd(c, N/c), each class lifted to the least a with
// gcd(a, c) = 1.
inline std::vector<Cusp> cusp_set(std::int64_t level)
{
    if (level < 1)
        throw domain_error("level must be >= 1");
    std::vector<Cusp> out;
    for (auto c : divisors(level)) {
        auto g = std::gcd(c, level / c);
        for (std::int64_t u = 0; u < g; ++u) {
            if (std::gcd(u, g) != 1)
                continue;
            std::int64_t a = (c == 1) ? 0 : (u == 0 ? g : u);
            while (std::gcd(a, c) != 1)
                a += g;
            out.push_back({a, c});
        }
    }
    return out;
}

inline std::int64_t cusp_width(std::int64_t level, const Cusp& cusp)
{
    return level / std::gcd(cusp.c * cusp.c, level);
}

inline std::string to_string(const mpq_class& q) { return q.get_str(); }

// Order of q^s prod f_delta^r at the cusp. The eta exponents fix the order
// everywhere; if 24 s differs from sum delta r_delta the excess q-power is
// charged to the cusp at infinity, the only place it has a meaning.
inline mpq_class eta_order_at_cusp(const EtaQuotient& e, std::int64_t level, const Cusp& cusp)
{
    if (!e.general_factors().empty())
        throw domain_error("cusp orders need a pure f-quotient");
    if (level < 1 || cusp.c < 1 || level % cusp.c != 0)
        throw domain_error("cusp denominator must divide the level");
    mpq_class sum = 0;
    for (auto [delta, r] : e.factors()) {
        if (level % delta != 0)
            throw domain_error("f" + std::to_string(delta) + " does not divide level " +
                               std::to_string(level));
        auto g = std::gcd(cusp.c, delta);
        sum += mpq_class(g * g * r, delta);
    }
    mpq_class order = mpq_class(level, 24 * std::gcd(cusp.c * cusp.c, level)) * sum;
    order.canonicalize();
    if (cusp.c == level)
        order += mpq_class(e.q_shift()) - mpq_class(e.weighted_exponent_sum(), 24);
    order.canonicalize();
    return order;
}

struct CuspOrderTable {
    std::int64_t level = 1;
    std::vector<Cusp> cusps;
    std::vector<std::int64_t> widths;
    std::vector<mpq_class> orders;

    mpq_class order_at(const Cusp& cusp) const
    {
        for (std::size_t i = 0; i < cusps.size(); ++i)
            if (cusps[i].c == cusp.c && (cusps[i].a - cusp.a) %
                                                std::gcd(cusp.c, level / cusp.c) == 0)
                return orders[i];
        throw domain_error("cusp " + to_string(cusp) + " not found at level " +
                           std::to_string(level));
    }

    // Divisor degree; zero for a modular function.
    mpq_class degree() const
    {
        mpq_class s = 0;
        for (const auto& o : orders)
            s += o;
        return s;
    }
};

inline CuspOrderTable cusp_orders(const EtaQuotient& e, std::int64_t level)
{
    CuspOrderTable t;
    t.level = level;
    t.cusps = cusp_set(level);
    for (const auto& cusp : t.cusps) {
        t.widths.push_back(cusp_width(level, cusp));
        t.orders.push_back(eta_order_at_cusp(e, level, cusp));
    }
    return t;
}

inline nlohmann::json to_json(const CuspOrderTable& t)
{
    nlohmann::json cusps = nlohmann::json::array();
    for (std::size_t i = 0; i < t.cusps.size(); ++i)
        cusps.push_back({{"cusp", to_string(t.cusps[i])},
                         {"width", std::to_string(t.widths[i])},
                         {"order", to_string(t.orders[i])}});
    return {{"level", std::to_string(t.level)}, {"cusps", cusps}, {"degree", to_string(t.degree())}};
}

struct ModularityReport {
    std::int64_t level = 1;
    bool weight_zero = false;        // sum r = 0
    bool delta_sum_ok = false;       // sum delta r = 0 mod 24
    bool codelta_sum_ok = false;     // sum (N/delta) r = 0 mod 24
    bool square_ok = false;          // prod delta^r a rational square
    bool shift_consistent = false;   // 24 s = sum delta r
    CuspOrderTable orders;

    bool passes() const
    {
        return weight_zero && delta_sum_ok && codelta_sum_ok && square_ok && shift_consistent;
    }
};

inline ModularityReport is_modular_function(const EtaQuotient& e, std::int64_t level)
{
    if (!e.general_factors().empty())
        throw domain_error("modularity conditions need a pure f-quotient");
    ModularityReport rep;
    rep.level = level;
    std::int64_t codelta = 0;
    std::map<std::int64_t, std::int64_t> prime_exponents;
    for (auto [delta, r] : e.factors()) {
        if (level % delta != 0)
            throw domain_error("f" + std::to_string(delta) + " does not divide level " +
                               std::to_string(level));
        codelta += (level / delta) * r;
        auto d = delta;
        for (std::int64_t p = 2; p * p <= d; ++p)
            while (d % p == 0) {
                prime_exponents[p] += r;
                d /= p;
            }
        if (d > 1)
            prime_exponents[d] += r;
    }
    rep.weight_zero = e.exponent_sum() == 0;
    rep.delta_sum_ok = e.weighted_exponent_sum() % 24 == 0;
    rep.codelta_sum_ok = codelta % 24 == 0;
    rep.square_ok = true;
    for (auto [p, k] : prime_exponents)
        rep.square_ok = rep.square_ok && k % 2 == 0;
    rep.shift_consistent = 24 * e.q_shift() == e.weighted_exponent_sum();
    rep.orders = cusp_orders(e, level);
    return rep;
}

inline nlohmann::json to_json(const ModularityReport& r)
{
    return {{"level", std::to_string(r.level)},
            {"weight_zero", r.weight_zero},
            {"delta_sum_ok", r.delta_sum_ok},
            {"codelta_sum_ok", r.codelta_sum_ok},
            {"square_ok", r.square_ok},
            {"shift_consistent", r.shift_consistent},
            {"passes", r.passes()},
            {"orders", to_json(r.orders)}};
}

} // namespace pendpond

#endif
