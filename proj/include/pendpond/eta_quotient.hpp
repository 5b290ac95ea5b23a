#ifndef PENDPOND_ETA_QUOTIENT_HPP
#define PENDPOND_ETA_QUOTIENT_HPP

// Products q^s * prod f_delta^{r_delta} * prod (+-q^a; q^b)_inf^e, where
// f_delta = (q^delta; q^delta)_inf. Exponents are exact integers; a q-shift is
// always an integer, so fractional shifts are rejected when parsing.

#include <cstdint>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "series.hpp"

namespace pendpond {

// (q^a; q^b)_inf^e, or (-q^a; q^b)_inf^e when negated.
struct GeneralFactor {
    std::int64_t a = 1;
    std::int64_t b = 1;
    std::int64_t e = 1;
    bool negated = false;

    bool operator==(const GeneralFactor&) const = default;
};

class EtaQuotient {
public:
    EtaQuotient() = default;

    static EtaQuotient f(std::int64_t delta, std::int64_t exponent = 1)
    {
        EtaQuotient e;
        e.multiply_f(delta, exponent);
        return e;
    }
    static EtaQuotient q_power(std::int64_t s)
    {
        EtaQuotient e;
        e.shift_ = s;
        return e;
    }
    static EtaQuotient pochhammer(std::int64_t a, std::int64_t b, std::int64_t e = 1,
                                  bool negated = false)
    {
        EtaQuotient out;
        out.multiply_general({a, b, e, negated});
        return out;
    }

    std::int64_t q_shift() const { return shift_; }
    const std::map<std::int64_t, std::int64_t>& factors() const { return factors_; }
    const std::vector<GeneralFactor>& general_factors() const { return general_; }

    std::int64_t exponent_of(std::int64_t delta) const
    {
        auto it = factors_.find(delta);
        return it == factors_.end() ? 0 : it->second;
    }

    EtaQuotient& multiply_f(std::int64_t delta, std::int64_t exponent)
    {
        if (delta < 1)
            throw domain_error("f_delta needs delta >= 1, got " + std::to_string(delta));
        if (exponent == 0)
            return *this;
        auto& r = factors_[delta];
        r += exponent;
        if (r == 0)
            factors_.erase(delta);
        return *this;
    }

    EtaQuotient& multiply_general(const GeneralFactor& g)
    {
        if (g.a < 1 || g.b < 1 || g.a > g.b)
            throw domain_error("(q^a;q^b) needs 1 <= a <= b");
        if (g.e == 0)
            return *this;
        for (auto it = general_.begin(); it != general_.end(); ++it) {
            if (it->a == g.a && it->b == g.b && it->negated == g.negated) {
                it->e += g.e;
                if (it->e == 0)
                    general_.erase(it);
                return *this;
            }
        }
        general_.push_back(g);
        return *this;
    }

    EtaQuotient& operator*=(const EtaQuotient& other)
    {
        shift_ += other.shift_;
        for (auto [delta, r] : other.factors_)
            multiply_f(delta, r);
        for (const auto& g : other.general_)
            multiply_general(g);
        return *this;
    }

    EtaQuotient pow(std::int64_t k) const
    {
        EtaQuotient out;
        out.shift_ = shift_ * k;
        for (auto [delta, r] : factors_)
            out.multiply_f(delta, r * k);
        for (auto g : general_) {
            g.e *= k;
            out.multiply_general(g);
        }
        return out;
    }

    friend EtaQuotient operator*(EtaQuotient a, const EtaQuotient& b) { return a *= b; }
    friend EtaQuotient operator/(EtaQuotient a, const EtaQuotient& b) { return a *= b.pow(-1); }

    // General factors compare as a multiset.
    bool operator==(const EtaQuotient& other) const
    {
        if (shift_ != other.shift_ || factors_ != other.factors_ ||
            general_.size() != other.general_.size())
            return false;
        for (const auto& g : general_) {
            bool found = false;
            for (const auto& h : other.general_)
                found = found || g == h;
            if (!found)
                return false;
        }
        return true;
    }

    // sum r_delta: the weight is half of this.
    std::int64_t exponent_sum() const
    {
        std::int64_t s = 0;
        for (auto [delta, r] : factors_)
            s += r;
        return s;
    }

    // sum delta * r_delta; the eta form carries q^(this/24).
    std::int64_t weighted_exponent_sum() const
    {
        std::int64_t s = 0;
        for (auto [delta, r] : factors_)
            s += delta * r;
        return s;
    }

private:
    std::int64_t shift_ = 0;
    std::map<std::int64_t, std::int64_t> factors_;
    std::vector<GeneralFactor> general_;
};

namespace detail {

// Euler: f_delta = sum_k (-1)^k q^(delta k(3k-1)/2), k over all integers.
inline std::vector<SignedTerm> pentagonal_terms(std::int64_t delta, std::size_t order)
{
    std::vector<SignedTerm> out{{0, 1}};
    auto d = static_cast<std::size_t>(delta);
    for (std::size_t k = 1;; ++k) {
        int sign = (k % 2 == 0) ? 1 : -1;
        std::size_t lo = d * (k * (3 * k - 1) / 2);
        std::size_t hi = d * (k * (3 * k + 1) / 2);
        if (lo > order)
            break;
        out.push_back({lo, sign});
        if (hi <= order)
            out.push_back({hi, sign});
    }
    return out;
}

template <class Ring>
void apply_general(std::vector<typename Ring::value_type>& a, const Ring& ring,
                   const GeneralFactor& g)
{
    // each factor is 1 - c q^m with c = +1, or c = -1 when negated
    auto order = a.size() - 1;
    auto reps = g.e < 0 ? -g.e : g.e;
    for (std::int64_t rep = 0; rep < reps; ++rep) {
        for (auto m = static_cast<std::size_t>(g.a); m <= order; m += static_cast<std::size_t>(g.b)) {
            if (g.e > 0) {
                for (std::size_t n = order; n >= m; --n) {
                    if (g.negated)
                        ring.add_to(a[n], a[n - m]);
                    else
                        ring.sub_from(a[n], a[n - m]);
                }
            } else {
                for (std::size_t n = m; n <= order; ++n) {
                    if (g.negated)
                        ring.sub_from(a[n], a[n - m]);
                    else
                        ring.add_to(a[n], a[n - m]);
                }
            }
        }
    }
}

} // namespace detail

// Series of the quotient to `order`. Each f_delta^r is applied by r sparse
// multiplications (or divisions) with its pentagonal expansion.
template <class Ring>
Series<Ring> expand(const EtaQuotient& e, std::size_t order, const Ring& ring = Ring{})
{
    if (e.q_shift() < 0)
        throw domain_error("cannot expand a quotient with negative q-shift " +
                           std::to_string(e.q_shift()));
    auto s = static_cast<std::size_t>(e.q_shift());
    Series<Ring> out(ring, order);
    if (s > order)
        return out;
    auto inner = order - s;
    std::vector<typename Ring::value_type> a(inner + 1, ring.zero());
    a[0] = ring.one();
    for (const auto& g : e.general_factors())
        detail::apply_general(a, ring, g);
    for (auto [delta, r] : e.factors()) {
        auto terms = detail::pentagonal_terms(delta, inner);
        for (std::int64_t k = 0; k < (r < 0 ? -r : r); ++k) {
            if (r > 0)
                multiply_signed_sparse(a, ring, std::span<const SignedTerm>(terms));
            else
                divide_signed_sparse(a, ring, std::span<const SignedTerm>(terms));
        }
    }
    for (std::size_t n = 0; n <= inner; ++n)
        out.mutable_coeff(n + s) = std::move(a[n]);
    return out;
}

struct SignedQuotient {
    int sign;
    EtaQuotient quotient;
};

// q -> -q on an f-quotient: f_delta is fixed for even delta and becomes
// f_{2 delta}^3 / (f_delta f_{4 delta}) for odd delta; q^s picks up (-1)^s.
inline SignedQuotient nu_symbolic(const EtaQuotient& e)
{
    if (!e.general_factors().empty())
        throw domain_error("nu_symbolic is defined on f-quotients only");
    EtaQuotient out = EtaQuotient::q_power(e.q_shift());
    for (auto [delta, r] : e.factors()) {
        if (delta % 2 == 0) {
            out.multiply_f(delta, r);
        } else {
            out.multiply_f(2 * delta, 3 * r);
            out.multiply_f(delta, -r);
            out.multiply_f(4 * delta, -r);
        }
    }
    return {e.q_shift() % 2 == 0 ? 1 : -1, std::move(out)};
}

// Text form: "q^1 * f81^3 * f108^-2 * (-q^1;q^2)^-1"; "" or "1" is the unit.
inline std::string to_string(const EtaQuotient& e)
{
    std::vector<std::string> parts;
    if (e.q_shift() != 0)
        parts.push_back("q^" + std::to_string(e.q_shift()));
    for (auto [delta, r] : e.factors())
        parts.push_back("f" + std::to_string(delta) + (r == 1 ? "" : "^" + std::to_string(r)));
    for (const auto& g : e.general_factors()) {
        std::string t = "(" + std::string(g.negated ? "-" : "") + "q^" + std::to_string(g.a) +
                        ";q^" + std::to_string(g.b) + ")";
        if (g.e != 1)
            t += "^" + std::to_string(g.e);
        parts.push_back(std::move(t));
    }
    if (parts.empty())
        return "1";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        out += " * " + parts[i];
    return out;
}

inline EtaQuotient parse_quotient(std::string_view text)
{
    static const std::regex q_re(R"(q(?:\^(-?\d+))?)");
    static const std::regex q_frac_re(R"(q\^\(?-?\d*[./]\d*\)?)");
    static const std::regex f_re(R"(f(\d+)(?:\^(-?\d+))?)");
    static const std::regex g_re(R"(\((-?)q(?:\^(\d+))?;q(?:\^(\d+))?\)(?:_inf)?(?:\^(-?\d+))?)");

    auto to_i64 = [&](const std::string& s) {
        try {
            return std::stoll(s);
        } catch (const std::exception&) {
            throw parse_error("integer out of range in '" + std::string(text) + "'");
        }
    };

    EtaQuotient out;
    std::string compact;
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '\n')
            compact.push_back(c);
    if (compact.empty() || compact == "1")
        return out;

    std::stringstream terms(compact);
    std::string term;
    while (std::getline(terms, term, '*')) {
        std::smatch m;
        if (term == "1")
            continue;
        if (std::regex_match(term, m, q_re)) {
            out *= EtaQuotient::q_power(m[1].matched ? to_i64(m[1]) : 1);
        } else if (std::regex_match(term, m, q_frac_re)) {
            throw parse_error("fractional q-shift '" + term + "' is not allowed");
        } else if (std::regex_match(term, m, f_re)) {
            auto delta = to_i64(m[1]);
            if (delta < 1)
                throw parse_error("f_delta needs delta >= 1 in '" + term + "'");
            out.multiply_f(delta, m[2].matched ? to_i64(m[2]) : 1);
        } else if (std::regex_match(term, m, g_re)) {
            GeneralFactor g;
            g.negated = m[1].length() > 0;
            g.a = m[2].matched ? to_i64(m[2]) : 1;
            g.b = m[3].matched ? to_i64(m[3]) : 1;
            g.e = m[4].matched ? to_i64(m[4]) : 1;
            if (g.a < 1 || g.b < 1 || g.a > g.b)
                throw parse_error("(q^a;q^b) needs 1 <= a <= b in '" + term + "'");
            out.multiply_general(g);
        } else {
            throw parse_error("cannot parse factor '" + term + "'");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Named generating functions

enum class NamedSeries { pend, pond, ped, pod, pend_neg, pond_neg };

inline EtaQuotient make_named(NamedSeries name)
{
    using E = EtaQuotient;
    switch (name) {
    case NamedSeries::pend: // f2 f12 / (f1 f4 f6)
        return E::f(2) * E::f(12) / (E::f(1) * E::f(4) * E::f(6));
    case NamedSeries::pond: // f4 f6^2 / (f2^2 f3 f12)
        return E::f(4) * E::f(6, 2) / (E::f(2, 2) * E::f(3) * E::f(12));
    case NamedSeries::ped: // (-q^2;q^2) / (q;q^2)
        return E::pochhammer(2, 2, 1, true) * E::pochhammer(1, 2, -1);
    case NamedSeries::pod: // (-q;q^2) / (q^2;q^2)
        return E::pochhammer(1, 2, 1, true) * E::pochhammer(2, 2, -1);
    case NamedSeries::pend_neg: // f1 f12 / (f2^2 f6)
        return E::f(1) * E::f(12) / (E::f(2, 2) * E::f(6));
    case NamedSeries::pond_neg: // f3 f4 / (f2^2 f6)
        return E::f(3) * E::f(4) / (E::f(2, 2) * E::f(6));
    }
    throw domain_error("unknown named series");
}

inline NamedSeries parse_named(std::string_view name)
{
    static const std::pair<std::string_view, NamedSeries> table[] = {
        {"pend", NamedSeries::pend},         {"pond", NamedSeries::pond},
        {"ped", NamedSeries::ped},           {"pod", NamedSeries::pod},
        {"pend_neg", NamedSeries::pend_neg}, {"pond_neg", NamedSeries::pond_neg},
    };
    for (auto [key, value] : table)
        if (key == name)
            return value;
    throw domain_error("unknown named series '" + std::string(name) + "'");
}

inline EtaQuotient make_named(std::string_view name) { return make_named(parse_named(name)); }

inline std::int64_t pow3(int k)
{
    std::int64_t v = 1;
    for (int i = 0; i < k; ++i)
        v *= 3;
    return v;
}

// The extended generating functions whose U_3^(2 alpha + 1) images are the
// level-12 functions L_alpha^(beta).
//   beta = 0: q^((9^a - 1)/8)   f_{9T}^3 / f_{12T}^2                 * pond GF
//   beta = 1: q^((7 9^a + 1)/8) f_{3T}^2 f_{9T}^3 f_{12T}^2 / f_{6T}^6 * pend GF
// with T = 9^alpha.
inline EtaQuotient make_P(int alpha, int beta)
{
    if (alpha < 1 || alpha > 6)
        throw domain_error("make_P needs 1 <= alpha <= 6");
    if (beta != 0 && beta != 1)
        throw domain_error("make_P needs beta in {0, 1}");
    auto t = pow3(2 * alpha);
    using E = EtaQuotient;
    if (beta == 0) {
        if ((t - 1) % 8 != 0)
            throw domain_error("non-integral q-shift in make_P");
        return E::q_power((t - 1) / 8) * E::f(9 * t, 3) * E::f(12 * t, -2) *
               make_named(NamedSeries::pond);
    }
    if ((7 * t + 1) % 8 != 0)
        throw domain_error("non-integral q-shift in make_P");
    return E::q_power((7 * t + 1) / 8) * E::f(3 * t, 2) * E::f(9 * t, 3) * E::f(12 * t, 2) *
           E::f(6 * t, -6) * make_named(NamedSeries::pend);
}

enum class Hauptmodul { x, y, z1, z2 };

inline Hauptmodul parse_hauptmodul(std::string_view name)
{
    if (name == "x")
        return Hauptmodul::x;
    if (name == "y")
        return Hauptmodul::y;
    if (name == "z1")
        return Hauptmodul::z1;
    if (name == "z2")
        return Hauptmodul::z2;
    throw domain_error("unknown Hauptmodul '" + std::string(name) + "'");
}

// Level-12 functions with z1 = 1 - 3x, z2 = 1 + 3x, y = (1 - x)/(1 + 3x).
inline EtaQuotient make_hauptmodul(Hauptmodul name)
{
    using E = EtaQuotient;
    switch (name) {
    case Hauptmodul::x: // q f2^2 f12^4 / (f4^4 f6^2)
        return E::q_power(1) * E::f(2, 2) * E::f(12, 4) / (E::f(4, 4) * E::f(6, 2));
    case Hauptmodul::z1: // f1^3 f12 / (f3 f4^3)
        return E::f(1, 3) * E::f(12) / (E::f(3) * E::f(4, 3));
    case Hauptmodul::z2: // f2^9 f3 f12^2 / (f1^3 f4^6 f6^3)
        return E::f(2, 9) * E::f(3) * E::f(12, 2) / (E::f(1, 3) * E::f(4, 6) * E::f(6, 3));
    case Hauptmodul::y: // f1^4 f4^4 f6^10 / (f2^10 f3^4 f12^4)
        return E::f(1, 4) * E::f(4, 4) * E::f(6, 10) / (E::f(2, 10) * E::f(3, 4) * E::f(12, 4));
    }
    throw domain_error("unknown Hauptmodul");
}

inline EtaQuotient make_hauptmodul(std::string_view name)
{
    return make_hauptmodul(parse_hauptmodul(name));
}

} // namespace pendpond

#endif
