#ifndef PENDPOND_VERIFY_HPP
#define PENDPOND_VERIFY_HPP

// The ten end-to-end checks, shared by the acceptance runner and the
// `verify-all` command.

#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cusps.hpp"
#include "eta_quotient.hpp"
#include "haupt.hpp"
#include "modops.hpp"
#include "numeta.hpp"
#include "partitions.hpp"
#include "series.hpp"

namespace pendpond::verify {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

inline nlohmann::json to_json(const CheckResult& r)
{
    std::ostringstream secs;
    secs.precision(3);
    secs << std::fixed << r.seconds;
    return {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", secs.str()}};
}

using ModTableFn = std::function<Series<ModRing>(PartitionKind, std::size_t, std::uint64_t)>;

struct Options {
    bool full = true;          // alpha in {1, 2}; otherwise alpha = 1 only
    bool inject_fault = false; // corrupts pond(26) in every table handed to the checks
    unsigned digits = 50;
    ModTableFn mod_table;      // defaults to direct expansion
};

// Coefficients of L_1^(0) over (1 - 3x)^11 (1 + 3x)^8 after the content 6.
inline const std::vector<std::string>& reference_l10_poly()
{
    static const std::vector<std::string> c = {
        "0",          "135",         "7784",        "246674",      "2988256",
        "29350555",   "147829632",   "639848952",   "1430421984",  "2416633758",
        "754252560",  "-3857299380", "-6302175840", "-3695798178", "3775356864",
        "6406422840", "765275040",   "-1944188325", "-573956280",  "9565938",
        "0",          "-4782969"};
    return c;
}

namespace detail {

constexpr std::size_t fault_index = 26;

template <class Ring>
void maybe_corrupt(const Options& opt, PartitionKind kind, Series<Ring>& s)
{
    if (opt.inject_fault && kind == PartitionKind::pond && s.order() >= fault_index)
        s.ring().add_to(s.mutable_coeff(fault_index), s.ring().one());
}

inline Series<ModRing> mod_table(const Options& opt, PartitionKind kind, std::size_t bound,
                                 std::uint64_t modulus)
{
    auto s = opt.mod_table ? opt.mod_table(kind, bound, modulus) : table(kind, bound, ModRing(modulus));
    maybe_corrupt(opt, kind, s);
    return s;
}

struct Progression {
    PartitionKind kind;
    std::uint64_t step;
    std::uint64_t residue;
    std::uint64_t modulus;
    std::uint64_t n_max;
};

// One table per (kind, modulus) covering every progression that needs it.
inline void check_progressions(const Options& opt, const std::vector<Progression>& list, CheckResult& out)
{
    out.pass = true;
    std::ostringstream detail;
    for (const auto& p : list) {
        auto t = mod_table(opt, p.kind, p.step * p.n_max + p.residue, p.modulus);
        auto rep = check_congruence(t, p.step, p.residue, p.modulus, p.n_max);
        detail << name_of(p.kind) << "(" << p.step << "n+" << p.residue << ") mod " << p.modulus
               << " n<=" << p.n_max << ": ";
        if (rep.holds) {
            detail << "ok; ";
        } else {
            detail << "fails at n=" << *rep.first_failure << "; ";
            out.pass = false;
        }
    }
    out.detail = detail.str();
}

template <class Fn>
CheckResult timed(int id, std::string name, Fn&& fn)
{
    CheckResult r;
    r.id = id;
    r.name = std::move(name);
    auto start = std::chrono::steady_clock::now();
    try {
        fn(r);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail += std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline std::vector<int> alphas(const Options& opt)
{
    return opt.full ? std::vector<int>{1, 2} : std::vector<int>{1};
}

} // namespace detail

inline CheckResult check_oracle_tables(const Options& opt)
{
    return detail::timed(1, "generating functions match enumeration (n <= 40)", [&](CheckResult& r) {
        r.pass = true;
        std::ostringstream d;
        for (auto kind : {PartitionKind::pend, PartitionKind::pond, PartitionKind::ped, PartitionKind::pod}) {
            auto t = table(kind, 40);
            detail::maybe_corrupt(opt, kind, t);
            for (std::uint32_t n = 0; n <= 40; ++n) {
                if (t.coeff(n) != mpz_class(count_bruteforce(kind, n))) {
                    d << name_of(kind) << "(" << n << ") differs; ";
                    r.pass = false;
                    break;
                }
            }
        }
        r.detail = r.pass ? "pend pond ped pod agree" : d.str();
    });
}

inline CheckResult check_base_congruences(const Options& opt)
{
    return detail::timed(2, "pond mod 2, 4, 3 and pend mod 3", [&](CheckResult& r) {
        detail::check_progressions(opt,
                                   {{PartitionKind::pond, 3, 2, 2, 600},
                                    {PartitionKind::pond, 3, 1, 4, 600},
                                    {PartitionKind::pond, 27, 26, 3, 200},
                                    {PartitionKind::pend, 27, 19, 3, 200}},
                                   r);
    });
}

inline CheckResult check_families(const Options& opt)
{
    return detail::timed(3, "pond/pend mod 3 families", [&](CheckResult& r) {
        std::vector<detail::Progression> list;
        for (int alpha : detail::alphas(opt)) {
            std::uint64_t n_max = alpha == 1 ? 200 : 50;
            list.push_back({PartitionKind::pond, L_step(alpha), L_offset(alpha, 0), 3, n_max});
            list.push_back({PartitionKind::pend, L_step(alpha), L_offset(alpha, 1), 3, n_max});
        }
        detail::check_progressions(opt, list, r);
    });
}

inline CheckResult check_ped_pod(const Options& opt)
{
    return detail::timed(4, "ped/pod mod 3 (alpha = 1)", [&](CheckResult& r) {
        detail::check_progressions(opt,
                                   {{PartitionKind::ped, 27, 19, 3, 200},
                                    {PartitionKind::pod, 27, 26, 3, 200}},
                                   r);
    });
}

inline CheckResult check_identities(const Options&)
{
    return detail::timed(5, "product identities and Hauptmodul relations", [&](CheckResult& r) {
        using E = EtaQuotient;
        IntegerRing zz;
        bool minus_q = expand(E::f(2) * E::pochhammer(1, 2, 1, true), 500, zz) ==
                       expand(E::f(2, 3) / (E::f(1) * E::f(4)), 500, zz);
        bool pend_neg = alternate_sign(expand(make_named(NamedSeries::pend), 300, zz)) ==
                        expand(make_named(NamedSeries::pend_neg), 300, zz);
        bool pond_neg = alternate_sign(expand(make_named(NamedSeries::pond), 300, zz)) ==
                        expand(make_named(NamedSeries::pond_neg), 300, zz);
        auto rel = verify_relations(200);
        r.pass = minus_q && pend_neg && pond_neg && rel.holds();
        std::ostringstream d;
        d << "(-q;-q)=f2^3/(f1f4) to 500: " << (minus_q ? "ok" : "FAIL")
          << "; pend at -q to 300: " << (pend_neg ? "ok" : "FAIL")
          << "; pond at -q to 300: " << (pond_neg ? "ok" : "FAIL")
          << "; z1, z2, y relations to 200: " << (rel.holds() ? "ok" : "FAIL");
        r.detail = d.str();
    });
}

inline CheckResult check_L_pipeline(const Options& opt)
{
    return detail::timed(6, "L functions: closed form and divisibility", [&](CheckResult& r) {
        r.pass = true;
        std::ostringstream d;
        for (int beta : {0, 1}) {
            bool same = make_L(1, beta, 60) == make_L_closed_form(1, beta, 60);
            d << "L_1^(" << beta << ") closed form: " << (same ? "ok" : "FAIL") << "; ";
            r.pass = r.pass && same;
        }
        IntegerRing zz;
        for (int alpha : detail::alphas(opt)) {
            std::size_t order = alpha == 1 ? 60 : 40;
            for (int beta : {0, 1}) {
                std::uint64_t m = beta == 0 ? 6 : 3;
                auto l = make_L(alpha, beta, order);
                bool ok = true;
                for (const auto& c : l.coeffs())
                    ok = ok && zz.divisible_by(c, m);
                d << "L_" << alpha << "^(" << beta << ") = 0 mod " << m << " to " << order << ": "
                  << (ok ? "ok" : "FAIL") << "; ";
                r.pass = r.pass && ok;
            }
        }
        r.detail = d.str();
    });
}

inline CheckResult check_reduce_regression(const Options&)
{
    return detail::timed(7, "reduce(L_1^(0)) coefficient regression", [&](CheckResult& r) {
        auto rep = reduce(make_L(1, 0, 60));
        const auto& ref = reference_l10_poly();
        std::ostringstream d;
        d << "content " << rep.content.get_str() << ", (a, b) = (" << rep.a << ", " << rep.b << ")";
        bool ok = rep.content == 6 && rep.a == 11 && rep.b == 8;
        std::size_t n = std::max(ref.size(), rep.poly.size());
        std::size_t diffs = 0;
        for (std::size_t k = 0; k < n; ++k) {
            mpz_class want = k < ref.size() ? mpz_class(ref[k]) : mpz_class(0);
            mpz_class got = k < rep.poly.size() ? rep.poly[k] : mpz_class(0);
            if (want != got) {
                d << "; x^" << k << ": expected " << want.get_str() << ", got " << got.get_str();
                ++diffs;
            }
        }
        d << "; " << diffs << " coefficient differences over degree " << (n - 1);
        r.pass = ok && diffs == 0;
        r.detail = d.str();
    });
}

inline CheckResult check_sigma(const Options&)
{
    return detail::timed(8, "sigma exchanges L_1^(0) and L_1^(1)", [&](CheckResult& r) {
        RationalRing qq;
        auto l0 = make_L(1, 0, 60);
        auto l1 = make_L(1, 1, 60);
        bool forward = sigma_apply(reduce(l0), 60) == scale(from_integers(l1, qq), mpq_class(-2));
        bool backward = sigma_apply(reduce(l1), 60) == scale(from_integers(l0, qq), mpq_class(-1, 2));
        r.pass = forward && backward;
        r.detail = std::string("sigma(L_1^(0)) = -2 L_1^(1): ") + (forward ? "ok" : "FAIL") +
                   "; sigma(L_1^(1)) = -1/2 L_1^(0): " + (backward ? "ok" : "FAIL");
    });
}

inline CheckResult check_gamma(const Options& opt)
{
    return detail::timed(9, "P^(0)(gamma tau) = 2 (-1)^alpha P^(1)(tau)", [&](CheckResult& r) {
        numeta::PrecisionScope scope(opt.digits);
        using numeta::Real;
        using numeta::UpperHalfPoint;
        r.pass = true;
        std::ostringstream d;
        for (int alpha : detail::alphas(opt)) {
            std::vector<UpperHalfPoint> samples{UpperHalfPoint("0.1", "0.8")};
            Real tol = boost::multiprecision::pow(Real(10), -20);
            if (alpha == 1) {
                samples.emplace_back("-0.27", "0.45");
                samples.emplace_back("0.33", "1.2");
            } else {
                tol = boost::multiprecision::pow(Real(10), -15);
            }
            auto rep = numeta::verify_gamma_identity(alpha, samples, tol);
            d << "alpha=" << alpha << " expected " << rep.expected << ", measured ratio "
              << numeta::to_string(rep.samples[0].ratio.re, 12) << " (" << samples.size()
              << " samples): " << (rep.holds ? "ok" : "FAIL") << "; ";
            r.pass = r.pass && rep.holds;
        }
        r.detail = d.str();
    });
}

inline CheckResult check_modularity(const Options&)
{
    return detail::timed(10, "modularity conditions and divisor degree", [&](CheckResult& r) {
        r.pass = true;
        std::ostringstream d;
        for (int beta : {0, 1}) {
            auto rep = is_modular_function(make_P(1, beta), 324);
            bool ok = rep.passes() && rep.orders.degree() == 0;
            d << "P_1^(" << beta << ") at 324: " << (ok ? "ok" : "FAIL") << "; ";
            r.pass = r.pass && ok;
        }
        for (auto [h, name] : {std::pair{Hauptmodul::x, "x"}, std::pair{Hauptmodul::y, "y"},
                               std::pair{Hauptmodul::z1, "z1"}, std::pair{Hauptmodul::z2, "z2"}}) {
            auto rep = is_modular_function(make_hauptmodul(h), 12);
            bool ok = rep.passes() && rep.orders.degree() == 0;
            d << name << " at 12: " << (ok ? "ok" : "FAIL") << "; ";
            r.pass = r.pass && ok;
        }
        r.detail = d.str();
    });
}

inline std::vector<std::function<CheckResult(const Options&)>> all_checks()
{
    return {check_oracle_tables, check_base_congruences, check_families, check_ped_pod,
            check_identities,    check_L_pipeline,       check_reduce_regression,
            check_sigma,         check_gamma,            check_modularity};
}

inline CheckResult run_check(int id, const Options& opt)
{
    auto checks = all_checks();
    if (id < 1 || id > static_cast<int>(checks.size()))
        throw domain_error("no check numbered " + std::to_string(id));
    return checks[static_cast<std::size_t>(id - 1)](opt);
}

inline std::vector<CheckResult> run_all(const Options& opt)
{
    std::vector<CheckResult> out;
    for (const auto& check : all_checks())
        out.push_back(check(opt));
    return out;
}

inline std::string format_line(const CheckResult& r)
{
    std::ostringstream s;
    s.precision(2);
    s << std::fixed << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.id << ". " << r.name << " ("
      << r.seconds << " s): " << r.detail;
    return s.str();
}

} // namespace pendpond::verify

#endif
