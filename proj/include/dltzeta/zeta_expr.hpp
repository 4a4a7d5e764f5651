#ifndef DLTZETA_ZETA_EXPR_HPP
#define DLTZETA_ZETA_EXPR_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "motive.hpp"
#include "rational_function.hpp"

namespace dltz {

/// Denominator datum (N, nu) standing for the factor (L - 1)/(L^(N s + nu) - 1).
struct DenomPair {
    std::int64_t N = 0;
    std::int64_t nu = 0;

    friend auto operator<=>(const DenomPair &, const DenomPair &) = default;
};

/// Text "L^(12s+10)" for the exponent N s + nu.
inline std::string zeta_exponent_text(const DenomPair &d)
{
    std::string e;
    if (d.N != 0)
        e = (d.N == 1 ? std::string() : std::to_string(d.N)) + "s";
    if (d.nu != 0 || e.empty()) {
        if (!e.empty() && d.nu > 0)
            e += "+";
        e += std::to_string(d.nu);
    }
    return "L^(" + e + ")";
}

struct ZetaTerm {
    MotiveClass coef;
    std::vector<DenomPair> dens; // kept sorted

    ZetaTerm() = default;
    ZetaTerm(MotiveClass c, std::vector<DenomPair> d) : coef(std::move(c)), dens(std::move(d))
    {
        std::sort(dens.begin(), dens.end());
    }
};

/// Per-atom rational functions in t and T.
using NormalForm = std::map<OpaqueAtom, RationalFunction>;

namespace detail {

/// t^(e nu) - T^N at ramification e, as a bivariate polynomial.
inline TPoly zeta_binomial(const DenomPair &d, std::int64_t e)
{
    TPoly p(static_cast<std::size_t>(d.N + 1));
    p[0] += UPoly::monomial(1, static_cast<std::size_t>(e * d.nu));
    p[static_cast<std::size_t>(d.N)] -= UPoly(Rational(1));
    trim(p);
    return p;
}

inline TPoly tpoly_pow(const TPoly &p, std::int64_t k)
{
    TPoly acc{UPoly(Rational(1))};
    for (std::int64_t i = 0; i < k; ++i)
        acc = mul(acc, p);
    return acc;
}

inline bool is_unit_tpoly(const TPoly &p) { return deg(p) == 0 && p[0].is_constant(); }

/// Sums coef_k * prod_d (L-1) T^N / (t^(e nu) - T^N) for one atom. The
/// common denominator is assembled from distinct factors, and cancellation
/// is done factor by factor, which keeps every gcd small.
inline RationalFunction sum_terms(const std::vector<std::pair<RationalFunction, std::vector<DenomPair>>> &terms)
{
    if (terms.empty())
        return RationalFunction();
    std::int64_t e = 1;
    for (const auto &[c, ds] : terms)
        e = std::lcm(e, c.ram());

    // Split each coefficient into t^shift * P / Q with P, Q polynomial.
    struct Piece {
        std::int64_t shift;
        TPoly num;
        UPoly den;
        const std::vector<DenomPair> *dens;
    };
    std::vector<Piece> pieces;
    std::int64_t min_shift = 0;
    for (const auto &[c, ds] : terms) {
        auto [sn, n] = to_tpoly(c.num().with_ram(e));
        auto [sd, d] = to_tpoly(c.den().with_ram(e));
        if (deg(d) != 0)
            throw Error(Errc::invalid_argument, "zeta coefficients must not involve T");
        pieces.push_back({sn - sd, std::move(n), d[0], &ds});
        min_shift = std::min(min_shift, sn - sd);
    }

    std::map<DenomPair, std::int64_t> mult;
    UPoly tden(Rational(1));
    for (const auto &p : pieces) {
        std::map<DenomPair, std::int64_t> m;
        for (const auto &d : *p.dens) {
            if (d.N < 0 || d.nu < 0 || (d.N == 0 && d.nu == 0))
                throw Error(Errc::invalid_argument, "invalid zeta denominator pair");
            ++m[d];
        }
        for (const auto &[d, k] : m)
            mult[d] = std::max(mult[d], k);
        tden = tden * p.den.exact_div(gcd(tden, p.den));
    }
    UPoly lm1 = UPoly::monomial(1, static_cast<std::size_t>(e)) - UPoly(Rational(1));

    TPoly num;
    for (const auto &p : pieces) {
        std::map<DenomPair, std::int64_t> m;
        std::int64_t tdeg = 0;
        for (const auto &d : *p.dens) {
            ++m[d];
            tdeg += d.N;
        }
        TPoly acc = mul(p.num, tden.exact_div(p.den));
        UPoly lift = UPoly::monomial(1, static_cast<std::size_t>(p.shift - min_shift));
        for (std::size_t k = 0; k < p.dens->size(); ++k)
            lift = lift * lm1;
        acc = mul(acc, lift);
        for (const auto &[d, k] : mult) {
            auto it = m.find(d);
            std::int64_t missing = k - (it == m.end() ? 0 : it->second);
            if (missing > 0)
                acc = mul(acc, tpoly_pow(zeta_binomial(d, e), missing));
        }
        TPoly shifted(static_cast<std::size_t>(tdeg), UPoly());
        shifted.insert(shifted.end(), acc.begin(), acc.end());
        trim(shifted);
        num = add(num, shifted);
    }
    if (num.empty())
        return RationalFunction();

    // Denominator factors, cancelled one at a time.
    std::vector<TPoly> factors;
    for (const auto &[d, k] : mult)
        for (std::int64_t i = 0; i < k; ++i)
            factors.push_back(zeta_binomial(d, e));
    if (!tden.is_constant())
        factors.push_back(TPoly{tden});
    if (min_shift < 0)
        factors.push_back(TPoly{UPoly::monomial(1, static_cast<std::size_t>(-min_shift))});
    for (auto &f : factors) {
        while (!is_unit_tpoly(f)) {
            TPoly g = gcd(num, f);
            if (is_unit_tpoly(g))
                break;
            num = exact_div(num, g);
            f = exact_div(f, g);
        }
    }
    TPoly den{UPoly(Rational(1))};
    for (const auto &f : factors)
        den = mul(den, f);
    return RationalFunction::from_coprime(from_tpoly(num, 0, e), from_tpoly(den, 0, e));
}

} // namespace detail

/// Formal sum of terms coef * prod (L - 1)/(L^(N s + nu) - 1).
class ZetaExpr {
public:
    ZetaExpr() = default;
    explicit ZetaExpr(std::vector<ZetaTerm> terms) : terms_(std::move(terms)) {}

    const std::vector<ZetaTerm> &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(MotiveClass coef, std::vector<DenomPair> dens)
    {
        if (!coef.is_zero())
            terms_.emplace_back(std::move(coef), std::move(dens));
    }

    friend ZetaExpr operator+(ZetaExpr a, const ZetaExpr &b)
    {
        a.terms_.insert(a.terms_.end(), b.terms_.begin(), b.terms_.end());
        return a;
    }
    friend ZetaExpr operator-(const ZetaExpr &a) { return a * RationalFunction(Rational(-1)); }
    friend ZetaExpr operator-(const ZetaExpr &a, const ZetaExpr &b) { return a + (-b); }
    friend ZetaExpr operator*(const ZetaExpr &a, const RationalFunction &s)
    {
        ZetaExpr out;
        for (const auto &t : a.terms_)
            out.add_term(t.coef * s, t.dens);
        return out;
    }

    /// Terms with equal denominator multisets merged, zero terms dropped,
    /// ordered by denominators. The value is unchanged.
    ZetaExpr collected() const
    {
        std::map<std::vector<DenomPair>, MotiveClass> by;
        for (const auto &t : terms_)
            by[t.dens] += t.coef;
        ZetaExpr out;
        for (auto &[d, c] : by)
            out.add_term(c, d);
        return out;
    }

    /// Per-atom rational function in t and T; atoms with zero value omitted.
    NormalForm normal_form() const
    {
        std::map<OpaqueAtom, std::vector<std::pair<RationalFunction, std::vector<DenomPair>>>> by_atom;
        for (const auto &t : terms_)
            for (const auto &[a, c] : t.coef.parts())
                by_atom[a].emplace_back(c, t.dens);
        NormalForm nf;
        for (const auto &[a, ts] : by_atom) {
            RationalFunction v = detail::sum_terms(ts);
            if (!v.is_zero())
                nf.emplace(a, std::move(v));
        }
        return nf;
    }

    bool is_zero() const { return normal_form().empty(); }

    /// Canonical term-list text, e.g. "(L - 2)*(L - 1)/(L^(12s+10) - 1)".
    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto &t : terms_) {
            if (!out.empty())
                out += " + ";
            out += "(" + t.coef.str() + ")";
            for (const auto &d : t.dens)
                out += "*(L - 1)/(" + zeta_exponent_text(d) + " - 1)";
        }
        return out;
    }

private:
    std::vector<ZetaTerm> terms_;
};

/// Text of a normal form, one "atom: value" entry per atom.
inline std::string normal_form_text(const NormalForm &nf)
{
    if (nf.empty())
        return "0";
    std::string out;
    for (const auto &[a, v] : nf) {
        if (!out.empty())
            out += " + ";
        out += a.is_unit() ? v.str() : "[" + a.key + "]*(" + v.str() + ")";
    }
    return out;
}

inline bool expr_equal(const ZetaExpr &a, const ZetaExpr &b) { return (a - b).is_zero(); }

/// Truncated power series in T: entry k is the coefficient of T^k.
using TSeries = std::vector<MotiveClass>;

/// Coefficients of T^0 .. T^order, expanding each factor as
/// sum_{k>=1} (L - 1) L^(-k nu) T^(k N).
inline TSeries series_expand(const ZetaExpr &z, std::size_t order)
{
    TSeries out(order + 1);
    for (const auto &t : z.terms()) {
        std::vector<LPoly> s(order + 1, LPoly(1));
        s[0] = LPoly::constant(1);
        for (const auto &d : t.dens) {
            if (d.N <= 0)
                throw Error(Errc::not_expandable,
                            "factor " + zeta_exponent_text(d) + " has N = 0 and no expansion in T");
            std::vector<LPoly> f(order + 1, LPoly(1));
            for (std::size_t k = 1; static_cast<std::size_t>(d.N) * k <= order; ++k)
                f[static_cast<std::size_t>(d.N) * k] =
                    LPoly::monomial(1, 1 - static_cast<std::int64_t>(k) * d.nu, 0, 1) -
                    LPoly::monomial(1, -static_cast<std::int64_t>(k) * d.nu, 0, 1);
            std::vector<LPoly> r(order + 1, LPoly(1));
            for (std::size_t i = 0; i <= order; ++i) {
                if (s[i].is_zero())
                    continue;
                for (std::size_t j = 0; i + j <= order; ++j)
                    if (!f[j].is_zero())
                        r[i + j] += s[i] * f[j];
            }
            s = std::move(r);
        }
        for (std::size_t k = 0; k <= order; ++k)
            if (!s[k].is_zero())
                out[k] += t.coef * RationalFunction(s[k]);
    }
    return out;
}

/// Power-series expansion in T of a rational function in t and T whose
/// denominator does not vanish at T = 0.
inline std::vector<RationalFunction> rf_series(const RationalFunction &f, std::size_t order)
{
    auto coeffs_in_T = [&](const LPoly &p) {
        std::vector<RationalFunction> c(order + 1);
        for (const auto &[k, v] : p.terms())
            if (static_cast<std::size_t>(k.first) <= order)
                c[static_cast<std::size_t>(k.first)] += RationalFunction(LPoly::monomial(v, k.second, 0, p.ram()));
        return c;
    };
    auto n = coeffs_in_T(f.num()), d = coeffs_in_T(f.den());
    if (d[0].is_zero())
        throw Error(Errc::not_expandable, "denominator vanishes at T = 0");
    std::vector<RationalFunction> q(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        RationalFunction acc = n[k];
        for (std::size_t j = 1; j <= k; ++j)
            if (!d[j].is_zero() && !q[k - j].is_zero())
                acc -= d[j] * q[k - j];
        q[k] = acc / d[0];
    }
    return q;
}

} // namespace dltz

#endif
