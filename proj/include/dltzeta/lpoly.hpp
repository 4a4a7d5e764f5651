#ifndef DLTZETA_LPOLY_HPP
#define DLTZETA_LPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "upoly.hpp"

namespace dltz {

/// Laurent polynomial in t (with L = t^ram) and polynomial in T (T = L^-s).
///
/// Terms are keyed by (j, i) = (exponent of T, exponent of t), which gives the
/// canonical lexicographic order on (T-exponent, t-exponent). Zero
/// coefficients are never stored.
class LPoly {
public:
    using Key = std::pair<std::int64_t, std::int64_t>; // (j, i)
    using TermMap = std::map<Key, Rational>;

    LPoly() = default;
    explicit LPoly(std::int64_t ram) : ram_(check_ram(ram)) {}

    static LPoly constant(const Rational &c, std::int64_t ram = 1)
    {
        LPoly p(ram);
        p.add_term(0, 0, c);
        return p;
    }
    /// c * t^i * T^j.
    static LPoly monomial(const Rational &c, std::int64_t i, std::int64_t j, std::int64_t ram)
    {
        LPoly p(ram);
        p.add_term(i, j, c);
        return p;
    }
    /// c * L^(q) * T^j, widening ram so that the rational exponent q is integral in t.
    static LPoly l_power(const Rational &c, const Rational &q, std::int64_t j = 0)
    {
        std::int64_t ram = to_i64(q.get_den());
        std::int64_t i = to_i64(q.get_num());
        return monomial(c, i, j, ram);
    }

    std::int64_t ram() const { return ram_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(std::int64_t i, std::int64_t j, const Rational &c)
    {
        if (j < 0)
            throw Error(Errc::invalid_argument, "negative exponent of T");
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(Key{j, i}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    std::int64_t degree_T() const
    {
        std::int64_t d = -1;
        for (const auto &[k, c] : terms_)
            d = std::max(d, k.first);
        return d;
    }
    std::int64_t min_t_exponent() const
    {
        std::int64_t m = 0;
        bool first = true;
        for (const auto &[k, c] : terms_) {
            if (first || k.second < m)
                m = k.second;
            first = false;
        }
        return m;
    }
    bool is_T_free() const { return degree_T() <= 0; }

    /// Leading term under the canonical order: largest (j, i).
    const std::pair<const Key, Rational> &leading() const
    {
        if (terms_.empty())
            throw Error(Errc::invalid_argument, "leading term of zero polynomial");
        return *terms_.rbegin();
    }

    /// Same value with t replaced by t^k (ram multiplied by k).
    LPoly rescaled(std::int64_t k) const
    {
        if (k == 1)
            return *this;
        LPoly p(ram_ * k);
        for (const auto &[key, c] : terms_)
            p.terms_.emplace(Key{key.first, key.second * k}, c);
        return p;
    }
    LPoly with_ram(std::int64_t ram) const
    {
        if (ram % ram_ != 0)
            throw Error(Errc::invalid_argument, "ram must be a multiple of the current ram");
        return rescaled(ram / ram_);
    }

    /// Multiplies by t^shift.
    LPoly t_shifted(std::int64_t shift) const
    {
        LPoly p(ram_);
        for (const auto &[key, c] : terms_)
            p.terms_.emplace(Key{key.first, key.second + shift}, c);
        return p;
    }

    friend std::int64_t common_ram(const LPoly &a, const LPoly &b) { return std::lcm(a.ram_, b.ram_); }

    LPoly &operator+=(const LPoly &o)
    {
        auto r = common_ram(*this, o);
        *this = with_ram(r);
        for (const auto &[key, c] : o.with_ram(r).terms_)
            add_term(key.second, key.first, c);
        return *this;
    }
    LPoly &operator-=(const LPoly &o) { return *this += -o; }
    friend LPoly operator+(LPoly a, const LPoly &b) { return a += b; }
    friend LPoly operator-(LPoly a, const LPoly &b) { return a -= b; }
    friend LPoly operator-(LPoly a)
    {
        for (auto &[k, c] : a.terms_)
            c = -c;
        return a;
    }
    friend LPoly operator*(const LPoly &a, const Rational &s)
    {
        if (s == 0)
            return LPoly(a.ram_);
        LPoly p = a;
        for (auto &[k, c] : p.terms_)
            c *= s;
        return p;
    }
    friend LPoly operator*(const LPoly &a0, const LPoly &b0)
    {
        auto r = common_ram(a0, b0);
        LPoly a = a0.with_ram(r), b = b0.with_ram(r);
        LPoly p(r);
        for (const auto &[ka, ca] : a.terms_)
            for (const auto &[kb, cb] : b.terms_)
                p.add_term(ka.second + kb.second, ka.first + kb.first, ca * cb);
        return p;
    }

    LPoly pow(unsigned k) const
    {
        LPoly acc = constant(1, ram_);
        for (unsigned n = 0; n < k; ++n)
            acc = acc * *this;
        return acc;
    }

    /// Equality after rescaling both sides to the lcm of their rams.
    friend bool operator==(const LPoly &a, const LPoly &b)
    {
        auto r = common_ram(a, b);
        return a.with_ram(r).terms_ == b.with_ram(r).terms_;
    }

    /// Smallest ram representing the same value.
    LPoly reduced() const
    {
        std::int64_t g = ram_;
        for (const auto &[k, c] : terms_)
            g = std::gcd(g, k.second);
        if (g <= 1)
            return *this;
        LPoly p(ram_ / g);
        for (const auto &[k, c] : terms_)
            p.terms_.emplace(Key{k.first, k.second / g}, c);
        return p;
    }

    /// Canonical text, e.g. "L^2*T - 3*L^(1/2) + 1"; highest terms first.
    std::string str() const;

private:
    static std::int64_t check_ram(std::int64_t ram)
    {
        if (ram < 1)
            throw Error(Errc::invalid_argument, "ramification index must be positive");
        return ram;
    }

    std::int64_t ram_ = 1;
    TermMap terms_;
};

/// Text for L^(i/ram): "" (for exponent 0), "L", "L^3", "L^(1/2)", "L^(-1/3)".
inline std::string l_power_text(std::int64_t i, std::int64_t ram)
{
    if (i == 0)
        return "";
    Rational q = make_rational(i, ram);
    if (q == 1)
        return "L";
    if (q.get_den() == 1 && q > 0)
        return "L^" + to_string(q);
    return "L^(" + to_string(q) + ")";
}

inline std::string LPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[key, c] = *it;
        std::string mono;
        auto append = [&](const std::string &f) {
            if (f.empty())
                return;
            if (!mono.empty())
                mono += "*";
            mono += f;
        };
        append(l_power_text(key.second, ram_));
        if (key.first == 1)
            append("T");
        else if (key.first > 1)
            append("T^" + std::to_string(key.first));
        Rational a = abs(c);
        std::string coef;
        if (mono.empty())
            coef = to_string(a);
        else if (a != 1)
            coef = (a.get_den() == 1 ? to_string(a) : "(" + to_string(a) + ")") + "*";
        if (first)
            out += (c < 0 ? "-" : "");
        else
            out += (c < 0 ? " - " : " + ");
        out += coef + mono;
        first = false;
    }
    return out;
}

namespace detail {

/// Polynomial in T with coefficients in Q[t]; index = T-exponent.
using TPoly = std::vector<UPoly>;

inline void trim(TPoly &p)
{
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

inline long deg(const TPoly &p) { return static_cast<long>(p.size()) - 1; }

/// Splits an LPoly as t^shift * P(t, T) with P a genuine polynomial.
inline std::pair<std::int64_t, TPoly> to_tpoly(const LPoly &p)
{
    TPoly out;
    if (p.is_zero())
        return {0, out};
    std::int64_t shift = p.min_t_exponent();
    out.resize(static_cast<std::size_t>(p.degree_T() + 1));
    std::vector<std::vector<Rational>> dense(out.size());
    for (const auto &[key, c] : p.terms()) {
        auto &row = dense[static_cast<std::size_t>(key.first)];
        auto idx = static_cast<std::size_t>(key.second - shift);
        if (row.size() <= idx)
            row.resize(idx + 1, Rational(0));
        row[idx] = c;
    }
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = UPoly(std::move(dense[j]));
    return {shift, out};
}

inline LPoly from_tpoly(const TPoly &p, std::int64_t shift, std::int64_t ram)
{
    LPoly out(ram);
    for (std::size_t j = 0; j < p.size(); ++j) {
        const auto &cs = p[j].coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (cs[i] != 0)
                out.add_term(static_cast<std::int64_t>(i) + shift, static_cast<std::int64_t>(j), cs[i]);
    }
    return out;
}

inline TPoly mul(const TPoly &a, const TPoly &b)
{
    if (a.empty() || b.empty())
        return {};
    TPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero())
                out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

inline TPoly mul(const TPoly &a, const UPoly &c)
{
    TPoly out = a;
    for (auto &x : out)
        x = x * c;
    trim(out);
    return out;
}

inline TPoly add(const TPoly &a, const TPoly &b)
{
    TPoly out = a;
    if (b.size() > out.size())
        out.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    trim(out);
    return out;
}

/// Monic gcd over Q of all coefficients.
inline UPoly content(const TPoly &p)
{
    // Smallest coefficients first: the running gcd usually collapses early.
    std::vector<const UPoly *> order;
    for (const auto &c : p)
        if (!c.is_zero())
            order.push_back(&c);
    std::sort(order.begin(), order.end(), [](const UPoly *a, const UPoly *b) { return a->degree() < b->degree(); });
    UPoly g;
    for (const UPoly *c : order) {
        g = gcd(g, *c);
        if (g.is_constant())
            return UPoly(Rational(1));
    }
    return g.is_zero() ? UPoly(Rational(1)) : g;
}

inline TPoly div_coeffs(const TPoly &p, const UPoly &c)
{
    TPoly out;
    out.reserve(p.size());
    for (const auto &x : p)
        out.push_back(x.is_zero() ? x : x.exact_div(c));
    return out;
}

inline TPoly primitive_part(const TPoly &p)
{
    if (p.empty())
        return p;
    TPoly out = div_coeffs(p, content(p));
    // Scale to integer coefficients with no common factor.
    Integer num = 0, den = 1;
    for (const auto &x : out)
        for (const auto &c : x.coeffs())
            if (c != 0) {
                num = igcd(num, c.get_num());
                den = ilcm(den, c.get_den());
            }
    Rational s = make_rational(den, num);
    for (auto &x : out)
        x *= s;
    return out;
}

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b with respect to T.
inline TPoly prem(TPoly a, const TPoly &b)
{
    const UPoly &lb = b.back();
    long db = deg(b);
    long steps = deg(a) - db + 1;
    while (!a.empty() && deg(a) >= db) {
        UPoly la = a.back();
        std::size_t off = static_cast<std::size_t>(deg(a) - db);
        for (auto &x : a)
            x = x * lb;
        for (std::size_t k = 0; k < b.size(); ++k)
            a[off + k] -= la * b[k];
        trim(a);
        --steps;
    }
    for (; steps > 0 && !a.empty(); --steps)
        for (auto &x : a)
            x = x * lb;
    return a;
}

inline UPoly upow(const UPoly &p, long k)
{
    UPoly acc(Rational(1));
    for (long i = 0; i < k; ++i)
        acc = acc * p;
    return acc;
}

/// Gcd in Q[t][T], up to a nonzero rational factor. Subresultant remainder
/// sequence, so contents are only extracted at the ends.
inline TPoly gcd(const TPoly &a, const TPoly &b)
{
    if (a.empty())
        return b.empty() ? b : primitive_part(b);
    if (b.empty())
        return primitive_part(a);
    UPoly c = gcd(content(a), content(b));
    TPoly x = primitive_part(a), y = primitive_part(b);
    if (deg(x) < deg(y))
        std::swap(x, y);
    UPoly g(Rational(1)), h(Rational(1));
    while (deg(y) > 0) {
        long delta = deg(x) - deg(y);
        TPoly r = prem(x, y);
        if (r.empty())
            break;
        x = std::move(y);
        y = div_coeffs(r, g * upow(h, delta));
        g = x.back();
        if (delta == 0)
            continue;
        h = upow(g, delta).exact_div(upow(h, delta - 1));
    }
    if (deg(y) == 0)
        return TPoly{c};
    return mul(primitive_part(y), c);
}

/// a / b for a division known to be exact in Q[t][T].
inline TPoly exact_div(TPoly a, const TPoly &b)
{
    if (b.empty())
        throw Error(Errc::zero_denominator, "division by zero polynomial");
    long db = deg(b);
    if (a.empty())
        return {};
    if (deg(a) < db)
        throw Error(Errc::invalid_argument, "inexact bivariate division");
    TPoly q(static_cast<std::size_t>(deg(a) - db + 1));
    while (!a.empty() && deg(a) >= db) {
        UPoly f = a.back().exact_div(b.back());
        std::size_t off = static_cast<std::size_t>(deg(a) - db);
        for (std::size_t k = 0; k < b.size(); ++k)
            a[off + k] -= f * b[k];
        q[off] = std::move(f);
        trim(a);
    }
    if (!a.empty())
        throw Error(Errc::invalid_argument, "inexact bivariate division");
    trim(q);
    return q;
}

/// Divides a by b if exact; returns false otherwise.
inline bool try_exact_div(const TPoly &a, const TPoly &b, TPoly &quot)
{
    try {
        quot = exact_div(a, b);
        return true;
    } catch (const Error &) {
        return false;
    }
}

} // namespace detail

} // namespace dltz

#endif
