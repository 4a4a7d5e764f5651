#ifndef DLTZETA_RATIONAL_FUNCTION_HPP
#define DLTZETA_RATIONAL_FUNCTION_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>

#include "error.hpp"
#include "lpoly.hpp"

namespace dltz {

/// Quotient num/den of two LPoly values kept in canonical form: num and den
/// are coprime polynomials (no negative t-exponents), den has coprime
/// integer coefficients with a positive leading coefficient, and the
/// ramification index is the smallest one representing the value.
class RationalFunction {
public:
    /// The zero function.
    RationalFunction() : den_(LPoly::constant(1)) {}
    RationalFunction(const Rational &c) : num_(LPoly::constant(c)), den_(LPoly::constant(1)) {}
    RationalFunction(const LPoly &p) { *this = normalize(p, LPoly::constant(1, p.ram())); }

    static RationalFunction normalize(const LPoly &num, const LPoly &den);
    /// Canonical form of num/den when the caller knows the two are coprime
    /// up to powers of t; skips the gcd.
    static RationalFunction from_coprime(const LPoly &num, const LPoly &den);

    const LPoly &num() const { return num_; }
    const LPoly &den() const { return den_; }
    std::int64_t ram() const { return num_.is_zero() ? den_.ram() : std::lcm(num_.ram(), den_.ram()); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_T_free() const { return num_.is_T_free() && den_.is_T_free(); }

    friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b)
    {
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        if (a.den_ == b.den_)
            return normalize(a.num_ + b.num_, a.den_);
        return normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction &a)
    {
        RationalFunction r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b)
    {
        if (a.is_zero() || b.is_zero())
            return RationalFunction(Rational(0));
        return normalize(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b)
    {
        if (b.is_zero())
            throw Error(Errc::zero_denominator, "division by zero rational function");
        return normalize(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction &operator+=(const RationalFunction &o) { return *this = *this + o; }
    RationalFunction &operator-=(const RationalFunction &o) { return *this = *this - o; }
    RationalFunction &operator*=(const RationalFunction &o) { return *this = *this * o; }

    /// Structural equality of canonical forms; canonical forms are unique.
    friend bool operator==(const RationalFunction &a, const RationalFunction &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction pow(unsigned k) const
    {
        RationalFunction acc(Rational(1));
        for (unsigned n = 0; n < k; ++n)
            acc = acc * *this;
        return acc;
    }

    /// Canonical text: "num", or "(num)/(den)".
    std::string str() const
    {
        std::string n = num_.str();
        if (den_ == LPoly::constant(1))
            return n;
        auto wrap = [](const LPoly &p, const std::string &s) {
            return p.terms().size() > 1 ? "(" + s + ")" : s;
        };
        return wrap(num_, n) + "/" + wrap(den_, den_.str());
    }

private:
    static RationalFunction build(const LPoly &num, const LPoly &den, bool reduce);

    LPoly num_;
    LPoly den_;
};

inline RationalFunction RationalFunction::normalize(const LPoly &num, const LPoly &den)
{
    return build(num, den, true);
}

inline RationalFunction RationalFunction::from_coprime(const LPoly &num, const LPoly &den)
{
    return build(num, den, false);
}

inline RationalFunction RationalFunction::build(const LPoly &num0, const LPoly &den0, bool reduce)
{
    if (den0.is_zero())
        throw Error(Errc::zero_denominator, "rational function with zero denominator");
    RationalFunction out;
    std::int64_t ram = common_ram(num0, den0);
    if (num0.is_zero())
        return out;
    LPoly num = num0.with_ram(ram), den = den0.with_ram(ram);
    auto [sn, a] = detail::to_tpoly(num);
    auto [sd, b] = detail::to_tpoly(den);
    // Move the net power of t onto one side so both are genuine polynomials.
    std::int64_t net = sn - sd;
    if (net > 0)
        for (auto &c : a)
            c = c.shifted(static_cast<std::size_t>(net));
    else if (net < 0)
        for (auto &c : b)
            c = c.shifted(static_cast<std::size_t>(-net));
    if (reduce) {
        detail::TPoly g = detail::gcd(a, b);
        if (detail::deg(g) > 0 || !g[0].is_constant()) {
            a = detail::exact_div(a, g);
            b = detail::exact_div(b, g);
        }
    }
    LPoly n = detail::from_tpoly(a, 0, ram), d = detail::from_tpoly(b, 0, ram);
    // Primitive integer denominator with positive leading coefficient.
    Integer gnum = 0, lden = 1;
    for (const auto &[k, c] : d.terms()) {
        gnum = igcd(gnum, c.get_num());
        lden = ilcm(lden, c.get_den());
    }
    Rational scale = make_rational(lden, gnum);
    if (d.leading().second < 0)
        scale = -scale;
    out.num_ = (n * scale).reduced();
    out.den_ = (d * scale).reduced();
    // Smallest common ramification.
    std::int64_t r = std::lcm(out.num_.ram(), out.den_.ram());
    out.num_ = out.num_.with_ram(r);
    out.den_ = out.den_.with_ram(r);
    return out;
}

/// Free-function form of the canonical constructor.
inline RationalFunction rf_normalize(const LPoly &num, const LPoly &den)
{
    return RationalFunction::normalize(num, den);
}

/// L^q as a rational function (q may be negative).
inline RationalFunction l_power(const Rational &q)
{
    if (q >= 0)
        return RationalFunction(LPoly::l_power(1, q));
    return rf_normalize(LPoly::constant(1, to_i64(q.get_den())), LPoly::l_power(1, -q));
}

/// (L - 1)/(L^a - 1) for a positive rational a.
inline RationalFunction stringy_factor(const Rational &a)
{
    if (a <= 0)
        throw Error(Errc::not_klt, "stringy factor needs a positive log discrepancy, got " + to_string(a));
    std::int64_t e = to_i64(a.get_den());
    LPoly lm1 = LPoly::monomial(1, e, 0, e) - LPoly::constant(1, e);
    LPoly lam1 = LPoly::monomial(1, to_i64(a.get_num()), 0, e) - LPoly::constant(1, e);
    return rf_normalize(lm1, lam1);
}

} // namespace dltz

#endif
