#ifndef DLTZETA_RATIONAL_HPP
#define DLTZETA_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "error.hpp"

namespace dltz {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer &num, const Integer &den)
{
    if (den == 0)
        throw Error(Errc::zero_denominator, "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1)
{
    return make_rational(Integer(num), Integer(den));
}

/// Parses "p", "p/q" or a finite decimal "12.375" exactly.
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto bad = [&] { return Error(Errc::schema_error, "malformed rational '" + s + "'"); };
    if (s.empty())
        throw bad();
    auto valid_int = [](std::string_view v) {
        std::size_t i = 0;
        if (!v.empty() && (v[0] == '-' || v[0] == '+'))
            ++i;
        if (i == v.size())
            return false;
        for (; i < v.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(v[i])))
                return false;
        return true;
    };
    auto to_int = [](std::string_view v) {
        if (!v.empty() && v[0] == '+')
            v.remove_prefix(1);
        return Integer(std::string(v));
    };
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string_view n(s.data(), slash), d(s.data() + slash + 1, s.size() - slash - 1);
        if (!valid_int(n) || !valid_int(d))
            throw bad();
        Integer den = to_int(d);
        if (den == 0)
            throw Error(Errc::zero_denominator, "rational '" + s + "' has zero denominator");
        return make_rational(to_int(n), den);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string_view whole(s.data(), dot), frac(s.data() + dot + 1, s.size() - dot - 1);
        std::string digits = std::string(whole) + std::string(frac);
        if (frac.empty() || !valid_int(digits))
            throw bad();
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw bad();
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        return make_rational(to_int(digits), scale);
    }
    if (!valid_int(s))
        throw bad();
    return Rational(to_int(s));
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational &r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Integer &z) { return z.get_str(); }

inline Integer igcd(const Integer &a, const Integer &b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer ilcm(const Integer &a, const Integer &b)
{
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline std::int64_t to_i64(const Integer &z)
{
    if (!z.fits_slong_p())
        throw Error(Errc::invalid_argument, "integer " + z.get_str() + " does not fit a machine word");
    return z.get_si();
}

} // namespace dltz

#endif
