#ifndef DLTZETA_UPOLY_HPP
#define DLTZETA_UPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace dltz {

/// Dense univariate polynomial over the rationals; coeffs_[k] is the
/// coefficient of t^k. The coefficient vector never has trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(Rational c)
    {
        if (c != 0)
            coeffs_.push_back(std::move(c));
    }
    explicit UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UPoly monomial(const Rational &c, std::size_t k)
    {
        UPoly p;
        if (c != 0) {
            p.coeffs_.assign(k + 1, Rational(0));
            p.coeffs_[k] = c;
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rational &lc() const { return coeffs_.back(); }
    const std::vector<Rational> &coeffs() const { return coeffs_; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Lowest exponent carrying a nonzero coefficient (0 for the zero polynomial).
    std::size_t valuation() const
    {
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (coeffs_[k] != 0)
                return k;
        return 0;
    }

    UPoly &operator+=(const UPoly &o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    UPoly &operator-=(const UPoly &o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }
    UPoly &operator*=(const Rational &c)
    {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto &x : coeffs_)
            x *= c;
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly &b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly &b) { return a -= b; }
    friend UPoly operator*(UPoly a, const Rational &c) { return a *= c; }
    friend UPoly operator-(UPoly a)
    {
        for (auto &x : a.coeffs_)
            x = -x;
        return a;
    }
    friend UPoly operator*(const UPoly &a, const UPoly &b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            if (b.coeffs_[j] != 0)
                nz.push_back(j);
        Rational prod;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j : nz) {
                mpq_mul(prod.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
                out[i + j] += prod;
            }
        }
        return UPoly(std::move(out));
    }
    friend bool operator==(const UPoly &a, const UPoly &b) { return a.coeffs_ == b.coeffs_; }

    UPoly shifted(std::size_t k) const
    {
        if (is_zero() || k == 0)
            return *this;
        UPoly p;
        p.coeffs_.assign(k, Rational(0));
        p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return p;
    }

    /// Drops the factor t^k; requires k <= valuation().
    UPoly unshifted(std::size_t k) const
    {
        if (is_zero() || k == 0)
            return *this;
        return UPoly(std::vector<Rational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
    }

    UPoly derivative() const
    {
        std::vector<Rational> out;
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            out.push_back(coeffs_[k] * static_cast<unsigned long>(k));
        return UPoly(std::move(out));
    }

    /// Euclidean division over the rationals.
    std::pair<UPoly, UPoly> divmod(const UPoly &d) const
    {
        if (d.is_zero())
            throw Error(Errc::zero_denominator, "polynomial division by zero");
        if (degree() < d.degree())
            return {UPoly(), *this};
        std::vector<Rational> r = coeffs_;
        std::vector<Rational> q(r.size() - d.coeffs_.size() + 1, Rational(0));
        Rational inv = 1 / d.lc();
        for (long k = static_cast<long>(r.size()) - 1; k >= d.degree(); --k) {
            const Rational &rk = r[static_cast<std::size_t>(k)];
            if (rk == 0)
                continue;
            Rational f = rk * inv;
            std::size_t off = static_cast<std::size_t>(k - d.degree());
            q[off] = f;
            for (std::size_t j = 0; j < d.coeffs_.size(); ++j)
                r[off + j] -= f * d.coeffs_[j];
        }
        r.resize(static_cast<std::size_t>(d.degree()));
        return {UPoly(std::move(q)), UPoly(std::move(r))};
    }

    /// Quotient of a division known to be exact.
    UPoly exact_div(const UPoly &d) const
    {
        auto [q, r] = divmod(d);
        if (!r.is_zero())
            throw Error(Errc::invalid_argument, "inexact polynomial division");
        return q;
    }

    UPoly monic() const
    {
        if (is_zero())
            return *this;
        return *this * (1 / lc());
    }

    /// Smallest positive rational c such that this / c has coprime integer
    /// coefficients.
    Rational content() const
    {
        if (is_zero())
            return Rational(1);
        Integer num = 0, den = 1;
        for (const auto &c : coeffs_) {
            if (c == 0)
                continue;
            num = igcd(num, c.get_num());
            den = ilcm(den, c.get_den());
        }
        return make_rational(num, den);
    }

    /// Monic gcd over Q, computed by a primitive remainder sequence over Z.
    friend UPoly gcd(const UPoly &a, const UPoly &b)
    {
        if (a.is_zero())
            return b.monic();
        if (b.is_zero())
            return a.monic();
        // Common power of t first; the remaining parts are then usually small.
        std::size_t v = std::min(a.valuation(), b.valuation());
        std::vector<Integer> x = primitive_integers(a.unshifted(a.valuation()));
        std::vector<Integer> y = primitive_integers(b.unshifted(b.valuation()));
        if (x.size() < y.size())
            std::swap(x, y);
        std::vector<Integer> result{1};
        while (y.size() > 1) {
            // Pseudo-remainder of x by y over the integers.
            const Integer ly = y.back();
            while (x.size() >= y.size()) {
                Integer lx = x.back();
                std::size_t off = x.size() - y.size();
                for (auto &c : x)
                    c *= ly;
                for (std::size_t k = 0; k < y.size(); ++k)
                    x[off + k] -= lx * y[k];
                while (!x.empty() && x.back() == 0)
                    x.pop_back();
            }
            if (x.empty()) {
                result = y;
                break;
            }
            make_primitive(x);
            std::swap(x, y);
        }
        std::vector<Rational> g(result.begin(), result.end());
        return UPoly(std::move(g)).monic().shifted(v);
    }

private:
    static void make_primitive(std::vector<Integer> &v)
    {
        Integer g = 0;
        for (const auto &c : v)
            g = igcd(g, c);
        if (g > 1)
            for (auto &c : v)
                mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }

    static std::vector<Integer> primitive_integers(const UPoly &p)
    {
        Rational c = p.content();
        std::vector<Integer> out;
        out.reserve(p.coeffs_.size());
        for (const auto &x : p.coeffs_) {
            Rational q = x / c;
            out.push_back(q.get_num());
        }
        return out;
    }

    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

} // namespace dltz

#endif
