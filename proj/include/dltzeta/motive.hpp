#ifndef DLTZETA_MOTIVE_HPP
#define DLTZETA_MOTIVE_HPP

#include <map>
#include <string>
#include <utility>

#include "error.hpp"
#include "rational_function.hpp"

namespace dltz {

/// Grothendieck class with no closed form in L. The empty key is reserved
/// for the unit atom.
struct OpaqueAtom {
    std::string key;
    int dim = 0;

    static OpaqueAtom unit() { return {}; }
    bool is_unit() const { return key.empty(); }

    friend bool operator==(const OpaqueAtom &a, const OpaqueAtom &b) { return a.key == b.key; }
    friend bool operator<(const OpaqueAtom &a, const OpaqueAtom &b) { return a.key < b.key; }
};

/// Finite sum  sum_atom coef(atom) * [atom]  with T-free rational-function
/// coefficients. Parts with zero coefficient are never stored.
class MotiveClass {
public:
    using Parts = std::map<OpaqueAtom, RationalFunction>;

    MotiveClass() = default;
    MotiveClass(const RationalFunction &c) { add(OpaqueAtom::unit(), c); }
    MotiveClass(const Rational &c) : MotiveClass(RationalFunction(c)) {}
    static MotiveClass atom(const OpaqueAtom &a, const RationalFunction &c = RationalFunction(Rational(1)))
    {
        MotiveClass m;
        m.add(a, c);
        return m;
    }
    /// (L - 1)^k.
    static MotiveClass torus(unsigned k)
    {
        return MotiveClass(RationalFunction(LPoly::monomial(1, 1, 0, 1) - LPoly::constant(1)).pow(k));
    }

    const Parts &parts() const { return parts_; }
    bool is_zero() const { return parts_.empty(); }
    bool has_opaque_atoms() const
    {
        for (const auto &[a, c] : parts_)
            if (!a.is_unit())
                return true;
        return false;
    }
    /// Coefficient of the unit atom.
    RationalFunction unit_part() const
    {
        auto it = parts_.find(OpaqueAtom::unit());
        return it == parts_.end() ? RationalFunction(Rational(0)) : it->second;
    }

    void add(const OpaqueAtom &a, const RationalFunction &c)
    {
        if (!c.is_T_free())
            throw Error(Errc::invalid_argument, "motive coefficients must not involve T");
        if (c.is_zero())
            return;
        auto [it, inserted] = parts_.try_emplace(a, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                parts_.erase(it);
        }
    }

    MotiveClass &operator+=(const MotiveClass &o)
    {
        for (const auto &[a, c] : o.parts_)
            add(a, c);
        return *this;
    }
    MotiveClass &operator-=(const MotiveClass &o)
    {
        for (const auto &[a, c] : o.parts_)
            add(a, -c);
        return *this;
    }
    friend MotiveClass operator+(MotiveClass a, const MotiveClass &b) { return a += b; }
    friend MotiveClass operator-(MotiveClass a, const MotiveClass &b) { return a -= b; }
    friend MotiveClass operator*(const MotiveClass &m, const RationalFunction &s)
    {
        MotiveClass out;
        for (const auto &[a, c] : m.parts_)
            out.add(a, c * s);
        return out;
    }
    /// Product; at most one factor may carry opaque atoms.
    friend MotiveClass operator*(const MotiveClass &x, const MotiveClass &y)
    {
        if (x.has_opaque_atoms() && y.has_opaque_atoms())
            throw Error(Errc::atom_product, "product of two opaque classes is not representable");
        if (x.has_opaque_atoms())
            return x * y.unit_part();
        return y * x.unit_part();
    }
    friend bool operator==(const MotiveClass &a, const MotiveClass &b) { return a.parts_ == b.parts_; }

    /// Unit part first, then "[key]*(coef)" for each atom in key order.
    std::string str() const
    {
        if (parts_.empty())
            return "0";
        std::string out;
        for (const auto &[a, c] : parts_) {
            if (!out.empty())
                out += " + ";
            if (a.is_unit())
                out += c.str();
            else
                out += "[" + a.key + "]*(" + c.str() + ")";
        }
        return out;
    }

private:
    Parts parts_;
};

} // namespace dltz

#endif
