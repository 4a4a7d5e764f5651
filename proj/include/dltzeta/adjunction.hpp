#ifndef DLTZETA_ADJUNCTION_HPP
#define DLTZETA_ADJUNCTION_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"
#include "motive.hpp"
#include "newton.hpp"
#include "pairs.hpp"
#include "rational_function.hpp"

namespace dltz {

using StringyValue = MotiveClass;

/// Index set I: the exceptional rays of cone, plus E0 when e0 is set.
struct Stratum {
    ConeIdx cone;
    bool e0 = false;

    friend auto operator<=>(const Stratum &, const Stratum &) = default;
};

inline std::string stratum_name(const Fan &fan, const Stratum &s)
{
    std::string out = "{";
    bool first = true;
    if (s.e0) {
        out += "0";
        first = false;
    }
    for (int r : s.cone) {
        out += (first ? "" : ",") + fan.labels[static_cast<std::size_t>(r)];
        first = false;
    }
    return out + "}";
}

/// Parses "{0,1,2}" or "0,1,2" (ray labels, 0 for E0) against the fan.
inline Stratum parse_stratum(const Fan &fan, std::string text)
{
    text.erase(std::remove_if(text.begin(), text.end(), [](char c) { return c == '{' || c == '}' || c == ' '; }),
               text.end());
    Stratum s;
    std::size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
        std::size_t end = text.find(',', pos);
        std::string tok = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        if (tok == "0" || tok == "E0") {
            s.e0 = true;
        } else {
            int i = fan.label_index(tok);
            if (i < 0)
                throw Error(Errc::invalid_argument, "no ray labelled '" + tok + "'");
            s.cone.push_back(i);
        }
        if (end == std::string::npos)
            break;
        pos = end + 1;
    }
    std::sort(s.cone.begin(), s.cone.end());
    s.cone.erase(std::unique(s.cone.begin(), s.cone.end()), s.cone.end());
    return s;
}

inline int stratum_dim(const Fan &fan, const Stratum &s)
{
    return static_cast<int>(fan.rank) - static_cast<int>(s.cone.size()) - (s.e0 ? 1 : 0);
}

/// Coordinate axis whose hyperplane is Z(f), for f = c * x_i. Any other
/// coordinate hyperplane inside Z(f) is rejected.
inline std::optional<int> toric_e0_axis(const Polynomial &f)
{
    std::optional<int> axis;
    for (std::size_t i = 0; i < f.nvars; ++i) {
        LatticeVector e(f.nvars, 0);
        e[i] = 1;
        if (newton_N(f, e) > 0)
            axis = static_cast<int>(i);
    }
    if (!axis)
        return std::nullopt;
    LatticeVector e(f.nvars, 0);
    e[static_cast<std::size_t>(*axis)] = 1;
    if (f.terms.size() != 1 || f.terms.begin()->first != e)
        throw Error(Errc::invalid_argument, "Z(f) contains a coordinate hyperplane; only f = c*x_i is supported");
    return axis;
}

namespace detail {

inline int axis_ray(const Fan &fan, std::optional<int> axis)
{
    if (!axis)
        return -1;
    LatticeVector e(fan.rank, 0);
    e[static_cast<std::size_t>(*axis)] = 1;
    return fan.ray_index(e);
}

/// Class of E0 cap O(c).
inline MotiveClass e0_orbit_class(const Polynomial &f, const Fan &fan, const ConeIdx &c, int axis_ray)
{
    if (axis_ray >= 0) {
        bool inside = std::find(c.begin(), c.end(), axis_ray) != c.end();
        return inside ? orbit_class(fan, c) : MotiveClass();
    }
    return face_stratum_class(f, fan, c);
}

} // namespace detail

/// True when E_I is a nonempty lc center of (X, Delta).
inline bool is_lc_stratum(const Polynomial &f, const Fan &fan, const Stratum &s)
{
    if (!s.cone.empty() && (!fan.contains_cone(s.cone) || !is_exceptional_cone(fan, s.cone)))
        return false;
    if (s.cone.empty())
        return s.e0;
    if (!s.e0)
        return true;
    int ax = detail::axis_ray(fan, toric_e0_axis(f));
    return !detail::e0_orbit_class(f, fan, s.cone, ax).is_zero();
}

inline void require_lc_stratum(const Polynomial &f, const Fan &fan, const Stratum &s)
{
    if (!is_lc_stratum(f, fan, s))
        throw Error(Errc::not_an_lc_center, "stratum " + stratum_name(fan, s) + " is not an lc center");
}

/// One summand of the stringy motive: the part of E_I over the orbit O(cone)
/// of the resolved fan.
struct StringyPiece {
    ConeIdx cone;    // in the resolved fan, contains the stratum cone
    ConeIdx carrier; // smallest cone of the original fan containing it
    MotiveClass cls;
    std::vector<Rational> discrepancies; // per ray of cone outside the stratum
    RationalFunction weight;
};

/// Resolution of the stratum closure with its pieces over the open stratum.
struct StratumModel {
    Stratum stratum;
    Fan fan;      // original fan
    Fan resolved; // cones containing the stratum cone are regular
    std::vector<StringyPiece> pieces;
};

inline StratumModel stratum_model(const Polynomial &f, const Fan &fan, const Stratum &s, int extra_blowups = 0)
{
    // The empty index set is the complement of the boundary, not a center.
    if (!s.cone.empty() || s.e0)
        require_lc_stratum(f, fan, s);
    StratumModel m{s, fan, fan, {}};
    if (!s.cone.empty())
        m.resolved = resolve_fan(fan, {s.cone, extra_blowups}).fan;
    const Fan &y = m.resolved;
    SupportFunction sf = support_function(f, fan);
    int ax = detail::axis_ray(y, toric_e0_axis(f));
    for (const auto &k : y.all_cones()) {
        if (!is_subset(s.cone, k))
            continue;
        auto carrier = carrier_cone(fan, generator_sum(y, k));
        if (!carrier)
            continue;
        ConeIdx extra = cone_difference(*carrier, s.cone);
        if (!std::all_of(extra.begin(), extra.end(), [&](int r) { return fan.is_coordinate_ray(r); }))
            continue;
        if (cone_multiplicity(y, k) != 1)
            throw Error(Errc::not_regular, "resolution is not regular along stratum " + stratum_name(fan, s));
        StringyPiece p{k, *carrier, {}, {}, RationalFunction(Rational(1))};
        MotiveClass e0c = detail::e0_orbit_class(f, y, k, ax);
        p.cls = s.e0 ? e0c : orbit_class(y, k) - e0c;
        if (p.cls.is_zero())
            continue;
        for (int r : cone_difference(k, s.cone)) {
            if (r == ax)
                continue;
            Rational a = log_discrepancy(f, sf, y.rays[static_cast<std::size_t>(r)]);
            if (a <= 0)
                throw Error(Errc::not_klt, "stratum " + stratum_name(fan, s) + " has boundary coefficient " +
                                               to_string(Rational(1 - a)) + " on its open part");
            p.discrepancies.push_back(a);
            p.weight = p.weight * stringy_factor(a);
        }
        m.pieces.push_back(std::move(p));
    }
    return m;
}

/// Stringy motive as the sum over pieces of class times weight.
inline StringyValue stringy_motive(const StratumModel &m)
{
    StringyValue v;
    for (const auto &p : m.pieces)
        v += p.cls * p.weight;
    return v;
}

/// Curve case: [open part] + sum over boundary points of (L-1)/(L^(1-c)-1).
inline StringyValue curve_stringy(const MotiveClass &open_part, const std::vector<Rational> &point_coefficients)
{
    StringyValue v = open_part;
    for (const auto &c : point_coefficients) {
        if (c >= 1)
            throw Error(Errc::not_klt, "boundary coefficient " + to_string(c) + " is not below 1");
        v += MotiveClass(stringy_factor(1 - c));
    }
    return v;
}

inline StringyValue stratum_pair_stringy(const Polynomial &f, const Fan &fan, const Stratum &s, int extra_blowups = 0)
{
    return stringy_motive(stratum_model(f, fan, s, extra_blowups));
}

/// Component of a different: V(cone), or E0 cap V(cone) when e0 is set.
struct DifferentComponent {
    ConeIdx cone; // in the original fan
    bool e0 = false;
    Rational coefficient;
    LatticeVector resolution_ray; // ray of the resolution computing the coefficient
    Integer components = 1;       // connected components (segment faces)

    std::string name(const Fan &fan) const { return LcCenter{cone, e0, 0, components}.name(fan); }
};

struct StratumDivisor {
    Stratum stratum;
    std::vector<DifferentComponent> components;

    /// Components meeting the open stratum: drops E0 and exceptional divisors.
    StratumDivisor restricted(const Fan &fan) const
    {
        StratumDivisor out{stratum, {}};
        for (const auto &c : components) {
            if (c.e0 != stratum.e0)
                continue;
            ConeIdx extra = cone_difference(c.cone, stratum.cone);
            if (std::all_of(extra.begin(), extra.end(), [&](int r) { return fan.is_coordinate_ray(r); }))
                out.components.push_back(c);
        }
        return out;
    }
};

/// Different of (X, Delta) on the lc center E_I, as the pushforward of the
/// boundary of a resolution that is regular along E_I.
inline StratumDivisor different_on_stratum(const Polynomial &f, const Fan &fan, const Stratum &s,
                                           int extra_blowups = 0)
{
    require_lc_stratum(f, fan, s);
    if (s.cone.empty() && !s.e0)
        throw Error(Errc::not_an_lc_center, "the empty index set is not an lc center");
    Fan y = s.cone.empty() ? fan : resolve_fan(fan, {s.cone, extra_blowups}).fan;
    SupportFunction sf = support_function(f, fan);
    int ax = detail::axis_ray(fan, toric_e0_axis(f));
    StratumDivisor d{s, {}};
    if (!s.e0) {
        MotiveClass e0c = detail::e0_orbit_class(f, fan, s.cone, ax);
        if (!e0c.is_zero()) {
            DifferentComponent c{s.cone, true, Rational(1), {}, 1};
            NewtonFace face = face_of_cone(f, fan.cone(s.cone));
            if (face.dim == 1)
                c.components = segment_data(face).second;
            d.components.push_back(c);
        }
    }
    std::vector<int> neighbours;
    for (int m : fan.maximal_cones_containing(s.cone))
        for (int r : cone_difference(fan.cones[static_cast<std::size_t>(m)], s.cone))
            if (std::find(neighbours.begin(), neighbours.end(), r) == neighbours.end())
                neighbours.push_back(r);
    std::sort(neighbours.begin(), neighbours.end());
    QuotientMap q = s.cone.empty() ? QuotientMap{} : quotient_map(fan, s.cone);
    auto image = [&](const LatticeVector &u) { return s.cone.empty() ? u : primitive(q(u)); };
    std::vector<int> y_neighbours;
    for (int m : y.maximal_cones_containing(s.cone))
        for (int r : cone_difference(y.cones[static_cast<std::size_t>(m)], s.cone))
            y_neighbours.push_back(r);
    for (int r : neighbours) {
        ConeIdx c = cone_union(s.cone, {r});
        if (r == ax)
            continue; // E0 itself
        DifferentComponent comp{c, s.e0, Rational(0), {}, 1};
        if (s.e0) {
            MotiveClass e0c = detail::e0_orbit_class(f, fan, c, ax);
            if (e0c.is_zero())
                continue;
            NewtonFace face = face_of_cone(f, fan.cone(c));
            if (face.dim == 1 && ax < 0)
                comp.components = segment_data(face).second;
        }
        LatticeVector target = image(fan.rays[static_cast<std::size_t>(r)]);
        std::optional<int> lifted;
        for (int yr : y_neighbours)
            if (image(y.rays[static_cast<std::size_t>(yr)]) == target) {
                lifted = yr;
                break;
            }
        if (!lifted)
            throw Error(Errc::invalid_argument, "resolution lost the divisor " + fan.cone_label(c));
        comp.resolution_ray = y.rays[static_cast<std::size_t>(*lifted)];
        comp.coefficient = 1 - log_discrepancy(f, sf, comp.resolution_ray);
        d.components.push_back(std::move(comp));
    }
    return d;
}

} // namespace dltz

#endif
