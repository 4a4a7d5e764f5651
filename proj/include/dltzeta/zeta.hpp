#ifndef DLTZETA_ZETA_HPP
#define DLTZETA_ZETA_HPP

#include <algorithm>
#include <numeric>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "adjunction.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "newton.hpp"
#include "pairs.hpp"
#include "zeta_expr.hpp"

namespace dltz {

/// A nonempty open stratum E°_I with its plain class and denominators.
struct StratumInfo {
    Stratum stratum;
    std::string name;
    int dim = 0;
    MotiveClass open_class;
    std::vector<DenomPair> dens; // (N_i, nu_i) for i in I, (1, 1) for E0
};

inline std::vector<DenomPair> stratum_denominators(const Polynomial &f, const Fan &fan, const Stratum &s)
{
    std::vector<DenomPair> d;
    if (s.e0)
        d.push_back({1, 1});
    for (int r : s.cone) {
        RayData rd = newton_data(f, fan.rays[static_cast<std::size_t>(r)]);
        d.push_back({to_i64(rd.N), to_i64(rd.nu)});
    }
    std::sort(d.begin(), d.end());
    return d;
}

/// Class of E°_I: orbits O(c) with c = cone + coordinate rays, inside or
/// outside E0 according to the stratum.
inline MotiveClass open_stratum_class(const Polynomial &f, const Fan &fan, const Stratum &s)
{
    int ax = detail::axis_ray(fan, toric_e0_axis(f));
    MotiveClass total;
    for (const auto &c : fan.all_cones()) {
        if (!is_subset(s.cone, c))
            continue;
        ConeIdx extra = cone_difference(c, s.cone);
        if (!std::all_of(extra.begin(), extra.end(), [&](int r) { return fan.is_coordinate_ray(r); }))
            continue;
        MotiveClass e0c = detail::e0_orbit_class(f, fan, c, ax);
        total += s.e0 ? e0c : orbit_class(fan, c) - e0c;
    }
    return total;
}

inline std::vector<StratumInfo> enumerate_strata(const Polynomial &f, const Fan &fan)
{
    std::vector<StratumInfo> out;
    for (const auto &c : fan.all_cones()) {
        if (!is_exceptional_cone(fan, c))
            continue;
        for (bool e0 : {false, true}) {
            Stratum s{c, e0};
            if ((e0 || !c.empty()) && !is_lc_stratum(f, fan, s))
                continue;
            StratumInfo info{s, stratum_name(fan, s), stratum_dim(fan, s), open_stratum_class(f, fan, s),
                             stratum_denominators(f, fan, s)};
            if (info.open_class.is_zero())
                continue;
            out.push_back(std::move(info));
        }
    }
    return out;
}

/// Closed toric set: a union of orbit closures V(tau), or E0 cap V(tau) when
/// the part carries the E0 flag.
struct ClosedSet {
    std::vector<Stratum> parts;

    bool empty() const { return parts.empty(); }

    /// Whether the orbit piece over O(carrier), inside E0 or not, lies in the set.
    bool contains(const ConeIdx &carrier, bool e0) const
    {
        return std::any_of(parts.begin(), parts.end(),
                           [&](const Stratum &p) { return is_subset(p.cone, carrier) && (!p.e0 || e0); });
    }

    std::string str(const Fan &fan) const
    {
        std::string out;
        for (const auto &p : parts) {
            if (!out.empty())
                out += " + ";
            out += LcCenter{p.cone, p.e0, 0, 1}.name(fan);
        }
        return out;
    }
};

/// Parses "V(y,2)", "E1", "E1 cap E2", "E0 cap V(3)", "{1,2}" or plain
/// "y,2"; several parts separated by ';' or '+'.
inline ClosedSet parse_closed_set(const Fan &fan, const std::string &text)
{
    ClosedSet out;
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ';' || ch == '+') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    for (std::string p : parts) {
        std::string norm;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p.compare(i, 3, "cap") == 0 || p.compare(i, 3, "∩") == 0) {
                norm += ',';
                i += 2;
            } else if (p[i] == 'V' || p[i] == '(' || p[i] == ')' || p[i] == '{' || p[i] == '}' || p[i] == ' ') {
                continue;
            } else if (p[i] == 'E' && i + 1 < p.size() && p[i + 1] != ',') {
                continue; // "E1" names the divisor of ray 1
            } else {
                norm += p[i];
            }
        }
        if (norm.empty())
            throw Error(Errc::invalid_argument, "empty filter part in '" + text + "'");
        Stratum s = parse_stratum(fan, norm);
        if (!s.cone.empty() && !fan.contains_cone(s.cone))
            throw Error(Errc::cone_not_in_fan, "filter cone " + fan.cone_label(s.cone) + " is not in the fan");
        out.parts.push_back(s);
    }
    return out;
}

struct ZetaTermInfo {
    Stratum stratum;
    std::string name;
    StringyValue value;
    std::vector<DenomPair> dens;
};

struct ZetaReport {
    std::string mode; // "dlt" or "dl"
    std::size_t rank = 0;
    std::string filter; // empty: the full zeta function
    ZetaExpr expr;      // includes the factor L^(-n)
    std::vector<ZetaTermInfo> breakdown;
    std::vector<std::string> assumptions;
};

inline ZetaExpr assemble_zeta(std::size_t rank, const std::vector<ZetaTermInfo> &breakdown)
{
    ZetaExpr z;
    RationalFunction pre = l_power(-static_cast<long>(rank));
    for (const auto &t : breakdown)
        z.add_term(t.value * pre, t.dens);
    return z;
}

/// Z^dlt with the stringy motives of the strata pairs. The filter keeps the
/// orbit pieces lying in the given closed set.
inline ZetaReport dlt_zeta(const Polynomial &f, const Fan &fan, const std::optional<ClosedSet> &filter = std::nullopt,
                           std::vector<std::string> assumptions = {})
{
    ZetaReport rep{"dlt", fan.rank, filter ? filter->str(fan) : "", {}, {}, std::move(assumptions)};
    for (const auto &info : enumerate_strata(f, fan)) {
        StratumModel m = stratum_model(f, fan, info.stratum);
        StringyValue v;
        for (const auto &p : m.pieces)
            if (!filter || filter->contains(p.carrier, info.stratum.e0))
                v += p.cls * p.weight;
        if (v.is_zero())
            continue;
        rep.breakdown.push_back({info.stratum, info.name, v, info.dens});
    }
    rep.expr = assemble_zeta(fan.rank, rep.breakdown);
    return rep;
}

/// Denef-Loeser formula on a regular fan: plain classes of the open strata.
inline ZetaReport dl_zeta(const Polynomial &f, const Fan &fan, const std::optional<ClosedSet> &filter = std::nullopt)
{
    for (const auto &c : fan.cones)
        if (cone_multiplicity(fan, c) != 1)
            throw Error(Errc::not_regular, "cone " + fan.cone_label(c) + " is not regular");
    ZetaReport rep{"dl", fan.rank, filter ? filter->str(fan) : "", {}, {}, {}};
    rep.assumptions.push_back("f is nondegenerate with respect to its Newton polyhedron (E0 meets the strata transversally)");
    int ax = detail::axis_ray(fan, toric_e0_axis(f));
    for (const auto &info : enumerate_strata(f, fan)) {
        MotiveClass v;
        if (!filter) {
            v = info.open_class;
        } else {
            for (const auto &c : fan.all_cones()) {
                if (!is_subset(info.stratum.cone, c) || !filter->contains(c, info.stratum.e0))
                    continue;
                ConeIdx extra = cone_difference(c, info.stratum.cone);
                if (!std::all_of(extra.begin(), extra.end(), [&](int r) { return fan.is_coordinate_ray(r); }))
                    continue;
                MotiveClass e0c = detail::e0_orbit_class(f, fan, c, ax);
                v += info.stratum.e0 ? e0c : orbit_class(fan, c) - e0c;
            }
        }
        if (v.is_zero())
            continue;
        rep.breakdown.push_back({info.stratum, info.name, v, info.dens});
    }
    rep.expr = assemble_zeta(fan.rank, rep.breakdown);
    return rep;
}

struct Comparison {
    bool equal = false;
    ZetaExpr difference; // a - b, collected
    NormalForm normal_form;
};

inline Comparison compare_zeta(const ZetaExpr &a, const ZetaExpr &b)
{
    Comparison c;
    c.difference = (a - b).collected();
    c.normal_form = c.difference.normal_form();
    c.equal = c.normal_form.empty();
    return c;
}

inline Comparison compare_zeta(const ZetaReport &a, const ZetaReport &b) { return compare_zeta(a.expr, b.expr); }

struct PoleCandidate {
    Rational ratio;                    // nu / N; the pole sits at s = -ratio
    std::vector<DenomPair> sources;    // denominator pairs with this ratio
};

struct DetectedPole {
    Rational ratio;
    int order = 0;         // multiplicity of the real pole at s = -ratio
    bool non_real = false; // poles at s = -ratio + 2 pi i k / (N log L) survive too
};

struct PoleReport {
    std::vector<PoleCandidate> candidates;
    std::vector<DetectedPole> detected;
    std::vector<Rational> non_real;      // only non-real poles with this real part survive
    std::vector<Rational> indeterminate; // only opaque atoms carry the ratio
};

/// Candidate ratios from the denominators, and the poles that survive in the
/// normal form. The real pole at s = -p/q is the factor t^(ep/g) - T^(q/g)
/// with g = gcd(ep, q).
inline PoleReport pole_report(const ZetaExpr &z)
{
    PoleReport rep;
    std::map<Rational, std::set<DenomPair>> cands;
    for (const auto &t : z.terms())
        for (const auto &d : t.dens)
            cands[Rational(d.nu) / Rational(d.N)].insert(d);
    for (const auto &[r, src] : cands)
        rep.candidates.push_back({r, {src.begin(), src.end()}});
    NormalForm nf = z.normal_form();
    for (const auto &[r, src] : cands) {
        int order = 0;
        bool non_real = false, opaque = false;
        std::int64_t p = to_i64(r.get_num()), q = to_i64(r.get_den());
        for (const auto &[atom, v] : nf) {
            std::int64_t e = v.den().ram();
            detail::TPoly den = detail::to_tpoly(v.den()).second;
            std::int64_t g = std::gcd(e * p, q);
            detail::TPoly real = detail::zeta_binomial({q / g, e * p / g}, 1);
            int k = 0;
            detail::TPoly quot;
            while (detail::deg(den) > 0 && detail::try_exact_div(den, real, quot)) {
                den = std::move(quot);
                ++k;
            }
            bool nr = std::any_of(src.begin(), src.end(), [&](const DenomPair &d) {
                return detail::deg(detail::gcd(den, detail::zeta_binomial(d, e))) > 0;
            });
            if (atom.is_unit()) {
                order = std::max(order, k);
                non_real = non_real || nr;
            } else if (k > 0 || nr) {
                opaque = true;
            }
        }
        if (order > 0)
            rep.detected.push_back({r, order, non_real});
        else if (non_real)
            rep.non_real.push_back(r);
        else if (opaque)
            rep.indeterminate.push_back(r);
    }
    return rep;
}

inline PoleReport pole_report(const ZetaReport &z) { return pole_report(z.expr); }

} // namespace dltz

#endif
