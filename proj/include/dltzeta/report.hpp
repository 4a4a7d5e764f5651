#ifndef DLTZETA_REPORT_HPP
#define DLTZETA_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

#include "adjunction.hpp"
#include "io.hpp"
#include "pairs.hpp"
#include "zeta.hpp"

namespace dltz {

// JSON encodings. Rationals are strings "p/q"; polynomials in t, T are lists
// of [t-exponent, T-exponent, coefficient] at a stated ramification.

inline json to_json(const Rational &q) { return to_string(q); }

inline json to_json(const QVector &v)
{
    json a = json::array();
    for (const auto &x : v)
        a.push_back(to_string(x));
    return a;
}

inline json lpoly_to_json(const LPoly &p)
{
    json terms = json::array();
    for (const auto &[key, c] : p.terms())
        terms.push_back({key.second, key.first, to_string(c)});
    return {{"ram", p.ram()}, {"terms", terms}};
}

inline LPoly lpoly_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("ram") || !j.contains("terms") || !j["terms"].is_array())
        throw Error(Errc::schema_error, "polynomial must be {\"ram\", \"terms\"}");
    LPoly p(j["ram"].get<std::int64_t>());
    for (const auto &t : j["terms"]) {
        if (!t.is_array() || t.size() != 3 || !t[2].is_string())
            throw Error(Errc::schema_error, "polynomial term must be [i, j, \"coefficient\"]");
        p.add_term(t[0].get<std::int64_t>(), t[1].get<std::int64_t>(), parse_rational(t[2].get<std::string>()));
    }
    return p;
}

inline json to_json(const RationalFunction &f)
{
    return {{"text", f.str()}, {"num", lpoly_to_json(f.num())}, {"den", lpoly_to_json(f.den())}};
}

inline RationalFunction rational_function_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw Error(Errc::schema_error, "rational function must have \"num\" and \"den\"");
    return rf_normalize(lpoly_from_json(j["num"]), lpoly_from_json(j["den"]));
}

inline json to_json(const MotiveClass &m)
{
    json parts = json::array();
    for (const auto &[a, c] : m.parts())
        parts.push_back({{"atom", a.key}, {"dim", a.dim}, {"coefficient", to_json(c)}});
    return {{"text", m.str()}, {"parts", parts}};
}

inline MotiveClass motive_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("parts") || !j["parts"].is_array())
        throw Error(Errc::schema_error, "motive must have \"parts\"");
    MotiveClass m;
    for (const auto &p : j["parts"])
        m += MotiveClass::atom(OpaqueAtom{p.at("atom").get<std::string>(), p.at("dim").get<int>()},
                               rational_function_from_json(p.at("coefficient")));
    return m;
}

inline json to_json(const ZetaExpr &z)
{
    json terms = json::array();
    for (const auto &t : z.terms()) {
        json d = json::array();
        for (const auto &p : t.dens)
            d.push_back({p.N, p.nu});
        terms.push_back({{"coefficient", to_json(t.coef)}, {"denominators", d}});
    }
    return {{"text", z.str()}, {"terms", terms}};
}

inline ZetaExpr zeta_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw Error(Errc::schema_error, "zeta expression must have \"terms\"");
    ZetaExpr z;
    for (const auto &t : j["terms"]) {
        std::vector<DenomPair> d;
        for (const auto &p : t.at("denominators"))
            d.push_back({p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>()});
        z.add_term(motive_from_json(t.at("coefficient")), d);
    }
    return z;
}

inline json to_json(const NormalForm &nf)
{
    json a = json::array();
    for (const auto &[atom, v] : nf)
        a.push_back({{"atom", atom.key}, {"value", to_json(v)}});
    return a;
}

inline json cone_json(const Fan &fan, const ConeIdx &c)
{
    json labels = json::array();
    for (int r : c)
        labels.push_back(fan.labels[static_cast<std::size_t>(r)]);
    return {{"rays", c}, {"labels", labels}};
}

inline json ray_table_json(const Fan &fan, const std::vector<RayData> &table)
{
    json a = json::array();
    for (std::size_t i = 0; i < table.size(); ++i)
        a.push_back({{"label", fan.labels[i]},
                     {"ray", to_json(table[i].ray)},
                     {"N", table[i].N.get_str()},
                     {"nu", table[i].nu.get_str()}});
    return a;
}

inline json to_json(const DltCertificate &c)
{
    const Fan &fan = c.fan;
    json j;
    j["valid"] = c.valid();
    j["failures"] = c.failures;
    j["fan_violations"] = c.validation.violations;
    j["ray_table"] = ray_table_json(fan, c.ray_table);
    j["simplicial"] = c.simplicial;
    if (c.support) {
        json sf = json::array();
        for (std::size_t i = 0; i < fan.cones.size(); ++i)
            sf.push_back({{"cone", cone_json(fan, fan.cones[i])}, {"m", to_json(c.support->per_cone[i])}});
        j["support_function"] = sf;
        json phi = json::array();
        for (const auto &v : c.support->values)
            phi.push_back(to_string(v));
        j["phi_on_rays"] = phi;
    }
    json lc = {{"log_canonical", c.lc.log_canonical},
               {"minimum", to_string(c.lc.minimum)},
               {"candidates", c.lc.candidates}};
    if (c.lc.witness)
        lc["witness"] = {{"u", to_json(*c.lc.witness)}, {"a", to_string(c.lc.witness_value)}};
    lc["zeros"] = json::array();
    for (const auto &z : c.lc.zeros)
        lc["zeros"].push_back(to_json(z));
    j["lc"] = lc;
    j["nonlinear_cones"] = json::array();
    for (const auto &k : c.nonlinear_cones)
        j["nonlinear_cones"].push_back(cone_json(fan, k));
    j["stray_zeros"] = json::array();
    for (const auto &z : c.stray_zeros)
        j["stray_zeros"].push_back(to_json(z));
    j["excess_e0"] = json::array();
    for (const auto &k : c.excess_e0)
        j["excess_e0"].push_back(cone_json(fan, k));
    j["lc_centers"] = json::array();
    for (const auto &e : c.centers) {
        json x = {{"name", e.center.name(fan)},
                  {"dim", e.center.dim},
                  {"multiplicity", e.multiplicity.get_str()},
                  {"regular", e.regular}};
        if (e.segment_nondegenerate)
            x["segment_nondegenerate"] = *e.segment_nondegenerate;
        j["lc_centers"].push_back(x);
    }
    j["nef"] = json::array();
    for (const auto &w : c.nef)
        j["nef"].push_back({{"wall", cone_json(fan, w.wall)},
                            {"cones", {w.left, w.right}},
                            {"u_right", to_json(w.u_right)},
                            {"phi_right", to_string(w.phi_right)},
                            {"left_at_right", to_string(w.left_at_right)},
                            {"u_left", to_json(w.u_left)},
                            {"phi_left", to_string(w.phi_left)},
                            {"right_at_left", to_string(w.right_at_left)},
                            {"pass", w.pass()}});
    j["snc_witness"] = json::array();
    for (const auto &[k, m] : c.snc_witness)
        j["snc_witness"].push_back({{"cone", cone_json(fan, k)}, {"multiplicity", m.get_str()}});
    j["assumptions"] = c.assumptions;
    return j;
}

inline json to_json(const Fan &fan, const StratumDivisor &d)
{
    json a = json::array();
    for (const auto &c : d.components)
        a.push_back({{"name", c.name(fan)},
                     {"coefficient", to_string(c.coefficient)},
                     {"resolution_ray", to_json(c.resolution_ray)},
                     {"components", c.components.get_str()}});
    return {{"stratum", stratum_name(fan, d.stratum)}, {"components", a}};
}

inline json to_json(const ZetaReport &r)
{
    json b = json::array();
    for (const auto &t : r.breakdown) {
        json d = json::array();
        for (const auto &p : t.dens)
            d.push_back({p.N, p.nu});
        b.push_back({{"stratum", t.name}, {"stringy", to_json(t.value)}, {"denominators", d}});
    }
    return {{"mode", r.mode},      {"rank", r.rank},    {"filter", r.filter},
            {"expr", to_json(r.expr)}, {"breakdown", b}, {"assumptions", r.assumptions}};
}

inline json to_json(const PoleReport &p)
{
    json c = json::array();
    for (const auto &x : p.candidates) {
        json s = json::array();
        for (const auto &d : x.sources)
            s.push_back({d.N, d.nu});
        c.push_back({{"ratio", to_string(x.ratio)}, {"sources", s}});
    }
    json d = json::array();
    for (const auto &x : p.detected)
        d.push_back({{"ratio", to_string(x.ratio)}, {"order", x.order}, {"non_real", x.non_real}});
    json nr = json::array(), ind = json::array();
    for (const auto &x : p.non_real)
        nr.push_back(to_string(x));
    for (const auto &x : p.indeterminate)
        ind.push_back(to_string(x));
    return {{"candidates", c}, {"detected", d}, {"non_real_only", nr}, {"indeterminate", ind}};
}

// LaTeX rendering in the usual display style: \mathbb{L}, fractions with
// \nicefrac exponents, and (L-1)/(L^{Ns+nu}-1) factors.

inline std::string latex_rational(const Rational &q)
{
    if (q.get_den() == 1)
        return q.get_str();
    return std::string(q < 0 ? "-" : "") + "\\frac{" + Integer(abs(q.get_num())).get_str() + "}{" +
           q.get_den().get_str() + "}";
}

inline std::string latex_l_power(std::int64_t i, std::int64_t ram)
{
    if (i == 0)
        return "";
    Rational q = make_rational(i, ram);
    if (q == 1)
        return "\\mathbb{L}";
    std::string e = q.get_den() == 1 ? q.get_num().get_str()
                                     : (q < 0 ? "-" : "") + std::string("\\nicefrac{") +
                                           Integer(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() + "}";
    return "\\mathbb{L}^{" + e + "}";
}

inline std::string latex(const LPoly &p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto &[key, c] = *it;
        std::string mono = latex_l_power(key.second, p.ram());
        if (key.first == 1)
            mono += "T";
        else if (key.first > 1)
            mono += "T^{" + std::to_string(key.first) + "}";
        Rational a = abs(c);
        std::string coef;
        if (mono.empty() || a != 1)
            coef = latex_rational(a);
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? "-" : "+");
        out += coef + mono;
        first = false;
    }
    return out;
}

inline std::string latex(const RationalFunction &f)
{
    if (f.den() == LPoly::constant(1))
        return latex(f.num());
    return "\\frac{" + latex(f.num()) + "}{" + latex(f.den()) + "}";
}

inline std::string latex(const MotiveClass &m)
{
    if (m.is_zero())
        return "0";
    std::string out;
    for (const auto &[a, c] : m.parts()) {
        if (!out.empty())
            out += "+";
        if (a.is_unit())
            out += latex(c);
        else
            out += "\\bigl(" + latex(c) + "\\bigr)[\\texttt{" + a.key + "}]";
    }
    return out;
}

inline std::string latex_denominator(const DenomPair &d)
{
    std::string e = (d.N == 0 ? "" : (d.N == 1 ? "" : std::to_string(d.N)) + "s");
    if (d.nu != 0 || e.empty())
        e += (e.empty() || d.nu < 0 ? "" : "+") + std::to_string(d.nu);
    return "\\frac{\\mathbb{L}-1}{\\mathbb{L}^{" + e + "}-1}";
}

inline std::string latex(const ZetaExpr &z)
{
    if (z.empty())
        return "0";
    std::string out;
    for (const auto &t : z.terms()) {
        if (!out.empty())
            out += "\\\\\n&+";
        out += "\\Bigl(" + latex(t.coef) + "\\Bigr)";
        for (const auto &d : t.dens)
            out += latex_denominator(d);
    }
    return out;
}

/// Zeta report with the factor L^(-n) pulled out.
inline std::string latex(const ZetaReport &r)
{
    ZetaExpr inner = r.expr * l_power(static_cast<long>(r.rank));
    return "Z(s)&=\\mathbb{L}^{-" + std::to_string(r.rank) + "}\\Bigl(" + latex(inner) + "\\Bigr)";
}

// Plain text.

inline std::string text(const DltCertificate &c)
{
    const Fan &fan = c.fan;
    std::ostringstream o;
    o << "dlt modification: " << (c.valid() ? "CERTIFIED" : "NOT CERTIFIED") << "\n";
    for (const auto &f : c.failures)
        o << "  failure: " << f << "\n";
    if (!c.validation.valid)
        return o.str();
    o << "rays (label: u, N, nu):\n";
    for (std::size_t i = 0; i < c.ray_table.size(); ++i)
        o << "  " << fan.labels[i] << ": " << to_string(c.ray_table[i].ray) << " " << c.ray_table[i].N << " "
          << c.ray_table[i].nu << "\n";
    if (c.support) {
        o << "support function m_sigma:\n";
        for (std::size_t i = 0; i < fan.cones.size(); ++i) {
            o << "  " << fan.cone_label(fan.cones[i]) << ": (";
            for (std::size_t k = 0; k < c.support->per_cone[i].size(); ++k)
                o << (k ? "," : "") << to_string(c.support->per_cone[i][k]);
            o << ")\n";
        }
    }
    o << "log canonical: " << (c.lc.log_canonical ? "yes" : "no") << " (minimum a = " << to_string(c.lc.minimum)
      << " over " << c.lc.candidates << " candidates)\n";
    if (c.lc.witness)
        o << "  witness a" << to_string(*c.lc.witness) << " = " << to_string(c.lc.witness_value) << "\n";
    o << "lc centers:\n";
    for (const auto &e : c.centers)
        o << "  " << e.center.name(fan) << " dim " << e.center.dim << " multiplicity " << e.multiplicity
          << (e.pass() ? "" : " FAIL") << "\n";
    o << "nef evidence (" << c.nef.size() << " walls):\n";
    for (const auto &w : c.nef)
        o << "  " << fan.cone_label(w.wall) << ": phi" << to_string(w.u_right) << " = " << to_string(w.phi_right)
          << " <= " << to_string(w.left_at_right) << ", phi" << to_string(w.u_left) << " = "
          << to_string(w.phi_left) << " <= " << to_string(w.right_at_left) << (w.pass() ? "" : " FAIL") << "\n";
    if (!c.snc_witness.empty()) {
        o << "non-snc locus (minimal non-regular cones):\n";
        for (const auto &[k, m] : c.snc_witness)
            o << "  " << fan.cone_label(k) << " multiplicity " << m << "\n";
    }
    for (const auto &a : c.assumptions)
        o << "assumption: " << a << "\n";
    return o.str();
}

inline std::string text(const ZetaReport &r)
{
    std::ostringstream o;
    o << "mode: " << r.mode << "\n";
    if (!r.filter.empty())
        o << "filter: " << r.filter << "\n";
    for (const auto &t : r.breakdown) {
        o << "  " << t.name << " [";
        for (std::size_t i = 0; i < t.dens.size(); ++i)
            o << (i ? " " : "") << "(" << t.dens[i].N << "," << t.dens[i].nu << ")";
        o << "]: " << t.value.str() << "\n";
    }
    o << "Z = " << r.expr.str() << "\n";
    for (const auto &a : r.assumptions)
        o << "assumption: " << a << "\n";
    return o.str();
}

inline std::string text(const PoleReport &p)
{
    std::ostringstream o;
    o << "candidate poles (s = -ratio):";
    for (const auto &c : p.candidates)
        o << " " << to_string(c.ratio);
    o << "\ndetected:";
    for (const auto &d : p.detected)
        o << " " << to_string(d.ratio) << " (order " << d.order << (d.non_real ? ", non-real too" : "") << ")";
    if (!p.non_real.empty()) {
        o << "\nnon-real only:";
        for (const auto &r : p.non_real)
            o << " " << to_string(r);
    }
    if (!p.indeterminate.empty()) {
        o << "\nindeterminate (opaque classes):";
        for (const auto &r : p.indeterminate)
            o << " " << to_string(r);
    }
    o << "\n";
    return o.str();
}

} // namespace dltz

#endif
