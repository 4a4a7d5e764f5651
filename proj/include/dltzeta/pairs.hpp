#ifndef DLTZETA_PAIRS_HPP
#define DLTZETA_PAIRS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"
#include "newton.hpp"

namespace dltz {

inline std::vector<RayData> ray_table(const Polynomial &f, const Fan &fan)
{
    std::vector<RayData> out;
    for (const auto &r : fan.rays)
        out.push_back(newton_data(f, r));
    return out;
}

/// Piecewise-linear function with value N - nu on exceptional rays and 0 on
/// coordinate rays, linear on each maximal cone.
struct SupportFunction {
    Fan fan;
    std::vector<Rational> values;  // per ray
    std::vector<QVector> per_cone; // m_sigma per maximal cone

    /// Value at u, or nullopt outside the support.
    std::optional<Rational> operator()(const LatticeVector &u) const
    {
        auto loc = locate(fan, u);
        if (!loc)
            return std::nullopt;
        return dot(per_cone[static_cast<std::size_t>(loc->first)], u);
    }
};

inline SupportFunction support_function(const Polynomial &f, const Fan &fan)
{
    SupportFunction sf{fan, {}, {}};
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        if (fan.is_coordinate_ray(static_cast<int>(i))) {
            sf.values.emplace_back(0);
            continue;
        }
        RayData d = newton_data(f, fan.rays[i]);
        sf.values.emplace_back(d.N - d.nu);
    }
    for (const auto &c : fan.cones) {
        if (c.size() != fan.rank)
            throw Error(Errc::singular_system, "cone " + fan.cone_label(c) + " is not full-dimensional");
        std::vector<LatticeVector> rows;
        QVector rhs;
        for (int r : c) {
            rows.push_back(fan.rays[static_cast<std::size_t>(r)]);
            rhs.push_back(sf.values[static_cast<std::size_t>(r)]);
        }
        sf.per_cone.push_back(solve_rows(rows, rhs));
    }
    return sf;
}

/// a(u) = nu(u) - N(u) + phi(u) with respect to a precomputed support function.
inline Rational log_discrepancy(const Polynomial &f, const SupportFunction &sf, const LatticeVector &u)
{
    auto phi = sf(u);
    if (!phi)
        throw Error(Errc::outside_support, "vector " + to_string(u) + " is outside the support of the fan");
    RayData d = newton_data(f, u);
    return Rational(d.nu - d.N) + *phi;
}

inline Rational log_discrepancy(const Polynomial &f, const Fan &fan, const LatticeVector &u)
{
    return log_discrepancy(f, support_function(f, fan), u);
}

/// One wall inequality pair: phi(u0) <= <m_other, u0> with u0 the sum of the
/// generators of one adjacent cone, checked from both sides.
struct WallEvidence {
    ConeIdx wall;
    int left = -1, right = -1;
    LatticeVector u_right; // sum of generators of the right cone
    Rational phi_right, left_at_right;
    LatticeVector u_left;
    Rational phi_left, right_at_left;
    bool pass_right = false, pass_left = false;

    bool pass() const { return pass_right && pass_left; }
};

inline LatticeVector generator_sum(const Fan &fan, const ConeIdx &c)
{
    LatticeVector s(fan.rank, 0);
    for (int r : c)
        s = s + fan.rays[static_cast<std::size_t>(r)];
    return s;
}

inline std::vector<WallEvidence> check_gnef(const SupportFunction &sf)
{
    std::vector<WallEvidence> out;
    const Fan &fan = sf.fan;
    for (const auto &w : walls(fan)) {
        WallEvidence e;
        e.wall = w.wall;
        e.left = w.left;
        e.right = w.right;
        const QVector &ml = sf.per_cone[static_cast<std::size_t>(w.left)];
        const QVector &mr = sf.per_cone[static_cast<std::size_t>(w.right)];
        e.u_right = generator_sum(fan, fan.cones[static_cast<std::size_t>(w.right)]);
        e.phi_right = dot(mr, e.u_right);
        e.left_at_right = dot(ml, e.u_right);
        e.pass_right = e.phi_right <= e.left_at_right;
        e.u_left = generator_sum(fan, fan.cones[static_cast<std::size_t>(w.left)]);
        e.phi_left = dot(ml, e.u_left);
        e.right_at_left = dot(mr, e.u_left);
        e.pass_left = e.phi_left <= e.right_at_left;
        out.push_back(std::move(e));
    }
    return out;
}

inline std::vector<WallEvidence> check_gnef(const Polynomial &f, const Fan &fan)
{
    return check_gnef(support_function(f, fan));
}

struct LcResult {
    bool log_canonical = true;
    std::optional<LatticeVector> witness; // a negative value, when found
    Rational witness_value;
    Rational minimum;                     // smallest a over the candidates
    std::vector<LatticeVector> zeros;     // candidates with a = 0
    std::size_t candidates = 0;
};

/// Candidate extreme rays of the cells on which a is linear, per maximal cone.
inline std::vector<LatticeVector> lc_candidates(const Polynomial &f, const Fan &fan)
{
    std::set<LatticeVector> normals_f;
    auto supp = f.support();
    for (std::size_t i = 0; i < supp.size(); ++i)
        for (std::size_t j = i + 1; j < supp.size(); ++j) {
            LatticeVector d = supp[i] - supp[j];
            if (is_zero(d))
                continue;
            d = primitive(d);
            LatticeVector neg = Integer(-1) * d;
            normals_f.insert(std::max(d, neg));
        }
    std::set<LatticeVector> out;
    std::size_t n = fan.rank;
    for (const auto &c : fan.cones) {
        Cone k = fan.cone(c);
        for (const auto &r : k.rays)
            out.insert(r);
        out.insert(primitive(generator_sum(fan, c)));
        if (n < 2)
            continue;
        std::vector<LatticeVector> normals = detail::facet_normals(k);
        normals.insert(normals.end(), normals_f.begin(), normals_f.end());
        std::size_t m = normals.size();
        if (m + 1 < n)
            continue;
        std::vector<bool> pick(m, false);
        std::fill(pick.begin(), pick.begin() + static_cast<long>(n - 1), true);
        do {
            std::vector<LatticeVector> rows;
            for (std::size_t i = 0; i < m; ++i)
                if (pick[i])
                    rows.push_back(normals[i]);
            auto line = kernel_line(rows, n);
            if (!line)
                continue;
            for (int s : {1, -1}) {
                LatticeVector r = Integer(s) * *line;
                if (barycentric_coordinates(k, r))
                    out.insert(r);
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return {out.begin(), out.end()};
}

inline LcResult check_log_canonical(const Polynomial &f, const SupportFunction &sf)
{
    LcResult res;
    bool first = true;
    for (const auto &u : lc_candidates(f, sf.fan)) {
        ++res.candidates;
        Rational a = log_discrepancy(f, sf, u);
        if (first || a < res.minimum)
            res.minimum = a;
        first = false;
        if (a == 0)
            res.zeros.push_back(u);
        if (a < 0 && (!res.witness || a < res.witness_value)) {
            res.log_canonical = false;
            res.witness = u;
            res.witness_value = a;
        }
    }
    return res;
}

inline LcResult check_log_canonical(const Polynomial &f, const Fan &fan)
{
    return check_log_canonical(f, support_function(f, fan));
}

inline bool is_exceptional_cone(const Fan &fan, const ConeIdx &c)
{
    return std::none_of(c.begin(), c.end(), [&](int r) { return fan.is_coordinate_ray(r); });
}

/// lc center: V(cone) itself, or E0 cap V(cone) when e0 is set. The generic
/// point lies in the orbit O(cone).
struct LcCenter {
    ConeIdx cone;
    bool e0 = false;
    int dim = 0;
    Integer components = 1; // cosets for segment faces; 1 otherwise

    std::string name(const Fan &fan) const
    {
        std::string v;
        if (!cone.empty()) {
            v = "V(";
            for (std::size_t i = 0; i < cone.size(); ++i)
                v += (i ? "," : "") + fan.labels[static_cast<std::size_t>(cone[i])];
            v += ")";
        }
        if (!e0)
            return v;
        return cone.empty() ? "E0" : "E0 cap " + v;
    }
};

inline std::vector<LcCenter> enumerate_lc_centers(const Polynomial &f, const Fan &fan,
                                                  const std::optional<LcResult> &lc = std::nullopt)
{
    LcResult r = lc ? *lc : check_log_canonical(f, fan);
    if (!r.log_canonical)
        throw Error(Errc::not_log_canonical, "pair is not log canonical; a(" + to_string(*r.witness) +
                                                 ") = " + to_string(r.witness_value));
    std::vector<LcCenter> out;
    int n = static_cast<int>(fan.rank);
    for (const auto &c : fan.all_cones()) {
        if (!is_exceptional_cone(fan, c))
            continue;
        if (!c.empty())
            out.push_back({c, false, n - static_cast<int>(c.size()), 1});
        NewtonFace face = face_of_cone(f, fan.cone(c));
        // E0 itself is always a center, even when it misses the torus.
        if (face.dim <= 0 && !c.empty())
            continue;
        LcCenter e{c, true, n - static_cast<int>(c.size()) - 1, 1};
        if (face.dim == 1)
            e.components = segment_data(face).second;
        out.push_back(e);
    }
    return out;
}

struct CenterEvidence {
    LcCenter center;
    Integer multiplicity;
    bool regular = false;
    std::optional<bool> segment_nondegenerate; // unset for faces of dim >= 2
    bool pass() const { return regular && segment_nondegenerate.value_or(true); }
};

/// Machine-checkable dlt-modification evidence for (f, fan).
struct DltCertificate {
    Fan fan;
    Polynomial polynomial;
    ValidationReport validation;
    std::vector<RayData> ray_table;
    bool simplicial = false;
    std::optional<SupportFunction> support;
    LcResult lc;
    std::vector<ConeIdx> nonlinear_cones;     // cones whose face of f is empty
    std::vector<LatticeVector> stray_zeros;   // a = 0 away from exceptional strata
    std::vector<ConeIdx> excess_e0;           // E0 meets O(tau) but not O(sigma), sigma < tau exceptional
    std::vector<CenterEvidence> centers;
    std::vector<WallEvidence> nef;
    std::vector<std::pair<ConeIdx, Integer>> snc_witness; // minimal non-regular cones
    std::vector<std::string> assumptions;
    std::vector<std::string> failures;

    bool valid() const { return failures.empty(); }
};

inline DltCertificate certify_dlt_modification(const Polynomial &f, const Fan &fan)
{
    DltCertificate cert;
    cert.fan = fan;
    cert.polynomial = f;
    cert.validation = validate_fan(fan);
    if (!cert.validation.valid) {
        for (const auto &v : cert.validation.violations)
            cert.failures.push_back("fan: " + v);
        return cert;
    }
    cert.ray_table = ray_table(f, fan);
    // (i) Q-factoriality: validate_fan rejects non-simplicial cones.
    cert.simplicial = true;
    cert.support = support_function(f, fan);
    const SupportFunction &sf = *cert.support;

    // (ii) log canonical.
    cert.lc = check_log_canonical(f, sf);
    if (!cert.lc.log_canonical)
        cert.failures.push_back("not log canonical: a" + to_string(*cert.lc.witness) + " = " +
                                to_string(cert.lc.witness_value));

    // The boundary is the strict transform of Z(f): N is linear on every cone.
    for (const auto &c : fan.cones)
        if (face_of_cone(f, fan.cone(c)).vertices.empty())
            cert.nonlinear_cones.push_back(c);
    for (const auto &c : cert.nonlinear_cones)
        cert.failures.push_back("E0 contains the orbit of " + fan.cone_label(c) + " (N is not linear there)");

    // Divisorial places with a = 0 must be centred on strata of the reduced
    // boundary. A coordinate divisor dividing f is itself a component of E0.
    for (const auto &u : cert.lc.zeros) {
        auto car = carrier_cone(fan, u);
        if (!car || is_exceptional_cone(fan, *car))
            continue;
        bool in_e0 = car->size() == 1 && newton_N(f, fan.rays[static_cast<std::size_t>(car->front())]) > 0;
        if (!in_e0)
            cert.stray_zeros.push_back(u);
    }
    for (const auto &u : cert.stray_zeros)
        cert.failures.push_back("a" + to_string(u) + " = 0 but its centre is not a boundary stratum");

    auto all = fan.all_cones();
    std::map<ConeIdx, int> face_dim;
    for (const auto &c : all)
        face_dim[c] = face_of_cone(f, fan.cone(c)).dim;
    for (const auto &s : all) {
        if (!is_exceptional_cone(fan, s) || face_dim[s] > 0)
            continue;
        for (const auto &t : all)
            if (t.size() > s.size() && is_subset(s, t) && face_dim[t] > 0) {
                cert.excess_e0.push_back(s);
                cert.failures.push_back("E0 cap V" + fan.cone_label(s) + " has a component inside V" +
                                        fan.cone_label(t));
                break;
            }
    }

    // (iii) every lc center meets the snc locus.
    if (cert.lc.log_canonical) {
        for (const auto &c : enumerate_lc_centers(f, fan, cert.lc)) {
            CenterEvidence ev{c, cone_multiplicity(fan, c.cone), false, std::nullopt};
            ev.regular = ev.multiplicity == 1;
            if (c.e0) {
                NewtonFace face = face_of_cone(f, fan.cone(c.cone));
                if (face.dim <= 1)
                    ev.segment_nondegenerate = check_segment_nondegeneracy(f, face);
            }
            if (!ev.regular)
                cert.failures.push_back("lc center " + c.name(fan) + " lies in the singular locus (multiplicity " +
                                        ev.multiplicity.get_str() + ")");
            if (!ev.segment_nondegenerate.value_or(true))
                cert.failures.push_back("lc center " + c.name(fan) + ": degenerate segment face");
            cert.centers.push_back(std::move(ev));
        }
    }

    // (iv) nef over the base.
    cert.nef = check_gnef(sf);
    for (const auto &w : cert.nef)
        if (!w.pass())
            cert.failures.push_back("not nef across wall " + fan.cone_label(w.wall));

    for (const auto &c : all) {
        if (c.empty())
            continue;
        Integer m = cone_multiplicity(fan, c);
        if (m == 1)
            continue;
        bool minimal = std::none_of(cert.snc_witness.begin(), cert.snc_witness.end(),
                                    [&](const auto &w) { return is_subset(w.first, c); });
        if (minimal)
            cert.snc_witness.emplace_back(c, m);
    }

    std::set<std::string> big_faces;
    for (const auto &c : all) {
        NewtonFace face = face_of_cone(f, fan.cone(c));
        if (face.dim >= 2)
            big_faces.insert(fan.cone_label(c));
    }
    if (!big_faces.empty()) {
        std::string list;
        for (const auto &s : big_faces)
            list += (list.empty() ? "" : " ") + s;
        cert.assumptions.push_back("nondegeneracy of faces of dim >= 2 assumed (cones " + list + ")");
    }
    cert.assumptions.push_back("E0 is transversal to the toric strata on the snc locus (from nondegeneracy)");
    return cert;
}

} // namespace dltz

#endif
