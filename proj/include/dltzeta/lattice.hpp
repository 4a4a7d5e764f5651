#ifndef DLTZETA_LATTICE_HPP
#define DLTZETA_LATTICE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "motive.hpp"

namespace dltz {

/// Simplicial cone given by its primitive rays.
struct Cone {
    std::vector<LatticeVector> rays;

    std::size_t dim() const { return rays.size(); }
};

/// Sorted ray indices of a cone inside a fan.
using ConeIdx = std::vector<int>;

inline bool is_subset(const ConeIdx &a, const ConeIdx &b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline ConeIdx cone_union(const ConeIdx &a, const ConeIdx &b)
{
    ConeIdx out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline ConeIdx cone_intersection(const ConeIdx &a, const ConeIdx &b)
{
    ConeIdx out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline ConeIdx cone_difference(const ConeIdx &a, const ConeIdx &b)
{
    ConeIdx out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Simplicial fan in the positive orthant of Z^rank. Rays carry display
/// labels: coordinate rays are x, y, z, the others are numbered 1, 2, ...
struct Fan {
    std::size_t rank = 0;
    std::vector<LatticeVector> rays;
    std::vector<std::string> labels;
    std::vector<ConeIdx> cones; // maximal cones

    static Fan make(std::size_t rank, std::vector<LatticeVector> rays, std::vector<ConeIdx> cones,
                    std::vector<std::string> labels = {})
    {
        Fan f;
        f.rank = rank;
        f.rays = std::move(rays);
        for (auto &c : cones) {
            std::sort(c.begin(), c.end());
            for (int i : c)
                if (i < 0 || static_cast<std::size_t>(i) >= f.rays.size())
                    throw Error(Errc::schema_error, "cone refers to ray index " + std::to_string(i) +
                                                        " outside 0.." + std::to_string(f.rays.size() - 1));
        }
        f.cones = std::move(cones);
        f.labels = labels.empty() ? default_labels(rank, f.rays) : std::move(labels);
        if (f.labels.size() != f.rays.size())
            throw Error(Errc::schema_error, "label count differs from ray count");
        return f;
    }

    static std::vector<std::string> default_labels(std::size_t rank, const std::vector<LatticeVector> &rays)
    {
        static const char *names[] = {"x", "y", "z"};
        std::vector<std::string> out;
        int next = 1;
        for (const auto &r : rays) {
            int k = coordinate_axis(r);
            if (k >= 0)
                out.push_back(rank <= 3 ? names[k] : "x" + std::to_string(k + 1));
            else
                out.push_back(std::to_string(next++));
        }
        return out;
    }

    /// Index of the standard basis vector r, or -1.
    static int coordinate_axis(const LatticeVector &r)
    {
        int axis = -1;
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (r[k] == 0)
                continue;
            if (r[k] != 1 || axis >= 0)
                return -1;
            axis = static_cast<int>(k);
        }
        return axis;
    }

    bool is_coordinate_ray(int i) const { return coordinate_axis(rays[static_cast<std::size_t>(i)]) >= 0; }

    /// True iff c is a face of some maximal cone (every subset is, since the fan is simplicial).
    bool contains_cone(const ConeIdx &c) const
    {
        return std::any_of(cones.begin(), cones.end(), [&](const ConeIdx &m) { return is_subset(c, m); });
    }

    /// All cones of the fan including the zero cone, sorted by (dim, indices).
    std::vector<ConeIdx> all_cones() const
    {
        std::set<ConeIdx> out;
        for (const auto &m : cones) {
            std::size_t k = m.size();
            for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
                ConeIdx c;
                for (std::size_t i = 0; i < k; ++i)
                    if (mask & (std::size_t{1} << i))
                        c.push_back(m[i]);
                out.insert(c);
            }
        }
        std::vector<ConeIdx> v(out.begin(), out.end());
        std::stable_sort(v.begin(), v.end(), [](const ConeIdx &a, const ConeIdx &b) { return a.size() < b.size(); });
        return v;
    }

    /// Maximal cones containing c.
    std::vector<int> maximal_cones_containing(const ConeIdx &c) const
    {
        std::vector<int> out;
        for (std::size_t i = 0; i < cones.size(); ++i)
            if (is_subset(c, cones[i]))
                out.push_back(static_cast<int>(i));
        return out;
    }

    int ray_index(const LatticeVector &v) const
    {
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (rays[i] == v)
                return static_cast<int>(i);
        return -1;
    }

    int label_index(const std::string &label) const
    {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label)
                return static_cast<int>(i);
        return -1;
    }

    Cone cone(const ConeIdx &c) const
    {
        Cone out;
        for (int i : c)
            out.rays.push_back(rays[static_cast<std::size_t>(i)]);
        return out;
    }

    /// "<x,y,2>" style name; "0" for the zero cone.
    std::string cone_label(const ConeIdx &c) const
    {
        if (c.empty())
            return "0";
        std::string s = "<";
        for (std::size_t i = 0; i < c.size(); ++i)
            s += (i ? "," : "") + labels[static_cast<std::size_t>(c[i])];
        return s + ">";
    }

    /// Label for a newly inserted ray: one more than the largest numeric label.
    std::string next_label() const
    {
        long best = 0;
        for (const auto &l : labels) {
            if (l.empty() || l.find_first_not_of("0123456789") != std::string::npos)
                continue;
            best = std::max(best, std::stol(l));
        }
        return std::to_string(best + 1);
    }

    void require_cone(const ConeIdx &c) const
    {
        if (!contains_cone(c))
            throw Error(Errc::cone_not_in_fan, "cone " + to_string_indices(c) + " is not in the fan");
    }

    static std::string to_string_indices(const ConeIdx &c)
    {
        std::string s = "{";
        for (std::size_t i = 0; i < c.size(); ++i)
            s += (i ? "," : "") + std::to_string(c[i]);
        return s + "}";
    }
};

/// Index of the sublattice spanned by the rays inside its saturation: gcd of
/// the maximal minors of the ray matrix.
inline Integer cone_multiplicity(const Cone &c)
{
    std::size_t k = c.dim();
    if (k == 0)
        return 1;
    std::size_t n = c.rays[0].size();
    if (k > n)
        throw Error(Errc::degenerate_cone, "more rays than the ambient rank");
    Integer g = 0;
    std::vector<std::size_t> cols(k);
    // Enumerate k-subsets of the n columns.
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
        std::vector<LatticeVector> minor;
        for (const auto &r : c.rays) {
            LatticeVector m;
            for (std::size_t j = 0; j < n; ++j)
                if (pick[j])
                    m.push_back(r[j]);
            minor.push_back(std::move(m));
        }
        g = igcd(g, determinant(std::move(minor)));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (g == 0)
        throw Error(Errc::degenerate_cone, "rays are linearly dependent");
    return g;
}

inline Integer cone_multiplicity(const Fan &f, const ConeIdx &c) { return cone_multiplicity(f.cone(c)); }

/// Coordinates of v in the basis of rays of c when v lies in c; nullopt
/// stands for "not in cone".
inline std::optional<QVector> barycentric_coordinates(const Cone &c, const LatticeVector &v)
{
    auto x = solve_in_span(c.rays, v);
    if (!x)
        return std::nullopt;
    for (const auto &l : *x)
        if (l < 0)
            return std::nullopt;
    return x;
}

/// Maximal cone containing v (first in cone order) with v's coordinates.
inline std::optional<std::pair<int, QVector>> locate(const Fan &f, const LatticeVector &v)
{
    for (std::size_t i = 0; i < f.cones.size(); ++i)
        if (auto b = barycentric_coordinates(f.cone(f.cones[i]), v))
            return std::make_pair(static_cast<int>(i), *b);
    return std::nullopt;
}

/// Smallest cone of f containing v in its relative interior.
inline std::optional<ConeIdx> carrier_cone(const Fan &f, const LatticeVector &v)
{
    auto loc = locate(f, v);
    if (!loc)
        return std::nullopt;
    const ConeIdx &m = f.cones[static_cast<std::size_t>(loc->first)];
    ConeIdx c;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (loc->second[i] > 0)
            c.push_back(m[i]);
    return c;
}

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> violations;

    void fail(std::string msg)
    {
        valid = false;
        violations.push_back(std::move(msg));
    }
};

namespace detail {

/// Inward facet normals of a full-dimensional simplicial cone.
inline std::vector<LatticeVector> facet_normals(const Cone &c)
{
    std::vector<LatticeVector> out;
    std::size_t n = c.dim();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<LatticeVector> others;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                others.push_back(c.rays[j]);
        auto k = kernel_line(others, n);
        if (!k)
            throw Error(Errc::degenerate_cone, "rays are linearly dependent");
        if (dot(*k, c.rays[i]) < 0)
            *k = Integer(-1) * *k;
        out.push_back(*k);
    }
    return out;
}

/// Extreme rays of the intersection of two full-dimensional simplicial cones.
inline std::vector<LatticeVector> intersection_rays(const Cone &a, const Cone &b)
{
    std::vector<LatticeVector> normals = facet_normals(a), nb = facet_normals(b);
    normals.insert(normals.end(), nb.begin(), nb.end());
    std::size_t n = a.dim(), m = normals.size();
    std::set<LatticeVector> out;
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(n - 1), true);
    do {
        std::vector<LatticeVector> rows;
        for (std::size_t i = 0; i < m; ++i)
            if (pick[i])
                rows.push_back(normals[i]);
        auto k = kernel_line(rows, n);
        if (!k)
            continue;
        for (int s : {1, -1}) {
            LatticeVector r = Integer(s) * *k;
            bool ok = std::all_of(normals.begin(), normals.end(), [&](const LatticeVector &h) { return dot(h, r) >= 0; });
            if (ok)
                out.insert(r);
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return {out.begin(), out.end()};
}

} // namespace detail

/// Structural checks: primitivity, orthant, simpliciality, pairwise faces, support.
inline ValidationReport validate_fan(const Fan &f)
{
    ValidationReport rep;
    std::size_t n = f.rank;
    if (f.cones.empty())
        rep.fail("fan has no cones");
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        const auto &r = f.rays[i];
        std::string name = "ray " + f.labels[i] + " " + to_string(r);
        if (r.size() != n) {
            rep.fail(name + " has the wrong length");
            continue;
        }
        if (is_zero(r))
            rep.fail(name + " is zero");
        else if (!is_primitive(r))
            rep.fail(name + " is not primitive");
        if (std::any_of(r.begin(), r.end(), [](const Integer &x) { return x < 0; }))
            rep.fail(name + " leaves the positive orthant");
        for (std::size_t j = 0; j < i; ++j)
            if (f.rays[j] == r)
                rep.fail(name + " duplicates ray " + f.labels[j]);
    }
    if (!rep.valid)
        return rep;

    bool simplicial = true;
    for (const auto &c : f.cones) {
        std::string name = "cone " + f.cone_label(c);
        if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
            rep.fail(name + " repeats a ray");
            simplicial = false;
            continue;
        }
        Cone k = f.cone(c);
        if (rank_of(k.rays) != k.dim()) {
            rep.fail(name + " is not simplicial");
            simplicial = false;
        } else if (k.dim() != n) {
            rep.fail(name + " is not full-dimensional");
            simplicial = false;
        }
    }
    if (!simplicial)
        return rep;

    for (std::size_t i = 0; i < f.cones.size(); ++i)
        for (std::size_t j = i + 1; j < f.cones.size(); ++j) {
            ConeIdx common = cone_intersection(f.cones[i], f.cones[j]);
            for (const auto &r : detail::intersection_rays(f.cone(f.cones[i]), f.cone(f.cones[j]))) {
                int idx = f.ray_index(r);
                if (idx < 0 || !std::binary_search(common.begin(), common.end(), idx)) {
                    rep.fail("cones " + f.cone_label(f.cones[i]) + " and " + f.cone_label(f.cones[j]) +
                             " overlap beyond a common face");
                    break;
                }
            }
        }

    // Support: every facet is shared by two cones or lies on a coordinate hyperplane.
    std::map<ConeIdx, int> facet_count;
    for (const auto &c : f.cones)
        for (std::size_t k = 0; k < c.size(); ++k) {
            ConeIdx facet = c;
            facet.erase(facet.begin() + static_cast<long>(k));
            ++facet_count[facet];
        }
    for (const auto &[facet, cnt] : facet_count) {
        bool on_boundary = false;
        for (std::size_t axis = 0; axis < n && !on_boundary; ++axis)
            on_boundary = std::all_of(facet.begin(), facet.end(),
                                      [&](int r) { return f.rays[static_cast<std::size_t>(r)][axis] == 0; });
        if (cnt > 2)
            rep.fail("facet " + f.cone_label(facet) + " lies in more than two cones");
        else if (cnt == 1 && !on_boundary)
            rep.fail("facet " + f.cone_label(facet) + " is an interior boundary; support is not the orthant");
        else if (cnt == 2 && on_boundary)
            rep.fail("facet " + f.cone_label(facet) + " on the orthant boundary lies in two cones");
    }
    // Covering degree one at a generic interior point.
    for (long seed = 1; seed < 50; ++seed) {
        LatticeVector p(n);
        Integer base = 1000003 + seed;
        Integer pw = 1;
        for (std::size_t k = 0; k < n; ++k) {
            p[k] = pw + seed * static_cast<long>(k);
            pw *= base;
        }
        int inside = 0;
        bool generic = true;
        for (const auto &c : f.cones) {
            auto b = barycentric_coordinates(f.cone(c), p);
            if (!b)
                continue;
            if (std::any_of(b->begin(), b->end(), [](const Rational &x) { return x == 0; })) {
                generic = false;
                break;
            }
            ++inside;
        }
        if (!generic)
            continue;
        if (inside != 1)
            rep.fail("support does not cover the orthant exactly once (degree " + std::to_string(inside) + ")");
        break;
    }
    return rep;
}

struct Wall {
    ConeIdx wall;
    int left = -1;
    int right = -1;
};

/// Interior walls: codimension-one cones shared by two maximal cones.
inline std::vector<Wall> walls(const Fan &f)
{
    std::vector<Wall> out;
    for (std::size_t i = 0; i < f.cones.size(); ++i)
        for (std::size_t j = i + 1; j < f.cones.size(); ++j) {
            ConeIdx common = cone_intersection(f.cones[i], f.cones[j]);
            if (common.size() + 1 == f.rank && f.cones[i].size() == f.rank && f.cones[j].size() == f.rank)
                out.push_back({common, static_cast<int>(i), static_cast<int>(j)});
        }
    return out;
}

/// Star subdivision at the primitive vector v.
inline Fan star_subdivision(const Fan &f, const LatticeVector &v, std::string label = {})
{
    if (v.size() != f.rank)
        throw Error(Errc::invalid_argument, "vector " + to_string(v) + " has the wrong length");
    if (is_zero(v) || !is_primitive(v))
        throw Error(Errc::not_primitive, "vector " + to_string(v) + " is not primitive");
    auto carrier = carrier_cone(f, v);
    if (!carrier)
        throw Error(Errc::outside_support, "vector " + to_string(v) + " is outside the support of the fan");
    if (carrier->size() == 1)
        return f; // already a ray
    Fan g = f;
    int nv = static_cast<int>(g.rays.size());
    g.rays.push_back(v);
    g.labels.push_back(label.empty() ? f.next_label() : std::move(label));
    g.cones.clear();
    for (const auto &c : f.cones) {
        if (!is_subset(*carrier, c)) {
            g.cones.push_back(c);
            continue;
        }
        for (int r : *carrier) {
            ConeIdx nc;
            for (int x : c)
                if (x != r)
                    nc.push_back(x);
            nc.push_back(nv);
            std::sort(nc.begin(), nc.end());
            g.cones.push_back(std::move(nc));
        }
    }
    return g;
}

struct ResolveOptions {
    /// Cone (ray indices of the input fan) that must survive; only cones
    /// containing it are made regular. Empty: resolve everything.
    ConeIdx keep;
    /// Additional star subdivisions of regular cones after resolving, giving
    /// a different resolution of the same fan.
    int extra_blowups = 0;
};

struct Resolution {
    Fan fan;
    /// For each maximal cone of fan, the maximal cone of the input containing it.
    std::vector<int> origin;
};

namespace detail {

/// Lattice points of the half-open fundamental parallelepiped of a
/// full-dimensional simplicial cone, as coordinate vectors in [0,1)^n.
inline std::vector<QVector> parallelepiped_points(const Cone &c)
{
    std::size_t n = c.dim();
    std::vector<QVector> gens;
    for (std::size_t j = 0; j < n; ++j) {
        LatticeVector e(n, 0);
        e[j] = 1;
        auto x = solve_in_span(c.rays, e);
        QVector fr(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rational q = (*x)[i];
            Integer fl;
            mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
            fr[i] = q - fl;
        }
        gens.push_back(std::move(fr));
    }
    std::set<QVector> seen{QVector(n, Rational(0))};
    std::vector<QVector> queue{QVector(n, Rational(0))};
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (const auto &g : gens) {
            QVector nxt(n);
            for (std::size_t i = 0; i < n; ++i) {
                nxt[i] = queue[head][i] + g[i];
                if (nxt[i] >= 1)
                    nxt[i] -= 1;
            }
            if (seen.insert(nxt).second)
                queue.push_back(std::move(nxt));
        }
    seen.erase(QVector(n, Rational(0)));
    return {seen.begin(), seen.end()};
}

inline LatticeVector point_of(const Cone &c, const QVector &lambda)
{
    std::size_t n = c.rays[0].size();
    QVector acc(n, Rational(0));
    for (std::size_t i = 0; i < c.dim(); ++i)
        for (std::size_t k = 0; k < n; ++k)
            acc[k] += lambda[i] * c.rays[i][k];
    LatticeVector p(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (acc[k].get_den() != 1)
            throw Error(Errc::invalid_argument, "parallelepiped point is not integral");
        p[k] = acc[k].get_num();
    }
    return p;
}

/// Ray indices of keep, mapped into g by vector equality.
inline ConeIdx map_cone(const Fan &from, const Fan &to, const ConeIdx &c)
{
    ConeIdx out;
    for (int i : c) {
        int j = to.ray_index(from.rays[static_cast<std::size_t>(i)]);
        if (j < 0)
            throw Error(Errc::invalid_argument, "ray lost during resolution");
        out.push_back(j);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// Regular refinement: Hirzebruch-Jung in rank 2, parallelepiped star
/// subdivisions in rank 3.
inline Resolution resolve_fan(const Fan &f, const ResolveOptions &opt = {})
{
    if (f.rank > 3)
        throw Error(Errc::dimension_too_high, "resolution is implemented for rank at most 3");
    if (!opt.keep.empty())
        f.require_cone(opt.keep);
    Fan g = f;
    for (;;) {
        ConeIdx keep = detail::map_cone(f, g, opt.keep);
        int best = -1;
        Integer best_mult = 1;
        for (std::size_t i = 0; i < g.cones.size(); ++i) {
            if (!is_subset(keep, g.cones[i]))
                continue;
            Integer m = cone_multiplicity(g, g.cones[i]);
            if (m > best_mult || (m == best_mult && m > 1 && g.cones[i] < g.cones[static_cast<std::size_t>(best)])) {
                best = static_cast<int>(i);
                best_mult = m;
            }
        }
        if (best < 0)
            break;
        const ConeIdx &sigma = g.cones[static_cast<std::size_t>(best)];
        Cone c = g.cone(sigma);
        std::optional<LatticeVector> chosen;
        if (g.rank == 2) {
            // (q v1 + v2)/d with 0 <= q < d.
            for (long q = 0; q < best_mult.get_si(); ++q) {
                LatticeVector w = Integer(q) * c.rays[0] + c.rays[1];
                if (std::all_of(w.begin(), w.end(), [&](const Integer &x) { return x % best_mult == 0; })) {
                    for (auto &x : w)
                        x /= best_mult;
                    chosen = w;
                    break;
                }
            }
        } else {
            std::optional<std::pair<Rational, LatticeVector>> pick;
            for (const auto &lam : detail::parallelepiped_points(c)) {
                ConeIdx support;
                Rational sum = 0;
                for (std::size_t i = 0; i < lam.size(); ++i) {
                    sum += lam[i];
                    if (lam[i] > 0)
                        support.push_back(sigma[i]);
                }
                if (!keep.empty() && is_subset(support, keep))
                    continue;
                LatticeVector p = detail::point_of(c, lam);
                if (!pick || sum < pick->first || (sum == pick->first && p < pick->second))
                    pick = std::make_pair(sum, p);
            }
            if (pick)
                chosen = pick->second;
        }
        if (!chosen)
            throw Error(Errc::cannot_decrease, "no lattice point decreases the multiplicity of " + g.cone_label(sigma));
        g = star_subdivision(g, *chosen);
    }
    for (int k = 0; k < opt.extra_blowups; ++k) {
        ConeIdx keep = detail::map_cone(f, g, opt.keep);
        for (const auto &c : g.cones)
            if (is_subset(keep, c) && c != keep) {
                LatticeVector s(g.rank, 0);
                for (int r : c)
                    s = s + g.rays[static_cast<std::size_t>(r)];
                g = star_subdivision(g, primitive(s));
                break;
            }
    }
    Resolution res{g, {}};
    for (const auto &c : g.cones) {
        LatticeVector s(g.rank, 0);
        for (int r : c)
            s = s + g.rays[static_cast<std::size_t>(r)];
        auto loc = locate(f, s);
        res.origin.push_back(loc ? loc->first : -1);
    }
    return res;
}

/// Orbit closure V(base) as a toric variety: fan in the quotient lattice.
struct StarFan {
    ConeIdx base;
    std::size_t rank = 0;
    std::vector<LatticeVector> rays;
    std::vector<int> ray_origin;      // fan ray mapping onto each star-fan ray
    std::vector<ConeIdx> cones;       // maximal cones, indices into rays
    std::vector<ConeIdx> cone_origin; // the fan cone (containing base) of each maximal cone

    /// Star-fan cone of a fan cone containing base.
    ConeIdx image(const ConeIdx &fan_cone) const
    {
        ConeIdx out;
        for (int r : cone_difference(fan_cone, base)) {
            auto it = std::find(ray_origin.begin(), ray_origin.end(), r);
            if (it == ray_origin.end())
                throw Error(Errc::cone_not_in_fan, "cone does not contain the base cone");
            out.push_back(static_cast<int>(it - ray_origin.begin()));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    /// Fan cone of a star-fan cone.
    ConeIdx preimage(const ConeIdx &star_cone) const
    {
        ConeIdx out = base;
        for (int i : star_cone)
            out.push_back(ray_origin[static_cast<std::size_t>(i)]);
        std::sort(out.begin(), out.end());
        return out;
    }
    Fan as_fan() const
    {
        Fan f;
        f.rank = rank;
        f.rays = rays;
        f.cones = cones;
        for (int r : ray_origin)
            f.labels.push_back(std::to_string(r));
        return f;
    }
};

/// Quotient map N -> N / (span(c) cap N) as a function of integer vectors.
struct QuotientMap {
    std::vector<LatticeVector> basis_change; // unimodular n x n (rows)
    std::size_t k = 0;

    LatticeVector operator()(const LatticeVector &u) const
    {
        std::size_t n = basis_change.size();
        LatticeVector out;
        for (std::size_t j = k; j < n; ++j) {
            Integer s = 0;
            for (std::size_t i = 0; i < n; ++i)
                s += u[i] * basis_change[i][j];
            out.push_back(s);
        }
        return out;
    }
};

inline QuotientMap quotient_map(const Fan &f, const ConeIdx &c)
{
    Cone k = f.cone(c);
    return {column_reduce(k.rays, f.rank), k.dim()};
}

inline StarFan star_fan(const Fan &f, const ConeIdx &c)
{
    f.require_cone(c);
    StarFan s;
    s.base = c;
    s.rank = f.rank - c.size();
    QuotientMap q = quotient_map(f, c);
    std::vector<int> containing = f.maximal_cones_containing(c);
    std::set<int> neighbours;
    for (int m : containing)
        for (int r : cone_difference(f.cones[static_cast<std::size_t>(m)], c))
            neighbours.insert(r);
    for (int r : neighbours) {
        s.ray_origin.push_back(r);
        s.rays.push_back(primitive(q(f.rays[static_cast<std::size_t>(r)])));
    }
    for (int m : containing) {
        s.cones.push_back(s.image(f.cones[static_cast<std::size_t>(m)]));
        s.cone_origin.push_back(f.cones[static_cast<std::size_t>(m)]);
    }
    return s;
}

/// Class of the open orbit O(c): (L - 1)^(n - dim c).
inline MotiveClass orbit_class(const Fan &f, const ConeIdx &c)
{
    f.require_cone(c);
    return MotiveClass::torus(static_cast<unsigned>(f.rank - c.size()));
}

} // namespace dltz

#endif
