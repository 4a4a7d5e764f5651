#ifndef DLTZETA_NEWTON_HPP
#define DLTZETA_NEWTON_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "lattice.hpp"
#include "motive.hpp"
#include "upoly.hpp"

namespace dltz {

/// Polynomial with rational coefficients; exponent vectors are nonnegative.
struct Polynomial {
    std::size_t nvars = 0;
    std::map<LatticeVector, Rational> terms;

    std::vector<LatticeVector> support() const
    {
        std::vector<LatticeVector> s;
        for (const auto &[e, c] : terms)
            s.push_back(e);
        return s;
    }
};

/// Parses {"nvars": n, "terms": [{"exp": [...], "coef": "p/q"}, ...]}.
inline Polynomial parse_polynomial(const nlohmann::json &j)
{
    auto bad = [](const std::string &m) { return Error(Errc::schema_error, m); };
    if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
        throw bad("polynomial must be an object with \"nvars\" and \"terms\"");
    if (!j["nvars"].is_number_integer() || j["nvars"].get<long>() < 1)
        throw bad("\"nvars\" must be a positive integer");
    if (!j["terms"].is_array())
        throw bad("\"terms\" must be an array");
    Polynomial f;
    f.nvars = j["nvars"].get<std::size_t>();
    for (std::size_t i = 0; i < j["terms"].size(); ++i) {
        const auto &t = j["terms"][i];
        std::string where = "terms[" + std::to_string(i) + "]";
        if (!t.is_object() || !t.contains("exp") || !t.contains("coef") || !t["exp"].is_array())
            throw bad(where + ": expected {\"exp\": [...], \"coef\": ...}");
        if (t["exp"].size() != f.nvars)
            throw bad(where + ": exponent length differs from nvars");
        LatticeVector e;
        for (const auto &x : t["exp"]) {
            if (!x.is_number_integer())
                throw bad(where + ": exponents must be integers");
            if (x.get<long long>() < 0)
                throw bad(where + ": negative exponent");
            e.emplace_back(std::to_string(x.get<long long>()));
        }
        Rational c;
        if (t["coef"].is_string())
            c = parse_rational(t["coef"].get<std::string>());
        else if (t["coef"].is_number_integer())
            c = Rational(Integer(std::to_string(t["coef"].get<long long>())));
        else
            throw bad(where + ": coefficient must be a string such as \"3/2\" or an integer");
        f.terms[e] += c;
    }
    for (auto it = f.terms.begin(); it != f.terms.end();)
        it = it->second == 0 ? f.terms.erase(it) : std::next(it);
    if (f.terms.empty())
        throw Error(Errc::empty_polynomial, "polynomial has no nonzero terms");
    if (f.terms.count(LatticeVector(f.nvars, 0)))
        throw Error(Errc::constant_term_present, "polynomial has a constant term; f(0) must be 0");
    return f;
}

/// Values N (order of f) and nu (coordinate sum) along a primitive vector.
struct RayData {
    LatticeVector ray;
    Integer N;
    Integer nu;
};

inline Integer newton_N(const Polynomial &f, const LatticeVector &u)
{
    Integer best = 0;
    bool first = true;
    for (const auto &[e, c] : f.terms) {
        Integer v = dot(u, e);
        if (first || v < best)
            best = v;
        first = false;
    }
    return best;
}

inline Rational newton_N(const Polynomial &f, const QVector &u)
{
    Rational best = 0;
    bool first = true;
    for (const auto &[e, c] : f.terms) {
        Rational v = dot(u, e);
        if (first || v < best)
            best = v;
        first = false;
    }
    return best;
}

inline RayData newton_data(const Polynomial &f, const LatticeVector &u)
{
    if (u.size() != f.nvars)
        throw Error(Errc::invalid_argument, "vector " + to_string(u) + " has the wrong length");
    for (const auto &x : u)
        if (x < 0)
            throw Error(Errc::negative_coordinate, "vector " + to_string(u) + " has a negative coordinate");
    if (is_zero(u))
        throw Error(Errc::invalid_argument, "zero vector");
    Integer nu = 0;
    for (const auto &x : u)
        nu += x;
    return {u, newton_N(f, u), nu};
}

/// Support points of f on a face of its Newton polyhedron.
struct NewtonFace {
    std::vector<LatticeVector> vertices; // sorted
    int dim = 0;

    friend bool operator==(const NewtonFace &, const NewtonFace &) = default;
};

inline int affine_dimension(const std::vector<LatticeVector> &pts)
{
    if (pts.empty())
        return -1;
    std::vector<LatticeVector> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i)
        diffs.push_back(pts[i] - pts[0]);
    return static_cast<int>(rank_of(diffs));
}

/// Points of the support minimizing <u, .> for every ray u of c. The zero
/// cone gives the whole support.
inline NewtonFace face_of_cone(const Polynomial &f, const Cone &c)
{
    std::vector<LatticeVector> pts = f.support();
    for (const auto &u : c.rays) {
        Integer m = newton_N(f, u);
        std::vector<LatticeVector> keep;
        for (const auto &p : pts)
            if (dot(u, p) == m)
                keep.push_back(p);
        pts = std::move(keep);
    }
    std::sort(pts.begin(), pts.end());
    return {pts, affine_dimension(pts)};
}

/// Endpoints and lattice length of a one-dimensional face.
inline std::pair<std::pair<LatticeVector, LatticeVector>, Integer> segment_data(const NewtonFace &face)
{
    // Extreme points: the support points are collinear, so the lexicographic
    // extremes are the endpoints.
    const LatticeVector &a = face.vertices.front(), &b = face.vertices.back();
    return {{a, b}, content(b - a)};
}

inline std::string opaque_key(const Cone &c, const NewtonFace &face)
{
    std::vector<LatticeVector> rays = c.rays;
    std::sort(rays.begin(), rays.end());
    std::string k = "E0-stratum|rays=";
    for (std::size_t i = 0; i < rays.size(); ++i)
        k += (i ? ";" : "") + to_string(rays[i]);
    k += "|face=";
    for (std::size_t i = 0; i < face.vertices.size(); ++i)
        k += (i ? ";" : "") + to_string(face.vertices[i]);
    return k;
}

/// Class of E0 cap O(c) for the cone c of the fan, assuming nondegeneracy.
inline MotiveClass face_stratum_class(const Polynomial &f, const Fan &fan, const ConeIdx &c)
{
    fan.require_cone(c);
    Cone k = fan.cone(c);
    NewtonFace face = face_of_cone(f, k);
    long d = static_cast<long>(fan.rank) - static_cast<long>(c.size());
    if (face.dim == 0)
        return MotiveClass();
    if (d - 1 < 0)
        throw Error(Errc::negative_dimension,
                    "cone " + fan.cone_label(c) + " is full-dimensional but its face is not a vertex");
    if (face.dim == 1) {
        Integer len = segment_data(face).second;
        return MotiveClass::torus(static_cast<unsigned>(d - 1)) * RationalFunction(Rational(len));
    }
    return MotiveClass::atom({opaque_key(k, face), static_cast<int>(d - 1)});
}

/// Segment faces: the one-variable polynomial read off along the segment
/// has no repeated root away from 0. Vertices always pass.
inline bool check_segment_nondegeneracy(const Polynomial &f, const NewtonFace &face)
{
    if (face.dim >= 2)
        throw Error(Errc::dimension_too_high, "nondegeneracy of faces of dimension >= 2 is not verified");
    if (face.dim <= 0)
        return true;
    auto [ends, len] = segment_data(face);
    LatticeVector step = ends.second - ends.first;
    for (auto &x : step)
        x /= len;
    std::vector<Rational> coeffs;
    LatticeVector p = ends.first;
    for (Integer k = 0; k <= len; ++k) {
        auto it = f.terms.find(p);
        coeffs.push_back(it == f.terms.end() ? Rational(0) : it->second);
        p = p + step;
    }
    UPoly g(coeffs);
    UPoly h = gcd(g, g.derivative());
    return h.degree() == static_cast<long>(h.valuation());
}

} // namespace dltz

#endif
