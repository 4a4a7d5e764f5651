#ifndef DLTZETA_LINALG_HPP
#define DLTZETA_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace dltz {

using LatticeVector = std::vector<Integer>;
using QVector = std::vector<Rational>;

inline LatticeVector lv(std::initializer_list<long> xs)
{
    LatticeVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

inline Integer content(const LatticeVector &v)
{
    Integer g = 0;
    for (const auto &x : v)
        g = igcd(g, x);
    return g;
}

inline bool is_primitive(const LatticeVector &v) { return content(v) == 1; }

inline LatticeVector primitive(LatticeVector v)
{
    Integer g = content(v);
    if (g == 0)
        throw Error(Errc::invalid_argument, "zero vector has no primitive form");
    for (auto &x : v)
        x /= g;
    return v;
}

inline bool is_zero(const LatticeVector &v)
{
    return std::all_of(v.begin(), v.end(), [](const Integer &x) { return x == 0; });
}

inline Integer dot(const LatticeVector &a, const LatticeVector &b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline Rational dot(const QVector &a, const LatticeVector &b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline LatticeVector operator+(LatticeVector a, const LatticeVector &b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

inline LatticeVector operator-(LatticeVector a, const LatticeVector &b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

inline LatticeVector operator*(const Integer &k, LatticeVector a)
{
    for (auto &x : a)
        x *= k;
    return a;
}

inline std::string to_string(const LatticeVector &v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

/// Rank of the rows.
inline std::size_t rank_of(const std::vector<LatticeVector> &rows)
{
    if (rows.empty())
        return 0;
    std::vector<QVector> m;
    for (const auto &r : rows)
        m.emplace_back(r.begin(), r.end());
    std::size_t n = m[0].size(), rank = 0;
    for (std::size_t c = 0; c < n && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0)
                continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < n; ++k)
                m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Determinant of a square integer matrix given by rows.
inline Integer determinant(std::vector<LatticeVector> rows)
{
    std::size_t n = rows.size();
    if (n == 0)
        return 1;
    // Fraction-free (Bareiss) elimination.
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (rows[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && rows[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(rows[p], rows[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                rows[i][j] = rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j];
                mpz_divexact(rows[i][j].get_mpz_t(), rows[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = rows[k][k];
    }
    return sign * rows[n - 1][n - 1];
}

/// Coefficients x with sum_i x_i * cols[i] = v, if v lies in the span of the
/// linearly independent vectors cols.
inline std::optional<QVector> solve_in_span(const std::vector<LatticeVector> &cols, const LatticeVector &v)
{
    std::size_t k = cols.size(), n = v.size();
    // Augmented n x (k+1) system.
    std::vector<QVector> m(n, QVector(k + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < k; ++c)
            m[r][c] = cols[c][r];
        m[r][k] = v[r];
    }
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = row;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            throw Error(Errc::degenerate_cone, "rays are linearly dependent");
        std::swap(m[p], m[row]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || m[r][c] == 0)
                continue;
            Rational f = m[r][c] / m[row][c];
            for (std::size_t j = c; j <= k; ++j)
                m[r][j] -= f * m[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    for (std::size_t r = row; r < n; ++r)
        if (m[r][k] != 0)
            return std::nullopt;
    QVector x(k);
    for (std::size_t i = 0; i < k; ++i)
        x[i] = m[i][k] / m[i][pivots[i]];
    return x;
}

/// Solution m of <rows[i], m> = rhs[i] for a square nonsingular system.
inline QVector solve_rows(const std::vector<LatticeVector> &rows, const QVector &rhs)
{
    std::size_t n = rows.size();
    std::vector<QVector> m(n, QVector(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        if (rows[r].size() != n)
            throw Error(Errc::singular_system, "system is not square");
        for (std::size_t c = 0; c < n; ++c)
            m[r][c] = rows[r][c];
        m[r][n] = rhs[r];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            throw Error(Errc::singular_system, "singular linear system");
        std::swap(m[p], m[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0)
                continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k <= n; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    QVector x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = m[i][n] / m[i][i];
    return x;
}

/// Primitive generator of the kernel of an (n-1) x n integer matrix of full
/// rank, or nullopt when the kernel is not a line.
inline std::optional<LatticeVector> kernel_line(const std::vector<LatticeVector> &rows, std::size_t n)
{
    if (rows.size() + 1 != n || rank_of(rows) + 1 != n)
        return std::nullopt;
    // Generalized cross product: signed maximal minors.
    LatticeVector v(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<LatticeVector> minor;
        for (const auto &r : rows) {
            LatticeVector m;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j)
                    m.push_back(r[c]);
            minor.push_back(std::move(m));
        }
        Integer d = determinant(minor);
        v[j] = (j % 2 == 0) ? d : Integer(-d);
    }
    return primitive(v);
}

/// Column-style Hermite reduction: a unimodular n x n matrix C (as rows) with
/// rows * C = [H | 0] for the k x n integer matrix rows of rank k.
inline std::vector<LatticeVector> column_reduce(const std::vector<LatticeVector> &rows, std::size_t n)
{
    std::vector<LatticeVector> a = rows;
    std::vector<LatticeVector> c(n, LatticeVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        c[i][i] = 1;
    auto col_op = [&](std::size_t dst, std::size_t src, const Integer &q) {
        // column dst -= q * column src
        for (auto &r : a)
            r[dst] -= q * r[src];
        for (auto &r : c)
            r[dst] -= q * r[src];
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        for (auto &r : a)
            std::swap(r[x], r[y]);
        for (auto &r : c)
            std::swap(r[x], r[y]);
    };
    std::size_t pc = 0;
    for (std::size_t r = 0; r < a.size() && pc < n; ++r) {
        for (;;) {
            // Smallest nonzero absolute entry among columns pc.. moves to pc.
            std::size_t best = n;
            for (std::size_t j = pc; j < n; ++j)
                if (a[r][j] != 0 && (best == n || abs(a[r][j]) < abs(a[r][best])))
                    best = j;
            if (best == n)
                break;
            if (best != pc)
                col_swap(best, pc);
            bool done = true;
            for (std::size_t j = pc + 1; j < n; ++j) {
                if (a[r][j] == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[r][j].get_mpz_t(), a[r][pc].get_mpz_t());
                col_op(j, pc, q);
                if (a[r][j] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (a[r][pc] != 0)
            ++pc;
    }
    return c;
}

} // namespace dltz

#endif
