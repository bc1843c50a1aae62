#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "isograph.hpp"
#include "numeric.hpp"

namespace orbikit {

using IntMatrix = std::vector<std::vector<Integer>>;

inline IntMatrix identity_matrix(std::size_t n)
{
    IntMatrix m(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    if (a.empty() || b.empty()) return IntMatrix(a.size(), std::vector<Integer>(b.empty() ? 0 : b[0].size()));
    IntMatrix c(a.size(), std::vector<Integer>(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

struct SmithForm {
    std::vector<Integer> diagonal;  // min(rows, cols) entries, d_i | d_(i+1), zeros last
    IntMatrix U, V;                 // U * m * V = diag
};

// Smith normal form by row/column reduction with minimal-|pivot| selection.
inline SmithForm smith_normal_form(IntMatrix m)
{
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    SmithForm out{{}, identity_matrix(rows), identity_matrix(cols)};
    auto& U = out.U;
    auto& V = out.V;

    auto row_addmul = [&](std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t j = 0; j < cols; ++j) m[dst][j] += f * m[src][j];
        for (std::size_t j = 0; j < rows; ++j) U[dst][j] += f * U[src][j];
    };
    auto col_addmul = [&](std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t i = 0; i < rows; ++i) m[i][dst] += f * m[i][src];
        for (std::size_t i = 0; i < cols; ++i) V[i][dst] += f * V[i][src];
    };
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        std::swap(m[a], m[b]);
        std::swap(U[a], U[b]);
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (auto& r : m) std::swap(r[a], r[b]);
        for (auto& r : V) std::swap(r[a], r[b]);
    };

    const std::size_t k = std::min(rows, cols);
    for (std::size_t t = 0; t < k; ++t) {
        for (;;) {
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) break;
            swap_rows(t, pr);
            swap_cols(t, pc);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                row_addmul(i, t, -(m[i][t] / m[t][t]));
                if (m[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                col_addmul(j, t, -(m[t][j] / m[t][t]));
                if (m[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            row_addmul(t, bad, 1);
        }
        if (m[t][t] < 0) {
            for (auto& x : m[t]) x = -x;
            for (auto& x : U[t]) x = -x;
        }
    }
    for (std::size_t t = 0; t < k; ++t) out.diagonal.push_back(m[t][t]);
    return out;
}

struct AbelianGroup {
    std::vector<Integer> factors;  // each >= 2, or 0 for a free summand; torsion first, ascending

    static AbelianGroup from_diagonal(const std::vector<Integer>& diag, std::size_t generators)
    {
        AbelianGroup g;
        std::vector<Integer> free;
        for (const auto& d : diag) {
            if (d == 0) free.push_back(0);
            else if (d != 1) g.factors.push_back(d);
        }
        for (std::size_t i = diag.size(); i < generators; ++i) free.push_back(0);
        std::sort(g.factors.begin(), g.factors.end());
        g.factors.insert(g.factors.end(), free.begin(), free.end());
        return g;
    }

    bool is_trivial() const { return factors.empty(); }

    std::size_t free_rank() const { return static_cast<std::size_t>(std::count(factors.begin(), factors.end(), Integer(0))); }

    // Order of the group, or 0 when infinite.
    Integer order() const
    {
        Integer n = 1;
        for (const auto& f : factors) n *= f;
        return n;
    }

    // Exponent of the torsion part.
    Integer exponent() const
    {
        Integer e = 1;
        for (const auto& f : factors)
            if (f != 0) e = e / gcd(e, f) * f;
        return e;
    }

    std::string to_string() const
    {
        if (factors.empty()) return "trivial";
        std::string s;
        std::size_t rank = 0;
        for (const auto& f : factors) {
            if (f == 0) {
                ++rank;
                continue;
            }
            s += (s.empty() ? "" : " x ") + std::string("Z/") + f.str();
        }
        if (rank) s += (s.empty() ? "" : " x ") + std::string("Z") + (rank > 1 ? "^" + std::to_string(rank) : "");
        return s;
    }

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

inline AbelianGroup quotient_group(const IntMatrix& relations, std::size_t generators)
{
    if (relations.empty() || relations[0].empty()) return AbelianGroup::from_diagonal({}, generators);
    return AbelianGroup::from_diagonal(smith_normal_form(relations).diagonal, generators);
}

// Relation matrix with one row per edge and one column per relation. Edge [u, v, w] is oriented
// from u to v; each endpoint contributes the meridian with outward orientation, so a loop cancels.
inline IntMatrix relation_matrix(const IsotropyGraph& g, bool kill_cusp_edges = false)
{
    const std::size_t n = g.edges.size();
    std::vector<std::vector<Integer>> cols;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Integer> c(n);
        c[i] = g.edges[i].weight;
        cols.push_back(std::move(c));
    }
    auto star = [&](int endpoint) {
        std::vector<Integer> c(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (g.edges[i].u == endpoint) c[i] += 1;
            if (g.edges[i].v == endpoint) c[i] -= 1;
        }
        return c;
    };
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) cols.push_back(star(v));
    if (g.cusp_type != CuspType::Torus) cols.push_back(star(cusp));
    if (kill_cusp_edges)
        for (std::size_t i = 0; i < n; ++i)
            if (g.edges[i].touches_cusp()) {
                std::vector<Integer> c(n);
                c[i] = 1;
                cols.push_back(std::move(c));
            }
    IntMatrix m(n, std::vector<Integer>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m[i][j] = cols[j][i];
    return m;
}

inline AbelianGroup abelianization(const IsotropyGraph& g)
{
    auto violations = validate(g);
    if (!violations.empty()) throw InvalidGraph(violations.front().location + ": " + violations.front().message);
    return quotient_group(relation_matrix(g), g.edges.size());
}

// Abelianization after setting every cusp-incident generator to 1.
inline AbelianGroup killed_abelianization(const IsotropyGraph& g)
{
    auto violations = validate(g);
    if (!violations.empty()) throw InvalidGraph(violations.front().location + ": " + violations.front().message);
    return quotient_group(relation_matrix(g, true), g.edges.size());
}

// Abelianized peripheral group: cone-point generators of their orders with vanishing sum.
inline AbelianGroup peripheral_abelianization(CuspType t)
{
    if (t == CuspType::Torus) return AbelianGroup::from_diagonal({}, 2);
    auto orders = cone_orders(t);
    const std::size_t n = orders.size();
    IntMatrix m(n, std::vector<Integer>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = orders[i];
        m[i][n] = 1;
    }
    return quotient_group(m, n);
}

}  // namespace orbikit
