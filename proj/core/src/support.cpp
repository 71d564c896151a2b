#include "schubkit/support.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "schubkit/errors.hpp"

namespace schubkit {

SupportSet support(const SparsePoly& f) {
    SupportSet s;
    s.n_vars = f.n_vars();
    for (const auto& [e, c] : f.terms()) s.points.insert(e);
    return s;
}

mpz_class support_size(const SupportSet& s) {
    return mpz_class(static_cast<unsigned long>(s.points.size()));
}

namespace {

// The DP packs a weight vector into 4-bit fields of a uint64. Every entry is
// bounded by the number of nonempty columns, so the packing is lossless while
// n_rows <= 16 and at most 15 columns are nonempty.
constexpr int kMaxPackedRows = 16;
constexpr int kMaxNonemptyCols = 15;

ExponentVector unpack_weight(uint64_t v, int n) {
    ExponentVector w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = static_cast<int>((v >> (4 * i)) & 0xF);
    return w;
}

} // namespace

SupportSet weights_dominated_by(const Diagram& d) {
    const int n = d.n_rows;
    int nonempty = 0;
    for (const auto& col : d.columns)
        if (!col.empty()) ++nonempty;
    if (n > kMaxPackedRows || nonempty > kMaxNonemptyCols)
        throw budget_error("support enumeration: grid exceeds " +
                           std::to_string(kMaxPackedRows) + " rows / " +
                           std::to_string(kMaxNonemptyCols) + " nonempty columns");

    std::unordered_set<uint64_t> cur{0};
    std::vector<uint64_t> incs;
    for (const auto& col : d.columns) {
        if (col.empty()) continue;
        incs.clear();
        for_each_dominated_column(col, n, [&incs](const std::vector<int>& s) {
            uint64_t inc = 0;
            for (int row : s) inc += uint64_t{1} << (4 * (row - 1));
            incs.push_back(inc);
        });
        std::unordered_set<uint64_t> next;
        next.reserve(cur.size() * incs.size());
        for (uint64_t v : cur)
            for (uint64_t inc : incs) next.insert(v + inc);
        cur = std::move(next);
    }

    SupportSet out;
    out.n_vars = n;
    for (uint64_t v : cur) out.points.insert(unpack_weight(v, n));
    return out;
}

SupportSet schubert_support_via_diagrams(const Permutation& w) {
    return weights_dominated_by(rothe(w));
}

namespace {

bool dominates_some(const ExponentVector& g, const std::vector<ExponentVector>& mins) {
    for (const auto& m : mins) {
        bool ok = true;
        for (size_t k = 0; k < g.size(); ++k)
            if (m[k] > g[k]) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

// Visits every integer vector 0 <= v <= hi in lexicographic order.
template <typename Fn>
void for_each_below(const WeightVector& hi, Fn&& visit) {
    ExponentVector v(hi.size(), 0);
    for (;;) {
        visit(v);
        if (v.empty()) return;
        size_t k = v.size();
        while (k > 0) {
            --k;
            if (v[k] < hi[k]) {
                ++v[k];
                std::fill(v.begin() + static_cast<long>(k) + 1, v.end(), 0);
                break;
            }
            if (k == 0) return;
        }
    }
}

} // namespace

SupportSet grothendieck_support_fireworks(const Permutation& w) {
    if (!is_fireworks(w))
        throw std::invalid_argument("grothendieck support: " + to_string(w) +
                                    " is not a fireworks permutation");
    const WeightVector d = weight(upward_closure(rothe(w)));
    const SupportSet schub = schubert_support_via_diagrams(w);
    const std::vector<ExponentVector> mins = minimal_elements(schub);
    SupportSet out;
    out.n_vars = schub.n_vars;
    for_each_below(d, [&](const ExponentVector& g) {
        if (dominates_some(g, mins)) out.points.insert(g);
    });
    return out;
}

std::vector<ExponentVector> minimal_elements(const SupportSet& s) {
    std::vector<ExponentVector> mins;
    for (const auto& p : s.points) {
        bool minimal = true;
        for (const auto& q : s.points) {
            if (&q == &p) continue;
            bool q_below = true;
            for (size_t k = 0; k < p.size(); ++k)
                if (q[k] > p[k]) {
                    q_below = false;
                    break;
                }
            if (q_below) {
                minimal = false;
                break;
            }
        }
        if (minimal) mins.push_back(p);
    }
    return mins;
}

namespace {

// Phase-I simplex with Bland's rule over exact rationals. Decides whether
// {lambda >= 0 : M lambda = b} is nonempty, where column j of M is verts[j]
// extended by a final 1 (the convexity row).
bool convex_combination_exists(const ExponentVector& z,
                               const std::vector<ExponentVector>& verts) {
    const size_t rows = z.size() + 1;
    const size_t m = verts.size();
    const size_t total = m + rows; // real columns then one artificial per row

    // tab[r] = coefficients row r, then rhs at index `total`.
    std::vector<std::vector<mpq_class>> tab(rows, std::vector<mpq_class>(total + 1, 0));
    for (size_t r = 0; r < rows; ++r) {
        for (size_t j = 0; j < m; ++j)
            tab[r][j] = (r < z.size()) ? mpq_class(verts[j][r]) : mpq_class(1);
        tab[r][total] = (r < z.size()) ? mpq_class(z[r]) : mpq_class(1);
        if (tab[r][total] < 0)
            for (auto& x : tab[r]) x = -x;
        tab[r][m + r] = 1;
    }

    // Reduced-cost row for minimizing the artificial sum: rc_j = -sum_r tab[r][j]
    // on real columns, 0 on artificials; obj holds -(current artificial sum).
    std::vector<mpq_class> rc(total, 0);
    mpq_class obj = 0;
    for (size_t j = 0; j < m; ++j)
        for (size_t r = 0; r < rows; ++r) rc[j] -= tab[r][j];
    for (size_t r = 0; r < rows; ++r) obj -= tab[r][total];

    std::vector<size_t> basis(rows);
    for (size_t r = 0; r < rows; ++r) basis[r] = m + r;

    for (;;) {
        size_t enter = total;
        for (size_t j = 0; j < total; ++j)
            if (rc[j] < 0) {
                enter = j;
                break;
            }
        if (enter == total) break;

        size_t leave = rows;
        mpq_class best_ratio;
        for (size_t r = 0; r < rows; ++r) {
            if (tab[r][enter] <= 0) continue;
            mpq_class ratio = tab[r][total] / tab[r][enter];
            if (leave == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == rows) break; // unbounded below cannot happen for phase I

        const mpq_class pivot = tab[leave][enter];
        for (auto& x : tab[leave]) x /= pivot;
        for (size_t r = 0; r < rows; ++r) {
            if (r == leave || tab[r][enter] == 0) continue;
            const mpq_class factor = tab[r][enter];
            for (size_t j = 0; j <= total; ++j) tab[r][j] -= factor * tab[leave][j];
        }
        const mpq_class rc_factor = rc[enter];
        if (rc_factor != 0) {
            for (size_t j = 0; j < total; ++j) rc[j] -= rc_factor * tab[leave][j];
            obj -= rc_factor * tab[leave][total];
        }
        basis[leave] = enter;
    }
    return obj == 0;
}

} // namespace

bool in_rational_hull(const ExponentVector& z, const std::vector<ExponentVector>& verts) {
    if (verts.empty()) return false;
    for (const auto& v : verts)
        if (v.size() != z.size())
            throw std::invalid_argument("hull membership: dimension mismatch");
    return convex_combination_exists(z, verts);
}

SupportSet schubitope_lattice_points(const Diagram& d, long max_points) {
    const SupportSet vertices = weights_dominated_by(d);
    const std::vector<ExponentVector> verts(vertices.points.begin(), vertices.points.end());
    const size_t n = verts.front().size();

    WeightVector lo(n), hi(n);
    for (size_t k = 0; k < n; ++k) {
        lo[k] = hi[k] = verts.front()[k];
        for (const auto& v : verts) {
            lo[k] = std::min(lo[k], v[k]);
            hi[k] = std::max(hi[k], v[k]);
        }
    }
    long box_points = 1;
    for (size_t k = 0; k < n; ++k) {
        box_points *= hi[k] - lo[k] + 1;
        if (box_points > max_points)
            throw budget_error("schubitope: bounding region exceeds " +
                               std::to_string(max_points) + " points");
    }

    // Every vertex has coordinate sum |D|, so the hull lies in that hyperplane.
    const long box_total = d.box_count();

    WeightVector span(n);
    for (size_t k = 0; k < n; ++k) span[k] = hi[k] - lo[k];

    SupportSet out;
    out.n_vars = vertices.n_vars;
    ExponentVector z(n);
    for_each_below(span, [&](const ExponentVector& offset) {
        for (size_t k = 0; k < n; ++k) z[k] = lo[k] + offset[k];
        if (std::accumulate(z.begin(), z.end(), 0L) != box_total) return;
        if (vertices.contains(z) || in_rational_hull(z, verts)) out.points.insert(z);
    });
    return out;
}

bool saturation_check(const Diagram& d, long max_points) {
    return schubitope_lattice_points(d, max_points) == weights_dominated_by(d);
}

} // namespace schubkit
