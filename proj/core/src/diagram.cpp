#include "schubkit/diagram.hpp"

#include <algorithm>
#include <stdexcept>

#include "schubkit/errors.hpp"

namespace schubkit {

Diagram::Diagram(int rows, std::vector<std::vector<int>> cols)
    : n_rows(rows), columns(std::move(cols)) {
    if (n_rows < 0) throw std::invalid_argument("diagram: negative row count");
    for (const auto& col : columns) {
        for (size_t k = 0; k < col.size(); ++k) {
            if (col[k] < 1 || col[k] > n_rows)
                throw std::invalid_argument("diagram: row index " + std::to_string(col[k]) +
                                            " outside 1.." + std::to_string(n_rows));
            if (k > 0 && col[k] <= col[k - 1])
                throw std::invalid_argument("diagram: column not strictly increasing");
        }
    }
}

long Diagram::box_count() const {
    long total = 0;
    for (const auto& col : columns) total += static_cast<long>(col.size());
    return total;
}

bool Diagram::contains(int row, int col) const {
    if (col < 1 || col > n_cols()) return false;
    const auto& c = columns[static_cast<size_t>(col) - 1];
    return std::binary_search(c.begin(), c.end(), row);
}

std::vector<std::pair<int, int>> Diagram::boxes() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j <= n_cols(); ++j)
        for (int i : columns[static_cast<size_t>(j) - 1]) out.emplace_back(i, j);
    return out;
}

Diagram diagram_from_boxes(int n_rows, int n_cols,
                           const std::vector<std::pair<int, int>>& boxes) {
    std::vector<std::vector<int>> cols(static_cast<size_t>(n_cols));
    for (auto [i, j] : boxes) {
        if (j < 1 || j > n_cols)
            throw std::invalid_argument("diagram: column index " + std::to_string(j) +
                                        " outside 1.." + std::to_string(n_cols));
        cols[static_cast<size_t>(j) - 1].push_back(i);
    }
    for (auto& col : cols) {
        std::sort(col.begin(), col.end());
        col.erase(std::unique(col.begin(), col.end()), col.end());
    }
    return Diagram(n_rows, std::move(cols));
}

Diagram rothe(const Permutation& w) {
    const int n = w.size();
    const Permutation winv = inverse(w);
    std::vector<std::vector<int>> cols(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i < winv(j); ++i)
            if (j < w(i)) cols[static_cast<size_t>(j) - 1].push_back(i);
    return Diagram(n, std::move(cols));
}

Diagram upward_closure(const Diagram& d) {
    std::vector<std::vector<int>> cols(d.columns.size());
    for (size_t j = 0; j < d.columns.size(); ++j) {
        if (d.columns[j].empty()) continue;
        const int lowest = d.columns[j].back();
        cols[j].resize(static_cast<size_t>(lowest));
        for (int i = 1; i <= lowest; ++i) cols[j][static_cast<size_t>(i) - 1] = i;
    }
    return Diagram(d.n_rows, std::move(cols));
}

WeightVector weight(const Diagram& d) {
    WeightVector wt(static_cast<size_t>(d.n_rows), 0);
    for (const auto& col : d.columns)
        for (int i : col) ++wt[static_cast<size_t>(i) - 1];
    return wt;
}

bool set_dominated(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

bool diagram_dominated(const Diagram& c, const Diagram& d) {
    if (c.n_cols() != d.n_cols()) return false;
    for (size_t j = 0; j < c.columns.size(); ++j)
        if (!set_dominated(c.columns[j], d.columns[j])) return false;
    return true;
}

namespace {

void enumerate_dominated_rec(const std::vector<int>& col, size_t k, int min_value,
                             std::vector<int>& partial,
                             const std::function<void(const std::vector<int>&)>& visit) {
    if (k == col.size()) {
        visit(partial);
        return;
    }
    for (int v = min_value; v <= col[k]; ++v) {
        partial.push_back(v);
        enumerate_dominated_rec(col, k + 1, v + 1, partial, visit);
        partial.pop_back();
    }
}

} // namespace

void for_each_dominated_column(const std::vector<int>& col, int n_rows,
                               const std::function<void(const std::vector<int>&)>& visit) {
    for (int v : col)
        if (v < 1 || v > n_rows)
            throw std::invalid_argument("dominated column: row index outside grid");
    std::vector<int> partial;
    partial.reserve(col.size());
    enumerate_dominated_rec(col, 0, 1, partial, visit);
}

std::vector<std::vector<int>> enumerate_dominated_column(const std::vector<int>& col,
                                                         int n_rows) {
    std::vector<std::vector<int>> out;
    for_each_dominated_column(col, n_rows,
                              [&out](const std::vector<int>& s) { out.push_back(s); });
    return out;
}

Diagram intersect(const Diagram& a, const Diagram& b) {
    if (a.n_rows != b.n_rows || a.n_cols() != b.n_cols())
        throw std::invalid_argument("intersect: diagrams on different grids");
    std::vector<std::vector<int>> cols(a.columns.size());
    for (size_t j = 0; j < a.columns.size(); ++j)
        std::set_intersection(a.columns[j].begin(), a.columns[j].end(),
                              b.columns[j].begin(), b.columns[j].end(),
                              std::back_inserter(cols[j]));
    return Diagram(a.n_rows, std::move(cols));
}

namespace {

// Last block size b of w = layered((1,...,1,b)), or 0 if w is not of that
// shape.
int last_block_size(const Permutation& w) {
    const int n = w.size();
    const int b = n - w(n) + 1;
    if (b < 1 || b > n) return 0;
    for (int i = 1; i <= n - b; ++i)
        if (w(i) != i) return 0;
    for (int k = 1; k <= b; ++k)
        if (w(n - b + k) != n + 1 - k) return 0;
    return b;
}

} // namespace

Diagram last_block_witness(const Permutation& w, const Diagram& s) {
    const int n = w.size();
    const int b = last_block_size(w);
    if (b == 0)
        throw hypothesis_error("last_block_witness: w is not layered((1,...,1,b))");
    if (2 * b > n)
        throw hypothesis_error("last_block_witness: last block " + std::to_string(b) +
                               " exceeds n/2");
    const Diagram d = rothe(w);
    if (s.n_rows != d.n_rows || s.n_cols() != d.n_cols())
        throw std::invalid_argument("last_block_witness: S on a different grid");
    std::vector<std::vector<int>> cols(static_cast<size_t>(n));
    for (size_t j = 0; j < d.columns.size(); ++j) {
        const auto& dj = d.columns[j];
        const auto& sj = s.columns[j];
        if (!std::includes(dj.begin(), dj.end(), sj.begin(), sj.end()))
            throw std::invalid_argument("last_block_witness: S is not a subset of D(w)");
        // Kept boxes stay; each dropped box becomes the smallest unused row in
        // 1..n-b of this column. D(w) lives in rows n-b+1..n and has columns of
        // size <= b-1 < n-b, so rows 1..dropped are always free.
        std::vector<int> cj(sj);
        for (int r = 1; cj.size() < dj.size(); ++r) cj.push_back(r);
        std::sort(cj.begin(), cj.end());
        cols[j] = std::move(cj);
    }
    return Diagram(n, std::move(cols));
}

std::string ascii_grid(const Diagram& d) {
    std::string out;
    for (int i = 1; i <= d.n_rows; ++i) {
        for (int j = 1; j <= d.n_cols(); ++j) {
            out += d.contains(i, j) ? '#' : '.';
            if (j < d.n_cols()) out += ' ';
        }
        out += '\n';
    }
    return out;
}

} // namespace schubkit
