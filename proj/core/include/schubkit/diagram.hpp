#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "schubkit/perm.hpp"

namespace schubkit {

/// A finite box set in an [n_rows] x [columns.size()] grid, stored
/// column-major: columns[j-1] holds the sorted row indices of column j.
struct Diagram {
    int n_rows = 0;
    std::vector<std::vector<int>> columns;

    Diagram() = default;
    /// Validates that every row index lies in 1..n_rows and each column is
    /// strictly increasing.
    Diagram(int n_rows, std::vector<std::vector<int>> columns);

    int n_cols() const { return static_cast<int>(columns.size()); }
    long box_count() const;
    bool contains(int row, int col) const;
    /// Boxes as (row, col) pairs in column-major order.
    std::vector<std::pair<int, int>> boxes() const;

    bool operator==(const Diagram&) const = default;
};

/// Builds a diagram in an n_rows x n_cols grid from a list of (row, col) boxes.
Diagram diagram_from_boxes(int n_rows, int n_cols,
                           const std::vector<std::pair<int, int>>& boxes);

/// The Rothe diagram {(i,j) : i < w^-1(j), j < w(i)} in an n x n grid.
Diagram rothe(const Permutation& w);

/// Fills every nonempty column upward to row 1: column j becomes
/// {1, ..., max(D_j)}.
Diagram upward_closure(const Diagram& d);

/// Per-row box counts, length n_rows.
WeightVector weight(const Diagram& d);

/// Dominance on equal-size sorted sets: a_i <= b_i elementwise. Sets of
/// different sizes are incomparable (returns false).
bool set_dominated(const std::vector<int>& a, const std::vector<int>& b);

/// Columnwise dominance; diagrams must have the same number of columns.
bool diagram_dominated(const Diagram& c, const Diagram& d);

/// All sets S with S <= col of size |col| inside 1..n_rows, in lexicographic
/// order.
std::vector<std::vector<int>> enumerate_dominated_column(const std::vector<int>& col,
                                                         int n_rows);

/// Streaming form of enumerate_dominated_column; visits each dominated set in
/// lexicographic order without materializing the list.
void for_each_dominated_column(const std::vector<int>& col, int n_rows,
                               const std::function<void(const std::vector<int>&)>& visit);

/// Boxwise intersection of two diagrams on the same grid.
Diagram intersect(const Diagram& a, const Diagram& b);

/// For w = layered((1,...,1,b)) with 2b <= n and S a subset of rothe(w),
/// returns a diagram C with C <= rothe(w) and C intersecting rothe(w) exactly
/// in S. Deterministic: kept boxes stay put, dropped boxes move to the
/// smallest free rows in 1..n-b of the same column.
Diagram last_block_witness(const Permutation& w, const Diagram& s);

/// ASCII grid with row 1 at top; boxes drawn as '#', empty cells as '.'.
std::string ascii_grid(const Diagram& d);

} // namespace schubkit
