#pragma once

#include <gmpxx.h>

#include <set>
#include <vector>

#include "schubkit/diagram.hpp"
#include "schubkit/perm.hpp"
#include "schubkit/poly.hpp"

namespace schubkit {

/// Deduplicated set of exponent vectors, ordered lexicographically.
struct SupportSet {
    int n_vars = 0;
    std::set<ExponentVector> points;

    bool contains(const ExponentVector& p) const { return points.count(p) > 0; }
    bool operator==(const SupportSet&) const = default;
};

/// The exponent-vector key set of f.
SupportSet support(const SparsePoly& f);

mpz_class support_size(const SupportSet& s);

/// {wt(C) : C <= D}, computed by a column-by-column dynamic program over
/// partial weight vectors, deduplicating after every column. Columns stream
/// their dominated sets; only the weight set is ever resident.
SupportSet weights_dominated_by(const Diagram& d);

/// Support of the Schubert polynomial of w without expanding it:
/// weights_dominated_by(rothe(w)).
SupportSet schubert_support_via_diagrams(const Permutation& w);

/// Support of the Grothendieck polynomial of a fireworks permutation: with
/// d = wt(upward_closure(rothe(w))), the points of [0, d] that dominate some
/// Schubert support point. Throws if w is not fireworks.
SupportSet grothendieck_support_fireworks(const Permutation& w);

/// Minimal elements of the componentwise order on s.points.
std::vector<ExponentVector> minimal_elements(const SupportSet& s);

/// Exact membership of z in the convex hull of verts, decided by rational
/// phase-I simplex. No floating point is involved.
bool in_rational_hull(const ExponentVector& z, const std::vector<ExponentVector>& verts);

inline constexpr long kDefaultSchubitopeBudget = 200000;

/// All integer points of conv({wt(C) : C <= D}), found by enumerating the
/// bounding box of the vertex set and testing hull membership exactly.
/// Throws budget_error when the bounding box exceeds max_points.
SupportSet schubitope_lattice_points(const Diagram& d,
                                     long max_points = kDefaultSchubitopeBudget);

/// Whether the integer points of the Schubitope of D are exactly the raw
/// weight set {wt(C) : C <= D}.
bool saturation_check(const Diagram& d, long max_points = kDefaultSchubitopeBudget);

} // namespace schubkit
