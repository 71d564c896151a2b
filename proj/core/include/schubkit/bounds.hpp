#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "schubkit/perm.hpp"

namespace schubkit {

// Outcome of checking one inequality of the form lhs >= rhs, with both sides
// computed exactly.  `subject` identifies the instance, `detail` spells out
// the two sides in human-readable form.
struct BoundReport {
    std::string subject;
    mpz_class lhs;
    mpz_class rhs;
    bool holds = false;
    std::string detail;
};

// One row of a maximal-support sweep: the largest support size over S_n,
// every permutation attaining it (in lexicographic order), and the
// normalized gap (ln beta - n ln n) / n as a decimal string.
struct SweepRow {
    int n = 0;
    mpz_class beta;
    std::vector<Permutation> maximizers;
    std::string normalized_gap;
};

enum class PolyKind { Schubert, Grothendieck };

struct SweepOptions {
    int jobs = 1;           // worker threads; results are independent of this
    bool cross_check = false;  // also compute each size the slow way and compare
    int budget = 0;         // max n allowed; 0 picks the default for the kind
};

// Default sweep ceilings; an exhaustive pass over S_n beyond these takes
// long enough that callers must opt in through SweepOptions::budget.
inline constexpr int kSchubertSweepBudget = 7;
inline constexpr int kGrothSweepBudget = 6;

mpz_class factorial(unsigned long n);

// Exhaustive checks of |supp| inequalities for layered permutations.
//
// For w layered with blocks (b_1,...,b_m) and w' the layered permutation on
// the first m-1 blocks, checks  |supp(S_w)| >= b_m! * |supp(S_{w'})|.
// Requires 2*b_m <= total; throws hypothesis_error otherwise.
BoundReport verify_block_inequality(const LayeredSpec& spec);

// The explicit layered family with near-maximal Schubert support: blocks
// (1 x d, floor(n/2^c), ..., floor(n/2)) where c is the largest k with
// floor(n/2^k) >= 1 and d makes the sizes sum to n.  Requires n >= 3.
// Second component is the product-of-factorials lower bound for its support.
std::pair<LayeredSpec, mpz_class> corollary_construction(int n);
mpz_class corollary_product_bound(int n);
BoundReport corollary_report(int n);

// The layered family with large Grothendieck support: blocks (1,2,...,k,b)
// where C(k+1,2) <= n < C(k+2,2) and b = n - C(k+1,2), omitting b if zero.
// Requires n >= 1.
LayeredSpec groth_construction(int n);
BoundReport groth_report(int n);

// For fireworks w with Lehmer code c and closure weight d, the box-product
// lower bound prod_i (d_i - c_i + 1) on |supp(G_w)|, and the report checking
// it against the true size.
mpz_class crude_groth_rhs(const Permutation& w);
BoundReport crude_groth_lower(const Permutation& w);

// Certified Stirling-type facts, decided with interval arithmetic in
// directed-rounding MPFR at increasing precision until the comparison
// separates (which it must: the quantities compared are never equal).
//
//   e (n/e)^n <= n! <= e ((n+1)/e)^(n+1)      for n >= 1
bool factorial_bounds_check(long n);
//   floor(k)! >= (1/(2k)) (k/e)^k             for rational k > 1
bool floor_fact_bound_check(const mpq_class& k);

// All compositions of n (ordered tuples of positive parts), in lexicographic
// order.  2^(n-1) of them; used to sweep every layered shape in S_n.
void for_each_composition(int n, const std::function<void(const std::vector<int>&)>& visit);

// beta(n) = max |supp| over S_n for the chosen family, for n = 1..n_max.
// Exhaustive and exact; throws budget_error past the kind's budget
// (default 7 for Schubert, 6 for Grothendieck) unless opts.budget raises it.
std::vector<SweepRow> beta_sweep(int n_max, PolyKind kind, const SweepOptions& opts = {});

// Decimal strings (12 places, round-to-nearest at 128-bit precision) for the
// asymptotic comparison columns.
std::string decimal_ln(const mpz_class& v);      // ln v, v >= 1
std::string decimal_ln_factorial(int n);         // ln(n!)
// The analytic lower bound (n - ln n/ln 2 - 2) ln n - n ln 4 - (n - 2)
// for ln beta(n); meaningful for n >= 3.
std::string corollary_analytic_bound(int n);

}  // namespace schubkit
