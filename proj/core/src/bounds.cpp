#include "schubkit/bounds.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <mpfr.h>

#include "schubkit/diagram.hpp"
#include "schubkit/errors.hpp"
#include "schubkit/poly.hpp"
#include "schubkit/support.hpp"

namespace schubkit {

namespace {

// Precision ceiling for the certified comparisons below.  They only refine
// while the enclosure straddles the other side, which cannot persist (the
// compared quantities are provably unequal), so hitting the ceiling means a
// logic error rather than a hard instance.
constexpr mpfr_prec_t kMaxCertifiedPrec = mpfr_prec_t{1} << 16;

// Sign of e^k - q, decided rigorously: [lo, hi] brackets e^k via directed
// rounding, and precision doubles until q falls outside.  e^k is irrational
// for k >= 1, and exactly 1 for k = 0, so the loop terminates.
int certified_cmp_exp(unsigned long k, const mpq_class& q) {
    for (mpfr_prec_t prec = 128; prec <= kMaxCertifiedPrec; prec *= 2) {
        mpfr_t lo, hi;
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
        mpfr_set_ui(lo, k, MPFR_RNDD);
        mpfr_exp(lo, lo, MPFR_RNDD);
        mpfr_set_ui(hi, k, MPFR_RNDU);
        mpfr_exp(hi, hi, MPFR_RNDU);
        const int cl = mpfr_cmp_q(lo, q.get_mpq_t());
        const int ch = mpfr_cmp_q(hi, q.get_mpq_t());
        mpfr_clear(lo);
        mpfr_clear(hi);
        if (cl > 0) return 1;   // q < lo <= e^k
        if (ch < 0) return -1;  // e^k <= hi < q
        if (cl == 0 && ch == 0) return 0;
    }
    throw std::runtime_error("certified exp comparison failed to separate");
}

std::string mpfr_fixed12(mpfr_t x) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.12Rf", x);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string normalized_gap_decimal(const mpz_class& beta, int n) {
    mpfr_t g, t;
    mpfr_init2(g, 128);
    mpfr_init2(t, 128);
    mpfr_set_z(g, beta.get_mpz_t(), MPFR_RNDN);
    mpfr_log(g, g, MPFR_RNDN);
    mpfr_set_ui(t, static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_log(t, t, MPFR_RNDN);
    mpfr_mul_ui(t, t, static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_sub(g, g, t, MPFR_RNDN);
    mpfr_div_ui(g, g, static_cast<unsigned long>(n), MPFR_RNDN);
    std::string out = mpfr_fixed12(g);
    mpfr_clear(g);
    mpfr_clear(t);
    return out;
}

// Support size of one permutation, by the fastest sound route for the kind.
// With cross_check the answer is recomputed from the actual polynomial and
// the two supports compared; any disagreement is a bug, not a data point.
mpz_class support_size_for(const Permutation& w, PolyKind kind, bool cross_check,
                           PolyCache* cache) {
    if (kind == PolyKind::Schubert) {
        const SupportSet via_diagrams = schubert_support_via_diagrams(w);
        if (cross_check) {
            const SupportSet via_poly = support(schubert(w, AscentPolicy::Smallest, cache));
            if (!(via_poly == via_diagrams))
                throw std::runtime_error("schubert support cross-check mismatch at w = " +
                                         to_string(w));
        }
        return support_size(via_diagrams);
    }
    if (is_fireworks(w)) {
        const SupportSet boxed = grothendieck_support_fireworks(w);
        if (cross_check) {
            const SupportSet via_poly = support(grothendieck(w, AscentPolicy::Smallest, cache));
            if (!(via_poly == boxed))
                throw std::runtime_error("grothendieck support cross-check mismatch at w = " +
                                         to_string(w));
        }
        return support_size(boxed);
    }
    return support_size(support(grothendieck(w, AscentPolicy::Smallest, cache)));
}

}  // namespace

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BoundReport verify_block_inequality(const LayeredSpec& spec) {
    const Permutation w = layered(spec);  // validates the spec
    const int n = spec.total();
    const int bm = spec.blocks.back();
    if (2 * bm > n)
        throw hypothesis_error("block inequality requires 2*b_m <= n; got b_m = " +
                               std::to_string(bm) + " with n = " + std::to_string(n));
    // 2*b_m <= n rules out a single block, so the prefix is nonempty.
    const std::vector<int> head(spec.blocks.begin(), spec.blocks.end() - 1);
    const Permutation wp = layered(LayeredSpec{head});
    const mpz_class lhs = support_size(schubert_support_via_diagrams(w));
    const mpz_class head_size = support_size(schubert_support_via_diagrams(wp));

    BoundReport r;
    r.subject = "block-inequality " + to_string(spec);
    r.lhs = lhs;
    r.rhs = factorial(static_cast<unsigned long>(bm)) * head_size;
    r.holds = r.lhs >= r.rhs;
    std::ostringstream d;
    d << "support size " << lhs << " for w = " << to_string(w) << " vs " << bm << "! * "
      << head_size << " (support size of w' = " << to_string(wp) << ")";
    r.detail = d.str();
    return r;
}

std::pair<LayeredSpec, mpz_class> corollary_construction(int n) {
    if (n < 3) throw std::invalid_argument("corollary construction requires n >= 3");
    std::vector<int> floors;  // floor(n/2^k) for k = 1, 2, ... while positive
    for (int k = 1; (n >> k) >= 1; ++k) floors.push_back(n >> k);
    const int used = std::accumulate(floors.begin(), floors.end(), 0);
    std::vector<int> blocks(static_cast<std::size_t>(n - used), 1);
    blocks.insert(blocks.end(), floors.rbegin(), floors.rend());
    mpz_class bound = 1;
    for (int f : floors) bound *= factorial(static_cast<unsigned long>(f));
    return {LayeredSpec{std::move(blocks)}, std::move(bound)};
}

mpz_class corollary_product_bound(int n) { return corollary_construction(n).second; }

BoundReport corollary_report(int n) {
    auto [spec, bound] = corollary_construction(n);
    const Permutation w = layered(spec);
    BoundReport r;
    r.subject = "corollary-construction n=" + std::to_string(n) + " blocks=" + to_string(spec);
    r.lhs = support_size(schubert_support_via_diagrams(w));
    r.rhs = bound;
    r.holds = r.lhs >= r.rhs;
    std::ostringstream d;
    d << "support size " << r.lhs << " for w = " << to_string(w)
      << " vs product-of-factorials bound " << r.rhs;
    r.detail = d.str();
    return r;
}

LayeredSpec groth_construction(int n) {
    if (n < 1) throw std::invalid_argument("construction requires n >= 1");
    int k = 1;  // largest k with k(k+1)/2 <= n
    while ((k + 1) * (k + 2) / 2 <= n) ++k;
    const int b = n - k * (k + 1) / 2;
    std::vector<int> blocks(static_cast<std::size_t>(k));
    std::iota(blocks.begin(), blocks.end(), 1);
    if (b > 0) blocks.push_back(b);
    return LayeredSpec{std::move(blocks)};
}

BoundReport groth_report(int n) {
    const LayeredSpec spec = groth_construction(n);
    BoundReport r = crude_groth_lower(layered(spec));
    r.subject = "groth-construction n=" + std::to_string(n) + " blocks=" + to_string(spec);
    return r;
}

mpz_class crude_groth_rhs(const Permutation& w) {
    const std::vector<int> c = lehmer_code(w);
    const std::vector<int> d = weight(upward_closure(rothe(w)));
    mpz_class r = 1;
    for (std::size_t i = 0; i < c.size(); ++i) r *= d[i] - c[i] + 1;
    return r;
}

BoundReport crude_groth_lower(const Permutation& w) {
    const mpz_class lhs = support_size(grothendieck_support_fireworks(w));
    BoundReport r;
    r.subject = "groth-support-lower w=" + to_string(w);
    r.lhs = lhs;
    r.rhs = crude_groth_rhs(w);
    r.holds = r.lhs >= r.rhs;
    std::ostringstream d;
    d << "grothendieck support size " << lhs << " for w = " << to_string(w)
      << " vs box product " << r.rhs;
    r.detail = d.str();
    return r;
}

bool factorial_bounds_check(long n) {
    if (n < 1) throw std::invalid_argument("factorial bounds require n >= 1");
    const auto un = static_cast<unsigned long>(n);
    const mpz_class fact = factorial(un);
    mpz_class nn, n1;
    mpz_ui_pow_ui(nn.get_mpz_t(), un, un);
    mpz_ui_pow_ui(n1.get_mpz_t(), un + 1, un + 1);
    // e (n/e)^n <= n!  <=>  n^n / n! <= e^(n-1)
    mpq_class lower(nn, fact);
    lower.canonicalize();
    // n! <= e ((n+1)/e)^(n+1)  <=>  e^n <= (n+1)^(n+1) / n!
    mpq_class upper(n1, fact);
    upper.canonicalize();
    return certified_cmp_exp(un - 1, lower) >= 0 && certified_cmp_exp(un, upper) <= 0;
}

bool floor_fact_bound_check(const mpq_class& k) {
    if (k <= 1) throw std::invalid_argument("floor-factorial bound requires k > 1");
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), k.get_num().get_mpz_t(), k.get_den().get_mpz_t());
    if (!fl.fits_ulong_p() || fl > 1000000)
        throw budget_error("floor(k) too large for an exact factorial");
    const mpz_class fact = factorial(fl.get_ui());

    // Brackets k^(k-1) / (2 e^k) with outward rounding.  Both k^t (for base
    // >= 1, t >= 0) and e^k are increasing, and RNDD keeps the lower endpoint
    // of k itself at >= 1, so endpoint monotonicity gives a true enclosure.
    for (mpfr_prec_t prec = 128; prec <= kMaxCertifiedPrec; prec *= 2) {
        mpfr_t klo, khi, tlo, thi, num, den, rlo, rhi;
        mpfr_inits2(prec, klo, khi, tlo, thi, num, den, rlo, rhi, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_q(klo, k.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(khi, k.get_mpq_t(), MPFR_RNDU);
        mpfr_sub_ui(tlo, klo, 1, MPFR_RNDD);
        mpfr_sub_ui(thi, khi, 1, MPFR_RNDU);

        mpfr_pow(num, klo, tlo, MPFR_RNDD);
        mpfr_exp(den, khi, MPFR_RNDU);
        mpfr_mul_ui(den, den, 2, MPFR_RNDU);
        mpfr_div(rlo, num, den, MPFR_RNDD);

        mpfr_pow(num, khi, thi, MPFR_RNDU);
        mpfr_exp(den, klo, MPFR_RNDD);
        mpfr_mul_ui(den, den, 2, MPFR_RNDD);
        mpfr_div(rhi, num, den, MPFR_RNDU);

        const int cl = mpfr_cmp_z(rlo, fact.get_mpz_t());
        const int ch = mpfr_cmp_z(rhi, fact.get_mpz_t());
        mpfr_clears(klo, khi, tlo, thi, num, den, rlo, rhi, static_cast<mpfr_ptr>(nullptr));
        if (ch < 0) return true;   // rhs <= rhi < floor(k)!
        if (cl > 0) return false;  // rhs >= rlo > floor(k)!
        // Straddling an integer cannot persist: e^k is transcendental for
        // rational k != 0, so the right-hand side is irrational.
    }
    throw std::runtime_error("certified floor-factorial comparison failed to separate");
}

void for_each_composition(int n, const std::function<void(const std::vector<int>&)>& visit) {
    if (n < 0) throw std::invalid_argument("compositions need n >= 0");
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            visit(parts);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            parts.push_back(p);
            rec(rest - p);
            parts.pop_back();
        }
    };
    rec(n);
}

std::vector<SweepRow> beta_sweep(int n_max, PolyKind kind, const SweepOptions& opts) {
    if (n_max < 1) throw std::invalid_argument("sweep requires n_max >= 1");
    const int budget =
        opts.budget > 0 ? opts.budget
                        : (kind == PolyKind::Schubert ? kSchubertSweepBudget : kGrothSweepBudget);
    if (n_max > budget)
        throw budget_error("exhaustive sweep capped at n <= " + std::to_string(budget) +
                           "; raise the budget to go further");
    const int jobs = std::max(1, opts.jobs);

    std::vector<SweepRow> rows;
    PolyCache cache;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Permutation> perms;
        std::vector<int> line(static_cast<std::size_t>(n));
        std::iota(line.begin(), line.end(), 1);
        do {
            perms.emplace_back(line);
        } while (std::next_permutation(line.begin(), line.end()));

        // Static partition into index-contiguous chunks; merging in chunk
        // order below keeps the result identical for every thread count.
        const int workers = std::min<int>(jobs, static_cast<int>(perms.size()));
        const std::size_t chunk = (perms.size() + workers - 1) / workers;
        std::vector<mpz_class> best(static_cast<std::size_t>(workers), 0);
        std::vector<std::vector<Permutation>> arg(static_cast<std::size_t>(workers));
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        auto run = [&](int t) {
            try {
                const std::size_t begin = static_cast<std::size_t>(t) * chunk;
                const std::size_t end = std::min(perms.size(), begin + chunk);
                for (std::size_t i = begin; i < end; ++i) {
                    const mpz_class size =
                        support_size_for(perms[i], kind, opts.cross_check, &cache);
                    const auto ut = static_cast<std::size_t>(t);
                    if (size > best[ut]) {
                        best[ut] = size;
                        arg[ut].clear();
                    }
                    if (size == best[ut]) arg[ut].push_back(perms[i]);
                }
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        };
        if (workers == 1) {
            run(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(workers));
            for (int t = 0; t < workers; ++t) pool.emplace_back(run, t);
            for (auto& th : pool) th.join();
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);

        SweepRow row;
        row.n = n;
        row.beta = *std::max_element(best.begin(), best.end());
        for (int t = 0; t < workers; ++t) {
            const auto& a = arg[static_cast<std::size_t>(t)];
            if (best[static_cast<std::size_t>(t)] == row.beta)
                row.maximizers.insert(row.maximizers.end(), a.begin(), a.end());
        }
        row.normalized_gap = normalized_gap_decimal(row.beta, n);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string decimal_ln(const mpz_class& v) {
    if (v < 1) throw std::invalid_argument("ln requires a positive integer");
    mpfr_t x;
    mpfr_init2(x, 128);
    mpfr_set_z(x, v.get_mpz_t(), MPFR_RNDN);
    mpfr_log(x, x, MPFR_RNDN);
    std::string out = mpfr_fixed12(x);
    mpfr_clear(x);
    return out;
}

std::string decimal_ln_factorial(int n) {
    if (n < 0) throw std::invalid_argument("ln factorial requires n >= 0");
    return decimal_ln(factorial(static_cast<unsigned long>(n)));
}

std::string corollary_analytic_bound(int n) {
    if (n < 1) throw std::invalid_argument("analytic bound requires n >= 1");
    const auto un = static_cast<unsigned long>(n);
    mpfr_t ln_n, ln2, coeff, res;
    mpfr_inits2(128, ln_n, ln2, coeff, res, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_ui(ln_n, un, MPFR_RNDN);
    mpfr_log(ln_n, ln_n, MPFR_RNDN);
    mpfr_const_log2(ln2, MPFR_RNDN);
    // (n - ln n / ln 2 - 2) * ln n - n ln 4 - (n - 2)
    mpfr_div(coeff, ln_n, ln2, MPFR_RNDN);
    mpfr_ui_sub(coeff, un, coeff, MPFR_RNDN);
    mpfr_sub_ui(coeff, coeff, 2, MPFR_RNDN);
    mpfr_mul(res, coeff, ln_n, MPFR_RNDN);
    mpfr_mul_ui(ln2, ln2, 2 * un, MPFR_RNDN);  // n ln 4
    mpfr_sub(res, res, ln2, MPFR_RNDN);
    mpfr_sub_si(res, res, n - 2, MPFR_RNDN);
    std::string out = mpfr_fixed12(res);
    mpfr_clears(ln_n, ln2, coeff, res, static_cast<mpfr_ptr>(nullptr));
    return out;
}

}  // namespace schubkit
