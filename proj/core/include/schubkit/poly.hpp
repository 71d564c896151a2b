#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "schubkit/perm.hpp"

namespace schubkit {

/// Exact sparse multivariate polynomial over the integers. Terms are keyed by
/// exponent vector; zero coefficients are never stored. The term map's
/// lexicographic key order is the canonical serialization order.
class SparsePoly {
public:
    using TermMap = std::map<ExponentVector, mpz_class>;

    explicit SparsePoly(int n_vars);
    static SparsePoly constant(int n_vars, const mpz_class& c);
    static SparsePoly monomial(ExponentVector exp, mpz_class coeff = 1);

    int n_vars() const { return n_vars_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Accumulates coeff onto the term with the given exponents; erases the
    /// term if the sum vanishes.
    void add_term(const ExponentVector& exp, const mpz_class& coeff);

    mpz_class coeff(const ExponentVector& exp) const;

    SparsePoly operator+(const SparsePoly& rhs) const;
    SparsePoly operator-(const SparsePoly& rhs) const;
    SparsePoly operator*(const SparsePoly& rhs) const;
    bool operator==(const SparsePoly&) const = default;

private:
    int n_vars_;
    TermMap terms_;
};

/// Exchanges exponents i and i+1 in every term (1 <= i < n_vars).
SparsePoly swap_vars(const SparsePoly& f, int i);

/// (f - s_i f) / (x_i - x_{i+1}), computed term by term via the telescoping
/// expansion of (x_i^p x_{i+1}^q - x_i^q x_{i+1}^p) / (x_i - x_{i+1}). Exact
/// by construction; no polynomial division is performed.
SparsePoly divided_difference(const SparsePoly& f, int i);

/// The isobaric operator f -> divided_difference((1 - x_{i+1}) f, i).
SparsePoly isobaric_dd(const SparsePoly& f, int i);

/// The monomial x_1^{n-1} x_2^{n-2} ... x_{n-1}.
SparsePoly staircase_monomial(int n);

/// Ascent chosen at each step of the recursion toward the longest element.
enum class AscentPolicy { Smallest, Largest };

/// Bounded, thread-safe memo from permutation to polynomial. Results are
/// identical with or without a cache; a full cache silently stops inserting.
/// A cache holds one polynomial family at one n; never share an instance
/// between schubert and grothendieck.
class PolyCache;

SparsePoly schubert(const Permutation& w, AscentPolicy policy = AscentPolicy::Smallest,
                    PolyCache* cache = nullptr);
SparsePoly grothendieck(const Permutation& w, AscentPolicy policy = AscentPolicy::Smallest,
                        PolyCache* cache = nullptr);

/// Terms of minimal total degree.
SparsePoly lowest_degree_part(const SparsePoly& f);

/// Sum of coefficients, i.e. the evaluation at x_1 = ... = x_n = 1.
mpz_class principal_specialization(const SparsePoly& f);

class PolyCache {
public:
    explicit PolyCache(size_t max_entries = 1 << 14);

    std::optional<SparsePoly> lookup(const std::vector<int>& one_line) const;
    void insert(const std::vector<int>& one_line, const SparsePoly& poly);
    size_t entry_count() const;

private:
    size_t max_entries_;
    mutable std::mutex mu_;
    std::map<std::vector<int>, SparsePoly> entries_;
};

} // namespace schubkit
