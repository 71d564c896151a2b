#include "schubkit/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schubkit {

SparsePoly::SparsePoly(int n_vars) : n_vars_(n_vars) {
    if (n_vars < 0) throw std::invalid_argument("poly: negative variable count");
}

SparsePoly SparsePoly::constant(int n_vars, const mpz_class& c) {
    SparsePoly f(n_vars);
    f.add_term(ExponentVector(static_cast<size_t>(n_vars), 0), c);
    return f;
}

SparsePoly SparsePoly::monomial(ExponentVector exp, mpz_class coeff) {
    SparsePoly f(static_cast<int>(exp.size()));
    f.add_term(exp, coeff);
    return f;
}

void SparsePoly::add_term(const ExponentVector& exp, const mpz_class& coeff) {
    if (static_cast<int>(exp.size()) != n_vars_)
        throw std::invalid_argument("poly: exponent vector of wrong length");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

mpz_class SparsePoly::coeff(const ExponentVector& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

SparsePoly SparsePoly::operator+(const SparsePoly& rhs) const {
    if (n_vars_ != rhs.n_vars_) throw std::invalid_argument("poly: variable count mismatch");
    SparsePoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& rhs) const {
    if (n_vars_ != rhs.n_vars_) throw std::invalid_argument("poly: variable count mismatch");
    SparsePoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
}

SparsePoly SparsePoly::operator*(const SparsePoly& rhs) const {
    if (n_vars_ != rhs.n_vars_) throw std::invalid_argument("poly: variable count mismatch");
    SparsePoly out(n_vars_);
    ExponentVector e(static_cast<size_t>(n_vars_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

SparsePoly swap_vars(const SparsePoly& f, int i) {
    if (i < 1 || i >= f.n_vars())
        throw std::invalid_argument("swap_vars: index " + std::to_string(i) + " out of range");
    SparsePoly out(f.n_vars());
    for (const auto& [e, c] : f.terms()) {
        ExponentVector se = e;
        std::swap(se[static_cast<size_t>(i) - 1], se[static_cast<size_t>(i)]);
        out.add_term(se, c);
    }
    return out;
}

SparsePoly divided_difference(const SparsePoly& f, int i) {
    if (i < 1 || i >= f.n_vars())
        throw std::invalid_argument("divided_difference: index " + std::to_string(i) +
                                    " out of range");
    const size_t a = static_cast<size_t>(i) - 1;
    const size_t b = static_cast<size_t>(i);
    SparsePoly out(f.n_vars());
    ExponentVector e(static_cast<size_t>(f.n_vars()));
    for (const auto& [exp, c] : f.terms()) {
        const int p = exp[a];
        const int q = exp[b];
        if (p == q) continue;
        // (x^p y^q - x^q y^p)/(x - y) = sum_{t=0}^{p-q-1} x^{q+t} y^{p-1-t}
        // for p > q, and the negated mirror image for p < q.
        const int lo = std::min(p, q);
        const int hi = std::max(p, q);
        const mpz_class signed_c = (p > q) ? c : -c;
        e = exp;
        for (int t = 0; t < hi - lo; ++t) {
            e[a] = lo + t;
            e[b] = hi - 1 - t;
            out.add_term(e, signed_c);
        }
    }
    return out;
}

SparsePoly isobaric_dd(const SparsePoly& f, int i) {
    if (i < 1 || i >= f.n_vars())
        throw std::invalid_argument("isobaric_dd: index " + std::to_string(i) +
                                    " out of range");
    // (1 - x_{i+1}) f
    SparsePoly g = f;
    for (const auto& [e, c] : f.terms()) {
        ExponentVector shifted = e;
        ++shifted[static_cast<size_t>(i)];
        g.add_term(shifted, -c);
    }
    return divided_difference(g, i);
}

SparsePoly staircase_monomial(int n) {
    ExponentVector e(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = n - 1 - i;
    return SparsePoly::monomial(std::move(e));
}

namespace {

// Positions i with w(i) < w(i+1), i.e. where right-multiplying by s_i raises
// the length.
int choose_ascent(const Permutation& w, AscentPolicy policy) {
    const int n = w.size();
    if (policy == AscentPolicy::Smallest) {
        for (int i = 1; i < n; ++i)
            if (w(i) < w(i + 1)) return i;
    } else {
        for (int i = n - 1; i >= 1; --i)
            if (w(i) < w(i + 1)) return i;
    }
    return 0; // w is the longest element
}

// Recursion toward the longest element; memoizes every intermediate
// permutation, so a shared cache collapses the work of a sweep over S_n.
template <typename Operator>
SparsePoly compute_by_recursion(const Permutation& w, AscentPolicy policy, PolyCache* cache,
                                Operator&& apply) {
    if (cache) {
        if (auto hit = cache->lookup(w.one_line())) return *hit;
    }
    const int i = choose_ascent(w, policy);
    SparsePoly f = (i == 0)
                       ? staircase_monomial(w.size())
                       : apply(compute_by_recursion(swap_adjacent(w, i), policy, cache, apply), i);
    if (cache) cache->insert(w.one_line(), f);
    return f;
}

} // namespace

SparsePoly schubert(const Permutation& w, AscentPolicy policy, PolyCache* cache) {
    return compute_by_recursion(w, policy, cache, [](const SparsePoly& f, int i) {
        return divided_difference(f, i);
    });
}

SparsePoly grothendieck(const Permutation& w, AscentPolicy policy, PolyCache* cache) {
    return compute_by_recursion(w, policy, cache, [](const SparsePoly& f, int i) {
        return isobaric_dd(f, i);
    });
}

SparsePoly lowest_degree_part(const SparsePoly& f) {
    long min_deg = -1;
    for (const auto& [e, c] : f.terms()) {
        const long deg = std::accumulate(e.begin(), e.end(), 0L);
        if (min_deg < 0 || deg < min_deg) min_deg = deg;
    }
    SparsePoly out(f.n_vars());
    for (const auto& [e, c] : f.terms())
        if (std::accumulate(e.begin(), e.end(), 0L) == min_deg) out.add_term(e, c);
    return out;
}

mpz_class principal_specialization(const SparsePoly& f) {
    mpz_class sum = 0;
    for (const auto& [e, c] : f.terms()) sum += c;
    return sum;
}

PolyCache::PolyCache(size_t max_entries) : max_entries_(max_entries) {}

std::optional<SparsePoly> PolyCache::lookup(const std::vector<int>& one_line) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(one_line);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void PolyCache::insert(const std::vector<int>& one_line, const SparsePoly& poly) {
    std::lock_guard<std::mutex> lock(mu_);
    if (entries_.size() >= max_entries_) return;
    entries_.try_emplace(one_line, poly);
}

size_t PolyCache::entry_count() const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.size();
}

} // namespace schubkit
