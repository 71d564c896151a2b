#pragma once

#include <compare>
#include <string>
#include <vector>

namespace schubkit {

/// Row/column weight vector of a diagram; entries are nonnegative.
using WeightVector = std::vector<int>;
/// Exponent vector of a monomial; same representation as WeightVector.
using ExponentVector = WeightVector;

/// A permutation w of {1..n} in one-line notation. Positions and values are
/// 1-indexed throughout: operator()(i) returns w(i) for 1 <= i <= n.
class Permutation {
public:
    /// Validates that one_line is a bijection of {1..n}.
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& one_line() const { return w_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> w_;
};

/// Descending-block description of a layered permutation. All blocks are >= 1;
/// the ambient group size is the block sum.
struct LayeredSpec {
    std::vector<int> blocks;

    /// Validates that the list is nonempty and every block is positive.
    explicit LayeredSpec(std::vector<int> blocks);

    int total() const;
};

/// Parses compact digits ("31542", n <= 9 only) or comma-separated form
/// ("2,10,1,3,...").
Permutation parse_permutation(const std::string& text);

/// Comma-separated one-line form, e.g. "3,1,5,4,2". This is the form used in
/// all JSON output.
std::string to_string(const Permutation& w);

/// Parenthesized block list, e.g. "(1,2,2)".
std::string to_string(const LayeredSpec& spec);

Permutation inverse(const Permutation& w);

/// Number of inversions #{(i,j) : i < j, w(i) > w(j)}.
long length(const Permutation& w);

/// c_i = #{j > i : w(j) < w(i)}; equal to the row weights of the Rothe diagram.
WeightVector lehmer_code(const Permutation& w);

/// w * s_i: exchanges the entries at positions i and i+1 (1 <= i < n).
Permutation swap_adjacent(const Permutation& w, int i);

/// Concatenation of descending runs (c_k, c_k - 1, ..., c_{k-1} + 1) with
/// c_k = b_1 + ... + b_k.
Permutation layered(const LayeredSpec& spec);

/// Whether the initial elements of the maximal decreasing runs of w strictly
/// increase.
bool is_fireworks(const Permutation& w);

/// [n, n-1, ..., 1].
Permutation longest_element(int n);

} // namespace schubkit
