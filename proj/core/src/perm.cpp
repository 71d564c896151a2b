#include "schubkit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schubkit {

namespace {

void validate_one_line(const std::vector<int>& w) {
    if (w.empty()) throw std::invalid_argument("permutation: empty input");
    const int n = static_cast<int>(w.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : w) {
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation: entry " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n));
        if (seen[static_cast<size_t>(v)])
            throw std::invalid_argument("permutation: repeated entry " + std::to_string(v) +
                                        ", not a bijection");
        seen[static_cast<size_t>(v)] = 1;
    }
}

} // namespace

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    validate_one_line(w_);
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

LayeredSpec::LayeredSpec(std::vector<int> b) : blocks(std::move(b)) {
    if (blocks.empty()) throw std::invalid_argument("layered spec: no blocks");
    for (int x : blocks)
        if (x < 1)
            throw std::invalid_argument("layered spec: block " + std::to_string(x) +
                                        " is not positive");
}

int LayeredSpec::total() const {
    return std::accumulate(blocks.begin(), blocks.end(), 0);
}

Permutation parse_permutation(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("permutation: empty input");
    std::vector<int> entries;
    if (text.find(',') == std::string::npos) {
        // Compact digit form, unambiguous only for n <= 9.
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument(
                    "permutation: compact form allows digits 1..9 only, got '" +
                    std::string(1, c) + "'");
            entries.push_back(c - '0');
        }
        if (entries.size() > 9)
            throw std::invalid_argument(
                "permutation: compact form is limited to n <= 9; use comma-separated form");
    } else {
        // getline drops a final empty token, so catch the trailing comma here.
        if (text.back() == ',') throw std::invalid_argument("permutation: bad entry ''");
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("permutation: bad entry '" + tok + "'");
            }
            if (pos != tok.size())
                throw std::invalid_argument("permutation: bad entry '" + tok + "'");
            entries.push_back(v);
        }
    }
    return Permutation(std::move(entries));
}

std::string to_string(const Permutation& w) {
    std::string out;
    for (int i = 1; i <= w.size(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(w(i));
    }
    return out;
}

std::string to_string(const LayeredSpec& spec) {
    std::string out = "(";
    for (size_t i = 0; i < spec.blocks.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(spec.blocks[i]);
    }
    return out + ")";
}

Permutation inverse(const Permutation& w) {
    const int n = w.size();
    std::vector<int> inv(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) inv[static_cast<size_t>(w(i)) - 1] = i;
    return Permutation(std::move(inv));
}

long length(const Permutation& w) {
    const int n = w.size();
    long inv = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

WeightVector lehmer_code(const Permutation& w) {
    const int n = w.size();
    WeightVector code(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        int c = 0;
        for (int j = i + 1; j <= n; ++j)
            if (w(j) < w(i)) ++c;
        code[static_cast<size_t>(i) - 1] = c;
    }
    return code;
}

Permutation swap_adjacent(const Permutation& w, int i) {
    if (i < 1 || i >= w.size())
        throw std::invalid_argument("swap_adjacent: index " + std::to_string(i) +
                                    " out of range");
    std::vector<int> v = w.one_line();
    std::swap(v[static_cast<size_t>(i) - 1], v[static_cast<size_t>(i)]);
    return Permutation(std::move(v));
}

Permutation layered(const LayeredSpec& spec) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(spec.total()));
    int prev_top = 0;
    for (int b : spec.blocks) {
        const int top = prev_top + b;
        for (int x = top; x > prev_top; --x) v.push_back(x);
        prev_top = top;
    }
    return Permutation(std::move(v));
}

bool is_fireworks(const Permutation& w) {
    const int n = w.size();
    int last_initial = 0;
    int run_start = 1;
    for (int i = 1; i <= n; ++i) {
        const bool run_ends = (i == n) || (w(i) < w(i + 1));
        if (run_ends) {
            const int initial = w(run_start);
            if (initial <= last_initial) return false;
            last_initial = initial;
            run_start = i + 1;
        }
    }
    return true;
}

Permutation longest_element(int n) {
    if (n < 1) throw std::invalid_argument("longest_element: n must be >= 1");
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = n - i;
    return Permutation(std::move(v));
}

} // namespace schubkit
