#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spinkostka/rational.hpp"

namespace spinkostka {

/// Integer partition: weakly decreasing sequence of positive parts.
/// Immutable value type; the empty partition is valid everywhere.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return int(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// 1-based part access padded with zeros.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[size_t(i - 1)] : 0;
    }
    /// Multiplicity of i as a part.
    int multiplicity(int i) const {
        return int(std::count(parts_.begin(), parts_.end(), i));
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) {
        return !(a == b);
    }
    /// Canonical order: smaller size first, then reverse lexicographic
    /// (so for fixed n: (n) first, (1^n) last).  Matrix rows/columns and
    /// map iteration follow this order.
    friend bool operator<(const Partition& a, const Partition& b) {
        int sa = a.size(), sb = b.size();
        if (sa != sb) return sa < sb;
        return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                            a.parts_.begin(), a.parts_.end());
    }

    /// n(lambda) = sum (i-1) lambda_i
    int n_stat() const {
        int s = 0;
        for (int i = 0; i < length(); ++i) s += i * parts_[size_t(i)];
        return s;
    }
    /// Parity indicator of the length: 0 if even, 1 if odd.
    int delta_stat() const { return length() % 2; }

    Partition conjugate() const {
        std::vector<int> c;
        if (!parts_.empty()) {
            c.assign(size_t(parts_[0]), 0);
            for (int p : parts_)
                for (int j = 0; j < p; ++j) ++c[size_t(j)];
        }
        return Partition(std::move(c));
    }

    /// Frobenius notation (alpha | beta): arm and leg lengths along the
    /// main diagonal.
    std::pair<std::vector<int>, std::vector<int>> frobenius() const {
        Partition conj = conjugate();
        std::vector<int> alpha, beta;
        for (int i = 1; i <= length() && parts_[size_t(i - 1)] >= i; ++i) {
            alpha.push_back(part(i) - i);
            beta.push_back(conj.part(i) - i);
        }
        return {alpha, beta};
    }

    static Partition from_frobenius(const std::vector<int>& alpha,
                                    const std::vector<int>& beta) {
        if (alpha.size() != beta.size())
            throw std::invalid_argument("from_frobenius: length mismatch");
        const int r = int(alpha.size());
        std::vector<int> rows;
        for (int i = 1; i <= r; ++i) rows.push_back(alpha[size_t(i - 1)] + i);
        // row i > r has one cell for every column j <= r reaching it,
        // i.e. with beta_j + j >= i
        const int depth = r == 0 ? 0 : beta[0] + 1;
        for (int i = r + 1; i <= depth; ++i) {
            int cols = 0;
            for (int j = 1; j <= r; ++j)
                if (beta[size_t(j - 1)] + j >= i) ++cols;
            if (cols > 0) rows.push_back(cols);
        }
        return Partition(std::move(rows));
    }

    /// "[2,1]"; "[]" for the empty partition.
    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

private:
    std::vector<int> parts_;
};

/// True iff a dominates b: equal sizes and all prefix sums of a are >=
/// those of b.  Size mismatch is a usage error.
inline bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominates: sizes differ");
    long pa = 0, pb = 0;
    const int len = std::max(a.length(), b.length());
    for (int i = 1; i <= len; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa < pb) return false;
    }
    return true;
}

/// Sorted-merge of the parts of a and b (p_a * p_b = p_{a u b}).
inline Partition union_parts(const Partition& a, const Partition& b) {
    std::vector<int> m;
    m.reserve(size_t(a.length() + b.length()));
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(m), std::greater<int>());
    return Partition(std::move(m));
}

/// Centralizer size z_lambda = prod_i i^{m_i} m_i!
inline mpz_class z_of(const Partition& lambda) {
    mpz_class z = 1;
    int i = 0;
    while (i < lambda.length()) {
        int j = i, p = lambda.parts()[size_t(i)];
        while (j < lambda.length() && lambda.parts()[size_t(j)] == p) ++j;
        const unsigned m = unsigned(j - i);
        for (unsigned k = 0; k < m; ++k) z *= p;
        z *= factorial(m);
        i = j;
    }
    return z;
}

namespace detail {

inline void gen_partitions(int n, int max_part, std::vector<int>& cur,
                           std::vector<Partition>& out, bool strict) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, strict ? p - 1 : p, cur, out, strict);
        cur.pop_back();
    }
}

} // namespace detail

/// All partitions of n in canonical (reverse lexicographic) order.
inline const std::vector<Partition>& partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    static std::map<int, std::vector<Partition>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<Partition> out;
        std::vector<int> cur;
        detail::gen_partitions(n, n, cur, out, false);
        it = cache.emplace(n, std::move(out)).first;
    }
    return it->second;
}

/// Position of lambda within partitions_of(|lambda|).
inline int canonical_index(const Partition& lambda) {
    const auto& all = partitions_of(lambda.size());
    auto it = std::lower_bound(all.begin(), all.end(), lambda,
                               [](const Partition& a, const Partition& b) { return a < b; });
    if (it == all.end() || !(*it == lambda))
        throw std::logic_error("canonical_index: partition not found");
    return int(it - all.begin());
}

/// Partition with strictly decreasing parts.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts) : p_(std::move(parts)) {
        for (int i = 1; i < p_.length(); ++i)
            if (p_.parts()[size_t(i)] >= p_.parts()[size_t(i - 1)])
                throw std::invalid_argument("StrictPartition: parts must strictly decrease");
    }
    StrictPartition(std::initializer_list<int> parts)
        : StrictPartition(std::vector<int>(parts)) {}
    explicit StrictPartition(const Partition& p) : StrictPartition(p.parts()) {}

    const Partition& as_partition() const { return p_; }
    const std::vector<int>& parts() const { return p_.parts(); }
    int size() const { return p_.size(); }
    int length() const { return p_.length(); }
    int part(int i) const { return p_.part(i); }
    int n_stat() const { return p_.n_stat(); }
    int delta_stat() const { return p_.delta_stat(); }
    std::string str() const { return p_.str(); }

    friend bool operator==(const StrictPartition& a, const StrictPartition& b) {
        return a.p_ == b.p_;
    }
    friend bool operator!=(const StrictPartition& a, const StrictPartition& b) {
        return !(a == b);
    }
    friend bool operator<(const StrictPartition& a, const StrictPartition& b) {
        return a.p_ < b.p_;
    }

private:
    Partition p_;
};

inline bool is_strict(const Partition& p) {
    for (int i = 2; i <= p.length(); ++i)
        if (p.part(i) >= p.part(i - 1)) return false;
    return true;
}

/// All strict partitions of n in canonical order.
inline const std::vector<StrictPartition>& strict_partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("strict_partitions_of: negative n");
    static std::map<int, std::vector<StrictPartition>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<Partition> all;
        std::vector<int> cur;
        detail::gen_partitions(n, n, cur, all, true);
        std::vector<StrictPartition> out;
        out.reserve(all.size());
        for (auto& p : all) out.emplace_back(p);
        it = cache.emplace(n, std::move(out)).first;
    }
    return it->second;
}

inline int canonical_index(const StrictPartition& xi) {
    const auto& all = strict_partitions_of(xi.size());
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i] == xi) return int(i);
    throw std::logic_error("canonical_index: strict partition not found");
}

struct ShiftedCell {
    int row = 0;      // 1-based
    int col = 0;      // 1-based, row i spans columns i .. xi_i + i - 1
    int content = 0;  // col - row
    int hook = 0;     // shifted hook length
};

/// Shifted Young diagram of a strict partition, with per-cell contents
/// and shifted hook lengths.  The shifted hook of cell (i,j) is the
/// ordinary hook of cell (i,j+1) in the double diagram, the partition
/// (xi_1,...,xi_l | xi_1 - 1,...,xi_l - 1) in Frobenius notation.
class ShiftedDiagram {
public:
    explicit ShiftedDiagram(StrictPartition xi) : shape_(std::move(xi)) {
        const int l = shape_.length();
        std::vector<int> alpha, beta;
        for (int i = 1; i <= l; ++i) {
            alpha.push_back(shape_.part(i));
            beta.push_back(shape_.part(i) - 1);
        }
        // the double diagram needs alpha_i = rows to the right of the
        // diagonal, i.e. xi_i = (row length) - i  =>  row i = xi_i + i;
        // Partition::from_frobenius takes arm lengths xi_i - ... directly
        double_ = Partition::from_frobenius(alpha, beta);
        const Partition dconj = double_.conjugate();
        for (int i = 1; i <= l; ++i) {
            for (int j = i; j <= shape_.part(i) + i - 1; ++j) {
                ShiftedCell c;
                c.row = i;
                c.col = j;
                c.content = j - i;
                c.hook = double_.part(i) + dconj.part(j + 1) - i - (j + 1) + 1;
                cells_.push_back(c);
            }
        }
        if (int(cells_.size()) != shape_.size())
            throw std::logic_error("ShiftedDiagram: cell count mismatch");
    }

    const StrictPartition& shape() const { return shape_; }
    const std::vector<ShiftedCell>& cells() const { return cells_; }
    const Partition& double_partition() const { return double_; }

    std::vector<int> row_hooks(int i) const {
        std::vector<int> h;
        for (auto& c : cells_)
            if (c.row == i) h.push_back(c.hook);
        return h;
    }

private:
    StrictPartition shape_;
    std::vector<ShiftedCell> cells_;
    Partition double_;
};

} // namespace spinkostka
