#pragma once

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <vector>

#include "spinkostka/partition.hpp"

namespace spinkostka {

/// Semistandard Young tableau: rows weakly increase, columns strictly
/// increase.
struct SSYT {
    Partition shape;
    std::vector<std::vector<int>> rows;

    /// Multiplicity vector of the entries (index k-1 counts letter k).
    std::vector<int> weight() const {
        std::vector<int> w;
        for (auto& r : rows)
            for (int e : r) {
                if (int(w.size()) < e) w.resize(size_t(e), 0);
                ++w[size_t(e - 1)];
            }
        return w;
    }

    /// Row reading word: bottom row to top row, left to right.
    std::vector<int> reading_word() const {
        std::vector<int> w;
        for (auto it = rows.rbegin(); it != rows.rend(); ++it)
            w.insert(w.end(), it->begin(), it->end());
        return w;
    }
};

namespace detail {

template <class Visit>
void ssyt_backtrack(const Partition& shape, std::vector<int>& remaining,
                    std::vector<std::vector<int>>& rows, int r, int c,
                    const Visit& visit) {
    if (r == shape.length()) {
        visit(rows);
        return;
    }
    int nr = r, nc = c + 1;
    if (nc >= shape.part(r + 1)) { nr = r + 1; nc = 0; }
    const int lo = std::max(c > 0 ? rows[size_t(r)][size_t(c - 1)] : 1,
                            r > 0 && c < shape.part(r) ? rows[size_t(r - 1)][size_t(c)] + 1 : 1);
    for (int e = lo; e <= int(remaining.size()); ++e) {
        if (remaining[size_t(e - 1)] == 0) continue;
        --remaining[size_t(e - 1)];
        rows[size_t(r)][size_t(c)] = e;
        ssyt_backtrack(shape, remaining, rows, nr, nc, visit);
        ++remaining[size_t(e - 1)];
    }
}

} // namespace detail

/// Runs `visit` on every SSYT of the given shape and weight (the weight
/// may be any composition).  Fill order is row-major, so the visiting
/// order is deterministic.
inline void for_each_ssyt(const Partition& shape, const std::vector<int>& weight,
                          const std::function<void(const SSYT&)>& visit) {
    int total = 0;
    for (int w : weight) {
        if (w < 0) throw std::invalid_argument("for_each_ssyt: negative weight entry");
        total += w;
    }
    if (total != shape.size())
        throw std::invalid_argument("for_each_ssyt: weight size does not match shape");
    if (shape.empty()) {
        SSYT t{shape, {}};
        visit(t);
        return;
    }
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= shape.length(); ++i)
        rows.emplace_back(size_t(shape.part(i)), 0);
    std::vector<int> remaining = weight;
    detail::ssyt_backtrack(shape, remaining, rows, 0, 0,
                           [&](const std::vector<std::vector<int>>& filled) {
                               SSYT t{shape, filled};
                               visit(t);
                           });
}

/// Kostka number K_{lambda,weight}.
inline long long count_ssyt(const Partition& shape, const std::vector<int>& weight) {
    long long n = 0;
    for_each_ssyt(shape, weight, [&](const SSYT&) { ++n; });
    return n;
}
inline long long count_ssyt(const Partition& shape, const Partition& weight) {
    return count_ssyt(shape, weight.parts());
}

inline std::vector<SSYT> enumerate_ssyt(const Partition& shape,
                                        const std::vector<int>& weight) {
    std::vector<SSYT> out;
    for_each_ssyt(shape, weight, [&](const SSYT& t) { out.push_back(t); });
    return out;
}

/// Index of a standard word (each of 1..L exactly once): letter 1 gets
/// 0, and the counter increments whenever letter k+1 sits to the right
/// of letter k.  Returns the sum of all letter indices.
inline int standard_word_index(const std::vector<int>& positions_by_letter) {
    int c = 0, total = 0;
    for (size_t k = 1; k < positions_by_letter.size(); ++k) {
        if (positions_by_letter[k] > positions_by_letter[k - 1]) ++c;
        total += c;
    }
    return total;
}

/// Charge of a word with partition weight: repeatedly extract a standard
/// subword (rightmost 1, then scanning circularly leftwards for 2, 3,
/// ...) and sum the standard-word indices.
inline int charge_word(std::vector<int> word) {
    std::vector<int> weight;
    for (int e : word) {
        if (e <= 0) throw std::invalid_argument("charge_word: letters must be positive");
        if (int(weight.size()) < e) weight.resize(size_t(e), 0);
        ++weight[size_t(e - 1)];
    }
    for (size_t i = 1; i < weight.size(); ++i)
        if (weight[i] > weight[i - 1])
            throw std::invalid_argument("charge_word: weight is not a partition");

    int total = 0;
    std::vector<char> alive(word.size(), 1);
    int remaining = int(word.size());
    while (remaining > 0) {
        int letters = 0;
        for (size_t k = 0; k < weight.size() && weight[k] > 0; ++k) ++letters;
        // select positions of 1..letters scanning circularly to the left
        std::vector<int> pos(size_t(letters), -1);
        int cursor = int(word.size()) - 1;
        for (int k = 1; k <= letters; ++k) {
            int found = -1;
            for (int step = 0; step < int(word.size()); ++step) {
                int i = cursor - step;
                if (i < 0) i += int(word.size());
                if (alive[size_t(i)] && word[size_t(i)] == k) {
                    found = i;
                    break;
                }
            }
            if (found < 0) throw std::logic_error("charge_word: extraction failed");
            pos[size_t(k - 1)] = found;
            cursor = found - 1;
            if (cursor < 0) cursor += int(word.size());
        }
        total += standard_word_index(pos);
        for (int p : pos) {
            alive[size_t(p)] = 0;
            --weight[size_t(word[size_t(p)] - 1)];
            --remaining;
        }
    }
    return total;
}

/// Lascoux-Schutzenberger charge of a semistandard tableau whose weight
/// is a partition.
inline int charge(const SSYT& t) { return charge_word(t.reading_word()); }

/// Marked shifted tableau on the alphabet 1' < 1 < 2' < 2 < ...;
/// entries store k for unmarked k and -k for marked k'.
struct MarkedShiftedTableau {
    StrictPartition shape;
    std::vector<std::vector<int>> rows;  // row i holds the cells (i, i..xi_i+i-1)

    std::vector<int> weight() const {
        std::vector<int> w;
        for (auto& r : rows)
            for (int e : r) {
                int a = std::abs(e);
                if (int(w.size()) < a) w.resize(size_t(a), 0);
                ++w[size_t(a - 1)];
            }
        return w;
    }
};

namespace detail {

// Alphabet encoding for the backtracker: k' -> 2k-1, k -> 2k, so the
// natural integer order is the alphabet order.
inline bool marked_ok(int above, int left, int cand) {
    // (M1) weak increase along rows and columns
    if (left != 0 && cand < left) return false;
    if (above != 0 && cand < above) return false;
    // (M2) unmarked letters strictly increase down columns
    if (above != 0 && cand == above && cand % 2 == 0) return false;
    // (M3) marked letters strictly increase along rows
    if (left != 0 && cand == left && cand % 2 == 1) return false;
    return true;
}

template <class Visit>
void marked_backtrack(const std::vector<int>& shape_parts, std::vector<int>& remaining,
                      std::vector<std::vector<int>>& enc, size_t r, size_t c,
                      const Visit& visit) {
    if (r == shape_parts.size()) {
        visit(enc);
        return;
    }
    size_t nr = r, nc = c + 1;
    if (nc >= size_t(shape_parts[r])) { nr = r + 1; nc = 0; }
    // cell (r, c) in row-local coordinates; global column = r + c;
    // the cell above (if any) is row r-1, global col r + c, local c + 1
    const int left = c > 0 ? enc[r][c - 1] : 0;
    const int above =
        (r > 0 && c + 1 < size_t(shape_parts[r - 1])) ? enc[r - 1][c + 1] : 0;
    for (int k = 1; k <= int(remaining.size()); ++k) {
        if (remaining[size_t(k - 1)] == 0) continue;
        for (int cand : {2 * k - 1, 2 * k}) {
            if (!marked_ok(above, left, cand)) continue;
            --remaining[size_t(k - 1)];
            enc[r][c] = cand;
            marked_backtrack(shape_parts, remaining, enc, nr, nc, visit);
            ++remaining[size_t(k - 1)];
        }
    }
}

} // namespace detail

/// Runs `visit` over all marked shifted tableaux of the given shape and
/// weight composition, filling cells in row-major order of the shifted
/// diagram.
inline void for_each_marked_shifted(const StrictPartition& shape,
                                    const std::vector<int>& weight,
                                    const std::function<void(const MarkedShiftedTableau&)>& visit) {
    int total = 0;
    for (int w : weight) {
        if (w < 0) throw std::invalid_argument("for_each_marked_shifted: negative weight");
        total += w;
    }
    if (total != shape.size())
        throw std::invalid_argument("for_each_marked_shifted: weight size does not match shape");
    if (shape.length() == 0) {
        MarkedShiftedTableau t{shape, {}};
        visit(t);
        return;
    }
    std::vector<std::vector<int>> enc;
    for (int p : shape.parts()) enc.emplace_back(size_t(p), 0);
    std::vector<int> remaining = weight;
    detail::marked_backtrack(shape.parts(), remaining, enc, 0, 0,
                             [&](const std::vector<std::vector<int>>& filled) {
                                 MarkedShiftedTableau t;
                                 t.shape = shape;
                                 t.rows = filled;
                                 for (auto& row : t.rows)
                                     for (int& e : row)
                                         e = (e % 2 == 0) ? e / 2 : -(e + 1) / 2;
                                 visit(t);
                             });
}

/// Number of marked shifted tableaux of the given shape and weight.
inline long long count_marked_shifted(const StrictPartition& shape,
                                      const std::vector<int>& weight) {
    long long n = 0;
    for_each_marked_shifted(shape, weight, [&](const MarkedShiftedTableau&) { ++n; });
    return n;
}
inline long long count_marked_shifted(const StrictPartition& shape, const Partition& weight) {
    return count_marked_shifted(shape, weight.parts());
}

inline std::vector<MarkedShiftedTableau> enumerate_marked_shifted(
    const StrictPartition& shape, const std::vector<int>& weight) {
    std::vector<MarkedShiftedTableau> out;
    for_each_marked_shifted(shape, weight, [&](const MarkedShiftedTableau& t) { out.push_back(t); });
    return out;
}

/// Number of standard shifted tableaux (unmarked, entries 1..n strictly
/// increasing along rows and columns of the shifted diagram).
inline long long standard_shifted_count(const StrictPartition& shape) {
    const int n = shape.size();
    if (n == 0) return 1;
    std::vector<std::vector<int>> enc;
    for (int p : shape.parts()) enc.emplace_back(size_t(p), 0);
    long long count = 0;
    // place 1..n in increasing order on the frontier: first empty cell of
    // each row, provided the cell above it (local index c+1 in the row
    // above, which always exists inside a shifted diagram) is filled
    std::function<void(int)> place = [&](int next) {
        if (next > n) { ++count; return; }
        for (size_t r = 0; r < enc.size(); ++r) {
            size_t c = 0;
            while (c < enc[r].size() && enc[r][c] != 0) ++c;
            if (c == enc[r].size()) continue;
            if (r > 0 && enc[r - 1][c + 1] == 0) continue;
            enc[r][c] = next;
            place(next + 1);
            enc[r][c] = 0;
        }
    };
    place(1);
    return count;
}

} // namespace spinkostka
