#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace fockcanon {

namespace detail {

struct LrKey {
    std::vector<int> outer, alpha, beta;
    bool operator==(const LrKey&) const = default;
};

struct LrKeyHash {
    std::size_t operator()(const LrKey& k) const {
        std::size_t h = 1469598103934665603ull;
        auto mix = [&h](const std::vector<int>& v) {
            h ^= v.size() + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
            for (int x : v) {
                h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
                h *= 1099511628211ull;
            }
        };
        mix(k.outer);
        mix(k.alpha);
        mix(k.beta);
        return h;
    }
};

// Count skew semistandard tableaux of shape outer/alpha and content beta
// whose reverse reading word (right to left along rows, top row first) is a
// lattice word.  Cells are filled in exactly that order, so the lattice
// property is enforced incrementally.
inline long long count_lattice_fillings(const Partition& outer, const Partition& alpha,
                                        const Partition& beta) {
    const int rows = outer.length();
    const int k = beta.length();
    struct Cell {
        int r, c;
    };
    std::vector<Cell> cells;
    for (int r = 1; r <= rows; ++r)
        for (int c = outer.part(r); c > alpha.part(r); --c) cells.push_back({r, c});

    std::vector<std::vector<int>> val(static_cast<std::size_t>(rows + 1));
    for (int r = 1; r <= rows; ++r)
        val[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(outer.part(r) + 1), 0);
    std::vector<int> count(static_cast<std::size_t>(k + 1), 0);

    long long total = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        const auto [r, c] = cells[idx];
        int hi = k;
        if (c + 1 <= outer.part(r))  // row weakly increasing
            hi = std::min(hi, val[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)]);
        int lo = 1;
        if (r > 1 && c <= outer.part(r - 1) && c > alpha.part(r - 1))  // column strict
            lo = std::max(lo, val[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        for (int v = lo; v <= hi; ++v) {
            auto vi = static_cast<std::size_t>(v);
            if (count[vi] + 1 > beta.part(v)) continue;        // content bound
            if (v >= 2 && count[vi] + 1 > count[vi - 1]) continue;  // lattice word
            ++count[vi];
            val[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            rec(idx + 1);
            --count[vi];
            val[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
        }
    };
    rec(0);
    return total;
}

}  // namespace detail

// Littlewood-Richardson coefficient c^{outer}_{alpha,beta}.  Memoized;
// the shared table is guarded for concurrent callers.
inline long long lr_coefficient(const Partition& outer, const Partition& alpha,
                                const Partition& beta) {
    if (outer.size() != alpha.size() + beta.size()) return 0;
    for (int i = 1; i <= alpha.length(); ++i)
        if (alpha.part(i) > outer.part(i)) return 0;
    if (alpha == outer) return beta.empty() ? 1 : 0;

    static std::unordered_map<detail::LrKey, long long, detail::LrKeyHash> memo;
    static std::shared_mutex mx;
    detail::LrKey key{outer.parts(), alpha.parts(), beta.parts()};
    {
        std::shared_lock lock(mx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    long long value = detail::count_lattice_fillings(outer, alpha, beta);
    {
        std::unique_lock lock(mx);
        memo.emplace(std::move(key), value);
    }
    return value;
}

// --- independent oracle ------------------------------------------------------
//
// Expands the product s_alpha * s_beta in the Schur basis by brute force:
// both factors are expanded into monomials in m = |alpha|+|beta| variables by
// enumerating semistandard tableaux, the polynomials are multiplied, and the
// product is decomposed by repeatedly stripping the lexicographically leading
// monomial (whose exponent is a partition) times a full Schur polynomial.
// Shares no code with the tableau count above.

namespace detail {

using Monomials = std::map<std::vector<int>, long long>;

inline void ssyt_enumerate(const Partition& shape, int m, Monomials& out) {
    const int rows = shape.length();
    std::vector<std::vector<int>> val(static_cast<std::size_t>(rows + 1));
    for (int r = 1; r <= rows; ++r)
        val[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape.part(r) + 1), 0);
    std::vector<int> weight(static_cast<std::size_t>(m), 0);

    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r > rows) {
            ++out[weight];
            return;
        }
        int nr = r, nc = c + 1;
        if (nc > shape.part(r)) {
            nr = r + 1;
            nc = 1;
        }
        int lo = 1;
        if (c > 1) lo = std::max(lo, val[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
        if (r > 1 && c <= shape.part(r - 1))
            lo = std::max(lo, val[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        for (int v = lo; v <= m; ++v) {
            val[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            ++weight[static_cast<std::size_t>(v - 1)];
            rec(nr, nc);
            --weight[static_cast<std::size_t>(v - 1)];
            val[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
        }
    };
    if (rows == 0) {
        ++out[weight];
        return;
    }
    rec(1, 1);
}

// memoized monomial expansion of one Schur polynomial
inline const Monomials& schur_monomials(const Partition& shape, int m) {
    static std::map<std::pair<std::vector<int>, int>, Monomials> memo;
    static std::shared_mutex mx;
    std::pair<std::vector<int>, int> key{shape.parts(), m};
    {
        std::shared_lock lock(mx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    Monomials out;
    ssyt_enumerate(shape, m, out);
    std::unique_lock lock(mx);
    return memo.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace detail

inline std::map<Partition, long long, LexGreater> schur_product_oracle(const Partition& alpha,
                                                                       const Partition& beta,
                                                                       int bound = 10) {
    if (alpha.size() + beta.size() > bound)
        throw std::invalid_argument("schur_product_oracle: degree exceeds oracle bound");
    const int m = static_cast<int>(std::max<long long>(1, alpha.size() + beta.size()));

    detail::Monomials prod;
    const auto& ma = detail::schur_monomials(alpha, m);
    const auto& mb = detail::schur_monomials(beta, m);
    std::vector<int> sum(static_cast<std::size_t>(m));
    for (const auto& [wa, ca] : ma)
        for (const auto& [wb, cb] : mb) {
            for (int i = 0; i < m; ++i)
                sum[static_cast<std::size_t>(i)] =
                    wa[static_cast<std::size_t>(i)] + wb[static_cast<std::size_t>(i)];
            prod[sum] += ca * cb;
        }
    for (auto it = prod.begin(); it != prod.end();)
        it = it->second == 0 ? prod.erase(it) : std::next(it);

    std::map<Partition, long long, LexGreater> out;
    while (!prod.empty()) {
        const auto lead = std::prev(prod.end());  // lex-largest exponent
        std::vector<int> w = lead->first;
        long long c = lead->second;
        Partition gamma;
        try {
            gamma = Partition(w);  // leading exponent of a symmetric poly is sorted
        } catch (const std::invalid_argument&) {
            throw InternalError("oracle: leading monomial exponent is not a partition");
        }
        if (c <= 0) throw InternalError("oracle: nonpositive leading coefficient");
        out[gamma] = c;
        for (const auto& [wg, cg] : detail::schur_monomials(gamma, m)) {
            auto it = prod.find(wg);
            if (it == prod.end()) {
                if (c * cg != 0) prod[wg] = -c * cg;
            } else {
                it->second -= c * cg;
                if (it->second == 0) prod.erase(it);
            }
        }
    }
    return out;
}

}  // namespace fockcanon
