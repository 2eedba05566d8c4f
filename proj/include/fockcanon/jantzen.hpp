#pragma once
// Induced e-sequences, single-bead move relations, the partial orders they
// generate, and the alternating sum that bounds decomposition numbers.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "abacus.hpp"
#include "blocks.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "partition.hpp"

namespace fockcanon {

struct InducedSequence {
    std::vector<int> values;  // weakly decreasing, one term per unit of e-weight
    int beads = 0;            // the display size used
};

// Merge, over every bead of positive weight w at position a, the arithmetic
// progression a, a-e, ..., a-(w-1)e, sorted weakly decreasing.
inline InducedSequence induced_sequence(const Partition& lambda, int e, int t) {
    AbacusDisplay d = to_abacus(lambda, e, t);
    InducedSequence out;
    out.beads = t;
    for (int a : d.occupied) {
        int w = bead_weight(d, a);
        for (int j = 0; j < w; ++j) out.values.push_back(a - j * e);
    }
    std::sort(out.values.begin(), out.values.end(), std::greater<int>());
    return out;
}

struct BeadMove {
    Partition source;
    Partition target;
    int from = 0;       // occupied position a in the source display
    int to = 0;         // vacant position a - hops*e
    int hops = 0;       // i >= 1
    int crossings = 0;  // occupied positions strictly between, any runner
};

// All single-bead relocations up a runner (target vacant), with hop and
// crossing counts.  Every vacant slot above every bead yields one move.
inline std::vector<BeadMove> upward_moves(const Partition& lambda, int e, int t) {
    AbacusDisplay d = to_abacus(lambda, e, t);
    std::vector<BeadMove> out;
    for (std::size_t idx = 0; idx < d.occupied.size(); ++idx) {
        int a = d.occupied[idx];
        for (int i = 1; a - i * e >= 0; ++i) {
            int b = a - i * e;
            if (std::binary_search(d.occupied.begin(), d.occupied.end(), b)) continue;
            BeadMove mv;
            mv.source = lambda;
            mv.from = a;
            mv.to = b;
            mv.hops = i;
            for (int q : d.occupied)
                if (q > b && q < a) ++mv.crossings;
            AbacusDisplay moved = d;
            moved.occupied[idx] = b;
            std::sort(moved.occupied.begin(), moved.occupied.end());
            mv.target = from_abacus(moved);
            out.push_back(std::move(mv));
        }
    }
    return out;
}

struct ArrowPair {
    Partition lambda;  // start
    Partition sigma;   // after the upward move
    Partition tau;     // after re-inserting a bead below, same size as lambda
    int hops = 0;      // shared hop count of both moves
    int from_a = 0;    // position vacated in lambda
    int to_b = 0;      // position filled in tau (to_b > from_a)
    int l_lambda_sigma = 0;  // crossings of the move lambda -> sigma
    int l_tau_sigma = 0;     // crossings of the move tau -> sigma
};

// For each upward move lambda -> sigma (bead a -> a-ie), every re-insertion
// q -> q+ie with q occupied in sigma, target vacant, and landing position
// beyond a.  The result tau has the size, core, and weight of lambda.
inline std::vector<ArrowPair> arrow_pairs(const Partition& lambda, int e, int t) {
    std::vector<ArrowPair> out;
    for (const BeadMove& mv : upward_moves(lambda, e, t)) {
        AbacusDisplay s = to_abacus(mv.target, e, t);
        for (std::size_t idx = 0; idx < s.occupied.size(); ++idx) {
            int q = s.occupied[idx];
            int b = q + mv.hops * e;
            if (b <= mv.from) continue;
            if (std::binary_search(s.occupied.begin(), s.occupied.end(), b)) continue;
            ArrowPair ap;
            ap.lambda = lambda;
            ap.sigma = mv.target;
            ap.hops = mv.hops;
            ap.from_a = mv.from;
            ap.to_b = b;
            ap.l_lambda_sigma = mv.crossings;
            for (int p : s.occupied)
                if (p > q && p < b) ++ap.l_tau_sigma;
            AbacusDisplay moved = s;
            moved.occupied[idx] = b;
            std::sort(moved.occupied.begin(), moved.occupied.end());
            ap.tau = from_abacus(moved);
            out.push_back(std::move(ap));
        }
    }
    return out;
}

// Display size shared by two partitions of one block: l(core) + N*e with N
// at least the weight + 1 and large enough for both lengths.
inline int common_display_beads(const Partition& a, const Partition& b, int e) {
    Partition core = e_core(a, e);
    int N = std::max(e_weight(a, e), e_weight(b, e)) + 1;
    while (core.length() + N * e < std::max(a.length(), b.length())) ++N;
    return core.length() + N * e;
}

// Term-wise comparison of induced sequences on a common display; requires
// equal cores and weights.
inline bool leq_p(const Partition& lambda, const Partition& mu, int e) {
    if (e_core(lambda, e) != e_core(mu, e)) return false;
    if (e_weight(lambda, e) != e_weight(mu, e)) return false;
    int t = common_display_beads(lambda, mu, e);
    std::vector<int> sl = induced_sequence(lambda, e, t).values;
    std::vector<int> sm = induced_sequence(mu, e, t).values;
    for (std::size_t j = 0; j < sl.size(); ++j)
        if (sl[j] > sm[j]) return false;
    return true;
}

// Reachability of mu from lambda along arrow targets (which climb within
// the block); reflexive.
inline bool leq_J(const Partition& lambda, const Partition& mu, int e) {
    if (lambda == mu) return true;
    if (e_core(lambda, e) != e_core(mu, e)) return false;
    if (e_weight(lambda, e) != e_weight(mu, e)) return false;
    int t = common_display_beads(lambda, mu, e);
    std::set<Partition, LexLess> seen{lambda};
    std::deque<Partition> queue{lambda};
    while (!queue.empty()) {
        Partition cur = queue.front();
        queue.pop_front();
        for (const ArrowPair& ap : arrow_pairs(cur, e, t)) {
            if (ap.tau == mu) return true;
            if (seen.insert(ap.tau).second) queue.push_back(ap.tau);
        }
    }
    return false;
}

// Same core and component-wise equal quotient sizes.
inline bool approx_equiv(const Partition& lambda, const Partition& mu, int e) {
    CoreQuotient lq = core_and_quotient(lambda, e);
    CoreQuotient mq = core_and_quotient(mu, e);
    if (lq.core != mq.core) return false;
    for (int i = 0; i < e; ++i)
        if (lq.quotient[static_cast<std::size_t>(i)].size() !=
            mq.quotient[static_cast<std::size_t>(i)].size())
            return false;
    return true;
}

// l-adic valuation with the degenerate characteristics 0 and 1 mapping to
// the zero valuation.
inline int characteristic_valuation(int l, int x) {
    if (x <= 0) throw std::invalid_argument("valuation argument must be positive");
    if (l <= 1) return 0;
    int v = 0;
    while (x % l == 0) {
        x /= l;
        ++v;
    }
    return v;
}

// The alternating bound sum_{arrows} (-1)^(l1+l2+1) (1 + val_l(hops)) d[tau].
// The column maps every member of lambda's block to its d-value; labels from
// a different block short-circuit to 0.
inline Int jantzen_sum(const Partition& lambda, const Partition& mu, int e, int l,
                       const std::map<Partition, Int, LexGreater>& column) {
    if (lambda == mu)
        throw std::invalid_argument("the bound is defined for distinct partitions");
    if (l < 0) throw std::invalid_argument("characteristic must be nonnegative");
    if (e_core(lambda, e) != e_core(mu, e) || e_weight(lambda, e) != e_weight(mu, e))
        return 0;
    int t = common_display_beads(lambda, mu, e);
    Int total = 0;
    for (const ArrowPair& ap : arrow_pairs(lambda, e, t)) {
        auto it = column.find(ap.tau);
        if (it == column.end())
            throw std::invalid_argument("column is missing the block member (" +
                                        to_string(ap.tau) + ")");
        if (it->second == 0) continue;
        int sign = (ap.l_lambda_sigma + ap.l_tau_sigma + 1) % 2 == 0 ? 1 : -1;
        Int weight = 1 + characteristic_valuation(l, ap.hops);
        total += sign * weight * it->second;
    }
    return total;
}

}  // namespace fockcanon
