#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "abacus.hpp"
#include "errors.hpp"
#include "partition.hpp"

namespace fockcanon {

// Runner-order profile of an e-core.
//
// Display the core with l(kappa) + N*e beads and let n_i be the number of
// beads on runner i.  Runners are totally ordered by
//     i <= j  iff  n_i < n_j, or n_i = n_j and i <= j,
// written i < j ("precedes") when strict.  Runner 0 is always minimal with
// this bead normalization.  The profile records, for the order:
//   chain       runners listed in increasing order
//   pi          pi[i] = position of runner i in the chain (pi[0] = 0, and
//               pi increments along the chain)
//   M           the maximal runner
//   phi[i]      (M - i) mod e
//   d[i]        for 1 <= i <= e-1, with p the predecessor of i in the chain:
//               n_i - n_p if p < i, and n_i - n_p - 1 if p > i
//   inversions  #{(i,j) : i < j as integers, j precedes i in the chain};
//   rouquier    true iff inversions == 0 iff pi is the identity.
//
// All fields except the raw counts n are independent of N.
struct CoreProfile {
    int e = 2;
    int N = 1;
    int beads = 0;
    std::vector<int> n;      // beads per runner, for this N
    std::vector<int> chain;  // runners in increasing runner-order
    std::vector<int> pi;     // pi[runner] = chain position
    int M = 0;
    std::vector<int> phi;
    std::vector<int> d;  // d[i] for i = 1..e-1; d[0] unused (0)
    long long inversions = 0;
    bool rouquier = true;

    // chain predecessor / successor of a runner (nullopt at the ends)
    std::optional<int> pred(int runner) const {
        int p = pi[static_cast<std::size_t>(runner)];
        if (p == 0) return std::nullopt;
        return chain[static_cast<std::size_t>(p - 1)];
    }
    std::optional<int> succ(int runner) const {
        int p = pi[static_cast<std::size_t>(runner)];
        if (p + 1 >= static_cast<int>(chain.size())) return std::nullopt;
        return chain[static_cast<std::size_t>(p + 1)];
    }
    // i precedes j strictly in the runner order
    bool precedes(int i, int j) const {
        return pi[static_cast<std::size_t>(i)] < pi[static_cast<std::size_t>(j)];
    }
};

inline CoreProfile core_profile(const Partition& kappa, int e, int N = 1) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    if (N < 1) throw std::invalid_argument("N must be at least 1");
    if (!is_e_core(kappa, e)) throw std::invalid_argument("partition is not an e-core");
    CoreProfile pr;
    pr.e = e;
    pr.N = N;
    pr.beads = kappa.length() + N * e;
    pr.n = runner_counts(to_abacus(kappa, e, pr.beads));

    pr.chain.resize(static_cast<std::size_t>(e));
    std::iota(pr.chain.begin(), pr.chain.end(), 0);
    std::stable_sort(pr.chain.begin(), pr.chain.end(), [&](int a, int b) {
        auto na = pr.n[static_cast<std::size_t>(a)], nb = pr.n[static_cast<std::size_t>(b)];
        return na != nb ? na < nb : a < b;
    });
    if (pr.chain.front() != 0)
        throw InternalError("runner 0 must be minimal in the runner order");

    pr.pi.assign(static_cast<std::size_t>(e), 0);
    for (int pos = 0; pos < e; ++pos) pr.pi[static_cast<std::size_t>(pr.chain[static_cast<std::size_t>(pos)])] = pos;
    pr.M = pr.chain.back();

    pr.phi.resize(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) pr.phi[static_cast<std::size_t>(i)] = ((pr.M - i) % e + e) % e;

    pr.d.assign(static_cast<std::size_t>(e), 0);
    for (int i = 1; i < e; ++i) {
        int p = *pr.pred(i);  // exists: runner 0 precedes every i >= 1
        int di = pr.n[static_cast<std::size_t>(i)] - pr.n[static_cast<std::size_t>(p)];
        if (p > i) --di;
        if (di < 0) throw InternalError("negative runner-order gap");
        pr.d[static_cast<std::size_t>(i)] = di;
    }

    pr.inversions = 0;
    for (int i = 0; i < e; ++i)
        for (int j = i + 1; j < e; ++j)
            if (pr.precedes(j, i)) ++pr.inversions;
    pr.rouquier = pr.inversions == 0;
    return pr;
}

}  // namespace fockcanon
