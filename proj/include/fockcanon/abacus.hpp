#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace fockcanon {

// James abacus display of a partition on e runners.
//
// A display with t beads marks the beta-numbers {lambda_i + t - i : 1<=i<=t}
// as occupied positions.  Position p sits on runner p mod e, row p div e;
// runner 0 is leftmost and row 0 is the top, so "above" means a smaller
// position on the same runner.
struct AbacusDisplay {
    int e = 2;
    int beads = 0;
    std::vector<int> occupied;  // sorted ascending, exactly `beads` entries
};

inline AbacusDisplay to_abacus(const Partition& lambda, int e, int beads) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    if (beads < lambda.length())
        throw std::invalid_argument("bead count must be at least the number of parts");
    AbacusDisplay d;
    d.e = e;
    d.beads = beads;
    d.occupied.reserve(static_cast<std::size_t>(beads));
    for (int i = beads; i >= 1; --i) d.occupied.push_back(lambda.part(i) + beads - i);
    return d;
}

inline Partition from_abacus(const AbacusDisplay& d) {
    if (static_cast<int>(d.occupied.size()) != d.beads)
        throw std::invalid_argument("bead count does not match occupied set");
    std::vector<int> sorted(d.occupied.begin(), d.occupied.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    std::vector<int> parts;
    for (int i = 0; i < d.beads; ++i) {
        int p = sorted[static_cast<std::size_t>(i)] - (d.beads - 1 - i);
        if (p < 0) throw std::invalid_argument("occupied set is not a valid beta-set");
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

// Occupied positions on one runner, ascending.
inline std::vector<int> runner_positions(const AbacusDisplay& d, int runner) {
    std::vector<int> out;
    for (int p : d.occupied)
        if (p % d.e == runner) out.push_back(p);
    return out;
}

// Beads per runner.
inline std::vector<int> runner_counts(const AbacusDisplay& d) {
    std::vector<int> n(static_cast<std::size_t>(d.e), 0);
    for (int p : d.occupied) ++n[static_cast<std::size_t>(p % d.e)];
    return n;
}

// Least vacant position on a runner (always exists).
inline int least_vacant(const AbacusDisplay& d, int runner) {
    auto occ = runner_positions(d, runner);
    int expect = runner;
    for (int p : occ) {
        if (p != expect) return expect;
        expect += d.e;
    }
    return expect;
}

// Largest occupied position on a runner, if any.
inline std::optional<int> largest_occupied(const AbacusDisplay& d, int runner) {
    auto occ = runner_positions(d, runner);
    if (occ.empty()) return std::nullopt;
    return occ.back();
}

// e-weight of one bead: vacant positions above it on its runner.
inline int bead_weight(const AbacusDisplay& d, int position) {
    int above = 0;
    for (int p : d.occupied)
        if (p < position && p % d.e == position % d.e) ++above;
    return position / d.e - above;
}

// Slide every bead to the top of its runner; same bead count.
inline AbacusDisplay pushed_up(const AbacusDisplay& d) {
    AbacusDisplay out;
    out.e = d.e;
    out.beads = d.beads;
    auto n = runner_counts(d);
    for (int i = 0; i < d.e; ++i)
        for (int k = 0; k < n[static_cast<std::size_t>(i)]; ++k)
            out.occupied.push_back(i + k * d.e);
    std::sort(out.occupied.begin(), out.occupied.end());
    return out;
}

inline Partition e_core(const Partition& lambda, int e) {
    return from_abacus(pushed_up(to_abacus(lambda, e, std::max(lambda.length(), 1))));
}

inline bool is_e_core(const Partition& lambda, int e) { return e_core(lambda, e) == lambda; }

// e-weight: number of e-hooks removed to reach the core.
inline int e_weight(const Partition& lambda, int e) {
    long long diff = lambda.size() - e_core(lambda, e).size();
    return static_cast<int>(diff / e);
}

// Core, quotient, and the display normalization that produced them.
//
// The quotient is read from a display with l(core) + N*e beads; component i
// is the partition traced by runner i read as a one-runner abacus.  With
// this bead-count convention the quotient is independent of N.
struct CoreQuotient {
    Partition core;
    std::vector<Partition> quotient;
    int e = 2;
    int N = 1;      // normalization multiplier actually used
    int beads = 0;  // l(core) + N*e
    int weight() const {
        int w = 0;
        for (const auto& q : quotient) w += static_cast<int>(q.size());
        return w;
    }
};

inline Partition quotient_component(const AbacusDisplay& d, int runner) {
    auto occ = runner_positions(d, runner);
    int n = static_cast<int>(occ.size());
    std::vector<int> parts;
    for (int j = n - 1; j >= 0; --j) {  // rows descending
        int row = occ[static_cast<std::size_t>(j)] / d.e;
        int part = row - j;
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

inline CoreQuotient core_and_quotient(const Partition& lambda, int e,
                                      std::optional<int> N = std::nullopt) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    CoreQuotient cq;
    cq.e = e;
    cq.core = e_core(lambda, e);
    int w = e_weight(lambda, e);
    int n = N.value_or(w + 1);
    if (n < 1) n = 1;
    while (cq.core.length() + n * e < lambda.length()) ++n;  // auto-raise
    cq.N = n;
    cq.beads = cq.core.length() + n * e;
    AbacusDisplay d = to_abacus(lambda, e, cq.beads);
    cq.quotient.reserve(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) cq.quotient.push_back(quotient_component(d, i));
    if (cq.weight() != w) throw InternalError("quotient weight mismatch");
    return cq;
}

// Rebuild the partition with the given core and quotient.  The result is
// independent of N; N is auto-raised until every runner holds its quotient
// component.
inline Partition from_core_and_quotient(const Partition& core,
                                        const std::vector<Partition>& quotient, int e,
                                        std::optional<int> N = std::nullopt) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    if (static_cast<int>(quotient.size()) != e)
        throw std::invalid_argument("quotient must have exactly e components");
    if (!is_e_core(core, e)) throw std::invalid_argument("core is not an e-core");
    int w = 0;
    for (const auto& q : quotient) w += static_cast<int>(q.size());
    int n = N.value_or(w + 1);
    if (n < 1) n = 1;
    for (;;) {
        int beads = core.length() + n * e;
        AbacusDisplay cd = to_abacus(core, e, beads);
        auto counts = runner_counts(cd);
        bool fits = true;
        for (int i = 0; i < e && fits; ++i)
            if (quotient[static_cast<std::size_t>(i)].length() > counts[static_cast<std::size_t>(i)])
                fits = false;
        if (!fits) {
            ++n;
            continue;
        }
        AbacusDisplay d;
        d.e = e;
        d.beads = beads;
        for (int i = 0; i < e; ++i) {
            int ni = counts[static_cast<std::size_t>(i)];
            const Partition& q = quotient[static_cast<std::size_t>(i)];
            // bead j (1-based from the largest row) sits on row q_j + ni - j
            for (int j = 1; j <= ni; ++j) d.occupied.push_back(i + (q.part(j) + ni - j) * e);
        }
        std::sort(d.occupied.begin(), d.occupied.end());
        return from_abacus(d);
    }
}

inline Partition from_core_and_quotient(const CoreQuotient& cq) {
    return from_core_and_quotient(cq.core, cq.quotient, cq.e, cq.N);
}

}  // namespace fockcanon
