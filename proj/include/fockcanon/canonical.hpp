#pragma once
// Canonical basis columns and the closed column formula.
//
// Three independent constructions live here:
//   * h_vector: the closed formula H(mu) = sum_lambda C v^delta lambda,
//     built from Littlewood-Richardson coefficients chained along the
//     runner order of the core;
//   * llt_canonical: the ladder construction of the canonical basis
//     column G(mu) for e-regular mu, with bar-symmetric peeling;
//   * mullineux: the involution on e-regular partitions computed through
//     good-node residue words.
// The membership test for the locally-small class, and the runner-swap
// reduction toward weakly-increasing bead counts, also live here.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abacus.hpp"
#include "blocks.hpp"
#include "core_profile.hpp"
#include "errors.hpp"
#include "fock.hpp"
#include "laurent.hpp"
#include "lr.hpp"
#include "partition.hpp"

namespace fockcanon {

// --- closed column formula ---------------------------------------------------

// Weighted quotient-size difference sum_{j=1}^{e-1} pi(j)(|mu^j| - |lambda^j|);
// 0 by convention when the cores differ.
inline long long delta_exponent(const Partition& lambda, const Partition& mu, int e) {
    CoreQuotient lq = core_and_quotient(lambda, e);
    CoreQuotient mq = core_and_quotient(mu, e);
    if (lq.core != mq.core) return 0;
    CoreProfile prof = core_profile(lq.core, e);
    long long d = 0;
    for (int j = 1; j < e; ++j)
        d += static_cast<long long>(prof.pi[static_cast<std::size_t>(j)]) *
             (mq.quotient[static_cast<std::size_t>(j)].size() -
              lq.quotient[static_cast<std::size_t>(j)].size());
    return d;
}

namespace detail {

// The coefficient sum over tuples (alpha^j, beta^j): each runner j
// contributes c^{lambda^j}_{alpha^j beta^j} * c^{mu^j}_{(beta^{j-})' alpha^j},
// where j- is the runner-order predecessor and beta vanishes at both chain
// ends.  Consecutive chain positions couple only through beta, so the sum
// collapses to a walk along the chain with the current beta as state.
inline Int c_coefficient_on_core(const CoreQuotient& lq, const CoreQuotient& mq,
                                 const CoreProfile& prof) {
    int e = prof.e;
    std::map<Partition, Int, LexLess> state{{Partition{}, Int(1)}};
    for (int pos = 0; pos < e; ++pos) {
        int j = prof.chain[static_cast<std::size_t>(pos)];
        const Partition& lj = lq.quotient[static_cast<std::size_t>(j)];
        const Partition& mj = mq.quotient[static_cast<std::size_t>(j)];
        std::map<Partition, Int, LexLess> next;
        if (pos == e - 1) {
            // Last chain position: beta is empty, so alpha is forced to be
            // the whole quotient component of lambda.
            for (const auto& [bprev, coef] : state) {
                long long cm = lr_coefficient(mj, conjugate(bprev), lj);
                if (cm == 0) continue;
                next[Partition{}] += coef * cm;
            }
        } else {
            for (const auto& [bprev, coef] : state) {
                long long asize = mj.size() - bprev.size();
                long long bsize = lj.size() - asize;
                if (asize < 0 || bsize < 0) continue;
                for (const Partition& alpha : all_partitions(static_cast<int>(asize))) {
                    long long cm = lr_coefficient(mj, conjugate(bprev), alpha);
                    if (cm == 0) continue;
                    for (const Partition& beta : all_partitions(static_cast<int>(bsize))) {
                        long long cl = lr_coefficient(lj, alpha, beta);
                        if (cl == 0) continue;
                        next[beta] += coef * (cm * cl);
                    }
                }
            }
        }
        state = std::move(next);
        if (state.empty()) return 0;
    }
    auto it = state.find(Partition{});
    return it == state.end() ? Int(0) : it->second;
}

}  // namespace detail

// The closed-formula coefficient; 0 by convention when the cores differ.
inline Int c_coefficient(const Partition& lambda, const Partition& mu, int e) {
    CoreQuotient lq = core_and_quotient(lambda, e);
    CoreQuotient mq = core_and_quotient(mu, e);
    if (lq.core != mq.core) return 0;
    return detail::c_coefficient_on_core(lq, mq, core_profile(lq.core, e));
}

// The closed column H(mu) = sum_lambda C v^delta lambda, summed over the
// block of mu (all quotient tuples of the same total size on mu's core).
// Total on all partitions; class membership is checked separately.
inline FockVector h_vector(const Partition& mu, int e) {
    CoreQuotient mq = core_and_quotient(mu, e);
    CoreProfile prof = core_profile(mq.core, e);
    int w = mq.weight();
    FockVector out;
    for (const auto& tuple : quotient_tuples(w, e)) {
        Partition lambda = from_core_and_quotient(mq.core, tuple, e);
        CoreQuotient lq = core_and_quotient(lambda, e);
        Int c = detail::c_coefficient_on_core(lq, mq, prof);
        if (c == 0) continue;
        long long d = 0;
        for (int j = 1; j < e; ++j)
            d += static_cast<long long>(prof.pi[static_cast<std::size_t>(j)]) *
                 (mq.quotient[static_cast<std::size_t>(j)].size() -
                  lq.quotient[static_cast<std::size_t>(j)].size());
        out.add_term(lambda, Laurent::monomial(static_cast<int>(d), c));
    }
    return out;
}

// --- locally small quotients --------------------------------------------------

struct PstarDiagnosis {
    bool member = true;
    std::vector<int> condition1_violations;                 // runner index i
    std::vector<std::pair<int, int>> condition2_violations;  // pair (i, j)
};

// Membership test for the class of partitions with locally small quotients
// over the core: (1) each runner's quotient size, together with its two
// runner-order neighbours, stays within d_i + 1; (2) saturated pairs i < j
// in the runner order need an intermediate runner with positive gap.
inline PstarDiagnosis pstar_check(const Partition& kappa, int e, const Partition& mu) {
    if (!is_e_core(kappa, e)) throw std::invalid_argument("core argument is not an e-core");
    CoreQuotient mq = core_and_quotient(mu, e);
    if (mq.core != kappa)
        throw std::invalid_argument("partition does not have the given e-core");
    CoreProfile prof = core_profile(kappa, e);
    auto qsize = [&](std::optional<int> i) -> long long {
        return i ? mq.quotient[static_cast<std::size_t>(*i)].size() : 0;
    };
    PstarDiagnosis diag;
    for (int i = 1; i < e; ++i) {
        long long total = qsize(prof.pred(i)) + qsize(i) + qsize(prof.succ(i));
        if (total > prof.d[static_cast<std::size_t>(i)] + 1) {
            diag.member = false;
            diag.condition1_violations.push_back(i);
        }
    }
    for (int i = 1; i < e; ++i) {
        if (qsize(prof.pred(i)) + qsize(i) != prof.d[static_cast<std::size_t>(i)] + 1) continue;
        for (int j = 1; j < e; ++j) {
            if (!prof.precedes(i, j)) continue;
            if (qsize(j) + qsize(prof.succ(j)) != prof.d[static_cast<std::size_t>(j)] + 1) continue;
            bool witness = false;
            for (int k = 1; k < e && !witness; ++k)
                if (prof.precedes(i, k) && prof.precedes(k, j) &&
                    prof.d[static_cast<std::size_t>(k)] > 0)
                    witness = true;
            if (!witness) {
                diag.member = false;
                diag.condition2_violations.emplace_back(i, j);
            }
        }
    }
    return diag;
}

inline bool pstar_contains(const Partition& kappa, int e, const Partition& mu) {
    return pstar_check(kappa, e, mu).member;
}

// --- crystal good nodes -------------------------------------------------------

namespace detail {

// Reduced residue signature on a display: events at position pairs
// (p, p+1) with p on runner i-1, scanned in ascending p, where a bead
// ready to move forward is an addable event 'A' and a bead ready to move
// back is a removable event 'R'.  Earlier-R/later-A pairs cancel; the
// survivors form a block of A's followed by a block of R's.
inline std::vector<std::pair<char, int>> reduced_signature(const AbacusDisplay& d, int i) {
    std::vector<std::pair<char, int>> stack;
    int top = d.occupied.empty() ? 0 : d.occupied.back();
    for (int p = i - 1; p <= top; p += d.e) {
        bool source = occupied_contains(d.occupied, p);
        bool target = occupied_contains(d.occupied, p + 1);
        if (source && !target) {
            if (!stack.empty() && stack.back().first == 'R')
                stack.pop_back();
            else
                stack.emplace_back('A', p);
        } else if (!source && target) {
            stack.emplace_back('R', p);
        }
    }
    return stack;
}

}  // namespace detail

// Remove the good removable node of residue r (the first surviving
// removable event), if any.
inline std::optional<Partition> good_removable(const Partition& mu, int e, int r) {
    int t = select_bead_count(FockVector::basis(mu), r, e);
    AbacusDisplay d = to_abacus(mu, e, t);
    int i = (r + t) % e;
    for (const auto& [kind, p] : detail::reduced_signature(d, i)) {
        if (kind != 'R') continue;
        for (int& q : d.occupied)
            if (q == p + 1) q = p;
        std::sort(d.occupied.begin(), d.occupied.end());
        return from_abacus(d);
    }
    return std::nullopt;
}

// Add the good addable node of residue r (the last surviving addable
// event), if any.
inline std::optional<Partition> good_addable(const Partition& mu, int e, int r) {
    int t = select_bead_count(FockVector::basis(mu), r, e);
    AbacusDisplay d = to_abacus(mu, e, t);
    int i = (r + t) % e;
    auto sig = detail::reduced_signature(d, i);
    for (auto it = sig.rbegin(); it != sig.rend(); ++it) {
        if (it->first != 'A') continue;
        for (int& q : d.occupied)
            if (q == it->second) q = it->second + 1;
        std::sort(d.occupied.begin(), d.occupied.end());
        return from_abacus(d);
    }
    return std::nullopt;
}

// The involution on e-regular partitions: strip good nodes down to the
// empty partition recording the residue word, then rebuild by adding good
// nodes with negated residues in reverse order.
inline Partition mullineux(const Partition& mu, int e) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    if (!is_e_regular(mu, e)) throw std::invalid_argument("input must be e-regular");
    std::vector<int> word;
    Partition nu = mu;
    while (!nu.empty()) {
        bool found = false;
        for (int r = 0; r < e && !found; ++r) {
            if (auto next = good_removable(nu, e, r)) {
                word.push_back(r);
                nu = *next;
                found = true;
            }
        }
        if (!found)
            throw InternalError("nonempty e-regular partition without a good removable node");
    }
    Partition xi;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int r = ((-*it) % e + e) % e;
        auto next = good_addable(xi, e, r);
        if (!next) throw InternalError("good addable node missing during rebuild");
        xi = *next;
    }
    return xi;
}

// --- ladder construction -----------------------------------------------------

// Node (a, b) lies on ladder a + (e-1)(b-1): stepping e-1 rows down and one
// column left stays on the ladder, so all nodes of one ladder share the
// residue (b - a) mod e.  The steps list ladders in increasing index order
// with the node count each contributes.
struct LadderStep {
    int index = 0;
    int residue = 0;
    int count = 0;
};

inline std::vector<LadderStep> ladder_sequence(const Partition& mu, int e) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    std::map<int, LadderStep> ladders;
    for (int a = 1; a <= mu.length(); ++a)
        for (int b = 1; b <= mu.part(a); ++b) {
            int L = a + (e - 1) * (b - 1);
            int r = ((b - a) % e + e) % e;
            auto [it, fresh] = ladders.try_emplace(L, LadderStep{L, r, 0});
            if (!fresh && it->second.residue != r)
                throw InternalError("conflicting residues on one ladder");
            ++it->second.count;
        }
    std::vector<LadderStep> out;
    out.reserve(ladders.size());
    for (const auto& [L, step] : ladders) out.push_back(step);
    return out;
}

// The ladder monomial: divided f-powers along the ladder decomposition of
// mu, applied to the empty partition.  Equals mu plus lexicographically
// smaller terms.
inline FockVector ladder_monomial(const Partition& mu, int e) {
    FockVector x = FockVector::basis(Partition{});
    for (const LadderStep& step : ladder_sequence(mu, e))
        x = divided_power_auto(x, StepKind::f, step.residue, step.count, e);
    return x;
}

// --- canonical basis columns --------------------------------------------------

struct CanonicalColumn {
    Partition mu;
    FockVector vector;
    int e = 2;
};

namespace detail {

inline void validate_column(const Partition& mu, const FockVector& vec, int e) {
    if (vec.coefficient(mu) != Laurent::one())
        throw InternalError("column coefficient at its label is not 1");
    Partition core = e_core(mu, e);
    for (const auto& [lam, c] : vec.terms()) {
        if (lam == mu) continue;
        if (!c.in_v_nonneg())
            throw InternalError("off-label column coefficient escapes vN0[v]: (" +
                                to_string(lam) + ") -> " + c.str());
        if (!dominates(mu, lam))
            throw InternalError("column support is not dominated by its label");
        if (e_core(lam, e) != core)
            throw InternalError("column support leaves the block of its label");
    }
}

}  // namespace detail

// All canonical basis columns for e-regular partitions of n, in increasing
// lexicographic label order.  Each column is the ladder monomial of its
// label with bar-symmetric multiples of earlier columns peeled off.
inline std::vector<CanonicalColumn> llt_canonical(int n, int e) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    std::vector<Partition> labels = e_regular_partitions(n, e);
    std::reverse(labels.begin(), labels.end());  // ascending lex
    std::vector<CanonicalColumn> cols;
    cols.reserve(labels.size());
    for (const Partition& mu : labels) {
        FockVector a = ladder_monomial(mu, e);
        for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
            Laurent b = bar_symmetric_closure(a.coefficient(it->mu));
            if (!b.is_zero()) a -= b * it->vector;
        }
        detail::validate_column(mu, a, e);
        cols.push_back(CanonicalColumn{mu, std::move(a), e});
    }
    return cols;
}

// Coefficient of lambda in the column (the zero polynomial if absent).
inline Laurent decomposition_column(const CanonicalColumn& col, const Partition& lambda) {
    return col.vector.coefficient(lambda);
}

// --- runner-swap reduction ----------------------------------------------------

// Interchange runners i-1 and i of the display of p, normalized to
// l(kappa) + N*e beads (kappa = the e-core of p's block).  Beads on runner
// i-1 advance one position, beads on runner i retreat one.
inline Partition swap_runners(const Partition& p, const Partition& kappa, int e, int i) {
    if (i < 2 || i >= e) throw std::invalid_argument("runner swap index must lie in 2..e-1");
    int N = e_weight(p, e) + 1;
    while (kappa.length() + N * e < p.length()) ++N;
    AbacusDisplay d = to_abacus(p, e, kappa.length() + N * e);
    for (int& q : d.occupied) {
        int rr = q % e;
        if (rr == i - 1)
            ++q;
        else if (rr == i)
            --q;
    }
    std::sort(d.occupied.begin(), d.occupied.end());
    return from_abacus(d);
}

struct SwapStep {
    int i = 0;          // runners i-1 and i are interchanged
    int r = 0;          // operator index (i - l(core)) mod e for the step identities
    int k = 0;          // divided power order: bead-count difference n_{i-1} - n_i
    Partition before;   // core before the step
    Partition after;    // core after the step
};

struct RouquierReduction {
    std::vector<SwapStep> steps;
    Partition terminal;  // core with weakly increasing bead counts
};

// Repeatedly swap the leftmost adjacent descent among runners 1..e-1 until
// the bead counts increase weakly; the inversion count strictly decreases
// at every step.
inline RouquierReduction rouquier_reduction(const Partition& kappa, int e) {
    RouquierReduction out;
    Partition core = kappa;
    CoreProfile prof = core_profile(core, e);
    while (prof.inversions > 0) {
        int chosen = -1;
        for (int i = 2; i < e && chosen < 0; ++i)
            if (prof.n[static_cast<std::size_t>(i - 1)] > prof.n[static_cast<std::size_t>(i)])
                chosen = i;
        if (chosen < 0)
            throw InternalError("inversions remain but no adjacent descent exists");
        SwapStep step;
        step.i = chosen;
        step.k = prof.n[static_cast<std::size_t>(chosen - 1)] -
                 prof.n[static_cast<std::size_t>(chosen)];
        step.r = ((chosen - core.length()) % e + e) % e;
        step.before = core;
        step.after = swap_runners(core, core, e, chosen);
        out.steps.push_back(step);
        CoreProfile nprof = core_profile(step.after, e);
        if (nprof.inversions >= prof.inversions)
            throw InternalError("runner swap did not reduce the inversion count");
        core = step.after;
        prof = std::move(nprof);
    }
    out.terminal = core;
    return out;
}

}  // namespace fockcanon
