#pragma once
// Exhaustive identity sweeps over bounded families of cores and blocks.
// Each mode enumerates its instances deterministically, checks exact
// polynomial or integer identities, and reports failures as data rather
// than exceptions.  Instance lists can be fanned out over worker threads;
// results are collected in enumeration order, so the report is identical
// for any thread count.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "abacus.hpp"
#include "blocks.hpp"
#include "cache.hpp"
#include "canonical.hpp"
#include "core_profile.hpp"
#include "errors.hpp"
#include "fock.hpp"
#include "jantzen.hpp"
#include "laurent.hpp"
#include "lr.hpp"
#include "partition.hpp"

namespace fockcanon {

struct VerifyOptions {
    int e = 2;
    std::optional<Partition> core;   // restrict sweeps to a single core
    std::optional<int> max_n;        // bound on partition sizes (mode default if unset)
    std::optional<int> max_core;     // bound on swept core sizes
    std::optional<int> max_weight;   // bound on block e-weights
    int jobs = 1;
    std::uint64_t seed = 20260816ULL;
    int samples = 200;
};

struct VerifyFailure {
    std::string instance;
    std::string detail;
};

struct VerifyReport {
    std::string mode;
    long long instances = 0;
    long long checks = 0;
    long long failures_total = 0;
    std::vector<VerifyFailure> failures;  // capped; failures_total is exact
    double seconds = 0.0;

    bool pass() const { return failures_total == 0; }

    std::string summary() const {
        std::ostringstream out;
        out << "mode " << mode << ": " << (pass() ? "PASS" : "FAIL") << " (" << instances
            << " instances, " << checks << " checks";
        if (!pass()) out << ", " << failures_total << " failures";
        out << ", " << seconds << "s)";
        return out.str();
    }
};

namespace detail {

inline constexpr std::size_t max_reported_failures = 25;

struct InstanceResult {
    long long checks = 0;
    std::vector<VerifyFailure> failures;

    void expect(bool ok, const std::string& instance, const std::string& detail) {
        ++checks;
        if (!ok) failures.push_back({instance, detail});
    }
};

template <typename Body>
inline void parallel_for(std::size_t count, int jobs, Body&& body) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i; (i = next.fetch_add(1)) < count;) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
                next.store(count);
            }
        });
    }
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& err : errors)
        if (err) std::rethrow_exception(err);
}

// Run `count` instance bodies (possibly in parallel) and fold their results
// into the report in enumeration order.
template <typename Body>
inline void run_instances(VerifyReport& report, std::size_t count, int jobs, Body&& body) {
    std::vector<InstanceResult> results(count);
    parallel_for(count, jobs, [&](std::size_t i) { results[i] = body(i); });
    report.instances += static_cast<long long>(count);
    for (InstanceResult& r : results) {
        report.checks += r.checks;
        for (VerifyFailure& f : r.failures) {
            ++report.failures_total;
            if (report.failures.size() < max_reported_failures)
                report.failures.push_back(std::move(f));
        }
    }
}

class Stopwatch {
   public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_;
};

// First coefficient disagreement between two vectors, in descending-lex
// label order.
inline std::optional<std::string> first_difference(const FockVector& a, const FockVector& b,
                                                   const std::string& aname,
                                                   const std::string& bname) {
    std::set<Partition, LexGreater> labels;
    for (const auto& [p, c] : a.terms()) labels.insert(p);
    for (const auto& [p, c] : b.terms()) labels.insert(p);
    for (const Partition& p : labels) {
        Laurent ca = a.coefficient(p);
        Laurent cb = b.coefficient(p);
        if (ca != cb)
            return "at (" + to_string(p) + "): " + aname + " = " + ca.str() + ", " + bname +
                   " = " + cb.str();
    }
    return std::nullopt;
}

inline std::string show(const Partition& p) { return "(" + to_string(p) + ")"; }

inline long long qsize(const std::vector<Partition>& quotient, std::optional<int> runner) {
    if (!runner) return 0;
    return quotient[static_cast<std::size_t>(*runner)].size();
}

// Display size for a member of kappa's block, safe for its length.
inline int block_beads(const Partition& kappa, int e, int weight, int max_length) {
    int N = weight + 1;
    while (kappa.length() + N * e < max_length) ++N;
    return kappa.length() + N * e;
}

// Cores swept by a mode: the explicit core when given, else every core of
// size at most `bound`.
inline std::vector<Partition> swept_cores(const VerifyOptions& opts, int bound) {
    if (opts.core) {
        if (!is_e_core(*opts.core, opts.e))
            throw std::invalid_argument("--core must be an e-core for the requested e");
        return {*opts.core};
    }
    return cores_up_to(bound, opts.e);
}

inline Partition remove_first_column(const Partition& p) {
    std::vector<int> parts;
    for (int part : p.parts())
        if (part > 1) parts.push_back(part - 1);
    return Partition(std::move(parts));
}

// Exhaustive enumeration of the nonzero product terms behind the closed
// coefficient formula; the callback sees per-runner factor pairs and the
// term's product.  Used to cross-check the dynamic program and the
// displacement identities.
struct FactorTuple {
    std::vector<Partition> alpha;
    std::vector<Partition> beta;
    Int product = 0;
};

template <typename Emit>
inline void enumerate_factor_tuples(const std::vector<Partition>& lq,
                                    const std::vector<Partition>& mq, const CoreProfile& prof,
                                    Emit&& emit) {
    FactorTuple cur;
    cur.alpha.assign(static_cast<std::size_t>(prof.e), Partition());
    cur.beta.assign(static_cast<std::size_t>(prof.e), Partition());
    std::function<void(std::size_t, const Partition&, const Int&)> rec =
        [&](std::size_t pos, const Partition& beta_prev, const Int& product) {
            int j = prof.chain[pos];
            const Partition& lj = lq[static_cast<std::size_t>(j)];
            const Partition& mj = mq[static_cast<std::size_t>(j)];
            if (pos + 1 == prof.chain.size()) {
                if (mj.size() != beta_prev.size() + lj.size()) return;
                long long c = lr_coefficient(mj, conjugate(beta_prev), lj);
                if (c == 0) return;
                cur.alpha[static_cast<std::size_t>(j)] = lj;
                cur.beta[static_cast<std::size_t>(j)] = Partition();
                cur.product = product * c;
                emit(cur);
                return;
            }
            long long asize = mj.size() - beta_prev.size();
            if (asize < 0) return;
            long long bsize = lj.size() - asize;
            if (bsize < 0) return;
            for (const Partition& alpha : all_partitions(static_cast<int>(asize))) {
                long long cm = lr_coefficient(mj, conjugate(beta_prev), alpha);
                if (cm == 0) continue;
                for (const Partition& beta : all_partitions(static_cast<int>(bsize))) {
                    long long cl = lr_coefficient(lj, alpha, beta);
                    if (cl == 0) continue;
                    cur.alpha[static_cast<std::size_t>(j)] = alpha;
                    cur.beta[static_cast<std::size_t>(j)] = beta;
                    rec(pos + 1, beta, product * cm * cl);
                }
            }
        };
    rec(0, Partition(), Int(1));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// main1: the closed formula equals the computed canonical column for every
// e-regular member of the locally-small class, and the H-vectors carry the
// unitriangular monomial structure.
inline VerifyReport verify_main1(const VerifyOptions& opts, CanonicalStore& store) {
    detail::Stopwatch clock;
    VerifyReport report;
    report.mode = "main1";
    int e = opts.e;
    int max_core = opts.max_core.value_or(5);
    int max_n = opts.max_n.value_or(16);

    struct Instance {
        Partition kappa;
        int weight;
        int n;
    };
    std::vector<Instance> instances;
    for (const Partition& kappa : detail::swept_cores(opts, max_core))
        for (int w = 0; kappa.size() + static_cast<long long>(w) * e <= max_n; ++w)
            instances.push_back({kappa, w, static_cast<int>(kappa.size()) + w * e});

    detail::run_instances(report, instances.size(), opts.jobs, [&](std::size_t idx) {
        detail::InstanceResult res;
        const Instance& inst = instances[idx];
        std::string where = "e=" + std::to_string(e) + " core=" + detail::show(inst.kappa) +
                            " w=" + std::to_string(inst.weight);

        std::map<Partition, const CanonicalColumn*, LexLess> columns;
        for (const CanonicalColumn& col : store.get(inst.n, e))
            if (e_core(col.mu, e) == inst.kappa) columns[col.mu] = &col;

        for (const Partition& mu : block_partitions(inst.kappa, e, inst.weight)) {
            if (!pstar_contains(inst.kappa, e, mu)) continue;
            FockVector h = h_vector(mu, e);
            std::string tag = where + " mu=" + detail::show(mu);

            // Unitriangular monomial structure of the closed formula.
            res.expect(h.coefficient(mu) == Laurent::one(), tag, "diagonal coefficient is not 1");
            for (const auto& [lam, c] : h.terms()) {
                if (lam == mu) continue;
                res.expect(c.in_v_nonneg(), tag,
                           "off-diagonal term at (" + to_string(lam) +
                               ") is not positive with exponent >= 1: " + c.str());
            }

            if (!is_e_regular(mu, e)) continue;
            auto it = columns.find(mu);
            if (it == columns.end()) {
                res.expect(false, tag, "canonical column for the label is missing");
                continue;
            }
            if (auto diff = detail::first_difference(it->second->vector, h, "column", "formula"))
                res.expect(false, tag, *diff);
            else
                ++res.checks;
        }
        return res;
    });

    report.seconds = clock.seconds();
    return report;
}

// ---------------------------------------------------------------------------
// induct: the ladder-of-slots induction identity, with the support-side
// hypotheses that license it checked mechanically.
inline VerifyReport verify_induct(const VerifyOptions& opts) {
    detail::Stopwatch clock;
    VerifyReport report;
    report.mode = "induct";
    int e = opts.e;
    int max_core = opts.max_core.value_or(5);
    int max_n = opts.max_n.value_or(16);

    struct Instance {
        Partition kappa;
        int weight;
    };
    std::vector<Instance> instances;
    for (const Partition& kappa : detail::swept_cores(opts, max_core)) {
        if (!core_profile(kappa, e).rouquier) {
            if (opts.core)
                throw std::invalid_argument("induct mode requires a core with no runner inversions");
            continue;
        }
        for (int w = 1; kappa.size() + static_cast<long long>(w) * e <= max_n; ++w)
            instances.push_back({kappa, w});
    }

    detail::run_instances(report, instances.size(), opts.jobs, [&](std::size_t idx) {
        detail::InstanceResult res;
        const Instance& inst = instances[idx];
        const Partition& kappa = inst.kappa;
        std::string where = "e=" + std::to_string(e) + " core=" + detail::show(kappa) +
                            " w=" + std::to_string(inst.weight);

        for (const std::vector<Partition>& quot : quotient_tuples(inst.weight, e)) {
            Partition mu = from_core_and_quotient(kappa, quot, e);
            if (!pstar_contains(kappa, e, mu)) continue;
            for (int a = 1; a < e; ++a) {
                const Partition& slot = quot[static_cast<std::size_t>(a)];
                if (slot.empty()) continue;
                int k = slot.length();
                std::vector<Partition> tq = quot;
                tq[static_cast<std::size_t>(a)] = detail::remove_first_column(slot);
                Partition tau = from_core_and_quotient(kappa, tq, e);
                const Partition& tau_a = tq[static_cast<std::size_t>(a)];
                std::string tag = where + " mu=" + detail::show(mu) + " a=" + std::to_string(a) +
                                  " k=" + std::to_string(k);

                FockVector htau = h_vector(tau, e);
                FockVector lhs = F_operator(htau, kappa, a, k, e);

                FockVector rhs;
                Partition column_k(std::vector<int>(static_cast<std::size_t>(k), 1));
                for (const Partition& eta :
                     all_partitions(static_cast<int>(tau_a.size()) + k)) {
                    long long c = lr_coefficient(eta, tau_a, column_k);
                    if (c == 0) continue;
                    std::vector<Partition> eq = tq;
                    eq[static_cast<std::size_t>(a)] = eta;
                    rhs += Laurent::constant(c) * h_vector(from_core_and_quotient(kappa, eq, e), e);
                }

                if (auto diff = detail::first_difference(lhs, rhs, "operator side", "branch side"))
                    res.expect(false, tag, *diff);
                else
                    ++res.checks;

                // Hypotheses on every partition in the support of H(tau):
                // runners left of a-1 sit well below the least gap on a-1,
                // runners right of a have gaps well above the last bead on a,
                // and k fits the slack between runner a's gap and runner
                // a-1's last bead.
                int max_len = 0;
                for (const auto& [lam, c] : htau.terms()) max_len = std::max(max_len, lam.length());
                int t = detail::block_beads(kappa, e, inst.weight, max_len);
                for (const auto& [lam, c] : htau.terms()) {
                    AbacusDisplay d = to_abacus(lam, e, t);
                    std::string ltag = tag + " support=(" + to_string(lam) + ")";
                    int x_prev = least_vacant(d, a - 1);
                    int x_a = least_vacant(d, a);
                    std::optional<int> y_prev = largest_occupied(d, a - 1);
                    res.expect(static_cast<bool>(y_prev), ltag, "runner a-1 carries no bead");
                    if (!y_prev) continue;
                    for (int c2 = 0; c2 <= a - 2; ++c2) {
                        std::optional<int> u = largest_occupied(d, c2);
                        if (!u) continue;
                        res.expect(x_prev - *u > e, ltag,
                                   "hypothesis (i) fails on runner " + std::to_string(c2));
                    }
                    for (int c2 = a + 1; c2 < e; ++c2) {
                        int gap = least_vacant(d, c2);
                        std::optional<int> y_a = largest_occupied(d, a);
                        res.expect(y_a && gap - *y_a > e, ltag,
                                   "hypothesis (ii) fails on runner " + std::to_string(c2));
                    }
                    res.expect(1 <= k && static_cast<long long>(k) * e <= x_a - *y_prev - 1, ltag,
                               "k is outside the admissible range");
                }
            }
        }
        return res;
    });

    report.seconds = clock.seconds();
    return report;
}

// ---------------------------------------------------------------------------
// swap: along each runner-swap reduction chain, membership is preserved and
// the divided-power step operators carry H-vectors across the swap in both
// directions.
inline VerifyReport verify_swap(const VerifyOptions& opts) {
    detail::Stopwatch clock;
    VerifyReport report;
    report.mode = "swap";
    int e = opts.e;
    int max_core = opts.max_core.value_or(6);
    int max_weight = opts.max_weight.value_or(3);

    std::vector<Partition> cores;
    for (const Partition& kappa : detail::swept_cores(opts, max_core))
        if (core_profile(kappa, e).inversions > 0 || opts.core) cores.push_back(kappa);

    detail::run_instances(report, cores.size(), opts.jobs, [&](std::size_t idx) {
        detail::InstanceResult res;
        const Partition& kappa = cores[idx];
        std::string where = "e=" + std::to_string(e) + " core=" + detail::show(kappa);

        RouquierReduction red = rouquier_reduction(kappa, e);
        res.expect(core_profile(red.terminal, e).rouquier, where,
                   "reduction chain did not terminate at an inversion-free core");

        for (const SwapStep& step : red.steps) {
            std::string stag = where + " step " + detail::show(step.before) + "->" +
                               detail::show(step.after) + " i=" + std::to_string(step.i) +
                               " r=" + std::to_string(step.r) + " k=" + std::to_string(step.k);
            for (int w = 0; w <= max_weight; ++w) {
                for (const Partition& mu : block_partitions(step.before, e, w)) {
                    if (!pstar_contains(step.before, e, mu)) continue;
                    Partition psi = swap_runners(mu, step.before, e, step.i);
                    std::string tag = stag + " mu=" + detail::show(mu);

                    res.expect(pstar_contains(step.after, e, psi), tag,
                               "image (" + to_string(psi) + ") leaves the locally-small class");

                    FockVector hm = h_vector(mu, e);
                    FockVector hp = h_vector(psi, e);
                    FockVector up = divided_power_auto(hm, StepKind::f, step.r, step.k, e);
                    if (auto diff = detail::first_difference(up, hp, "raised", "target"))
                        res.expect(false, tag, *diff);
                    else
                        ++res.checks;
                    FockVector down = divided_power_auto(hp, StepKind::e, step.r, step.k, e);
                    if (auto diff = detail::first_difference(down, hm, "lowered", "source"))
                        res.expect(false, tag, *diff);
                    else
                        ++res.checks;
                }
            }
        }
        return res;
    });

    report.seconds = clock.seconds();
    return report;
}

// ---------------------------------------------------------------------------
// mull: the reflection map is an involution, its image is located by the
// top-degree coefficient of the column, columns of mu and mu* are conjugate
// up to the degree twist, and the locally-small class is closed under the
// map with the predicted quotient.
inline VerifyReport verify_mull(const VerifyOptions& opts, CanonicalStore& store) {
    detail::Stopwatch clock;
    VerifyReport report;
    report.mode = "mull";
    int e = opts.e;
    int invol_bound = opts.max_n.value_or(12);
    int column_bound = std::min(invol_bound, 10);
    int max_core = opts.max_core.value_or(5);

    // Part A: involution, one instance per size.
    {
        std::vector<int> sizes;
        for (int n = 0; n <= invol_bound; ++n) sizes.push_back(n);
        detail::run_instances(report, sizes.size(), opts.jobs, [&](std::size_t idx) {
            detail::InstanceResult res;
            int n = sizes[idx];
            for (const Partition& mu : e_regular_partitions(n, e)) {
                Partition image = mullineux(mu, e);
                Partition back = mullineux(image, e);
                res.expect(back == mu,
                           "e=" + std::to_string(e) + " involution mu=" + detail::show(mu),
                           "double image is (" + to_string(back) + ")");
            }
            return res;
        });
    }

    // Part B: column degree oracle and the conjugate-twist identity.
    {
        std::vector<int> sizes;
        for (int n = 0; n <= column_bound; ++n) sizes.push_back(n);
        detail::run_instances(report, sizes.size(), opts.jobs, [&](std::size_t idx) {
            detail::InstanceResult res;
            int n = sizes[idx];
            const auto& cols = store.get(n, e);
            std::map<Partition, const CanonicalColumn*, LexLess> by_label;
            for (const CanonicalColumn& col : cols) by_label[col.mu] = &col;

            for (const CanonicalColumn& col : cols) {
                const Partition& mu = col.mu;
                int w = e_weight(mu, e);
                Partition star = mullineux(mu, e);
                Partition locator = conjugate(star);
                std::string tag = "e=" + std::to_string(e) + " column mu=" + detail::show(mu);

                // Degree oracle: v^w sits exactly at the conjugate image.
                res.expect(col.vector.coefficient(locator) == Laurent::monomial(w, 1), tag,
                           "coefficient at the conjugate image is " +
                               col.vector.coefficient(locator).str() + ", expected v^" +
                               std::to_string(w));
                for (const auto& [lam, c] : col.vector.terms()) {
                    if (lam == locator) continue;
                    res.expect(c.degree() < w, tag,
                               "degree bound fails at (" + to_string(lam) + "): " + c.str());
                }

                // Twist identity against the column of the image.
                auto it = by_label.find(star);
                if (it == by_label.end()) {
                    res.expect(false, tag, "column of the image is missing");
                    continue;
                }
                const FockVector& starcol = it->second->vector;
                res.expect(starcol.support_size() == col.vector.support_size(), tag,
                           "image column support size differs");
                for (const auto& [lam, c] : col.vector.terms()) {
                    Laurent want = c.bar().shifted(w);
                    Laurent got = starcol.coefficient(conjugate(lam));
                    res.expect(got == want, tag,
                               "twist fails at (" + to_string(lam) + "): image column has " +
                                   got.str() + ", expected " + want.str());
                }
            }
            return res;
        });
    }

    // Part C: closure of the locally-small class under the map, with the
    // predicted quotient, and the conjugate coefficient identities.
    {
        struct Instance {
            Partition kappa;
            int weight;
        };
        std::vector<Instance> instances;
        int closure_bound = 16;
        for (const Partition& kappa : detail::swept_cores(opts, max_core))
            for (int w = 0; kappa.size() + static_cast<long long>(w) * e <= closure_bound; ++w)
                instances.push_back({kappa, w});

        detail::run_instances(report, instances.size(), opts.jobs, [&](std::size_t idx) {
            detail::InstanceResult res;
            const Partition& kappa = instances[idx].kappa;
            int w = instances[idx].weight;
            CoreProfile prof = core_profile(kappa, e);
            Partition kappa_conj = conjugate(kappa);
            std::vector<Partition> members = block_partitions(kappa, e, w);
            std::string where = "e=" + std::to_string(e) + " core=" + detail::show(kappa) +
                                " w=" + std::to_string(w);

            for (const Partition& mu : members) {
                if (!pstar_contains(kappa, e, mu)) continue;
                CoreQuotient mq = core_and_quotient(mu, e);
                bool regular = is_e_regular(mu, e);
                std::string tag = where + " mu=" + detail::show(mu);

                res.expect(regular == mq.quotient[0].empty(), tag,
                           "regularity does not match emptiness of the runner-0 component");
                if (!regular) continue;

                Partition star = mullineux(mu, e);
                res.expect(pstar_contains(kappa_conj, e, star), tag,
                           "image (" + to_string(star) + ") leaves the locally-small class");

                CoreQuotient sq = core_and_quotient(star, e);
                res.expect(sq.core == kappa_conj, tag, "image core is not the conjugate core");
                res.expect(sq.quotient[0].empty(), tag, "image runner-0 component is not empty");
                for (int i = 1; i < e; ++i) {
                    std::optional<int> src = prof.succ(prof.phi[static_cast<std::size_t>(i)]);
                    Partition expected =
                        src ? mq.quotient[static_cast<std::size_t>(*src)] : Partition();
                    res.expect(sq.quotient[static_cast<std::size_t>(i)] == expected, tag,
                               "image quotient component " + std::to_string(i) + " is (" +
                                   to_string(sq.quotient[static_cast<std::size_t>(i)]) +
                                   "), expected (" + to_string(expected) + ")");
                }

                long long delta_total = 0;
                for (int j = 1; j < e; ++j) delta_total += mq.quotient[static_cast<std::size_t>(j)].size();
                for (const Partition& lam : members) {
                    Int c = c_coefficient(lam, mu, e);
                    Int c_star = c_coefficient(conjugate(lam), star, e);
                    res.expect(c_star == c, tag,
                               "conjugate coefficient differs at (" + to_string(lam) + "): " +
                                   c_star.str() + " vs " + c.str());
                    if (c != 0) {
                        long long lhs = delta_exponent(conjugate(lam), star, e);
                        long long rhs = delta_total - delta_exponent(lam, mu, e);
                        res.expect(lhs == rhs, tag,
                                   "conjugate displacement differs at (" + to_string(lam) +
                                       "): " + std::to_string(lhs) + " vs " + std::to_string(rhs));
                    }
                }
            }
            return res;
        });
    }

    report.seconds = clock.seconds();
    return report;
}

// ---------------------------------------------------------------------------
// gap: bead-position separation on supports; per-term displacement identity;
// exhaustive tuple sum agrees with the dynamic program.
inline VerifyReport verify_gap(const VerifyOptions& opts) {
    detail::Stopwatch clock;
    VerifyReport report;
    report.mode = "gap";
    int e = opts.e;
    int max_core = opts.max_core.value_or(5);
    int max_weight = opts.max_weight.value_or(3);

    struct Instance {
        Partition kappa;
        int weight;
    };
    std::vector<Instance> instances;
    for (const Partition& kappa : detail::swept_cores(opts, max_core))
        for (int w = 0; w <= max_weight; ++w) instances.push_back({kappa, w});

    detail::run_instances(report, instances.size(), opts.jobs, [&](std::size_t idx) {
        detail::InstanceResult res;
        const Partition& kappa = instances[idx].kappa;
        int w = instances[idx].weight;
        CoreProfile prof = core_profile(kappa, e);
        std::string where = "e=" + std::to_string(e) + " core=" + detail::show(kappa) +
                            " w=" + std::to_string(w);

        std::vector<std::vector<Partition>> quots = quotient_tuples(w, e);
        std::vector<Partition> members;
        members.reserve(quots.size());
        int max_len = 0;
        for (const auto& q : quots) {
            members.push_back(from_core_and_quotient(kappa, q, e));
            max_len = std::max(max_len, members.back().length());
        }
        int t = detail::block_beads(kappa, e, w, max_len);

        for (std::size_t mi = 0; mi < members.size(); ++mi) {
            const Partition& mu = members[mi];
            const std::vector<Partition>& mq = quots[mi];
            bool mu_pstar = pstar_contains(kappa, e, mu);

            for (std::size_t li = 0; li < members.size(); ++li) {
                const Partition& lam = members[li];
                const std::vector<Partition>& lq = quots[li];
                std::string tag = where + " lambda=" + detail::show(lam) + " mu=" + detail::show(mu);

                long long delta = delta_exponent(lam, mu, e);
                Int tuple_sum = 0;
                bool any = false;
                detail::enumerate_factor_tuples(lq, mq, prof, [&](const detail::FactorTuple& ft) {
                    any = true;
                    tuple_sum += ft.product;
                    long long disp = 0;
                    for (const Partition& b : ft.beta) disp += b.size();
                    res.expect(disp == delta, tag,
                               "tuple displacement " + std::to_string(disp) +
                                   " differs from the exponent " + std::to_string(delta));
                });
                res.expect(tuple_sum == c_coefficient(lam, mu, e), tag,
                           "tuple sum differs from the dynamic program");
                if (!any) continue;

                AbacusDisplay d = to_abacus(lam, e, t);
                for (std::size_t ci = 0; ci < prof.chain.size(); ++ci) {
                    int i = prof.chain[ci];
                    std::optional<int> y = largest_occupied(d, i);
                    if (!y) continue;
                    for (std::size_t cj = ci + 1; cj < prof.chain.size(); ++cj) {
                        int j = prof.chain[cj];
                        int x = least_vacant(d, j);
                        long long slack;
                        if (cj == ci + 1) {
                            slack = prof.d[static_cast<std::size_t>(j)] + 1 -
                                    detail::qsize(mq, prof.pred(j)) - detail::qsize(mq, j) -
                                    detail::qsize(mq, prof.succ(j));
                        } else {
                            long long dsum = 0;
                            for (std::size_t cr = ci + 1; cr <= cj; ++cr)
                                dsum += prof.d[static_cast<std::size_t>(prof.chain[cr])];
                            slack = dsum + 1 - detail::qsize(mq, i) -
                                    detail::qsize(mq, prof.succ(i)) - detail::qsize(mq, j) -
                                    detail::qsize(mq, prof.succ(j));
                        }
                        res.expect(x - *y > slack * e, tag,
                                   "separation fails between runners " + std::to_string(i) +
                                       " and " + std::to_string(j));
                        if (mu_pstar)
                            res.expect(*y < x, tag,
                                       "support bead on runner " + std::to_string(i) +
                                           " reaches past a gap on runner " + std::to_string(j));
                    }
                }
            }
        }
        return res;
    });

    report.seconds = clock.seconds();
    return report;
}

// ---------------------------------------------------------------------------
// jantzen: on bounded blocks, the alternating move sum bounds the
// specialized column value and shares its vanishing.
inline VerifyReport verify_jantzen(const VerifyOptions& opts, CanonicalStore& store) {
    detail::Stopwatch clock;
    VerifyReport report;
    report.mode = "jantzen";
    int e = opts.e;
    int max_n = opts.max_n.value_or(14);
    int max_weight = opts.max_weight.value_or(3);

    struct Instance {
        Partition kappa;
        int weight;
        int n;
    };
    std::vector<Instance> instances;
    for (const Partition& kappa : detail::swept_cores(opts, std::max(0, max_n - e)))
        for (int w = 1; w <= max_weight && kappa.size() + static_cast<long long>(w) * e <= max_n;
             ++w)
            instances.push_back({kappa, w, static_cast<int>(kappa.size()) + w * e});

    detail::run_instances(report, instances.size(), opts.jobs, [&](std::size_t idx) {
        detail::InstanceResult res;
        const Instance& inst = instances[idx];
        std::string where = "e=" + std::to_string(e) + " core=" + detail::show(inst.kappa) +
                            " w=" + std::to_string(inst.weight);

        std::vector<Partition> members = block_partitions(inst.kappa, e, inst.weight);
        for (const CanonicalColumn& col : store.get(inst.n, e)) {
            if (e_core(col.mu, e) != inst.kappa) continue;
            std::map<Partition, Int, LexGreater> values;
            for (const Partition& lam : members) values[lam] = 0;
            for (const auto& [lam, c] : col.vector.terms()) values[lam] = c.evaluate_at_one();

            for (const Partition& lam : members) {
                if (lam == col.mu) continue;
                Int d0 = values.at(lam);
                Int bound = jantzen_sum(lam, col.mu, e, 0, values);
                std::string tag =
                    where + " lambda=" + detail::show(lam) + " mu=" + detail::show(col.mu);
                res.expect(d0 <= bound, tag,
                           "column value " + d0.str() + " exceeds the move sum " + bound.str());
                res.expect((d0 == 0) == (bound == 0), tag,
                           "vanishing mismatch: column value " + d0.str() + ", move sum " +
                               bound.str());
            }
        }
        return res;
    });

    report.seconds = clock.seconds();
    return report;
}

// ---------------------------------------------------------------------------
// order: move-order implies sequence-order and dominance; induced-sequence
// bookkeeping identities; paired-move sign cancellation; and the
// non-comparability statement over inversion-free cores.
inline VerifyReport verify_order(const VerifyOptions& opts) {
    detail::Stopwatch clock;
    VerifyReport report;
    report.mode = "order";
    int e = opts.e;
    int max_core = opts.max_core.value_or(5);
    int max_weight = opts.max_weight.value_or(3);

    struct Instance {
        Partition kappa;
        int weight;
    };
    std::vector<Instance> instances;
    for (const Partition& kappa : detail::swept_cores(opts, max_core))
        for (int w = 1; w <= max_weight; ++w) instances.push_back({kappa, w});

    detail::run_instances(report, instances.size(), opts.jobs, [&](std::size_t idx) {
        detail::InstanceResult res;
        const Partition& kappa = instances[idx].kappa;
        int w = instances[idx].weight;
        std::string where = "e=" + std::to_string(e) + " core=" + detail::show(kappa) +
                            " w=" + std::to_string(w);

        std::vector<Partition> members = block_partitions(kappa, e, w);
        int max_len = 0;
        for (const Partition& m : members) max_len = std::max(max_len, m.length());
        int t = detail::block_beads(kappa, e, w, max_len);

        std::map<Partition, std::vector<Partition>, LexLess> adjacency;
        std::map<Partition, std::vector<int>, LexLess> sequences;

        for (const Partition& lam : members) {
            std::string tag = where + " lambda=" + detail::show(lam);
            InducedSequence seq = induced_sequence(lam, e, t);
            sequences[lam] = seq.values;

            res.expect(static_cast<int>(seq.values.size()) == w, tag,
                       "sequence length differs from the block weight");
            for (int v : seq.values)
                res.expect(v >= 0, tag, "sequence carries a negative term");

            // Largest bead / least gap on each positively weighted runner.
            AbacusDisplay d = to_abacus(lam, e, t);
            for (int j = 0; j < e; ++j) {
                int runner_weight = 0;
                for (int p : runner_positions(d, j)) runner_weight += bead_weight(d, p);
                if (runner_weight == 0) continue;
                int best = -1, least = -1;
                for (int v : seq.values) {
                    if (v % e != j) continue;
                    best = std::max(best, v);
                    least = least < 0 ? v : std::min(least, v);
                }
                std::optional<int> top = largest_occupied(d, j);
                res.expect(top && *top == best, tag,
                           "largest bead on runner " + std::to_string(j) + " is off");
                res.expect(least_vacant(d, j) == least - e, tag,
                           "least gap on runner " + std::to_string(j) + " is off");
            }

            // Removing one move's progression recovers the sequence.
            for (const BeadMove& mv : upward_moves(lam, e, t)) {
                std::vector<int> merged = induced_sequence(mv.target, e, t).values;
                for (int j = 0; j < mv.hops; ++j) merged.push_back(mv.from - j * e);
                std::sort(merged.begin(), merged.end(), std::greater<int>());
                res.expect(merged == seq.values, tag,
                           "progression merge differs after the move " + std::to_string(mv.from) +
                               "->" + std::to_string(mv.to));
            }

            // Paired-move cancellation among targets with equal component sizes.
            std::map<Partition, std::vector<const ArrowPair*>, LexLess> by_target;
            std::vector<ArrowPair> arrows = arrow_pairs(lam, e, t);
            for (const ArrowPair& ap : arrows) by_target[ap.tau].push_back(&ap);
            std::vector<Partition>& adj = adjacency[lam];
            for (const auto& [tau, group] : by_target) {
                adj.push_back(tau);
                if (!approx_equiv(lam, tau, e)) continue;
                int signed_sum = 0;
                for (const ArrowPair* ap : group)
                    signed_sum += (ap->l_lambda_sigma + ap->l_tau_sigma + 1) % 2 == 0 ? 1 : -1;
                std::string ttag = tag + " tau=" + detail::show(tau);
                res.expect(group.size() == 2, ttag,
                           "expected exactly two connecting moves, found " +
                               std::to_string(group.size()));
                res.expect(signed_sum == 0, ttag, "signed move pair does not cancel");
            }
        }

        // Reachability implies the sequence order and dominance.
        for (const Partition& lam : members) {
            std::set<Partition, LexLess> reach{lam};
            std::deque<Partition> queue{lam};
            while (!queue.empty()) {
                Partition cur = queue.front();
                queue.pop_front();
                for (const Partition& nxt : adjacency[cur])
                    if (reach.insert(nxt).second) queue.push_back(nxt);
            }
            for (const Partition& mu : members) {
                std::string tag =
                    where + " lambda=" + detail::show(lam) + " mu=" + detail::show(mu);
                bool reachable = reach.count(mu) > 0;
                res.expect(leq_J(lam, mu, e) == reachable, tag,
                           "library move order disagrees with the closure");
                if (!reachable) continue;
                const std::vector<int>& sl = sequences[lam];
                const std::vector<int>& sm = sequences[mu];
                bool pointwise = true;
                for (std::size_t j = 0; j < sl.size(); ++j)
                    if (sl[j] > sm[j]) pointwise = false;
                res.expect(pointwise, tag, "move order does not imply the sequence order");
                res.expect(leq_p(lam, mu, e), tag, "library sequence order disagrees");
                res.expect(dominates(mu, lam), tag, "move order does not imply dominance");
            }
        }
        return res;
    });

    // Non-comparability over inversion-free cores.
    if (!opts.core) {
        std::vector<Instance> nin;
        for (const Partition& kappa : cores_up_to(std::min(max_core, 4), e)) {
            if (!core_profile(kappa, e).rouquier) continue;
            for (int w = 1; w <= max_weight; ++w) nin.push_back({kappa, w});
        }
        detail::run_instances(report, nin.size(), opts.jobs, [&](std::size_t idx) {
            detail::InstanceResult res;
            const Partition& kappa = nin[idx].kappa;
            int w = nin[idx].weight;
            std::string where = "e=" + std::to_string(e) + " core=" + detail::show(kappa) +
                                " w=" + std::to_string(w) + " separations";

            std::vector<Partition> members = block_partitions(kappa, e, w);
            int max_len = 0;
            for (const Partition& m : members) max_len = std::max(max_len, m.length());
            int t = detail::block_beads(kappa, e, w, max_len);

            std::vector<Partition> small;
            for (const Partition& m : members)
                if (pstar_contains(kappa, e, m)) small.push_back(m);

            for (const Partition& lam : small) {
                std::set<Partition, LexLess> targets;
                for (const ArrowPair& ap : arrow_pairs(lam, e, t)) targets.insert(ap.tau);
                for (const Partition& tau : targets) {
                    if (approx_equiv(lam, tau, e)) continue;
                    for (const Partition& mu : small) {
                        if (!approx_equiv(lam, mu, e)) continue;
                        res.expect(!leq_p(tau, mu, e),
                                   where + " lambda=" + detail::show(lam) +
                                       " tau=" + detail::show(tau) + " mu=" + detail::show(mu),
                                   "escaped target still sits below in the sequence order");
                    }
                }
            }
            return res;
        });
    }

    report.seconds = clock.seconds();
    return report;
}

// ---------------------------------------------------------------------------
// exactness: k-fold raising steps are coefficient-wise divisible by the
// balanced factorial, over seeded random samples.
inline VerifyReport verify_exactness(const VerifyOptions& opts) {
    detail::Stopwatch clock;
    VerifyReport report;
    report.mode = "exactness";

    detail::InstanceResult res;

    // Fixed anchor: the 2-step divided raise on a single box.
    {
        FockVector two = divided_power_auto(FockVector::basis(Partition({1})), StepKind::f, 1, 2, 2);
        res.expect(two == FockVector::basis(Partition({2, 1})), "anchor divided square",
                   "expected the hook (2,1), got " + two.str());
    }

    std::mt19937_64 rng(opts.seed);
    for (int s = 0; s < opts.samples; ++s) {
        int e = 2 + static_cast<int>(rng() % 3);
        int n = static_cast<int>(rng() % 11);
        const std::vector<Partition> pool = all_partitions(n);
        Partition lam = pool[static_cast<std::size_t>(rng() % pool.size())];
        int r = static_cast<int>(rng() % static_cast<std::uint64_t>(e));
        int k = 1 + static_cast<int>(rng() % 4);
        std::string tag = "sample " + std::to_string(s) + ": e=" + std::to_string(e) +
                          " lambda=" + detail::show(lam) + " r=" + std::to_string(r) +
                          " k=" + std::to_string(k);

        FockVector x = FockVector::basis(lam);
        int t = select_bead_count(x, r, e);
        for (int step = 0; step < k; ++step) x = f_step(x, r, e, t);
        Laurent fact = gauss_factorial(k);
        for (const auto& [p, c] : x.terms()) {
            LaurentDivision division = divide(c, fact);
            res.expect(division.remainder.is_zero(), tag,
                       "coefficient at (" + to_string(p) + ") is " + c.str() +
                           ", not divisible by " + fact.str());
        }
        ++res.checks;
    }

    report.instances = opts.samples + 1;
    report.checks = res.checks;
    for (VerifyFailure& f : res.failures) {
        ++report.failures_total;
        if (report.failures.size() < detail::max_reported_failures)
            report.failures.push_back(std::move(f));
    }
    report.seconds = clock.seconds();
    return report;
}

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& verify_mode_names() {
    static const std::vector<std::string> names{"main1", "induct", "swap",     "mull",
                                                "gap",   "jantzen", "order",   "exactness"};
    return names;
}

inline VerifyReport run_verify(const std::string& mode, const VerifyOptions& opts,
                               CanonicalStore& store) {
    if (mode == "main1") return verify_main1(opts, store);
    if (mode == "induct") return verify_induct(opts);
    if (mode == "swap") return verify_swap(opts);
    if (mode == "mull") return verify_mull(opts, store);
    if (mode == "gap") return verify_gap(opts);
    if (mode == "jantzen") return verify_jantzen(opts, store);
    if (mode == "order") return verify_order(opts);
    if (mode == "exactness") return verify_exactness(opts);
    throw std::invalid_argument("unknown verify mode: " + mode);
}

inline VerifyReport run_verify(const std::string& mode, const VerifyOptions& opts) {
    CanonicalStore store;
    return run_verify(mode, opts, store);
}

}  // namespace fockcanon
