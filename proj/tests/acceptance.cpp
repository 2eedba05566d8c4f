// Acceptance suite: twelve end-to-end checks, one printed line each.
//
// Every check is exact (big-integer / Laurent equality); the timed checks
// also enforce their wall-clock budgets.  Exit code 0 iff all twelve pass.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <fockcanon/fockcanon.hpp>

using namespace fockcanon;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int num, bool pass, const std::string& what, double seconds) {
    if (!pass) ++failures;
    std::ostringstream line;
    line << "criterion " << std::setw(2) << num << ": " << (pass ? "PASS" : "FAIL") << " — "
         << what << " (" << std::fixed << std::setprecision(3) << seconds << " s)";
    std::cout << line.str() << std::endl;
}

double elapsed(const Clock::time_point& start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool run_mode(const std::string& mode, int e, CanonicalStore& store, std::string& detail,
              double& seconds) {
    VerifyOptions opts;
    opts.e = e;
    VerifyReport rep = run_verify(mode, opts, store);
    seconds += rep.seconds;
    std::ostringstream os;
    os << "e=" << e << ": " << rep.instances << " instances, " << rep.checks << " checks";
    if (!rep.pass()) {
        os << "; FIRST FAILURE " << rep.failures.front().instance << " — "
           << rep.failures.front().detail;
        detail += " [" + os.str() + "]";
        return false;
    }
    detail += " [" + os.str() + "]";
    return true;
}

}  // namespace

// 1. The worked induced-sequence example, under a millisecond.
static void criterion1() {
    auto start = Clock::now();
    InducedSequence seq = induced_sequence(Partition{6, 6, 5, 4}, 3, 6);
    double secs = elapsed(start);
    bool pass = seq.values == std::vector<int>{11, 10, 8, 8, 7, 6, 5} && secs < 0.001;
    report(1, pass, "induced sequence of (6,6,5,4) at e=3, t=6 is (11,10,8,8,7,6,5)", secs);
}

// 2. The worked profile/membership example, under a millisecond.
static void criterion2() {
    auto start = Clock::now();
    CoreProfile prof = core_profile(Partition{3, 3}, 5);
    bool ok = prof.d[1] == 0 && prof.d[2] == 0 && prof.d[3] == 1 && prof.d[4] == 0;
    ok = ok && pstar_contains(Partition{3, 3}, 5, Partition{8, 3, 2, 1, 1, 1});
    CoreQuotient cq = core_and_quotient(Partition{8, 3, 2, 1, 1, 1}, 5);
    ok = ok && cq.quotient[0].empty() && cq.quotient[1] == Partition{1} &&
         cq.quotient[2].empty() && cq.quotient[3].empty() && cq.quotient[4] == Partition{1};
    double secs = elapsed(start);
    bool pass = ok && secs < 0.001;
    report(2, pass,
           "core (3,3) at e=5 has gaps (0,0,1,0) and admits (8,3,2,1,1,1) with quotient "
           "(-, 1, -, -, 1)",
           secs);
}

// 3. Ladder columns equal the closed formula on the locally-small class,
//    e in {2,3,4}, cores up to size 5, labels up to size 16; under 5 minutes.
static void criterion3(CanonicalStore& store) {
    double secs = 0;
    std::string detail;
    bool pass = true;
    for (int e : {2, 3, 4}) pass = run_mode("main1", e, store, detail, secs) && pass;
    pass = pass && secs < 300.0;
    report(3, pass, "canonical columns match the closed formula" + detail, secs);
}

// 4. Frozen base columns at e=2.
static void criterion4(CanonicalStore& store) {
    auto start = Clock::now();
    FockVector h2 = FockVector::basis(Partition{2});
    h2.add_term(Partition{1, 1}, Laurent::monomial(1, 1));
    bool ok = h_vector(Partition{2}, 2) == h2;

    const auto& cols2 = store.get(2, 2);
    ok = ok && cols2.size() == 1 && cols2.front().mu == Partition{2} &&
         cols2.front().vector == h2;

    FockVector g4 = FockVector::basis(Partition{4});
    g4.add_term(Partition{3, 1}, Laurent::monomial(1, 1));
    g4.add_term(Partition{2, 1, 1}, Laurent::monomial(1, 1));
    g4.add_term(Partition{1, 1, 1, 1}, Laurent::monomial(2, 1));
    const auto& cols4 = store.get(4, 2);
    bool found = false;
    for (const auto& col : cols4)
        if (col.mu == Partition{4}) {
            found = true;
            ok = ok && col.vector == g4;
        }
    ok = ok && found;
    report(4, ok, "frozen base columns: H((2)) = (2) + v(1,1) = G((2)); G((4)) as hand-checked",
           elapsed(start));
}

// 5. First-column removal identity plus its display hypotheses.
static void criterion5(CanonicalStore& store) {
    double secs = 0;
    std::string detail;
    bool pass = true;
    for (int e : {2, 3, 4}) pass = run_mode("induct", e, store, detail, secs) && pass;
    report(5, pass, "column-removal induction identity and display-gap hypotheses" + detail,
           secs);
}

// 6. Runner-swap identities over non-Rouquier cores, following the
//    reduction to termination.
static void criterion6(CanonicalStore& store) {
    double secs = 0;
    std::string detail;
    bool pass = true;
    for (int e : {3, 4, 5}) pass = run_mode("swap", e, store, detail, secs) && pass;
    report(6, pass, "runner-swap divided-power identities along descent reductions" + detail,
           secs);
}

// 7. Sign-twist involution, degree oracle, and column twist identity.
static void criterion7(CanonicalStore& store) {
    double secs = 0;
    std::string detail;
    bool pass = true;
    for (int e : {2, 3, 4}) pass = run_mode("mull", e, store, detail, secs) && pass;
    report(7, pass, "sign-twist involution, degree-locating oracle, and twist identity" + detail,
           secs);
}

// 8. Corollaries of the locally-small class under the sign twist, checked
//    directly within the criterion-3 bounds.
static void criterion8() {
    auto start = Clock::now();
    long long checks = 0;
    bool ok = true;
    std::string first;
    auto expect = [&](bool cond, const std::string& what) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            first = what;
        }
    };
    for (int e : {2, 3, 4}) {
        for (const Partition& kappa : cores_up_to(5, e)) {
            CoreProfile prof = core_profile(kappa, e);
            Partition kappa_star = conjugate(kappa);
            for (int w = 0; kappa.size() + static_cast<long long>(w) * e <= 16; ++w) {
                auto block = block_partitions(kappa, e, w);
                for (const Partition& mu : block) {
                    if (!pstar_contains(kappa, e, mu)) continue;
                    CoreQuotient mq = core_and_quotient(mu, e);
                    // regularity reads off the runner-0 component
                    expect(is_e_regular(mu, e) == mq.quotient[0].empty(),
                           "regularity/quotient mismatch at " + to_string(mu));
                    if (!is_e_regular(mu, e)) continue;
                    Partition star = mullineux(mu, e);
                    expect(e_core(star, e) == kappa_star,
                           "twisted core mismatch at " + to_string(mu));
                    expect(pstar_contains(kappa_star, e, star),
                           "twist left the locally-small class at " + to_string(mu));
                    // twisted quotient: runner 0 empties, and component i
                    // holds the original component of the chain successor
                    // of phi(i) (empty past the chain maximum)
                    CoreQuotient sq = core_and_quotient(star, e);
                    expect(sq.quotient[0].empty(),
                           "twisted runner-0 component not empty at " + to_string(mu));
                    for (int i = 1; i < e; ++i) {
                        std::optional<int> src = prof.succ(prof.phi[static_cast<std::size_t>(i)]);
                        Partition expected =
                            src ? mq.quotient[static_cast<std::size_t>(*src)] : Partition{};
                        expect(sq.quotient[static_cast<std::size_t>(i)] == expected,
                               "twisted quotient component mismatch at " + to_string(mu));
                    }
                    long long qsum = 0;
                    for (int j = 1; j < e; ++j)
                        qsum += mq.quotient[static_cast<std::size_t>(j)].size();
                    for (const Partition& lam : block) {
                        Int c = c_coefficient(lam, mu, e);
                        Int cstar = c_coefficient(conjugate(lam), star, e);
                        expect(c == cstar, "coefficient changed under conjugate/twist at " +
                                               to_string(lam) + " / " + to_string(mu));
                        if (c != 0)
                            expect(delta_exponent(conjugate(lam), star, e) ==
                                       qsum - delta_exponent(lam, mu, e),
                                   "exponent identity failed at " + to_string(lam) + " / " +
                                       to_string(mu));
                    }
                }
            }
        }
    }
    std::ostringstream what;
    what << "locally-small corollaries under the sign twist (" << checks << " checks";
    if (!ok) what << "; FIRST FAILURE " << first;
    what << ")";
    report(8, ok, what.str(), elapsed(start));
}

// 9. Decomposition bound at characteristic zero on all small blocks;
//    under 2 minutes.
static void criterion9(CanonicalStore& store) {
    double secs = 0;
    std::string detail;
    bool pass = true;
    for (int e : {2, 3}) pass = run_mode("jantzen", e, store, detail, secs) && pass;
    pass = pass && secs < 120.0;
    report(9, pass, "alternating move-sum bounds the v=1 column entries" + detail, secs);
}

// 10. Order lemmas: move order inside sequence order inside dominance,
//     sequence laws for every upward move, and the non-comparability law.
static void criterion10(CanonicalStore& store) {
    double secs = 0;
    std::string detail;
    bool pass = true;
    for (int e : {2, 3}) pass = run_mode("order", e, store, detail, secs) && pass;
    report(10, pass, "move-order, sequence-order, and dominance lemmas" + detail, secs);
}

// 11. Tableau LR engine against the product oracle, all |alpha|+|beta| <= 8;
//     under 1 minute.
static void criterion11() {
    auto start = Clock::now();
    long long checks = 0;
    bool ok = true;
    std::string first;
    for (int total = 0; total <= 8 && ok; ++total) {
        for (int a = 0; a <= total; ++a) {
            for (const Partition& alpha : all_partitions(a)) {
                for (const Partition& beta : all_partitions(total - a)) {
                    auto oracle = schur_product_oracle(alpha, beta, 8);
                    for (const Partition& lam : all_partitions(total)) {
                        long long c = lr_coefficient(lam, alpha, beta);
                        auto it = oracle.find(lam);
                        long long want = it == oracle.end() ? 0 : it->second;
                        ++checks;
                        if (c != want && ok) {
                            ok = false;
                            first = "oracle mismatch at " + to_string(lam) + " = " +
                                    to_string(alpha) + " * " + to_string(beta);
                        }
                        ++checks;
                        if (c != lr_coefficient(lam, beta, alpha) && ok) {
                            ok = false;
                            first = "symmetry broken at " + to_string(lam);
                        }
                        ++checks;
                        if (c != lr_coefficient(conjugate(lam), conjugate(alpha),
                                                conjugate(beta)) &&
                            ok) {
                            ok = false;
                            first = "conjugation invariance broken at " + to_string(lam);
                        }
                    }
                }
            }
        }
    }
    double secs = elapsed(start);
    bool pass = ok && secs < 60.0;
    std::ostringstream what;
    what << "tableau coefficients match the product oracle with symmetry and conjugation ("
         << checks << " checks";
    if (!ok) what << "; FIRST FAILURE " << first;
    what << ")";
    report(11, pass, what.str(), secs);
}

// 12. Divided-power exactness on random samples plus the frozen anchor.
static void criterion12(CanonicalStore& store) {
    double secs = 0;
    std::string detail;
    bool pass = run_mode("exactness", 2, store, detail, secs);
    report(12, pass, "divided powers divide exactly by the balanced factorial" + detail, secs);
}

int main() {
    CanonicalStore store;  // shared, memory-only
    criterion1();
    criterion2();
    criterion3(store);
    criterion4(store);
    criterion5(store);
    criterion6(store);
    criterion7(store);
    criterion8();
    criterion9(store);
    criterion10(store);
    criterion11();
    criterion12(store);
    if (failures == 0) {
        std::cout << "all 12 criteria passed" << std::endl;
        return 0;
    }
    std::cout << failures << " criteria failed" << std::endl;
    return 1;
}
