#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <fockcanon/abacus.hpp>
#include <fockcanon/blocks.hpp>
#include <fockcanon/core_profile.hpp>
#include <fockcanon/partition.hpp>

using namespace fockcanon;

TEST_CASE("bead displays round-trip partitions for any bead count") {
    for (const auto& p : all_partitions(9)) {
        for (int t = std::max(p.length(), 1); t <= p.length() + 7; ++t) {
            CAPTURE(to_string(p), t);
            CHECK(from_abacus(to_abacus(p, 3, t)) == p);
        }
    }
}

TEST_CASE("core and quotient are independent of the display multiplier") {
    for (int e = 2; e <= 4; ++e) {
        for (const auto& p : all_partitions(8)) {
            auto base = core_and_quotient(p, e);
            for (int N = 1; N <= 4; ++N) {
                auto other = core_and_quotient(p, e, N);
                CHECK(other.core == base.core);
                CHECK(other.quotient == base.quotient);
            }
        }
    }
}

TEST_CASE("core and quotient reassemble the partition") {
    for (int e = 2; e <= 4; ++e) {
        for (const auto& p : all_partitions(8)) {
            auto cq = core_and_quotient(p, e);
            CHECK(from_core_and_quotient(cq) == p);
            CHECK(from_core_and_quotient(cq.core, cq.quotient, e) == p);
            CHECK(from_core_and_quotient(cq.core, cq.quotient, e, cq.N + 3) == p);
        }
    }
}

TEST_CASE("size bookkeeping: |partition| = |core| + e * weight") {
    for (int e = 2; e <= 5; ++e)
        for (const auto& p : all_partitions(9))
            CHECK(p.size() == e_core(p, e).size() + e * e_weight(p, e));
}

TEST_CASE("cores are fixed points of the core map") {
    for (int e = 2; e <= 4; ++e)
        for (const auto& c : cores_up_to(6, e)) {
            CHECK(is_e_core(c, e));
            CHECK(e_core(c, e) == c);
            CHECK(e_weight(c, e) == 0);
        }
}

TEST_CASE("worked hook-removal example: (8,3,2,1,1,1) has 5-core (3,3)") {
    Partition mu{8, 3, 2, 1, 1, 1};
    CHECK(e_core(mu, 5) == Partition{3, 3});
    CHECK(e_weight(mu, 5) == 2);
    auto cq = core_and_quotient(mu, 5);
    REQUIRE(cq.quotient.size() == 5);
    CHECK(cq.quotient[0] == Partition{});
    CHECK(cq.quotient[1] == Partition{1});
    CHECK(cq.quotient[2] == Partition{});
    CHECK(cq.quotient[3] == Partition{});
    CHECK(cq.quotient[4] == Partition{1});
    CHECK(cq.weight() == 2);
}

TEST_CASE("occupied and vacant probes agree with the raw display") {
    AbacusDisplay d = to_abacus(Partition{4, 3, 1}, 3, 6);
    std::set<int> occ(d.occupied.begin(), d.occupied.end());
    REQUIRE(occ.size() == 6);
    for (int j = 0; j < 3; ++j) {
        auto big = largest_occupied(d, j);
        int small = least_vacant(d, j);
        if (big) {
            CHECK(occ.count(*big) == 1);
            CHECK(*big % 3 == j);
            CHECK(occ.count(*big + 3) == 0);
        }
        CHECK(small % 3 == j);
        CHECK(occ.count(small) == 0);
        for (int x = small - 3; x >= 0; x -= 3) CHECK(occ.count(x) == 1);
    }
}

TEST_CASE("bead weight counts the vacancies above a bead") {
    // (3) with e=2, 2 beads: beta-numbers {4, 0}; bead 4 sits on runner 0,
    // row 2, with one bead (0) and one gap (2) above it.
    AbacusDisplay d = to_abacus(Partition{3}, 2, 2);
    REQUIRE(d.occupied == std::vector<int>{0, 4});
    CHECK(bead_weight(d, 4) == 1);
    CHECK(bead_weight(d, 0) == 0);
}

TEST_CASE("display bead counts per runner gain one bead per extra cycle") {
    Partition kappa{3, 1};
    int e = 3;
    auto prof = core_profile(kappa, e);
    AbacusDisplay d = to_abacus(kappa, e, prof.beads + e);
    auto counts = runner_counts(d);
    for (int j = 0; j < e; ++j)
        CHECK(counts[static_cast<std::size_t>(j)] == prof.n[static_cast<std::size_t>(j)] + 1);
}

TEST_CASE("block membership is exactly shared core and weight") {
    int e = 3, w = 2;
    Partition kappa{1};
    auto block = block_partitions(kappa, e, w);
    for (const auto& p : block) {
        CHECK(e_core(p, e) == kappa);
        CHECK(e_weight(p, e) == w);
    }
    int n = 1 + e * w;
    std::size_t found = 0;
    for (const auto& p : all_partitions(n))
        if (e_core(p, e) == kappa && e_weight(p, e) == w) ++found;
    CHECK(found == block.size());
    CHECK(block.size() == quotient_tuples(w, e).size());
}
