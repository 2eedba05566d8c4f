#include <catch2/catch_amalgamated.hpp>

#include <fockcanon/canonical.hpp>
#include <fockcanon/jantzen.hpp>

using namespace fockcanon;

namespace {
std::map<Partition, Int, LexGreater> column_at_one(const Partition& mu, int e) {
    std::map<Partition, Int, LexGreater> vals;
    for (const auto& m : block_partitions(e_core(mu, e), e, e_weight(mu, e))) vals[m] = 0;
    auto cols = llt_canonical(static_cast<int>(mu.size()), e);
    for (const auto& col : cols)
        if (col.mu == mu)
            for (const auto& [p, c] : col.vector.terms()) vals[p] = c.evaluate_at_one();
    return vals;
}
}  // namespace

TEST_CASE("worked induced-sequence example") {
    InducedSequence seq = induced_sequence(Partition{6, 6, 5, 4}, 3, 6);
    CHECK(seq.values == std::vector<int>{11, 10, 8, 8, 7, 6, 5});
    CHECK(seq.beads == 6);
}

TEST_CASE("induced sequences are weakly decreasing with one entry per fall step") {
    for (const auto& p : all_partitions(8)) {
        InducedSequence seq = induced_sequence(p, 2, common_display_beads(p, p, 2));
        CHECK(std::is_sorted(seq.values.begin(), seq.values.end(), std::greater<int>()));
        // one entry per unit of e-weight
        CHECK(static_cast<int>(seq.values.size()) == e_weight(p, 2));
    }
}

TEST_CASE("upward moves of (2,2) at e=2: both single-hop moves are legal") {
    auto mv = upward_moves(Partition{2, 2}, 2, 2);
    REQUIRE(mv.size() == 2);
    CHECK(mv[0].from == 2);
    CHECK(mv[0].to == 0);
    CHECK(mv[0].hops == 1);
    CHECK(mv[0].crossings == 0);
    CHECK(mv[1].from == 3);
    CHECK(mv[1].to == 1);
    CHECK(mv[1].hops == 1);
    CHECK(mv[1].crossings == 1);

    // the same moves two rows lower in a display enlarged by one cycle
    auto mv4 = upward_moves(Partition{2, 2}, 2, 4);
    REQUIRE(mv4.size() == 2);
    CHECK(mv4[0].from == 4);
    CHECK(mv4[0].to == 2);
    CHECK(mv4[1].from == 5);
    CHECK(mv4[1].to == 3);
}

TEST_CASE("pair relations out of (3,1) at e=2") {
    CHECK(common_display_beads(Partition{3, 1}, Partition{2, 2}, 2) == 6);
    auto pairs = arrow_pairs(Partition{3, 1}, 2, 6);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].tau == Partition{4});
    CHECK(pairs[0].hops == 2);
    CHECK(pairs[0].l_lambda_sigma == 1);
    CHECK(pairs[0].l_tau_sigma == 0);
}

TEST_CASE("move order and sequence order on the weight-2 block at e=2") {
    CHECK(leq_J(Partition{2, 2}, Partition{4}, 2));
    CHECK(leq_J(Partition{2, 1, 1}, Partition{3, 1}, 2));
    CHECK(leq_J(Partition{2, 1, 1}, Partition{4}, 2));
    CHECK(leq_J(Partition{4}, Partition{4}, 2));  // reflexive
    CHECK_FALSE(leq_J(Partition{3, 1}, Partition{2, 2}, 2));
    CHECK_FALSE(leq_J(Partition{4}, Partition{1, 1, 1, 1}, 2));

    CHECK(leq_p(Partition{1, 1, 1, 1}, Partition{4}, 2));
    CHECK(leq_p(Partition{2, 2}, Partition{3, 1}, 2));
    CHECK_FALSE(leq_p(Partition{4}, Partition{2, 2}, 2));
}

TEST_CASE("same-profile equivalence groups quotient sizes") {
    CHECK(approx_equiv(Partition{4}, Partition{2, 1, 1}, 2));
    CHECK(approx_equiv(Partition{3, 1}, Partition{1, 1, 1, 1}, 2));
    CHECK_FALSE(approx_equiv(Partition{4}, Partition{2, 2}, 2));
    CHECK_FALSE(approx_equiv(Partition{4}, Partition{3, 1}, 2));
    CHECK(approx_equiv(Partition{4}, Partition{4}, 2));
}

TEST_CASE("prime valuations") {
    CHECK(characteristic_valuation(0, 5) == 0);
    CHECK(characteristic_valuation(1, 12) == 0);
    CHECK(characteristic_valuation(2, 8) == 3);
    CHECK(characteristic_valuation(2, 6) == 1);
    CHECK(characteristic_valuation(3, 9) == 2);
    CHECK(characteristic_valuation(5, 7) == 0);
    CHECK_THROWS_AS(characteristic_valuation(2, 0), std::invalid_argument);
}

TEST_CASE("alternating move sums against the frozen weight-2 table") {
    auto col4 = column_at_one(Partition{4}, 2);
    CHECK(jantzen_sum(Partition{3, 1}, Partition{4}, 2, 0, col4) == 1);
    CHECK(jantzen_sum(Partition{2, 2}, Partition{4}, 2, 0, col4) == 0);
    CHECK(jantzen_sum(Partition{2, 1, 1}, Partition{4}, 2, 0, col4) == 1);
    CHECK(jantzen_sum(Partition{1, 1, 1, 1}, Partition{4}, 2, 0, col4) == 2);
    CHECK(jantzen_sum(Partition{3, 1}, Partition{4}, 2, 2, col4) == 2);
    CHECK(jantzen_sum(Partition{1, 1, 1, 1}, Partition{4}, 2, 2, col4) == 3);

    auto col31 = column_at_one(Partition{3, 1}, 2);
    CHECK(jantzen_sum(Partition{4}, Partition{3, 1}, 2, 0, col31) == 0);
    CHECK(jantzen_sum(Partition{2, 2}, Partition{3, 1}, 2, 0, col31) == 1);
    CHECK(jantzen_sum(Partition{2, 1, 1}, Partition{3, 1}, 2, 0, col31) == 2);
    CHECK(jantzen_sum(Partition{2, 1, 1}, Partition{3, 1}, 2, 2, col31) == 3);
    CHECK(jantzen_sum(Partition{1, 1, 1, 1}, Partition{3, 1}, 2, 0, col31) == 0);
}

TEST_CASE("move-sum argument validation") {
    auto col4 = column_at_one(Partition{4}, 2);
    // equal labels are rejected
    CHECK_THROWS_AS(jantzen_sum(Partition{4}, Partition{4}, 2, 0, col4), std::invalid_argument);
    // negative characteristic is rejected
    CHECK_THROWS_AS(jantzen_sum(Partition{3, 1}, Partition{4}, 2, -1, col4),
                    std::invalid_argument);
    // a row label outside the column's block gives zero
    std::map<Partition, Int, LexGreater> tiny{{Partition{2, 1}, Int(1)}};
    CHECK(jantzen_sum(Partition{3}, Partition{2, 1}, 2, 0, tiny) == 0);
    // a column map missing a consulted block member is an error ...
    auto incomplete = col4;
    incomplete.erase(Partition{4});
    CHECK_THROWS_AS(jantzen_sum(Partition{2, 2}, Partition{4}, 2, 0, incomplete),
                    std::invalid_argument);
    // ... but members no arrow ever reaches are never consulted
    auto unreached = col4;
    unreached.erase(Partition{2, 2});
    CHECK(jantzen_sum(Partition{3, 1}, Partition{4}, 2, 0, unreached) == 1);
}
