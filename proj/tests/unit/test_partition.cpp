#include <catch2/catch_amalgamated.hpp>

#include <fockcanon/partition.hpp>

using namespace fockcanon;

TEST_CASE("parsing accepts comma lists, dashes, and whitespace") {
    CHECK(parse_partition("3,2,1") == Partition{3, 2, 1});
    CHECK(parse_partition(" 3 , 2 , 1 ") == Partition{3, 2, 1});
    CHECK(parse_partition("-") == Partition{});
    CHECK(parse_partition("7") == Partition{7});
}

TEST_CASE("parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_partition("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("2,3"), std::invalid_argument);  // increasing
    CHECK_THROWS_AS(parse_partition("3,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,2,"), std::invalid_argument);
}

TEST_CASE("to_string round-trips through parse_partition") {
    for (const auto& p : all_partitions(7)) CHECK(parse_partition(to_string(p)) == p);
    CHECK(to_string(Partition{}) == "-");
    CHECK(to_string(Partition{2, 1}) == "2,1");
}

TEST_CASE("partition enumeration counts match the partition numbers") {
    // p(0..10) = 1,1,2,3,5,7,11,15,22,30,42
    const std::size_t expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(all_partitions(n).size() == expected[n]);
}

TEST_CASE("e-regular enumeration counts match the distinct-part counts at e=2") {
    // q(0..10) = 1,1,1,2,2,3,4,5,6,8,10 (partitions into distinct parts)
    const std::size_t expected[] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10};
    for (int n = 0; n <= 10; ++n) CHECK(e_regular_partitions(n, 2).size() == expected[n]);
}

TEST_CASE("e-regularity is a cap on repeated parts") {
    CHECK(is_e_regular(Partition{3, 3, 1}, 3));
    CHECK_FALSE(is_e_regular(Partition{3, 3, 3}, 3));
    CHECK(is_e_regular(Partition{}, 2));
    CHECK_FALSE(is_e_regular(Partition{1, 1}, 2));
    CHECK(is_e_regular(Partition{2, 1}, 2));
}

TEST_CASE("dominance compares partial sums of equal-size partitions") {
    CHECK(dominates(Partition{4}, Partition{2, 2}));
    CHECK(dominates(Partition{2, 2}, Partition{2, 1, 1}));
    CHECK_FALSE(dominates(Partition{2, 2}, Partition{3, 1}));
    CHECK(dominates(Partition{3, 1}, Partition{3, 1}));
    // incomparable pair
    CHECK_FALSE(dominates(Partition{3, 3}, Partition{4, 1, 1}));
    CHECK_FALSE(dominates(Partition{4, 1, 1}, Partition{3, 3}));
    // different sizes are never comparable
    CHECK_FALSE(dominates(Partition{4}, Partition{2, 1}));
    CHECK_FALSE(dominates(Partition{2, 1}, Partition{4}));
}

TEST_CASE("conjugation is an involution and swaps rows with columns") {
    CHECK(conjugate(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});
    CHECK(conjugate(Partition{}) == Partition{});
    for (const auto& p : all_partitions(8)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("partition lists are sorted descending-lexicographically") {
    auto parts = all_partitions(5);
    REQUIRE(parts.size() == 7);
    CHECK(parts.front() == Partition{5});
    CHECK(parts.back() == Partition{1, 1, 1, 1, 1});
    CHECK(std::is_sorted(parts.begin(), parts.end(), LexGreater{}));
}
