#include <catch2/catch_amalgamated.hpp>

#include <fockcanon/fock.hpp>

using namespace fockcanon;

TEST_CASE("vector algebra keeps the support reduced") {
    FockVector x = FockVector::basis(Partition{2, 1});
    x.add_term(Partition{3}, Laurent::monomial(1, 2));
    CHECK(x.support_size() == 2);
    x.add_term(Partition{3}, Laurent::monomial(1, -2));
    CHECK(x.support_size() == 1);
    CHECK(x.coefficient(Partition{3}).is_zero());
    FockVector y = x - x;
    CHECK(y.is_zero());
    CHECK(y.homogeneous_size() == -1);
    CHECK(x.homogeneous_size() == 3);
    CHECK(x.max_length() == 2);
}

TEST_CASE("bead-count selection avoids the wrap-around runner") {
    FockVector x = FockVector::basis(Partition{3, 1, 1});
    for (int e = 2; e <= 4; ++e)
        for (int r = 0; r < e; ++r) {
            int t = select_bead_count(x, r, e);
            CHECK(t >= 3);  // at least the longest support length
            CHECK((r + t) % e != 0);
            int t2 = select_bead_count(x, r, e, 10);
            CHECK(t2 >= 10);
            CHECK((r + t2) % e != 0);
        }
}

TEST_CASE("one forward step from the empty partition") {
    // At e=2 the first node has residue 0: f_0(empty) = (1), f_1(empty) = 0.
    FockVector empty = FockVector::basis(Partition{});
    int t0 = select_bead_count(empty, 0, 2);
    CHECK(f_step(empty, 0, 2, t0) == FockVector::basis(Partition{1}));
    int t1 = select_bead_count(empty, 1, 2);
    CHECK(f_step(empty, 1, 2, t1).is_zero());
}

TEST_CASE("forward step producing the v-graded two-node sum") {
    // f_1((1)) = (2) + v (1,1) at e=2.
    FockVector one = FockVector::basis(Partition{1});
    int t = select_bead_count(one, 1, 2);
    FockVector r = f_step(one, 1, 2, t);
    CHECK(r.support_size() == 2);
    CHECK(r.coefficient(Partition{2}) == Laurent::one());
    CHECK(r.coefficient(Partition{1, 1}) == Laurent::monomial(1, 1));
}

TEST_CASE("step results are independent of the display size") {
    for (int e = 2; e <= 4; ++e)
        for (const auto& p : all_partitions(6))
            for (int r = 0; r < e; ++r) {
                FockVector x = FockVector::basis(p);
                int t = select_bead_count(x, r, e);
                FockVector with_t = f_step(x, r, e, t);
                FockVector with_bigger = f_step(x, r, e, t + 2 * e);
                CHECK(with_t == with_bigger);
                FockVector back_t = e_step(x, r, e, t);
                FockVector back_bigger = e_step(x, r, e, t + 2 * e);
                CHECK(back_t == back_bigger);
            }
}

TEST_CASE("forward steps preserve grading and raise size by one") {
    for (int e = 2; e <= 3; ++e)
        for (const auto& p : all_partitions(5))
            for (int r = 0; r < e; ++r) {
                FockVector x = FockVector::basis(p);
                FockVector y = f_step(x, r, e, select_bead_count(x, r, e));
                if (!y.is_zero()) CHECK(y.homogeneous_size() == p.size() + 1);
                FockVector z = e_step(x, r, e, select_bead_count(x, r, e));
                if (!z.is_zero()) CHECK(z.homogeneous_size() == p.size() - 1);
            }
}

TEST_CASE("backward steps undo forward steps on single-node supports") {
    // e_1((2)) = v^{-1} (1) and e_1((1,1)) = (1) at e=2; together these are
    // adjoint to f_1((1)) = (2) + v(1,1).
    FockVector two = FockVector::basis(Partition{2});
    int t = select_bead_count(two, 1, 2);
    CHECK(e_step(two, 1, 2, t) ==
          Laurent::monomial(-1, 1) * FockVector::basis(Partition{1}));
    FockVector col = FockVector::basis(Partition{1, 1});
    t = select_bead_count(col, 1, 2);
    CHECK(e_step(col, 1, 2, t) == FockVector::basis(Partition{1}));
}

TEST_CASE("divided powers are exact and hit the frozen anchor") {
    // f_1 applied twice to (1) gives [2] (2,1); the divided square is (2,1).
    FockVector one = FockVector::basis(Partition{1});
    FockVector sq = divided_power_auto(one, StepKind::f, 1, 2, 2);
    CHECK(sq == FockVector::basis(Partition{2, 1}));

    // undivided double application carries the full Gaussian factor
    int t = select_bead_count(one, 1, 2);
    FockVector raw = f_step(f_step(one, 1, 2, t), 1, 2, t);
    CHECK(raw == gauss_factorial(2) * sq);
}

TEST_CASE("composite induction operator over a fixed core") {
    // With the empty core at e=2, slot a=1 and k=1, the factor sequence is
    // slots [0, 1] hitting indices (0,1): F(empty) walks to the two-node sum.
    FockVector empty = FockVector::basis(Partition{});
    FockVector out = F_operator(empty, Partition{}, 1, 1, 2);
    CHECK(out.support_size() == 2);
    CHECK(out.coefficient(Partition{2}) == Laurent::one());
    CHECK(out.coefficient(Partition{1, 1}) == Laurent::monomial(1, 1));
}

TEST_CASE("step parameter validation") {
    FockVector x = FockVector::basis(Partition{2, 2, 1});
    CHECK_THROWS_AS(f_step(x, 1, 2, 2), std::invalid_argument);  // t below max length
    CHECK_THROWS_AS(f_step(x, 0, 2, 4), std::invalid_argument);  // (r+t) wraps to runner 0
    CHECK_THROWS_AS(f_step(x, 2, 2, 3), std::invalid_argument);  // r out of range
    CHECK_THROWS_AS(f_step(x, 0, 1, 3), std::invalid_argument);  // e too small
}
