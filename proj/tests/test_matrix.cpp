#include <doctest.h>

#include "helpers.hpp"

using namespace sq;

namespace {

RatMatrix from_ints(int rows, int cols, std::initializer_list<int> vals) {
    RatMatrix m(rows, cols);
    auto it = vals.begin();
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = *it++;
    return m;
}

}  // namespace

TEST_CASE("rref on the stock examples") {
    auto id = RatMatrix::identity(2);
    auto r = rref(id);
    CHECK(r.mat == id);
    CHECK(r.pivots == std::vector<int>{0, 1});
    CHECK(r.rank == 2);

    auto z = RatMatrix::zero(3, 3);
    auto rz = rref(z);
    CHECK(rz.mat == z);
    CHECK(rz.pivots.empty());
    CHECK(rz.rank == 0);

    auto m = from_ints(2, 2, {1, 2, 2, 4});
    auto rm = rref(m);
    CHECK(rm.mat == from_ints(2, 2, {1, 2, 0, 0}));
    CHECK(rm.pivots == std::vector<int>{0});
    CHECK(rm.rank == 1);
}

TEST_CASE("kernel bases") {
    CHECK(kernel_basis(RatMatrix::identity(3)).empty());
    CHECK(kernel_basis(RatMatrix::zero(2, 3)).size() == 3);
    auto kb = kernel_basis(from_ints(1, 2, {1, 1}));
    REQUIRE(kb.size() == 1);
    CHECK(kb[0][0] == -kb[0][1]);
    CHECK(kb[0][0] != 0);
}

TEST_CASE("solve") {
    std::vector<Rat> b{Rat(3), Rat(-7)};
    auto s = solve(RatMatrix::identity(2), b);
    REQUIRE(s.has_value());
    CHECK(*s == b);

    auto s2 = solve(from_ints(1, 2, {1, 1}), {Rat(2)});
    REQUIRE(s2.has_value());
    CHECK((*s2)[0] + (*s2)[1] == 2);

    auto s3 = solve(from_ints(2, 1, {1, 1}), {Rat(0), Rat(1)});
    CHECK(!s3.has_value());

    CHECK_THROWS_AS(solve(RatMatrix::identity(2), {Rat(1)}), std::invalid_argument);
}

TEST_CASE("rank equals rank of the transpose, kernel is exact, rref idempotent") {
    sqtest::Rng rng(0xa11ce);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = rng.uniform(1, 5), cols = rng.uniform(1, 5);
        RatMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                Rat e(rng.uniform(-3, 3), rng.uniform(1, 3));
                e.canonicalize();
                m.at(r, c) = e;
            }
        CHECK(rank_of(m) == rank_of(m.transpose()));
        auto kb = kernel_basis(m);
        CHECK(static_cast<int>(kb.size()) == cols - rank_of(m));
        for (const auto& v : kb) {
            auto mv = mat_apply(m, v);
            for (const auto& x : mv) CHECK(x == 0);
        }
        // independence: stack the kernel vectors as columns and check rank
        if (!kb.empty()) {
            RatMatrix k(cols, static_cast<int>(kb.size()));
            for (size_t j = 0; j < kb.size(); ++j)
                for (int r = 0; r < cols; ++r) k.at(r, static_cast<int>(j)) = kb[j][r];
            CHECK(rank_of(k) == static_cast<int>(kb.size()));
        }
        auto r1 = rref(m);
        CHECK(rref(r1.mat).mat == r1.mat);
    }
}

TEST_CASE("rational parsing round trip") {
    CHECK(rat_parse("-3/6") == Rat(-1, 2));
    CHECK(rat_str(Rat(-1, 2)) == "-1/2");
    CHECK(rat_parse("7") == 7);
    CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
}
