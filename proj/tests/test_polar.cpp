#include <doctest.h>

#include <random>

#include "fec/polar.hpp"
#include "oracles.hpp"

using fec::BitVec;

TEST_CASE("bhattacharyya recursion, frozen expected values") {
    CHECK(fec::compute_bhattacharyya(1, 0.5) == std::vector<double>{0.5});
    CHECK(fec::compute_bhattacharyya(2, 0.5) == std::vector<double>{0.75, 0.25});
    CHECK(fec::compute_bhattacharyya(4, 0.5) ==
          std::vector<double>{0.9375, 0.5625, 0.4375, 0.0625});
}

TEST_CASE("bhattacharyya input validation") {
    CHECK_THROWS_AS(fec::compute_bhattacharyya(0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(fec::compute_bhattacharyya(3, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(fec::compute_bhattacharyya(-8, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(fec::compute_bhattacharyya(8, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(fec::compute_bhattacharyya(8, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(fec::compute_bhattacharyya(8, -0.2), std::invalid_argument);
}

TEST_CASE("bhattacharyya extremes sit at the first and last index") {
    for (double z0 : {0.2, 0.5, 0.8}) {
        for (int n : {2, 8, 64, 1024}) {
            const auto z = fec::compute_bhattacharyya(n, z0);
            for (double v : z) {
                CHECK(v >= z[n - 1]);
                CHECK(v <= z[0]);
                CHECK(v >= 0.0);
                CHECK(v <= 1.0);
            }
        }
    }
}

TEST_CASE("frozen-set selection") {
    const std::vector<double> z{0.9375, 0.5625, 0.4375, 0.0625};
    auto [info, frozen] = fec::select_frozen_set(z, 2);
    CHECK(info == std::vector<int>{2, 3});
    CHECK(frozen == std::vector<int>{0, 1});

    auto [info0, frozen0] = fec::select_frozen_set(z, 0);
    CHECK(info0.empty());
    CHECK(frozen0 == std::vector<int>{0, 1, 2, 3});

    SUBCASE("ties break toward the lower index") {
        const std::vector<double> tied{0.5, 0.3, 0.3, 0.9};
        auto [i1, f1] = fec::select_frozen_set(tied, 1);
        CHECK(i1 == std::vector<int>{1});
        auto [i2, f2] = fec::select_frozen_set(tied, 2);
        CHECK(i2 == std::vector<int>{1, 2});
    }

    CHECK_THROWS_AS(fec::select_frozen_set(z, 5), std::invalid_argument);
    CHECK_THROWS_AS(fec::select_frozen_set(z, -1), std::invalid_argument);
}

TEST_CASE("row weights match the dense generator matrix") {
    const auto w8 = fec::row_weights(8);
    CHECK(w8[5] == 4);
    CHECK(w8[0] == 1);
    CHECK(w8[7] == 8);

    for (int n : {2, 4, 8, 16, 32, 64}) {
        const auto w = fec::row_weights(n);
        const auto g = oracle::dense_generator(n);
        for (int i = 0; i < n; ++i) {
            int weight = 0;
            for (int j = 0; j < n; ++j) weight += g[i][j];
            CHECK(w[i] == weight);
        }
    }
}

TEST_CASE("leafset traversal") {
    CHECK(fec::leafset(8, 5) == std::vector<int>{0, 1, 4, 5});
    CHECK(fec::leafset_size(8, 5) == 4);
    CHECK(fec::leafset_size(2, 0) == 1);

    for (int n : {2, 4, 8, 16, 32, 64}) {
        const auto w = fec::row_weights(n);
        for (int i = 0; i < n; ++i) CHECK(fec::leafset_size(n, i) == w[i]);
    }
}

TEST_CASE("butterfly encoder") {
    CHECK(fec::polar_encode(BitVec{0, 0, 0, 0, 0, 0, 0, 0}) ==
          BitVec{0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(fec::polar_encode(BitVec{0, 1}) == BitVec{1, 1});
    CHECK_THROWS_AS(fec::polar_encode(BitVec{0, 1, 0}), std::invalid_argument);

    std::mt19937 rng(7);
    SUBCASE("matches the dense multiply") {
        for (int n : {2, 4, 8, 16, 32, 64}) {
            for (int rep = 0; rep < 20; ++rep) {
                BitVec u(n);
                for (auto& b : u) b = rng() & 1;
                CHECK(fec::polar_encode(u) == oracle::dense_encode(u));
            }
        }
    }
    SUBCASE("is an involution") {
        for (int n : {8, 64, 1024}) {
            for (int rep = 0; rep < 10; ++rep) {
                BitVec u(n);
                for (auto& b : u) b = rng() & 1;
                CHECK(fec::polar_encode(fec::polar_encode(u)) == u);
            }
        }
    }
}

TEST_CASE("code construction invariants") {
    const auto spec = fec::PolarCodeSpec::construct(64, 24);
    CHECK(spec.n == 64);
    CHECK(spec.m == 6);
    CHECK(spec.k() == 24);
    CHECK(spec.info_set.size() + spec.frozen_set.size() == 64);

    std::vector<std::uint8_t> seen(64, 0);
    for (int i : spec.info_set) seen[i] ^= 1;
    for (int i : spec.frozen_set) seen[i] ^= 1;
    for (auto s : seen) CHECK(s == 1);

    // every information position is at least as reliable as every frozen one
    double worst_info = 0.0;
    for (int i : spec.info_set) worst_info = std::max(worst_info, spec.reliability[i]);
    for (int i : spec.frozen_set) CHECK(spec.reliability[i] >= worst_info);

    CHECK_THROWS_AS(fec::PolarCodeSpec::construct(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(fec::PolarCodeSpec::construct(64, 65), std::invalid_argument);
}
