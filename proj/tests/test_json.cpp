#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "floerstair/alexander.hpp"
#include "floerstair/json_io.hpp"

using namespace floerstair;

namespace {

staircase random_stair(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(1, 4), step(1, 6);
    std::vector<std::int64_t> half(len(rng));
    for (auto& a : half)
        a = step(rng);
    return staircase(half);
}

}  // namespace

TEST_CASE("laurent polynomial schema") {
    const laurent_poly p = torus_alexander(2, 5);
    const json j = to_json(p);
    CHECK(j.dump() == R"({"terms":[[0,1],[1,-1],[2,1],[3,-1],[4,1]]})");
    CHECK(laurent_from_json(j) == p);
}

TEST_CASE("staircase and sum schemas round-trip") {
    std::mt19937 rng(0x99);
    for (int iter = 0; iter < 50; ++iter) {
        const staircase s = random_stair(rng);
        CHECK(staircase_from_json(to_json(s)) == s);
        stair_sum sum;
        sum.add(s, 2);
        sum.add(random_stair(rng), -1);
        CHECK(stairsum_from_json(to_json(sum)) == sum);
    }
    const staircase s({1, 2});
    CHECK(to_json(s).dump() == R"({"half":[1,2]})");
}

TEST_CASE("complex schema round-trips through construction") {
    std::mt19937 rng(0xaa);
    for (int iter = 0; iter < 25; ++iter) {
        const filtered_complex c = iter % 2 ? dual(to_complex(random_stair(rng)))
                                            : to_complex(random_stair(rng));
        const filtered_complex back = complex_from_json(to_json(c));
        CHECK(back.size() == c.size());
        CHECK(back.arrows() == c.arrows());
        CHECK(to_json(back) == to_json(c));
    }
}

TEST_CASE("digests are stable and input-sensitive") {
    const filtered_complex a = to_complex(staircase({1, 2}));
    const filtered_complex b = to_complex(staircase({2, 1}));
    CHECK(digest(a) == digest(a));
    CHECK(digest(a) != digest(b));
    CHECK(digest(a).substr(0, 8) == "fnv1a64:");
}

TEST_CASE("invariant record serialization") {
    const invariant_record r{3, 4, 3, -1};
    const json j = to_json(r, "fnv1a64:0");
    CHECK(j.at("tau") == 3);
    CHECK(j.at("nu") == 4);
    CHECK(j.at("nu_prime") == 3);
    CHECK(j.at("epsilon") == -1);
    CHECK(j.at("complex_digest") == "fnv1a64:0");
}
