#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "floerstair/alexander.hpp"
#include "floerstair/invariants.hpp"
#include "floerstair/staircase.hpp"

using namespace floerstair;

namespace {

laurent_poly parse(std::initializer_list<std::pair<std::int64_t, int>> terms) {
    laurent_poly p;
    for (const auto& [e, c] : terms)
        p.add_term(e, c);
    return p;
}

staircase stair(std::initializer_list<std::int64_t> half) {
    return staircase(std::vector<std::int64_t>(half));
}

}  // namespace

TEST_CASE("staircase extraction from L-space polynomials") {
    CHECK(staircase_from_alexander(torus_alexander(2, 5)) == stair({1, 1}));
    // exponents 0,1,2 -> gaps 1,1 -> half (1)
    CHECK(staircase_from_alexander(torus_alexander(2, 3)) == stair({1}));
    // exponents 0,1,3,5,6
    CHECK(staircase_from_alexander(torus_alexander(3, 4)) == stair({1, 2}));

    CHECK_THROWS_AS(staircase_from_alexander(parse({{0, 1}, {1, 1}, {2, -1}})),
                    not_lspace_form_error);
    CHECK_THROWS_AS(staircase_from_alexander(parse({{0, 1}, {1, -1}})), not_lspace_form_error);
    CHECK_THROWS_AS(staircase_from_alexander(parse({{1, 1}, {2, -1}, {3, 1}})),
                    not_lspace_form_error);
    CHECK_THROWS_AS(staircase_from_alexander(parse({{0, 1}, {1, -2}, {2, 1}})),
                    not_lspace_form_error);
    CHECK_THROWS_AS(staircase_from_alexander(laurent_poly::one()), not_lspace_form_error);
}

TEST_CASE("symmetric completion") {
    CHECK(stair({1, 1}).symmetric_gaps() == std::vector<std::int64_t>{1, 1, 1, 1});
    CHECK(stair({1, 2}).symmetric_gaps() == std::vector<std::int64_t>{1, 2, 2, 1});
    CHECK(stair({1}).symmetric_gaps() == std::vector<std::int64_t>{1, 1});
    CHECK(stair({1, 2}).exponents() == std::vector<std::int64_t>{0, 1, 3, 5, 6});
    CHECK(stair({1, 2}).genus() == 3);
}

TEST_CASE("round trip staircase -> polynomial -> staircase") {
    std::mt19937 rng(0xabcd);
    std::uniform_int_distribution<int> len(1, 5), step(1, 7);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<std::int64_t> half(len(rng));
        for (auto& a : half)
            a = step(rng);
        const staircase s(half);
        CHECK(staircase_from_alexander(s.alexander()) == s);
    }
}

TEST_CASE("genus of torus staircases") {
    for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{2, 3}, {2, 5}, {3, 4},
                        {3, 5}, {4, 5}, {5, 6}})
        CHECK(staircase_from_alexander(torus_alexander(p, q)).genus() ==
              (p - 1) * (q - 1) / 2);
}

TEST_CASE("concatenation and the sandwich hypothesis") {
    const auto r1 = concat(stair({1}), stair({1}));
    CHECK(r1.joined == stair({1, 1}));
    CHECK(r1.hypothesis_holds);

    const auto r2 = concat(stair({1, 4}), stair({2, 3}));
    CHECK(r2.joined == stair({1, 4, 2, 3}));
    CHECK(r2.hypothesis_holds);

    const auto r3 = concat(stair({1}), stair({5}));
    CHECK(r3.joined == stair({1, 5}));
    CHECK_FALSE(r3.hypothesis_holds);

    const auto r4 = concat(stair({2, 5}), stair({1, 1}));
    CHECK_FALSE(r4.hypothesis_holds);  // steps below the largest horizontal step
}

TEST_CASE("when the sandwich hypothesis holds, concatenation matches the tensor") {
    std::mt19937 rng(0x5eed2);
    std::uniform_int_distribution<int> len(1, 3), step(1, 5);
    int held = 0;
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<std::int64_t> ha(len(rng)), hb(len(rng));
        for (auto& v : ha)
            v = step(rng);
        for (auto& v : hb)
            v = step(rng);
        const staircase a(ha), b(hb);
        const concat_result r = concat(a, b);
        if (!r.hypothesis_holds)
            continue;
        if (a.generator_count() * b.generator_count() * r.joined.generator_count() > 20000)
            continue;
        ++held;
        stair_sum sum;
        sum.add(a, 1);
        sum.add(b, 1);
        CHECK(epsilon_equivalent(to_complex(sum), to_complex(r.joined)));
    }
    CHECK(held > 20);
}

TEST_CASE("stair_sum bookkeeping") {
    stair_sum s;
    s.add(stair({1, 1}), 1);
    s.add(stair({1, 1}), -1);
    CHECK(s.empty());

    s.add(stair({1}), 2);
    s.add(stair({1}), 1);
    CHECK(s.terms().at(stair({1})) == 3);

    const stair_sum t = stairsum_simplify({{stair({1, 23}), 1},
                                           {stair({1, 15}), 1},
                                           {stair({1, 19}), -1},
                                           {stair({1, 23}), -1},
                                           {stair({1, 15}), -1},
                                           {stair({1, 19}), 1}});
    CHECK(t.empty());

    CHECK((stair_sum::single(stair({1}), 2) - stair_sum::single(stair({1}), 2)).empty());
    CHECK(stair_sum::single(stair({2, 1}), -1).to_string() == "-(2, 1)");
}

TEST_CASE("staircase complexes") {
    const filtered_complex c = to_complex(stair({1, 1}));
    CHECK(c.size() == 5);
    CHECK(c.arrows().size() == 4);
    // A(x_i) = g - n_i with g = 2.
    std::vector<std::int64_t> alex;
    for (const auto& g : c.generators())
        alex.push_back(g.alexander);
    CHECK(alex == std::vector<std::int64_t>{2, 1, 0, -1, -2});

    const filtered_complex t23 = to_complex(stair({1}));
    CHECK(t23.size() == 3);
    std::vector<std::int64_t> a23;
    for (const auto& g : t23.generators())
        a23.push_back(g.alexander);
    CHECK(a23 == std::vector<std::int64_t>{1, 0, -1});

    CHECK(filtered_complex::unknot().size() == 1);
    CHECK_THROWS_AS(staircase(std::vector<std::int64_t>{}), invariant_violation);
}

TEST_CASE("staircase complex structure invariants") {
    std::mt19937 rng(0x777);
    std::uniform_int_distribution<int> len(1, 4), step(1, 6);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<std::int64_t> half(len(rng));
        for (auto& a : half)
            a = step(rng);
        const staircase s(half);
        const filtered_complex c = to_complex(s);  // constructor checks d^2 = 0,
                                                   // Maslov drops, filtration drops
        CHECK(c.size() == s.generator_count());
        // Exactly one generator has no incident vertical arrow.
        int unpaired = 0;
        for (std::int32_t i = 0; i < static_cast<std::int32_t>(c.size()); ++i) {
            bool has_vertical = false;
            for (const auto& [a, b] : c.arrows())
                if ((a == i || b == i) && c.arrow_is_vertical(a, b))
                    has_vertical = true;
            if (!has_vertical)
                ++unpaired;
        }
        CHECK(unpaired == 1);
        // Symmetric dual convention: the last generator has Maslov -2g.
        CHECK(c.generators().back().maslov == -2 * s.genus());
        CHECK(c.generators().front().maslov == 0);
    }
}

TEST_CASE("tensor complexes of formal sums") {
    stair_sum s;
    s.add(stair({1}), 2);
    CHECK(to_complex(s).size() == 9);
    s.add(stair({1, 1}), -1);
    CHECK(to_complex(s).size() == 45);
    CHECK(to_complex(stair_sum{}).size() == 1);
    CHECK_THROWS_AS(to_complex(s, 10), resource_limit_error);
}
