#include <catch2/catch_amalgamated.hpp>

#include "floerstair/alexander.hpp"

using namespace floerstair;

namespace {

laurent_poly parse(std::initializer_list<std::pair<std::int64_t, int>> terms) {
    laurent_poly p;
    for (const auto& [e, c] : terms)
        p.add_term(e, c);
    return p;
}

}  // namespace

TEST_CASE("torus knot Alexander polynomials from the quotient formula") {
    CHECK(torus_alexander(2, 3) == parse({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(torus_alexander(2, 5) == parse({{0, 1}, {1, -1}, {2, 1}, {3, -1}, {4, 1}}));
    CHECK(torus_alexander(1, 7) == laurent_poly::one());
    CHECK(torus_alexander(3, 4) == parse({{0, 1}, {1, -1}, {3, 1}, {5, -1}, {6, 1}}));

    CHECK_THROWS_AS(torus_alexander(2, 4), not_coprime_error);
    CHECK_THROWS_AS(torus_alexander(3, -2), not_coprime_error);
    CHECK_THROWS_AS(torus_alexander(0, 1), not_coprime_error);
}

TEST_CASE("torus knot polynomial degree and normalization") {
    for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{2, 3}, {2, 5}, {3, 4},
                        {3, 5}, {4, 5}, {5, 6}, {4, 7}, {6, 11}}) {
        const laurent_poly d = torus_alexander(p, q);
        CHECK(d.min_exponent() == 0);
        CHECK(d.coeff(0) == 1);
        CHECK(d.max_exponent() == (p - 1) * (q - 1));
        CHECK(d.is_symmetric());
        CHECK(d.evaluate_at_one() == 1);
    }
}

TEST_CASE("cable formula") {
    const laurent_poly trefoil = torus_alexander(2, 3);
    CHECK(cable_alexander(trefoil, 1, 1) == trefoil);
    for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{2, 3}, {3, 4}, {5, 6}})
        CHECK(cable_alexander(laurent_poly::one(), p, q) == torus_alexander(p, q));
    CHECK(cable_alexander(trefoil, 2, 7) ==
          trefoil.substitute_power(2) * torus_alexander(2, 7));
    CHECK_THROWS_AS(cable_alexander(trefoil, 2, 6), not_coprime_error);
}

TEST_CASE("iterated cables") {
    CHECK(iterated_cable_alexander({{{2, 3}}}) == torus_alexander(2, 3));
    CHECK(iterated_cable_alexander({{{2, 3}, {1, 1}}}) == torus_alexander(2, 3));

    // Genus is additive under cabling: g = p*g' + (p-1)(q-1)/2, so the degree
    // of the (4,121)-cable of the (5,6)-cable of the trefoil is 2 * 240.
    const cable_word w{{{2, 3}, {5, 6}, {4, 121}}};
    CHECK(cable_genus(w) == 240);
    const laurent_poly d = iterated_cable_alexander(w);
    CHECK(d.max_exponent() == 480);
    CHECK(d.min_exponent() == 0);
    CHECK(d.is_symmetric());

    CHECK_THROWS_AS(iterated_cable_alexander({{{2, 3}, {2, 4}}}), not_coprime_error);
}

TEST_CASE("closed form for T(p, np+1) against the quotient oracle") {
    CHECK(closed_form_np1(2, 1) == parse({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(closed_form_np1(2, 2) == parse({{0, 1}, {1, -1}, {2, 1}, {3, -1}, {4, 1}}));
    CHECK(closed_form_np1(3, 2) == torus_alexander(3, 7));
    for (std::int64_t p = 2; p <= 8; ++p)
        for (std::int64_t n = 1; n <= 5; ++n)
            CHECK(closed_form_np1(p, n) == torus_alexander(p, n * p + 1));
}

TEST_CASE("closed form for the (p,p+1) cable of the trefoil against the product oracle") {
    const laurent_poly trefoil = torus_alexander(2, 3);
    CHECK(closed_form_pcable(2) == cable_alexander(trefoil, 2, 3));
    CHECK(closed_form_pcable(5) == cable_alexander(trefoil, 5, 6));
    for (std::int64_t p = 2; p <= 10; ++p) {
        CHECK(closed_form_pcable(p) == cable_alexander(trefoil, p, p + 1));
        CHECK(closed_form_pcable(p).is_symmetric());
    }
}

TEST_CASE("closed form for T(p, 2p-1) against the quotient oracle") {
    CHECK(closed_form_2pm1(2) == parse({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(closed_form_2pm1(3) == torus_alexander(3, 5));
    CHECK(closed_form_2pm1(6) == torus_alexander(6, 11));
    for (std::int64_t p = 2; p <= 8; ++p)
        CHECK(closed_form_2pm1(p) == torus_alexander(p, 2 * p - 1));
}

TEST_CASE("every produced polynomial is symmetric with value 1 at t = 1") {
    for (std::int64_t p = 2; p <= 6; ++p)
        for (std::int64_t n = 1; n <= 3; ++n) {
            const laurent_poly d = closed_form_np1(p, n);
            CHECK(d.is_symmetric());
            CHECK(d.evaluate_at_one() == 1);
        }
    const cable_word k{{{2, 3}, {5, 6}, {4, 121}}};
    CHECK(iterated_cable_alexander(k).evaluate_at_one() == 1);
}
