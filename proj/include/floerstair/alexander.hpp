#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "floerstair/errors.hpp"
#include "floerstair/laurent.hpp"

namespace floerstair {

// One cabling stage.  p is the longitudinal winding; stage (p, q) applied to a
// companion K produces the cable K_{p,q}.  The first stage applied to the
// unknot gives the torus knot T_{p,q}.
struct cable_stage {
    std::int64_t p = 1;
    std::int64_t q = 1;

    friend bool operator==(const cable_stage&, const cable_stage&) = default;
};

// An iterated cable described by its stages, innermost first.
struct cable_word {
    std::vector<cable_stage> stages;

    void validate() const {
        check_invariant(!stages.empty(), "cable_word: at least one stage required");
        for (const auto& s : stages) {
            if (s.p < 1 || std::gcd(s.p, s.q) != 1)
                throw not_coprime_error("cable stage (" + std::to_string(s.p) + "," +
                                        std::to_string(s.q) + ") must have p >= 1 and gcd(p,q) = 1");
        }
    }
};

inline std::int64_t torus_genus(std::int64_t p, std::int64_t q) {
    return (p - 1) * (q - 1) / 2;
}

// Seifert genus of an iterated cable of the unknot (all stages fibered):
// g(K_{p,q}) = p*g(K) + (p-1)(q-1)/2.
inline std::int64_t cable_genus(const cable_word& w) {
    w.validate();
    std::int64_t g = 0;
    for (const auto& s : w.stages)
        g = s.p * g + torus_genus(s.p, s.q);
    return g;
}

// Normalizes so the minimum exponent is 0 and the constant coefficient is +1.
inline laurent_poly normalize_alexander(const laurent_poly& p) {
    check_invariant(!p.is_zero(), "normalize_alexander: zero polynomial");
    laurent_poly r = p.shifted(-p.min_exponent());
    const coeff_t c0 = r.coeff(0);
    if (c0 == -1)
        return -r;
    check_invariant(c0 == 1, "normalize_alexander: constant coefficient must be +-1");
    return r;
}

// Alexander polynomial of the positive torus knot T_{p,q} via the quotient
//   (t-1)(t^{pq}-1) / ((t^p-1)(t^q-1)),
// normalized with lowest exponent 0 and constant term +1.
inline laurent_poly torus_alexander(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1)
        throw not_coprime_error("torus_alexander requires p, q >= 1 coprime, got (" +
                                std::to_string(p) + "," + std::to_string(q) + ")");
    const auto cyclo = [](std::int64_t n) {
        // t^n - 1
        laurent_poly r = laurent_poly::monomial(n);
        r.add_term(0, -1);
        return r;
    };
    const laurent_poly num = cyclo(1) * cyclo(p * q);
    const laurent_poly den = cyclo(p) * cyclo(q);
    return normalize_alexander(exact_div(num, den));
}

// Alexander polynomial of the (p,q)-cable with the given companion polynomial:
// companion(t^p) * torus_alexander(p, q).
inline laurent_poly cable_alexander(const laurent_poly& companion, std::int64_t p,
                                    std::int64_t q) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1)
        throw not_coprime_error("cable_alexander requires p, q >= 1 coprime");
    return companion.substitute_power(p) * torus_alexander(p, q);
}

inline laurent_poly iterated_cable_alexander(const cable_word& w) {
    w.validate();
    laurent_poly delta = laurent_poly::one();
    for (const auto& s : w.stages)
        delta = cable_alexander(delta, s.p, s.q);
    return delta;
}

// Closed form for Delta of T_{p, np+1}:
//   sum_{i=0}^{n(p-1)} t^{ip}  -  sum_{j=0}^{p-2} sum_{k=0}^{n-1} t^{kp + j(pn+1) + 1}.
// Accumulated term by term, exactly as stated.
inline laurent_poly closed_form_np1(std::int64_t p, std::int64_t n) {
    check_invariant(p >= 2 && n >= 1, "closed_form_np1 requires p >= 2, n >= 1");
    laurent_poly r;
    for (std::int64_t i = 0; i <= n * (p - 1); ++i)
        r.add_term(i * p, 1);
    for (std::int64_t j = 0; j <= p - 2; ++j)
        for (std::int64_t k = 0; k <= n - 1; ++k)
            r.add_term(k * p + j * (p * n + 1) + 1, -1);
    return r;
}

// Closed form for Delta of the (p,p+1)-cable of T_{2,3}:
//   sum_{i=0}^{p} t^{i(p+1)} + sum_{i=2}^{p-1} t^{ip}
//   - sum_{i=0}^{p-2} t^{i(p+1)+1} - sum_{i=2}^{p} t^{i(p+1)-1}.
inline laurent_poly closed_form_pcable(std::int64_t p) {
    check_invariant(p >= 2, "closed_form_pcable requires p >= 2");
    laurent_poly r;
    for (std::int64_t i = 0; i <= p; ++i)
        r.add_term(i * (p + 1), 1);
    for (std::int64_t i = 2; i <= p - 1; ++i)
        r.add_term(i * p, 1);
    for (std::int64_t i = 0; i <= p - 2; ++i)
        r.add_term(i * (p + 1) + 1, -1);
    for (std::int64_t i = 2; i <= p; ++i)
        r.add_term(i * (p + 1) - 1, -1);
    return r;
}

// Closed form for Delta of T_{p, 2p-1}:
//   sum_{i=0}^{p-2} (t^{(2p-1)i} + t^{(2p-1)i + p}) - sum_{i=0}^{2(p-2)} t^{ip+1}.
inline laurent_poly closed_form_2pm1(std::int64_t p) {
    check_invariant(p >= 2, "closed_form_2pm1 requires p >= 2");
    laurent_poly r;
    for (std::int64_t i = 0; i <= p - 2; ++i) {
        r.add_term((2 * p - 1) * i, 1);
        r.add_term((2 * p - 1) * i + p, 1);
    }
    for (std::int64_t i = 0; i <= 2 * (p - 2); ++i)
        r.add_term(i * p + 1, -1);
    return r;
}

}  // namespace floerstair
