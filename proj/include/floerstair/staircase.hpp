#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "floerstair/errors.hpp"
#include "floerstair/filtered_complex.hpp"
#include "floerstair/laurent.hpp"

namespace floerstair {

// A staircase complex, recorded by its step lengths up to the point of
// symmetry.  The full gap sequence is the palindromic completion
// half ++ reverse(half); its prefix sums give the exponent sequence
// n_0 = 0 < n_1 < ... < n_M with genus n_M / 2.
class staircase {
public:
    explicit staircase(std::vector<std::int64_t> half) : half_(std::move(half)) {
        check_invariant(!half_.empty(), "staircase: empty step sequence");
        for (std::int64_t a : half_)
            check_invariant(a >= 1, "staircase: step lengths must be positive");
    }

    const std::vector<std::int64_t>& half() const { return half_; }

    std::vector<std::int64_t> symmetric_gaps() const {
        std::vector<std::int64_t> full = half_;
        full.insert(full.end(), half_.rbegin(), half_.rend());
        return full;
    }

    std::vector<std::int64_t> exponents() const {
        const auto gaps = symmetric_gaps();
        std::vector<std::int64_t> n(gaps.size() + 1, 0);
        for (std::size_t i = 0; i < gaps.size(); ++i)
            n[i + 1] = n[i] + gaps[i];
        return n;
    }

    std::int64_t genus() const {
        return std::accumulate(half_.begin(), half_.end(), std::int64_t{0});
    }

    std::size_t generator_count() const { return 2 * half_.size() + 1; }

    // The alternating-sign polynomial with exponents n_i.
    laurent_poly alexander() const {
        laurent_poly p;
        const auto n = exponents();
        for (std::size_t i = 0; i < n.size(); ++i)
            p.add_term(n[i], (i % 2 == 0) ? 1 : -1);
        return p;
    }

    std::string to_string() const {
        std::ostringstream out;
        out << "(";
        for (std::size_t i = 0; i < half_.size(); ++i) {
            if (i)
                out << ", ";
            out << half_[i];
        }
        out << ")";
        return out.str();
    }

    friend bool operator==(const staircase& a, const staircase& b) { return a.half_ == b.half_; }
    friend std::strong_ordering operator<=>(const staircase& a, const staircase& b) {
        return a.half_ <=> b.half_;
    }

private:
    std::vector<std::int64_t> half_;
};

// Reads a staircase off an L-space-form Alexander polynomial: normalized,
// strictly alternating +-1 coefficients starting and ending at +1, odd term
// count, symmetric.  Anything else is rejected.
inline staircase staircase_from_alexander(const laurent_poly& p) {
    if (p.is_zero() || p.min_exponent() != 0 || p.coeff(0) != 1)
        throw not_lspace_form_error("polynomial is not normalized with constant term +1");
    if (p.term_count() % 2 == 0)
        throw not_lspace_form_error("polynomial has an even number of terms");
    if (!p.is_symmetric())
        throw not_lspace_form_error("polynomial is not symmetric");
    if (p.term_count() == 1)
        throw not_lspace_form_error("constant polynomial describes the unknot, not a staircase");
    std::vector<std::int64_t> exps;
    int expected = 1;
    for (const auto& [e, c] : p.terms()) {
        if (c != expected)
            throw not_lspace_form_error("coefficients do not alternate +1, -1");
        expected = -expected;
        exps.push_back(e);
    }
    std::vector<std::int64_t> gaps(exps.size() - 1);
    for (std::size_t i = 0; i + 1 < exps.size(); ++i)
        gaps[i] = exps[i + 1] - exps[i];
    const std::size_t m = gaps.size();
    for (std::size_t i = 0; i < m; ++i)
        check_invariant(gaps[i] == gaps[m - 1 - i], "symmetric polynomial with non-palindromic gaps");
    return staircase(std::vector<std::int64_t>(gaps.begin(), gaps.begin() + m / 2));
}

struct concat_result {
    staircase joined;
    bool hypothesis_holds = false;
};

// Concatenation of step sequences, with the sandwich hypothesis under which
// the concatenation is known to agree with the tensor product up to
// epsilon-equivalence.  Index convention: within a's half, 0-based even
// positions are horizontal steps and odd positions vertical; the sandwich is
// max{horizontal} <= b_j <= min{vertical} and requires a's half to have even
// length.  A length-one half (x) is admitted when every step of b equals x,
// the scaled tensor-power case.  Odd lengths >= 3 are rejected outright: the
// sandwich is not sufficient there.  Ground truth is always the direct
// epsilon check downstream.
inline concat_result concat(const staircase& a, const staircase& b) {
    std::vector<std::int64_t> joined = a.half();
    joined.insert(joined.end(), b.half().begin(), b.half().end());

    bool ok = false;
    if (a.half().size() % 2 == 0) {
        std::int64_t max_h = 0;
        std::int64_t min_v = INT64_MAX;
        for (std::size_t i = 0; i < a.half().size(); ++i) {
            if (i % 2 == 0)
                max_h = std::max(max_h, a.half()[i]);
            else
                min_v = std::min(min_v, a.half()[i]);
        }
        ok = true;
        for (std::int64_t step : b.half())
            ok = ok && max_h <= step && step <= min_v;
    } else if (a.half().size() == 1) {
        ok = true;
        for (std::int64_t step : b.half())
            ok = ok && step == a.half()[0];
    }
    return concat_result{staircase(std::move(joined)), ok};
}

// A formal integer combination of staircases.  Positive coefficients stand
// for tensor factors, negative for dual factors.
class stair_sum {
public:
    stair_sum() = default;

    static stair_sum single(const staircase& s, std::int64_t coeff = 1) {
        stair_sum r;
        r.add(s, coeff);
        return r;
    }

    void add(const staircase& s, std::int64_t coeff) {
        if (coeff == 0)
            return;
        auto [it, inserted] = terms_.emplace(s, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    const std::map<staircase, std::int64_t>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    friend stair_sum operator+(const stair_sum& a, const stair_sum& b) {
        stair_sum r = a;
        for (const auto& [s, k] : b.terms_)
            r.add(s, k);
        return r;
    }

    friend stair_sum operator-(const stair_sum& a, const stair_sum& b) {
        stair_sum r = a;
        for (const auto& [s, k] : b.terms_)
            r.add(s, -k);
        return r;
    }

    friend stair_sum operator-(const stair_sum& a) {
        stair_sum r;
        for (const auto& [s, k] : a.terms_)
            r.terms_.emplace(s, -k);
        return r;
    }

    friend bool operator==(const stair_sum&, const stair_sum&) = default;

    // Generator count of the tensor complex this sum denotes, saturating.
    std::int64_t tensor_generator_count() const {
        std::int64_t n = 1;
        for (const auto& [s, k] : terms_) {
            const std::int64_t copies = k < 0 ? -k : k;
            const std::int64_t per = static_cast<std::int64_t>(s.generator_count());
            for (std::int64_t i = 0; i < copies; ++i) {
                if (n > (std::int64_t{1} << 40) / per)
                    return std::int64_t{1} << 40;
                n *= per;
            }
        }
        return n;
    }

    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [s, k] : terms_) {
            const std::int64_t mag = k < 0 ? -k : k;
            if (first)
                out << (k < 0 ? "-" : "");
            else
                out << (k < 0 ? " - " : " + ");
            first = false;
            if (mag != 1)
                out << mag << "*";
            out << s.to_string();
        }
        return out.str();
    }

private:
    std::map<staircase, std::int64_t> terms_;
};

// Canonicalizes a raw term list: merges equal staircases, drops zeros.
inline stair_sum stairsum_simplify(const std::vector<std::pair<staircase, std::int64_t>>& raw) {
    stair_sum r;
    for (const auto& [s, k] : raw)
        r.add(s, k);
    return r;
}

// The staircase complex: generators x_0 ... x_M with A(x_i) = g - n_i,
// d(x_i) = x_{i-1} + x_{i+1} for odd i.  Maslov gradings are propagated from
// M(x_0) = 0 so that every arrow drops Maslov by exactly one.
inline filtered_complex to_complex(const staircase& s) {
    const auto n = s.exponents();
    const std::int64_t g = s.genus();
    const std::size_t count = n.size();
    std::vector<generator> gens(count);
    std::vector<std::int64_t> maslov(count, 0);
    for (std::size_t i = 1; i < count; ++i) {
        if (i % 2 == 1)
            maslov[i] = maslov[i - 1] + 1 - 2 * (n[i] - n[i - 1]);  // horizontal arrow x_i -> x_{i-1}
        else
            maslov[i] = maslov[i - 1] - 1;  // vertical arrow x_{i-1} -> x_i
    }
    check_invariant(maslov[count - 1] == -2 * g,
                    "staircase Maslov assignment breaks the symmetric dual convention");
    for (std::size_t i = 0; i < count; ++i)
        gens[i] = generator{"x" + std::to_string(i), g - n[i], maslov[i]};
    std::vector<filtered_complex::arrow> arrows;
    for (std::size_t i = 1; i < count; i += 2) {
        arrows.emplace_back(static_cast<std::int32_t>(i), static_cast<std::int32_t>(i - 1));
        arrows.emplace_back(static_cast<std::int32_t>(i), static_cast<std::int32_t>(i + 1));
    }
    return filtered_complex(std::move(gens), std::move(arrows));
}

// Tensor complex of a formal sum; the empty sum is the unknot.  Throws
// resource_limit_error if the generator count would exceed max_generators.
inline filtered_complex to_complex(const stair_sum& sum,
                                   std::int64_t max_generators = std::int64_t{1} << 40) {
    if (sum.tensor_generator_count() > max_generators)
        throw resource_limit_error("tensor complex would exceed " +
                                   std::to_string(max_generators) + " generators");
    filtered_complex acc = filtered_complex::unknot();
    bool started = false;
    for (const auto& [s, k] : sum.terms()) {
        filtered_complex factor = to_complex(s);
        if (k < 0)
            factor = dual(factor);
        const std::int64_t copies = k < 0 ? -k : k;
        for (std::int64_t i = 0; i < copies; ++i) {
            acc = started ? tensor(acc, factor) : factor;
            started = true;
        }
    }
    return acc;
}

}  // namespace floerstair
