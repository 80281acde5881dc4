#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "floerstair/errors.hpp"

namespace floerstair {

// Coefficients are arbitrary precision so products can never overflow silently.
using coeff_t = boost::multiprecision::cpp_int;

// An exact integer Laurent polynomial in one variable t.  Stored as a map
// from exponent to coefficient; zero coefficients are never stored, so
// equality is plain coefficient-wise equality.
class laurent_poly {
public:
    laurent_poly() = default;

    static laurent_poly constant(coeff_t c) {
        laurent_poly p;
        p.add_term(0, std::move(c));
        return p;
    }

    static laurent_poly one() { return constant(1); }

    static laurent_poly monomial(std::int64_t exponent, coeff_t c = 1) {
        laurent_poly p;
        p.add_term(exponent, std::move(c));
        return p;
    }

    static laurent_poly from_terms(const std::vector<std::pair<std::int64_t, coeff_t>>& terms) {
        laurent_poly p;
        for (const auto& [e, c] : terms)
            p.add_term(e, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    std::size_t term_count() const { return terms_.size(); }

    coeff_t coeff(std::int64_t exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? coeff_t(0) : it->second;
    }

    // Adds c * t^exponent, dropping the term if the sum cancels.
    void add_term(std::int64_t exponent, const coeff_t& c) {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    std::int64_t min_exponent() const {
        check_invariant(!terms_.empty(), "min_exponent of zero polynomial");
        return terms_.begin()->first;
    }

    std::int64_t max_exponent() const {
        check_invariant(!terms_.empty(), "max_exponent of zero polynomial");
        return terms_.rbegin()->first;
    }

    const std::map<std::int64_t, coeff_t>& terms() const { return terms_; }

    friend bool operator==(const laurent_poly& a, const laurent_poly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const laurent_poly& a, const laurent_poly& b) { return !(a == b); }

    friend laurent_poly operator+(const laurent_poly& a, const laurent_poly& b) {
        laurent_poly r = a;
        for (const auto& [e, c] : b.terms_)
            r.add_term(e, c);
        return r;
    }

    friend laurent_poly operator-(const laurent_poly& a, const laurent_poly& b) {
        laurent_poly r = a;
        for (const auto& [e, c] : b.terms_)
            r.add_term(e, -c);
        return r;
    }

    friend laurent_poly operator-(const laurent_poly& a) {
        laurent_poly r;
        for (const auto& [e, c] : a.terms_)
            r.terms_.emplace(e, -c);
        return r;
    }

    // Convolution product.
    friend laurent_poly operator*(const laurent_poly& a, const laurent_poly& b) {
        laurent_poly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }

    // t -> t^n.  Requires n >= 1.
    laurent_poly substitute_power(std::int64_t n) const {
        check_invariant(n >= 1, "substitute_power requires n >= 1");
        laurent_poly r;
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e * n, c);
        return r;
    }

    // Multiplication by t^k.
    laurent_poly shifted(std::int64_t k) const {
        laurent_poly r;
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e + k, c);
        return r;
    }

    coeff_t evaluate_at_one() const {
        coeff_t s = 0;
        for (const auto& [e, c] : terms_)
            s += c;
        return s;
    }

    // True iff coeff(e) == coeff(d - e) for all e, with d = max + min exponent.
    bool is_symmetric() const {
        if (terms_.empty())
            return true;
        const std::int64_t d = min_exponent() + max_exponent();
        for (const auto& [e, c] : terms_)
            if (coeff(d - e) != c)
                return false;
        return true;
    }

    // Canonical text form: terms in increasing exponent order with explicit signs,
    // e.g. "1 - t + t^2".
    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool neg = c < 0;
            coeff_t mag = neg ? coeff_t(-c) : c;
            if (first) {
                if (neg)
                    out << "-";
                first = false;
            } else {
                out << (neg ? " - " : " + ");
            }
            if (e == 0) {
                out << mag.str();
            } else {
                if (mag != 1)
                    out << mag.str() << "*";
                if (e == 1)
                    out << "t";
                else
                    out << "t^" << e;
            }
        }
        return out.str();
    }

private:
    std::map<std::int64_t, coeff_t> terms_;
};

// Exact quotient num / den; throws not_divisible_error if the division leaves a
// remainder.  Works for Laurent polynomials by factoring out the lowest power
// of t from both operands first, then long-dividing from the top exponent.
inline laurent_poly exact_div(const laurent_poly& num, const laurent_poly& den) {
    if (den.is_zero())
        throw not_divisible_error("exact_div: division by zero polynomial");
    if (num.is_zero())
        return laurent_poly{};

    const std::int64_t shift = num.min_exponent() - den.min_exponent();
    laurent_poly n = num.shifted(-num.min_exponent());
    const laurent_poly d = den.shifted(-den.min_exponent());

    const std::int64_t d_deg = d.max_exponent();
    const coeff_t d_lead = d.coeff(d_deg);

    laurent_poly q;
    while (!n.is_zero()) {
        const std::int64_t n_deg = n.max_exponent();
        if (n_deg < d_deg)
            throw not_divisible_error("exact_div: nonzero remainder " + n.to_string());
        const coeff_t n_lead = n.coeff(n_deg);
        if (n_lead % d_lead != 0)
            throw not_divisible_error("exact_div: leading coefficient not divisible");
        const coeff_t qc = n_lead / d_lead;
        const std::int64_t qe = n_deg - d_deg;
        q.add_term(qe, qc);
        n = n - d.shifted(qe) * laurent_poly::constant(qc);
    }
    return q.shifted(shift);
}

}  // namespace floerstair
