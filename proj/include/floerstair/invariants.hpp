#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "floerstair/errors.hpp"
#include "floerstair/filtered_complex.hpp"
#include "floerstair/staircase.hpp"

namespace floerstair {

struct invariant_record {
    std::int64_t tau = 0;
    std::int64_t nu = 0;
    std::int64_t nu_prime = 0;
    int epsilon = 0;
};

namespace detail {

// Shared state for the filtration-level searches: C{i=0}, its one-dimensional
// homology, and the search window.  Construction throws not_knot_like_error
// when H(C{i=0}) is not one-dimensional.
class invariant_engine {
public:
    explicit invariant_engine(const filtered_complex& c)
        : c_(c), i0_(c, region::i_zero()) {
        const homology_result h = homology(i0_);
        if (h.dimension != 1)
            throw not_knot_like_error("H(C{i=0}) has dimension " +
                                      std::to_string(h.dimension) + ", expected 1");
        m0_ = h.gradings[0];
        window_ = c.max_abs_alexander() + 2;
    }

    std::int64_t m0() const { return m0_; }

    // tau: minimal s with the inclusion C{i=0, j<=s} -> C{i=0} nontrivial.
    std::int64_t tau() const {
        return min_s_where([this](std::int64_t s) { return tau_pred(s); });
    }

    // nu: minimal s with v_s : A_s -> C{i=0} nontrivial.
    std::int64_t nu() const {
        return min_s_where([this](std::int64_t s) { return nu_pred(s); });
    }

    // nu': maximal s with v'_s : C{i=0} -> A'_s nontrivial.
    std::int64_t nu_prime() const {
        return max_s_where([this](std::int64_t s) { return nu_prime_pred(s); });
    }

    invariant_record record() const {
        invariant_record r;
        r.tau = tau();
        r.nu = nu();
        r.nu_prime = nu_prime();
        check_invariant(r.nu == r.tau || r.nu == r.tau + 1, "nu outside {tau, tau+1}");
        check_invariant(r.nu_prime == r.tau || r.nu_prime == r.tau - 1,
                        "nu' outside {tau-1, tau}");
        const std::int64_t e = 2 * r.tau - r.nu - r.nu_prime;
        check_invariant(e >= -1 && e <= 1, "epsilon outside {-1,0,1}");
        r.epsilon = static_cast<int>(e);
        return r;
    }

private:
    bool tau_pred(std::int64_t s) const {
        const subquotient_complex sub(c_, region::i_zero_j_le(s));
        const auto image = catalog_chain_map(c_, sub, i0_, map_kind::inclusion);
        // Target homology lives entirely in grading m0.
        return map_nontrivial_on_grading(sub, i0_, image, m0_);
    }

    bool nu_pred(std::int64_t s) const {
        const subquotient_complex sub(c_, region::a_s(s));
        const auto image = catalog_chain_map(c_, sub, i0_, map_kind::quotient_composite);
        return map_nontrivial_on_grading(sub, i0_, image, m0_);
    }

    bool nu_prime_pred(std::int64_t s) const {
        const subquotient_complex tgt(c_, region::a_prime_s(s));
        const auto image = catalog_chain_map(c_, i0_, tgt, map_kind::quotient_composite);
        // Source homology lives entirely in grading m0.
        return map_nontrivial_on_grading(i0_, tgt, image, m0_);
    }

    template <class Pred>
    std::int64_t min_s_where(Pred pred) const {
        std::int64_t lo = -window_;  // pred false
        std::int64_t hi = window_;   // pred true
        check_invariant(!pred(lo), "search window endpoint: predicate true at -G");
        check_invariant(pred(hi), "search window endpoint: predicate false at +G");
        while (hi - lo > 1) {
            const std::int64_t mid = lo + (hi - lo) / 2;
            (pred(mid) ? hi : lo) = mid;
        }
        return hi;
    }

    template <class Pred>
    std::int64_t max_s_where(Pred pred) const {
        std::int64_t lo = -window_;  // pred true
        std::int64_t hi = window_;   // pred false
        check_invariant(pred(lo), "search window endpoint: predicate false at -G");
        check_invariant(!pred(hi), "search window endpoint: predicate true at +G");
        while (hi - lo > 1) {
            const std::int64_t mid = lo + (hi - lo) / 2;
            (pred(mid) ? lo : hi) = mid;
        }
        return lo;
    }

    const filtered_complex& c_;
    subquotient_complex i0_;
    std::int64_t m0_ = 0;
    std::int64_t window_ = 0;
};

}  // namespace detail

// Throws not_knot_like_error unless H(C{i=0}) is one-dimensional; returns the
// Maslov grading carrying the generator.
inline std::int64_t knot_like_grading(const filtered_complex& c) {
    return detail::invariant_engine(c).m0();
}

inline std::int64_t tau(const filtered_complex& c) { return detail::invariant_engine(c).tau(); }
inline std::int64_t nu(const filtered_complex& c) { return detail::invariant_engine(c).nu(); }
inline std::int64_t nu_prime(const filtered_complex& c) {
    return detail::invariant_engine(c).nu_prime();
}

inline invariant_record compute_invariants(const filtered_complex& c) {
    return detail::invariant_engine(c).record();
}

// epsilon = 2 tau - nu - nu', always in {-1, 0, 1}.
inline int epsilon(const filtered_complex& c) { return compute_invariants(c).epsilon; }

// ---------------------------------------------------------------------------
// Secondary route: read epsilon off a simplified filtered basis.
// ---------------------------------------------------------------------------

namespace detail {

// A working copy of a complex supporting filtered changes of basis
// x_k <- x_k + U^d x_l.  Arrow U-shifts stay derived from the (fixed) Maslov
// gradings, so a basis change is a pure toggle on the arrow sets.
class mutable_complex {
public:
    explicit mutable_complex(const filtered_complex& c) : gens_(c.generators()) {
        out_.resize(gens_.size());
        in_.resize(gens_.size());
        for (const auto& [s, t] : c.arrows()) {
            out_[s].insert(t);
            in_[t].insert(s);
        }
    }

    std::size_t size() const { return gens_.size(); }
    const generator& gen(std::int32_t i) const { return gens_[i]; }
    const std::set<std::int32_t>& out(std::int32_t i) const { return out_[i]; }
    const std::set<std::int32_t>& in(std::int32_t i) const { return in_[i]; }

    std::int64_t shift(std::int32_t s, std::int32_t t) const {
        return (gens_[t].maslov - gens_[s].maslov + 1) / 2;
    }
    bool is_vertical(std::int32_t s, std::int32_t t) const { return shift(s, t) == 0; }
    bool is_horizontal(std::int32_t s, std::int32_t t) const {
        const std::int64_t m = shift(s, t);
        return m > 0 && gens_[t].alexander - m == gens_[s].alexander;
    }
    std::int64_t vertical_length(std::int32_t s, std::int32_t t) const {
        return gens_[s].alexander - gens_[t].alexander;
    }
    std::int64_t horizontal_length(std::int32_t s, std::int32_t t) const { return shift(s, t); }

    bool has_arrow(std::int32_t s, std::int32_t t) const { return out_[s].count(t) != 0; }

    // x_k <- x_k + U^d x_l with d = (M(l) - M(k)) / 2.
    void basis_change(std::int32_t k, std::int32_t l) {
        check_invariant(k != l, "basis change with itself");
        const std::int64_t dm = gens_[l].maslov - gens_[k].maslov;
        check_invariant(dm % 2 == 0, "basis change mixes Maslov parities");
        const std::int64_t d = dm / 2;
        check_invariant(d >= 0, "basis change against the i-filtration");
        check_invariant(gens_[l].alexander - d <= gens_[k].alexander,
                        "basis change against the j-filtration");
        // d(x_k') = d(x_k) + U^d d(x_l)
        const std::vector<std::int32_t> lt(out_[l].begin(), out_[l].end());
        for (std::int32_t t : lt)
            toggle(k, t);
        // x_k = x_k' + U^d x_l': every arrow into k gains an arrow into l.
        const std::vector<std::int32_t> zk(in_[k].begin(), in_[k].end());
        for (std::int32_t z : zk)
            toggle(z, l);
    }

    std::vector<std::int32_t> vertical_in(std::int32_t i) const {
        std::vector<std::int32_t> r;
        for (std::int32_t z : in_[i])
            if (is_vertical(z, i))
                r.push_back(z);
        return r;
    }
    std::vector<std::int32_t> vertical_out(std::int32_t i) const {
        std::vector<std::int32_t> r;
        for (std::int32_t t : out_[i])
            if (is_vertical(i, t))
                r.push_back(t);
        return r;
    }
    std::vector<std::int32_t> horizontal_in(std::int32_t i) const {
        std::vector<std::int32_t> r;
        for (std::int32_t z : in_[i])
            if (is_horizontal(z, i))
                r.push_back(z);
        return r;
    }
    std::vector<std::int32_t> horizontal_out(std::int32_t i) const {
        std::vector<std::int32_t> r;
        for (std::int32_t t : out_[i])
            if (is_horizontal(i, t))
                r.push_back(t);
        return r;
    }

private:
    void toggle(std::int32_t s, std::int32_t t) {
        check_invariant(s != t, "toggle would create a self arrow");
        if (out_[s].count(t)) {
            out_[s].erase(t);
            in_[t].erase(s);
        } else {
            out_[s].insert(t);
            in_[t].insert(s);
        }
    }

    std::vector<generator> gens_;
    std::vector<std::set<std::int32_t>> out_, in_;
};

// One cancellation pass family: repeatedly take the shortest arrow of the
// given flavour and isolate its endpoint pair by filtered basis changes.
// Shortest-first keeps every change filtered.
template <bool Horizontal>
inline void simplify_pass(mutable_complex& mc) {
    const auto is_kind = [&](std::int32_t s, std::int32_t t) {
        return Horizontal ? mc.is_horizontal(s, t) : mc.is_vertical(s, t);
    };
    const auto length = [&](std::int32_t s, std::int32_t t) {
        return Horizontal ? mc.horizontal_length(s, t) : mc.vertical_length(s, t);
    };
    const std::size_t n = mc.size();
    std::vector<char> locked(n, 0);
    for (std::size_t pass = 0; pass <= n + 1; ++pass) {
        std::int32_t b = -1, a = -1;
        std::int64_t best = INT64_MAX;
        for (std::int32_t s = 0; s < static_cast<std::int32_t>(n); ++s) {
            if (locked[s])
                continue;
            for (std::int32_t t : mc.out(s)) {
                if (locked[t] || !is_kind(s, t))
                    continue;
                const std::int64_t len = length(s, t);
                if (len < best) {
                    best = len;
                    b = s;
                    a = t;
                }
            }
        }
        if (b < 0)
            return;
        // Clear the other arrows of this flavour into a ...
        for (std::int32_t y : (Horizontal ? mc.horizontal_in(a) : mc.vertical_in(a)))
            if (y != b && mc.has_arrow(y, a) && is_kind(y, a))
                mc.basis_change(y, b);
        // ... and the other arrows of this flavour out of b.
        for (std::int32_t c : (Horizontal ? mc.horizontal_out(b) : mc.vertical_out(b)))
            if (c != a && mc.has_arrow(b, c) && is_kind(b, c))
                mc.basis_change(a, c);
        const auto ins = Horizontal ? mc.horizontal_in(a) : mc.vertical_in(a);
        const auto outs = Horizontal ? mc.horizontal_out(b) : mc.vertical_out(b);
        check_invariant(ins.size() == 1 && ins[0] == b, "pair target not isolated");
        check_invariant(outs.size() == 1 && outs[0] == a, "pair source not isolated");
        check_invariant((Horizontal ? mc.horizontal_out(a) : mc.vertical_out(a)).empty(),
                        "pair target retains outgoing arrows");
        check_invariant((Horizontal ? mc.horizontal_in(b) : mc.vertical_in(b)).empty(),
                        "pair source retains incoming arrows");
        locked[a] = locked[b] = 1;
    }
    throw simplification_failed_error("cancellation pass exceeded its iteration cap");
}

inline std::vector<std::int32_t> vertically_unpaired(const mutable_complex& mc) {
    std::vector<std::int32_t> r;
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(mc.size()); ++i)
        if (mc.vertical_in(i).empty() && mc.vertical_out(i).empty())
            r.push_back(i);
    return r;
}

}  // namespace detail

// Reads epsilon from a simplified basis: vertically simplify, locate the
// vertically distinguished element, horizontally simplify, and classify the
// horizontal arrows at the distinguished element.  Throws
// simplification_failed_error when the two simplifications cannot be made
// compatible within the round cap.
inline int epsilon_by_basis(const filtered_complex& c) {
    knot_like_grading(c);  // precondition
    detail::mutable_complex mc(c);
    constexpr int max_rounds = 8;
    for (int round = 0; round < max_rounds; ++round) {
        detail::simplify_pass<false>(mc);
        const auto unpaired = detail::vertically_unpaired(mc);
        check_invariant(unpaired.size() == 1,
                        "vertically simplified knot-like complex must have a unique "
                        "distinguished element");
        const std::int32_t x0 = unpaired[0];
        detail::simplify_pass<true>(mc);
        if (!mc.vertical_in(x0).empty() || !mc.vertical_out(x0).empty())
            continue;  // horizontal pass disturbed x0; run the pair again
        const auto hin = mc.horizontal_in(x0);
        const auto hout = mc.horizontal_out(x0);
        check_invariant(hin.size() + hout.size() <= 1,
                        "horizontally simplified basis with multiple arrows at x0");
        if (!hin.empty())
            return 1;
        if (!hout.empty())
            return -1;
        return 0;
    }
    throw simplification_failed_error(
        "no compatible vertically and horizontally simplified basis found");
}

// ---------------------------------------------------------------------------
// Ordering and bounded Archimedean evidence.
// ---------------------------------------------------------------------------

enum class ordering { less, equal, greater };

inline const char* to_string(ordering o) {
    switch (o) {
    case ordering::less: return "less";
    case ordering::equal: return "equal";
    case ordering::greater: return "greater";
    }
    return "?";
}

struct comparison_result {
    ordering relation = ordering::equal;
};

inline void guard_tensor_size(std::int64_t a, std::int64_t b, std::int64_t cap) {
    if (b != 0 && a > cap / b)
        throw resource_limit_error("tensor of " + std::to_string(a) + " x " +
                                   std::to_string(b) + " generators exceeds cap " +
                                   std::to_string(cap));
}

// epsilon(a (x) b*) == 0.
inline bool epsilon_equivalent(const filtered_complex& a, const filtered_complex& b,
                               std::int64_t max_generators = std::int64_t{1} << 40) {
    guard_tensor_size(static_cast<std::int64_t>(a.size()), static_cast<std::int64_t>(b.size()),
                      max_generators);
    return epsilon(tensor(a, dual(b))) == 0;
}

inline comparison_result compare(const filtered_complex& a, const filtered_complex& b,
                                 std::int64_t max_generators = std::int64_t{1} << 40) {
    guard_tensor_size(static_cast<std::int64_t>(a.size()), static_cast<std::int64_t>(b.size()),
                      max_generators);
    switch (epsilon(tensor(a, dual(b)))) {
    case 1: return {ordering::greater};
    case -1: return {ordering::less};
    default: return {ordering::equal};
    }
}

struct domination_evidence {
    std::int64_t depth_requested = 0;
    std::vector<ordering> verdicts;              // verdict of compare(|a|, n * |b|), n = 1, ...
    std::optional<std::int64_t> first_failure;   // first n that was not "greater"

    bool all_greater() const {
        return !first_failure &&
               static_cast<std::int64_t>(verdicts.size()) == depth_requested;
    }
};

// Bounded evidence that a dominates b: compare(|a|, n|b|) for n = 1..N.
// This is evidence, not a proof; the quantifier over all n is out of reach.
inline domination_evidence dominates_bounded(const filtered_complex& a,
                                             const filtered_complex& b, std::int64_t depth,
                                             std::int64_t max_generators) {
    check_invariant(depth >= 1, "dominates_bounded requires depth >= 1");
    const filtered_complex abs_a = epsilon(a) == -1 ? dual(a) : a;
    const filtered_complex abs_b = epsilon(b) == -1 ? dual(b) : b;
    domination_evidence ev;
    ev.depth_requested = depth;
    filtered_complex power = abs_b;
    for (std::int64_t n = 1; n <= depth; ++n) {
        if (n > 1) {
            guard_tensor_size(static_cast<std::int64_t>(power.size()),
                              static_cast<std::int64_t>(abs_b.size()), max_generators);
            power = tensor(power, abs_b);
        }
        const ordering rel = compare(abs_a, power, max_generators).relation;
        ev.verdicts.push_back(rel);
        if (rel != ordering::greater) {
            ev.first_failure = n;
            break;
        }
    }
    return ev;
}

inline domination_evidence dominates_bounded(const stair_sum& a, const stair_sum& b,
                                             std::int64_t depth, std::int64_t max_generators) {
    return dominates_bounded(to_complex(a, max_generators), to_complex(b, max_generators),
                             depth, max_generators);
}

}  // namespace floerstair
