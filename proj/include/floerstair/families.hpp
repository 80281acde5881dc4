#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "floerstair/alexander.hpp"
#include "floerstair/config.hpp"
#include "floerstair/errors.hpp"
#include "floerstair/invariants.hpp"
#include "floerstair/json_io.hpp"
#include "floerstair/staircase.hpp"

namespace floerstair {

// ---------------------------------------------------------------------------
// Knot family specifications.  The doubled-companion families are represented
// by their cable words with the double replaced by the trefoil, which carries
// the same epsilon class; no object here stands for the double itself.
// ---------------------------------------------------------------------------

struct torus_spec {
    std::int64_t p = 2, q = 3;
};
struct cable_spec {
    cable_word word;
};
// K(n,p): the (n, n(p^2+p)+1)-cable of the (p,p+1)-cable of the double.
struct kfamily_spec {
    std::int64_t n = 4, p = 5;
};
// S(q): the (q/2+1, q+1)- or ((q+1)/2, q+2)-cable of the double, by parity.
struct sfamily_spec {
    std::int64_t q = 4;
};
// The (n, n(p^2+p)+1)-cable of the torus knot T(p,p+1).
struct bigcable_spec {
    std::int64_t n = 2, p = 2;
};

using knot_spec =
    std::variant<torus_spec, cable_spec, kfamily_spec, sfamily_spec, bigcable_spec>;

inline cable_word model_word(const knot_spec& k) {
    return std::visit(
        [](const auto& s) -> cable_word {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, torus_spec>) {
                return cable_word{{{s.p, s.q}}};
            } else if constexpr (std::is_same_v<T, cable_spec>) {
                return s.word;
            } else if constexpr (std::is_same_v<T, kfamily_spec>) {
                check_invariant(s.n >= 4 && s.n % 2 == 0 && s.p >= 5,
                                "K(n,p) requires n >= 4 even and p >= 5");
                return cable_word{{{2, 3}, {s.p, s.p + 1}, {s.n, s.n * (s.p * s.p + s.p) + 1}}};
            } else if constexpr (std::is_same_v<T, sfamily_spec>) {
                check_invariant(s.q >= 4, "S(q) requires q >= 4");
                if (s.q % 2 == 0)
                    return cable_word{{{2, 3}, {s.q / 2 + 1, s.q + 1}}};
                return cable_word{{{2, 3}, {(s.q + 1) / 2, s.q + 2}}};
            } else {
                check_invariant(s.n >= 1 && s.p >= 2, "big cable requires n >= 1 and p >= 2");
                return cable_word{{{s.p, s.p + 1}, {s.n, s.n * (s.p * s.p + s.p) + 1}}};
            }
        },
        k);
}

// Cabling guard: every stage must satisfy q/p >= 2g - 1 for the genus g
// accumulated so far, so the staircase model stays valid.
inline void check_cabling_hypothesis(const cable_word& w) {
    w.validate();
    std::int64_t g = 0;
    for (const auto& s : w.stages) {
        if (s.q < s.p * (2 * g - 1))
            throw not_lspace_form_error(
                "cable stage (" + std::to_string(s.p) + "," + std::to_string(s.q) +
                ") violates the cabling hypothesis q/p >= 2g-1 at genus " + std::to_string(g));
        g = s.p * g + torus_genus(s.p, s.q);
    }
}

inline staircase model_staircase(const knot_spec& k) {
    const cable_word w = model_word(k);
    check_cabling_hypothesis(w);
    const staircase s = staircase_from_alexander(iterated_cable_alexander(w));
    check_invariant(s.genus() == cable_genus(w), "staircase genus disagrees with cable genus");
    return s;
}

// ---------------------------------------------------------------------------
// Claimed decompositions: each proposition names staircase summands by stated
// prefixes; the tails behind "..." are completed by splitting the computed
// staircase at the prefix boundaries.
// ---------------------------------------------------------------------------

struct decomposition {
    std::vector<staircase> chunks;  // in stated order; concatenation = model half
    stair_sum sum;
    std::string description;
};

namespace detail {

// Consume the next chunk: it must match `pattern` entrywise, but may be cut
// short by the point of symmetry (end of half).
inline staircase take_stated_chunk(const std::vector<std::int64_t>& half, std::size_t& pos,
                                   const std::vector<std::int64_t>& pattern,
                                   const std::string& what) {
    const std::size_t len = std::min(pattern.size(), half.size() - pos);
    if (len == 0)
        throw no_claim_error(what + ": staircase ends before the stated prefix");
    for (std::size_t i = 0; i < len; ++i)
        if (half[pos + i] != pattern[i])
            throw no_claim_error(what + ": stated prefix entry " + std::to_string(pattern[i]) +
                                 " does not match computed step " +
                                 std::to_string(half[pos + i]));
    std::vector<std::int64_t> chunk(half.begin() + pos, half.begin() + pos + len);
    pos += len;
    return staircase(std::move(chunk));
}

// The remainder must begin with `prefix` (also truncatable at the symmetry
// point) and is taken whole.
inline staircase take_tail(const std::vector<std::int64_t>& half, std::size_t& pos,
                           const std::vector<std::int64_t>& prefix, const std::string& what) {
    if (pos >= half.size())
        throw no_claim_error(what + ": no steps remain for the stated tail");
    const std::size_t len = std::min(prefix.size(), half.size() - pos);
    for (std::size_t i = 0; i < len; ++i)
        if (half[pos + i] != prefix[i])
            throw no_claim_error(what + ": stated tail prefix entry " +
                                 std::to_string(prefix[i]) + " does not match computed step " +
                                 std::to_string(half[pos + i]));
    std::vector<std::int64_t> chunk(half.begin() + pos, half.end());
    pos = half.size();
    return staircase(std::move(chunk));
}

// Split of the T(p,p+1) staircase (1, p-1, 2, p-2, ...) into its leading pair
// and the rest; degenerates gracefully for p = 2, 3.
inline std::vector<staircase> split_pp1(std::int64_t p) {
    const staircase s = model_staircase(torus_spec{p, p + 1});
    const auto& half = s.half();
    std::size_t pos = 0;
    std::vector<staircase> chunks;
    chunks.push_back(take_stated_chunk(half, pos, {1, p - 1}, "T(p,p+1) split"));
    if (pos < half.size())
        chunks.push_back(take_tail(half, pos, {2}, "T(p,p+1) split"));
    return chunks;
}

}  // namespace detail

// The decomposition a covering proposition claims for k; throws no_claim_error
// when no proposition covers k (or a stated prefix fails to match, which would
// refute the claim itself).
inline decomposition claimed_decomposition(const knot_spec& k) {
    decomposition d;
    if (const auto* t = std::get_if<torus_spec>(&k)) {
        if (t->q >= t->p + 1 && (t->q - 1) % t->p == 0) {
            // T(p, np+1) is the n-fold tensor power of T(p, p+1).
            const std::int64_t n = (t->q - 1) / t->p;
            const staircase s = model_staircase(torus_spec{t->p, t->p + 1});
            for (std::int64_t i = 0; i < n; ++i)
                d.chunks.push_back(s);
            d.sum.add(s, n);
            d.description = std::to_string(n) + " copies of the T(p,p+1) staircase";
            return d;
        }
        if (t->p >= 3 && t->q == 2 * t->p - 1) {
            // T(p, 2p-1) splits as (1,p-1) + (1,p-2) + (2, ...).
            const staircase s = model_staircase(*t);
            const auto& half = s.half();
            std::size_t pos = 0;
            d.chunks.push_back(detail::take_stated_chunk(half, pos, {1, t->p - 1}, "T(p,2p-1)"));
            d.chunks.push_back(detail::take_stated_chunk(half, pos, {1, t->p - 2}, "T(p,2p-1)"));
            if (pos < half.size())
                d.chunks.push_back(detail::take_tail(half, pos, {2}, "T(p,2p-1)"));
            for (const auto& c : d.chunks)
                d.sum.add(c, 1);
            d.description = "(1,p-1) + (1,p-2) + (2,...)";
            return d;
        }
        throw no_claim_error("no registered decomposition for T(" + std::to_string(t->p) + "," +
                             std::to_string(t->q) + ")");
    }
    if (const auto* s = std::get_if<sfamily_spec>(&k)) {
        const staircase m = model_staircase(*s);
        const auto& half = m.half();
        std::size_t pos = 0;
        d.chunks.push_back(detail::take_stated_chunk(half, pos, {1, s->q}, "S(q)"));
        d.chunks.push_back(detail::take_tail(half, pos, {2}, "S(q)"));
        for (const auto& c : d.chunks)
            d.sum.add(c, 1);
        d.description = "(1,q) + (2,...)";
        return d;
    }
    if (const auto* b = std::get_if<bigcable_spec>(&k)) {
        const staircase m = model_staircase(*b);
        const auto& half = m.half();
        std::size_t pos = 0;
        d.chunks.push_back(
            detail::take_stated_chunk(half, pos, {1, b->n * b->p - 1}, "big cable"));
        d.chunks.push_back(detail::take_tail(half, pos, {1, b->n - 1}, "big cable"));
        for (const auto& c : d.chunks)
            d.sum.add(c, 1);
        d.description = "(1,np-1) + (1,n-1,...)";
        return d;
    }
    if (const auto* f = std::get_if<kfamily_spec>(&k)) {
        const staircase m = model_staircase(*f);
        const auto& half = m.half();
        const std::int64_t n = f->n, p = f->p;
        std::size_t pos = 0;
        d.chunks.push_back(
            detail::take_stated_chunk(half, pos, {1, n * (p + 1) - 1}, "K(n,p)"));
        d.chunks.push_back(
            detail::take_stated_chunk(half, pos, {1, n * (p - 1) - 1}, "K(n,p)"));
        d.chunks.push_back(detail::take_tail(
            half, pos, {1, 2 * n - 1, 1, n * (p - 2) - 1, 1, n - 1}, "K(n,p)"));
        for (const auto& c : d.chunks)
            d.sum.add(c, 1);
        d.description = "(1,n(p+1)-1) + (1,n(p-1)-1) + (1,2n-1,1,n(p-2)-1,1,n-1,...)";
        return d;
    }
    throw no_claim_error("no registered decomposition for this cable word");
}

// ---------------------------------------------------------------------------
// Verification reports.
// ---------------------------------------------------------------------------

struct verification_report {
    std::string claim;
    json params = json::object();
    std::string verdict;  // confirmed | refuted | resource-limited
    json evidence = json::array();
    double seconds = 0.0;

    bool confirmed() const { return verdict == "confirmed"; }

    json to_json(bool include_timing = false) const {
        json j{{"claim", claim}, {"params", params}, {"verdict", verdict},
               {"evidence", evidence}};
        if (include_timing)
            j["timing_ms"] = seconds * 1000.0;
        return j;
    }
};

namespace detail {

class stopwatch {
public:
    stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Certify model ~ chunks symbolically: the chunk halves must concatenate to
// the model exactly, and every right fold must satisfy the sandwich
// hypothesis.  Returns evidence on success.
inline std::optional<json> certified_join(const staircase& model,
                                          const std::vector<staircase>& chunks) {
    std::vector<std::int64_t> glued;
    for (const auto& c : chunks)
        glued.insert(glued.end(), c.half().begin(), c.half().end());
    if (glued != model.half())
        return std::nullopt;
    json joins = json::array();
    if (chunks.size() >= 2) {
        staircase suffix = chunks.back();
        for (std::size_t i = chunks.size() - 1; i-- > 0;) {
            const concat_result r = concat(chunks[i], suffix);
            if (!r.hypothesis_holds)
                return std::nullopt;
            joins.push_back(json{{"left", chunks[i].to_string()},
                                 {"right", suffix.to_string()},
                                 {"hypothesis_holds", true}});
            suffix = r.joined;
        }
    }
    return json{{"method", "certified-joins"}, {"joins", std::move(joins)}};
}

// epsilon-equivalence of a model staircase with a claimed sum: direct tensor
// computation when it fits the cap, certified joins otherwise.
inline void check_equivalence(verification_report& rep, const staircase& model,
                              const decomposition& dec, const caps& limits) {
    const std::int64_t direct_size =
        static_cast<std::int64_t>(model.generator_count()) * dec.sum.tensor_generator_count();
    if (direct_size <= limits.max_generators) {
        const bool eq = epsilon_equivalent(to_complex(model), to_complex(dec.sum),
                                           limits.max_generators);
        rep.evidence.push_back(json{{"method", "direct-epsilon"},
                                    {"tensor_generators", direct_size},
                                    {"epsilon_zero", eq}});
        rep.verdict = eq ? "confirmed" : "refuted";
        return;
    }
    if (auto joins = certified_join(model, dec.chunks)) {
        rep.evidence.push_back(*joins);
        rep.verdict = "confirmed";
        return;
    }
    rep.evidence.push_back(json{{"method", "none"},
                                {"tensor_generators", direct_size},
                                {"cap", limits.max_generators}});
    rep.verdict = "resource-limited";
}

inline json stair_json(const staircase& s) {
    return json{{"half", s.half()}, {"text", s.to_string()}};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Proposition verifiers.  Claim ids follow the registered catalog:
//   3.2 K(n,p)   3.3 S(q)   3.4 T(p,np+1)   3.5 T(p,2p-1)   3.6 big cable
// ---------------------------------------------------------------------------

inline verification_report verify_proposition(const std::string& id, const json& params,
                                              const caps& limits = caps{}) {
    detail::stopwatch timer;
    verification_report rep;
    rep.claim = "prop-" + id;
    rep.params = params;
    try {
        knot_spec spec;
        std::optional<std::vector<std::int64_t>> literal_prefix;
        if (id == "3.2") {
            const std::int64_t n = params.at("n").get<std::int64_t>();
            const std::int64_t p = params.at("p").get<std::int64_t>();
            spec = kfamily_spec{n, p};
            literal_prefix = std::vector<std::int64_t>{
                1, n * (p + 1) - 1, 1, n * (p - 1) - 1, 1, 2 * n - 1, 1, n * (p - 2) - 1,
                1, n - 1};
        } else if (id == "3.3") {
            spec = sfamily_spec{params.at("q").get<std::int64_t>()};
        } else if (id == "3.4") {
            const std::int64_t p = params.at("p").get<std::int64_t>();
            const std::int64_t n = params.at("n").get<std::int64_t>();
            spec = torus_spec{p, n * p + 1};
        } else if (id == "3.5") {
            const std::int64_t p = params.at("p").get<std::int64_t>();
            spec = torus_spec{p, 2 * p - 1};
        } else if (id == "3.6") {
            spec = bigcable_spec{params.at("n").get<std::int64_t>(),
                                 params.at("p").get<std::int64_t>()};
        } else {
            throw no_claim_error("unknown proposition id: " + id);
        }

        const staircase model = model_staircase(spec);
        if (literal_prefix) {
            const auto& half = model.half();
            const bool prefix_ok =
                half.size() >= literal_prefix->size() &&
                std::equal(literal_prefix->begin(), literal_prefix->end(), half.begin());
            rep.evidence.push_back(json{
                {"check", "literal-prefix"},
                {"stated", *literal_prefix},
                {"computed",
                 std::vector<std::int64_t>(half.begin(),
                                           half.begin() + std::min(half.size(),
                                                                   literal_prefix->size()))},
                {"match", prefix_ok}});
            if (!prefix_ok) {
                rep.verdict = "refuted";
                rep.seconds = timer.seconds();
                return rep;
            }
        }
        const decomposition dec = claimed_decomposition(spec);
        json chunks = json::array();
        for (const auto& c : dec.chunks)
            chunks.push_back(detail::stair_json(c));
        rep.evidence.push_back(json{{"model", detail::stair_json(model)},
                                    {"claimed", std::move(chunks)},
                                    {"shape", dec.description}});
        detail::check_equivalence(rep, model, dec, limits);
    } catch (const resource_limit_error& e) {
        rep.verdict = "resource-limited";
        rep.evidence.push_back(json{{"error", e.what()}});
    }
    rep.seconds = timer.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// Lemma verifiers.  Claim ids:
//   2.4 first-step domination; 2.5 fourth-step domination;
//   2.6 concatenation vs tensor; 2.8 truncation witnesses.
// ---------------------------------------------------------------------------

inline verification_report verify_lemma(const std::string& id, const json& params,
                                        const caps& limits = caps{}) {
    detail::stopwatch timer;
    verification_report rep;
    rep.claim = "lemma-" + id;
    rep.params = params;
    try {
        if (id == "2.4") {
            const auto ah = params.at("a").get<std::vector<std::int64_t>>();
            const auto bh = params.at("b").get<std::vector<std::int64_t>>();
            const std::int64_t depth = params.value("N", limits.domination_depth);
            const staircase a(ah), b(bh);
            const bool clause1 = bh[0] > ah[0];
            const bool clause2 = !clause1 && bh[0] == ah[0] && ah.size() >= 2 &&
                                 bh.size() >= 2 && bh[1] < ah[1];
            if (!clause1 && !clause2)
                throw no_claim_error("hypothesis b1 > a1 or (b1 = a1, b2 < a2) not satisfied");
            const domination_evidence ev = dominates_bounded(
                stair_sum::single(a), stair_sum::single(b), depth, limits.max_generators);
            rep.evidence.push_back(json{{"hypothesis", clause1 ? "b1 > a1" : "b1 = a1, b2 < a2"},
                                        {"domination", to_json(ev)}});
            rep.verdict = ev.all_greater() ? "confirmed" : "refuted";
        } else if (id == "2.5") {
            const std::int64_t a = params.at("a").get<std::int64_t>();
            const std::int64_t c = params.at("c").get<std::int64_t>();
            const std::int64_t d = params.at("d").get<std::int64_t>();
            const std::int64_t depth = params.value("N", limits.domination_depth);
            if (!(a > 0 && c > 0 && d >= 0 && d < c))
                throw no_claim_error("hypothesis a, c > 0 and 0 <= d < c not satisfied");
            const staircase big({1, a, 1, a + c}), small({1, a, 1, a + d});
            const domination_evidence ev =
                dominates_bounded(stair_sum::single(big), stair_sum::single(small), depth,
                                  limits.max_generators);
            rep.evidence.push_back(json{{"dominant", big.to_string()},
                                        {"dominated", small.to_string()},
                                        {"domination", to_json(ev)}});
            rep.verdict = ev.all_greater() ? "confirmed" : "refuted";
        } else if (id == "2.6") {
            const staircase a(params.at("a").get<std::vector<std::int64_t>>());
            const staircase b(params.at("b").get<std::vector<std::int64_t>>());
            const concat_result r = concat(a, b);
            stair_sum sum;
            sum.add(a, 1);
            sum.add(b, 1);
            const bool equivalent = epsilon_equivalent(
                to_complex(sum, limits.max_generators), to_complex(r.joined),
                limits.max_generators);
            rep.evidence.push_back(json{{"joined", r.joined.to_string()},
                                        {"hypothesis_holds", r.hypothesis_holds},
                                        {"epsilon_equivalent", equivalent}});
            // The lemma asserts equivalence under the hypothesis.
            rep.verdict = (!r.hypothesis_holds || equivalent) ? "confirmed" : "refuted";
        } else if (id == "2.8") {
            const std::int64_t u = params.at("u").get<std::int64_t>();
            const std::int64_t v = params.at("v").get<std::int64_t>();
            const std::int64_t w = params.at("w").get<std::int64_t>();
            if (!(v >= u && u > w && w >= 1))
                throw no_claim_error("hypothesis v >= u > w >= 1 not satisfied");
            const filtered_complex A = to_complex(staircase({1, u, 1, v, 1, w}));
            const filtered_complex B = to_complex(staircase({1, u, 1, v}));
            guard_tensor_size(static_cast<std::int64_t>(B.size()) * B.size(),
                              static_cast<std::int64_t>(A.size()), limits.max_generators);
            const int above = epsilon(tensor(A, dual(B)));
            const int below = epsilon(tensor(tensor(B, B), dual(A)));
            rep.evidence.push_back(json{{"epsilon_A_tensor_dual_B", above},
                                        {"epsilon_2B_tensor_dual_A", below}});
            rep.verdict = (above == 1 && below == 1) ? "confirmed" : "refuted";
        } else {
            throw no_claim_error("unknown lemma id: " + id);
        }
    } catch (const resource_limit_error& e) {
        rep.verdict = "resource-limited";
        rep.evidence.push_back(json{{"error", e.what()}});
    }
    rep.seconds = timer.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// The iterated cancellation procedure.
// ---------------------------------------------------------------------------

struct build_t_result {
    std::int64_t n = 0, p = 0;
    std::int64_t n_prime = 0, p_prime = 0;
    stair_sum start;                // the initial connected-sum class
    std::vector<stair_sum> steps;   // the sum after each elimination round
    stair_sum final_sum;
    staircase special{std::vector<std::int64_t>{1}};  // the surviving dominant staircase A
    json certificate = json::object();
    bool flagged = false;           // a produced q-value failed to decrease

    verification_report report() const {
        verification_report rep;
        rep.claim = "construction-T";
        rep.params = json{{"n", n}, {"p", p}};
        rep.verdict = flagged ? "refuted" : "confirmed";
        rep.evidence = json::array({certificate});
        return rep;
    }
};

namespace detail {

// Decomposition of the torus knot that offsets S(q): the same cable applied
// to the unknot.  Returns (1,q')-type chunks first, then the dominated tails.
struct offset_decomposition {
    std::int64_t a = 0, b = 0;  // the torus knot T(a,b)
    std::vector<std::pair<staircase, std::int64_t>> terms;
    std::vector<std::int64_t> produced_q;
};

inline offset_decomposition offset_for_s(std::int64_t q) {
    offset_decomposition off;
    if (q % 2 == 0) {
        // T(q/2+1, q+1) = T(m, 2m-1): (1,m-1) + (1,m-2) + (2,...).
        const std::int64_t m = q / 2 + 1;
        off.a = m;
        off.b = q + 1;
        const decomposition dec = claimed_decomposition(torus_spec{m, 2 * m - 1});
        for (const auto& c : dec.chunks)
            off.terms.emplace_back(c, 1);
        off.produced_q = {m - 1, m - 2};
    } else {
        // T((q+1)/2, q+2) = T(m, 2m+1): two copies of the T(m,m+1) split.
        const std::int64_t m = (q + 1) / 2;
        off.a = m;
        off.b = q + 2;
        for (const auto& c : split_pp1(m))
            off.terms.emplace_back(c, 2);
        off.produced_q = {m - 1, m - 1};
    }
    return off;
}

}  // namespace detail

// Replays the obstruction-elimination procedure at the level of formal sums:
// starting from K(n',p') # -T(p',p'+1; n', n'(p'^2+p')+1), every two-step
// summand (1,q) with q >= 2n'-1 is cancelled against S(q) and its offsetting
// torus knot, until only the dominant staircase A and terms it dominates
// remain.  Works symbolically; the underlying proposition instances are
// verified elsewhere.
inline build_t_result build_T(std::int64_t n, std::int64_t p,
                              [[maybe_unused]] const caps& limits = caps{}) {
    check_invariant(n >= 0 && p >= 0, "build_T requires n, p >= 0");
    build_t_result res;
    res.n = n;
    res.p = p;
    const std::int64_t np = res.n_prime = 2 * (n + 2);
    const std::int64_t pp = res.p_prime = p + 5;
    const std::int64_t threshold = 2 * np - 1;

    const decomposition kdec = claimed_decomposition(kfamily_spec{np, pp});
    const decomposition bdec = claimed_decomposition(bigcable_spec{np, pp});
    res.special = kdec.chunks[2];

    stair_sum sum = kdec.sum - bdec.sum;
    res.start = sum;

    json rounds = json::array();
    json absorptions = json::array();
    std::int64_t prev_max_q = INT64_MAX;
    constexpr int round_cap = 64;
    bool done = false;
    for (int round = 0; round < round_cap && !done; ++round) {
        // Current obstructions: two-step summands (1, q) with q >= 2n'-1.
        std::vector<std::pair<std::int64_t, std::int64_t>> obstructions;  // (q, coeff)
        for (const auto& [st, k] : sum.terms()) {
            if (st == res.special)
                continue;
            const auto& h = st.half();
            if (h.size() == 2 && h[0] == 1 && h[1] >= threshold)
                obstructions.emplace_back(h[1], k);
        }
        if (obstructions.empty()) {
            done = true;
            break;
        }
        std::int64_t max_q = 0;
        for (const auto& [q, k] : obstructions)
            max_q = std::max(max_q, q);
        if (max_q >= prev_max_q) {
            res.flagged = true;
            break;
        }
        prev_max_q = max_q;

        json events = json::array();
        for (const auto& [q, k] : obstructions) {
            // Eliminate k * (1,q): add -k * S(q) and +k * (offset torus knot).
            const decomposition sdec = claimed_decomposition(sfamily_spec{q});
            const detail::offset_decomposition off = detail::offset_for_s(q);
            for (std::int64_t qi : off.produced_q)
                if (qi >= q)
                    res.flagged = true;
            stair_sum delta;
            delta = delta - sdec.sum;           // -S(q) = -(1,q) - (2,...)
            for (const auto& [st, c] : off.terms)
                delta.add(st, c);                // + offset decomposition
            if (k < 0)
                delta = -delta;
            const std::int64_t copies = k < 0 ? -k : k;
            for (std::int64_t i = 0; i < copies; ++i)
                sum = sum + delta;
            check_invariant(sum.terms().find(staircase({1, q})) == sum.terms().end(),
                            "obstruction (1,q) failed to cancel");
            events.push_back(json{{"q", q},
                                  {"coeff", k},
                                  {"s_cable", json::array({q % 2 == 0 ? q / 2 + 1 : (q + 1) / 2,
                                                           q % 2 == 0 ? q + 1 : q + 2})},
                                  {"offset_torus", json::array({off.a, off.b})},
                                  {"produced_q", off.produced_q}});
        }
        rounds.push_back(json{{"round", round}, {"max_q", max_q}, {"events", std::move(events)}});
        res.steps.push_back(sum);
    }
    if (!done && !res.flagged)
        throw non_termination_error("obstruction elimination exceeded its round cap");

    // Everything left besides A must be dominated by A = (1, 2n'-1, ...):
    // first step above 1, or second step below 2n'-1.
    for (const auto& [st, k] : sum.terms()) {
        if (st == res.special)
            continue;
        const auto& h = st.half();
        std::string clause;
        if (h[0] > 1)
            clause = "b1 > a1";
        else if (h.size() >= 2 && h[0] == 1 && h[1] < threshold)
            clause = "b1 = a1, b2 < a2";
        else {
            res.flagged = true;
            clause = "NOT DOMINATED";
        }
        absorptions.push_back(json{{"staircase", st.to_string()}, {"coeff", k},
                                   {"clause", clause}});
    }
    res.final_sum = sum;
    check_invariant(res.final_sum.terms().count(res.special) == 1,
                    "the dominant staircase A left the sum");

    res.certificate = json{{"n_prime", np},
                           {"p_prime", pp},
                           {"threshold", threshold},
                           {"special", res.special.to_string()},
                           {"start", to_json(res.start)},
                           {"rounds", std::move(rounds)},
                           {"absorptions", std::move(absorptions)},
                           {"final", to_json(res.final_sum)}};
    return res;
}

// ---------------------------------------------------------------------------
// Theorem witnesses: for consecutive parameter pairs, check the hypotheses of
// the governing domination lemmas on the dominant staircases symbolically,
// with a direct comparison as corroboration when it fits the caps.
// ---------------------------------------------------------------------------

inline verification_report witness_theorem(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
    const caps& limits = caps{}) {
    detail::stopwatch timer;
    verification_report rep;
    rep.claim = "theorem-witness";
    {
        json jp = json::array();
        for (const auto& [a, b] : pairs)
            jp.push_back(json::array({a, b}));
        rep.params = json{{"pairs", std::move(jp)}};
    }
    bool all_ok = true;
    const auto special_of = [&](std::int64_t n, std::int64_t p) {
        const std::int64_t np = 2 * (n + 2), pp = p + 5;
        return claimed_decomposition(kfamily_spec{np, pp}).chunks[2];
    };
    for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
        const auto [n1, p1] = pairs[i];
        const auto [n2, p2] = pairs[i + 1];
        json step{{"from", json::array({n1, p1})}, {"to", json::array({n2, p2})}};
        if (std::make_pair(n1, p1) == std::make_pair(n2, p2)) {
            step["verdict"] = "equal";
            rep.evidence.push_back(std::move(step));
            continue;
        }
        if (std::make_pair(n2, p2) < std::make_pair(n1, p1))
            throw no_claim_error("witness pairs must be lexicographically non-decreasing");
        const staircase a1 = special_of(n1, p1);
        const staircase a2 = special_of(n2, p2);
        step["lower"] = a1.to_string();
        step["upper"] = a2.to_string();
        bool ok = false;
        if (n1 == n2) {
            // Same first index: truncate both to (1,u,1,v) and apply the
            // fourth-step lemma; the truncation is justified by the
            // (1,u,1,v,1,w,...) ~ (1,u,1,v) equivalence, whose hypothesis
            // v >= u > w >= 1 is checked here for both staircases.
            const std::int64_t np = 2 * (n1 + 2);
            const std::int64_t u = 2 * np - 1, w = np - 1;
            const std::int64_t v1 = np * (p1 + 5 - 2) - 1;
            const std::int64_t v2 = np * (p2 + 5 - 2) - 1;
            const bool prefixes =
                a1.half().size() >= 6 && a2.half().size() >= 6 &&
                a1.half()[0] == 1 && a1.half()[1] == u && a1.half()[2] == 1 &&
                a1.half()[3] == v1 && a1.half()[4] == 1 && a1.half()[5] == w &&
                a2.half()[0] == 1 && a2.half()[1] == u && a2.half()[2] == 1 &&
                a2.half()[3] == v2 && a2.half()[4] == 1 && a2.half()[5] == w;
            const bool truncation1 = v1 >= u && u > w && w >= 1;
            const bool truncation2 = v2 >= u && u > w && w >= 1;
            const bool fourth_step = v1 - u >= 0 && v2 - u > v1 - u;
            ok = prefixes && truncation1 && truncation2 && fourth_step;
            step["governing"] = "truncation + fourth-step domination";
            step["hypotheses"] = json{{"prefixes_match", prefixes},
                                      {"truncation_lower", truncation1},
                                      {"truncation_upper", truncation2},
                                      {"d_less_than_c", fourth_step},
                                      {"u", u},
                                      {"v_lower", v1},
                                      {"v_upper", v2},
                                      {"w", w}};
        } else {
            // First index grows: first-step lemma, second clause
            // (b1 = a1 = 1, b2 = 2n1'-1 < 2n2'-1 = a2).
            const std::int64_t b2 = 2 * (2 * (n1 + 2)) - 1;
            const std::int64_t a2v = 2 * (2 * (n2 + 2)) - 1;
            const bool clause = a1.half()[0] == 1 && a2.half()[0] == 1 && b2 < a2v &&
                                a1.half()[1] == b2 && a2.half()[1] == a2v;
            ok = clause;
            step["governing"] = "first-step domination (b1 = a1, b2 < a2)";
            step["hypotheses"] = json{{"b2", b2}, {"a2", a2v}, {"clause_holds", clause}};
        }
        // Direct corroboration at depth 1 when the tensor fits the cap.
        const std::int64_t direct =
            static_cast<std::int64_t>(a1.generator_count()) *
            static_cast<std::int64_t>(a2.generator_count());
        if (direct <= limits.max_generators) {
            const ordering rel =
                compare(to_complex(a2), to_complex(a1), limits.max_generators).relation;
            step["direct_compare"] = to_string(rel);
            ok = ok && rel == ordering::greater;
        } else {
            step["direct_compare"] = "skipped (cap)";
        }
        step["verdict"] = ok ? "confirmed" : "refuted";
        all_ok = all_ok && ok;
        rep.evidence.push_back(std::move(step));
    }
    rep.verdict = all_ok ? "confirmed" : "refuted";
    rep.seconds = timer.seconds();
    return rep;
}

}  // namespace floerstair
