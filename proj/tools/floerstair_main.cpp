// Command-line front end: Alexander polynomials, staircases, filtered
// complexes, concordance invariants, epsilon-order comparisons, and the batch
// verification harness with JSON certificates.
//
// Exit codes: 0 success/confirmed, 1 refuted claim, 2 usage error,
// 3 resource limit.

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "floerstair/alexander.hpp"
#include "floerstair/config.hpp"
#include "floerstair/families.hpp"
#include "floerstair/invariants.hpp"
#include "floerstair/json_io.hpp"

namespace {

using namespace floerstair;

constexpr int exit_ok = 0;
constexpr int exit_refuted = 1;
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;

std::vector<std::int64_t> parse_int_list(const std::string& text, char sep = ',') {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (item.empty())
            continue;
        out.push_back(std::stoll(item));
    }
    if (out.empty())
        throw CLI::ValidationError("expected a nonempty comma-separated integer list");
    return out;
}

cable_word parse_stages(const std::string& text) {
    cable_word w;
    std::stringstream ss(text);
    std::string stage;
    while (std::getline(ss, stage, ';')) {
        if (stage.empty())
            continue;
        const auto pq = parse_int_list(stage);
        if (pq.size() != 2)
            throw CLI::ValidationError("each cable stage must be 'p,q'");
        w.stages.push_back(cable_stage{pq[0], pq[1]});
    }
    if (w.stages.empty())
        throw CLI::ValidationError("expected at least one cable stage");
    return w;
}

// "c:half" e.g. "2:1,3" or "-1:1,1".
std::pair<staircase, std::int64_t> parse_term(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("term must be 'coeff:step,step,...'");
    const std::int64_t coeff = std::stoll(text.substr(0, colon));
    return {staircase(parse_int_list(text.substr(colon + 1))), coeff};
}

void emit(const json& doc, bool json_mode, const std::string& text) {
    if (json_mode)
        std::cout << doc.dump() << "\n";
    else
        std::cout << text << "\n";
}

// ---- knot selectors shared by staircase / complex / invariants -------------

struct selector {
    CLI::App* torus = nullptr;
    CLI::App* cable = nullptr;
    CLI::App* kfam = nullptr;
    CLI::App* sfam = nullptr;
    CLI::App* bigc = nullptr;
    CLI::App* stairs = nullptr;
    std::int64_t p = 2, q = 3, n = 4;
    std::string stages;
    std::vector<std::string> terms;
    bool dualize = false;

    void attach(CLI::App* cmd, bool with_stairs) {
        torus = cmd->add_subcommand("torus", "torus knot T(p,q)");
        torus->add_option("-p", p)->required();
        torus->add_option("-q", q)->required();
        cable = cmd->add_subcommand("cable", "iterated cable, stages innermost first");
        cable->add_option("--stages", stages, "'p1,q1;p2,q2;...'")->required();
        kfam = cmd->add_subcommand("kfamily", "the doubled-cable family K(n,p)");
        kfam->add_option("-n", n)->required();
        kfam->add_option("-p", p)->required();
        sfam = cmd->add_subcommand("sfamily", "the doubled-cable family S(q)");
        sfam->add_option("-q", q)->required();
        bigc = cmd->add_subcommand("bigcable", "the (n, n(p^2+p)+1) cable of T(p,p+1)");
        bigc->add_option("-n", n)->required();
        bigc->add_option("-p", p)->required();
        if (with_stairs) {
            stairs = cmd->add_subcommand("sum", "formal staircase sum");
            stairs->add_option("--term", terms, "coeff:step,step,... (repeatable)")
                ->required()
                ->take_all();
        }
        cmd->require_subcommand(1);
    }

    knot_spec spec() const {
        if (torus->parsed())
            return torus_spec{p, q};
        if (cable->parsed())
            return cable_spec{parse_stages(stages)};
        if (kfam->parsed())
            return kfamily_spec{n, p};
        if (sfam->parsed())
            return sfamily_spec{q};
        return bigcable_spec{n, p};
    }

    bool is_sum() const { return stairs && stairs->parsed(); }

    stair_sum sum() const {
        stair_sum s;
        for (const auto& t : terms) {
            const auto [st, k] = parse_term(t);
            s.add(st, k);
        }
        return s;
    }
};

// ---- the registered verification grid --------------------------------------

struct grid_entry {
    enum class kind_t { prop, lemma, construction, witness } kind;
    std::string id;
    json params;
};

std::vector<grid_entry> verification_grid() {
    using K = grid_entry::kind_t;
    std::vector<grid_entry> grid;
    for (auto [p, n] : {std::pair<int, int>{2, 2}, {2, 3}, {3, 2}, {4, 2}, {5, 2}})
        grid.push_back({K::prop, "3.4", {{"p", p}, {"n", n}}});
    for (int p = 3; p <= 6; ++p)
        grid.push_back({K::prop, "3.5", {{"p", p}}});
    for (int q = 4; q <= 9; ++q)
        grid.push_back({K::prop, "3.3", {{"q", q}}});
    for (auto [n, p] : {std::pair<int, int>{2, 2}, {3, 2}, {2, 3}})
        grid.push_back({K::prop, "3.6", {{"n", n}, {"p", p}}});
    grid.push_back({K::prop, "3.2", {{"n", 4}, {"p", 5}}});
    for (auto [u, v, w] : {std::tuple<int, int, int>{2, 2, 1}, {3, 5, 2}, {4, 4, 3}})
        grid.push_back({K::lemma, "2.8", {{"u", u}, {"v", v}, {"w", w}}});
    grid.push_back({K::lemma, "2.4", {{"a", {1, 3}}, {"b", {2, 1}}, {"N", 3}}});
    grid.push_back({K::lemma, "2.5", {{"a", 2}, {"c", 3}, {"d", 2}, {"N", 2}}});
    grid.push_back({K::lemma, "2.6", {{"a", {1, 4}}, {"b", {2, 3}}}});
    grid.push_back({K::lemma, "2.6", {{"a", {1, 1}}, {"b", {1}}}});
    grid.push_back({K::construction, "T", {{"n", 0}, {"p", 0}}});
    grid.push_back(
        {K::witness, "order", {{"pairs", json::array({json::array({0, 0}), json::array({0, 1}),
                                                      json::array({1, 0})})}}});
    return grid;
}

verification_report run_grid_entry(const grid_entry& e, const caps& limits) {
    using K = grid_entry::kind_t;
    switch (e.kind) {
    case K::prop:
        return verify_proposition(e.id, e.params, limits);
    case K::lemma:
        return verify_lemma(e.id, e.params, limits);
    case K::construction: {
        const build_t_result r = build_T(e.params.at("n").get<std::int64_t>(),
                                         e.params.at("p").get<std::int64_t>(), limits);
        return r.report();
    }
    case K::witness: {
        std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
        for (const auto& pr : e.params.at("pairs"))
            pairs.emplace_back(pr.at(0).get<std::int64_t>(), pr.at(1).get<std::int64_t>());
        return witness_theorem(pairs, limits);
    }
    }
    throw std::logic_error("unreachable");
}

std::string params_slug(const json& params) {
    std::string s;
    for (const auto& [k, v] : params.items()) {
        s += "_" + k;
        if (v.is_number_integer())
            s += std::to_string(v.get<std::int64_t>());
        else
            for (char c : v.dump())
                if (std::isalnum(static_cast<unsigned char>(c)))
                    s += c;
    }
    return s;
}

void write_certificate(const std::string& dir, const verification_report& rep) {
    std::filesystem::create_directories(dir);
    const std::string path = dir + "/" + rep.claim + params_slug(rep.params) + ".json";
    std::ofstream out(path);
    out << rep.to_json(/*include_timing=*/true).dump(2) << "\n";
}

int verdict_exit(const verification_report& rep) {
    if (rep.verdict == "confirmed")
        return exit_ok;
    if (rep.verdict == "resource-limited")
        return exit_resource;
    return exit_refuted;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"staircase knot Floer complexes, concordance invariants, and an "
                 "order-verification harness"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit exactly one JSON document on stdout");
    caps limits = caps::from_env();
    app.add_option("--max-generators", limits.max_generators, "tensor generator cap");
    app.add_option("--domination-depth", limits.domination_depth,
                   "default N for domination evidence");

    // alexander ---------------------------------------------------------------
    auto* alex = app.add_subcommand("alexander", "Alexander polynomials");
    std::int64_t ap = 2, aq = 3, an = 1;
    std::string astages;
    auto* alex_torus = alex->add_subcommand("torus", "T(p,q) via the quotient formula");
    alex_torus->add_option("-p", ap)->required();
    alex_torus->add_option("-q", aq)->required();
    auto* alex_cable = alex->add_subcommand("cable", "iterated cable");
    alex_cable->add_option("--stages", astages, "'p1,q1;p2,q2;...'")->required();
    auto* alex_np1 = alex->add_subcommand("closed-np1", "closed form for T(p,np+1)");
    alex_np1->add_option("-p", ap)->required();
    alex_np1->add_option("-n", an)->required();
    auto* alex_pc = alex->add_subcommand("closed-pcable",
                                         "closed form for the (p,p+1)-cable of the trefoil");
    alex_pc->add_option("-p", ap)->required();
    auto* alex_2p = alex->add_subcommand("closed-2pm1", "closed form for T(p,2p-1)");
    alex_2p->add_option("-p", ap)->required();
    alex->require_subcommand(1);

    // staircase ---------------------------------------------------------------
    auto* stc = app.add_subcommand("staircase", "staircase step sequences");
    selector stc_sel;
    stc_sel.attach(stc, /*with_stairs=*/false);

    // complex -----------------------------------------------------------------
    auto* cpx = app.add_subcommand("complex", "filtered chain complexes");
    selector cpx_sel;
    cpx_sel.attach(cpx, /*with_stairs=*/true);
    cpx->add_flag("--dual", cpx_sel.dualize, "emit the dual complex");

    // invariants ----------------------------------------------------------------
    auto* inv = app.add_subcommand("invariants", "tau, nu, nu', epsilon");
    selector inv_sel;
    inv_sel.attach(inv, /*with_stairs=*/true);
    inv->add_flag("--dual", inv_sel.dualize, "compute for the dual complex");

    // compare -------------------------------------------------------------------
    auto* cmp = app.add_subcommand("compare", "epsilon-order comparison of staircase sums");
    std::vector<std::string> cmp_left, cmp_right;
    std::int64_t cmp_depth = 0;
    cmp->add_option("--left", cmp_left, "coeff:steps term (repeatable)")->required()->take_all();
    cmp->add_option("--right", cmp_right, "coeff:steps term (repeatable)")
        ->required()
        ->take_all();
    cmp->add_option("--evidence", cmp_depth, "also gather domination evidence to depth N");

    // verify ----------------------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "verify registered claims");
    std::string ver_certs = "./certs";
    ver->add_option("--certs", ver_certs, "certificate output directory");
    std::string claim_id;
    std::int64_t vp = 0, vq = 0, vn = 0, vu = 0, vv = 0, vw = 0, vc = 0, vd = 0, vN = 0;
    std::string va, vb;
    auto* ver_prop = ver->add_subcommand("prop", "staircase decomposition claims");
    ver_prop->add_option("id", claim_id, "claim id, e.g. 3.4")->required();
    ver_prop->add_option("-p", vp);
    ver_prop->add_option("-q", vq);
    ver_prop->add_option("-n", vn);
    auto* ver_lemma = ver->add_subcommand("lemma", "ordering and concatenation claims");
    ver_lemma->add_option("id", claim_id, "claim id, e.g. 2.8")->required();
    ver_lemma->add_option("-u", vu);
    ver_lemma->add_option("-v", vv);
    ver_lemma->add_option("-w", vw);
    ver_lemma->add_option("-a", va, "half steps or integer, claim-dependent");
    ver_lemma->add_option("-b", vb, "half steps");
    ver_lemma->add_option("-c", vc);
    ver_lemma->add_option("-d", vd);
    ver_lemma->add_option("-N", vN, "domination depth");
    auto* ver_cons = ver->add_subcommand("construction", "the obstruction-elimination tower");
    ver_cons->add_option("-n", vn)->required();
    ver_cons->add_option("-p", vp)->required();
    std::vector<std::string> eq_left, eq_right;
    auto* ver_equiv = ver->add_subcommand("equiv", "epsilon-equivalence of two staircase sums");
    ver_equiv->add_option("--left", eq_left)->required()->take_all();
    ver_equiv->add_option("--right", eq_right)->required()->take_all();
    auto* ver_all = ver->add_subcommand("all", "run the full registered grid");
    ver->require_subcommand(1);

    // witness -----------------------------------------------------------------
    auto* wit = app.add_subcommand("witness", "order witnesses for the parameter ladder");
    std::string wit_pairs;
    wit->add_option("--pairs", wit_pairs, "'n1,p1;n2,p2;...'")->required();
    wit->add_option("--certs", ver_certs, "certificate output directory");

    // Let --json and the cap overrides appear after any subcommand.
    const std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        cmd->fallthrough();
        for (CLI::App* sub : cmd->get_subcommands(nullptr))
            enable_fallthrough(sub);
    };
    for (CLI::App* sub : app.get_subcommands(nullptr))
        enable_fallthrough(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (alex->parsed()) {
            laurent_poly d;
            if (alex_torus->parsed())
                d = torus_alexander(ap, aq);
            else if (alex_cable->parsed())
                d = iterated_cable_alexander(parse_stages(astages));
            else if (alex_np1->parsed())
                d = closed_form_np1(ap, an);
            else if (alex_pc->parsed())
                d = closed_form_pcable(ap);
            else
                d = closed_form_2pm1(ap);
            emit(to_json(d), json_mode, d.to_string());
            return exit_ok;
        }
        if (stc->parsed()) {
            const staircase s = model_staircase(stc_sel.spec());
            emit(to_json(s), json_mode, s.to_string());
            return exit_ok;
        }
        if (cpx->parsed()) {
            filtered_complex c = cpx_sel.is_sum()
                                     ? to_complex(cpx_sel.sum(), limits.max_generators)
                                     : to_complex(model_staircase(cpx_sel.spec()));
            if (cpx_sel.dualize)
                c = dual(c);
            std::ostringstream text;
            text << c.size() << " generators, " << c.arrows().size() << " arrows";
            emit(to_json(c), json_mode, text.str());
            return exit_ok;
        }
        if (inv->parsed()) {
            filtered_complex c = inv_sel.is_sum()
                                     ? to_complex(inv_sel.sum(), limits.max_generators)
                                     : to_complex(model_staircase(inv_sel.spec()));
            if (inv_sel.dualize)
                c = dual(c);
            const invariant_record r = compute_invariants(c);
            std::ostringstream text;
            text << "tau = " << r.tau << ", nu = " << r.nu << ", nu' = " << r.nu_prime
                 << ", epsilon = " << r.epsilon;
            emit(to_json(r, digest(c)), json_mode, text.str());
            return exit_ok;
        }
        if (cmp->parsed()) {
            stair_sum left, right;
            for (const auto& t : cmp_left) {
                const auto [st, k] = parse_term(t);
                left.add(st, k);
            }
            for (const auto& t : cmp_right) {
                const auto [st, k] = parse_term(t);
                right.add(st, k);
            }
            const filtered_complex lc = to_complex(left, limits.max_generators);
            const filtered_complex rc = to_complex(right, limits.max_generators);
            const ordering rel = compare(lc, rc, limits.max_generators).relation;
            json doc = comparison_to_json(rel, digest(lc), digest(rc));
            std::ostringstream text;
            text << to_string(rel);
            if (cmp_depth > 0) {
                const domination_evidence ev =
                    dominates_bounded(lc, rc, cmp_depth, limits.max_generators);
                doc["dominates_evidence"] = to_json(ev);
                if (ev.all_greater())
                    text << " (dominates to depth " << cmp_depth << ")";
                else
                    text << " (evidence fails at n = " << *ev.first_failure << ")";
            }
            emit(doc, json_mode, text.str());
            return exit_ok;
        }
        if (wit->parsed()) {
            std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
            for (const auto& st : parse_stages(wit_pairs).stages)
                pairs.emplace_back(st.p, st.q);
            const verification_report rep = witness_theorem(pairs, limits);
            write_certificate(ver_certs, rep);
            emit(rep.to_json(), json_mode, rep.claim + ": " + rep.verdict);
            return verdict_exit(rep);
        }
        if (ver->parsed()) {
            if (ver_all->parsed()) {
                json summary = json::array();
                int exit_code = exit_ok;
                std::size_t confirmed = 0, refuted = 0, limited = 0;
                for (const auto& entry : verification_grid()) {
                    const verification_report rep = run_grid_entry(entry, limits);
                    write_certificate(ver_certs, rep);
                    const bool over_budget = rep.seconds > limits.per_claim_seconds;
                    summary.push_back(json{{"claim", rep.claim},
                                           {"params", rep.params},
                                           {"verdict", rep.verdict},
                                           {"over_budget", over_budget}});
                    if (!json_mode)
                        std::cout << rep.claim << " " << rep.params.dump() << " -> "
                                  << rep.verdict << (over_budget ? " (over budget)" : "")
                                  << "\n";
                    if (rep.verdict == "refuted") {
                        exit_code = exit_refuted;
                        ++refuted;
                    } else if (rep.verdict == "resource-limited") {
                        ++limited;
                    } else {
                        ++confirmed;
                    }
                }
                const json doc{{"claims", summary},
                               {"confirmed", confirmed},
                               {"refuted", refuted},
                               {"resource_limited", limited}};
                if (json_mode)
                    std::cout << doc.dump() << "\n";
                else
                    std::cout << confirmed << " confirmed, " << refuted << " refuted, "
                              << limited << " resource-limited\n";
                return exit_code;
            }
            verification_report rep;
            if (ver_prop->parsed()) {
                json params = json::object();
                if (claim_id == "3.2")
                    params = {{"n", vn}, {"p", vp}};
                else if (claim_id == "3.3")
                    params = {{"q", vq}};
                else if (claim_id == "3.4")
                    params = {{"p", vp}, {"n", vn}};
                else if (claim_id == "3.5")
                    params = {{"p", vp}};
                else if (claim_id == "3.6")
                    params = {{"n", vn}, {"p", vp}};
                rep = verify_proposition(claim_id, params, limits);
            } else if (ver_lemma->parsed()) {
                json params = json::object();
                if (claim_id == "2.4")
                    params = {{"a", parse_int_list(va)},
                              {"b", parse_int_list(vb)},
                              {"N", vN > 0 ? vN : limits.domination_depth}};
                else if (claim_id == "2.5")
                    params = {{"a", std::stoll(va)},
                              {"c", vc},
                              {"d", vd},
                              {"N", vN > 0 ? vN : limits.domination_depth}};
                else if (claim_id == "2.6")
                    params = {{"a", parse_int_list(va)}, {"b", parse_int_list(vb)}};
                else if (claim_id == "2.8")
                    params = {{"u", vu}, {"v", vv}, {"w", vw}};
                rep = verify_lemma(claim_id, params, limits);
            } else if (ver_cons->parsed()) {
                rep = build_T(vn, vp, limits).report();
            } else {
                stair_sum left, right;
                for (const auto& t : eq_left) {
                    const auto [st, k] = parse_term(t);
                    left.add(st, k);
                }
                for (const auto& t : eq_right) {
                    const auto [st, k] = parse_term(t);
                    right.add(st, k);
                }
                rep.claim = "equivalence";
                rep.params = json{{"left", to_json(left)}, {"right", to_json(right)}};
                const bool eq =
                    epsilon_equivalent(to_complex(left, limits.max_generators),
                                       to_complex(right, limits.max_generators),
                                       limits.max_generators);
                rep.evidence.push_back(json{{"epsilon_zero", eq}});
                rep.verdict = eq ? "confirmed" : "refuted";
            }
            write_certificate(ver_certs, rep);
            emit(rep.to_json(), json_mode, rep.claim + ": " + rep.verdict);
            return verdict_exit(rep);
        }
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return exit_resource;
    } catch (const no_claim_error& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return exit_usage;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
