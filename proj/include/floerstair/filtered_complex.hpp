#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "floerstair/errors.hpp"
#include "floerstair/gf2.hpp"

namespace floerstair {

struct generator {
    std::string name;
    std::int64_t alexander = 0;
    std::int64_t maslov = 0;

    friend bool operator==(const generator&, const generator&) = default;
};

// A finitely generated Z (+) Z-filtered chain complex over F2[U, U^-1], given
// by one generator per U-orbit and an arrow set for the differential.  The
// generator x sits at lattice position (0, A(x)) and U^m x at (-m, A(x)-m).
// The U-power shift carried by an arrow is derived from the Maslov gradings:
// the differential drops Maslov by exactly 1 and U drops it by 2.
class filtered_complex {
public:
    using arrow = std::pair<std::int32_t, std::int32_t>;

    filtered_complex(std::vector<generator> gens, std::vector<arrow> arrows)
        : gens_(std::move(gens)), arrows_(std::move(arrows)) {
        std::sort(arrows_.begin(), arrows_.end());
        arrows_.erase(std::unique(arrows_.begin(), arrows_.end()), arrows_.end());
        out_.assign(gens_.size(), {});
        for (const auto& [s, t] : arrows_) {
            check_invariant(s >= 0 && t >= 0 && s < static_cast<std::int32_t>(gens_.size()) &&
                                t < static_cast<std::int32_t>(gens_.size()),
                            "arrow endpoint out of range");
            out_[s].push_back(t);
        }
        validate();
    }

    static filtered_complex unknot() {
        return filtered_complex({generator{"u", 0, 0}}, {});
    }

    std::size_t size() const { return gens_.size(); }
    const std::vector<generator>& generators() const { return gens_; }
    const std::vector<arrow>& arrows() const { return arrows_; }
    const std::vector<std::int32_t>& out(std::int32_t src) const { return out_[src]; }

    // U-power of the target inside d(src): d(src) contains U^shift * tgt.
    std::int64_t arrow_shift(std::int32_t src, std::int32_t tgt) const {
        return (gens_[tgt].maslov - gens_[src].maslov + 1) / 2;
    }

    bool arrow_is_vertical(std::int32_t src, std::int32_t tgt) const {
        return arrow_shift(src, tgt) == 0;
    }

    bool arrow_is_horizontal(std::int32_t src, std::int32_t tgt) const {
        const std::int64_t m = arrow_shift(src, tgt);
        return m > 0 && gens_[tgt].alexander - m == gens_[src].alexander;
    }

    std::int64_t max_abs_alexander() const {
        std::int64_t g = 0;
        for (const auto& x : gens_)
            g = std::max(g, x.alexander < 0 ? -x.alexander : x.alexander);
        return g;
    }

private:
    void validate() const {
        for (const auto& [s, t] : arrows_) {
            const std::int64_t dm = gens_[t].maslov - gens_[s].maslov + 1;
            check_invariant(dm % 2 == 0, "arrow does not drop Maslov by 1 at an integer U-power");
            const std::int64_t m = dm / 2;
            check_invariant(m >= 0, "arrow increases the i-filtration");
            const std::int64_t dj = gens_[t].alexander - m - gens_[s].alexander;
            check_invariant(dj <= 0, "arrow increases the j-filtration");
            check_invariant(m > 0 || dj < 0, "arrow does not strictly decrease the filtration");
        }
        // d^2 = 0 over F2: two-step paths from each source must pair off.
        for (std::size_t s = 0; s < gens_.size(); ++s) {
            std::vector<std::int32_t> twostep;
            for (std::int32_t mid : out_[s])
                twostep.insert(twostep.end(), out_[mid].begin(), out_[mid].end());
            std::sort(twostep.begin(), twostep.end());
            for (std::size_t i = 0; i < twostep.size();) {
                std::size_t j = i;
                while (j < twostep.size() && twostep[j] == twostep[i])
                    ++j;
                check_invariant((j - i) % 2 == 0, "d^2 != 0");
                i = j;
            }
        }
    }

    std::vector<generator> gens_;
    std::vector<arrow> arrows_;
    std::vector<std::vector<std::int32_t>> out_;
};

// Tensor product over F2[U, U^-1]: gradings add, d obeys the Leibniz rule.
inline filtered_complex tensor(const filtered_complex& a, const filtered_complex& b) {
    const auto na = static_cast<std::int32_t>(a.size());
    const auto nb = static_cast<std::int32_t>(b.size());
    std::vector<generator> gens;
    gens.reserve(static_cast<std::size_t>(na) * nb);
    for (std::int32_t i = 0; i < na; ++i)
        for (std::int32_t j = 0; j < nb; ++j)
            gens.push_back(generator{a.generators()[i].name + "|" + b.generators()[j].name,
                                     a.generators()[i].alexander + b.generators()[j].alexander,
                                     a.generators()[i].maslov + b.generators()[j].maslov});
    const auto idx = [nb](std::int32_t i, std::int32_t j) { return i * nb + j; };
    std::vector<filtered_complex::arrow> arrows;
    arrows.reserve(a.arrows().size() * nb + b.arrows().size() * na);
    for (const auto& [s, t] : a.arrows())
        for (std::int32_t j = 0; j < nb; ++j)
            arrows.emplace_back(idx(s, j), idx(t, j));
    for (const auto& [s, t] : b.arrows())
        for (std::int32_t i = 0; i < na; ++i)
            arrows.emplace_back(idx(i, s), idx(i, t));
    return filtered_complex(std::move(gens), std::move(arrows));
}

// Dual complex: gradings negate, arrows reverse.
inline filtered_complex dual(const filtered_complex& c) {
    std::vector<generator> gens;
    gens.reserve(c.size());
    for (const auto& x : c.generators())
        gens.push_back(generator{x.name + "*", -x.alexander, -x.maslov});
    std::vector<filtered_complex::arrow> arrows;
    arrows.reserve(c.arrows().size());
    for (const auto& [s, t] : c.arrows())
        arrows.emplace_back(t, s);
    return filtered_complex(std::move(gens), std::move(arrows));
}

// Lattice regions from the fixed catalog.  Only these five shapes carry the
// subquotient structure the invariants need.
struct region {
    enum class kind_t { vertical_line, vertical_below, vertical_above, hook_max, hook_min };

    kind_t kind = kind_t::vertical_line;
    std::int64_t s = 0;

    static region i_zero() { return {kind_t::vertical_line, 0}; }
    static region i_zero_j_le(std::int64_t s) { return {kind_t::vertical_below, s}; }
    static region i_zero_j_ge(std::int64_t s) { return {kind_t::vertical_above, s}; }
    // A_s = C{max(i, j-s) = 0}
    static region a_s(std::int64_t s) { return {kind_t::hook_max, s}; }
    // A'_s = C{min(i, j-s) = 0}
    static region a_prime_s(std::int64_t s) { return {kind_t::hook_min, s}; }

    bool contains(std::int64_t i, std::int64_t j) const {
        switch (kind) {
        case kind_t::vertical_line: return i == 0;
        case kind_t::vertical_below: return i == 0 && j <= s;
        case kind_t::vertical_above: return i == 0 && j >= s;
        case kind_t::hook_max: return std::max(i, j - s) == 0;
        case kind_t::hook_min: return std::min(i, j - s) == 0;
        }
        return false;
    }

    friend bool operator==(const region&, const region&) = default;
};

// One basis element of a subquotient: the translate U^u of a generator.
struct basis_element {
    std::int32_t gen = 0;
    std::int64_t u = 0;

    friend bool operator==(const basis_element&, const basis_element&) = default;
};

// The finite F2 chain complex carried by a catalog region.
class subquotient_complex {
public:
    subquotient_complex(const filtered_complex& parent, const region& r) : region_(r) {
        const auto& gens = parent.generators();
        for (std::int32_t g = 0; g < static_cast<std::int32_t>(gens.size()); ++g) {
            const std::int64_t a = gens[g].alexander;
            std::vector<std::int64_t> translates;
            switch (r.kind) {
            case region::kind_t::vertical_line:
                translates.push_back(0);
                break;
            case region::kind_t::vertical_below:
                if (a <= r.s)
                    translates.push_back(0);
                break;
            case region::kind_t::vertical_above:
                if (a >= r.s)
                    translates.push_back(0);
                break;
            case region::kind_t::hook_max:
                if (a <= r.s)
                    translates.push_back(0);
                if (a - r.s > 0)
                    translates.push_back(a - r.s);
                break;
            case region::kind_t::hook_min:
                if (a >= r.s)
                    translates.push_back(0);
                if (a - r.s < 0)
                    translates.push_back(a - r.s);
                break;
            }
            const std::int64_t bound =
                (a < 0 ? -a : a) + (r.s < 0 ? -r.s : r.s) + 1;
            check_invariant(static_cast<std::int64_t>(translates.size()) <= bound,
                            "translate window bound violated");
            for (std::int64_t u : translates) {
                check_invariant(r.contains(-u, a - u), "translate outside region");
                index_.emplace(key(g, u), static_cast<std::int32_t>(basis_.size()));
                basis_.push_back(basis_element{g, u});
                maslov_.push_back(gens[g].maslov - 2 * u);
            }
        }
        boundary_.resize(basis_.size());
        for (std::size_t col = 0; col < basis_.size(); ++col) {
            const auto [g, u] = basis_[col];
            for (std::int32_t t : parent.out(g)) {
                const std::int64_t tu = u + parent.arrow_shift(g, t);
                if (auto it = index_.find(key(t, tu)); it != index_.end())
                    boundary_[col].push_back(it->second);
            }
            std::sort(boundary_[col].begin(), boundary_[col].end());
            boundary_[col].erase(std::unique(boundary_[col].begin(), boundary_[col].end()),
                                 boundary_[col].end());
        }
        for (std::size_t i = 0; i < basis_.size(); ++i)
            by_maslov_[maslov_[i]].push_back(static_cast<std::int32_t>(i));
        check_boundary_squares_to_zero();
    }

    std::size_t dimension() const { return basis_.size(); }
    const std::vector<basis_element>& basis() const { return basis_; }
    const std::vector<gf2::svec>& boundary_columns() const { return boundary_; }
    std::int64_t maslov(std::size_t idx) const { return maslov_[idx]; }
    const region& get_region() const { return region_; }

    std::pair<std::int64_t, std::int64_t> position(std::size_t idx,
                                                   const filtered_complex& parent) const {
        const auto [g, u] = basis_[idx];
        return {-u, parent.generators()[g].alexander - u};
    }

    std::optional<std::int32_t> index_of(std::int32_t gen, std::int64_t u) const {
        auto it = index_.find(key(gen, u));
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    const std::map<std::int64_t, std::vector<std::int32_t>>& grading_classes() const {
        return by_maslov_;
    }

private:
    static std::uint64_t key(std::int32_t g, std::int64_t u) {
        check_invariant(u >= INT32_MIN && u <= INT32_MAX, "U-power out of range");
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) |
               static_cast<std::uint32_t>(static_cast<std::int32_t>(u));
    }

    void check_boundary_squares_to_zero() const {
        for (std::size_t col = 0; col < basis_.size(); ++col) {
            gf2::svec acc;
            for (std::int32_t mid : boundary_[col])
                acc = gf2::sym_diff(acc, boundary_[mid]);
            check_invariant(acc.empty(), "subquotient boundary^2 != 0");
        }
    }

    region region_;
    std::vector<basis_element> basis_;
    std::vector<std::int64_t> maslov_;
    std::vector<gf2::svec> boundary_;
    std::unordered_map<std::uint64_t, std::int32_t> index_;
    std::map<std::int64_t, std::vector<std::int32_t>> by_maslov_;
};

inline subquotient_complex restrict_to(const filtered_complex& c, const region& r) {
    return subquotient_complex(c, r);
}

struct homology_result {
    std::int64_t dimension = 0;
    // Cycle representatives as sparse vectors of basis indices, one per class.
    std::vector<gf2::svec> representatives;
    // Maslov grading of each representative.
    std::vector<std::int64_t> gradings;
};

// F2 homology by grading-blocked row reduction.  The boundary drops Maslov by
// one, so each grading class reduces independently.
inline homology_result homology(const subquotient_complex& s) {
    homology_result res;
    const auto& classes = s.grading_classes();
    for (const auto& [m, cols] : classes) {
        std::vector<gf2::svec> block;
        block.reserve(cols.size());
        for (std::int32_t c : cols)
            block.push_back(s.boundary_columns()[c]);
        // Kernel combinations in local column coordinates.
        const auto kernel = gf2::kernel_basis(block);
        gf2::column_space span;  // boundaries from grading m+1 plus chosen reps
        if (auto it = classes.find(m + 1); it != classes.end())
            for (std::int32_t c : it->second)
                span.add(s.boundary_columns()[c]);
        for (const auto& comb : kernel) {
            gf2::svec z;
            z.reserve(comb.size());
            for (std::int32_t local : comb)
                z.push_back(cols[local]);
            std::sort(z.begin(), z.end());
            if (span.add(z)) {
                res.representatives.push_back(std::move(z));
                res.gradings.push_back(m);
                ++res.dimension;
            }
        }
    }
    return res;
}

enum class map_kind { inclusion, quotient_composite };

namespace detail {

// The catalog chain maps are partial identities on basis elements: each basis
// element either maps to the same-named translate in the target or to zero.
inline std::vector<std::int32_t> catalog_chain_map(const filtered_complex& c,
                                                   const subquotient_complex& sub,
                                                   const subquotient_complex& tgt,
                                                   map_kind kind) {
    const region from = sub.get_region();
    const region to = tgt.get_region();
    std::vector<std::int32_t> image(sub.dimension(), -1);
    const auto& gens = c.generators();

    if (kind == map_kind::inclusion && from.kind == region::kind_t::vertical_below &&
        to.kind == region::kind_t::vertical_line) {
        for (std::size_t i = 0; i < sub.dimension(); ++i) {
            const auto [g, u] = sub.basis()[i];
            if (auto t = tgt.index_of(g, u))
                image[i] = *t;
        }
        return image;
    }
    if (kind == map_kind::quotient_composite && from.kind == region::kind_t::hook_max &&
        to.kind == region::kind_t::vertical_line) {
        // v_s: project A_s onto C{i=0, j<=s}, then include into C{i=0}.
        for (std::size_t i = 0; i < sub.dimension(); ++i) {
            const auto [g, u] = sub.basis()[i];
            if (u == 0 && gens[g].alexander <= from.s)
                image[i] = *tgt.index_of(g, 0);
        }
        return image;
    }
    if (kind == map_kind::quotient_composite && from.kind == region::kind_t::vertical_line &&
        to.kind == region::kind_t::hook_min) {
        // v'_s: project C{i=0} onto C{i=0, j>=s}, then include into A'_s.
        for (std::size_t i = 0; i < sub.dimension(); ++i) {
            const auto [g, u] = sub.basis()[i];
            if (gens[g].alexander >= to.s)
                image[i] = *tgt.index_of(g, 0);
        }
        return image;
    }
    throw incompatible_regions_error("region pairing not in the catalog");
}

// Does the induced map on homology have a nonzero component in grading m?
inline bool map_nontrivial_on_grading(const subquotient_complex& sub,
                                      const subquotient_complex& tgt,
                                      const std::vector<std::int32_t>& image,
                                      std::int64_t m) {
    const auto& sub_classes = sub.grading_classes();
    auto sit = sub_classes.find(m);
    if (sit == sub_classes.end())
        return false;
    const auto& cols = sit->second;
    std::vector<gf2::svec> block;
    block.reserve(cols.size());
    for (std::int32_t c : cols)
        block.push_back(sub.boundary_columns()[c]);
    const auto kernel = gf2::kernel_basis(block);
    if (kernel.empty())
        return false;
    gf2::column_space boundaries;
    if (auto it = tgt.grading_classes().find(m + 1); it != tgt.grading_classes().end())
        for (std::int32_t c : it->second)
            boundaries.add(tgt.boundary_columns()[c]);
    for (const auto& comb : kernel) {
        gf2::svec fz;
        for (std::int32_t local : comb) {
            const std::int32_t global = cols[local];
            if (image[global] >= 0)
                fz.push_back(image[global]);
        }
        std::sort(fz.begin(), fz.end());
        if (!boundaries.contains(std::move(fz)))
            return true;
    }
    return false;
}

}  // namespace detail

// True iff the catalog map (from, to, kind) induces a nonzero map on homology.
inline bool induced_map_nontrivial(const filtered_complex& c, const region& from,
                                   const region& to, map_kind kind) {
    const subquotient_complex sub(c, from);
    const subquotient_complex tgt(c, to);
    const auto image = detail::catalog_chain_map(c, sub, tgt, kind);
    for (const auto& [m, cols] : sub.grading_classes())
        if (detail::map_nontrivial_on_grading(sub, tgt, image, m))
            return true;
    return false;
}

}  // namespace floerstair
