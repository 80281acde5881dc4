#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "floerstair/errors.hpp"

namespace floerstair::gf2 {

// A vector over F2 as a strictly increasing list of set indices.
using svec = std::vector<std::int32_t>;

inline svec sym_diff(const svec& a, const svec& b) {
    svec r;
    r.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(r));
    return r;
}

inline std::int32_t low(const svec& v) { return v.empty() ? -1 : v.back(); }

// A reduced column space with pivot-indexed columns, supporting incremental
// rank growth and membership tests.
class column_space {
public:
    // Reduce v against the stored basis; v becomes the residue.
    void reduce_inplace(svec& v) const {
        while (!v.empty()) {
            auto it = by_low_.find(v.back());
            if (it == by_low_.end())
                return;
            v = sym_diff(v, it->second);
        }
    }

    bool contains(svec v) const {
        reduce_inplace(v);
        return v.empty();
    }

    // Returns true if v was independent (rank grew).
    bool add(svec v) {
        reduce_inplace(v);
        if (v.empty())
            return false;
        const std::int32_t piv = v.back();
        by_low_.emplace(piv, std::move(v));
        return true;
    }

    std::size_t rank() const { return by_low_.size(); }

private:
    std::map<std::int32_t, svec> by_low_;
};

// Kernel of the linear map whose j-th column is cols[j], expressed in column
// coordinates (each kernel vector is a set of column indices).
inline std::vector<svec> kernel_basis(const std::vector<svec>& cols) {
    std::vector<svec> kernel;
    std::map<std::int32_t, std::pair<svec, svec>> by_low;  // pivot -> (column, combination)
    for (std::int32_t j = 0; j < static_cast<std::int32_t>(cols.size()); ++j) {
        svec col = cols[j];
        svec comb = {j};
        while (!col.empty()) {
            auto it = by_low.find(col.back());
            if (it == by_low.end())
                break;
            col = sym_diff(col, it->second.first);
            comb = sym_diff(comb, it->second.second);
        }
        if (col.empty()) {
            kernel.push_back(std::move(comb));
        } else {
            const std::int32_t piv = low(col);
            by_low.emplace(piv, std::make_pair(std::move(col), std::move(comb)));
        }
    }
    return kernel;
}

inline std::size_t rank(const std::vector<svec>& cols) {
    column_space cs;
    for (const auto& c : cols)
        cs.add(c);
    return cs.rank();
}

}  // namespace floerstair::gf2
