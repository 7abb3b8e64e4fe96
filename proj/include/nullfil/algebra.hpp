#pragma once

#include <string>

#include "errors.hpp"

namespace nullfil {

// ---------------------------------------------------------------------------
// AlgebraHandle: selects one of the two algebras everything else works in.
//
//   FiniteNull(n):  basis e_1..e_n with e_i e_1 = e_{i+1} for i < n and all
//                   other products zero.
//   InfiniteNull:   basis e_1, e_2, ... with e_i e_1 = e_{i+1} for all i.
// ---------------------------------------------------------------------------
class AlgebraHandle {
public:
    static AlgebraHandle finite(unsigned n) {
        if (n == 0) throw error("bad_dimension", "dimension must be at least 1");
        return AlgebraHandle(n);
    }

    static AlgebraHandle infinite() { return AlgebraHandle(0); }

    bool is_finite() const { return n_ != 0; }
    unsigned dim() const {
        if (!is_finite()) throw error("infinite_algebra", "infinite-dimensional algebra has no dim");
        return n_;
    }

    // True when basis index i is present (always, for the infinite algebra).
    bool in_range(unsigned i) const { return i >= 1 && (!is_finite() || i <= n_); }

    bool operator==(const AlgebraHandle& o) const { return n_ == o.n_; }
    bool operator!=(const AlgebraHandle& o) const { return n_ != o.n_; }

    std::string str() const { return is_finite() ? "L_" + std::to_string(n_) : "L_inf"; }

private:
    explicit AlgebraHandle(unsigned n) : n_(n) {}
    unsigned n_;  // 0 encodes the infinite algebra
};

}  // namespace nullfil
