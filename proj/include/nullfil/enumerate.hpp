#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "algebra.hpp"
#include "scalar.hpp"
#include "term.hpp"

namespace nullfil {

// ---------------------------------------------------------------------------
// BasisCatalog: the canonical left-normed words that form a linear basis of
// the relatively free algebra of L_n in m variables, grouped by total
// degree. The degree-0 unit is counted by the dimension formula but is not a
// word; includes_unit records that convention.
//
// Enumeration order is degree-major, then lexicographic on (head, tail), so
// output is deterministic.
// ---------------------------------------------------------------------------
struct BasisCatalog {
    unsigned n = 0;
    unsigned m = 0;
    std::map<unsigned, std::vector<LeftNormedWord>> by_degree;
    bool includes_unit = true;

    std::size_t word_count() const {
        std::size_t c = 0;
        for (const auto& [s, words] : by_degree) c += words.size();
        return c;
    }

    std::size_t total() const { return word_count() + (includes_unit ? 1 : 0); }
};

namespace detail {

// Advances a nondecreasing sequence over {1..m} to its lexicographic
// successor; returns false after the last one (all entries m).
inline bool next_nondecreasing(std::vector<VarIndex>& seq, unsigned m) {
    for (std::size_t i = seq.size(); i-- > 0;) {
        if (seq[i] < m) {
            VarIndex v = seq[i] + 1;
            for (std::size_t j = i; j < seq.size(); ++j) seq[j] = v;
            return true;
        }
    }
    return false;
}

inline std::vector<std::vector<VarIndex>> nondecreasing_sequences(unsigned length, unsigned m) {
    std::vector<std::vector<VarIndex>> out;
    std::vector<VarIndex> seq(length, 1);
    do {
        out.push_back(seq);
    } while (next_nondecreasing(seq, m));
    return out;
}

}  // namespace detail

inline BasisCatalog basis_monomials(unsigned n, unsigned m) {
    if (n < 1 || m < 1) throw error("bad_argument", "basis enumeration needs n >= 1 and m >= 1");
    BasisCatalog cat;
    cat.n = n;
    cat.m = m;

    std::vector<LeftNormedWord> deg1;
    deg1.reserve(m);
    for (VarIndex k = 1; k <= m; ++k) deg1.push_back(LeftNormedWord::single(k));
    cat.by_degree.emplace(1, std::move(deg1));

    // Degrees 2..n-1: arbitrary head, nondecreasing tail.
    for (unsigned s = 2; s + 1 <= n; ++s) {
        std::vector<LeftNormedWord> words;
        for (VarIndex head = 1; head <= m; ++head) {
            for (const auto& tail : detail::nondecreasing_sequences(s - 1, m)) {
                std::vector<VarIndex> letters;
                letters.reserve(s);
                letters.push_back(head);
                letters.insert(letters.end(), tail.begin(), tail.end());
                words.push_back(LeftNormedWord(std::move(letters)));
            }
        }
        cat.by_degree.emplace(s, std::move(words));
    }

    // Degree n: one fully sorted word per multidegree summing to n.
    if (n >= 2) {
        std::vector<LeftNormedWord> words;
        for (auto& seq : detail::nondecreasing_sequences(n, m)) words.push_back(LeftNormedWord(std::move(seq)));
        cat.by_degree.emplace(n, std::move(words));
    }
    return cat;
}

inline BigInt binomial(unsigned a, unsigned b) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt out = 1;
    for (unsigned i = 1; i <= b; ++i) {
        out *= a - b + i;
        out /= i;
    }
    return out;
}

// Dimension of the relatively free algebra of L_n in m variables:
//
//   1 + C(n+m-1, m-1) + sum_{s=1}^{n-1} sum_{l=1}^{min(m,s)} l C(m,l) C(s-1, l-1)
//
inline BigInt dim_relatively_free(unsigned n, unsigned m) {
    if (n < 1 || m < 1) throw error("bad_argument", "dimension formula needs n >= 1 and m >= 1");
    BigInt total = 1 + binomial(n + m - 1, m - 1);
    for (unsigned s = 1; s + 1 <= n; ++s) {
        unsigned lmax = std::min(m, s);
        for (unsigned l = 1; l <= lmax; ++l) total += BigInt(l) * binomial(m, l) * binomial(s - 1, l - 1);
    }
    return total;
}

// The multilinear canonical words of degree m: for m >= 2 these are
// x_j x_1 ... (x_j omitted) ... x_m, one per head j; for m = 1 just x_1.
// On FiniteNull(n) degree-n words collapse to the single sorted word and
// longer words vanish.
inline std::vector<LeftNormedWord> multilinear_canonical_words(AlgebraHandle alg, unsigned m) {
    if (m < 1) throw error("bad_argument", "need m >= 1");
    std::vector<LeftNormedWord> out;
    if (alg.is_finite()) {
        unsigned n = alg.dim();
        if (m > n) return out;
        if (m == n) {
            std::vector<VarIndex> all;
            for (VarIndex k = 1; k <= m; ++k) all.push_back(k);
            out.push_back(LeftNormedWord(std::move(all)));
            return out;
        }
    }
    if (m == 1) {
        out.push_back(LeftNormedWord::single(1));
        return out;
    }
    for (VarIndex head = 1; head <= m; ++head) {
        std::vector<VarIndex> letters{head};
        for (VarIndex k = 1; k <= m; ++k)
            if (k != head) letters.push_back(k);
        out.push_back(LeftNormedWord(std::move(letters)));
    }
    return out;
}

// Multilinear codimension c_m: the number of multilinear canonical words.
inline unsigned multilinear_codim(AlgebraHandle alg, unsigned m) {
    if (m < 1) throw error("bad_argument", "need m >= 1");
    if (!alg.is_finite()) return m;
    unsigned n = alg.dim();
    if (m + 1 <= n) return m;
    if (m == n) return 1;
    return 0;
}

}  // namespace nullfil
