#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "polynomial.hpp"
#include "scalar.hpp"
#include "term.hpp"

namespace nullfil {

// ---------------------------------------------------------------------------
// left_norm: rewrite an arbitrary free polynomial into a combination of
// left-normed words using the derivation rule
//
//     a(bc) -> (ab)c - (ac)b
//
// applied left-to-right. Each application strictly decreases the multiset of
// right-subtree sizes, so the recursion terminates; rule_steps (optional)
// reports the number of rule applications.
// ---------------------------------------------------------------------------
namespace detail {

template <RingScalar S>
LNPolynomial<S> left_norm_term(const Term& t, const S& unit, std::size_t* rule_steps) {
    if (t.is_leaf()) return LNPolynomial<S>::monomial(LeftNormedWord::single(t.var()), unit);
    Term a = t.left(), b = t.right();
    if (b.is_leaf()) {
        LNPolynomial<S> inner = left_norm_term(a, unit, rule_steps);
        LNPolynomial<S> out;
        for (const auto& [w, c] : inner.words()) out.add_word(w.appended(b.var()), c);
        return out;
    }
    if (rule_steps) ++*rule_steps;
    Term b1 = b.left(), b2 = b.right();
    return left_norm_term(Term::node(Term::node(a, b1), b2), unit, rule_steps) -
           left_norm_term(Term::node(Term::node(a, b2), b1), unit, rule_steps);
}

}  // namespace detail

template <RingScalar S>
LNPolynomial<S> left_norm(const FreePolynomial<S>& f, std::size_t* rule_steps = nullptr) {
    if (rule_steps) *rule_steps = 0;
    LNPolynomial<S> out;
    for (const auto& [t, c] : f.terms())
        out = out + detail::left_norm_term(t, c.one(), rule_steps).scaled(c);
    return out;
}

// ---------------------------------------------------------------------------
// NormalFormPoly: the canonical residue of a polynomial modulo the identity
// ideal of the chosen algebra. Every stored word is canonical:
//
//   FiniteNull(n):  length 1; or length 2..n-1 with arbitrary head and
//                   nondecreasing tail; or length exactly n fully sorted.
//                   Words longer than n vanish.
//   InfiniteNull:   any length, arbitrary head, nondecreasing tail.
//
// When the source polynomial is multihomogeneous the multidegree is kept so
// the head coefficients of the canonical form can be read off.
// ---------------------------------------------------------------------------
template <RingScalar S>
class NormalFormPoly {
public:
    NormalFormPoly(AlgebraHandle alg, LNPolynomial<S> words, std::optional<MultiDegree> mdeg)
        : alg_(alg), words_(std::move(words)), multidegree_(std::move(mdeg)) {}

    AlgebraHandle algebra() const { return alg_; }
    const LNPolynomial<S>& poly() const { return words_; }
    const std::map<LeftNormedWord, S>& words() const { return words_.words(); }
    bool is_zero() const { return words_.is_zero(); }
    const std::optional<MultiDegree>& multidegree() const { return multidegree_; }

    FreePolynomial<S> lift() const { return words_.lift(); }
    std::string str() const { return words_.str(); }

    bool operator==(const NormalFormPoly& o) const { return alg_ == o.alg_ && words_ == o.words_; }

private:
    AlgebraHandle alg_;
    LNPolynomial<S> words_;
    std::optional<MultiDegree> multidegree_;
};

namespace detail {

inline LeftNormedWord canonical_word(const LeftNormedWord& w, AlgebraHandle alg) {
    std::vector<VarIndex> letters = w.letters();
    if (alg.is_finite() && letters.size() == alg.dim()) {
        std::sort(letters.begin(), letters.end());
    } else if (letters.size() >= 2) {
        std::sort(letters.begin() + 1, letters.end());
    }
    return LeftNormedWord(std::move(letters));
}

}  // namespace detail

template <RingScalar S>
NormalFormPoly<S> normal_form(const LNPolynomial<S>& f, AlgebraHandle alg) {
    std::optional<MultiDegree> mdeg;
    bool homogeneous = true;
    LNPolynomial<S> out;
    for (const auto& [w, c] : f.words()) {
        if (homogeneous) {
            MultiDegree d = w.multidegree();
            if (!mdeg)
                mdeg = d;
            else if (!(*mdeg == d))
                homogeneous = false;
        }
        if (alg.is_finite() && w.length() > alg.dim()) continue;
        out.add_word(detail::canonical_word(w, alg), c);
    }
    if (!homogeneous) mdeg.reset();
    return NormalFormPoly<S>(alg, std::move(out), std::move(mdeg));
}

template <RingScalar S>
NormalFormPoly<S> normal_form(const FreePolynomial<S>& f, AlgebraHandle alg) {
    return normal_form(left_norm(f), alg);
}

// ---------------------------------------------------------------------------
// Head coefficients of a multihomogeneous canonical form: the coefficients
// alpha_j of the canonical words with head x_j. For multilinear input these
// are the gamma_j, and their sum is gamma.
//
// When the total degree equals n on FiniteNull(n) all the mass sits on the
// single fully sorted word; its coefficient is reported on the
// smallest-index variable and the remaining alphas are zero.
// ---------------------------------------------------------------------------
template <RingScalar S>
struct HeadCoefficients {
    MultiDegree multidegree;
    unsigned total_degree = 0;
    std::map<VarIndex, S> alpha;          // one entry per variable of the multidegree
    S alpha_sum;
    std::vector<VarIndex> linear_variables;  // { j : d_j = 1 }
    bool multilinear = false;

    const S& alpha_of(VarIndex j) const {
        auto it = alpha.find(j);
        if (it == alpha.end()) throw error("bad_variable", "x" + std::to_string(j) + " not in the multidegree");
        return it->second;
    }
};

template <RingScalar S>
HeadCoefficients<S> head_coefficients(const NormalFormPoly<S>& nf) {
    if (nf.is_zero())
        throw error("zero_polynomial", "head coefficients of the zero normal form are undefined");
    if (!nf.multidegree())
        throw error("not_multihomogeneous", "head coefficients need a multihomogeneous polynomial");

    const MultiDegree& mdeg = *nf.multidegree();
    const unsigned d = mdeg.total();
    AlgebraHandle alg = nf.algebra();
    if (alg.is_finite() && d > alg.dim())
        throw error("degree_exceeds_dimension",
                    "degree " + std::to_string(d) + " exceeds n = " + std::to_string(alg.dim()));

    const S zero = nf.words().begin()->second.zero();

    HeadCoefficients<S> out{mdeg, d, {}, zero, {}, mdeg.is_multilinear()};
    for (const auto& [k, m] : mdeg.entries())
        if (m == 1) out.linear_variables.push_back(k);

    // Sorted letter multiset of the multidegree.
    std::vector<VarIndex> sorted;
    sorted.reserve(d);
    for (const auto& [k, m] : mdeg.entries()) sorted.insert(sorted.end(), m, k);

    auto coeff_of = [&](const LeftNormedWord& w) -> S {
        auto it = nf.words().find(w);
        return it == nf.words().end() ? zero : it->second;
    };

    if (alg.is_finite() && d == alg.dim()) {
        LeftNormedWord full(sorted);
        bool first = true;
        for (const auto& [k, m] : mdeg.entries()) {
            out.alpha.emplace(k, first ? coeff_of(full) : zero);
            first = false;
        }
    } else {
        for (const auto& [k, m] : mdeg.entries()) {
            std::vector<VarIndex> letters;
            letters.reserve(d);
            letters.push_back(k);
            bool skipped = false;
            for (VarIndex v : sorted) {
                if (!skipped && v == k) {
                    skipped = true;
                    continue;
                }
                letters.push_back(v);
            }
            out.alpha.emplace(k, coeff_of(LeftNormedWord(std::move(letters))));
        }
    }

    for (const auto& [k, a] : out.alpha) out.alpha_sum = out.alpha_sum + a;
    return out;
}

// ---------------------------------------------------------------------------
// Identity test by canonical rewriting. Only meaningful over the rationals
// (an infinite field); inhomogeneous input is decided by splitting into
// multihomogeneous components, all of which must vanish.
// ---------------------------------------------------------------------------
inline bool is_identity(const FreePolynomial<Rational>& f, AlgebraHandle alg) {
    if (f.is_zero()) return true;
    for (const auto& [mdeg, component] : split_multihomogeneous(f))
        if (!normal_form(component, alg).is_zero()) return false;
    return true;
}

}  // namespace nullfil
