#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scalar.hpp"
#include "term.hpp"

namespace nullfil {

namespace detail {

// Shared coefficient-table plumbing: no stored coefficient is ever zero,
// the empty table is the zero polynomial.
template <class Key, RingScalar S>
void add_entry(std::map<Key, S>& table, const Key& key, const S& c) {
    if (c.is_zero()) return;
    auto it = table.find(key);
    if (it == table.end()) {
        table.emplace(key, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) table.erase(it);
}

// Prints a factor sequence with runs of equal factors grouped under the
// right-power shorthand, e.g. "x1 x3^2".
inline std::string format_run_grouped(const std::vector<std::string>& factors) {
    std::string out;
    std::size_t i = 0;
    while (i < factors.size()) {
        std::size_t j = i;
        while (j < factors.size() && factors[j] == factors[i]) ++j;
        if (!out.empty()) out += " ";
        out += factors[i];
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

inline std::string format_term(const Term& t);

inline std::string format_factor(const Term& t) {
    if (t.is_leaf()) return "x" + std::to_string(t.var());
    return "(" + format_term(t) + ")";
}

inline std::string format_term(const Term& t) {
    // Flatten the left spine into a factor sequence.
    std::vector<Term> spine;
    Term cur = t;
    while (!cur.is_leaf()) {
        spine.push_back(cur.right());
        cur = cur.left();
    }
    spine.push_back(cur);
    std::vector<std::string> factors;
    factors.reserve(spine.size());
    for (auto it = spine.rbegin(); it != spine.rend(); ++it) factors.push_back(format_factor(*it));
    return format_run_grouped(factors);
}

inline std::string format_word(const LeftNormedWord& w) {
    std::vector<std::string> factors;
    factors.reserve(w.length());
    for (VarIndex k : w.letters()) factors.push_back("x" + std::to_string(k));
    return format_run_grouped(factors);
}

// Renders a sorted coefficient table as "t1 - 1/2 t2 + ...". Unit
// coefficients are omitted; the sign is pulled out for signed scalars.
template <class Key, RingScalar S, class FormatKey>
std::string format_table(const std::map<Key, S>& table, FormatKey&& fmt) {
    if (table.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : table) {
        S mag = c.is_negative() ? -c : c;
        if (first) {
            if (c.is_negative()) out += "-";
            first = false;
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        if (!mag.is_one()) out += mag.str() + " ";
        out += fmt(key);
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FreePolynomial: a finite coefficient table over free terms, i.e. an
// element of the free nonassociative algebra over the chosen scalars.
// ---------------------------------------------------------------------------
template <RingScalar S>
class FreePolynomial {
public:
    FreePolynomial() = default;  // zero

    static FreePolynomial monomial(const Term& t, const S& c) {
        FreePolynomial p;
        detail::add_entry(p.terms_, t, c);
        return p;
    }

    static FreePolynomial variable(VarIndex k, const S& one) {
        return monomial(Term::leaf(k), one);
    }

    void add_term(const Term& t, const S& c) { detail::add_entry(terms_, t, c); }

    const std::map<Term, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    FreePolynomial operator+(const FreePolynomial& o) const {
        FreePolynomial out = *this;
        for (const auto& [t, c] : o.terms_) detail::add_entry(out.terms_, t, c);
        return out;
    }

    FreePolynomial operator-(const FreePolynomial& o) const {
        FreePolynomial out = *this;
        for (const auto& [t, c] : o.terms_) detail::add_entry(out.terms_, t, -c);
        return out;
    }

    FreePolynomial operator-() const {
        FreePolynomial out;
        for (const auto& [t, c] : terms_) out.terms_.emplace(t, -c);
        return out;
    }

    FreePolynomial scaled(const S& s) const {
        FreePolynomial out;
        if (s.is_zero()) return out;
        for (const auto& [t, c] : terms_) detail::add_entry(out.terms_, t, c * s);
        return out;
    }

    // Free product: monomial trees are joined under a new node; the result
    // of a product of monomials is generally not left-normed.
    FreePolynomial operator*(const FreePolynomial& o) const {
        FreePolynomial out;
        for (const auto& [a, ca] : terms_)
            for (const auto& [b, cb] : o.terms_) detail::add_entry(out.terms_, Term::node(a, b), ca * cb);
        return out;
    }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [t, c] : terms_)
            if (t.degree() > d) d = t.degree();
        return d;
    }

    std::vector<VarIndex> variables() const {
        std::map<VarIndex, unsigned> mult;
        for (const auto& [t, c] : terms_) t.collect_variables(mult);
        std::vector<VarIndex> out;
        out.reserve(mult.size());
        for (const auto& [k, m] : mult) out.push_back(k);
        return out;
    }

    bool operator==(const FreePolynomial& o) const { return terms_ == o.terms_; }

    std::string str() const {
        return detail::format_table(terms_, [](const Term& t) { return detail::format_term(t); });
    }

private:
    std::map<Term, S> terms_;
};

// ---------------------------------------------------------------------------
// LNPolynomial: a coefficient table over left-normed words.
// ---------------------------------------------------------------------------
template <RingScalar S>
class LNPolynomial {
public:
    LNPolynomial() = default;

    static LNPolynomial monomial(const LeftNormedWord& w, const S& c) {
        LNPolynomial p;
        detail::add_entry(p.words_, w, c);
        return p;
    }

    void add_word(const LeftNormedWord& w, const S& c) { detail::add_entry(words_, w, c); }

    const std::map<LeftNormedWord, S>& words() const { return words_; }
    bool is_zero() const { return words_.empty(); }
    std::size_t term_count() const { return words_.size(); }

    LNPolynomial operator+(const LNPolynomial& o) const {
        LNPolynomial out = *this;
        for (const auto& [w, c] : o.words_) detail::add_entry(out.words_, w, c);
        return out;
    }

    LNPolynomial operator-(const LNPolynomial& o) const {
        LNPolynomial out = *this;
        for (const auto& [w, c] : o.words_) detail::add_entry(out.words_, w, -c);
        return out;
    }

    LNPolynomial scaled(const S& s) const {
        LNPolynomial out;
        if (s.is_zero()) return out;
        for (const auto& [w, c] : words_) detail::add_entry(out.words_, w, c * s);
        return out;
    }

    // Re-reads the words as free polynomial monomials (left-combed trees).
    FreePolynomial<S> lift() const {
        FreePolynomial<S> out;
        for (const auto& [w, c] : words_) out.add_term(w.to_term(), c);
        return out;
    }

    bool operator==(const LNPolynomial& o) const { return words_ == o.words_; }

    std::string str() const {
        return detail::format_table(words_, [](const LeftNormedWord& w) { return detail::format_word(w); });
    }

private:
    std::map<LeftNormedWord, S> words_;
};

// ---------------------------------------------------------------------------
// Multidegree inspection and multihomogeneous decomposition.
// ---------------------------------------------------------------------------

// Common multidegree of all monomials, or nullopt when the polynomial is
// not multihomogeneous. The zero polynomial has no multidegree.
template <RingScalar S>
std::optional<MultiDegree> multidegree_of(const FreePolynomial<S>& f) {
    if (f.is_zero()) throw error("zero_polynomial", "the zero polynomial has no multidegree");
    std::optional<MultiDegree> common;
    for (const auto& [t, c] : f.terms()) {
        MultiDegree d = MultiDegree::of_term(t);
        if (!common) {
            common = d;
        } else if (!(*common == d)) {
            return std::nullopt;
        }
    }
    return common;
}

template <RingScalar S>
std::map<MultiDegree, FreePolynomial<S>> split_multihomogeneous(const FreePolynomial<S>& f) {
    std::map<MultiDegree, FreePolynomial<S>> out;
    for (const auto& [t, c] : f.terms()) out[MultiDegree::of_term(t)].add_term(t, c);
    return out;
}

// Substitution x_k -> images[k]; the endomorphism of the free algebra
// induced by the map on variables. Variables without an image are an error.
template <RingScalar S>
FreePolynomial<S> substitute(const Term& t, const std::map<VarIndex, FreePolynomial<S>>& images) {
    if (t.is_leaf()) {
        auto it = images.find(t.var());
        if (it == images.end())
            throw error("unassigned_variable", "no substitution for x" + std::to_string(t.var()));
        return it->second;
    }
    return substitute(t.left(), images) * substitute(t.right(), images);
}

template <RingScalar S>
FreePolynomial<S> substitute(const FreePolynomial<S>& f,
                             const std::map<VarIndex, FreePolynomial<S>>& images) {
    FreePolynomial<S> out;
    for (const auto& [t, c] : f.terms()) out = out + substitute(t, images).scaled(c);
    return out;
}

}  // namespace nullfil
