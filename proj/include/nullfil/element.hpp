#pragma once

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
// Element: a member of L_n or L_inf over coefficient ring R.
//
// FiniteNull(n) elements hold a dense length-n coefficient vector over
// e_1..e_n; InfiniteNull elements hold a finite sparse table (products shift
// support by one index, so finite support is preserved).
//
// Because scalars carry their own domain (an Fp value knows its modulus),
// every element keeps a zero scalar of its domain to report absent
// coefficients and to seed accumulations.
// ---------------------------------------------------------------------------
template <RingScalar R>
class Element {
public:
    static Element zero(AlgebraHandle alg, const R& zero_scalar) {
        Element e(alg, zero_scalar.zero());
        if (alg.is_finite()) e.dense_.assign(alg.dim(), e.zero_);
        return e;
    }

    static Element basis(AlgebraHandle alg, unsigned i, const R& one_scalar) {
        Element e = zero(alg, one_scalar.zero());
        e.set(i, one_scalar.one());
        return e;
    }

    AlgebraHandle algebra() const { return alg_; }

    // Coefficient of e_i; returns the domain zero outside the support.
    const R& coeff(unsigned i) const {
        if (alg_.is_finite()) {
            if (i < 1 || i > alg_.dim()) return zero_;
            return dense_[i - 1];
        }
        auto it = sparse_.find(i);
        return it == sparse_.end() ? zero_ : it->second;
    }

    void set(unsigned i, const R& v) {
        if (!alg_.in_range(i))
            throw error("bad_basis_index", "basis index " + std::to_string(i) + " outside " + alg_.str());
        if (alg_.is_finite()) {
            dense_[i - 1] = v;
            return;
        }
        if (v.is_zero())
            sparse_.erase(i);
        else
            sparse_.insert_or_assign(i, v);
    }

    void add_to(unsigned i, const R& v) { set(i, coeff(i) + v); }

    bool is_zero() const {
        if (alg_.is_finite()) {
            for (const R& c : dense_)
                if (!c.is_zero()) return false;
            return true;
        }
        return sparse_.empty();
    }

    std::vector<unsigned> support() const {
        std::vector<unsigned> out;
        if (alg_.is_finite()) {
            for (unsigned i = 1; i <= alg_.dim(); ++i)
                if (!dense_[i - 1].is_zero()) out.push_back(i);
        } else {
            for (const auto& [i, c] : sparse_) out.push_back(i);
        }
        return out;
    }

    std::optional<unsigned> min_support() const {
        auto s = support();
        if (s.empty()) return std::nullopt;
        return s.front();
    }

    std::optional<unsigned> max_support() const {
        auto s = support();
        if (s.empty()) return std::nullopt;
        return s.back();
    }

    Element operator+(const Element& o) const {
        require_same(o);
        Element out = *this;
        for (unsigned i : o.support()) out.add_to(i, o.coeff(i));
        return out;
    }

    Element operator-(const Element& o) const {
        require_same(o);
        Element out = *this;
        for (unsigned i : o.support()) out.add_to(i, -o.coeff(i));
        return out;
    }

    Element scaled(const R& s) const {
        Element out = zero(alg_, zero_);
        if (s.is_zero()) return out;
        for (unsigned i : support()) out.set(i, coeff(i) * s);
        return out;
    }

    bool operator==(const Element& o) const {
        if (alg_ != o.alg_) return false;
        auto sa = support(), sb = o.support();
        if (sa != sb) return false;
        for (unsigned i : sa)
            if (!(coeff(i) == o.coeff(i))) return false;
        return true;
    }

    const R& zero_scalar() const { return zero_; }

    // Text form "a1*e1 + a3*e3" with zero terms omitted.
    std::string str() const {
        auto s = support();
        if (s.empty()) return "0";
        std::string out;
        bool first = true;
        for (unsigned i : s) {
            const R& c = coeff(i);
            R mag = c.is_negative() ? -c : c;
            if (first) {
                if (c.is_negative()) out += "-";
                first = false;
            } else {
                out += c.is_negative() ? " - " : " + ";
            }
            if (!mag.is_one()) out += mag.str() + "*";
            out += "e" + std::to_string(i);
        }
        return out;
    }

private:
    Element(AlgebraHandle alg, R zero_scalar) : alg_(alg), zero_(std::move(zero_scalar)) {}

    void require_same(const Element& o) const {
        if (alg_ != o.alg_)
            throw error("algebra_mismatch", "elements of " + alg_.str() + " and " + o.alg_.str());
    }

    AlgebraHandle alg_;
    R zero_;
    std::vector<R> dense_;          // finite case
    std::map<unsigned, R> sparse_;  // infinite case, no stored zeros
};

// ---------------------------------------------------------------------------
// Multiplication from the defining table: (sum a_i e_i)(sum b_j e_j) equals
// b_1 * sum_i a_i e_{i+1}, with e_{n+1} truncated to zero on FiniteNull(n).
// ---------------------------------------------------------------------------
template <RingScalar R>
Element<R> mul(const Element<R>& a, const Element<R>& b) {
    if (a.algebra() != b.algebra())
        throw error("algebra_mismatch", "product of elements of different algebras");
    Element<R> out = Element<R>::zero(a.algebra(), a.zero_scalar());
    const R& b1 = b.coeff(1);
    if (b1.is_zero()) return out;
    for (unsigned i : a.support()) {
        if (a.algebra().is_finite() && i + 1 > a.algebra().dim()) continue;
        out.set(i + 1, a.coeff(i) * b1);
    }
    return out;
}

// s-fold right multiplication z w^(s) = ((z w) w) ... w.
template <RingScalar R>
Element<R> right_power(const Element<R>& z, const Element<R>& w, unsigned s) {
    if (s < 1) throw error("bad_exponent", "right power needs s >= 1");
    Element<R> acc = z;
    for (unsigned i = 0; i < s; ++i) acc = mul(acc, w);
    return acc;
}

// ---------------------------------------------------------------------------
// Evaluation of free polynomials on elements. Structural recursion on the
// monomial trees; this is the independent semantic reference and never
// consults the rewriting machinery.
// ---------------------------------------------------------------------------
template <RingScalar R>
Element<R> evaluate_term(const Term& t, const std::map<VarIndex, Element<R>>& assignment) {
    if (t.is_leaf()) {
        auto it = assignment.find(t.var());
        if (it == assignment.end())
            throw error("unassigned_variable", "no value for x" + std::to_string(t.var()));
        return it->second;
    }
    return mul(evaluate_term(t.left(), assignment), evaluate_term(t.right(), assignment));
}

template <RingScalar R>
Element<R> evaluate(const FreePolynomial<R>& f, const std::map<VarIndex, Element<R>>& assignment) {
    if (assignment.empty())
        throw error(f.is_zero() ? "empty_assignment" : "unassigned_variable",
                    "evaluation needs at least one assigned variable");
    AlgebraHandle alg = assignment.begin()->second.algebra();
    for (const auto& [k, e] : assignment)
        if (e.algebra() != alg) throw error("algebra_mismatch", "assignment mixes algebras");
    Element<R> acc = Element<R>::zero(assignment.begin()->second.algebra(),
                                      assignment.begin()->second.zero_scalar());
    for (const auto& [t, c] : f.terms()) acc = acc + evaluate_term(t, assignment).scaled(c);
    return acc;
}

// ---------------------------------------------------------------------------
// Power ideals L^k of the lower central series, realized as span{e_k, ...}.
// ---------------------------------------------------------------------------
struct SubspaceDescriptor {
    AlgebraHandle algebra;
    unsigned k;  // FullPower(k) = span{e_k, e_{k+1}, ...}
};

inline SubspaceDescriptor power_ideal(AlgebraHandle alg, unsigned k) {
    if (k < 1) throw error("bad_index", "power ideal index must be at least 1");
    return SubspaceDescriptor{alg, k};
}

template <RingScalar R>
bool contains(const SubspaceDescriptor& sd, const Element<R>& u) {
    if (sd.algebra != u.algebra())
        throw error("algebra_mismatch", "membership query against a different algebra");
    auto lo = u.min_support();
    return !lo || *lo >= sd.k;
}

// dim span{e_k,...,e_n} = n + 1 - k, zero when k exceeds n.
inline unsigned subspace_dim(const SubspaceDescriptor& sd) {
    unsigned n = sd.algebra.dim();
    return sd.k > n ? 0 : n + 1 - sd.k;
}

}  // namespace nullfil
