#pragma once

#include <map>
#include <string>

#include "scalar.hpp"
#include "term.hpp"

namespace nullfil {

// Indeterminate t_{var,slot}: the generic coefficient of e_slot in the value
// substituted for x_var.
struct Indet {
    VarIndex var;
    unsigned slot;

    bool operator==(const Indet&) const = default;
    bool operator<(const Indet& o) const { return var != o.var ? var < o.var : slot < o.slot; }

    std::string str() const { return "t" + std::to_string(var) + "_" + std::to_string(slot); }
};

// ---------------------------------------------------------------------------
// CommPoly: sparse commutative polynomial over the rationals in the
// indeterminates t_{k,i}. Only ring operations and zero testing are needed;
// no division ever happens here.
//
// CommPoly satisfies RingScalar, so elements of L_n with CommPoly
// coefficients can be multiplied and evaluated with the ordinary model
// operations; that is exactly how generic evaluation works.
// ---------------------------------------------------------------------------
class CommPoly {
public:
    using Monomial = std::map<Indet, unsigned>;  // exponents >= 1

    CommPoly() = default;  // zero

    static CommPoly constant(const Rational& c) {
        CommPoly p;
        if (!c.is_zero()) p.terms_.emplace(Monomial{}, c);
        return p;
    }

    static CommPoly indeterminate(Indet t) {
        CommPoly p;
        p.terms_.emplace(Monomial{{t, 1}}, Rational(1));
        return p;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second.is_one();
    }
    bool is_negative() const { return false; }

    CommPoly zero() const { return CommPoly(); }
    CommPoly one() const { return constant(Rational(1)); }

    CommPoly operator+(const CommPoly& o) const {
        CommPoly out = *this;
        for (const auto& [m, c] : o.terms_) out.add(m, c);
        return out;
    }

    CommPoly operator-(const CommPoly& o) const {
        CommPoly out = *this;
        for (const auto& [m, c] : o.terms_) out.add(m, -c);
        return out;
    }

    CommPoly operator-() const {
        CommPoly out;
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    CommPoly operator*(const CommPoly& o) const {
        CommPoly out;
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m = ma;
                for (const auto& [t, e] : mb) m[t] += e;
                out.add(m, ca * cb);
            }
        }
        return out;
    }

    bool operator==(const CommPoly& o) const { return terms_ == o.terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational mag = c.is_negative() ? -c : c;
            if (first) {
                if (c.is_negative()) out += "-";
                first = false;
            } else {
                out += c.is_negative() ? " - " : " + ";
            }
            std::string mono;
            for (const auto& [t, e] : m) {
                if (!mono.empty()) mono += "*";
                mono += t.str();
                if (e > 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty()) {
                out += mag.str();
            } else {
                if (!mag.is_one()) out += mag.str() + "*";
                out += mono;
            }
        }
        return out;
    }

private:
    void add(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::map<Monomial, Rational> terms_;
};

}  // namespace nullfil
