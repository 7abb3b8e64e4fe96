#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace nullfil {

// Variables are indexed, not named: k stands for x_k, k >= 1.
using VarIndex = unsigned;

// ---------------------------------------------------------------------------
// Term: a monomial of the free nonassociative algebra, i.e. a full binary
// tree with variables at the leaves. Terms are immutable and share subtree
// structure, so copies are cheap and thread-safe to read.
// ---------------------------------------------------------------------------
class Term {
public:
    static Term leaf(VarIndex k) {
        if (k == 0) throw error("bad_variable", "variable index must be at least 1");
        auto rep = std::make_shared<Rep>();
        rep->var = k;
        rep->degree = 1;
        return Term(std::move(rep));
    }

    static Term node(const Term& l, const Term& r) {
        auto rep = std::make_shared<Rep>();
        rep->var = 0;
        rep->left = l.rep_;
        rep->right = r.rep_;
        rep->degree = l.degree() + r.degree();
        return Term(std::move(rep));
    }

    bool is_leaf() const { return rep_->var != 0; }
    VarIndex var() const { return rep_->var; }
    Term left() const { return Term(rep_->left); }
    Term right() const { return Term(rep_->right); }
    unsigned degree() const { return rep_->degree; }

    void collect_variables(std::map<VarIndex, unsigned>& mult) const { collect(*rep_, mult); }

    friend int compare(const Term& a, const Term& b) { return cmp(*a.rep_, *b.rep_); }
    bool operator==(const Term& o) const { return compare(*this, o) == 0; }
    bool operator!=(const Term& o) const { return compare(*this, o) != 0; }
    bool operator<(const Term& o) const { return compare(*this, o) < 0; }

private:
    struct Rep {
        VarIndex var = 0;  // nonzero for leaves
        std::shared_ptr<const Rep> left, right;
        unsigned degree = 0;
    };

    explicit Term(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

    static void collect(const Rep& r, std::map<VarIndex, unsigned>& mult) {
        if (r.var != 0) {
            ++mult[r.var];
            return;
        }
        collect(*r.left, mult);
        collect(*r.right, mult);
    }

    // Total order: degree first, then structure. For left-normed chains of
    // equal length this restricts to lexicographic order on the letters,
    // which is the order all textual output uses.
    static int cmp(const Rep& a, const Rep& b) {
        if (&a == &b) return 0;
        if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
        bool al = a.var != 0, bl = b.var != 0;
        if (al != bl) return al ? -1 : 1;
        if (al) return a.var == b.var ? 0 : (a.var < b.var ? -1 : 1);
        if (int c = cmp(*a.left, *b.left)) return c;
        return cmp(*a.right, *b.right);
    }

    std::shared_ptr<const Rep> rep_;
};

// ---------------------------------------------------------------------------
// MultiDegree: multiplicity of each variable occurring in a monomial.
// All stored multiplicities are >= 1.
// ---------------------------------------------------------------------------
class MultiDegree {
public:
    MultiDegree() = default;

    static MultiDegree of_term(const Term& t) {
        MultiDegree d;
        t.collect_variables(d.mult_);
        return d;
    }

    void add(VarIndex k, unsigned times = 1) {
        if (k == 0 || times == 0) throw error("bad_multidegree", "indices and multiplicities are positive");
        mult_[k] += times;
    }

    unsigned multiplicity(VarIndex k) const {
        auto it = mult_.find(k);
        return it == mult_.end() ? 0 : it->second;
    }

    unsigned total() const {
        unsigned d = 0;
        for (const auto& [k, m] : mult_) d += m;
        return d;
    }

    bool is_multilinear() const {
        for (const auto& [k, m] : mult_)
            if (m != 1) return false;
        return true;
    }

    std::vector<VarIndex> variables() const {
        std::vector<VarIndex> out;
        out.reserve(mult_.size());
        for (const auto& [k, m] : mult_) out.push_back(k);
        return out;
    }

    const std::map<VarIndex, unsigned>& entries() const { return mult_; }
    bool empty() const { return mult_.empty(); }

    bool operator==(const MultiDegree& o) const { return mult_ == o.mult_; }
    bool operator<(const MultiDegree& o) const { return mult_ < o.mult_; }

    std::string str() const {
        std::string s = "(";
        bool first = true;
        for (const auto& [k, m] : mult_) {
            if (!first) s += ", ";
            first = false;
            s += "d" + std::to_string(k) + "=" + std::to_string(m);
        }
        return s + ")";
    }

private:
    std::map<VarIndex, unsigned> mult_;
};

// ---------------------------------------------------------------------------
// LeftNormedWord: the bracket-free form (i_1, ..., i_m) standing for the
// fully left-associated product (((x_{i_1} x_{i_2}) x_{i_3}) ...) x_{i_m}.
// Entry order is semantically significant.
// ---------------------------------------------------------------------------
class LeftNormedWord {
public:
    explicit LeftNormedWord(std::vector<VarIndex> letters) : letters_(std::move(letters)) {
        if (letters_.empty()) throw error("bad_word", "left-normed word must be nonempty");
        for (VarIndex k : letters_)
            if (k == 0) throw error("bad_variable", "variable index must be at least 1");
    }

    static LeftNormedWord single(VarIndex k) { return LeftNormedWord(std::vector<VarIndex>{k}); }

    // Recognizes terms that are already left-normed chains.
    static std::optional<LeftNormedWord> from_term(const Term& t) {
        std::vector<VarIndex> rev;
        Term cur = t;
        while (!cur.is_leaf()) {
            if (!cur.right().is_leaf()) return std::nullopt;
            rev.push_back(cur.right().var());
            cur = cur.left();
        }
        rev.push_back(cur.var());
        return LeftNormedWord(std::vector<VarIndex>(rev.rbegin(), rev.rend()));
    }

    Term to_term() const {
        Term acc = Term::leaf(letters_.front());
        for (std::size_t i = 1; i < letters_.size(); ++i)
            acc = Term::node(acc, Term::leaf(letters_[i]));
        return acc;
    }

    std::size_t length() const { return letters_.size(); }
    const std::vector<VarIndex>& letters() const { return letters_; }
    VarIndex head() const { return letters_.front(); }

    std::vector<VarIndex> tail() const {
        return std::vector<VarIndex>(letters_.begin() + 1, letters_.end());
    }

    LeftNormedWord appended(VarIndex k) const {
        std::vector<VarIndex> out = letters_;
        out.push_back(k);
        return LeftNormedWord(std::move(out));
    }

    MultiDegree multidegree() const {
        MultiDegree d;
        for (VarIndex k : letters_) d.add(k);
        return d;
    }

    // (length, lexicographic) order; this is also the textual output order.
    bool operator<(const LeftNormedWord& o) const {
        if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
        return letters_ < o.letters_;
    }
    bool operator==(const LeftNormedWord& o) const { return letters_ == o.letters_; }

private:
    std::vector<VarIndex> letters_;
};

}  // namespace nullfil
