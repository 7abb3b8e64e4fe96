#pragma once

#include <string>
#include <string_view>

#include "element.hpp"
#include "polynomial.hpp"
#include "scalar.hpp"
#include "term.hpp"

namespace nullfil {

namespace detail {

// Guard against pathological inputs like x1^10^9 blowing up the term store.
inline constexpr unsigned kMaxExponent = 4096;

class Scanner {
public:
    explicit Scanner(std::string_view text) : s_(text) {}

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r'))
            ++pos_;
    }

    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected ") + what);
    }

    bool at_digit() {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9';
    }

    BigInt natural() {
        skip_ws();
        if (!at_digit()) fail("expected a number");
        BigInt v = 0;
        while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    unsigned small_natural(const char* what, unsigned max) {
        BigInt v = natural();
        if (v > max) fail(std::string(what) + " too large");
        return v.convert_to<unsigned>();
    }

    std::size_t position() const { return pos_; }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos_); }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Polynomial expressions.
//
//   poly   := ["+"|"-"] term (("+"|"-") term)*
//   term   := [coeff ["*"]] factor (["*"] factor)*
//   factor := var ["^" nat] | "(" poly ")" ["^" nat]
//   var    := "x" nat            coeff := nat ["/" nat]
//
// Juxtaposition is a left-associative product; "^s" repeats the factor under
// right multiplication, so "a b^2" is ((a b) b) and "x1^2 x2" is ((x1 x1) x2).
// ---------------------------------------------------------------------------
template <ScalarDomain D>
class PolynomialParser {
public:
    using S = typename D::scalar_type;

    PolynomialParser(std::string_view text, const D& dom) : sc_(text), dom_(dom) {}

    FreePolynomial<S> parse() {
        FreePolynomial<S> out = parse_poly();
        if (!sc_.done()) sc_.fail("unexpected trailing input");
        return out;
    }

private:
    FreePolynomial<S> parse_poly() {
        bool negative = false;
        if (sc_.accept('-'))
            negative = true;
        else
            sc_.accept('+');
        FreePolynomial<S> acc = parse_term(negative);
        while (true) {
            if (sc_.accept('+'))
                acc = acc + parse_term(false);
            else if (sc_.accept('-'))
                acc = acc + parse_term(true);
            else
                break;
        }
        return acc;
    }

    FreePolynomial<S> parse_term(bool negative) {
        S coeff = dom_.one();
        if (sc_.at_digit()) {
            BigInt num = sc_.natural();
            if (sc_.accept('/')) {
                std::size_t at = sc_.position();
                BigInt den = sc_.natural();
                if (den.is_zero()) throw parse_error("zero denominator", at);
                coeff = dom_.from_ratio(num, den);
            } else {
                coeff = dom_.from_integer(num);
            }
            sc_.accept('*');
        }
        if (negative) coeff = -coeff;

        FreePolynomial<S> acc;
        bool first = true;
        while (true) {
            char c = sc_.peek();
            if (c != 'x' && c != '(') break;
            auto [factor, exp] = parse_factor();
            if (first) {
                acc = factor;
                first = false;
                for (unsigned i = 1; i < exp; ++i) acc = acc * factor;
            } else {
                for (unsigned i = 0; i < exp; ++i) acc = acc * factor;
            }
            sc_.accept('*');
        }
        if (first) sc_.fail("expected a variable or '('");
        return acc.scaled(coeff);
    }

    std::pair<FreePolynomial<S>, unsigned> parse_factor() {
        FreePolynomial<S> base;
        if (sc_.accept('(')) {
            base = parse_poly();
            sc_.expect(')', "')'");
        } else {
            sc_.expect('x', "a variable like x1");
            std::size_t at = sc_.position();
            unsigned k = sc_.small_natural("variable index", 1u << 20);
            if (k == 0) throw parse_error("variable index 0 (variables start at x1)", at);
            base = FreePolynomial<S>::variable(k, dom_.one());
        }
        unsigned exp = 1;
        if (sc_.accept('^')) {
            std::size_t at = sc_.position();
            exp = sc_.small_natural("exponent", detail::kMaxExponent);
            if (exp == 0) throw parse_error("exponent 0 is not allowed", at);
        }
        return {base, exp};
    }

    detail::Scanner sc_;
    const D& dom_;
};

template <ScalarDomain D>
FreePolynomial<typename D::scalar_type> parse_polynomial(std::string_view text, const D& dom) {
    return PolynomialParser<D>(text, dom).parse();
}

// ---------------------------------------------------------------------------
// Element expressions: "c*e<k>" terms joined by + and -, with the
// coefficient (and its '*') optional; "0" denotes the zero element.
// ---------------------------------------------------------------------------
template <ScalarDomain D>
Element<typename D::scalar_type> parse_element(std::string_view text, const D& dom, AlgebraHandle alg) {
    using S = typename D::scalar_type;
    detail::Scanner sc(text);
    Element<S> out = Element<S>::zero(alg, dom.zero());

    bool negative = false;
    if (sc.accept('-'))
        negative = true;
    else
        sc.accept('+');

    // Allow a literal "0".
    {
        detail::Scanner probe = sc;
        if (probe.at_digit()) {
            BigInt v = probe.natural();
            if (v.is_zero() && probe.done()) return out;
        }
    }

    while (true) {
        S coeff = dom.one();
        if (sc.at_digit()) {
            BigInt num = sc.natural();
            if (sc.accept('/')) {
                std::size_t at = sc.position();
                BigInt den = sc.natural();
                if (den.is_zero()) throw parse_error("zero denominator", at);
                coeff = dom.from_ratio(num, den);
            } else {
                coeff = dom.from_integer(num);
            }
            sc.accept('*');
        }
        if (negative) coeff = -coeff;
        sc.expect('e', "a basis element like e2");
        std::size_t at = sc.position();
        unsigned idx = sc.small_natural("basis index", 1u << 20);
        if (idx == 0) throw parse_error("basis indices start at e1", at);
        if (!alg.in_range(idx)) throw parse_error("basis index outside " + alg.str(), at);
        out.add_to(idx, coeff);

        if (sc.accept('+'))
            negative = false;
        else if (sc.accept('-'))
            negative = true;
        else
            break;
    }
    if (!sc.done()) sc.fail("unexpected trailing input");
    return out;
}

}  // namespace nullfil
