#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "algebra.hpp"
#include "commpoly.hpp"
#include "element.hpp"
#include "images.hpp"
#include "polynomial.hpp"
#include "rewrite.hpp"
#include "scalar.hpp"

namespace nullfil {

// ---------------------------------------------------------------------------
// Generic symbolic evaluation: substitute x_k -> sum_i t_{k,i} e_i with
// fully generic coefficients and read off the coordinate polynomials. A
// polynomial is an identity of L_n over the rationals (or any infinite
// field) exactly when every coordinate vanishes identically.
//
// This path goes through the model's structural evaluation only; it never
// touches the rewriting machinery, which is what makes it an independent
// oracle for it.
// ---------------------------------------------------------------------------
inline std::vector<CommPoly> generic_evaluate(const FreePolynomial<Rational>& f, unsigned var_count,
                                              unsigned n) {
    if (n < 1) throw error("bad_argument", "need n >= 1");
    for (VarIndex k : f.variables())
        if (k > var_count)
            throw error("bad_variable", "x" + std::to_string(k) + " exceeds the declared variable count");
    if (f.is_zero() || var_count == 0) return std::vector<CommPoly>(n);

    AlgebraHandle alg = AlgebraHandle::finite(n);
    std::map<VarIndex, Element<CommPoly>> assignment;
    for (VarIndex k = 1; k <= var_count; ++k) {
        Element<CommPoly> v = Element<CommPoly>::zero(alg, CommPoly());
        for (unsigned i = 1; i <= n; ++i) v.set(i, CommPoly::indeterminate({k, i}));
        assignment.emplace(k, std::move(v));
    }

    FreePolynomial<CommPoly> lifted;
    for (const auto& [t, c] : f.terms()) lifted.add_term(t, CommPoly::constant(c));

    Element<CommPoly> value = evaluate(lifted, assignment);
    std::vector<CommPoly> out;
    out.reserve(n);
    for (unsigned i = 1; i <= n; ++i) out.push_back(value.coeff(i));
    return out;
}

// Identity test by generic evaluation. For the infinite algebra the test
// runs on FiniteNull(deg f + 1): degree-D polynomials cannot meet the part
// of the identity ideal beyond the Leibniz consequences, because the extra
// generator of Id(L_{D+1}) lives in degree D+1 and substitution never
// lowers degree.
inline bool identity_oracle(const FreePolynomial<Rational>& f, AlgebraHandle alg) {
    if (f.is_zero()) return true;
    unsigned m = 0;
    for (VarIndex k : f.variables()) m = std::max(m, k);
    unsigned n = alg.is_finite() ? alg.dim() : f.degree() + 1;
    for (const CommPoly& coordinate : generic_evaluate(f, m, n))
        if (!coordinate.is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Reduction mod p of rational data (denominators divisible by p are an
// error; coefficients that vanish mod p are pruned).
// ---------------------------------------------------------------------------
inline FreePolynomial<Fp> reduce_mod(const FreePolynomial<Rational>& f, std::uint64_t p) {
    FpDomain dom(p);
    FreePolynomial<Fp> out;
    for (const auto& [t, c] : f.terms()) out.add_term(t, dom.from_ratio(c.numerator(), c.denominator()));
    return out;
}

inline Element<Fp> reduce_mod(const Element<Rational>& u, std::uint64_t p) {
    FpDomain dom(p);
    Element<Fp> out = Element<Fp>::zero(u.algebra(), dom.zero());
    for (unsigned i : u.support())
        out.set(i, dom.from_ratio(u.coeff(i).numerator(), u.coeff(i).denominator()));
    return out;
}

// ---------------------------------------------------------------------------
// ImageSet: the exact image of a polynomial map on (F_p^n)^m, stored as
// sorted base-p codes of coordinate vectors.
// ---------------------------------------------------------------------------
class ImageSet {
public:
    ImageSet(AlgebraHandle alg, std::uint64_t p, std::vector<std::uint64_t> codes)
        : alg_(alg), p_(p), codes_(std::move(codes)) {}

    AlgebraHandle algebra() const { return alg_; }
    std::uint64_t modulus() const { return p_; }
    std::size_t size() const { return codes_.size(); }
    const std::vector<std::uint64_t>& codes() const { return codes_; }

    static std::uint64_t encode(const Element<Fp>& u) {
        std::uint64_t code = 0, weight = 1;
        for (unsigned i = 1; i <= u.algebra().dim(); ++i) {
            code += u.coeff(i).residue() * weight;
            weight *= u.coeff(i).modulus();
        }
        return code;
    }

    Element<Fp> decode(std::uint64_t code) const {
        Element<Fp> out = Element<Fp>::zero(alg_, Fp(0, p_));
        for (unsigned i = 1; i <= alg_.dim(); ++i) {
            out.set(i, Fp(code % p_, p_));
            code /= p_;
        }
        return out;
    }

    bool contains_code(std::uint64_t code) const {
        return std::binary_search(codes_.begin(), codes_.end(), code);
    }

    bool contains(const Element<Fp>& u) const { return contains_code(encode(u)); }

private:
    AlgebraHandle alg_;
    std::uint64_t p_;
    std::vector<std::uint64_t> codes_;
};

namespace detail {

// Straight-line program compiled from the monomial trees: one slot per tree
// node, leaves aliased to per-variable input buffers. Keeps the exhaustive
// search allocation-free in the inner loop.
struct BruteProgram {
    struct Op {
        unsigned dst, lhs, rhs;
    };
    unsigned n = 0;
    std::uint64_t p = 0;
    unsigned var_count = 0;                                // leaf slots are 0..var_count-1
    std::vector<Op> ops;                                   // topological order
    std::vector<std::pair<unsigned, std::uint64_t>> roots;  // (slot, coefficient residue)
    unsigned slot_count = 0;

    unsigned compile(const Term& t, const std::map<VarIndex, unsigned>& leaf_slot) {
        if (t.is_leaf()) return leaf_slot.at(t.var());
        unsigned l = compile(t.left(), leaf_slot);
        unsigned r = compile(t.right(), leaf_slot);
        unsigned dst = slot_count++;
        ops.push_back({dst, l, r});
        return dst;
    }
};

inline void brute_force_range(const BruteProgram& prog, std::uint64_t begin, std::uint64_t end,
                              std::vector<char>& seen) {
    const unsigned n = prog.n;
    const std::uint64_t p = prog.p;
    const unsigned digits = prog.var_count * n;

    std::vector<std::vector<std::uint64_t>> slots(prog.slot_count, std::vector<std::uint64_t>(n, 0));

    // Leaf buffers hold the base-p digits of the tuple index: digit v*n+i is
    // the e_{i+1}-coefficient of the value assigned to variable slot v.
    std::vector<std::uint64_t> digit(digits, 0);
    {
        std::uint64_t idx = begin;
        for (unsigned i = 0; i < digits; ++i) {
            digit[i] = idx % p;
            idx /= p;
        }
        for (unsigned v = 0; v < prog.var_count; ++v)
            for (unsigned i = 0; i < n; ++i) slots[v][i] = digit[v * n + i];
    }

    std::vector<std::uint64_t> acc(n, 0);
    for (std::uint64_t t = begin; t < end; ++t) {
        for (const auto& op : prog.ops) {
            const std::uint64_t b1 = slots[op.rhs][0];
            auto& dst = slots[op.dst];
            const auto& lhs = slots[op.lhs];
            for (unsigned i = n; i-- > 1;) dst[i] = (lhs[i - 1] * b1) % p;
            dst[0] = 0;
        }
        std::fill(acc.begin(), acc.end(), 0);
        for (const auto& [slot, coeff] : prog.roots)
            for (unsigned i = 0; i < n; ++i) acc[i] = (acc[i] + coeff * slots[slot][i]) % p;

        std::uint64_t code = 0, weight = 1;
        for (unsigned i = 0; i < n; ++i) {
            code += acc[i] * weight;
            weight *= p;
        }
        seen[code] = 1;

        // Odometer step: update the changed digits in place.
        for (unsigned i = 0; i < digits; ++i) {
            if (++digit[i] < p) {
                slots[i / n][i % n] = digit[i];
                break;
            }
            digit[i] = 0;
            slots[i / n][i % n] = 0;
        }
    }
}

}  // namespace detail

// Exhaustive image of f over F_p^n; the search space p^(n*m) is capped at
// 10^7 assignments. Partitions of the assignment space run on independent
// workers and merge by set union.
inline ImageSet brute_force_image(const FreePolynomial<Fp>& f, unsigned n, std::uint64_t p) {
    if (n < 1) throw error("bad_argument", "need n >= 1");
    AlgebraHandle alg = AlgebraHandle::finite(n);

    std::vector<VarIndex> vars = f.variables();
    const unsigned m = static_cast<unsigned>(vars.size());

    BigInt space = boost::multiprecision::pow(BigInt(p), n * m);
    if (space > 10'000'000)
        throw error("search_space_exceeded",
                    "p^(n*m) = " + space.str() + " exceeds the 10^7 assignment bound");
    const std::uint64_t total = space.convert_to<std::uint64_t>();

    BigInt codes_space = boost::multiprecision::pow(BigInt(p), n);
    const std::uint64_t code_count = codes_space.convert_to<std::uint64_t>();

    detail::BruteProgram prog;
    prog.n = n;
    prog.p = p;
    prog.var_count = m;
    prog.slot_count = m;
    std::map<VarIndex, unsigned> leaf_slot;
    for (unsigned v = 0; v < m; ++v) leaf_slot.emplace(vars[v], v);
    for (const auto& [t, c] : f.terms()) {
        if (c.modulus() != p) throw error("modulus_mismatch", "coefficients not reduced mod p");
        prog.roots.emplace_back(prog.compile(t, leaf_slot), c.residue());
    }

    unsigned workers = 1;
    if (total >= (std::uint64_t{1} << 17)) {
        unsigned hw = std::thread::hardware_concurrency();
        workers = std::min<unsigned>(hw == 0 ? 4 : hw, 8);
    }

    std::vector<std::vector<char>> seen(workers, std::vector<char>(code_count, 0));
    if (workers == 1) {
        detail::brute_force_range(prog, 0, total, seen[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t begin = total / workers * w + std::min<std::uint64_t>(w, total % workers);
            std::uint64_t end = begin + total / workers + (w < total % workers ? 1 : 0);
            pool.emplace_back(detail::brute_force_range, std::cref(prog), begin, end, std::ref(seen[w]));
        }
        for (auto& th : pool) th.join();
        for (unsigned w = 1; w < workers; ++w)
            for (std::uint64_t c = 0; c < code_count; ++c) seen[0][c] |= seen[w][c];
    }

    std::vector<std::uint64_t> codes;
    for (std::uint64_t c = 0; c < code_count; ++c)
        if (seen[0][c]) codes.push_back(c);
    return ImageSet(alg, p, std::move(codes));
}

inline ImageSet brute_force_image(const FreePolynomial<Rational>& f, unsigned n, std::uint64_t p) {
    return brute_force_image(reduce_mod(f, p), n, p);
}

// ---------------------------------------------------------------------------
// Cross-check of the rational classification against the exhaustive
// finite-field image:
//
//   - inclusion Im(f) in realize(descriptor) must hold for every case;
//   - for the sum-zero and linear-head cases, exact set equality whenever
//     the construction's divisors stay nonzero mod p;
//   - for the punctured cone, only the zero/nonzero-beta_d split is claimed
//     (surjectivity onto the cone needs an algebraically closed field).
// ---------------------------------------------------------------------------
enum class EqualityMode { exact, split_only, skipped_divisor };

inline std::string equality_mode_name(EqualityMode m) {
    switch (m) {
        case EqualityMode::exact: return "exact";
        case EqualityMode::split_only: return "split_only";
        case EqualityMode::skipped_divisor: return "skipped_divisor";
    }
    return "?";
}

struct CrossCheckReport {
    std::string f_text;
    unsigned n;
    std::uint64_t p;
    ImageDescriptor descriptor;
    ImageCase kase;
    bool inclusion;
    EqualityMode equality;
    bool ok;
    std::string detail;  // diagnostics when a check fails
};

inline CrossCheckReport cross_check(const FreePolynomial<Rational>& f, unsigned n, std::uint64_t p) {
    AlgebraHandle alg = AlgebraHandle::finite(n);
    Classification<Rational> cls = classify_full(f, alg);
    ImageSet img = brute_force_image(f, n, p);

    CrossCheckReport rep{f.str(), n, p, cls.descriptor, cls.kase,
                         /*inclusion=*/true, EqualityMode::exact, /*ok=*/false, ""};
    for (std::uint64_t code : img.codes()) {
        if (!realize(cls.descriptor, img.decode(code))) {
            rep.inclusion = false;
            rep.detail += "image point " + img.decode(code).str() + " outside descriptor; ";
            break;
        }
    }

    bool mode_ok = true;
    switch (cls.kase) {
        case ImageCase::identity: {
            rep.equality = EqualityMode::exact;
            mode_ok = img.size() == 1 && img.contains_code(0);
            if (!mode_ok) rep.detail += "identity with nonzero image point; ";
            break;
        }
        case ImageCase::sum_zero:
        case ImageCase::linear_head: {
            NormalFormPoly<Fp> fp_nf = normal_form(reduce_mod(f, p), alg);
            bool divisor_ok = false;
            if (!fp_nf.is_zero()) {
                HeadCoefficients<Fp> fp_heads = head_coefficients(fp_nf);
                if (cls.kase == ImageCase::sum_zero) {
                    // some alpha_j stays nonzero mod p (the sum is zero exactly)
                    divisor_ok = true;
                } else {
                    bool linear = false;
                    for (VarIndex j : fp_heads.linear_variables)
                        if (!fp_heads.alpha_of(j).is_zero()) linear = true;
                    divisor_ok = !fp_heads.alpha_sum.is_zero() && linear;
                }
            }
            if (!divisor_ok) {
                rep.equality = EqualityMode::skipped_divisor;
                break;
            }
            rep.equality = EqualityMode::exact;
            BigInt all = boost::multiprecision::pow(BigInt(p), n);
            for (std::uint64_t code = 0; code < all.convert_to<std::uint64_t>(); ++code) {
                bool realized = realize(cls.descriptor, img.decode(code));
                if (realized != img.contains_code(code)) {
                    mode_ok = false;
                    rep.detail += "set mismatch at " + img.decode(code).str() + "; ";
                    break;
                }
            }
            break;
        }
        case ImageCase::cone: {
            rep.equality = EqualityMode::split_only;
            const unsigned d = cls.heads->total_degree;
            if (!img.contains_code(0)) {
                mode_ok = false;
                rep.detail += "zero missing from image; ";
            }
            for (std::uint64_t code : img.codes()) {
                if (code == 0) continue;
                auto lo = img.decode(code).min_support();
                if (!lo || *lo != d) {
                    mode_ok = false;
                    rep.detail += "nonzero image point with vanishing e_" + std::to_string(d) +
                                  " coefficient: " + img.decode(code).str() + "; ";
                    break;
                }
            }
            break;
        }
    }

    rep.ok = rep.inclusion && mode_ok;
    return rep;
}

}  // namespace nullfil
