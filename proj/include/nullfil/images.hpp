#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "algebra.hpp"
#include "element.hpp"
#include "polynomial.hpp"
#include "rewrite.hpp"
#include "scalar.hpp"

namespace nullfil {

// ---------------------------------------------------------------------------
// ImageDescriptor: the possible shapes of the image of a multihomogeneous
// polynomial on L_n or L_inf.
//
//   Zero             {0}
//   PowerIdeal(k)    L^k = span{e_k, e_{k+1}, ...}
//   PuncturedCone(d) {0} u (K'.e_d + L^{d+1}), K' the nonzero scalars
//
// Descriptors are canonical on FiniteNull(n): PowerIdeal(k) with k > n
// collapses to Zero, PuncturedCone(n) collapses to PowerIdeal(n) (the two
// sets coincide), PuncturedCone(d) with d > n collapses to Zero.
//
// closure_required marks descriptors whose surjectivity needs an
// algebraically closed scalar field; it is true exactly for punctured cones.
// Membership answers (realize) always describe the closed-field set.
// ---------------------------------------------------------------------------
enum class ImageKind { zero, power_ideal, punctured_cone };

struct ImageDescriptor {
    AlgebraHandle algebra;
    ImageKind kind;
    unsigned index = 0;  // k for power_ideal, d for punctured_cone
    bool closure_required = false;

    static ImageDescriptor zero(AlgebraHandle alg) { return {alg, ImageKind::zero, 0, false}; }
    static ImageDescriptor power_ideal(AlgebraHandle alg, unsigned k) {
        return {alg, ImageKind::power_ideal, k, false};
    }
    static ImageDescriptor punctured_cone(AlgebraHandle alg, unsigned d) {
        return {alg, ImageKind::punctured_cone, d, true};
    }

    ImageDescriptor canonicalized() const {
        if (!algebra.is_finite()) return *this;
        unsigned n = algebra.dim();
        if (kind == ImageKind::power_ideal && index > n) return zero(algebra);
        if (kind == ImageKind::punctured_cone) {
            if (index > n) return zero(algebra);
            if (index == n) return power_ideal(algebra, n);
        }
        return *this;
    }

    bool operator==(const ImageDescriptor& o) const {
        return algebra == o.algebra && kind == o.kind && index == o.index &&
               closure_required == o.closure_required;
    }

    std::string str() const {
        switch (kind) {
            case ImageKind::zero: return "zero";
            case ImageKind::power_ideal: return "power_ideal k=" + std::to_string(index);
            case ImageKind::punctured_cone:
                return "punctured_cone d=" + std::to_string(index) +
                       (closure_required ? " (closure_required)" : "");
        }
        return "?";
    }
};

// Membership in the set a descriptor denotes.
template <RingScalar S>
bool realize(const ImageDescriptor& desc, const Element<S>& u) {
    if (desc.algebra != u.algebra())
        throw error("algebra_mismatch", "membership query against a different algebra");
    auto lo = u.min_support();
    switch (desc.kind) {
        case ImageKind::zero: return !lo;
        case ImageKind::power_ideal: return !lo || *lo >= desc.index;
        case ImageKind::punctured_cone: return !lo || *lo == desc.index;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Classification of images. The decision tree, applied to the head
// coefficients alpha_j of the canonical form of multidegree (d_1,...,d_m),
// total degree d:
//
//   normal form zero                                -> Zero        (identity)
//   sum alpha = 0                                   -> PowerIdeal(d+1)
//   sum alpha != 0, some j with d_j = 1, alpha_j != 0 -> PowerIdeal(d)
//   otherwise                                       -> PuncturedCone(d)
//
// The classification theorems are statements over infinite (respectively
// algebraically closed) fields, so the public classify runs over the
// rationals; the generic classify_full is shared with the preimage
// constructions and the finite-field cross-checks.
// ---------------------------------------------------------------------------
enum class ImageCase { identity, sum_zero, linear_head, cone };

inline std::string image_case_name(ImageCase c) {
    switch (c) {
        case ImageCase::identity: return "identity";
        case ImageCase::sum_zero: return "sum_zero";
        case ImageCase::linear_head: return "linear_head";
        case ImageCase::cone: return "cone";
    }
    return "?";
}

template <FieldScalar S>
struct Classification {
    ImageDescriptor descriptor;                 // canonical
    ImageCase kase;
    std::optional<HeadCoefficients<S>> heads;   // absent exactly for identities
    VarIndex head = 0;                          // chosen construction head, 0 for identities
    NormalFormPoly<S> nf;
};

template <FieldScalar S>
Classification<S> classify_full(const FreePolynomial<S>& f, AlgebraHandle alg) {
    if (!f.is_zero() && !multidegree_of(f))
        throw error("not_multihomogeneous", "image classification needs a multihomogeneous polynomial");

    NormalFormPoly<S> nf = normal_form(f, alg);
    if (nf.is_zero())
        return {ImageDescriptor::zero(alg), ImageCase::identity, std::nullopt, 0, std::move(nf)};

    HeadCoefficients<S> heads = head_coefficients(nf);
    const unsigned d = heads.total_degree;

    VarIndex first_nonzero = 0;
    for (const auto& [j, a] : heads.alpha) {
        if (!a.is_zero()) {
            first_nonzero = j;
            break;
        }
    }

    ImageCase kase;
    VarIndex head = 0;
    ImageDescriptor desc = ImageDescriptor::zero(alg);
    if (heads.alpha_sum.is_zero()) {
        kase = ImageCase::sum_zero;
        head = first_nonzero;
        desc = ImageDescriptor::power_ideal(alg, d + 1);
    } else {
        VarIndex linear = 0;
        for (VarIndex j : heads.linear_variables) {
            if (!heads.alpha_of(j).is_zero()) {
                linear = j;
                break;
            }
        }
        if (linear != 0) {
            kase = ImageCase::linear_head;
            head = linear;
            desc = ImageDescriptor::power_ideal(alg, d);
        } else {
            kase = ImageCase::cone;
            head = first_nonzero;
            desc = ImageDescriptor::punctured_cone(alg, d);
        }
    }
    return {desc.canonicalized(), kase, std::move(heads), head, std::move(nf)};
}

inline ImageDescriptor classify(const FreePolynomial<Rational>& f, AlgebraHandle alg) {
    return classify_full(f, alg).descriptor;
}

// ---------------------------------------------------------------------------
// Exact roots, used by the punctured-cone witness construction.
// ---------------------------------------------------------------------------
namespace detail {

inline std::optional<BigInt> exact_iroot(const BigInt& value, unsigned e) {
    if (value < 0) return std::nullopt;
    if (value == 0 || value == 1 || e == 1) return value;
    BigInt lo = 1, hi = 1;
    while (boost::multiprecision::pow(hi, e) < value) hi <<= 1;
    while (lo < hi) {
        BigInt mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, e) < value)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (boost::multiprecision::pow(lo, e) == value) return lo;
    return std::nullopt;
}

}  // namespace detail

// Exact rational e-th root, or nullopt when none exists in Q.
inline std::optional<Rational> kth_root(const Rational& q, unsigned e) {
    if (e == 0) throw error("bad_exponent", "0th roots are undefined");
    if (e == 1 || q.is_zero()) return q;
    const bool negative = q.is_negative();
    if (negative && e % 2 == 0) return std::nullopt;
    auto num = detail::exact_iroot(boost::multiprecision::abs(q.numerator()), e);
    auto den = detail::exact_iroot(q.denominator(), e);
    if (!num || !den) return std::nullopt;
    Rational r(*num, *den);
    return negative ? -r : r;
}

// e-th root in F_p by scanning all residues (smallest root returned).
inline std::optional<Fp> kth_root(const Fp& q, unsigned e) {
    if (e == 0) throw error("bad_exponent", "0th roots are undefined");
    for (std::uint64_t r = 0; r < q.modulus(); ++r) {
        Fp c(r, q.modulus());
        if (c.pow(e) == q) return c;
    }
    return std::nullopt;
}

template <RingScalar S>
S power(const S& s, unsigned e) {
    S acc = s.one();
    for (unsigned i = 0; i < e; ++i) acc = acc * s;
    return acc;
}

// ---------------------------------------------------------------------------
// Preimage synthesis, following the constructive classification proofs: the
// chosen head variable x_j receives sum a_i e_i, every other variable
// receives e_1, and the a_i are solved from the evaluation closed form.
// ---------------------------------------------------------------------------
template <FieldScalar S>
struct PreimageAssignment {
    std::map<VarIndex, Element<S>> assignment;
};

struct PreimageNotInImage {
    std::string reason;  // wrong_support | beta_d_zero | identity_nonzero_target
};

template <FieldScalar S>
struct PreimageNeedsRoot {
    unsigned exponent;  // the multiplicity d_j of the chosen head variable
    S value;            // beta_d / sum(alpha)
};

template <FieldScalar S>
using PreimageResult = std::variant<PreimageAssignment<S>, PreimageNotInImage, PreimageNeedsRoot<S>>;

template <FieldScalar S>
PreimageResult<S> preimage(const FreePolynomial<S>& f, AlgebraHandle alg, const Element<S>& target) {
    if (target.algebra() != alg)
        throw error("algebra_mismatch", "target lives in a different algebra");

    Classification<S> cls = classify_full(f, alg);

    if (cls.kase == ImageCase::identity) {
        if (!target.is_zero()) return PreimageNotInImage{"identity_nonzero_target"};
        PreimageAssignment<S> out;
        if (!f.is_zero()) {
            S zero = f.terms().begin()->second.zero();
            for (VarIndex k : f.variables()) out.assignment.emplace(k, Element<S>::zero(alg, zero));
        }
        return out;
    }

    const HeadCoefficients<S>& heads = *cls.heads;
    const S zero = heads.alpha_sum.zero();
    const S one = zero.one();
    const unsigned d = heads.total_degree;
    const VarIndex j = cls.head;
    const S alpha_j = heads.alpha_of(j);
    const unsigned d_j = heads.multidegree.multiplicity(j);

    auto make_assignment = [&](const std::vector<S>& a) {
        PreimageAssignment<S> out;
        Element<S> vj = Element<S>::zero(alg, zero);
        for (unsigned i = 0; i < a.size(); ++i)
            if (!a[i].is_zero()) vj.set(i + 1, a[i]);
        for (VarIndex k : heads.multidegree.variables())
            out.assignment.emplace(k, k == j ? vj : Element<S>::basis(alg, 1, one));
        return out;
    };

    if (target.is_zero()) {
        PreimageAssignment<S> out;
        for (VarIndex k : heads.multidegree.variables())
            out.assignment.emplace(k, Element<S>::zero(alg, zero));
        return out;
    }

    const unsigned lo = *target.min_support();
    const unsigned hi = *target.max_support();
    const unsigned reach = alg.is_finite() ? alg.dim() : hi;  // largest basis index to hit
    std::vector<S> a;                                         // coefficients of x_j
    a.reserve(reach >= d ? reach - d + 2 : 1);

    switch (cls.kase) {
        case ImageCase::sum_zero: {
            if (lo < d + 1) return PreimageNotInImage{"wrong_support"};
            // a_1 is a free parameter here (the e_d coefficient vanishes with
            // the alpha sum); it must be nonzero when the head variable
            // repeats, and a linear head takes 0 as in the multilinear case.
            a.push_back(d_j == 1 ? zero : one);
            for (unsigned i = 2; i + d - 1 <= reach; ++i) a.push_back(target.coeff(i + d - 1) / alpha_j);
            break;
        }
        case ImageCase::linear_head: {
            if (lo < d) return PreimageNotInImage{"wrong_support"};
            a.push_back(target.coeff(d) / heads.alpha_sum);
            for (unsigned i = 2; i + d - 1 <= reach; ++i) a.push_back(target.coeff(i + d - 1) / alpha_j);
            break;
        }
        case ImageCase::cone: {
            if (lo < d) return PreimageNotInImage{"wrong_support"};
            if (lo > d) return PreimageNotInImage{"beta_d_zero"};
            const S q = target.coeff(d) / heads.alpha_sum;
            auto root = kth_root(q, d_j);
            if (!root) return PreimageNeedsRoot<S>{d_j, q};
            const S a1 = *root;
            const S tail_divisor = alpha_j * power(a1, d_j - 1);
            a.push_back(a1);
            for (unsigned i = 2; i + d - 1 <= reach; ++i) a.push_back(target.coeff(i + d - 1) / tail_divisor);
            break;
        }
        case ImageCase::identity: break;  // handled above
    }

    PreimageAssignment<S> out = make_assignment(a);
    if (!(evaluate(f, out.assignment) == target))
        throw error("internal_error", "preimage construction did not reproduce the target");
    return out;
}

}  // namespace nullfil
