#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "images.hpp"
#include "oracle.hpp"
#include "parse.hpp"
#include "rewrite.hpp"

// Self-verification suites. The CI acceptance runner and the CLI `verify`
// command both call run_all, so they execute exactly the same checks. All
// comparisons are exact; there are no tolerances anywhere.

namespace nullfil::selftest {

struct CheckResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

using Rng = std::mt19937_64;

// ---------------------------------------------------------------------------
// Seeded random generators. Failures replay deterministically from the seed.
// ---------------------------------------------------------------------------

inline unsigned uniform(Rng& rng, unsigned lo, unsigned hi) {  // inclusive
    return lo + static_cast<unsigned>(rng() % (hi - lo + 1));
}

inline Rational random_int_coeff(Rng& rng, unsigned bound) {
    long long v = static_cast<long long>(uniform(rng, 1, bound));
    return Rational(rng() & 1 ? v : -v);
}

inline Rational random_rational(Rng& rng) {
    Rational num = random_int_coeff(rng, 6);
    unsigned den = uniform(rng, 1, 3);
    return num / Rational(den);
}

// Random tree shape over a fixed leaf sequence.
inline Term random_tree(Rng& rng, const std::vector<VarIndex>& leaves, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return Term::leaf(leaves[lo]);
    std::size_t split = lo + 1 + rng() % (hi - lo - 1);
    return Term::node(random_tree(rng, leaves, lo, split), random_tree(rng, leaves, split, hi));
}

inline Term random_term(Rng& rng, unsigned max_var, unsigned degree) {
    std::vector<VarIndex> leaves;
    leaves.reserve(degree);
    for (unsigned i = 0; i < degree; ++i) leaves.push_back(uniform(rng, 1, max_var));
    return random_tree(rng, leaves, 0, leaves.size());
}

inline FreePolynomial<Rational> random_free_poly(Rng& rng, unsigned max_var, unsigned max_degree,
                                                 unsigned max_terms) {
    FreePolynomial<Rational> f;
    unsigned terms = uniform(rng, 1, max_terms);
    for (unsigned t = 0; t < terms; ++t)
        f.add_term(random_term(rng, max_var, uniform(rng, 1, max_degree)), random_rational(rng));
    return f;
}

inline FreePolynomial<Rational> random_multilinear(Rng& rng, unsigned m, unsigned coeff_bound) {
    FreePolynomial<Rational> f;
    unsigned terms = uniform(rng, 1, m == 1 ? 2 : 4);
    for (unsigned t = 0; t < terms; ++t) {
        std::vector<VarIndex> leaves;
        for (VarIndex k = 1; k <= m; ++k) leaves.push_back(k);
        std::shuffle(leaves.begin(), leaves.end(), rng);
        f.add_term(random_tree(rng, leaves, 0, leaves.size()), random_int_coeff(rng, coeff_bound));
    }
    return f;
}

inline FreePolynomial<Rational> random_multihomogeneous(Rng& rng, const MultiDegree& mdeg,
                                                        unsigned max_terms, unsigned coeff_bound) {
    std::vector<VarIndex> base;
    for (const auto& [k, d] : mdeg.entries()) base.insert(base.end(), d, k);
    FreePolynomial<Rational> f;
    unsigned terms = uniform(rng, 1, max_terms);
    for (unsigned t = 0; t < terms; ++t) {
        std::vector<VarIndex> leaves = base;
        std::shuffle(leaves.begin(), leaves.end(), rng);
        f.add_term(random_tree(rng, leaves, 0, leaves.size()), random_int_coeff(rng, coeff_bound));
    }
    return f;
}

// The word x_{letters[0]} ... x_{letters.back()} as a free polynomial.
inline FreePolynomial<Rational> word_poly(const std::vector<VarIndex>& letters) {
    return FreePolynomial<Rational>::monomial(LeftNormedWord(letters).to_term(), Rational(1));
}

// Multilinear polynomial whose coefficients sum to zero but whose head sums
// do not: pairs c (w_sigma - w_tau) over left-normed permutation words with
// distinct heads (m >= 2).
inline FreePolynomial<Rational> random_multilinear_sum_zero(Rng& rng, unsigned m) {
    FreePolynomial<Rational> f;
    unsigned pairs = uniform(rng, 1, 2);
    for (unsigned t = 0; t < pairs; ++t) {
        std::vector<VarIndex> a, b;
        for (VarIndex k = 1; k <= m; ++k) a.push_back(k);
        b = a;
        do {
            std::shuffle(a.begin(), a.end(), rng);
            std::shuffle(b.begin(), b.end(), rng);
        } while (a.front() == b.front());
        Rational c(rng() & 1 ? 1 : -1);
        f = f + word_poly(a).scaled(c) - word_poly(b).scaled(c);
    }
    return f;
}

// The defining identities as polynomials: leibniz_kernel() is x1(x2x3),
// swap_chain(k) is x1 x2 ... x_k - x2 x1 x3 ... x_k (an identity of L_n
// exactly for n <= k).
inline FreePolynomial<Rational> leibniz_kernel() {
    Term t = Term::node(Term::leaf(1), Term::node(Term::leaf(2), Term::leaf(3)));
    return FreePolynomial<Rational>::monomial(t, Rational(1));
}

inline FreePolynomial<Rational> swap_chain(unsigned k) {
    std::vector<VarIndex> straight, swapped;
    for (VarIndex i = 1; i <= k; ++i) straight.push_back(i);
    swapped = straight;
    std::swap(swapped[0], swapped[1]);
    return word_poly(straight) - word_poly(swapped);
}

// A random member of the T-ideal generated by the defining identities of
// L_chain: substitute random terms for the variables of a generator, then
// optionally multiply by further random terms and rescale.
inline FreePolynomial<Rational> random_identity_member(Rng& rng, unsigned chain, unsigned max_var) {
    FreePolynomial<Rational> base = (rng() & 1) ? leibniz_kernel() : swap_chain(chain);
    std::map<VarIndex, FreePolynomial<Rational>> images;
    for (VarIndex k : base.variables()) {
        Term t = random_term(rng, max_var, uniform(rng, 1, 2));
        images.emplace(k, FreePolynomial<Rational>::monomial(t, Rational(1)));
    }
    FreePolynomial<Rational> out = substitute(base, images);
    if (rng() % 3 == 0) {
        FreePolynomial<Rational> extra =
            FreePolynomial<Rational>::monomial(random_term(rng, max_var, uniform(rng, 1, 2)), Rational(1));
        out = (rng() & 1) ? out * extra : extra * out;
    }
    return out.scaled(random_rational(rng));
}

inline Element<Rational> random_element(Rng& rng, AlgebraHandle alg, unsigned span_from,
                                        unsigned span_to) {
    Element<Rational> u = Element<Rational>::zero(alg, Rational());
    for (unsigned i = span_from; i <= span_to; ++i)
        if (alg.in_range(i) && rng() % 2 == 0) u.set(i, random_rational(rng));
    return u;
}

// ---------------------------------------------------------------------------
// Independent closed forms used as oracles by criterion 8.
// ---------------------------------------------------------------------------

// z w^(s) = b_1^s * sum_{i=1}^{n-s} a_i e_{i+s} on FiniteNull(n).
inline Element<Rational> right_power_closed_form(const Element<Rational>& z,
                                                   const Element<Rational>& w, unsigned s) {
    unsigned n = z.algebra().dim();
    Element<Rational> out = Element<Rational>::zero(z.algebra(), Rational());
    if (s >= n) return out;
    Rational scale = w.coeff(1).pow(s);
    for (unsigned i = 1; i + s <= n; ++i) out.add_to(i + s, z.coeff(i) * scale);
    return out;
}

// The evaluation closed form for a multihomogeneous canonical form: with
// b_l the e_1-coefficient of the value of x_l,
//
//   f  =  (prod_l b_l^{d_l}) (sum_j alpha_j) e_d
//        + sum_j alpha_j (prod_{l != j} b_l^{d_l}) b_j^{d_j - 1}
//                 sum_{i >= 2} a_{i,j} e_{i+d-1}.
inline Element<Rational> evaluation_closed_form(const HeadCoefficients<Rational>& heads,
                                                const std::map<VarIndex, Element<Rational>>& assign,
                                                AlgebraHandle alg) {
    Element<Rational> out = Element<Rational>::zero(alg, Rational());
    const unsigned d = heads.total_degree;

    Rational full(1);
    for (const auto& [l, dl] : heads.multidegree.entries()) full *= assign.at(l).coeff(1).pow(dl);
    if (alg.in_range(d)) out.add_to(d, full * heads.alpha_sum);

    for (const auto& [j, dj] : heads.multidegree.entries()) {
        const Rational& alpha_j = heads.alpha_of(j);
        if (alpha_j.is_zero()) continue;
        Rational pref = alpha_j;
        for (const auto& [l, dl] : heads.multidegree.entries())
            pref *= assign.at(l).coeff(1).pow(l == j ? dl - 1 : dl);
        if (pref.is_zero()) continue;
        unsigned hi = alg.is_finite() ? alg.dim() : assign.at(j).max_support().value_or(1) + d - 1;
        for (unsigned i = 2; i + d - 1 <= hi; ++i) out.add_to(i + d - 1, assign.at(j).coeff(i) * pref);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Criterion harness.
// ---------------------------------------------------------------------------

template <class Fn>
CheckResult run_check(int id, const std::string& name, Fn&& body) {
    CheckResult r{id, name, false, "", 0.0};
    auto start = std::chrono::steady_clock::now();
    try {
        std::string detail;
        r.pass = body(detail);
        r.detail = detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// Criterion 1: identity-basis concordance. Canonical rewriting and the
// generic-evaluation oracle must agree on a seeded 500-polynomial corpus for
// every n in 2..5, plus the curated defining identities and their
// consequences. Budget: 120 seconds.
inline CheckResult criterion_identity_concordance(std::uint64_t seed) {
    return run_check(1, "identity basis concordance (500 random polynomials, n = 2..5)",
                     [&](std::string& detail) {
        auto start = std::chrono::steady_clock::now();
        Rng rng(seed * 1000003ULL + 1);

        unsigned identities_seen = 0, non_identities_seen = 0;
        for (unsigned c = 0; c < 500; ++c) {
            FreePolynomial<Rational> f;
            unsigned flavor = uniform(rng, 0, 9);
            if (flavor < 4) {
                f = random_free_poly(rng, 4, 6, 4);
            } else if (flavor < 7) {
                f = random_identity_member(rng, uniform(rng, 2, 6), 4);
            } else {
                f = random_identity_member(rng, uniform(rng, 2, 6), 4) + random_free_poly(rng, 4, 4, 2);
            }
            for (unsigned n = 2; n <= 5; ++n) {
                AlgebraHandle alg = AlgebraHandle::finite(n);
                bool rewrite_says = is_identity(f, alg);
                bool oracle_says = identity_oracle(f, alg);
                if (rewrite_says != oracle_says) {
                    detail = "disagreement at corpus index " + std::to_string(c) + ", n = " +
                             std::to_string(n) + ", f = " + f.str();
                    return false;
                }
                (rewrite_says ? identities_seen : non_identities_seen)++;
                // rewriting only moves f inside its congruence class
                if (!identity_oracle(f - normal_form(f, alg).lift(), alg)) {
                    detail = "normal form changed the evaluation class of corpus index " +
                             std::to_string(c) + " at n = " + std::to_string(n);
                    return false;
                }
            }
        }
        if (identities_seen < 50 || non_identities_seen < 50) {
            detail = "corpus poorly balanced (" + std::to_string(identities_seen) + " identities)";
            return false;
        }

        // Curated suite: the identity basis and its listed consequences.
        for (unsigned n = 2; n <= 5; ++n) {
            AlgebraHandle alg = AlgebraHandle::finite(n);
            std::vector<FreePolynomial<Rational>> curated;
            curated.push_back(leibniz_kernel());  // basis identity of degree 3
            curated.push_back(swap_chain(n));     // basis identity of degree n
            {
                std::vector<VarIndex> chain;      // consequence (i): degree n+1 chain
                for (VarIndex i = 1; i <= n + 1; ++i) chain.push_back(i);
                curated.push_back(word_poly(chain));
            }
            curated.push_back(word_poly({1, 2, 3}) - word_poly({1, 3, 2}));  // consequence (ii)
            curated.push_back(word_poly({4, 3, 1, 2}) - word_poly({4, 1, 2, 3}));  // (iii), k = 3
            {
                std::vector<VarIndex> sorted, rotated;  // consequence (iv) at degree n
                for (VarIndex i = 1; i <= n; ++i) sorted.push_back(i);
                rotated = sorted;
                std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
                curated.push_back(word_poly(rotated) - word_poly(sorted));
            }
            for (const auto& g : curated) {
                if (!is_identity(g, alg) || !identity_oracle(g, alg)) {
                    detail = "curated identity failed at n = " + std::to_string(n) + ": " + g.str();
                    return false;
                }
            }
        }

        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > 120.0) {
            detail = "runtime " + std::to_string(elapsed) + "s exceeds the 120s budget";
            return false;
        }
        detail = "500 polynomials x n in 2..5, 100% agreement (" + std::to_string(identities_seen) +
                 " identity verdicts, " + std::to_string(non_identities_seen) + " non-identity verdicts)";
        return true;
    });
}

// Criterion 2: x1 x2 ... xn - x2 x1 x3 ... xn is an identity of L_n but not
// of L_{n+1}, with an explicit nonzero evaluation as certificate.
inline CheckResult criterion_minimality_witness() {
    return run_check(2, "minimality witness for the degree-n identity (n = 2..4)",
                     [&](std::string& detail) {
        for (unsigned n = 2; n <= 4; ++n) {
            FreePolynomial<Rational> g = swap_chain(n);
            AlgebraHandle here = AlgebraHandle::finite(n);
            AlgebraHandle above = AlgebraHandle::finite(n + 1);
            if (!is_identity(g, here) || !identity_oracle(g, here)) {
                detail = "not an identity of L_" + std::to_string(n);
                return false;
            }
            if (is_identity(g, above) || identity_oracle(g, above)) {
                detail = "unexpectedly an identity of L_" + std::to_string(n + 1);
                return false;
            }
            std::map<VarIndex, Element<Rational>> witness;
            witness.emplace(1, Element<Rational>::basis(above, 2, Rational(1)));
            for (VarIndex k = 2; k <= n; ++k)
                witness.emplace(k, Element<Rational>::basis(above, 1, Rational(1)));
            Element<Rational> value = evaluate(g, witness);
            if (value.is_zero()) {
                detail = "certificate evaluation vanished on L_" + std::to_string(n + 1);
                return false;
            }
            detail += "n=" + std::to_string(n) + ": x1=e2, x2..xn=e1 evaluates to " + value.str() +
                      " in L_" + std::to_string(n + 1) + "; ";
        }
        return true;
    });
}

// Criterion 3: closed-form dimension formula equals 1 + catalog size for all
// n <= 6, m <= 4, with the spot values 3, 6, 11.
inline CheckResult criterion_dimension_formula() {
    return run_check(3, "dimension formula vs basis enumeration (n <= 6, m <= 4)",
                     [&](std::string& detail) {
        for (unsigned n = 1; n <= 6; ++n) {
            for (unsigned m = 1; m <= 4; ++m) {
                BigInt formula = dim_relatively_free(n, m);
                BigInt counted = 1 + BigInt(basis_monomials(n, m).word_count());
                if (formula != counted) {
                    detail = "mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " +
                             formula.str() + " vs " + counted.str();
                    return false;
                }
            }
        }
        if (dim_relatively_free(2, 1) != 3 || dim_relatively_free(2, 2) != 6 ||
            dim_relatively_free(3, 2) != 11) {
            detail = "spot values 3/6/11 failed";
            return false;
        }
        detail = "all 24 (n, m) pairs agree; spot values 3, 6, 11 verified";
        return true;
    });
}

// Criterion 4: c_m(L_inf) = m for m <= 8, cross-checked by enumerating the
// multilinear canonical words.
inline CheckResult criterion_codimension() {
    return run_check(4, "multilinear codimension of L_inf (m <= 8)", [&](std::string& detail) {
        AlgebraHandle inf = AlgebraHandle::infinite();
        for (unsigned m = 1; m <= 8; ++m) {
            if (multilinear_codim(inf, m) != m) {
                detail = "c_" + std::to_string(m) + " != " + std::to_string(m);
                return false;
            }
            auto words = multilinear_canonical_words(inf, m);
            if (words.size() != m) {
                detail = "enumeration count mismatch at m = " + std::to_string(m);
                return false;
            }
            for (const auto& w : words) {
                if (w.length() != m || !(detail::canonical_word(w, inf) == w)) {
                    detail = "non-canonical multilinear word at m = " + std::to_string(m);
                    return false;
                }
            }
            // The same slice inside the relatively free catalog of L_{m+1}.
            unsigned slice = 0;
            BasisCatalog cat = basis_monomials(m + 1, m);
            for (const auto& w : cat.by_degree.at(m))
                if (w.multidegree().is_multilinear() && w.multidegree().total() == m) ++slice;
            if (slice != multilinear_codim(AlgebraHandle::finite(m + 1), m) || slice != m) {
                detail = "catalog multilinear slice mismatch at m = " + std::to_string(m);
                return false;
            }
        }
        detail = "c_m = m for m = 1..8, matching the canonical word enumeration";
        return true;
    });
}

namespace detail_c5 {

// Divisor conditions under which the finite-field image equals the realized
// descriptor set: reuse the classification over F_p computed by cross_check.
inline bool equality_conditions_hold(const FreePolynomial<Rational>& f, const Classification<Rational>& cls,
                                     std::uint64_t p, unsigned n) {
    if (cls.kase == ImageCase::identity) return true;
    NormalFormPoly<Fp> fp_nf = normal_form(reduce_mod(f, p), AlgebraHandle::finite(n));
    if (fp_nf.is_zero()) return false;
    if (cls.kase == ImageCase::sum_zero) return true;
    HeadCoefficients<Fp> heads = head_coefficients(fp_nf);
    if (heads.alpha_sum.is_zero()) return false;
    for (VarIndex j : heads.linear_variables)
        if (!heads.alpha_of(j).is_zero()) return true;
    return false;
}

}  // namespace detail_c5

// Criterion 5: multilinear trichotomy. Every multilinear polynomial
// classifies as Zero, PowerIdeal(m) or PowerIdeal(m+1), and the exhaustive
// image over p in {2,3} equals the realized set whenever the construction's
// divisors stay nonzero mod p (instances are sampled to satisfy that).
inline CheckResult criterion_multilinear_trichotomy(std::uint64_t seed) {
    return run_check(5, "multilinear trichotomy with exhaustive F_p image equality (200 instances)",
                     [&](std::string& detail) {
        Rng rng(seed * 1000003ULL + 5);
        const std::vector<std::uint64_t> primes{2, 3};
        unsigned zero_cnt = 0, m_cnt = 0, m1_cnt = 0;

        for (unsigned c = 0; c < 200; ++c) {
            unsigned m = uniform(rng, 1, 3);
            unsigned n = uniform(rng, 1, 4);
            AlgebraHandle alg = AlgebraHandle::finite(n);
            // The sum-zero shape is rare in unbiased draws and collapses to an
            // identity unless n > m, so half of the eligible draws force it.
            bool want_sum_zero = m >= 2 && n >= m + 1 && rng() % 2 == 0;

            FreePolynomial<Rational> f;
            bool usable = false;
            for (unsigned attempt = 0; attempt < 500 && !usable; ++attempt) {
                f = want_sum_zero ? random_multilinear_sum_zero(rng, m) : random_multilinear(rng, m, 3);
                Classification<Rational> cls = classify_full(f, alg);
                usable = true;
                for (std::uint64_t p : primes)
                    usable = usable && detail_c5::equality_conditions_hold(f, cls, p, n);
            }
            if (!usable) {
                detail = "could not sample a divisor-clean instance";
                return false;
            }

            Classification<Rational> cls = classify_full(f, alg);
            switch (cls.kase) {
                case ImageCase::identity: ++zero_cnt; break;
                case ImageCase::linear_head:
                    if (cls.heads->total_degree != m) {
                        detail = "linear-head case with k != m";
                        return false;
                    }
                    ++m_cnt;
                    break;
                case ImageCase::sum_zero:
                    if (cls.heads->total_degree + 1 != m + 1) {
                        detail = "sum-zero case with k != m+1";
                        return false;
                    }
                    ++m1_cnt;
                    break;
                case ImageCase::cone:
                    detail = "multilinear polynomial classified as a punctured cone: " + f.str();
                    return false;
            }

            for (std::uint64_t p : primes) {
                CrossCheckReport rep = cross_check(f, n, p);
                if (!rep.ok || rep.equality != EqualityMode::exact) {
                    detail = "image mismatch: f = " + f.str() + ", n = " + std::to_string(n) +
                             ", p = " + std::to_string(p) + " (" + rep.detail + ")";
                    return false;
                }
            }
        }
        if (zero_cnt < 10 || m_cnt < 10 || m1_cnt < 10) {
            detail = "trichotomy coverage hole: " + std::to_string(zero_cnt) + "/" +
                     std::to_string(m_cnt) + "/" + std::to_string(m1_cnt);
            return false;
        }
        detail = "200 instances: " + std::to_string(zero_cnt) + " zero, " + std::to_string(m_cnt) +
                 " L^m, " + std::to_string(m1_cnt) + " L^(m+1); exact set equality at p = 2, 3";
        return true;
    });
}

// Criterion 6: homogeneous classification against the exhaustive image over
// p in {2,3,5}: inclusion always; exact equality for the sum-zero and
// linear-head cases when divisors survive mod p; the zero/nonzero-beta_d
// split for punctured cones.
inline CheckResult criterion_homogeneous_classification(std::uint64_t seed) {
    return run_check(6, "homogeneous classification vs exhaustive F_p images (100 instances)",
                     [&](std::string& detail) {
        Rng rng(seed * 1000003ULL + 6);
        const std::vector<std::uint64_t> primes{2, 3, 5};
        RationalDomain q;

        std::vector<std::pair<FreePolynomial<Rational>, unsigned>> instances;
        // Fixed coverage of every case shape.
        instances.emplace_back(parse_polynomial("x1 x2 - x2 x1", q), 3);       // sum-zero
        instances.emplace_back(parse_polynomial("x1 x2^2", q), 3);             // linear head
        instances.emplace_back(parse_polynomial("x1^2", q), 3);                // cone
        instances.emplace_back(parse_polynomial("x1^2 x2^2", q), 4);           // cone, d != d_j
        instances.emplace_back(parse_polynomial("x1(x2 x3)", q), 3);           // identity
        instances.emplace_back(parse_polynomial("x1 x2 x3 - x2 x1 x3", q), 3); // identity at n = 3
        while (instances.size() < 100) {
            unsigned m = uniform(rng, 1, 3);
            unsigned n = m == 3 ? uniform(rng, 2, 3) : uniform(rng, 1, 4);  // keeps p^(n*m) <= 10^7
            MultiDegree mdeg;
            unsigned budget = uniform(rng, m, 4);
            for (VarIndex k = 1; k <= m; ++k) mdeg.add(k, 1);
            for (unsigned extra = m; extra < budget; ++extra) mdeg.add(uniform(rng, 1, m));
            instances.emplace_back(random_multihomogeneous(rng, mdeg, 3, 3), n);
        }

        unsigned exact = 0, split = 0, skipped = 0;
        for (const auto& [f, n] : instances) {
            for (std::uint64_t p : primes) {
                CrossCheckReport rep = cross_check(f, n, p);
                if (!rep.ok) {
                    detail = "cross-check failed: f = " + f.str() + ", n = " + std::to_string(n) +
                             ", p = " + std::to_string(p) + " (" + rep.detail + ")";
                    return false;
                }
                switch (rep.equality) {
                    case EqualityMode::exact: ++exact; break;
                    case EqualityMode::split_only: ++split; break;
                    case EqualityMode::skipped_divisor: ++skipped; break;
                }
            }
        }
        if (exact == 0 || split == 0) {
            detail = "coverage hole: no exact or no split-mode checks ran";
            return false;
        }
        detail = "100 instances x p in {2,3,5}: inclusion everywhere; " + std::to_string(exact) +
                 " exact equalities, " + std::to_string(split) + " cone split checks, " +
                 std::to_string(skipped) + " skipped (divisor vanished mod p)";
        return true;
    });
}

// Criterion 7: preimage round trips. Targets sampled from realized
// descriptors must come back as assignments whose evaluation reproduces the
// target exactly; non-power cone targets must yield NeedsRoot, confirmed by
// a finite-field root search.
inline CheckResult criterion_preimage_round_trip(std::uint64_t seed) {
    return run_check(7, "preimage round trips (200 targets) and NeedsRoot confirmations",
                     [&](std::string& detail) {
        Rng rng(seed * 1000003ULL + 7);
        RationalDomain q;

        std::vector<std::pair<FreePolynomial<Rational>, AlgebraHandle>> pool;
        auto F = [](unsigned n) { return AlgebraHandle::finite(n); };
        pool.emplace_back(parse_polynomial("x1 x2 - x2 x1", q), F(3));
        pool.emplace_back(parse_polynomial("x1 x2 - x2 x1", q), F(5));
        pool.emplace_back(parse_polynomial("x1 x2", q), F(3));
        pool.emplace_back(parse_polynomial("x1 x2 x3", q), F(4));
        pool.emplace_back(parse_polynomial("x1 x2^2", q), F(4));
        pool.emplace_back(parse_polynomial("2 x1 x2^2 - 3 x2 x1 x2 + x2^2 x1", q), F(5));
        pool.emplace_back(parse_polynomial("x1^2", q), F(3));
        pool.emplace_back(parse_polynomial("x1^3", q), F(4));
        pool.emplace_back(parse_polynomial("x1 x2 x1", q), F(4));
        pool.emplace_back(parse_polynomial("x1^2 x2^2", q), F(5));
        pool.emplace_back(parse_polynomial("x1(x2 x3)", q), F(3));
        pool.emplace_back(parse_polynomial("x1 x2 - x2 x1", q), AlgebraHandle::infinite());
        pool.emplace_back(parse_polynomial("x1 x2", q), AlgebraHandle::infinite());
        pool.emplace_back(parse_polynomial("x1^2", q), AlgebraHandle::infinite());
        for (unsigned extra = 0; extra < 6; ++extra)
            pool.emplace_back(random_multilinear(rng, uniform(rng, 1, 3), 3), F(uniform(rng, 2, 5)));

        unsigned assignments = 0, zero_targets = 0;
        std::size_t which = 0;
        while (assignments < 200) {
            const auto& [f, alg] = pool[which % pool.size()];
            bool first_visit = which < pool.size();
            ++which;
            Classification<Rational> cls = classify_full(f, alg);

            std::vector<Element<Rational>> targets;
            if (first_visit) targets.push_back(Element<Rational>::zero(alg, Rational()));
            if (cls.kase != ImageCase::identity) {
                const unsigned d = cls.heads->total_degree;
                const unsigned lo = cls.descriptor.kind == ImageKind::power_ideal ? cls.descriptor.index : d;
                const unsigned hi = alg.is_finite() ? alg.dim() : lo + 3;
                for (unsigned t = 0; t < 2; ++t) {
                    if (cls.kase == ImageCase::cone) {
                        Element<Rational> u = random_element(rng, alg, d + 1, hi);
                        Rational r = random_rational(rng);
                        unsigned d_j = cls.heads->multidegree.multiplicity(cls.head);
                        u.set(d, cls.heads->alpha_sum * r.pow(d_j));  // beta_d with a rational root
                        if (!u.coeff(d).is_zero()) targets.push_back(u);
                    } else if (lo <= hi) {
                        Element<Rational> u = random_element(rng, alg, lo, hi);
                        u.set(lo + rng() % (hi - lo + 1), random_rational(rng));  // ensure nonzero
                        targets.push_back(u);
                    }
                }
            }

            for (const auto& target : targets) {
                PreimageResult<Rational> res = preimage(f, alg, target);
                auto* a = std::get_if<PreimageAssignment<Rational>>(&res);
                if (!a) {
                    detail = "expected an assignment for f = " + f.str() + ", target = " + target.str();
                    return false;
                }
                if (!target.is_zero() || !f.is_zero()) {
                    if (!a->assignment.empty() && !(evaluate(f, a->assignment) == target)) {
                        detail = "round trip failed for f = " + f.str() + ", target = " + target.str();
                        return false;
                    }
                }
                ++assignments;
                if (target.is_zero()) ++zero_targets;
            }
        }

        // NeedsRoot: beta_d / sum(alpha) = 2 is not a rational d_j-th power;
        // a finite-field root search must then produce a witness.
        std::vector<std::pair<FreePolynomial<Rational>, AlgebraHandle>> cone_pool;
        cone_pool.emplace_back(parse_polynomial("x1^2", q), F(3));
        cone_pool.emplace_back(parse_polynomial("x1^3", q), F(4));
        cone_pool.emplace_back(parse_polynomial("x1 x2 x1", q), F(4));
        cone_pool.emplace_back(parse_polynomial("x1^2 x2^2", q), F(5));
        cone_pool.emplace_back(parse_polynomial("x1^2", q), AlgebraHandle::infinite());
        unsigned confirmed = 0;
        for (const auto& [f, alg] : cone_pool) {
            Classification<Rational> cls = classify_full(f, alg);
            const unsigned d = cls.heads->total_degree;
            Element<Rational> target = Element<Rational>::zero(alg, Rational());
            target.set(d, cls.heads->alpha_sum * Rational(2));
            if (alg.in_range(d + 1)) target.set(d + 1, Rational(1));

            PreimageResult<Rational> res = preimage(f, alg, target);
            auto* nr = std::get_if<PreimageNeedsRoot<Rational>>(&res);
            unsigned d_j = cls.heads->multidegree.multiplicity(cls.head);
            if (!nr || nr->exponent != d_j || !(nr->value == Rational(2))) {
                detail = "expected NeedsRoot(" + std::to_string(d_j) + ", 2) for f = " + f.str();
                return false;
            }
            if (!alg.is_finite()) continue;  // F_p confirmation runs in the finite model
            bool found = false;
            for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
                FreePolynomial<Fp> fp = reduce_mod(f, p);
                Element<Fp> tp = reduce_mod(target, p);
                PreimageResult<Fp> rp = preimage(fp, alg, tp);
                if (auto* ap = std::get_if<PreimageAssignment<Fp>>(&rp)) {
                    if (!(evaluate(fp, ap->assignment) == tp)) {
                        detail = "finite-field witness failed to evaluate for f = " + f.str();
                        return false;
                    }
                    found = true;
                    break;
                }
            }
            if (!found) {
                detail = "no prime up to 23 yielded a root for f = " + f.str();
                return false;
            }
            ++confirmed;
        }

        detail = std::to_string(assignments) + " exact round trips (" + std::to_string(zero_targets) +
                 " zero targets); " + std::to_string(confirmed) + " NeedsRoot cases confirmed by F_p root search";
        return true;
    });
}

// Criterion 8: closed-form evaluation. right_power must match the product
// closed form coefficientwise (500 cases), and structural evaluation of a
// multihomogeneous polynomial must match the evaluation closed form
// (200 cases). Zero tolerance.
inline CheckResult criterion_closed_form_evaluation(std::uint64_t seed) {
    return run_check(8, "closed-form evaluation checks (500 + 200 cases)", [&](std::string& detail) {
        Rng rng(seed * 1000003ULL + 8);

        for (unsigned c = 0; c < 500; ++c) {
            unsigned n = uniform(rng, 2, 6);
            AlgebraHandle alg = AlgebraHandle::finite(n);
            Element<Rational> z = random_element(rng, alg, 1, n);
            Element<Rational> w = random_element(rng, alg, 1, n);
            if (rng() % 3 == 0) w.set(1, random_rational(rng));  // bias towards nonzero b_1
            unsigned s = uniform(rng, 1, n - 1);
            if (!(right_power(z, w, s) == right_power_closed_form(z, w, s))) {
                detail = "right_power mismatch at case " + std::to_string(c);
                return false;
            }
            if (!right_power(z, w, n).is_zero() || !right_power(z, w, n + 1).is_zero()) {
                detail = "right_power did not vanish for s >= n";
                return false;
            }
        }

        unsigned formula_checked = 0;
        for (unsigned c = 0; c < 200; ++c) {
            unsigned m = uniform(rng, 1, 3);
            MultiDegree mdeg;
            unsigned budget = uniform(rng, m, 4);
            for (VarIndex k = 1; k <= m; ++k) mdeg.add(k, 1);
            for (unsigned extra = m; extra < budget; ++extra) mdeg.add(uniform(rng, 1, m));
            unsigned d = mdeg.total();

            bool infinite_case = rng() % 5 == 0;
            AlgebraHandle alg =
                infinite_case ? AlgebraHandle::infinite() : AlgebraHandle::finite(uniform(rng, d, 6));
            FreePolynomial<Rational> f = random_multihomogeneous(rng, mdeg, 3, 3);

            std::map<VarIndex, Element<Rational>> assign;
            unsigned span = alg.is_finite() ? alg.dim() : d + 2;
            for (VarIndex k = 1; k <= m; ++k) {
                Element<Rational> v = random_element(rng, alg, 1, span);
                if (rng() % 2 == 0) v.set(1, random_rational(rng));
                assign.emplace(k, v);
            }

            Element<Rational> direct = evaluate(f, assign);
            NormalFormPoly<Rational> nf = normal_form(f, alg);
            if (nf.is_zero()) {
                if (!direct.is_zero()) {
                    detail = "identity with nonzero evaluation at case " + std::to_string(c);
                    return false;
                }
                continue;
            }
            Element<Rational> formula = evaluation_closed_form(head_coefficients(nf), assign, alg);
            if (!(direct == formula)) {
                detail = "evaluation formula mismatch: f = " + f.str() + " on " + alg.str();
                return false;
            }
            ++formula_checked;
        }

        detail = "500 right-power cases (n <= 6) and 200 evaluation cases (" +
                 std::to_string(formula_checked) + " against the closed form) matched exactly";
        return true;
    });
}

// Criterion 9: resolve the punctured-cone witness exponent. Both readings
// (the head multiplicity d_j and the total degree d) are constructed and
// checked against exhaustive finite-field images; the run fails unless
// exactly the d_j reading survives.
inline CheckResult criterion_root_exponent(std::uint64_t seed) {
    return run_check(9, "punctured-cone root exponent resolution (d_j vs d)", [&](std::string& detail) {
        Rng rng(seed * 1000003ULL + 9);
        RationalDomain q;

        struct Instance {
            std::string f_text;
            unsigned n;
            std::vector<std::uint64_t> primes;
        };
        std::vector<Instance> instances{
            {"x1^2", 2, {3, 5}},        {"x1^2", 3, {3, 5}},      {"x1^3", 3, {3, 5}},
            {"x1^3", 4, {3, 5}},        {"x1^4", 4, {3, 5}},      {"x1 x2 x1", 3, {3, 5}},
            {"x1 x2 x1", 4, {3, 5}},    {"x1 x1 x2 x1", 4, {3, 5}}, {"x1^2 x2^2", 4, {3, 5}},
            {"x1^2 x2^2 + x2^2 x1^2", 4, {3, 5}}, {"x1^2 x2^3", 5, {3}}, {"x1^3 x2^2", 5, {3}},
        };

        struct Tally {
            unsigned sound = 0, unsound = 0, no_root = 0, constructive_missed = 0;
        };
        Tally dj_tally, d_tally;
        unsigned pairs = 0;

        for (const auto& inst : instances) {
            FreePolynomial<Rational> f = parse_polynomial(inst.f_text, q);
            AlgebraHandle alg = AlgebraHandle::finite(inst.n);
            for (std::uint64_t p : inst.primes) {
                ++pairs;
                FreePolynomial<Fp> fp = reduce_mod(f, p);
                Classification<Fp> cls = classify_full(fp, alg);
                if (cls.kase != ImageCase::cone) {
                    detail = inst.f_text + " mod " + std::to_string(p) + " left the cone case";
                    return false;
                }
                const auto& heads = *cls.heads;
                const unsigned d = heads.total_degree;
                const unsigned d_j = heads.multidegree.multiplicity(cls.head);
                const Fp alpha_j = heads.alpha_of(cls.head);

                auto attempt = [&](const Element<Fp>& target, unsigned exponent) -> int {
                    // 1 sound witness, 0 no root, -1 witness that fails to evaluate
                    Fp beta_d = target.coeff(d);
                    Fp root_target = beta_d / heads.alpha_sum;
                    auto root = kth_root(root_target, exponent);
                    if (!root) return 0;
                    Fp a1 = *root;
                    Fp tail_div = alpha_j * power(a1, d_j - 1);
                    std::map<VarIndex, Element<Fp>> assign;
                    Element<Fp> vj = Element<Fp>::zero(alg, Fp(0, p));
                    vj.set(1, a1);
                    for (unsigned i = 2; i + d - 1 <= inst.n; ++i)
                        vj.set(i, target.coeff(i + d - 1) / tail_div);
                    for (VarIndex k : heads.multidegree.variables())
                        assign.emplace(k, k == cls.head ? vj : Element<Fp>::basis(alg, 1, Fp(1, p)));
                    return evaluate(fp, assign) == target ? 1 : -1;
                };

                // (A) every nonzero exhaustive image point with support at d.
                ImageSet img = brute_force_image(fp, inst.n, p);
                for (std::uint64_t code : img.codes()) {
                    if (code == 0) continue;
                    Element<Fp> u = img.decode(code);
                    if (!u.min_support() || *u.min_support() != d) continue;
                    for (unsigned e : {d_j, d}) {
                        Tally& tally = e == d_j ? dj_tally : d_tally;
                        switch (attempt(u, e)) {
                            case 1: ++tally.sound; break;
                            case 0: ++tally.no_root; break;
                            default: ++tally.unsound; break;
                        }
                        if (d_j == d) break;  // one shared attempt when the readings coincide
                    }
                }

                // (B) targets produced by the single-variable substitution
                // itself must be reconstructible under the correct reading.
                for (unsigned trial = 0; trial < 30; ++trial) {
                    std::map<VarIndex, Element<Fp>> sample;
                    Element<Fp> vj = Element<Fp>::zero(alg, Fp(0, p));
                    vj.set(1, Fp(uniform(rng, 1, static_cast<unsigned>(p - 1)), p));
                    for (unsigned i = 2; i <= inst.n; ++i)
                        if (rng() % 2 == 0) vj.set(i, Fp(uniform(rng, 0, static_cast<unsigned>(p - 1)), p));
                    for (VarIndex k : heads.multidegree.variables())
                        sample.emplace(k, k == cls.head ? vj : Element<Fp>::basis(alg, 1, Fp(1, p)));
                    Element<Fp> u = evaluate(fp, sample);
                    if (u.is_zero()) continue;
                    if (!img.contains(u)) {
                        detail = "sampled evaluation missing from the exhaustive image";
                        return false;
                    }
                    if (attempt(u, d_j) != 1) ++dj_tally.constructive_missed;
                    if (d_j != d && attempt(u, d) != 1) ++d_tally.constructive_missed;
                }
            }
        }

        const bool dj_valid = dj_tally.unsound == 0 && dj_tally.constructive_missed == 0 && dj_tally.sound > 0;
        const bool d_valid = d_tally.unsound == 0 && d_tally.constructive_missed == 0;
        if (!dj_valid || d_valid) {
            detail = "resolution failed: d_j reading " + std::string(dj_valid ? "valid" : "INVALID") +
                     " (sound " + std::to_string(dj_tally.sound) + ", unsound " +
                     std::to_string(dj_tally.unsound) + ", missed " +
                     std::to_string(dj_tally.constructive_missed) + "); d reading " +
                     (d_valid ? "also valid - inconsistent" : "invalid") + " (unsound " +
                     std::to_string(d_tally.unsound) + ", missed " +
                     std::to_string(d_tally.constructive_missed) + ")";
            return false;
        }
        detail = "exponent resolved to the head multiplicity d_j over " + std::to_string(pairs) +
                 " (instance, prime) pairs: d_j sound " + std::to_string(dj_tally.sound) +
                 "/unsound 0; total-degree reading refuted (" + std::to_string(d_tally.unsound) +
                 " unsound witnesses, " + std::to_string(d_tally.constructive_missed) +
                 " constructive targets missed)";
        return true;
    });
}

inline std::vector<CheckResult> run_all(std::uint64_t seed, const std::vector<int>& only = {}) {
    auto wanted = [&](int id) {
        return only.empty() || std::find(only.begin(), only.end(), id) != only.end();
    };
    std::vector<CheckResult> out;
    if (wanted(1)) out.push_back(criterion_identity_concordance(seed));
    if (wanted(2)) out.push_back(criterion_minimality_witness());
    if (wanted(3)) out.push_back(criterion_dimension_formula());
    if (wanted(4)) out.push_back(criterion_codimension());
    if (wanted(5)) out.push_back(criterion_multilinear_trichotomy(seed));
    if (wanted(6)) out.push_back(criterion_homogeneous_classification(seed));
    if (wanted(7)) out.push_back(criterion_preimage_round_trip(seed));
    if (wanted(8)) out.push_back(criterion_closed_form_evaluation(seed));
    if (wanted(9)) out.push_back(criterion_root_exponent(seed));
    return out;
}

}  // namespace nullfil::selftest
