#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include "errors.hpp"

namespace nullfil {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Exact rational scalar.
//
// Canonical form is maintained by the underlying representation:
// gcd(|num|, den) = 1, den > 0, zero is 0/1. Division by zero is an error,
// never a value.
// ---------------------------------------------------------------------------
class Rational {
public:
    Rational() = default;  // zero
    Rational(long long v) : v_(v) {}
    explicit Rational(BigInt v) : v_(std::move(v)) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den.is_zero()) throw error("division_by_zero", "rational with zero denominator");
        v_ = BigRat(num);
        v_ /= BigRat(den);  // canonicalizes sign and gcd
    }

    explicit Rational(BigRat v) : v_(std::move(v)) {}

    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return v_ < 0; }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }
    bool is_integer() const { return denominator() == 1; }

    Rational operator+(const Rational& o) const { return Rational(BigRat(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(BigRat(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(BigRat(v_ * o.v_)); }
    Rational operator-() const { return Rational(BigRat(-v_)); }

    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw error("division_by_zero", "rational division by zero");
        return Rational(BigRat(v_ / o.v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inverse() const { return one() / *this; }
    Rational abs() const { return is_negative() ? -*this : *this; }

    Rational pow(unsigned e) const {
        Rational acc = one();
        for (unsigned i = 0; i < e; ++i) acc *= *this;
        return acc;
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    std::string str() const { return v_.str(); }

    const BigRat& value() const { return v_; }

private:
    BigRat v_;
};

// ---------------------------------------------------------------------------
// Prime field scalar: residue modulo p, with 0 <= residue < p.
//
// Each value carries its modulus; operations on mismatched moduli are an
// error, not a coercion. Primality of p is validated where domains are
// created (FpDomain), not on every element.
// ---------------------------------------------------------------------------
class Fp {
public:
    Fp(std::uint64_t value, std::uint64_t p) : p_(p) {
        if (p < 2) throw error("bad_modulus", "modulus must be at least 2");
        r_ = value % p;
    }

    static Fp from_signed(long long v, std::uint64_t p) {
        Fp out(0, p);
        long long m = static_cast<long long>(p);
        long long r = v % m;
        if (r < 0) r += m;
        out.r_ = static_cast<std::uint64_t>(r);
        return out;
    }

    std::uint64_t residue() const { return r_; }
    std::uint64_t modulus() const { return p_; }

    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1 % p_, p_); }

    bool is_zero() const { return r_ == 0; }
    bool is_one() const { return r_ == 1 % p_; }
    bool is_negative() const { return false; }

    Fp operator+(const Fp& o) const { check(o); return Fp(r_ + o.r_ >= p_ ? r_ + o.r_ - p_ : r_ + o.r_, p_); }
    Fp operator-(const Fp& o) const { check(o); return Fp(r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_, p_); }
    Fp operator*(const Fp& o) const { check(o); return Fp((r_ * o.r_) % p_, p_); }
    Fp operator-() const { return Fp(r_ == 0 ? 0 : p_ - r_, p_); }

    Fp operator/(const Fp& o) const { check(o); return *this * o.inverse(); }

    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

    Fp inverse() const {
        if (r_ == 0) throw error("division_by_zero", "inverse of zero in F_" + std::to_string(p_));
        // extended Euclid on (r_, p_)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(r_);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return Fp(static_cast<std::uint64_t>(t), p_);
    }

    Fp pow(std::uint64_t e) const {
        std::uint64_t base = r_, acc = 1 % p_;
        while (e) {
            if (e & 1) acc = (acc * base) % p_;
            base = (base * base) % p_;
            e >>= 1;
        }
        return Fp(acc, p_);
    }

    bool operator==(const Fp& o) const { return r_ == o.r_ && p_ == o.p_; }

    std::string str() const { return std::to_string(r_); }

private:
    void check(const Fp& o) const {
        if (p_ != o.p_)
            throw error("modulus_mismatch",
                        "mixed moduli " + std::to_string(p_) + " and " + std::to_string(o.p_));
    }

    std::uint64_t r_;
    std::uint64_t p_;
};

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Scalar concepts. Ring scalars are enough for coefficient tables and
// evaluation; field scalars are required wherever the constructions divide.
// ---------------------------------------------------------------------------
template <class S>
concept RingScalar =
    std::copy_constructible<S> && std::is_copy_assignable_v<S> &&
    requires(const S a, const S b) {
        { a + b } -> std::same_as<S>;
        { a - b } -> std::same_as<S>;
        { a * b } -> std::same_as<S>;
        { -a } -> std::same_as<S>;
        { a == b } -> std::convertible_to<bool>;
        { a.is_zero() } -> std::same_as<bool>;
        { a.is_one() } -> std::same_as<bool>;
        { a.is_negative() } -> std::same_as<bool>;
        { a.zero() } -> std::same_as<S>;
        { a.one() } -> std::same_as<S>;
        { a.str() } -> std::same_as<std::string>;
    };

template <class S>
concept FieldScalar = RingScalar<S> && requires(const S a, const S b) {
    { a / b } -> std::same_as<S>;
};

// ---------------------------------------------------------------------------
// Scalar domains: a computation session fixes one domain; the parser and the
// CLI build scalars through it. Mixing domains is an error, not a coercion.
// ---------------------------------------------------------------------------
struct RationalDomain {
    using scalar_type = Rational;

    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational from_integer(const BigInt& n) const { return Rational(n); }
    Rational from_ratio(const BigInt& num, const BigInt& den) const { return Rational(num, den); }
    std::string name() const { return "q"; }
};

struct FpDomain {
    explicit FpDomain(std::uint64_t p) : p_(p) {
        if (!is_prime(p)) throw error("nonprime_modulus", std::to_string(p) + " is not prime");
        if (p >= (std::uint64_t{1} << 31)) throw error("bad_modulus", "modulus too large");
    }

    using scalar_type = Fp;

    std::uint64_t modulus() const { return p_; }
    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }

    Fp from_integer(const BigInt& n) const {
        BigInt r = n % p_;
        if (r < 0) r += p_;
        return Fp(r.convert_to<std::uint64_t>(), p_);
    }

    Fp from_ratio(const BigInt& num, const BigInt& den) const {
        Fp d = from_integer(den);
        if (d.is_zero())
            throw error("division_by_zero", "denominator divisible by " + std::to_string(p_));
        return from_integer(num) / d;
    }

    std::string name() const { return "fp:" + std::to_string(p_); }

private:
    std::uint64_t p_;
};

template <class D>
concept ScalarDomain = requires(const D d, const BigInt n) {
    typename D::scalar_type;
    { d.zero() } -> std::same_as<typename D::scalar_type>;
    { d.one() } -> std::same_as<typename D::scalar_type>;
    { d.from_integer(n) } -> std::same_as<typename D::scalar_type>;
    { d.from_ratio(n, n) } -> std::same_as<typename D::scalar_type>;
};

}  // namespace nullfil
