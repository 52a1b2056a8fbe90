#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "qpr/errors.hpp"

namespace qpr {

enum class FieldKind { Rationals, PrimeField };

/// Field descriptor: the rationals, or the prime field GF(p) with p < 2^31.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint32_t p = 0; // modulus, nonzero iff kind == PrimeField

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(std::uint32_t p); // validates primality and range
    static FieldSpec parse(std::string_view tag); // "Q" or "F<p>"

    std::uint32_t characteristic() const { return p; }
    std::string str() const;

    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t m);

/// Rational number in lowest terms with positive denominator. Equality and
/// the zero test are exact representation comparisons.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rational parse(std::string_view text);

    bool is_zero() const { return sgn(v_) == 0; }
    Rational inv() const; // throws DomainError on zero
    std::string str() const;
    const mpq_class& value() const { return v_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ + b.v_), raw_t{});
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ - b.v_), raw_t{});
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ * b.v_), raw_t{});
    }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }
    Rational operator-() const { return Rational(mpq_class(-v_), raw_t{}); }
    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

  private:
    // GMP's mpq arithmetic keeps canonical operands canonical; the raw tag
    // skips the redundant gcd pass on such results.
    struct raw_t {};
    Rational(mpq_class v, raw_t) : v_(std::move(v)) {}

    mpq_class v_;
};

/// Element of GF(p): residue in [0, p). Every element carries its modulus;
/// mixing moduli is a DomainError.
class Fp {
  public:
    Fp() = default; // placeholder with p == 0, unusable in arithmetic
    Fp(std::int64_t value, std::uint32_t p);

    static Fp parse(std::string_view text, std::uint32_t p);

    std::uint32_t residue() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    Fp inv() const; // throws DomainError on zero
    std::string str() const { return std::to_string(v_); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        check_same(a, b);
        std::uint64_t s = std::uint64_t(a.v_) + b.v_;
        return Fp::make(s >= a.p_ ? std::uint32_t(s - a.p_) : std::uint32_t(s), a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        check_same(a, b);
        return Fp::make(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        check_same(a, b);
        return Fp::make(std::uint32_t((std::uint64_t(a.v_) * b.v_) % a.p_), a.p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
    Fp operator-() const { return Fp::make(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  private:
    static Fp make(std::uint32_t v, std::uint32_t p) {
        Fp r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }
    static void check_same(const Fp& a, const Fp& b);

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 0;
};

/// Runtime scalar for field-agnostic layers (file parsing, CLI).
using Scalar = std::variant<Rational, Fp>;

Scalar scalar_parse(std::string_view text, const FieldSpec& field);
std::string scalar_str(const Scalar& s);

template <class S> S field_zero(const FieldSpec& f);
template <class S> S field_one(const FieldSpec& f);
template <class S> S field_from_int(std::int64_t n, const FieldSpec& f);
template <class S> S field_parse(std::string_view text, const FieldSpec& f);

template <> inline Rational field_zero<Rational>(const FieldSpec&) { return Rational(); }
template <> inline Rational field_one<Rational>(const FieldSpec&) { return Rational(1L); }
template <> inline Rational field_from_int<Rational>(std::int64_t n, const FieldSpec&) {
    return Rational(static_cast<long>(n));
}
template <> inline Rational field_parse<Rational>(std::string_view text, const FieldSpec&) {
    return Rational::parse(text);
}
template <> inline Fp field_zero<Fp>(const FieldSpec& f) { return Fp(0, f.p); }
template <> inline Fp field_one<Fp>(const FieldSpec& f) { return Fp(1, f.p); }
template <> inline Fp field_from_int<Fp>(std::int64_t n, const FieldSpec& f) { return Fp(n, f.p); }
template <> inline Fp field_parse<Fp>(std::string_view text, const FieldSpec& f) {
    return Fp::parse(text, f.p);
}

} // namespace qpr
