#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace greengrade {

/// Coefficient field descriptor: rationals (p == 0) or the prime field F_p.
struct Field {
    long p = 0;

    static Field rationals() { return Field{0}; }
    static Field prime(long p) {
        if (p < 2)
            throw std::invalid_argument("prime field order must be >= 2");
        return Field{p};
    }
    bool operator==(const Field&) const = default;
};

inline constexpr long kDefaultPrime = 32003;

/// Element of an exact field: a rational number or a residue mod p.
/// All arithmetic is exact; division by zero throws.
class Scalar {
public:
    Scalar() : v_(0), p_(0) {}
    explicit Scalar(long n, Field f = Field::rationals()) : v_(n), p_(f.p) { reduce(); }
    Scalar(const mpq_class& v, Field f = Field::rationals()) : v_(v), p_(f.p) { reduce(); }

    static Scalar zero(Field f = Field::rationals()) { return Scalar(0, f); }
    static Scalar one(Field f = Field::rationals()) { return Scalar(1, f); }

    Field field() const { return Field{p_}; }
    bool is_zero() const { return v_ == 0; }
    const mpq_class& value() const { return v_; }

    Scalar operator-() const { return Scalar(-v_, field()); }

    Scalar operator+(const Scalar& o) const { match(o); return Scalar(v_ + o.v_, field()); }
    Scalar operator-(const Scalar& o) const { match(o); return Scalar(v_ - o.v_, field()); }
    Scalar operator*(const Scalar& o) const { match(o); return Scalar(v_ * o.v_, field()); }
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const { match(o); return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

    /// Parses "a" or "a/b".
    static Scalar parse(const std::string& text, Field f = Field::rationals());

private:
    void match(const Scalar& o) const {
        if (p_ != o.p_)
            throw std::invalid_argument("scalar field mismatch");
    }
    void reduce();

    mpq_class v_;
    long p_;
};

} // namespace greengrade
