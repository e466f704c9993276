#pragma once

#include <gmpxx.h>
#include <map>
#include <stdexcept>
#include <string>

namespace greengrade {

/// Integer Laurent polynomial in q. Stored sparsely; no zero coefficient
/// is ever kept, so the zero polynomial is the empty map.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long constant) { if (constant != 0) c_[0] = constant; }
    LaurentPoly(const mpz_class& constant) { if (constant != 0) c_[0] = constant; }

    static LaurentPoly q_power(long exp, mpz_class coeff = 1) {
        LaurentPoly f;
        if (coeff != 0)
            f.c_[exp] = std::move(coeff);
        return f;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<long, mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(long exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? mpz_class(0) : it->second;
    }
    long min_exp() const { require_nonzero(); return c_.begin()->first; }
    long max_exp() const { require_nonzero(); return c_.rbegin()->first; }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

    /// Evaluation at q = 1, i.e. the coefficient sum.
    mpz_class eval_one() const;

    /// Exact division; throws if the divisor does not divide exactly.
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    /// Golden-file rendering: increasing exponents, e.g. "1 + q^3 + 2*q^5",
    /// negative exponents as "q^-2".
    std::string str() const;

private:
    void require_nonzero() const {
        if (c_.empty())
            throw std::logic_error("exponent of zero polynomial");
    }
    std::map<long, mpz_class> c_;
};

} // namespace greengrade
