#include "greengrade/laurent.hpp"

#include <sstream>

namespace greengrade {

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_)
        r.c_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.c_) {
        mpz_class& slot = r.c_[e];
        slot += c;
        if (slot == 0)
            r.c_.erase(e);
    }
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) {
            mpz_class& slot = r.c_[e1 + e2];
            slot += c1 * c2;
            if (slot == 0)
                r.c_.erase(e1 + e2);
        }
    return r;
}

mpz_class LaurentPoly::eval_one() const {
    mpz_class s = 0;
    for (const auto& [e, c] : c_)
        s += c;
    return s;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero())
        throw std::invalid_argument("division by zero polynomial");
    if (is_zero())
        return {};
    // long division from the top; an exact quotient has min exponent
    // min_exp(f) - min_exp(g), which bounds the loop
    const long qexp_floor = min_exp() - divisor.min_exp();
    const long dlead_exp = divisor.max_exp();
    const mpz_class dlead = divisor.c_.rbegin()->second;
    LaurentPoly rem = *this;
    LaurentPoly quot;
    while (!rem.is_zero()) {
        const long qexp = rem.max_exp() - dlead_exp;
        if (qexp < qexp_floor)
            throw std::invalid_argument("inexact polynomial division");
        const mpz_class lead = rem.c_.rbegin()->second;
        if (lead % dlead != 0)
            throw std::invalid_argument("inexact polynomial division");
        const LaurentPoly term = q_power(qexp, lead / dlead);
        quot += term;
        rem -= term * divisor;
    }
    return quot;
}

std::string LaurentPoly::str() const {
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
        mpz_class a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1)
                os << a.get_str() << "*";
            os << "q";
            if (e != 1)
                os << "^" << e;
        }
    }
    return os.str();
}

} // namespace greengrade
