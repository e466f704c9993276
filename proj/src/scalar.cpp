#include "greengrade/scalar.hpp"

namespace greengrade {

void Scalar::reduce() {
    v_.canonicalize();
    if (p_ == 0)
        return;
    if (v_.get_den() != 1) {
        // clear the denominator inside F_p
        mpz_class den = v_.get_den();
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t()) == 0)
            throw std::invalid_argument("denominator not invertible mod p");
        v_ = mpq_class(v_.get_num() * inv);
    }
    mpz_class r = v_.get_num() % p_;
    if (r < 0)
        r += p_;
    v_ = mpq_class(r);
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw std::invalid_argument("division by zero in exact field");
    if (p_ == 0)
        return Scalar(1 / v_, field());
    mpz_class inv;
    mpz_class n = v_.get_num();
    if (mpz_invert(inv.get_mpz_t(), n.get_mpz_t(), mpz_class(p_).get_mpz_t()) == 0)
        throw std::invalid_argument("element not invertible mod p");
    return Scalar(mpq_class(inv), field());
}

std::string Scalar::str() const {
    return v_.get_str();
}

Scalar Scalar::parse(const std::string& text, Field f) {
    if (text.empty())
        throw std::invalid_argument("empty scalar literal");
    try {
        mpq_class v(text);
        v.canonicalize();
        return Scalar(v, f);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad scalar literal: " + text);
    }
}

} // namespace greengrade
