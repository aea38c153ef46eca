#include "cyclotome/bigint.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

#include "cyclotome/errors.hpp"

namespace cyclotome {

namespace {

// mpz add/sub of a signed 64-bit value, INT64_MIN included.
void mpz_add_signed(mpz_ptr rop, mpz_srcptr a, std::int64_t s, bool subtract) {
    const std::uint64_t mag = s < 0 ? -static_cast<std::uint64_t>(s) : static_cast<std::uint64_t>(s);
    const bool negative = s < 0;
    if (negative != subtract)
        mpz_sub_ui(rop, a, mag);
    else
        mpz_add_ui(rop, a, mag);
}

}  // namespace

BigInt::BigInt(const std::string& decimal) {
    mpz_t z;
    if (mpz_init_set_str(z, decimal.c_str(), 10) != 0) {
        mpz_clear(z);
        throw std::invalid_argument("BigInt: malformed decimal string '" + decimal + "'");
    }
    *this = from_mpz(z);
    mpz_clear(z);
}

std::int64_t BigInt::to_int64() const {
    if (big_) throw std::overflow_error("BigInt: value exceeds int64 range");
    return small_;
}

BigInt& BigInt::add_slow(const BigInt& o, bool subtract) {
    if (!big_) promote();
    if (o.big_) {
        if (subtract)
            mpz_sub(big_, big_, o.big_);
        else
            mpz_add(big_, big_, o.big_);
    } else {
        mpz_add_signed(big_, big_, o.small_, subtract);
    }
    demote_if_small();
    return *this;
}

BigInt& BigInt::mul_slow(const BigInt& o) {
    if (!big_) promote();
    if (o.big_)
        mpz_mul(big_, big_, o.big_);
    else
        mpz_mul_si(big_, big_, o.small_);
    demote_if_small();
    return *this;
}

BigInt& BigInt::add_mul_slow(const BigInt& a, const BigInt& b) {
    BigInt p(a);
    p *= b;
    return *this += p;
}

BigInt& BigInt::sub_mul_slow(const BigInt& a, const BigInt& b) {
    BigInt p(a);
    p *= b;
    return *this -= p;
}

BigInt BigInt::div_exact(const BigInt& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("BigInt: division by zero");
    if (!big_ && !divisor.big_) {
        if (!(small_ == INT64_MIN && divisor.small_ == -1)) {
            if (small_ % divisor.small_ != 0)
                throw NotDivisible("BigInt: inexact integer division");
            return BigInt(small_ / divisor.small_);
        }
    }
    mpz_t n, d, q, r;
    mpz_init(n);
    mpz_init(d);
    mpz_init(q);
    mpz_init(r);
    assign_to(n);
    divisor.assign_to(d);
    mpz_tdiv_qr(q, r, n, d);
    const bool exact = mpz_sgn(r) == 0;
    BigInt result = from_mpz(q);
    mpz_clear(n);
    mpz_clear(d);
    mpz_clear(q);
    mpz_clear(r);
    if (!exact) throw NotDivisible("BigInt: inexact integer division");
    return result;
}

std::string BigInt::to_string() const {
    if (!big_) return std::to_string(small_);
    std::vector<char> buf(mpz_sizeinbase(big_, 10) + 2);
    mpz_get_str(buf.data(), 10, big_);
    return std::string(buf.data());
}

BigInt BigInt::pow(const BigInt& base, unsigned long exp) {
    mpz_t b, r;
    mpz_init(b);
    mpz_init(r);
    base.assign_to(b);
    mpz_pow_ui(r, b, exp);
    BigInt out = from_mpz(r);
    mpz_clear(b);
    mpz_clear(r);
    return out;
}

BigInt BigInt::binomial(unsigned long n, unsigned long k) {
    mpz_t r;
    mpz_init(r);
    mpz_bin_uiui(r, n, k);
    BigInt out = from_mpz(r);
    mpz_clear(r);
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace cyclotome
