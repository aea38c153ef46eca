#ifndef CYCLOTOME_BIGINT_HPP
#define CYCLOTOME_BIGINT_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace cyclotome {

/// Signed integer with an overflow-checked int64 fast path and GMP fallback.
///
/// Invariant: when big_ != nullptr the value lives in *big_ and does not fit
/// int64; otherwise it lives in small_. Coefficient arithmetic in the scan
/// loops stays on the fast path; subset products of divisor polynomials can
/// genuinely exceed 64 bits and promote.
class BigInt {
  public:
    BigInt() noexcept = default;
    BigInt(long long v) noexcept : small_(v) {}
    BigInt(int v) noexcept : small_(v) {}
    BigInt(long v) noexcept : small_(v) {}
    BigInt(unsigned long long v) {
        if (v <= static_cast<unsigned long long>(INT64_MAX)) {
            small_ = static_cast<std::int64_t>(v);
        } else {
            big_ = new_mpz();
            mpz_import(big_, 1, 1, sizeof(v), 0, 0, &v);
        }
    }
    explicit BigInt(const std::string& decimal);

    BigInt(const BigInt& o) : small_(o.small_) {
        if (o.big_) {
            big_ = new_mpz();
            mpz_set(big_, o.big_);
        }
    }
    BigInt(BigInt&& o) noexcept : small_(o.small_), big_(o.big_) { o.big_ = nullptr; }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) {
            if (o.big_) {
                if (!big_) big_ = new_mpz();
                mpz_set(big_, o.big_);
            } else {
                release();
                small_ = o.small_;
            }
        }
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        if (this != &o) {
            release();
            small_ = o.small_;
            big_ = o.big_;
            o.big_ = nullptr;
        }
        return *this;
    }
    ~BigInt() { release(); }

    bool fits_int64() const noexcept { return big_ == nullptr; }
    std::int64_t to_int64_unchecked() const noexcept { return small_; }
    /// Throws std::overflow_error when the value does not fit.
    std::int64_t to_int64() const;
    double to_double() const noexcept { return big_ ? mpz_get_d(big_) : static_cast<double>(small_); }

    bool is_zero() const noexcept { return !big_ && small_ == 0; }
    int sign() const noexcept {
        if (big_) return mpz_sgn(big_);
        return small_ < 0 ? -1 : small_ > 0 ? 1 : 0;
    }

    BigInt& operator+=(const BigInt& o) {
        if (!big_ && !o.big_) {
            std::int64_t r;
            if (!__builtin_add_overflow(small_, o.small_, &r)) {
                small_ = r;
                return *this;
            }
        }
        return add_slow(o, false);
    }
    BigInt& operator-=(const BigInt& o) {
        if (!big_ && !o.big_) {
            std::int64_t r;
            if (!__builtin_sub_overflow(small_, o.small_, &r)) {
                small_ = r;
                return *this;
            }
        }
        return add_slow(o, true);
    }
    BigInt& operator*=(const BigInt& o) {
        if (!big_ && !o.big_) {
            std::int64_t r;
            if (!__builtin_mul_overflow(small_, o.small_, &r)) {
                small_ = r;
                return *this;
            }
        }
        return mul_slow(o);
    }

    /// *this += a * b without a temporary on the fast path.
    BigInt& add_mul(const BigInt& a, const BigInt& b) {
        if (!big_ && !a.big_ && !b.big_) {
            std::int64_t p, r;
            if (!__builtin_mul_overflow(a.small_, b.small_, &p) &&
                !__builtin_add_overflow(small_, p, &r)) {
                small_ = r;
                return *this;
            }
        }
        return add_mul_slow(a, b);
    }
    BigInt& sub_mul(const BigInt& a, const BigInt& b) {
        if (!big_ && !a.big_ && !b.big_) {
            std::int64_t p, r;
            if (!__builtin_mul_overflow(a.small_, b.small_, &p) &&
                !__builtin_sub_overflow(small_, p, &r)) {
                small_ = r;
                return *this;
            }
        }
        return sub_mul_slow(a, b);
    }

    void negate() {
        if (big_) {
            mpz_neg(big_, big_);
            return;
        }
        if (small_ == INT64_MIN) {
            big_ = new_mpz();
            mpz_set_si(big_, small_);
            mpz_neg(big_, big_);
            return;
        }
        small_ = -small_;
    }
    BigInt abs() const {
        BigInt r(*this);
        if (r.sign() < 0) r.negate();
        return r;
    }

    /// Quotient of an exact division; throws NotDivisible on remainder.
    BigInt div_exact(const BigInt& divisor) const;

    int compare(const BigInt& o) const noexcept {
        if (!big_ && !o.big_) return small_ < o.small_ ? -1 : small_ > o.small_ ? 1 : 0;
        if (big_ && o.big_) return mpz_cmp(big_, o.big_);
        if (big_) return mpz_cmp_si(big_, o.small_);
        return -mpz_cmp_si(o.big_, small_);
    }

    std::string to_string() const;

    /// Exposes the value as an mpz for interop (rationals, powering).
    void assign_to(mpz_ptr out) const {
        if (big_)
            mpz_set(out, big_);
        else
            mpz_set_si(out, small_);
    }

    static BigInt from_mpz(mpz_srcptr z) {
        BigInt r;
        if (mpz_fits_slong_p(z)) {
            r.small_ = mpz_get_si(z);
        } else {
            r.big_ = new_mpz();
            mpz_set(r.big_, z);
        }
        return r;
    }

    static BigInt pow(const BigInt& base, unsigned long exp);
    static BigInt binomial(unsigned long n, unsigned long k);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator-(BigInt a) {
        a.negate();
        return a;
    }
    friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.compare(b) >= 0; }

  private:
    static mpz_ptr new_mpz() {
        mpz_ptr p = new __mpz_struct;
        mpz_init(p);
        return p;
    }
    void release() noexcept {
        if (big_) {
            mpz_clear(big_);
            delete big_;
            big_ = nullptr;
        }
    }
    void promote() {
        big_ = new_mpz();
        mpz_set_si(big_, small_);
    }
    void demote_if_small() {
        if (big_ && mpz_fits_slong_p(big_)) {
            small_ = mpz_get_si(big_);
            release();
        }
    }

    BigInt& add_slow(const BigInt& o, bool subtract);
    BigInt& mul_slow(const BigInt& o);
    BigInt& add_mul_slow(const BigInt& a, const BigInt& b);
    BigInt& sub_mul_slow(const BigInt& a, const BigInt& b);

    std::int64_t small_ = 0;
    mpz_ptr big_ = nullptr;
};

static_assert(sizeof(long) == 8, "int64 fast path assumes LP64");

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace cyclotome

#endif
