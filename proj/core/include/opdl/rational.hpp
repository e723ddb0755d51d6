#ifndef OPDL_RATIONAL_HPP
#define OPDL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace opdl {

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator; every operation is exact.
class Rational {
   public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(mpq_class v);

    /// Accepts an integer literal or "p/q"; no decimals.
    static Rational parse(std::string_view s);

    static Rational from_mpz(const mpz_class& num, const mpz_class& den);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational inverse() const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /// bit length of numerator plus denominator; used as a pivot
    /// simplicity measure in exact elimination
    std::size_t bit_size() const;

    std::string str() const;

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

   private:
    mpq_class v_;
};

Rational pow(const Rational& base, unsigned exp);

}  // namespace opdl

#endif
