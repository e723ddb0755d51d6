#include "opdl/rational.hpp"

#include <stdexcept>

namespace opdl {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::from_mpz(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    mpq_class q;
    mpq_set_num(q.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(q.get_mpq_t(), den.get_mpz_t());
    q.canonicalize();
    return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
}

std::size_t Rational::bit_size() const {
    return mpz_sizeinbase(v_.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
}

Rational Rational::parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty literal");
    const auto slash = s.find('/');
    auto check_int = [](std::string_view part) {
        if (part.empty()) throw std::invalid_argument("Rational: bad literal");
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw std::invalid_argument("Rational: bad literal");
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw std::invalid_argument("Rational: bad literal");
    };
    if (slash == std::string_view::npos) {
        check_int(s);
        return Rational(mpq_class(mpz_class(std::string(s))));
    }
    auto nums = s.substr(0, slash);
    auto dens = s.substr(slash + 1);
    check_int(nums);
    check_int(dens);
    return from_mpz(mpz_class(std::string(nums)), mpz_class(std::string(dens)));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational pow(const Rational& base, unsigned exp) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exp);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exp);
    return Rational::from_mpz(n, d);
}

}  // namespace opdl
