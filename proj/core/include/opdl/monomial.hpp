#ifndef OPDL_MONOMIAL_HPP
#define OPDL_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace opdl {

/// Power product in the parameters t1..tm, compared in deglex order:
/// higher total degree first, ties broken lexicographically with
/// t1 > t2 > ... > tm.
class Monomial {
   public:
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial var(std::size_t nvars, std::size_t index, std::uint32_t e = 1);

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t exp(std::size_t i) const { return exps_[i]; }
    std::uint32_t degree() const;
    bool is_one() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divide(const Monomial& o) const;  // o / *this, throws unless divisible
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    /// strict deglex a < b
    static bool deglex_less(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

    std::string str() const;  // e.g. "t1^2*t3"; "1" for the empty product

   private:
    std::vector<std::uint32_t> exps_;
};

/// map comparator putting the deglex-largest monomial first
struct DeglexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::deglex_less(b, a);
    }
};

}  // namespace opdl

#endif
