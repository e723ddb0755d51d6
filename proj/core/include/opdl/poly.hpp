#ifndef OPDL_POLY_HPP
#define OPDL_POLY_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "opdl/monomial.hpp"
#include "opdl/rational.hpp"

namespace opdl {

/// Sparse multivariate polynomial over Rational in the parameters t1..tm.
/// Zero coefficients are never stored; term iteration is deglex-descending,
/// so begin() is the leading term and rendering is canonical.
class Poly {
   public:
    using TermMap = std::map<Monomial, Rational, DeglexDescending>;

    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly zero(std::size_t nvars) { return Poly(nvars); }
    static Poly constant(std::size_t nvars, const Rational& c);
    static Poly variable(std::size_t nvars, std::size_t index);
    static Poly term(const Monomial& m, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// true when the polynomial is a rational constant (possibly zero)
    bool is_scalar() const;
    Rational as_scalar() const;  // throws unless is_scalar()

    const Monomial& leading_monomial() const;  // throws on zero
    const Rational& leading_coeff() const;     // throws on zero
    std::uint32_t total_degree() const;        // throws on zero

    void add_term(const Monomial& m, const Rational& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    /// division by the leading coefficient; rejects the zero polynomial
    Poly monic() const;

    Rational eval(const std::vector<Rational>& point) const;
    Poly substitute(std::size_t index, const Rational& value) const;

    const TermMap& terms() const { return terms_; }

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// total order: deglex on leading monomials, then term-by-term
    static bool less(const Poly& a, const Poly& b);

    std::string str() const;
    static Poly parse(std::size_t nvars, std::string_view text);

   private:
    std::size_t nvars_;
    TermMap terms_;
};

}  // namespace opdl

#endif
