#ifndef OPDL_OPERAD_ELEMENT_HPP
#define OPDL_OPERAD_ELEMENT_HPP

#include <map>
#include <string>
#include <vector>

#include "opdl/poly.hpp"
#include "opdl/tree_monomial.hpp"

namespace opdl {

/// Permutation of 1..n in one-line notation: perm[i-1] is the image of i.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);
std::vector<Permutation> all_permutations(int n);  // lexicographic order
std::string cycle_notation(const Permutation& p);  // "id" for the identity

/// Linear combination of canonical tree monomials of one arity, with
/// polynomial coefficients in the deformation parameters.
class OperadElement {
   public:
    OperadElement(int arity, std::size_t nparams) : arity_(arity), nparams_(nparams) {}

    int arity() const { return arity_; }
    std::size_t nparams() const { return nparams_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const TreeMonomial& m, const Poly& coeff);
    void add_term(const TreeMonomial& m, const Rational& coeff);
    const std::map<TreeMonomial, Poly>& terms() const { return terms_; }
    Poly coeff(const TreeMonomial& m) const;

    OperadElement& operator+=(const OperadElement& o);
    OperadElement operator-() const;
    OperadElement scaled(const Poly& c) const;

    /// coefficient row over basis(arity)
    std::vector<Poly> to_row() const;
    static OperadElement from_row(int arity, std::size_t nparams, const std::vector<Poly>& row);

    std::string render() const;

    bool operator==(const OperadElement& o) const;
    bool operator!=(const OperadElement& o) const { return !(*this == o); }

   private:
    int arity_;
    std::size_t nparams_;
    std::map<TreeMonomial, Poly> terms_;
};

/// Relabel leaves by perm (variable i becomes perm[i-1]), re-straighten each
/// monomial and fold the signs into the coefficients.
OperadElement act(const Permutation& perm, const OperadElement& elem);

/// Substitute gen(x_slot, x_slot+1) into argument slot of every monomial;
/// variables above slot shift up by one. rel must have arity 3; the result
/// lives in basis(4).
OperadElement partial_compose_into(const OperadElement& rel, int slot, Generator gen);

/// gen(rel(x1,x2,x3), x4), straightened into basis(4).
OperadElement partial_compose_outer(Generator gen, const OperadElement& rel);

/// Multiply each monomial's coefficient by scale^(number of Lie nodes);
/// the effect of rescaling the anticommutative generator.
OperadElement rescale_lie_generator(const OperadElement& elem, const Rational& scale);

}  // namespace opdl

#endif
