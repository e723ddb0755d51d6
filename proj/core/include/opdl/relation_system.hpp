#ifndef OPDL_RELATION_SYSTEM_HPP
#define OPDL_RELATION_SYSTEM_HPP

#include <string>
#include <vector>

#include "opdl/operad_element.hpp"
#include "opdl/poly_matrix.hpp"

namespace opdl {

/// Parametric quadratic relation system: a spanning set of arity-3 relations
/// with polynomial coefficients in the deformation parameters, plus the
/// composite-product dimension data needed to certify candidate points.
struct RelationSystem {
    std::string name;
    std::size_t nparams = 0;
    std::vector<OperadElement> relations;  // arity 3
    std::vector<std::string> labels;

    /// dim of the composite 1152-style target in arity n (blocks weighted by
    /// the second operad's component dimensions); used as the rank criterion
    int composite_dim4 = 0;
};

/// Six-relation spanning system for the commutative/Lie problem over
/// k[t1,t2,t3]: the Jacobi relation, the bracket-derivation relation with
/// its three cyclic images, and two images of the deformed associativity
/// relation.
RelationSystem build_com_lie_system();

/// Spanning system for the commutative/two-step-nilpotent problem over
/// k[t1]: the three vanishing double brackets, the derivation family, and
/// the undeformed associativity family.
RelationSystem build_nlie2_system();

/// coefficient matrix of the relations over basis(3)
PolyMatrix relation_matrix(const RelationSystem& sys);

/// Reduced row echelon form computed by pivoting only on nonzero rational
/// scalar entries; zero rows are dropped. Throws NonUnitPivotError when the
/// leftmost nonzero column of the remaining block has no scalar entry.
PolyMatrix rref_unit_pivots(const PolyMatrix& mat);

/// same system with relations replaced by the rows of the RREF, labeled r1..rk
RelationSystem rref_system(const RelationSystem& sys);

/// All arity-4 consequences of the relations: the partial compositions
/// r_i o_j mu and r_i o_j lambda (j = 1..3) and the outer compositions
/// mu o_1 r_i and lambda o_1 r_i, each hit by all 24 permutations in
/// lexicographic order. Rows carry provenance "label oj gen | perm".
PolyMatrix consequences_arity4(const RelationSystem& sys);

}  // namespace opdl

#endif
