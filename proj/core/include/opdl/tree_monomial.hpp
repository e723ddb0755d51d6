#ifndef OPDL_TREE_MONOMIAL_HPP
#define OPDL_TREE_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace opdl {

/// Binary generators of the free operad: a commutative product (written by
/// juxtaposition) and an anticommutative bracket. Swapping the arguments of
/// Com is invisible; swapping the arguments of Lie flips the sign.
enum class Generator : std::uint8_t { Com = 0, Lie = 1 };

/// Supported association types.
///   Pair      x*x                       (arity 2)
///   Comb3     (x*x)*x                   (arity 3)
///   Type1     ((x*x)*x)*x               (arity 4)
///   Type2     (x*x)*(x*x)               (arity 4)
enum class TreeShape : std::uint8_t { Pair = 0, Comb3 = 1, Type1 = 2, Type2 = 3 };

/// Transient tree with generator-labeled internal nodes and variable-labeled
/// leaves; the input form of straighten. Never part of the public data model
/// beyond that role.
struct RawTree {
    int leaf = 0;  // >0: leaf with this variable index
    Generator op = Generator::Com;
    std::unique_ptr<RawTree> left, right;

    static RawTree make_leaf(int label);
    static RawTree make_node(Generator op, RawTree l, RawTree r);
    RawTree clone() const;
    bool is_leaf() const { return leaf > 0; }
    int leaf_count() const;
    int min_label() const;
};

/// Canonical basis monomial of the free operad at arity 2, 3 or 4.
///
/// ops are numbered bottom-up as in the association-type templates:
/// for Pair/Comb3/Type1 the last op is the root; for Type2 op index 1 is
/// the root and indices 0/2 are the left/right child products.
/// leaf_labels lists the variable index at each leaf position left-to-right.
///
/// Canonical-form constraints: the first two labels increase; for Type2
/// additionally labels[2] < labels[3] and labels[0] < labels[2].
class TreeMonomial {
   public:
    TreeMonomial(TreeShape shape, std::vector<Generator> ops, std::vector<int> leaf_labels);

    TreeShape shape() const { return shape_; }
    int arity() const { return arity_; }
    Generator op(std::size_t k) const { return ops_.at(k); }
    std::size_t op_count() const { return static_cast<std::size_t>(arity_) - 1; }
    int label(std::size_t k) const { return labels_.at(k); }
    const std::vector<int>& labels() const { return labels_; }
    int lie_node_count() const;

    RawTree to_raw() const;

    /// juxtaposition for Com, square brackets for Lie, e.g. "([x3,x4]x2)x1"
    std::string render() const;

    bool operator==(const TreeMonomial& o) const;
    bool operator!=(const TreeMonomial& o) const { return !(*this == o); }
    /// arity, then shape, then labels lexicographically, then ops from the
    /// root down; for arity 4 this is exactly the basis order
    bool operator<(const TreeMonomial& o) const;

   private:
    TreeShape shape_;
    std::uint8_t arity_;
    std::vector<Generator> ops_;
    std::vector<int> labels_;
};

/// Ordered monomial basis of the free operad component; arity 3 has 12
/// elements, arity 4 has 120 (96 of Type1 followed by 24 of Type2).
const std::vector<TreeMonomial>& basis(int arity);

/// position of a canonical monomial in basis(arity)
std::size_t basis_index(const TreeMonomial& m);

/// Canonicalize a raw tree using commutativity of Com and anticommutativity
/// of Lie. Returns the sign (-1 to the number of Lie swaps) and the unique
/// canonical monomial equal to +-tree in the free operad.
std::pair<int, TreeMonomial> straighten(const RawTree& tree);

}  // namespace opdl

#endif
