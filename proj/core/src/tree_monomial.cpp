#include "opdl/tree_monomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace opdl {

RawTree RawTree::make_leaf(int label) {
    if (label <= 0) throw std::invalid_argument("RawTree: leaf labels are positive");
    RawTree t;
    t.leaf = label;
    return t;
}

RawTree RawTree::make_node(Generator op, RawTree l, RawTree r) {
    RawTree t;
    t.op = op;
    t.left = std::make_unique<RawTree>(std::move(l));
    t.right = std::make_unique<RawTree>(std::move(r));
    return t;
}

RawTree RawTree::clone() const {
    if (is_leaf()) return make_leaf(leaf);
    return make_node(op, left->clone(), right->clone());
}

int RawTree::leaf_count() const {
    if (is_leaf()) return 1;
    return left->leaf_count() + right->leaf_count();
}

int RawTree::min_label() const {
    if (is_leaf()) return leaf;
    return std::min(left->min_label(), right->min_label());
}

TreeMonomial::TreeMonomial(TreeShape shape, std::vector<Generator> ops, std::vector<int> leaf_labels)
    : shape_(shape), ops_(std::move(ops)), labels_(std::move(leaf_labels)) {
    switch (shape_) {
        case TreeShape::Pair: arity_ = 2; break;
        case TreeShape::Comb3: arity_ = 3; break;
        case TreeShape::Type1:
        case TreeShape::Type2: arity_ = 4; break;
        default: throw std::invalid_argument("TreeMonomial: unknown shape");
    }
    if (ops_.size() != op_count() || labels_.size() != static_cast<std::size_t>(arity_))
        throw std::invalid_argument("TreeMonomial: wrong op or label count");
    std::vector<int> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < arity_; ++i)
        if (sorted[static_cast<std::size_t>(i)] != i + 1)
            throw std::invalid_argument("TreeMonomial: labels must be a permutation of 1..n");
    if (labels_[0] > labels_[1])
        throw std::invalid_argument("TreeMonomial: not canonical (first pair out of order)");
    if (shape_ == TreeShape::Type2) {
        if (labels_[2] > labels_[3])
            throw std::invalid_argument("TreeMonomial: not canonical (second pair out of order)");
        if (labels_[0] > labels_[2])
            throw std::invalid_argument("TreeMonomial: not canonical (pair order)");
    }
}

int TreeMonomial::lie_node_count() const {
    int n = 0;
    for (auto g : ops_)
        if (g == Generator::Lie) ++n;
    return n;
}

RawTree TreeMonomial::to_raw() const {
    switch (shape_) {
        case TreeShape::Pair:
            return RawTree::make_node(ops_[0], RawTree::make_leaf(labels_[0]), RawTree::make_leaf(labels_[1]));
        case TreeShape::Comb3:
            return RawTree::make_node(
                ops_[1],
                RawTree::make_node(ops_[0], RawTree::make_leaf(labels_[0]), RawTree::make_leaf(labels_[1])),
                RawTree::make_leaf(labels_[2]));
        case TreeShape::Type1:
            return RawTree::make_node(
                ops_[2],
                RawTree::make_node(
                    ops_[1],
                    RawTree::make_node(ops_[0], RawTree::make_leaf(labels_[0]), RawTree::make_leaf(labels_[1])),
                    RawTree::make_leaf(labels_[2])),
                RawTree::make_leaf(labels_[3]));
        case TreeShape::Type2:
            return RawTree::make_node(
                ops_[1],
                RawTree::make_node(ops_[0], RawTree::make_leaf(labels_[0]), RawTree::make_leaf(labels_[1])),
                RawTree::make_node(ops_[2], RawTree::make_leaf(labels_[2]), RawTree::make_leaf(labels_[3])));
    }
    throw std::logic_error("TreeMonomial: unreachable");
}

namespace {

std::string render_raw(const RawTree& t) {
    if (t.is_leaf()) return "x" + std::to_string(t.leaf);
    auto wrap = [](const RawTree& c) {
        const std::string s = render_raw(c);
        return (!c.is_leaf() && c.op == Generator::Com) ? "(" + s + ")" : s;
    };
    if (t.op == Generator::Com) return wrap(*t.left) + wrap(*t.right);
    return "[" + render_raw(*t.left) + "," + render_raw(*t.right) + "]";
}

}  // namespace

std::string TreeMonomial::render() const {
    return render_raw(to_raw());
}

bool TreeMonomial::operator==(const TreeMonomial& o) const {
    return shape_ == o.shape_ && ops_ == o.ops_ && labels_ == o.labels_;
}

namespace {

// op significance from the root down; Type2 root sits at index 1
std::array<std::size_t, 3> op_rank_order(TreeShape shape) {
    switch (shape) {
        case TreeShape::Pair: return {0, 0, 0};
        case TreeShape::Comb3: return {1, 0, 0};
        case TreeShape::Type1: return {2, 1, 0};
        case TreeShape::Type2: return {1, 0, 2};
    }
    throw std::logic_error("op_rank_order: unreachable");
}

}  // namespace

bool TreeMonomial::operator<(const TreeMonomial& o) const {
    if (arity_ != o.arity_) return arity_ < o.arity_;
    if (shape_ != o.shape_) return shape_ < o.shape_;
    if (labels_ != o.labels_) return labels_ < o.labels_;
    const auto order = op_rank_order(shape_);
    for (std::size_t k = 0; k < op_count(); ++k) {
        const auto i = order[k];
        if (ops_[i] != o.ops_[i]) return ops_[i] < o.ops_[i];
    }
    return false;
}

namespace {

// sign accumulated over Lie swaps
void normalize(RawTree& t, int& sign) {
    if (t.is_leaf()) return;
    normalize(*t.left, sign);
    normalize(*t.right, sign);
    const int lc = t.left->leaf_count();
    const int rc = t.right->leaf_count();
    bool swap = false;
    if (lc < rc) {
        swap = true;
    } else if (lc == rc) {
        if (lc == 1) {
            swap = t.left->leaf > t.right->leaf;
        } else {
            swap = t.left->min_label() > t.right->min_label();
        }
    }
    if (swap) {
        std::swap(t.left, t.right);
        if (t.op == Generator::Lie) sign = -sign;
    }
}

const RawTree& leaf_at(const RawTree& t) {
    if (!t.is_leaf()) throw std::invalid_argument("straighten: unsupported tree shape");
    return t;
}

}  // namespace

std::pair<int, TreeMonomial> straighten(const RawTree& tree) {
    RawTree t = tree.clone();
    int sign = 1;
    normalize(t, sign);
    const int n = t.leaf_count();
    if (n == 2) {
        return {sign, TreeMonomial(TreeShape::Pair, {t.op},
                                   {leaf_at(*t.left).leaf, leaf_at(*t.right).leaf})};
    }
    if (n == 3) {
        const RawTree& inner = *t.left;
        if (inner.is_leaf()) throw std::invalid_argument("straighten: unsupported tree shape");
        return {sign, TreeMonomial(TreeShape::Comb3, {inner.op, t.op},
                                   {leaf_at(*inner.left).leaf, leaf_at(*inner.right).leaf,
                                    leaf_at(*t.right).leaf})};
    }
    if (n == 4) {
        const RawTree& l = *t.left;
        const RawTree& r = *t.right;
        if (l.leaf_count() == 3) {
            const RawTree& mid = *l.left;
            if (mid.is_leaf()) throw std::invalid_argument("straighten: unsupported tree shape");
            return {sign, TreeMonomial(TreeShape::Type1, {mid.op, l.op, t.op},
                                       {leaf_at(*mid.left).leaf, leaf_at(*mid.right).leaf,
                                        leaf_at(*l.right).leaf, leaf_at(r).leaf})};
        }
        return {sign, TreeMonomial(TreeShape::Type2, {l.op, t.op, r.op},
                                   {leaf_at(*l.left).leaf, leaf_at(*l.right).leaf,
                                    leaf_at(*r.left).leaf, leaf_at(*r.right).leaf})};
    }
    throw std::invalid_argument("straighten: arity " + std::to_string(n) + " unsupported");
}

namespace {

std::vector<TreeMonomial> build_basis3() {
    // printed order: operation pair major with Com before Lie, then the
    // three permutations 123, 132, 231
    const std::vector<std::pair<Generator, Generator>> op_pairs = {
        {Generator::Com, Generator::Com},
        {Generator::Com, Generator::Lie},
        {Generator::Lie, Generator::Com},
        {Generator::Lie, Generator::Lie},
    };
    const std::vector<std::vector<int>> sigmas = {{1, 2, 3}, {1, 3, 2}, {2, 3, 1}};
    std::vector<TreeMonomial> out;
    for (const auto& [o1, o2] : op_pairs)
        for (const auto& s : sigmas) out.emplace_back(TreeShape::Comb3, std::vector<Generator>{o1, o2}, s);
    return out;
}

std::vector<TreeMonomial> build_basis4() {
    std::vector<TreeMonomial> out;
    std::vector<int> perm = {1, 2, 3, 4};
    const auto gens = [](int bit) { return bit ? Generator::Lie : Generator::Com; };
    // 96 of Type1: permutations with s(1) < s(2) in lex order, then the
    // operation triple with the root most significant
    std::vector<std::vector<int>> type1_sigmas;
    do {
        if (perm[0] < perm[1]) type1_sigmas.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& s : type1_sigmas)
        for (int o3 = 0; o3 < 2; ++o3)
            for (int o2 = 0; o2 < 2; ++o2)
                for (int o1 = 0; o1 < 2; ++o1)
                    out.emplace_back(TreeShape::Type1,
                                     std::vector<Generator>{gens(o1), gens(o2), gens(o3)}, s);
    // 24 of Type2: constraints s(1)<s(2), s(3)<s(4), s(1)<s(3)
    const std::vector<std::vector<int>> type2_sigmas = {{1, 2, 3, 4}, {1, 3, 2, 4}, {1, 4, 2, 3}};
    for (const auto& s : type2_sigmas)
        for (int o2 = 0; o2 < 2; ++o2)
            for (int o1 = 0; o1 < 2; ++o1)
                for (int o3 = 0; o3 < 2; ++o3)
                    out.emplace_back(TreeShape::Type2,
                                     std::vector<Generator>{gens(o1), gens(o2), gens(o3)}, s);
    return out;
}

}  // namespace

const std::vector<TreeMonomial>& basis(int arity) {
    static const std::vector<TreeMonomial> b3 = build_basis3();
    static const std::vector<TreeMonomial> b4 = build_basis4();
    if (arity == 3) return b3;
    if (arity == 4) return b4;
    throw std::invalid_argument("basis: arity " + std::to_string(arity) + " unsupported");
}

std::size_t basis_index(const TreeMonomial& m) {
    static const auto make_index = [](int arity) {
        std::map<TreeMonomial, std::size_t> idx;
        const auto& b = basis(arity);
        for (std::size_t i = 0; i < b.size(); ++i) idx.emplace(b[i], i);
        return idx;
    };
    static const std::map<TreeMonomial, std::size_t> i3 = make_index(3);
    static const std::map<TreeMonomial, std::size_t> i4 = make_index(4);
    const auto& idx = (m.arity() == 3) ? i3 : (m.arity() == 4) ? i4 : throw std::invalid_argument("basis_index: arity unsupported");
    const auto it = idx.find(m);
    if (it == idx.end()) throw std::logic_error("basis_index: monomial not in basis");
    return it->second;
}

}  // namespace opdl
