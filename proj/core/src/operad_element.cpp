#include "opdl/operad_element.hpp"

#include <algorithm>
#include <stdexcept>

namespace opdl {

bool is_permutation(const Permutation& p) {
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::vector<Permutation> all_permutations(int n) {
    Permutation p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::string cycle_notation(const Permutation& p) {
    const int n = static_cast<int>(p.size());
    std::vector<bool> seen(p.size(), false);
    std::string out;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start - 1)]) continue;
        std::vector<int> cycle;
        int cur = start;
        do {
            seen[static_cast<std::size_t>(cur - 1)] = true;
            cycle.push_back(cur);
            cur = p[static_cast<std::size_t>(cur - 1)];
        } while (cur != start);
        if (cycle.size() > 1) {
            out += "(";
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                if (i) out += " ";
                out += std::to_string(cycle[i]);
            }
            out += ")";
        }
    }
    return out.empty() ? "id" : out;
}

void OperadElement::add_term(const TreeMonomial& m, const Poly& coeff) {
    if (m.arity() != arity_) throw std::invalid_argument("OperadElement: arity mismatch");
    if (coeff.nvars() != nparams_) throw std::invalid_argument("OperadElement: parameter count mismatch");
    if (coeff.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void OperadElement::add_term(const TreeMonomial& m, const Rational& coeff) {
    add_term(m, Poly::constant(nparams_, coeff));
}

Poly OperadElement::coeff(const TreeMonomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Poly::zero(nparams_) : it->second;
}

OperadElement& OperadElement::operator+=(const OperadElement& o) {
    if (o.arity_ != arity_ || o.nparams_ != nparams_)
        throw std::invalid_argument("OperadElement: shape mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

OperadElement OperadElement::operator-() const {
    OperadElement r(arity_, nparams_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

OperadElement OperadElement::scaled(const Poly& c) const {
    OperadElement r(arity_, nparams_);
    for (const auto& [m, k] : terms_) r.add_term(m, k * c);
    return r;
}

std::vector<Poly> OperadElement::to_row() const {
    const auto& b = basis(arity_);
    std::vector<Poly> row(b.size(), Poly::zero(nparams_));
    for (const auto& [m, c] : terms_) row[basis_index(m)] = c;
    return row;
}

OperadElement OperadElement::from_row(int arity, std::size_t nparams, const std::vector<Poly>& row) {
    const auto& b = basis(arity);
    if (row.size() != b.size()) throw std::invalid_argument("OperadElement: row length mismatch");
    OperadElement e(arity, nparams);
    for (std::size_t i = 0; i < row.size(); ++i) e.add_term(b[i], row[i]);
    return e;
}

std::string OperadElement::render() const {
    if (terms_.empty()) return "0";
    // emit in basis order where a basis is defined (arities 3 and 4)
    std::vector<std::pair<std::size_t, const TreeMonomial*>> order;
    order.reserve(terms_.size());
    std::size_t fallback = 0;
    for (const auto& [m, c] : terms_)
        order.emplace_back(arity_ >= 3 ? basis_index(m) : fallback++, &m);
    std::sort(order.begin(), order.end());
    std::string out;
    for (const auto& [idx, mp] : order) {
        const Poly& c = terms_.at(*mp);
        std::string cs;
        bool neg = false;
        if (c.term_count() == 1) {
            const Rational& lc = c.leading_coeff();
            neg = lc.sign() < 0;
            const Poly ac = neg ? -c : c;
            if (ac.is_scalar() && ac.as_scalar().is_one())
                cs = "";
            else
                cs = ac.str() + "*";
        } else {
            cs = "(" + c.str() + ")*";
        }
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += cs + mp->render();
    }
    return out;
}

bool OperadElement::operator==(const OperadElement& o) const {
    return arity_ == o.arity_ && nparams_ == o.nparams_ && terms_ == o.terms_;
}

OperadElement act(const Permutation& perm, const OperadElement& elem) {
    if (static_cast<int>(perm.size()) != elem.arity())
        throw std::invalid_argument("act: permutation degree does not match arity");
    if (!is_permutation(perm)) throw std::invalid_argument("act: not a permutation");
    OperadElement out(elem.arity(), elem.nparams());
    for (const auto& [m, c] : elem.terms()) {
        RawTree raw = m.to_raw();
        struct Relabel {
            const Permutation& p;
            void operator()(RawTree& t) const {
                if (t.is_leaf()) {
                    t.leaf = p[static_cast<std::size_t>(t.leaf - 1)];
                    return;
                }
                (*this)(*t.left);
                (*this)(*t.right);
            }
        };
        Relabel{perm}(raw);
        const auto [sign, canon] = straighten(raw);
        out.add_term(canon, c * Rational(sign));
    }
    return out;
}

namespace {

// replace the leaf labeled slot by gen(slot, slot+1); shift labels above slot
void graft(RawTree& t, int slot, Generator gen) {
    if (t.is_leaf()) {
        if (t.leaf == slot) {
            t = RawTree::make_node(gen, RawTree::make_leaf(slot), RawTree::make_leaf(slot + 1));
        } else if (t.leaf > slot) {
            ++t.leaf;
        }
        return;
    }
    graft(*t.left, slot, gen);
    graft(*t.right, slot, gen);
}

}  // namespace

OperadElement partial_compose_into(const OperadElement& rel, int slot, Generator gen) {
    if (rel.arity() != 3) throw std::invalid_argument("partial_compose_into: relation must have arity 3");
    if (slot < 1 || slot > 3) throw std::invalid_argument("partial_compose_into: slot out of range");
    OperadElement out(4, rel.nparams());
    for (const auto& [m, c] : rel.terms()) {
        RawTree raw = m.to_raw();
        graft(raw, slot, gen);
        const auto [sign, canon] = straighten(raw);
        out.add_term(canon, c * Rational(sign));
    }
    return out;
}

OperadElement partial_compose_outer(Generator gen, const OperadElement& rel) {
    if (rel.arity() != 3) throw std::invalid_argument("partial_compose_outer: relation must have arity 3");
    OperadElement out(4, rel.nparams());
    for (const auto& [m, c] : rel.terms()) {
        RawTree raw = RawTree::make_node(gen, m.to_raw(), RawTree::make_leaf(4));
        const auto [sign, canon] = straighten(raw);
        out.add_term(canon, c * Rational(sign));
    }
    return out;
}

OperadElement rescale_lie_generator(const OperadElement& elem, const Rational& scale) {
    OperadElement out(elem.arity(), elem.nparams());
    for (const auto& [m, c] : elem.terms())
        out.add_term(m, c * pow(scale, static_cast<unsigned>(m.lie_node_count())));
    return out;
}

}  // namespace opdl
