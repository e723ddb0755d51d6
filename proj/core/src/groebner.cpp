#include "opdl/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace opdl {

Poly reduce(const Poly& p, const std::vector<Poly>& basis) {
    for (const auto& b : basis)
        if (b.is_zero()) throw std::invalid_argument("reduce: zero divisor in basis");
    Poly h = p;
    Poly r(p.nvars());
    while (!h.is_zero()) {
        bool divided = false;
        for (const auto& b : basis) {
            if (b.leading_monomial().divides(h.leading_monomial())) {
                const Monomial q = b.leading_monomial().divide(h.leading_monomial());
                const Rational c = h.leading_coeff() / b.leading_coeff();
                h -= b * Poly::term(q, c);
                divided = true;
                break;
            }
        }
        if (!divided) {
            r.add_term(h.leading_monomial(), h.leading_coeff());
            Poly lt = Poly::term(h.leading_monomial(), h.leading_coeff());
            h -= lt;
        }
    }
    return r;
}

namespace {

Poly s_poly(const Poly& f, const Poly& g) {
    const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
    const Poly mf = Poly::term(f.leading_monomial().divide(l), f.leading_coeff().inverse());
    const Poly mg = Poly::term(g.leading_monomial().divide(l), g.leading_coeff().inverse());
    return f * mf - g * mg;
}

// pair key: lcm in deglex ascending, then generator indices
struct PairKey {
    Monomial lcm;
    std::size_t i, j;
    bool operator<(const PairKey& o) const {
        if (lcm != o.lcm) return Monomial::deglex_less(lcm, o.lcm);
        return std::tie(i, j) < std::tie(o.i, o.j);
    }
};

}  // namespace

std::vector<Poly> groebner(const std::vector<Poly>& gens) {
    std::vector<Poly> g;
    for (const auto& p : gens)
        if (!p.is_zero()) g.push_back(p);
    if (g.empty()) throw std::invalid_argument("groebner: no nonzero generators");

    std::set<PairKey> pairs;
    auto push_pairs = [&](std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            if (g[i].leading_monomial().coprime(g[n].leading_monomial())) continue;
            pairs.insert({g[i].leading_monomial().lcm(g[n].leading_monomial()), i, n});
        }
    };
    for (std::size_t n = 1; n < g.size(); ++n) push_pairs(n);

    while (!pairs.empty()) {
        const PairKey k = *pairs.begin();
        pairs.erase(pairs.begin());
        const Poly r = reduce(s_poly(g[k.i], g[k.j]), g);
        if (!r.is_zero()) {
            g.push_back(r);
            push_pairs(g.size() - 1);
        }
    }

    // minimal basis: drop generators whose leading monomial is divisible by
    // another surviving leading monomial
    std::sort(g.begin(), g.end(), [](const Poly& a, const Poly& b) {
        if (a.leading_monomial() != b.leading_monomial())
            return Monomial::deglex_less(a.leading_monomial(), b.leading_monomial());
        return Poly::less(a, b);
    });
    std::vector<Poly> minimal;
    for (const auto& p : g) {
        bool redundant = false;
        for (const auto& q : minimal)
            if (q.leading_monomial().divides(p.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(p);
    }

    // auto-reduce to the unique reduced basis
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Poly> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Poly nf = others.empty() ? minimal[i] : reduce(minimal[i], others);
            if (nf.is_zero()) {
                minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
            nf = nf.monic();
            if (nf != minimal[i]) {
                minimal[i] = nf;
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(), [](const Poly& a, const Poly& b) {
        return Monomial::deglex_less(a.leading_monomial(), b.leading_monomial());
    });
    return minimal;
}

bool in_ideal(const Poly& p, const std::vector<Poly>& gb) {
    return reduce(p, gb).is_zero();
}

bool zero_set_membership(const std::vector<Poly>& basis, const std::vector<Rational>& point) {
    for (const auto& g : basis) {
        if (g.nvars() != point.size())
            throw std::invalid_argument("zero_set_membership: point dimension mismatch");
        if (!g.eval(point).is_zero()) return false;
    }
    return true;
}

}  // namespace opdl
