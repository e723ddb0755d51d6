#include "opdl/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace opdl {

RelationSystem build_system(SystemKind kind) {
    switch (kind) {
        case SystemKind::ComLie: return build_com_lie_system();
        case SystemKind::NLie2: return build_nlie2_system();
    }
    throw std::logic_error("build_system: unreachable");
}

std::string system_name(SystemKind kind) {
    return kind == SystemKind::ComLie ? "com-lie" : "nlie2";
}

SystemKind system_from_name(const std::string& name) {
    if (name == "com-lie") return SystemKind::ComLie;
    if (name == "nlie2") return SystemKind::NLie2;
    throw std::invalid_argument("unknown system: " + name);
}

namespace {

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// visit the block-size multiset of every set partition of {1..n}
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> block_of(static_cast<std::size_t>(n), 0);
    std::vector<int> sizes;
    const std::function<void(int, int)> rec = [&](int i, int nblocks) {
        if (i == n) {
            sizes.assign(static_cast<std::size_t>(nblocks), 0);
            for (int k = 0; k < n; ++k) ++sizes[static_cast<std::size_t>(block_of[static_cast<std::size_t>(k)])];
            visit(sizes);
            return;
        }
        for (int b = 0; b <= nblocks; ++b) {
            block_of[static_cast<std::size_t>(i)] = b;
            rec(i + 1, b == nblocks ? nblocks + 1 : nblocks);
        }
    };
    rec(0, 0);
}

}  // namespace

int composite_dimension(int n) {
    return composite_dimension(n, SystemKind::ComLie);
}

int composite_dimension(int n, SystemKind kind) {
    if (n < 1 || n > 6) throw std::domain_error("composite_dimension: arity out of range");
    long total = 0;
    for_each_partition(n, [&](const std::vector<int>& sizes) {
        long prod = 1;
        for (int s : sizes) {
            if (kind == SystemKind::ComLie) {
                prod *= factorial(s - 1);
            } else {
                if (s > 2) prod = 0;
            }
        }
        total += prod;
    });
    return static_cast<int>(total);
}

bool SolutionComponent::is_point() const {
    return free_count() == 0;
}

bool SolutionComponent::is_zero_point() const {
    if (!is_point()) return false;
    return std::all_of(base.begin(), base.end(), [](const Rational& c) { return c.is_zero(); });
}

std::size_t SolutionComponent::free_count() const {
    return static_cast<std::size_t>(std::count(free_coord.begin(), free_coord.end(), true));
}

std::string SolutionComponent::describe() const {
    std::string s = "(";
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (i) s += ", ";
        s += free_coord[i] ? "t" + std::to_string(i + 1) : base[i].str();
    }
    return s + ")";
}

namespace {

// exponent -> coefficient view of a polynomial supported on one variable
std::map<std::uint32_t, Rational> univariate_view(const Poly& p, std::size_t var) {
    std::map<std::uint32_t, Rational> out;
    for (const auto& [m, c] : p.terms()) out[m.exp(var)] = c;
    return out;
}

Rational eval_univariate(const std::map<std::uint32_t, Rational>& u, const Rational& x) {
    Rational acc(0);
    for (const auto& [e, c] : u) acc += c * pow(x, e);
    return acc;
}

std::vector<mpz_class> small_divisors(const mpz_class& value) {
    mpz_class a = abs(value);
    if (a > mpz_class(1000000000)) throw UnclassifiedVarietyError("root search: coefficient too large");
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(a / d);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// complete set of roots of a univariate generator; throws when the
// polynomial does not split over the rationals
std::vector<Rational> rational_roots(const Poly& p, std::size_t var) {
    auto u = univariate_view(p, var);
    std::set<Rational> roots;
    if (!u.count(0) || u.at(0).is_zero()) {
        roots.insert(Rational(0));
        std::map<std::uint32_t, Rational> shifted;
        std::uint32_t min_e = 0;
        for (const auto& [e, c] : u)
            if (!c.is_zero()) {
                min_e = e;
                break;
            }
        for (const auto& [e, c] : u)
            if (!c.is_zero()) shifted[e - min_e] = c;
        u = std::move(shifted);
    }
    // integerize
    mpz_class den_lcm(1);
    for (const auto& [e, c] : u) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        den_lcm = den_lcm / g * c.den();
    }
    std::map<std::uint32_t, mpz_class> z;
    for (const auto& [e, c] : u) z[e] = c.num() * (den_lcm / c.den());
    auto degree = [&]() {
        std::uint32_t d = 0;
        for (const auto& [e, c] : z)
            if (c != 0) d = std::max(d, e);
        return d;
    };
    auto deflate = [&](const Rational& r) {
        // synthetic division by (x - r) over the rationals, then re-integerize
        const std::uint32_t d = degree();
        std::vector<Rational> coeffs(d + 1);
        for (const auto& [e, c] : z) coeffs[e] = Rational::from_mpz(c, 1);
        std::vector<Rational> quo(d);
        Rational carry(0);
        for (std::uint32_t k = d; k >= 1; --k) {
            carry = coeffs[k] + carry * r;
            quo[k - 1] = carry;
        }
        mpz_class dl(1);
        for (const auto& q : quo) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), dl.get_mpz_t(), q.den().get_mpz_t());
            dl = dl / g * q.den();
        }
        z.clear();
        for (std::uint32_t k = 0; k < d; ++k)
            if (!quo[k].is_zero()) z[k] = quo[k].num() * (dl / quo[k].den());
    };
    while (degree() >= 1) {
        if (!z.count(0) || z.at(0) == 0) {
            roots.insert(Rational(0));
            std::map<std::uint32_t, mpz_class> shifted;
            for (const auto& [e, c] : z)
                if (c != 0 && e >= 1) shifted[e - 1] = c;
            z = std::move(shifted);
            continue;
        }
        const auto ps = small_divisors(z.at(0));
        const auto qs = small_divisors(z.at(degree()));
        bool found = false;
        for (const auto& pd : ps) {
            for (const auto& qd : qs) {
                for (int s : {1, -1}) {
                    const Rational cand = Rational::from_mpz(s * pd, qd);
                    std::map<std::uint32_t, Rational> uz;
                    for (const auto& [e, c] : z) uz[e] = Rational::from_mpz(c, 1);
                    if (eval_univariate(uz, cand).is_zero()) {
                        roots.insert(cand);
                        deflate(cand);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found)
            throw UnclassifiedVarietyError("zero set: generator " + p.str() +
                                           " does not split over the rationals");
    }
    return {roots.begin(), roots.end()};
}

std::vector<std::size_t> support(const Poly& p) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        for (const auto& [m, c] : p.terms())
            if (m.exp(i) > 0) {
                vars.push_back(i);
                break;
            }
    }
    return vars;
}

void decompose_rec(std::vector<Poly> gens, std::vector<std::optional<Rational>> values,
                   std::vector<SolutionComponent>& out) {
    std::vector<Poly> live;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.is_scalar()) return;  // inconsistent branch
        live.push_back(g);
    }
    if (live.empty()) {
        SolutionComponent c;
        c.base.resize(values.size(), Rational(0));
        c.free_coord.resize(values.size(), false);
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i].has_value())
                c.base[i] = *values[i];
            else
                c.free_coord[i] = true;
        }
        out.push_back(std::move(c));
        return;
    }
    for (const auto& g : live) {
        const auto vars = support(g);
        if (vars.size() != 1) continue;
        const std::size_t v = vars[0];
        for (const auto& r : rational_roots(g, v)) {
            std::vector<Poly> next;
            next.reserve(live.size());
            for (const auto& h : live) next.push_back(h.substitute(v, r));
            auto next_values = values;
            next_values[v] = r;
            decompose_rec(std::move(next), std::move(next_values), out);
        }
        return;
    }
    throw UnclassifiedVarietyError("zero set: no univariate generator available");
}

}  // namespace

std::vector<SolutionComponent> decompose_zero_set(const std::vector<Poly>& gb, std::size_t nparams) {
    std::vector<SolutionComponent> out;
    decompose_rec(gb, std::vector<std::optional<Rational>>(nparams), out);
    return out;
}

Classifier::Classifier(RelationSystem sys) : sys_(std::move(sys)) {}

const RelationSystem& Classifier::reduced_system() {
    if (!rref_) rref_ = rref_system(sys_);
    return *rref_;
}

const PolyMatrix& Classifier::consequence_matrix() {
    if (!consequences_) consequences_ = consequences_arity4(reduced_system());
    return *consequences_;
}

const PartialSmithResult& Classifier::smith() {
    if (!smith_) smith_ = partial_smith(consequence_matrix());
    return *smith_;
}

const PolyMatrix& Classifier::stripped_residual() {
    if (!stripped_) stripped_ = strip_zero_rows(smith().residual);
    return *stripped_;
}

const std::vector<Poly>& Classifier::residual_distinct_entries() {
    if (!distinct_) distinct_ = distinct_entries(stripped_residual());
    return *distinct_;
}

const std::vector<Poly>& Classifier::obstruction_generators() {
    if (!generators_) generators_ = entry_generators(stripped_residual());
    return *generators_;
}

const std::vector<Poly>& Classifier::groebner_basis() {
    if (!gb_) {
        const auto& gens = obstruction_generators();
        gb_ = gens.empty() ? std::vector<Poly>{} : groebner(gens);
    }
    return *gb_;
}

CertifyResult Classifier::certify(const std::vector<Rational>& point) {
    if (point.size() != sys_.nparams)
        throw std::invalid_argument("certify: point dimension mismatch");
    CertifyResult res;
    res.rank = rational_rank(consequence_matrix().eval(point));
    res.expected_rank = consequence_matrix().cols() - static_cast<std::size_t>(sys_.composite_dim4);
    res.is_law = res.rank == res.expected_rank;
    if (!res.is_law) {
        const PolyMatrix& l = stripped_residual();
        for (std::size_t i = 0; i < l.rows() && !res.obstruction; ++i) {
            for (std::size_t j = 0; j < l.cols(); ++j) {
                const Rational v = l.at(i, j).eval(point);
                if (!v.is_zero()) {
                    res.obstruction = l.at(i, j);
                    res.obstruction_value = v;
                    break;
                }
            }
        }
    }
    return res;
}

namespace {

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

std::vector<Rational> random_point(SplitMix64& rng, std::size_t nparams) {
    std::vector<Rational> p;
    p.reserve(nparams);
    for (std::size_t i = 0; i < nparams; ++i) {
        const long num = static_cast<long>(rng.next() % 19) - 9;
        const long den = static_cast<long>(rng.next() % 9) + 1;
        p.emplace_back(num, den);
    }
    return p;
}

}  // namespace

ClassificationReport Classifier::run(std::uint64_t seed, std::size_t spot_check_count) {
    ClassificationReport rep;
    rep.system = sys_.name;
    rep.nparams = sys_.nparams;
    rep.seed = seed;
    rep.groebner_basis = groebner_basis();
    rep.components = decompose_zero_set(rep.groebner_basis, sys_.nparams);

    for (const auto& c : rep.components) {
        if (component_matches_trivial(sys_, c)) rep.matched.trivial_law = true;
        if (component_matches_livernet_loday(sys_, c)) rep.matched.livernet_loday_line = true;
    }

    rep.stats.relation_rows = sys_.relations.size();
    rep.stats.rref_rows = reduced_system().relations.size();
    rep.stats.consequence_rows = consequence_matrix().rows();
    rep.stats.consequence_cols = consequence_matrix().cols();
    rep.stats.unit_block = smith().unit_block_size;
    rep.stats.residual_rows = smith().residual.rows();
    rep.stats.residual_cols = smith().residual.cols();
    rep.stats.nonzero_residual_rows = stripped_residual().rows();
    rep.stats.distinct_entries = residual_distinct_entries().size();
    rep.stats.monic_generators = obstruction_generators().size();
    std::set<std::uint32_t> degs;
    for (const auto& g : obstruction_generators()) degs.insert(g.total_degree());
    rep.stats.generator_degrees.assign(degs.begin(), degs.end());

    SplitMix64 rng{seed};
    for (std::size_t k = 0; k < spot_check_count; ++k) {
        const auto point = random_point(rng, sys_.nparams);
        const auto cert = certify(point);
        SpotCheck sc;
        sc.point = point;
        sc.certified = cert.is_law;
        sc.gb_member = zero_set_membership(groebner_basis(), point);
        sc.rank = cert.rank;
        rep.spot_checks.push_back(std::move(sc));
    }
    return rep;
}

ClassificationReport run_classification(const RelationSystem& sys) {
    Classifier c(sys);
    return c.run();
}

CertifyResult certify_point(const RelationSystem& sys, const std::vector<Rational>& point) {
    Classifier c(sys);
    return c.certify(point);
}

namespace {

// row vector of a straightened arity-3 tree over the rational field
void accumulate_tree(std::vector<Rational>& row, const RawTree& t, int scale) {
    const auto [sign, canon] = straighten(t);
    row[basis_index(canon)] += Rational(sign * scale);
}

}  // namespace

bool phi_associativity_reduces(const Rational& q) {
    const RelationSystem sys = build_com_lie_system();
    const RationalMatrix rows = relation_matrix(sys).eval({Rational(1), Rational(0), q});

    // associator of x*y := xy + [x,y], expanded over the generator choices
    std::vector<Rational> v(basis(3).size(), Rational(0));
    for (const Generator outer : {Generator::Com, Generator::Lie}) {
        for (const Generator inner : {Generator::Com, Generator::Lie}) {
            accumulate_tree(v,
                            RawTree::make_node(outer,
                                               RawTree::make_node(inner, RawTree::make_leaf(1),
                                                                  RawTree::make_leaf(2)),
                                               RawTree::make_leaf(3)),
                            +1);
            accumulate_tree(v,
                            RawTree::make_node(outer, RawTree::make_leaf(1),
                                               RawTree::make_node(inner, RawTree::make_leaf(2),
                                                                  RawTree::make_leaf(3))),
                            -1);
        }
    }
    return row_space_contains(rows, v);
}

bool rescaling_maps_parameter(const Rational& q, const Rational& scale) {
    if (scale.is_zero()) throw std::invalid_argument("rescaling_maps_parameter: zero scale");
    const RelationSystem sys = build_com_lie_system();
    const std::vector<Rational> at_q = {Rational(1), Rational(0), q};
    const std::vector<Rational> at_s2q = {Rational(1), Rational(0), scale * scale * q};
    RationalMatrix lhs, rhs;
    for (const auto& rel : sys.relations) {
        std::vector<Rational> lrow, rrow;
        for (const auto& e : rescale_lie_generator(rel, scale).to_row()) lrow.push_back(e.eval(at_q));
        for (const auto& e : rel.to_row()) rrow.push_back(e.eval(at_s2q));
        lhs.push_back(std::move(lrow));
        rhs.push_back(std::move(rrow));
    }
    return row_spaces_equal(lhs, rhs);
}

IsoCheckResult verify_livernet_loday_iso(const Rational& q, const Rational& scale) {
    if (scale.is_zero()) throw std::invalid_argument("verify_livernet_loday_iso: zero scale");
    return {phi_associativity_reduces(q), rescaling_maps_parameter(q, scale)};
}

RationalMatrix trivial_law_rows(SystemKind kind) {
    const std::size_t n = basis(3).size();
    auto unit = [&](std::size_t i) {
        std::vector<Rational> r(n, Rational(0));
        r[i] = Rational(1);
        return r;
    };
    RationalMatrix rows;
    // associativity family
    std::vector<Rational> a1(n, Rational(0)), a2(n, Rational(0));
    a1[0] = Rational(1);
    a1[2] = Rational(-1);
    a2[0] = Rational(-1);
    a2[1] = Rational(1);
    rows.push_back(a1);
    rows.push_back(a2);
    // the mixed bracket family vanishes
    rows.push_back(unit(3));
    rows.push_back(unit(4));
    rows.push_back(unit(5));
    if (kind == SystemKind::ComLie) {
        std::vector<Rational> jac(n, Rational(0));
        jac[9] = Rational(1);
        jac[10] = Rational(-1);
        jac[11] = Rational(1);
        rows.push_back(jac);
    } else {
        rows.push_back(unit(9));
        rows.push_back(unit(10));
        rows.push_back(unit(11));
    }
    return rows;
}

PolyMatrix livernet_loday_rows() {
    const std::size_t m = 1;
    const auto& b3 = basis(3);
    const Poly q = Poly::variable(m, 0);
    const Permutation cyc132 = {3, 1, 2};
    const Permutation cyc123 = {2, 3, 1};

    OperadElement assoc(3, m);
    assoc.add_term(b3[0], Rational(1));
    assoc.add_term(b3[2], Rational(-1));
    assoc.add_term(b3[10], -q);

    OperadElement deriv(3, m);
    deriv.add_term(b3[3], Rational(1));
    deriv.add_term(b3[7], Rational(-1));
    deriv.add_term(b3[8], Rational(-1));

    OperadElement jac(3, m);
    jac.add_term(b3[9], Rational(1));
    jac.add_term(b3[10], Rational(-1));
    jac.add_term(b3[11], Rational(1));

    const std::vector<OperadElement> rels = {assoc,  act(cyc132, assoc), deriv,
                                             act(cyc132, deriv), act(cyc123, deriv), jac};
    PolyMatrix mat(rels.size(), b3.size(), m);
    for (std::size_t i = 0; i < rels.size(); ++i) mat.set_row(i, rels[i].to_row());
    return mat;
}

namespace {

// t1 -> 1, t2 -> 0, t3 -> the single surviving parameter
Poly restrict_to_line(const Poly& p) {
    Poly out(1);
    for (const auto& [m, c] : p.terms()) {
        if (m.exp(1) > 0) continue;
        out.add_term(Monomial(std::vector<std::uint32_t>{m.exp(2)}), c);
    }
    return out;
}

}  // namespace

bool component_matches_trivial(const RelationSystem& sys, const SolutionComponent& c) {
    if (!c.is_zero_point()) return false;
    const std::vector<Rational> origin(sys.nparams, Rational(0));
    return row_spaces_equal(relation_matrix(sys).eval(origin), trivial_law_rows(system_from_name(sys.name)));
}

bool component_matches_livernet_loday(const RelationSystem& sys, const SolutionComponent& c) {
    if (sys.name != "com-lie" || sys.nparams != 3) return false;
    if (c.free_count() != 1 || !c.free_coord[2]) return false;
    if (c.base[0] != Rational(1) || !c.base[1].is_zero()) return false;

    // the deformed family as a one-parameter matrix: t1=1, t2=0, t3 free
    const PolyMatrix full = relation_matrix(sys);
    PolyMatrix line(full.rows(), full.cols(), 1);
    for (std::size_t i = 0; i < full.rows(); ++i)
        for (std::size_t j = 0; j < full.cols(); ++j) line.at(i, j) = restrict_to_line(full.at(i, j));
    try {
        // unit-pivot RREF uses only specialization-safe operations, so equal
        // reduced forms give row-space equality at every parameter value
        return rref_unit_pivots(line) == rref_unit_pivots(livernet_loday_rows());
    } catch (const NonUnitPivotError&) {
        // generic fallback: degree bound 12 on all minors, 13 samples decide
        bool ok = true;
        for (int k = 0; k <= 12 && ok; ++k) {
            const Rational qk(k);
            RationalMatrix a, b;
            const PolyMatrix ll = livernet_loday_rows();
            for (std::size_t i = 0; i < line.rows(); ++i) {
                std::vector<Rational> r;
                for (std::size_t j = 0; j < line.cols(); ++j) r.push_back(line.at(i, j).eval({qk}));
                a.push_back(std::move(r));
            }
            for (std::size_t i = 0; i < ll.rows(); ++i) {
                std::vector<Rational> r;
                for (std::size_t j = 0; j < ll.cols(); ++j) r.push_back(ll.at(i, j).eval({qk}));
                b.push_back(std::move(r));
            }
            ok = row_spaces_equal(a, b);
        }
        return ok;
    }
}

}  // namespace opdl
