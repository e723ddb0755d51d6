#include <doctest.h>

#include "opdl/classify.hpp"
#include "opdl/relation_system.hpp"
#include "oracles.hpp"

using namespace opdl;

namespace {

PolyMatrix from_strings(const std::vector<std::vector<const char*>>& rows, std::size_t nparams) {
    PolyMatrix m(rows.size(), rows[0].size(), nparams);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Poly::parse(nparams, rows[i][j]);
    return m;
}

// the six spanning relation rows over the ternary basis
const std::vector<std::vector<const char*>> kRelationRows = {
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "-1", "1"},
    {"0", "0", "0", "1", "0", "0", "0", "-t1", "-t1", "0", "-t2", "-t2"},
    {"0", "0", "0", "0", "1", "0", "-t1", "0", "t1", "-t2", "0", "t2"},
    {"0", "0", "0", "0", "0", "1", "t1", "t1", "0", "t2", "t2", "0"},
    {"1", "0", "-1", "0", "0", "0", "0", "0", "0", "0", "-t3", "0"},
    {"-1", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "t3"},
};

const std::vector<std::vector<const char*>> kRrefRows = {
    {"1", "0", "-1", "0", "0", "0", "0", "0", "0", "0", "-t3", "0"},
    {"0", "1", "-1", "0", "0", "0", "0", "0", "0", "0", "-t3", "t3"},
    {"0", "0", "0", "1", "0", "0", "0", "-t1", "-t1", "0", "-t2", "-t2"},
    {"0", "0", "0", "0", "1", "0", "-t1", "0", "t1", "0", "-t2", "2*t2"},
    {"0", "0", "0", "0", "0", "1", "t1", "t1", "0", "0", "2*t2", "-t2"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "-1", "1"},
};

}  // namespace

TEST_CASE("com-lie system reproduces the six spanning rows") {
    const auto sys = build_com_lie_system();
    REQUIRE(sys.relations.size() == 6);
    CHECK(sys.nparams == 3);
    const auto mat = relation_matrix(sys);
    CHECK(mat == from_strings(kRelationRows, 3));
    // spot rows called out explicitly
    CHECK(mat.at(1, 3) == Poly::parse(3, "1"));
    CHECK(mat.at(1, 7) == Poly::parse(3, "-t1"));
    CHECK(mat.at(4, 10) == Poly::parse(3, "-t3"));
}

TEST_CASE("unit-pivot RREF reproduces the reduced form") {
    const auto r = rref_unit_pivots(relation_matrix(build_com_lie_system()));
    CHECK(r == from_strings(kRrefRows, 3));
    // row 4 carries the entries -t1, t1, -t2, 2 t2
    CHECK(r.at(3, 6) == Poly::parse(3, "-t1"));
    CHECK(r.at(3, 8) == Poly::parse(3, "t1"));
    CHECK(r.at(3, 10) == Poly::parse(3, "-t2"));
    CHECK(r.at(3, 11) == Poly::parse(3, "2*t2"));
}

TEST_CASE("unit-pivot RREF edge cases") {
    // identity is already reduced
    PolyMatrix id(3, 3, 1);
    for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = Poly::constant(1, Rational(1));
    CHECK(rref_unit_pivots(id) == id);

    // zero rows are dropped
    PolyMatrix z(1, 4, 1);
    CHECK(rref_unit_pivots(z).rows() == 0);

    // a column with only polynomial entries cannot be pivoted
    PolyMatrix bad(1, 1, 1);
    bad.at(0, 0) = Poly::variable(1, 0);
    CHECK_THROWS_AS(rref_unit_pivots(bad), NonUnitPivotError);

    // idempotence
    const auto r = rref_unit_pivots(relation_matrix(build_com_lie_system()));
    CHECK(rref_unit_pivots(r) == r);
}

TEST_CASE("consequence matrix has 1152 rows of arity-4 coefficients") {
    Classifier cls(build_com_lie_system());
    const auto& m = cls.consequence_matrix();
    REQUIRE(m.rows() == 1152);
    REQUIRE(m.cols() == 120);

    // the identity-permutation row of r1 o3 lambda
    CHECK(m.row_label(120) == "r1 o3 lambda | id");
    const auto row = OperadElement::from_row(4, 3, m.row(120));
    OperadElement expected(4, 3);
    const auto find = [&](const char* s) {
        for (const auto& mm : basis(4))
            if (mm.render() == s) return mm;
        throw std::logic_error("monomial not found");
    };
    expected.add_term(find("(x1x2)[x3,x4]"), Rational(1));
    expected.add_term(find("([x3,x4]x2)x1"), Rational(-1));
    expected.add_term(find("[[[x3,x4],x1],x2]"), Poly::variable(3, 2));
    CHECK(row == expected);

    // enumeration is deterministic: inner compositions first, then outer
    CHECK(m.row_label(0) == "r1 o1 mu | id");
    CHECK(m.row_label(24) == "r1 o1 lambda | id");
    CHECK(m.row_label(36 * 24) == "mu o1 r1 | id");
    CHECK(m.row_label(1151) == "lambda o1 r6 | (1 4)(2 3)");

    RelationSystem empty;
    empty.nparams = 3;
    CHECK_THROWS_AS(consequences_arity4(empty), std::invalid_argument);
}

TEST_CASE("specialized rank at the origin matches the composite dimension") {
    Classifier cls(build_com_lie_system());
    const auto at_origin = cls.consequence_matrix().eval({Rational(0), Rational(0), Rational(0)});
    CHECK(oracles::rank(at_origin) == 96);       // independent elimination
    CHECK(rational_rank(at_origin) == 96);       // library elimination agrees
}

TEST_CASE("specialized rank dichotomy along the line and off it") {
    Classifier cls(build_com_lie_system());
    const auto& m = cls.consequence_matrix();
    for (const long q : {0L, 1L, 2L, -1L})
        CHECK(oracles::rank(m.eval({Rational(1), Rational(0), Rational(q)})) == 96);
    CHECK(oracles::rank(m.eval({Rational(1), Rational(1), Rational(0)})) > 96);
    CHECK(oracles::rank(m.eval({Rational(0), Rational(0), Rational(1)})) > 96);
    CHECK(oracles::rank(m.eval({Rational(2), Rational(0), Rational(0)})) > 96);
}

TEST_CASE("consequence rows are already in canonical form") {
    Classifier cls(build_com_lie_system());
    const auto& m = cls.consequence_matrix();
    const Permutation id = {1, 2, 3, 4};
    for (const std::size_t i : {std::size_t{0}, std::size_t{120}, std::size_t{777}, std::size_t{1151}}) {
        const auto e = OperadElement::from_row(4, 3, m.row(i));
        CHECK(act(id, e) == e);  // re-straightening changes nothing
    }
}

TEST_CASE("row space of the relation system is stable under the symmetric group") {
    const auto sys = build_com_lie_system();
    oracles::Rng rng{123};
    const auto perms3 = all_permutations(3);
    for (int trial = 0; trial < 5; ++trial) {
        const auto point = rng.point(3);
        RationalMatrix base;
        for (const auto& rel : sys.relations) {
            std::vector<Rational> row;
            for (const auto& e : rel.to_row()) row.push_back(e.eval(point));
            base.push_back(std::move(row));
        }
        const std::size_t base_rank = oracles::rank(base);
        for (const auto& sigma : perms3) {
            for (const auto& rel : sys.relations) {
                auto stacked = base;
                std::vector<Rational> row;
                for (const auto& e : act(sigma, rel).to_row()) row.push_back(e.eval(point));
                stacked.push_back(std::move(row));
                CHECK(oracles::rank(stacked) == base_rank);
            }
        }
    }
}

TEST_CASE("nlie2 system: one parameter, nilpotency rows, absorbed tails") {
    const auto sys = build_nlie2_system();
    CHECK(sys.nparams == 1);
    REQUIRE(sys.relations.size() == 8);
    const auto mat = relation_matrix(sys);

    // the pure bracket rows are unit vectors on the double-bracket columns
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 12; ++j)
            CHECK(mat.at(i, j) == (j == 9 + i ? Poly::constant(1, Rational(1)) : Poly::zero(1)));

    // the dropped double-bracket tails lie in the row space, the mixed tail
    // does not (it is excluded by the cyclic-sum constraint, not absorbed)
    const auto rows = mat.eval({Rational(7)});
    std::vector<Rational> bracket_tail(12, Rational(0));
    bracket_tail[10] = Rational(1);
    bracket_tail[11] = Rational(1);
    CHECK(row_space_contains(rows, bracket_tail));
    std::vector<Rational> mixed_tail(12, Rational(0));
    mixed_tail[6] = Rational(1);
    mixed_tail[8] = Rational(1);
    CHECK_FALSE(row_space_contains(rows, mixed_tail));

    // RREF keeps all eight independent rows
    CHECK(rref_unit_pivots(mat).rows() == 8);
}
