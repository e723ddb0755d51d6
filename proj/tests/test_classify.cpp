#include <doctest.h>

#include "opdl/classify.hpp"
#include "opdl/report_io.hpp"
#include "oracles.hpp"

using namespace opdl;

TEST_CASE("composite_dimension: set-partition count equals the factorial") {
    const int expected[] = {1, 2, 6, 24, 120, 720};
    long fact = 1;
    for (int n = 1; n <= 6; ++n) {
        fact *= n;
        CHECK(composite_dimension(n) == expected[n - 1]);
        CHECK(composite_dimension(n) == fact);
    }
    CHECK_THROWS_AS(composite_dimension(0), std::domain_error);
    CHECK_THROWS_AS(composite_dimension(7), std::domain_error);
}

TEST_CASE("composite_dimension: two-step nilpotent variant counts pairings") {
    const int expected[] = {1, 2, 4, 10, 26, 76};
    for (int n = 1; n <= 6; ++n) CHECK(composite_dimension(n, SystemKind::NLie2) == expected[n - 1]);
    // the systems carry the arity-4 values used by certification
    CHECK(build_com_lie_system().composite_dim4 == composite_dimension(4, SystemKind::ComLie));
    CHECK(build_nlie2_system().composite_dim4 == composite_dimension(4, SystemKind::NLie2));
}

TEST_CASE("decompose_zero_set: the classification ideal splits into a point and a line") {
    const std::size_t m = 3;
    const std::vector<Poly> gb = {Poly::parse(m, "t2"), Poly::parse(m, "t1*t3 - t3"),
                                  Poly::parse(m, "t1^2 - t1")};
    const auto comps = decompose_zero_set(gb, m);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].is_zero_point());
    CHECK(comps[0].describe() == "(0, 0, 0)");
    CHECK(comps[1].base[0] == Rational(1));
    CHECK(comps[1].base[1].is_zero());
    CHECK(comps[1].free_coord == std::vector<bool>{false, false, true});
    CHECK(comps[1].describe() == "(1, 0, t3)");
}

TEST_CASE("decompose_zero_set: edge shapes") {
    const std::size_t m = 2;
    // inconsistent ideal: no solutions
    CHECK(decompose_zero_set({Poly::constant(m, Rational(1))}, m).empty());
    // zero ideal: everything is a solution
    const auto all = decompose_zero_set({}, m);
    REQUIRE(all.size() == 1);
    CHECK(all[0].free_count() == 2);
    // a univariate generator with three rational roots
    const auto roots = decompose_zero_set({Poly::parse(1, "t1^3 + t1^2 - 2*t1")}, 1);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].describe() == "(-2)");
    CHECK(roots[1].describe() == "(0)");
    CHECK(roots[2].describe() == "(1)");
    // irreducible over the rationals: refuse rather than guess
    CHECK_THROWS_AS(decompose_zero_set({Poly::parse(1, "t1^2 + 1")}, 1), UnclassifiedVarietyError);
    // genuinely multivariate generator with no univariate handle
    CHECK_THROWS_AS(decompose_zero_set({Poly::parse(2, "t1*t2 - 1")}, 2), UnclassifiedVarietyError);
}

TEST_CASE("certify: rank dichotomy at selected points") {
    Classifier cls(build_com_lie_system());

    const auto good = cls.certify({Rational(0), Rational(0), Rational(0)});
    CHECK(good.is_law);
    CHECK(good.rank == 96);
    CHECK(good.expected_rank == 96);
    CHECK_FALSE(good.obstruction.has_value());

    const auto bad = cls.certify({Rational(1), Rational(1), Rational(0)});
    CHECK_FALSE(bad.is_law);
    CHECK(bad.rank > 96);
    REQUIRE(bad.obstruction.has_value());
    CHECK_FALSE(bad.obstruction_value->is_zero());
    CHECK(bad.obstruction->eval({Rational(1), Rational(1), Rational(0)}) == *bad.obstruction_value);

    CHECK_THROWS_AS(cls.certify({Rational(0)}), std::invalid_argument);
}

TEST_CASE("phi associativity locus: the product-plus-bracket square-root point") {
    CHECK(phi_associativity_reduces(Rational(-1)));
    CHECK_FALSE(phi_associativity_reduces(Rational(1)));
    CHECK_FALSE(phi_associativity_reduces(Rational(0)));
    CHECK_FALSE(phi_associativity_reduces(Rational(2)));
}

TEST_CASE("rescaling the bracket moves the line parameter by a square") {
    CHECK(rescaling_maps_parameter(Rational(1), Rational(2)));
    CHECK(rescaling_maps_parameter(Rational(5), Rational(1, 3)));
    CHECK(rescaling_maps_parameter(Rational(0), Rational(7)));
    CHECK(rescaling_maps_parameter(Rational(-1), Rational(1)));
    CHECK_THROWS_AS(rescaling_maps_parameter(Rational(1), Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(verify_livernet_loday_iso(Rational(1), Rational(0)), std::invalid_argument);
    const auto r = verify_livernet_loday_iso(Rational(-1), Rational(2));
    CHECK(r.phi_associativity_ok);
    CHECK(r.rescaling_ok);
}

TEST_CASE("candidate matchers recognize the known families") {
    const auto sys = build_com_lie_system();
    SolutionComponent origin;
    origin.base = {Rational(0), Rational(0), Rational(0)};
    origin.free_coord = {false, false, false};
    CHECK(component_matches_trivial(sys, origin));

    SolutionComponent line;
    line.base = {Rational(1), Rational(0), Rational(0)};
    line.free_coord = {false, false, true};
    CHECK(component_matches_livernet_loday(sys, line));
    CHECK_FALSE(component_matches_trivial(sys, line));

    SolutionComponent wrong;
    wrong.base = {Rational(2), Rational(0), Rational(0)};
    wrong.free_coord = {false, false, true};
    CHECK_FALSE(component_matches_livernet_loday(sys, wrong));

    const auto nsys = build_nlie2_system();
    SolutionComponent norigin;
    norigin.base = {Rational(0)};
    norigin.free_coord = {false};
    CHECK(component_matches_trivial(nsys, norigin));
}

TEST_CASE("classification report is deterministic") {
    Classifier cls(build_com_lie_system());
    const auto a = cls.run(7, 3);
    const auto b = cls.run(7, 3);
    CHECK(report_to_json(a) == report_to_json(b));
    REQUIRE(a.spot_checks.size() == 3);
    for (const auto& sc : a.spot_checks) CHECK(sc.certified == sc.gb_member);
}
