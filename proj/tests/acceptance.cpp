#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "opdl/classify.hpp"
#include "opdl/report_io.hpp"
#include "oracles.hpp"

using namespace opdl;

namespace {

Classifier& com_lie() {
    static Classifier c(build_com_lie_system());
    return c;
}

struct Criterion {
    int number;
    std::string title;
    bool ok = true;
    std::vector<std::string> failures;

    Criterion(int n, std::string t) : number(n), title(std::move(t)) {}

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }

    template <typename T, typename U>
    void expect_eq(const T& actual, const U& expected, const std::string& what) {
        std::ostringstream os;
        os << what << " (expected " << expected << ", got " << actual << ")";
        expect(actual == static_cast<T>(expected), os.str());
    }

    ~Criterion() {
        std::cout << "[criterion " << number << "] " << (ok ? "PASS" : "FAIL") << " - " << title;
        for (const auto& f : failures) std::cout << "\n    failed: " << f;
        std::cout << std::endl;
    }
};

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

PolyMatrix matrix_from_strings(const std::vector<std::vector<const char*>>& rows) {
    PolyMatrix m(rows.size(), rows[0].size(), 3);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Poly::parse(3, rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("criterion 1: ordered bases of arities 3 and 4") {
    Criterion c(1, "basis counts and the final eight monomials of each association type");
    const auto& b3 = basis(3);
    const auto& b4 = basis(4);
    c.expect_eq(b3.size(), 12u, "|basis(3)|");
    c.expect_eq(b4.size(), 120u, "|basis(4)|");
    std::size_t type1 = 0, type2 = 0;
    for (const auto& m : b4) (m.shape() == TreeShape::Type1 ? type1 : type2)++;
    c.expect_eq(type1, 96u, "association type 1 count");
    c.expect_eq(type2, 24u, "association type 2 count");

    const char* last_type1[8] = {
        "((x3x4)x2)x1", "([x3,x4]x2)x1", "[x3x4,x2]x1", "[[x3,x4],x2]x1",
        "[(x3x4)x2,x1]", "[[x3,x4]x2,x1]", "[[x3x4,x2],x1]", "[[[x3,x4],x2],x1]",
    };
    const char* last_type2[8] = {
        "(x1x4)(x2x3)", "(x1x4)[x2,x3]", "[x1,x4](x2x3)", "[x1,x4][x2,x3]",
        "[x1x4,x2x3]", "[x1x4,[x2,x3]]", "[[x1,x4],x2x3]", "[[x1,x4],[x2,x3]]",
    };
    for (std::size_t i = 0; i < 8; ++i) {
        c.expect_eq(b4[88 + i].render(), std::string(last_type1[i]),
                    "type 1 monomial " + std::to_string(89 + i));
        c.expect_eq(b4[112 + i].render(), std::string(last_type2[i]),
                    "type 2 monomial " + std::to_string(113 + i));
    }
    CHECK_MESSAGE(c.ok, "criterion 1");
}

TEST_CASE("criterion 2: the six-row relation matrix") {
    Criterion c(2, "the relation system renders the 6 x 12 coefficient matrix exactly");
    const auto expected = matrix_from_strings({
        {"0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "-1", "1"},
        {"0", "0", "0", "1", "0", "0", "0", "-t1", "-t1", "0", "-t2", "-t2"},
        {"0", "0", "0", "0", "1", "0", "-t1", "0", "t1", "-t2", "0", "t2"},
        {"0", "0", "0", "0", "0", "1", "t1", "t1", "0", "t2", "t2", "0"},
        {"1", "0", "-1", "0", "0", "0", "0", "0", "0", "0", "-t3", "0"},
        {"-1", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "t3"},
    });
    const auto actual = relation_matrix(build_com_lie_system());
    c.expect_eq(actual.rows(), expected.rows(), "row count");
    for (std::size_t i = 0; i < expected.rows(); ++i)
        for (std::size_t j = 0; j < expected.cols(); ++j)
            c.expect(actual.at(i, j) == expected.at(i, j),
                     "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                         actual.at(i, j).str() + " expected " + expected.at(i, j).str());
    CHECK_MESSAGE(c.ok, "criterion 2");
}

TEST_CASE("criterion 3: unit-pivot reduced row echelon form") {
    Criterion c(3, "RREF of the relation matrix matches entry for entry");
    const auto expected = matrix_from_strings({
        {"1", "0", "-1", "0", "0", "0", "0", "0", "0", "0", "-t3", "0"},
        {"0", "1", "-1", "0", "0", "0", "0", "0", "0", "0", "-t3", "t3"},
        {"0", "0", "0", "1", "0", "0", "0", "-t1", "-t1", "0", "-t2", "-t2"},
        {"0", "0", "0", "0", "1", "0", "-t1", "0", "t1", "0", "-t2", "2*t2"},
        {"0", "0", "0", "0", "0", "1", "t1", "t1", "0", "0", "2*t2", "-t2"},
        {"0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "-1", "1"},
    });
    const auto actual = rref_unit_pivots(relation_matrix(build_com_lie_system()));
    c.expect_eq(actual.rows(), expected.rows(), "row count");
    for (std::size_t i = 0; i < expected.rows() && i < actual.rows(); ++i)
        for (std::size_t j = 0; j < expected.cols(); ++j)
            c.expect(actual.at(i, j) == expected.at(i, j),
                     "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                         actual.at(i, j).str() + " expected " + expected.at(i, j).str());
    CHECK_MESSAGE(c.ok, "criterion 3");
}

TEST_CASE("criterion 4: straightened partial composition r1 o3 lambda") {
    Criterion c(4, "the worked partial composition matches with signs +1, -1, +t3");
    const auto& rsys = com_lie().reduced_system();
    const auto out = partial_compose_into(rsys.relations[0], 3, Generator::Lie);

    OperadElement expected(4, 3);
    const auto find = [&](const char* s) {
        for (const auto& mm : basis(4))
            if (mm.render() == s) return mm;
        throw std::logic_error("monomial not found");
    };
    expected.add_term(find("(x1x2)[x3,x4]"), Rational(1));
    expected.add_term(find("([x3,x4]x2)x1"), Rational(-1));
    expected.add_term(find("[[[x3,x4],x1],x2]"), Poly::variable(3, 2));
    c.expect(out == expected, "element mismatch: got " + out.render());
    CHECK_MESSAGE(c.ok, "criterion 4");
}

TEST_CASE("criterion 5: pipeline checkpoints") {
    Criterion c(5, "consequence matrix, partial Smith form and entry-generator checkpoints");
    const auto t0 = std::chrono::steady_clock::now();
    auto& cls = com_lie();
    c.expect_eq(cls.consequence_matrix().rows(), 1152u, "consequence rows");
    c.expect_eq(cls.consequence_matrix().cols(), 120u, "consequence cols");
    c.expect_eq(cls.smith().unit_block_size, 96u, "unit block");
    c.expect_eq(cls.smith().residual.rows(), 1056u, "residual rows");
    c.expect_eq(cls.smith().residual.cols(), 24u, "residual cols");
    c.expect_eq(cls.stripped_residual().rows(), 372u, "stripped residual rows");
    c.expect_eq(cls.residual_distinct_entries().size(), 126u, "distinct entries");
    c.expect_eq(cls.obstruction_generators().size(), 56u, "monic generators");
    for (const auto& g : cls.obstruction_generators())
        c.expect(g.total_degree() == 2 || g.total_degree() == 3,
                 "generator degree outside {2,3}: " + g.str());
    const double dt = seconds_since(t0);
    c.expect(dt < 60.0, "runtime " + std::to_string(dt) + "s exceeds 60s");
    CHECK_MESSAGE(c.ok, "criterion 5");
}

TEST_CASE("criterion 6: reduced Groebner basis of the obstruction ideal") {
    Criterion c(6, "reduced basis is exactly {t2, t1*t3 - t3, t1^2 - t1}");
    const auto& gens = com_lie().obstruction_generators();
    c.expect(!gens.empty(), "no generators");
    const auto gb = com_lie().groebner_basis();
    c.expect_eq(gb.size(), 3u, "basis size");
    const std::vector<Poly> expected = {Poly::parse(3, "t2"), Poly::parse(3, "t1*t3 - t3"),
                                        Poly::parse(3, "t1^2 - t1")};
    for (std::size_t i = 0; i < expected.size() && i < gb.size(); ++i)
        c.expect(gb[i] == expected[i], "element " + std::to_string(i + 1) + " = " + gb[i].str() +
                                           " expected " + expected[i].str());
    CHECK_MESSAGE(c.ok, "criterion 6");
}

TEST_CASE("criterion 7: solution set and reproduced relation families") {
    Criterion c(7, "zero set is the origin plus the line, matching the two known laws");
    const auto rep = com_lie().run();
    c.expect_eq(rep.components.size(), 2u, "component count");
    if (rep.components.size() == 2) {
        c.expect(rep.components[0].describe() == "(0, 0, 0)",
                 "first component " + rep.components[0].describe());
        c.expect(rep.components[1].describe() == "(1, 0, t3)",
                 "second component " + rep.components[1].describe());
    }
    c.expect(rep.matched.trivial_law, "origin does not reproduce the undeformed relation family");
    c.expect(rep.matched.livernet_loday_line,
             "line does not reproduce the deformed relation family");
    CHECK_MESSAGE(c.ok, "criterion 7");
}

TEST_CASE("criterion 8: certification agrees with basis membership") {
    Criterion c(8, "rank certification vs Groebner membership on 27 points");
    const auto t0 = std::chrono::steady_clock::now();
    auto& cls = com_lie();
    const auto& gb = cls.groebner_basis();

    std::vector<std::vector<Rational>> points = {
        {Rational(0), Rational(0), Rational(0)}, {Rational(1), Rational(0), Rational(0)},
        {Rational(1), Rational(0), Rational(1)}, {Rational(1), Rational(0), Rational(-3)},
        {Rational(1), Rational(1), Rational(0)}, {Rational(0), Rational(0), Rational(1)},
        {Rational(2), Rational(0), Rational(0)},
    };
    oracles::Rng rng{20260808};
    for (int i = 0; i < 20; ++i) points.push_back(rng.point(3));

    for (const auto& p : points) {
        const auto cert = cls.certify(p);
        const bool member = zero_set_membership(gb, p);
        std::string label = "(" + p[0].str() + "," + p[1].str() + "," + p[2].str() + ")";
        c.expect(cert.is_law == member, "disagreement at " + label);
        if (member) c.expect_eq(cert.rank, 96u, "rank at solution " + label);
        if (!member) c.expect(cert.rank > 96, "rank not above 96 at non-solution " + label);
    }
    const double dt = seconds_since(t0);
    c.expect(dt < 120.0, "runtime " + std::to_string(dt) + "s exceeds 120s");
    CHECK_MESSAGE(c.ok, "criterion 8");
}

TEST_CASE("criterion 9: composite dimension against the factorial") {
    Criterion c(9, "set-partition dimension count equals n! for n = 1..6");
    long fact = 1;
    for (int n = 1; n <= 6; ++n) {
        fact *= n;
        c.expect_eq(composite_dimension(n), fact, "dimension at arity " + std::to_string(n));
    }
    CHECK_MESSAGE(c.ok, "criterion 9");
}

TEST_CASE("criterion 10: isomorphism checks on the deformed family") {
    Criterion c(10, "product-plus-bracket associativity at q = 1 and square rescaling of q");
    const bool at_one = phi_associativity_reduces(Rational(1));
    if (!at_one) {
        // report the locus the machine actually finds
        std::string locus;
        for (int q = -2; q <= 2; ++q)
            if (phi_associativity_reduces(Rational(q))) locus += (locus.empty() ? "" : ", ") + std::to_string(q);
        c.expect(at_one,
                 "associator does not reduce to zero at q = 1; it reduces exactly at q in {" +
                     locus + "} under the implemented sign conventions");
    }
    for (const Rational& q : {Rational(0), Rational(1), Rational(5)})
        for (const Rational& s : {Rational(1), Rational(2), Rational(1, 3)})
            c.expect(rescaling_maps_parameter(q, s),
                     "rescaling failed at q=" + q.str() + ", scale=" + s.str());
    CHECK_MESSAGE(c.ok, "criterion 10");
}

TEST_CASE("criterion 11: the two-step nilpotent variant") {
    Criterion c(11, "full pipeline on the nilpotent system finds only the trivial law");
    const auto t0 = std::chrono::steady_clock::now();
    Classifier cls(build_nlie2_system());
    const auto rep = cls.run();
    c.expect_eq(rep.components.size(), 1u, "component count");
    if (!rep.components.empty()) {
        c.expect(rep.components[0].is_zero_point(),
                 "component is not the origin: " + rep.components[0].describe());
    }
    c.expect(rep.matched.trivial_law, "trivial family not reproduced");
    c.expect(!rep.matched.livernet_loday_line, "unexpected deformed family");
    const double dt = seconds_since(t0);
    c.expect(dt < 60.0, "runtime " + std::to_string(dt) + "s exceeds 60s");
    CHECK_MESSAGE(c.ok, "criterion 11");
}

TEST_CASE("criterion 12: byte-identical classification runs") {
    Criterion c(12, "two consecutive classify runs emit identical JSON");
    // library level
    Classifier a(build_com_lie_system());
    Classifier b(build_com_lie_system());
    c.expect(report_to_json(a.run(3, 5)) == report_to_json(b.run(3, 5)),
             "library reports differ");

#ifdef OPDL_CLI_PATH
    // command-line level
    const std::string cli = OPDL_CLI_PATH;
    const std::string cmd1 = cli + " classify --system com-lie --output json --output-path acc12_a.json";
    const std::string cmd2 = cli + " classify --system com-lie --output json --output-path acc12_b.json";
    const int rc1 = std::system(cmd1.c_str());
    const int rc2 = std::system(cmd2.c_str());
    c.expect(rc1 == 0 && rc2 == 0, "classify runs did not exit cleanly");
    auto slurp = [](const char* path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    const std::string ja = slurp("acc12_a.json");
    const std::string jb = slurp("acc12_b.json");
    c.expect(!ja.empty(), "first run produced no output");
    c.expect(ja == jb, "run outputs differ byte for byte");
    std::remove("acc12_a.json");
    std::remove("acc12_b.json");
#endif
    CHECK_MESSAGE(c.ok, "criterion 12");
}
