#include "opdl/relation_system.hpp"

#include <stdexcept>

namespace opdl {

namespace {

const Permutation kCycle132 = {3, 1, 2};  // x1->x3, x2->x1, x3->x2
const Permutation kCycle123 = {2, 3, 1};  // x1->x2, x2->x3, x3->x1

OperadElement unit_relation(std::size_t nparams, std::size_t basis_pos) {
    OperadElement e(3, nparams);
    e.add_term(basis(3)[basis_pos], Rational(1));
    return e;
}

}  // namespace

RelationSystem build_com_lie_system() {
    const std::size_t m = 3;
    const auto& b3 = basis(3);
    const Poly t1 = Poly::variable(m, 0);
    const Poly t2 = Poly::variable(m, 1);
    const Poly t3 = Poly::variable(m, 2);

    // [[x1,x2],x3] - [[x1,x3],x2] + [[x2,x3],x1]
    OperadElement jacobi(3, m);
    jacobi.add_term(b3[9], Rational(1));
    jacobi.add_term(b3[10], Rational(-1));
    jacobi.add_term(b3[11], Rational(1));

    // [x1x2,x3] - t1([x1,x3]x2 + [x2,x3]x1) - t2([[x1,x3],x2] + [[x2,x3],x1])
    OperadElement derivation(3, m);
    derivation.add_term(b3[3], Rational(1));
    derivation.add_term(b3[7], -t1);
    derivation.add_term(b3[8], -t1);
    derivation.add_term(b3[10], -t2);
    derivation.add_term(b3[11], -t2);

    // (x1x2)x3 - (x2x3)x1 - t3[[x1,x3],x2]
    OperadElement associativity(3, m);
    associativity.add_term(b3[0], Rational(1));
    associativity.add_term(b3[2], Rational(-1));
    associativity.add_term(b3[10], -t3);

    RelationSystem sys;
    sys.name = "com-lie";
    sys.nparams = m;
    sys.relations = {jacobi,
                     derivation,
                     act(kCycle132, derivation),
                     act(kCycle123, derivation),
                     associativity,
                     act(kCycle132, associativity)};
    sys.labels = {"jacobi",
                  "derivation",
                  "derivation.(1 3 2)",
                  "derivation.(1 2 3)",
                  "associativity",
                  "associativity.(1 3 2)"};
    sys.composite_dim4 = 24;
    return sys;
}

RelationSystem build_nlie2_system() {
    const std::size_t m = 1;
    const auto& b3 = basis(3);
    const Poly t1 = Poly::variable(m, 0);

    // all weight-2 double brackets vanish
    OperadElement nil1 = unit_relation(m, 9);
    OperadElement nil2 = unit_relation(m, 10);
    OperadElement nil3 = unit_relation(m, 11);

    // the double-bracket tail of the derivation relation is absorbed by the
    // nilpotency rows, so only the t1 tail survives
    OperadElement derivation(3, m);
    derivation.add_term(b3[3], Rational(1));
    derivation.add_term(b3[7], -t1);
    derivation.add_term(b3[8], -t1);

    // the associativity relation loses its bracket tail entirely
    OperadElement associativity(3, m);
    associativity.add_term(b3[0], Rational(1));
    associativity.add_term(b3[2], Rational(-1));

    RelationSystem sys;
    sys.name = "nlie2";
    sys.nparams = m;
    sys.relations = {nil1,
                     nil2,
                     nil3,
                     derivation,
                     act(kCycle132, derivation),
                     act(kCycle123, derivation),
                     associativity,
                     act(kCycle132, associativity)};
    sys.labels = {"nilpotency-1",
                  "nilpotency-2",
                  "nilpotency-3",
                  "derivation",
                  "derivation.(1 3 2)",
                  "derivation.(1 2 3)",
                  "associativity",
                  "associativity.(1 3 2)"};
    // partitions of a 4-set into blocks of size at most two
    sys.composite_dim4 = 10;
    return sys;
}

PolyMatrix relation_matrix(const RelationSystem& sys) {
    const auto& b3 = basis(3);
    PolyMatrix mat(sys.relations.size(), b3.size(), sys.nparams);
    for (std::size_t i = 0; i < sys.relations.size(); ++i) {
        if (sys.relations[i].arity() != 3)
            throw std::invalid_argument("relation_matrix: relations must have arity 3");
        mat.set_row(i, sys.relations[i].to_row());
        mat.row_label(i) = i < sys.labels.size() ? sys.labels[i] : "r" + std::to_string(i + 1);
    }
    for (std::size_t j = 0; j < b3.size(); ++j) mat.col_label(j) = b3[j].render();
    return mat;
}

PolyMatrix rref_unit_pivots(const PolyMatrix& mat) {
    std::vector<std::vector<Poly>> rows;
    rows.reserve(mat.rows());
    for (std::size_t i = 0; i < mat.rows(); ++i) rows.push_back(mat.row(i));

    std::size_t next = 0;  // next pivot row position
    for (std::size_t col = 0; col < mat.cols() && next < rows.size(); ++col) {
        std::size_t pivot = rows.size();
        bool nonzero_seen = false;
        for (std::size_t i = next; i < rows.size(); ++i) {
            if (rows[i][col].is_zero()) continue;
            nonzero_seen = true;
            if (rows[i][col].is_scalar()) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows.size()) {
            if (nonzero_seen)
                throw NonUnitPivotError("rref_unit_pivots: no scalar pivot in column " +
                                        std::to_string(col + 1));
            continue;
        }
        std::swap(rows[next], rows[pivot]);
        const Rational inv = rows[next][col].as_scalar().inverse();
        for (auto& e : rows[next]) e = e * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == next || rows[i][col].is_zero()) continue;
            const Poly f = rows[i][col];
            for (std::size_t j = 0; j < mat.cols(); ++j)
                if (!rows[next][j].is_zero()) rows[i][j] -= f * rows[next][j];
        }
        ++next;
    }

    PolyMatrix out(next, mat.cols(), mat.nparams());
    for (std::size_t i = 0; i < next; ++i) {
        out.set_row(i, rows[i]);
        out.row_label(i) = "r" + std::to_string(i + 1);
    }
    for (std::size_t j = 0; j < mat.cols(); ++j) out.col_label(j) = mat.col_label(j);
    return out;
}

RelationSystem rref_system(const RelationSystem& sys) {
    const PolyMatrix r = rref_unit_pivots(relation_matrix(sys));
    RelationSystem out;
    out.name = sys.name;
    out.nparams = sys.nparams;
    out.composite_dim4 = sys.composite_dim4;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        out.relations.push_back(OperadElement::from_row(3, sys.nparams, r.row(i)));
        out.labels.push_back("r" + std::to_string(i + 1));
    }
    return out;
}

PolyMatrix consequences_arity4(const RelationSystem& sys) {
    if (sys.relations.empty())
        throw std::invalid_argument("consequences_arity4: empty relation system");
    for (const auto& r : sys.relations)
        if (r.arity() != 3)
            throw std::invalid_argument("consequences_arity4: relations must have arity 3");

    struct Comp {
        std::string label;
        OperadElement elem;
    };
    std::vector<Comp> comps;
    const auto rel_label = [&](std::size_t i) {
        return i < sys.labels.size() ? sys.labels[i] : "r" + std::to_string(i + 1);
    };
    for (std::size_t i = 0; i < sys.relations.size(); ++i) {
        for (int j = 1; j <= 3; ++j) {
            comps.push_back({rel_label(i) + " o" + std::to_string(j) + " mu",
                             partial_compose_into(sys.relations[i], j, Generator::Com)});
            comps.push_back({rel_label(i) + " o" + std::to_string(j) + " lambda",
                             partial_compose_into(sys.relations[i], j, Generator::Lie)});
        }
    }
    for (std::size_t i = 0; i < sys.relations.size(); ++i) {
        comps.push_back({"mu o1 " + rel_label(i),
                         partial_compose_outer(Generator::Com, sys.relations[i])});
        comps.push_back({"lambda o1 " + rel_label(i),
                         partial_compose_outer(Generator::Lie, sys.relations[i])});
    }

    const auto perms = all_permutations(4);
    const auto& b4 = basis(4);
    PolyMatrix mat(comps.size() * perms.size(), b4.size(), sys.nparams);
    std::size_t row = 0;
    for (const auto& comp : comps) {
        for (const auto& sigma : perms) {
            mat.set_row(row, act(sigma, comp.elem).to_row());
            mat.row_label(row) = comp.label + " | " + cycle_notation(sigma);
            ++row;
        }
    }
    for (std::size_t j = 0; j < b4.size(); ++j) mat.col_label(j) = b4[j].render();
    return mat;
}

}  // namespace opdl
