#ifndef OPDL_CLASSIFY_HPP
#define OPDL_CLASSIFY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "opdl/groebner.hpp"
#include "opdl/linalg.hpp"
#include "opdl/partial_smith.hpp"
#include "opdl/relation_system.hpp"

namespace opdl {

enum class SystemKind { ComLie, NLie2 };

RelationSystem build_system(SystemKind kind);
std::string system_name(SystemKind kind);
SystemKind system_from_name(const std::string& name);

/// dim of the composite product Com o Lie in arity n, by brute force over
/// set partitions: each block of size s contributes (s-1)! bracketings.
/// Valid for 1 <= n <= 6; equals n!.
int composite_dimension(int n);

/// same count with the second factor replaced per system; for the two-step
/// nilpotent variant only blocks of size <= 2 contribute
int composite_dimension(int n, SystemKind kind);

/// One irreducible piece of the zero set: an isolated point, or a coordinate
/// line/affine family with some coordinates free.
struct SolutionComponent {
    std::vector<Rational> base;
    std::vector<bool> free_coord;

    bool is_point() const;
    bool is_zero_point() const;
    std::size_t free_count() const;
    std::string describe() const;  // e.g. "(0, 0, 0)" or "(1, 0, t3)"

    bool operator==(const SolutionComponent& o) const {
        return base == o.base && free_coord == o.free_coord;
    }
};

struct UnclassifiedVarietyError : std::runtime_error {
    explicit UnclassifiedVarietyError(const std::string& what) : std::runtime_error(what) {}
};

/// Case analysis for low-degree ideals in few variables: univariate
/// generators are split over their rational roots and substituted through.
/// Throws UnclassifiedVarietyError when the basis leaves that regime.
std::vector<SolutionComponent> decompose_zero_set(const std::vector<Poly>& gb, std::size_t nparams);

struct MatchedCandidates {
    bool trivial_law = false;
    bool livernet_loday_line = false;
};

struct PipelineStats {
    std::size_t relation_rows = 0;
    std::size_t rref_rows = 0;
    std::size_t consequence_rows = 0;
    std::size_t consequence_cols = 0;
    std::size_t unit_block = 0;
    std::size_t residual_rows = 0;
    std::size_t residual_cols = 0;
    std::size_t nonzero_residual_rows = 0;
    std::size_t distinct_entries = 0;
    std::size_t monic_generators = 0;
    std::vector<std::uint32_t> generator_degrees;  // sorted, unique
};

struct SpotCheck {
    std::vector<Rational> point;
    bool certified = false;
    bool gb_member = false;
    std::size_t rank = 0;
};

struct ClassificationReport {
    std::string system;
    std::size_t nparams = 0;
    std::vector<Poly> groebner_basis;
    std::vector<SolutionComponent> components;
    MatchedCandidates matched;
    PipelineStats stats;
    std::uint64_t seed = 0;
    std::vector<SpotCheck> spot_checks;
};

struct CertifyResult {
    bool is_law = false;
    std::size_t rank = 0;
    std::size_t expected_rank = 0;
    std::optional<Poly> obstruction;         // entry of the stripped residual
    std::optional<Rational> obstruction_value;
};

/// Owns the relation system and lazily computes the reduction pipeline:
/// RREF of the relation matrix, the arity-4 consequence matrix, its partial
/// Smith form, the stripped residual, the entry generators and their
/// reduced Groebner basis. All stages are deterministic.
class Classifier {
   public:
    explicit Classifier(RelationSystem sys);

    const RelationSystem& system() const { return sys_; }
    const RelationSystem& reduced_system();
    const PolyMatrix& consequence_matrix();
    const PartialSmithResult& smith();
    const PolyMatrix& stripped_residual();
    const std::vector<Poly>& residual_distinct_entries();
    const std::vector<Poly>& obstruction_generators();
    const std::vector<Poly>& groebner_basis();

    /// rank test at a rational point: the point carries a distributive law
    /// iff the specialized consequence matrix has the expected rank
    CertifyResult certify(const std::vector<Rational>& point);

    ClassificationReport run(std::uint64_t seed = 0, std::size_t spot_check_count = 0);

   private:
    RelationSystem sys_;
    std::optional<RelationSystem> rref_;
    std::optional<PolyMatrix> consequences_;
    std::optional<PartialSmithResult> smith_;
    std::optional<PolyMatrix> stripped_;
    std::optional<std::vector<Poly>> distinct_;
    std::optional<std::vector<Poly>> generators_;
    std::optional<std::vector<Poly>> gb_;
};

ClassificationReport run_classification(const RelationSystem& sys);
CertifyResult certify_point(const RelationSystem& sys, const std::vector<Rational>& point);

/// does the quadratic associator of (x1 x2 + [x1,x2]) reduce to zero against
/// the deformed relation rows on the line point (1, 0, q)?
bool phi_associativity_reduces(const Rational& q);

/// rescaling the bracket generator by `scale` carries the line system at
/// parameter q into the one at scale^2 * q (row-space equality)
bool rescaling_maps_parameter(const Rational& q, const Rational& scale);

struct IsoCheckResult {
    bool phi_associativity_ok = false;
    bool rescaling_ok = false;
};

IsoCheckResult verify_livernet_loday_iso(const Rational& q, const Rational& scale);

/// relation rows of the undeformed (trivial) law for the given system
RationalMatrix trivial_law_rows(SystemKind kind);

/// relation rows of the one-parameter deformed family over k[q]
PolyMatrix livernet_loday_rows();

/// component checks used for matched_candidates
bool component_matches_trivial(const RelationSystem& sys, const SolutionComponent& c);
bool component_matches_livernet_loday(const RelationSystem& sys, const SolutionComponent& c);

}  // namespace opdl

#endif
