#ifndef OPDL_PARTIAL_SMITH_HPP
#define OPDL_PARTIAL_SMITH_HPP

#include <string>
#include <string_view>
#include <vector>

#include "opdl/poly_matrix.hpp"

namespace opdl {

/// one pivot of the reduction; row/col are 0-based indices into the input
struct PivotStep {
    std::size_t row = 0;
    std::size_t col = 0;
    Rational pivot;
};

/// Outcome of the partial Smith reduction: the input is row/column
/// equivalent (invertible rational scaling, polynomial elimination steps,
/// permutations) to blockdiag(I_r, residual), and the residual contains no
/// nonzero rational scalar entry.
struct PartialSmithResult {
    std::size_t unit_block_size = 0;
    PolyMatrix residual;
    std::vector<PivotStep> transcript;
};

/// Pivot on nonzero rational scalar entries until none remain. Selection is
/// Markowitz style: minimize (nonzeros in row) * (nonzeros in column) over
/// the active block, ties broken by lowest (row, col) in the input indexing.
PartialSmithResult partial_smith(const PolyMatrix& mat);

/// Re-run the reduction with the pivot sequence forced from a transcript.
/// Throws std::invalid_argument if a recorded pivot is no longer a usable
/// scalar at its step.
PartialSmithResult replay_partial_smith(const PolyMatrix& mat, const std::vector<PivotStep>& transcript);

PolyMatrix strip_zero_rows(const PolyMatrix& mat);

/// distinct nonzero entries, sorted (deglex on leading monomial, then term order)
std::vector<Poly> distinct_entries(const PolyMatrix& mat);

/// monic forms of the distinct nonzero entries, deduplicated and sorted
std::vector<Poly> entry_generators(const PolyMatrix& mat);

std::string transcript_to_json(const std::vector<PivotStep>& transcript);
std::vector<PivotStep> transcript_from_json(std::string_view text);

}  // namespace opdl

#endif
