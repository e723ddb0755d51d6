#ifndef OPDL_POLY_MATRIX_HPP
#define OPDL_POLY_MATRIX_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "opdl/poly.hpp"

namespace opdl {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Dense matrix over the polynomial ring with row provenance labels.
class PolyMatrix {
   public:
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nparams)
        : rows_(rows), cols_(cols), nparams_(nparams),
          data_(rows * cols, Poly::zero(nparams)),
          row_labels_(rows), col_labels_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nparams() const { return nparams_; }

    Poly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::string& row_label(std::size_t i) { return row_labels_[i]; }
    const std::string& row_label(std::size_t i) const { return row_labels_[i]; }
    std::string& col_label(std::size_t j) { return col_labels_[j]; }
    const std::string& col_label(std::size_t j) const { return col_labels_[j]; }

    std::vector<Poly> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Poly>& values);
    bool is_zero_row(std::size_t i) const;

    RationalMatrix eval(const std::vector<Rational>& point) const;

    /// entries in canonical text form; labels quoted (they may contain commas)
    void write_csv(std::ostream& os, bool with_header = true) const;
    void write_provenance(std::ostream& os) const;

    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

   private:
    std::size_t rows_, cols_, nparams_;
    std::vector<Poly> data_;
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
};

struct NonUnitPivotError : std::runtime_error {
    explicit NonUnitPivotError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace opdl

#endif
