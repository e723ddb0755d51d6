#include "opdl/poly_matrix.hpp"

#include <ostream>

namespace opdl {

std::vector<Poly> PolyMatrix::row(std::size_t i) const {
    std::vector<Poly> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(at(i, j));
    return out;
}

void PolyMatrix::set_row(std::size_t i, const std::vector<Poly>& values) {
    if (values.size() != cols_) throw std::invalid_argument("PolyMatrix: row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = values[j];
}

bool PolyMatrix::is_zero_row(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) return false;
    return true;
}

RationalMatrix PolyMatrix::eval(const std::vector<Rational>& point) const {
    RationalMatrix out(rows_, std::vector<Rational>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j).eval(point);
    return out;
}

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

void PolyMatrix::write_csv(std::ostream& os, bool with_header) const {
    if (with_header) {
        os << quoted("row");
        for (std::size_t j = 0; j < cols_; ++j)
            os << "," << quoted(col_labels_[j].empty() ? "c" + std::to_string(j + 1) : col_labels_[j]);
        os << "\n";
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        os << quoted(row_labels_[i].empty() ? "r" + std::to_string(i + 1) : row_labels_[i]);
        for (std::size_t j = 0; j < cols_; ++j) os << "," << at(i, j).str();
        os << "\n";
    }
}

void PolyMatrix::write_provenance(std::ostream& os) const {
    for (std::size_t i = 0; i < rows_; ++i) os << (i + 1) << "\t" << row_labels_[i] << "\n";
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && nparams_ == o.nparams_ && data_ == o.data_;
}

}  // namespace opdl
