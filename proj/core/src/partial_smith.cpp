#include "opdl/partial_smith.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace opdl {

namespace {

struct Reducer {
    std::vector<std::vector<Poly>> w;  // working copy
    std::vector<std::size_t> rperm;    // working row -> input row
    std::vector<std::size_t> cperm;    // working col -> input col
    std::size_t rows, cols;

    explicit Reducer(const PolyMatrix& mat) : rows(mat.rows()), cols(mat.cols()) {
        w.reserve(rows);
        for (std::size_t i = 0; i < rows; ++i) w.push_back(mat.row(i));
        rperm.resize(rows);
        cperm.resize(cols);
        for (std::size_t i = 0; i < rows; ++i) rperm[i] = i;
        for (std::size_t j = 0; j < cols; ++j) cperm[j] = j;
    }

    // Markowitz cost over the active block; returns rows (not found)
    std::pair<std::size_t, std::size_t> select_pivot(std::size_t step) const {
        std::vector<std::size_t> rnnz(rows, 0), cnnz(cols, 0);
        for (std::size_t i = step; i < rows; ++i)
            for (std::size_t j = step; j < cols; ++j)
                if (!w[i][j].is_zero()) {
                    ++rnnz[i];
                    ++cnnz[j];
                }
        std::size_t best_i = rows, best_j = cols;
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        std::pair<std::size_t, std::size_t> best_orig{0, 0};
        for (std::size_t i = step; i < rows; ++i) {
            for (std::size_t j = step; j < cols; ++j) {
                const Poly& e = w[i][j];
                if (e.is_zero() || !e.is_scalar()) continue;
                const std::size_t cost = rnnz[i] * cnnz[j];
                const std::pair<std::size_t, std::size_t> orig{rperm[i], cperm[j]};
                if (best_i == rows || cost < best_cost || (cost == best_cost && orig < best_orig)) {
                    best_i = i;
                    best_j = j;
                    best_cost = cost;
                    best_orig = orig;
                }
            }
        }
        return {best_i, best_j};
    }

    // move the pivot to (step, step), scale it to 1, clear its column by row
    // operations; the row is then cleared by column operations, which only
    // erase the pivot row entries since the pivot column is already e_step
    void eliminate(std::size_t step, std::size_t pi, std::size_t pj) {
        std::swap(w[step], w[pi]);
        std::swap(rperm[step], rperm[pi]);
        if (pj != step) {
            for (std::size_t i = 0; i < rows; ++i) std::swap(w[i][step], w[i][pj]);
            std::swap(cperm[step], cperm[pj]);
        }
        const Rational inv = w[step][step].as_scalar().inverse();
        if (!inv.is_one())
            for (std::size_t j = step; j < cols; ++j)
                if (!w[step][j].is_zero()) w[step][j] = w[step][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == step || w[i][step].is_zero()) continue;
            const Poly f = w[i][step];
            for (std::size_t j = step; j < cols; ++j)
                if (!w[step][j].is_zero()) w[i][j] -= f * w[step][j];
        }
        for (std::size_t j = step + 1; j < cols; ++j) w[step][j] = Poly::zero(w[step][j].nvars());
    }

    PartialSmithResult finish(const PolyMatrix& mat, std::size_t r,
                              std::vector<PivotStep> transcript) const {
        PolyMatrix residual(rows - r, cols - r, mat.nparams());
        for (std::size_t i = r; i < rows; ++i) {
            for (std::size_t j = r; j < cols; ++j) residual.at(i - r, j - r) = w[i][j];
            residual.row_label(i - r) = mat.row_label(rperm[i]);
        }
        for (std::size_t j = r; j < cols; ++j)
            residual.col_label(j - r) = "c" + std::to_string(cperm[j] + 1);
        return {r, std::move(residual), std::move(transcript)};
    }
};

}  // namespace

PartialSmithResult partial_smith(const PolyMatrix& mat) {
    Reducer red(mat);
    std::vector<PivotStep> transcript;
    std::size_t step = 0;
    const std::size_t limit = std::min(mat.rows(), mat.cols());
    for (; step < limit; ++step) {
        const auto [pi, pj] = red.select_pivot(step);
        if (pi == red.rows) break;
        transcript.push_back({red.rperm[pi], red.cperm[pj], red.w[pi][pj].as_scalar()});
        red.eliminate(step, pi, pj);
    }
    return red.finish(mat, step, std::move(transcript));
}

PartialSmithResult replay_partial_smith(const PolyMatrix& mat, const std::vector<PivotStep>& transcript) {
    Reducer red(mat);
    std::size_t step = 0;
    for (const auto& rec : transcript) {
        if (step >= std::min(mat.rows(), mat.cols()))
            throw std::invalid_argument("replay_partial_smith: transcript too long");
        std::size_t pi = red.rows, pj = red.cols;
        for (std::size_t i = step; i < red.rows; ++i)
            if (red.rperm[i] == rec.row) pi = i;
        for (std::size_t j = step; j < red.cols; ++j)
            if (red.cperm[j] == rec.col) pj = j;
        if (pi == red.rows || pj == red.cols)
            throw std::invalid_argument("replay_partial_smith: pivot outside active block");
        const Poly& e = red.w[pi][pj];
        if (e.is_zero() || !e.is_scalar() || e.as_scalar() != rec.pivot)
            throw std::invalid_argument("replay_partial_smith: recorded pivot no longer valid");
        red.eliminate(step, pi, pj);
        ++step;
    }
    return red.finish(mat, step, transcript);
}

PolyMatrix strip_zero_rows(const PolyMatrix& mat) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < mat.rows(); ++i)
        if (!mat.is_zero_row(i)) keep.push_back(i);
    PolyMatrix out(keep.size(), mat.cols(), mat.nparams());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        out.set_row(i, mat.row(keep[i]));
        out.row_label(i) = mat.row_label(keep[i]);
    }
    for (std::size_t j = 0; j < mat.cols(); ++j) out.col_label(j) = mat.col_label(j);
    return out;
}

namespace {

std::vector<Poly> sorted_unique(std::vector<Poly> v) {
    std::sort(v.begin(), v.end(), Poly::less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::sort(v.begin(), v.end(), [](const Poly& a, const Poly& b) {
        if (a.leading_monomial() != b.leading_monomial())
            return Monomial::deglex_less(a.leading_monomial(), b.leading_monomial());
        return Poly::less(a, b);
    });
    return v;
}

}  // namespace

std::vector<Poly> distinct_entries(const PolyMatrix& mat) {
    std::vector<Poly> v;
    for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j)
            if (!mat.at(i, j).is_zero()) v.push_back(mat.at(i, j));
    if (v.empty()) return v;
    return sorted_unique(std::move(v));
}

std::vector<Poly> entry_generators(const PolyMatrix& mat) {
    std::vector<Poly> v;
    for (const auto& p : distinct_entries(mat)) v.push_back(p.monic());
    if (v.empty()) return v;
    return sorted_unique(std::move(v));
}

std::string transcript_to_json(const std::vector<PivotStep>& transcript) {
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const auto& s : transcript)
        steps.push_back({{"row", s.row}, {"col", s.col}, {"pivot", s.pivot.str()}});
    nlohmann::ordered_json doc;
    doc["pivot_steps"] = std::move(steps);
    return doc.dump(2) + "\n";
}

std::vector<PivotStep> transcript_from_json(std::string_view text) {
    const auto doc = nlohmann::json::parse(text);
    std::vector<PivotStep> out;
    for (const auto& s : doc.at("pivot_steps"))
        out.push_back({s.at("row").get<std::size_t>(), s.at("col").get<std::size_t>(),
                       Rational::parse(s.at("pivot").get<std::string>())});
    return out;
}

}  // namespace opdl
