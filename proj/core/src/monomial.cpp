#include "opdl/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace opdl {

Monomial Monomial::var(std::size_t nvars, std::size_t index, std::uint32_t e) {
    if (index >= nvars) throw std::invalid_argument("Monomial: variable index out of range");
    Monomial m(nvars);
    m.exps_[index] = e;
    return m;
}

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for (auto e : exps_) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (nvars() != o.nvars()) throw std::invalid_argument("Monomial: variable count mismatch");
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (nvars() != o.nvars()) throw std::invalid_argument("Monomial: variable count mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    if (!divides(o)) throw std::invalid_argument("Monomial: not divisible");
    Monomial r = o;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    if (nvars() != o.nvars()) throw std::invalid_argument("Monomial: variable count mismatch");
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], o.exps_[i]);
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    if (nvars() != o.nvars()) throw std::invalid_argument("Monomial: variable count mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0 && o.exps_[i] > 0) return false;
    return true;
}

bool Monomial::deglex_less(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("Monomial: variable count mismatch");
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // ties: t1 dominates, so the vector that is lexicographically larger wins
    return a.exps_ < b.exps_;
}

std::string Monomial::str() const {
    std::string s;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "t" + std::to_string(i + 1);
        if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace opdl
