#include "opdl/poly.hpp"

#include <cctype>
#include <stdexcept>

namespace opdl {

Poly Poly::constant(std::size_t nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Monomial::one(nvars), c);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
    Poly p(nvars);
    p.add_term(Monomial::var(nvars, index), Rational(1));
    return p;
}

Poly Poly::term(const Monomial& m, const Rational& c) {
    Poly p(m.nvars());
    p.add_term(m, c);
    return p;
}

bool Poly::is_scalar() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_one();
}

Rational Poly::as_scalar() const {
    if (terms_.empty()) return Rational(0);
    if (!is_scalar()) throw std::invalid_argument("Poly: not a scalar");
    return terms_.begin()->second;
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw std::invalid_argument("Poly: zero polynomial has no leading term");
    return terms_.begin()->first;
}

const Rational& Poly::leading_coeff() const {
    if (terms_.empty()) throw std::invalid_argument("Poly: zero polynomial has no leading term");
    return terms_.begin()->second;
}

std::uint32_t Poly::total_degree() const {
    return leading_monomial().degree();
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    Poly r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Poly Poly::monic() const {
    if (terms_.empty()) throw std::invalid_argument("Poly: monic form of zero requested");
    return *this * leading_coeff().inverse();
}

Rational Poly::eval(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("Poly: evaluation point dimension mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (m.exp(i) > 0) v *= pow(point[i], m.exp(i));
        acc += v;
    }
    return acc;
}

Poly Poly::substitute(std::size_t index, const Rational& value) const {
    if (index >= nvars_) throw std::invalid_argument("Poly: substitution index out of range");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        std::vector<std::uint32_t> exps;
        exps.reserve(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) exps.push_back(i == index ? 0 : m.exp(i));
        Rational v = c;
        if (m.exp(index) > 0) v *= pow(value, m.exp(index));
        r.add_term(Monomial(std::move(exps)), v);
    }
    return r;
}

bool Poly::less(const Poly& a, const Poly& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return Monomial::deglex_less(ia->first, ib->first);
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Rational a = c.abs();
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        if (m.is_one()) {
            s += a.str();
        } else if (a.is_one()) {
            s += m.str();
        } else {
            s += a.str() + "*" + m.str();
        }
    }
    return s;
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t nvars;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return text[pos];
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("Poly: parse error at offset " + std::to_string(pos) + ": " + what);
    }

    std::string read_digits() {
        skip_ws();
        std::string out;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) out += text[pos++];
        if (out.empty()) fail("expected digits");
        return out;
    }

    // coefficient "p" or "p/q" (unsigned; sign handled by caller)
    Rational read_coeff() {
        std::string num = read_digits();
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            std::string den = read_digits();
            return Rational::parse(num + "/" + den);
        }
        return Rational::parse(num);
    }

    // "tK" or "tK^E"
    std::pair<std::size_t, std::uint32_t> read_var_power() {
        skip_ws();
        if (pos >= text.size() || text[pos] != 't') fail("expected parameter");
        ++pos;
        const std::string idx = read_digits();
        const unsigned long k = std::stoul(idx);
        if (k == 0 || k > nvars) fail("parameter index out of range");
        std::uint32_t e = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            e = static_cast<std::uint32_t>(std::stoul(read_digits()));
        }
        return {static_cast<std::size_t>(k - 1), e};
    }

    // term := coeff [ '*' varpart ] | varpart
    void read_term(Poly& acc, bool negative) {
        Rational coeff(1);
        bool saw_coeff = false;
        skip_ws();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = read_coeff();
            saw_coeff = true;
        }
        std::vector<std::uint32_t> exps(nvars, 0);
        bool saw_var = false;
        for (;;) {
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                auto [i, e] = read_var_power();
                exps[i] += e;
                saw_var = true;
                continue;
            }
            if (pos < text.size() && text[pos] == 't' && !saw_coeff && !saw_var) {
                auto [i, e] = read_var_power();
                exps[i] += e;
                saw_var = true;
                continue;
            }
            break;
        }
        if (!saw_coeff && !saw_var) fail("expected term");
        if (negative) coeff = -coeff;
        acc.add_term(Monomial(std::move(exps)), coeff);
    }
};

}  // namespace

Poly Poly::parse(std::size_t nvars, std::string_view text) {
    Parser p{text, 0, nvars};
    Poly acc(nvars);
    if (p.eof()) p.fail("empty input");
    bool neg = false;
    if (p.peek() == '-') {
        neg = true;
        ++p.pos;
    } else if (p.peek() == '+') {
        ++p.pos;
    }
    p.read_term(acc, neg);
    while (!p.eof()) {
        const char c = p.peek();
        if (c == '+') neg = false;
        else if (c == '-') neg = true;
        else p.fail("expected '+' or '-'");
        ++p.pos;
        p.read_term(acc, neg);
    }
    return acc;
}

}  // namespace opdl
