#include "motzperm/algebra.hpp"

#include <sstream>

namespace motzperm {

const char* var_name(Var v) noexcept {
    switch (v) {
        case Var::q: return "q";
        case Var::p: return "p";
        case Var::s: return "s";
        case Var::t: return "t";
    }
    return "?";
}

std::uint32_t Monomial::exponent(Var v) const noexcept {
    switch (v) {
        case Var::q: return eq;
        case Var::p: return ep;
        case Var::s: return es;
        case Var::t: return et;
    }
    return 0;
}

std::uint32_t& Monomial::exponent(Var v) noexcept {
    switch (v) {
        case Var::q: return eq;
        case Var::p: return ep;
        case Var::s: return es;
        case Var::t: break;
    }
    return et;
}

std::string Monomial::to_string() const {
    std::string out;
    for (Var v : kAllVars) {
        const auto e = exponent(v);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += var_name(v);
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

MultiPoly::MultiPoly(long long c) {
    if (c != 0) terms_.emplace(Monomial{}, BigInt(c));
}

MultiPoly::MultiPoly(const BigInt& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly::MultiPoly(const Monomial& m, const BigInt& c) {
    if (c != 0) terms_.emplace(m, c);
}

MultiPoly MultiPoly::var(Var v, std::uint32_t power) {
    Monomial m;
    m.exponent(v) = power;
    return MultiPoly(m);
}

BigInt MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::uint32_t MultiPoly::degree(Var v) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

void MultiPoly::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (&o == this) return *this *= MultiPoly(2);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (&o == this) {
        terms_.clear();
        return *this;
    }
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const BigInt mag = negative ? BigInt(-c) : c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            os << mag;
        } else {
            if (mag != 1) os << mag << '*';
            os << m.to_string();
        }
    }
    return os.str();
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
    MultiPoly result = 1;
    MultiPoly square = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= square;
        exponent >>= 1U;
        if (exponent > 0) square *= square;
    }
    return result;
}

MultiPoly q_integer(unsigned k) {
    MultiPoly out;
    for (unsigned i = 0; i < k; ++i) out.add_term(Monomial{i, 0, 0, 0}, 1);
    return out;
}

MultiPoly poly_substitute(const MultiPoly& a, const Assignment& assignment) {
    if (assignment.empty()) return a;
    MultiPoly out;
    for (const auto& [m, c] : a.terms()) {
        Monomial rest = m;
        BigInt coeff = c;
        for (const auto& [v, value] : assignment) {
            const auto e = m.exponent(v);
            if (e == 0) continue;
            coeff *= boost::multiprecision::pow(BigInt(value), e);
            rest.exponent(v) = 0;
        }
        out.add_term(rest, coeff);
    }
    return out;
}

std::map<std::uint32_t, MultiPoly> collect_by(const MultiPoly& a, Var v) {
    std::map<std::uint32_t, MultiPoly> out;
    for (const auto& [m, c] : a.terms()) {
        Monomial rest = m;
        rest.exponent(v) = 0;
        out[m.exponent(v)].add_term(rest, c);
    }
    return out;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace motzperm
