#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace motzperm {

using BigInt = boost::multiprecision::cpp_int;

/// The four symbolic variables. The series variable z is never a polynomial
/// variable; it is the index into a SeriesTable.
enum class Var : std::uint8_t { q = 0, p = 1, s = 2, t = 3 };

constexpr std::array<Var, 4> kAllVars{Var::q, Var::p, Var::s, Var::t};
const char* var_name(Var v) noexcept;

/// q^eq p^ep s^es t^et with non-negative exponents.
struct Monomial {
    std::uint32_t eq = 0;
    std::uint32_t ep = 0;
    std::uint32_t es = 0;
    std::uint32_t et = 0;

    std::uint32_t exponent(Var v) const noexcept;
    std::uint32_t& exponent(Var v) noexcept;

    Monomial operator*(const Monomial& o) const noexcept {
        return {eq + o.eq, ep + o.ep, es + o.es, et + o.et};
    }
    bool is_one() const noexcept { return eq == 0 && ep == 0 && es == 0 && et == 0; }

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

    /// Rendered as `q^3*p*s*t^2`; the empty monomial renders as "1".
    std::string to_string() const;
};

// Canonical term order: lexicographic on (eq, ep, es, et), highest first.
struct CanonicalOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept { return b < a; }
};

/// Exact polynomial in q, p, s, t with big-integer coefficients.
///
/// Canonical form: no stored coefficient is zero, so structural equality of
/// the term maps is polynomial equality.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, BigInt, CanonicalOrder>;

    MultiPoly() = default;
    MultiPoly(long long c);  // NOLINT(google-explicit-constructor): constants read naturally
    MultiPoly(const BigInt& c);
    explicit MultiPoly(const Monomial& m, const BigInt& c = 1);

    static MultiPoly var(Var v, std::uint32_t power = 1);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    BigInt coefficient(const Monomial& m) const;
    std::uint32_t degree(Var v) const;

    /// Adds c·m in place; cheaper than building a temporary for accumulation loops.
    void add_term(const Monomial& m, const BigInt& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    /// Terms in canonical order, e.g. `-2*s^2*t^3 + s*t^4`; zero renders as "0".
    std::string to_string() const;

private:
    TermMap terms_;
};

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly pow(const MultiPoly& base, unsigned exponent);

/// [k]_q = 1 + q + ... + q^(k-1), with [0]_q = 0.
MultiPoly q_integer(unsigned k);

/// Partial assignment of integer values to variables.
using Assignment = std::map<Var, long long>;

/// Substitutes the assigned variables and leaves the rest symbolic.
MultiPoly poly_substitute(const MultiPoly& a, const Assignment& assignment);

/// Splits a polynomial by powers of one variable: result[k] is the
/// coefficient of v^k (a polynomial free of v). Zero parts are omitted.
std::map<std::uint32_t, MultiPoly> collect_by(const MultiPoly& a, Var v);

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);

}  // namespace motzperm
