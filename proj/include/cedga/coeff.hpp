#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cedga/error.hpp"

namespace cedga {

using Rational = mpq_class;

enum class RingKind : std::uint8_t { Rationals, GF2, Laurent };

/// Ground ring for all coefficients of a presentation.
class CoeffRing {
public:
    CoeffRing() = default;

    static CoeffRing rationals() { return CoeffRing(RingKind::Rationals, {}); }
    static CoeffRing gf2() { return CoeffRing(RingKind::GF2, {}); }
    /// Laurent polynomials over Q in the given commuting parameters.
    /// Throws InvalidArgument on duplicate, empty or malformed names.
    static CoeffRing laurent(std::vector<std::string> parameters);

    RingKind kind() const { return kind_; }
    const std::vector<std::string>& parameters() const { return params_; }
    bool is_field() const { return kind_ != RingKind::Laurent; }

    /// "Q", "GF2" or "laurent(a,b)".
    std::string to_string() const;

    bool operator==(const CoeffRing&) const = default;

private:
    CoeffRing(RingKind k, std::vector<std::string> p) : kind_(k), params_(std::move(p)) {}

    RingKind kind_ = RingKind::Rationals;
    std::vector<std::string> params_;
};

struct GF2 {
    bool bit = false;
    bool operator==(const GF2&) const = default;
};

/// Sparse Laurent polynomial; exponent vectors have one slot per parameter.
struct Laurent {
    std::size_t nparams = 0;
    std::map<std::vector<int>, Rational> terms;  // never stores a zero

    bool operator==(const Laurent& o) const { return nparams == o.nparams && terms == o.terms; }
};

/// An exact coefficient. Immutable value type; all arithmetic is exact and
/// results are kept normalized (lowest terms, no zero Laurent terms).
class Coeff {
public:
    Coeff() : v_(Rational(0)) {}

    static Coeff zero(const CoeffRing& ring);
    static Coeff one(const CoeffRing& ring);
    static Coeff from_int(const CoeffRing& ring, long value);
    static Coeff from_rational(const CoeffRing& ring, const Rational& value);
    /// Laurent monomial c * prod param_k^exps[k].
    static Coeff monomial(const CoeffRing& ring, const Rational& c, std::vector<int> exps);

    RingKind kind() const;
    bool is_zero() const;
    bool is_one() const;

    /// For Laurent coefficients: true when the value is c*1 with rational c.
    bool is_constant() const;

    /// Multiplicative inverse when this is a unit; std::nullopt otherwise.
    /// Throws ZeroDivision on zero.
    std::optional<Coeff> inverse() const;

    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator-() const;
    Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
    Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

    bool operator==(const Coeff& o) const { return v_ == o.v_; }

    const Rational* as_rational() const { return std::get_if<Rational>(&v_); }
    const GF2* as_gf2() const { return std::get_if<GF2>(&v_); }
    const Laurent* as_laurent() const { return std::get_if<Laurent>(&v_); }

    /// Textual form in the DSL coefficient syntax. Multi-term Laurent values
    /// come back parenthesized.
    std::string to_string(const CoeffRing& ring) const;

    /// Convert between rings where it makes sense (Q -> GF2 for odd
    /// denominators, GF2 -> Q, Q -> Laurent, constant Laurent -> Q).
    Coeff convert(const CoeffRing& to) const;

private:
    using Value = std::variant<Rational, GF2, Laurent>;
    explicit Coeff(Value v) : v_(std::move(v)) {}

    Value v_;
};

enum class CoeffOp : std::uint8_t { Add, Mul, Neg };

/// Ring operation dispatcher; `b` is ignored for Neg.
Coeff coeff_arith(CoeffOp op, const Coeff& a, const Coeff& b);

/// Returns std::nullopt for NotAUnit; throws ZeroDivision on zero.
std::optional<Coeff> coeff_inverse(const Coeff& a);

}  // namespace cedga
