#include "cedga/coeff.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace cedga {

namespace {

bool is_identifier(const std::string& s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}

Rational normalized(Rational q)
{
    q.canonicalize();
    return q;
}

void laurent_add_term(Laurent& l, const std::vector<int>& e, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = l.terms.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            l.terms.erase(it);
    }
}

std::string rational_to_string(const Rational& q)
{
    return q.get_str();
}

std::string laurent_monomial(const std::vector<int>& e, const CoeffRing& ring)
{
    std::string out;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += k < ring.parameters().size() ? ring.parameters()[k] : "p" + std::to_string(k);
        if (e[k] != 1)
            out += '^' + std::to_string(e[k]);
    }
    return out;
}

// A single signed term, sign carried separately so sums render as "a - b".
std::string laurent_term(const Rational& c_abs, const std::vector<int>& e, const CoeffRing& ring)
{
    std::string mono = laurent_monomial(e, ring);
    if (mono.empty())
        return rational_to_string(c_abs);
    if (c_abs == 1)
        return mono;
    return rational_to_string(c_abs) + "*" + mono;
}

}  // namespace

CoeffRing CoeffRing::laurent(std::vector<std::string> parameters)
{
    std::set<std::string> seen;
    for (const auto& p : parameters) {
        if (!is_identifier(p))
            throw InvalidArgument("invalid Laurent parameter name '" + p + "'");
        if (!seen.insert(p).second)
            throw InvalidArgument("duplicate Laurent parameter '" + p + "'");
    }
    return CoeffRing(RingKind::Laurent, std::move(parameters));
}

std::string CoeffRing::to_string() const
{
    switch (kind_) {
    case RingKind::Rationals:
        return "Q";
    case RingKind::GF2:
        return "GF2";
    case RingKind::Laurent: {
        std::string out = "laurent(";
        for (std::size_t i = 0; i < params_.size(); ++i) {
            if (i)
                out += ',';
            out += params_[i];
        }
        return out + ")";
    }
    }
    return "?";
}

Coeff Coeff::zero(const CoeffRing& ring)
{
    return from_int(ring, 0);
}

Coeff Coeff::one(const CoeffRing& ring)
{
    return from_int(ring, 1);
}

Coeff Coeff::from_int(const CoeffRing& ring, long value)
{
    return from_rational(ring, Rational(value));
}

Coeff Coeff::from_rational(const CoeffRing& ring, const Rational& value)
{
    switch (ring.kind()) {
    case RingKind::Rationals:
        return Coeff(normalized(value));
    case RingKind::GF2:
        return Coeff(Rational(normalized(value))).convert(ring);
    case RingKind::Laurent: {
        Laurent l;
        l.nparams = ring.parameters().size();
        laurent_add_term(l, std::vector<int>(l.nparams, 0), normalized(value));
        return Coeff(std::move(l));
    }
    }
    throw RingMismatch();
}

Coeff Coeff::monomial(const CoeffRing& ring, const Rational& c, std::vector<int> exps)
{
    if (ring.kind() != RingKind::Laurent)
        throw RingMismatch("monomial requires a Laurent ring");
    if (exps.size() != ring.parameters().size())
        throw InvalidArgument("exponent vector length does not match Laurent parameters");
    Laurent l;
    l.nparams = exps.size();
    laurent_add_term(l, exps, normalized(c));
    return Coeff(std::move(l));
}

RingKind Coeff::kind() const
{
    switch (v_.index()) {
    case 0:
        return RingKind::Rationals;
    case 1:
        return RingKind::GF2;
    default:
        return RingKind::Laurent;
    }
}

bool Coeff::is_zero() const
{
    if (auto q = as_rational())
        return *q == 0;
    if (auto b = as_gf2())
        return !b->bit;
    return as_laurent()->terms.empty();
}

bool Coeff::is_one() const
{
    if (auto q = as_rational())
        return *q == 1;
    if (auto b = as_gf2())
        return b->bit;
    const auto& l = *as_laurent();
    return l.terms.size() == 1 && l.terms.begin()->second == 1 &&
           l.terms.begin()->first == std::vector<int>(l.nparams, 0);
}

bool Coeff::is_constant() const
{
    const auto* l = as_laurent();
    if (!l)
        return true;
    return l->terms.empty() ||
           (l->terms.size() == 1 && l->terms.begin()->first == std::vector<int>(l->nparams, 0));
}

std::optional<Coeff> Coeff::inverse() const
{
    if (is_zero())
        throw ZeroDivision();
    if (auto q = as_rational())
        return Coeff(normalized(Rational(1) / *q));
    if (as_gf2())
        return *this;
    const auto& l = *as_laurent();
    if (l.terms.size() != 1)
        return std::nullopt;
    const auto& [e, c] = *l.terms.begin();
    std::vector<int> neg(e.size());
    for (std::size_t k = 0; k < e.size(); ++k)
        neg[k] = -e[k];
    Laurent out;
    out.nparams = l.nparams;
    out.terms.emplace(std::move(neg), normalized(Rational(1) / c));
    return Coeff(std::move(out));
}

Coeff Coeff::operator+(const Coeff& o) const
{
    if (v_.index() != o.v_.index())
        throw RingMismatch();
    if (auto q = as_rational())
        return Coeff(normalized(*q + *o.as_rational()));
    if (auto b = as_gf2())
        return Coeff(GF2{b->bit != o.as_gf2()->bit});
    const auto& a = *as_laurent();
    const auto& b = *o.as_laurent();
    if (a.nparams != b.nparams)
        throw RingMismatch("Laurent parameter count differs");
    Laurent out = a;
    for (const auto& [e, c] : b.terms)
        laurent_add_term(out, e, c);
    return Coeff(std::move(out));
}

Coeff Coeff::operator-() const
{
    if (auto q = as_rational())
        return Coeff(Rational(-*q));
    if (as_gf2())
        return *this;
    Laurent out = *as_laurent();
    for (auto& [e, c] : out.terms)
        c = -c;
    return Coeff(std::move(out));
}

Coeff Coeff::operator-(const Coeff& o) const
{
    return *this + (-o);
}

Coeff Coeff::operator*(const Coeff& o) const
{
    if (v_.index() != o.v_.index())
        throw RingMismatch();
    if (auto q = as_rational())
        return Coeff(normalized(*q * *o.as_rational()));
    if (auto b = as_gf2())
        return Coeff(GF2{b->bit && o.as_gf2()->bit});
    const auto& a = *as_laurent();
    const auto& b = *o.as_laurent();
    if (a.nparams != b.nparams)
        throw RingMismatch("Laurent parameter count differs");
    Laurent out;
    out.nparams = a.nparams;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k)
                e[k] = ea[k] + eb[k];
            laurent_add_term(out, e, ca * cb);
        }
    return Coeff(std::move(out));
}

std::string Coeff::to_string(const CoeffRing& ring) const
{
    if (auto q = as_rational())
        return rational_to_string(*q);
    if (auto b = as_gf2())
        return b->bit ? "1" : "0";
    const auto& l = *as_laurent();
    if (l.terms.empty())
        return "0";
    if (l.terms.size() == 1) {
        const auto& [e, c] = *l.terms.begin();
        std::string t = laurent_term(abs(c), e, ring);
        return c < 0 ? "-" + t : t;
    }
    std::string out = "(";
    bool first = true;
    for (const auto& [e, c] : l.terms) {
        std::string t = laurent_term(abs(c), e, ring);
        if (first)
            out += c < 0 ? "-" + t : t;
        else
            out += (c < 0 ? " - " : " + ") + t;
        first = false;
    }
    return out + ")";
}

Coeff Coeff::convert(const CoeffRing& to) const
{
    Rational q;
    if (auto r = as_rational()) {
        q = *r;
    }
    else if (auto b = as_gf2()) {
        q = b->bit ? 1 : 0;
    }
    else {
        const auto& l = *as_laurent();
        if (to.kind() == RingKind::Laurent) {
            if (l.nparams != to.parameters().size())
                throw RingMismatch("cannot convert between Laurent rings of different arity");
            return *this;
        }
        if (!is_constant())
            throw RingMismatch("non-constant Laurent coefficient has no image in " + to.to_string());
        q = l.terms.empty() ? Rational(0) : l.terms.begin()->second;
    }
    switch (to.kind()) {
    case RingKind::Rationals:
        return Coeff(q);
    case RingKind::GF2: {
        if (mpz_divisible_2exp_p(q.get_den_mpz_t(), 1))
            throw RingMismatch("rational " + q.get_str() + " has even denominator; no image in GF2");
        return Coeff(GF2{mpz_odd_p(q.get_num_mpz_t()) != 0});
    }
    case RingKind::Laurent:
        return from_rational(to, q);
    }
    throw RingMismatch();
}

Coeff coeff_arith(CoeffOp op, const Coeff& a, const Coeff& b)
{
    switch (op) {
    case CoeffOp::Add:
        return a + b;
    case CoeffOp::Mul:
        return a * b;
    case CoeffOp::Neg:
        return -a;
    }
    throw InvalidArgument("unknown coefficient operation");
}

std::optional<Coeff> coeff_inverse(const Coeff& a)
{
    return a.inverse();
}

}  // namespace cedga
