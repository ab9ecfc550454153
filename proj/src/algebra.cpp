#include "cedga/algebra.hpp"

#include <set>

namespace cedga {

std::size_t WordHash::operator()(const Word& w) const noexcept
{
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ (std::size_t(w.source()) << 32 | w.target());
    for (GeneratorId g : w.letters())
        h = (h ^ g) * 0x100000001b3ULL + (h >> 29);
    return h;
}

std::optional<Word> word_concat(const Word& u, const Word& v)
{
    if (u.source() != v.target())
        return std::nullopt;
    if (u.is_idempotent())
        return v;
    if (v.is_idempotent())
        return u;
    std::vector<GeneratorId> letters;
    letters.reserve(u.length() + v.length());
    letters.insert(letters.end(), u.letters().begin(), u.letters().end());
    letters.insert(letters.end(), v.letters().begin(), v.letters().end());
    return Word::from_letters(std::move(letters), v.source(), u.target());
}

// ---------------------------------------------------------------- Element

void Element::add_term(const Word& w, const Coeff& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Coeff Element::coeff_of(const Word& w, const CoeffRing& ring) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Coeff::zero(ring) : it->second;
}

Element& Element::operator+=(const Element& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

Element Element::operator+(const Element& o) const
{
    Element r = *this;
    r += o;
    return r;
}

Element Element::operator-(const Element& o) const
{
    Element r = *this;
    r -= o;
    return r;
}

Element Element::operator-() const
{
    Element r;
    for (const auto& [w, c] : terms_)
        r.terms_.emplace(w, -c);
    return r;
}

Element Element::scaled(const Coeff& s) const
{
    Element r;
    for (const auto& [w, c] : terms_)
        r.add_term(w, c * s);
    return r;
}

Element Element::operator*(const Element& o) const
{
    Element r;
    for (const auto& [u, a] : terms_)
        for (const auto& [v, b] : o.terms_)
            if (auto uv = word_concat(u, v))
                r.add_term(*uv, a * b);
    return r;
}

// ----------------------------------------------------------- Presentation

IdempotentId Presentation::add_idempotent(std::string label)
{
    auto id = static_cast<IdempotentId>(idempotents_.size());
    idem_index_.emplace(label, id);
    idempotents_.push_back({id, std::move(label)});
    return id;
}

GeneratorId Presentation::add_generator(Generator g)
{
    if (g.source >= idempotents_.size() || g.target >= idempotents_.size())
        throw InvalidArgument("generator '" + g.name + "' refers to an unknown idempotent");
    auto id = static_cast<GeneratorId>(generators_.size());
    gen_index_.emplace(g.name, id);
    generators_.push_back(std::move(g));
    differential_.emplace_back();
    return id;
}

void Presentation::set_differential(GeneratorId g, Element d)
{
    differential_.at(g) = std::move(d);
}

std::optional<GeneratorId> Presentation::find_generator(const std::string& name) const
{
    auto it = gen_index_.find(name);
    if (it == gen_index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<IdempotentId> Presentation::find_idempotent(const std::string& label) const
{
    auto it = idem_index_.find(label);
    if (it == idem_index_.end())
        return std::nullopt;
    return it->second;
}

GeneratorId Presentation::generator_id(const std::string& name) const
{
    if (auto g = find_generator(name))
        return *g;
    throw InvalidArgument("unknown generator '" + name + "'");
}

std::optional<Word> Presentation::make_word(std::span<const GeneratorId> letters) const
{
    if (letters.empty())
        throw InvalidArgument("make_word needs at least one letter; use Word::idempotent");
    for (std::size_t k = 0; k + 1 < letters.size(); ++k)
        if (generators_.at(letters[k]).source != generators_.at(letters[k + 1]).target)
            return std::nullopt;
    return Word::from_letters(std::vector<GeneratorId>(letters.begin(), letters.end()),
                              generators_.at(letters.back()).source, generators_.at(letters.front()).target);
}

Word Presentation::word(std::initializer_list<std::string> names) const
{
    std::vector<GeneratorId> letters;
    for (const auto& n : names)
        letters.push_back(generator_id(n));
    auto w = make_word(letters);
    if (!w)
        throw InvalidArgument("word is not composable");
    return *w;
}

Element Presentation::gen(const std::string& name) const
{
    GeneratorId g = generator_id(name);
    const auto& G = generators_[g];
    return Element(Word::from_letters({g}, G.source, G.target), Coeff::one(ring_));
}

Element Presentation::idem(const std::string& label) const
{
    auto e = find_idempotent(label);
    if (!e)
        throw InvalidArgument("unknown idempotent '" + label + "'");
    return Element(Word::idempotent(*e), Coeff::one(ring_));
}

Element Presentation::one() const
{
    Element r;
    for (const auto& e : idempotents_)
        r.add_term(Word::idempotent(e.id), Coeff::one(ring_));
    return r;
}

int Presentation::degree(const Word& w) const
{
    int d = 0;
    for (GeneratorId g : w.letters())
        d += generators_.at(g).degree;
    return d;
}

std::optional<int> Presentation::degree(const Element& x) const
{
    std::optional<int> d;
    for (const auto& [w, c] : x.terms()) {
        int dw = degree(w);
        if (d && *d != dw)
            return std::nullopt;
        d = dw;
    }
    return d;
}

std::string Presentation::word_to_string(const Word& w) const
{
    if (w.is_idempotent())
        return idempotents_.at(w.source()).label;
    std::string out;
    for (std::size_t k = 0; k < w.length(); ++k) {
        if (k)
            out += '*';
        out += generators_.at(w.letters()[k]).name;
    }
    return out;
}

namespace {

// Sign-and-magnitude split so that sums print as "a - b" rather than "a + -b".
bool is_negative(const Coeff& c)
{
    if (auto q = c.as_rational())
        return *q < 0;
    if (auto l = c.as_laurent())
        return l->terms.size() == 1 && l->terms.begin()->second < 0;
    return false;
}

}  // namespace

std::string Presentation::to_string(const Element& x) const
{
    if (x.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : x.terms()) {
        bool neg = is_negative(c);
        Coeff mag = neg ? -c : c;
        std::string term = word_to_string(w);
        if (!mag.is_one())
            term = mag.to_string(ring_) + "*" + term;
        if (first)
            out += neg ? "-" + term : term;
        else
            out += (neg ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

bool Presentation::operator==(const Presentation& o) const
{
    return ring_ == o.ring_ && convention_ == o.convention_ && idempotents_ == o.idempotents_ &&
           generators_ == o.generators_ && differential_ == o.differential_;
}

// ------------------------------------------------------------- operations

Element element_mul(const Presentation& P, const Element& x, const Element& y)
{
    auto check = [&](const Element& e) {
        for (const auto& [w, c] : e.terms())
            if (c.kind() != P.ring().kind())
                throw RingMismatch("element coefficient outside " + P.ring().to_string());
    };
    check(x);
    check(y);
    return x * y;
}

Element apply_differential(const Presentation& P, const Word& w)
{
    Element out;
    if (w.is_idempotent())
        return out;
    const auto& letters = w.letters();
    const CoeffRing& ring = P.ring();
    int prefix_degree = 0;
    for (std::size_t k = 0; k < letters.size(); ++k) {
        const Generator& g = P.generator(letters[k]);
        const auto& dg = P.differential(letters[k]);
        if (!dg)
            throw IncompletePresentation(g.name);
        Coeff sign = Coeff::from_int(ring, (prefix_degree % 2 == 0) ? 1 : -1);
        for (const auto& [t, c] : dg->terms()) {
            if (t.source() != g.source || t.target() != g.target)
                continue;  // product vanishes on mismatched ends
            std::vector<GeneratorId> nl;
            nl.reserve(letters.size() + t.length());
            nl.insert(nl.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(k));
            nl.insert(nl.end(), t.letters().begin(), t.letters().end());
            nl.insert(nl.end(), letters.begin() + static_cast<std::ptrdiff_t>(k) + 1, letters.end());
            Word nw = nl.empty() ? Word::idempotent(w.source()) : Word::from_letters(std::move(nl), w.source(), w.target());
            out.add_term(nw, c * sign);
        }
        prefix_degree += g.degree;
    }
    return out;
}

Element apply_differential(const Presentation& P, const Element& x)
{
    Element out;
    for (const auto& [w, c] : x.terms())
        out += apply_differential(P, w).scaled(c);
    return out;
}

std::string to_string(ViolationKind k)
{
    switch (k) {
    case ViolationKind::DuplicateName:
        return "duplicate-name";
    case ViolationKind::DuplicateIdempotent:
        return "duplicate-idempotent";
    case ViolationKind::NonComposable:
        return "non-composable";
    case ViolationKind::EndpointMismatch:
        return "endpoint-mismatch";
    case ViolationKind::DegreeMismatch:
        return "degree-mismatch";
    case ViolationKind::MissingDifferential:
        return "missing-differential";
    case ViolationKind::RingMismatch:
        return "ring-mismatch";
    }
    return "unknown";
}

ValidationReport validate_presentation(const Presentation& P)
{
    ValidationReport rep;
    std::set<std::string> names;
    std::set<std::string> labels;
    for (const auto& e : P.idempotents())
        if (!labels.insert(e.label).second)
            rep.violations.push_back({ViolationKind::DuplicateIdempotent, "", e.label});
    for (const auto& g : P.generators())
        if (!names.insert(g.name).second || labels.count(g.name))
            rep.violations.push_back({ViolationKind::DuplicateName, g.name, "name declared more than once"});

    for (GeneratorId id = 0; id < P.generators().size(); ++id) {
        const Generator& g = P.generator(id);
        const auto& d = P.differential(id);
        if (!d) {
            rep.violations.push_back({ViolationKind::MissingDifferential, g.name, "no differential assigned"});
            continue;
        }
        for (const auto& [w, c] : d->terms()) {
            if (c.kind() != P.ring().kind()) {
                rep.violations.push_back({ViolationKind::RingMismatch, g.name, P.word_to_string(w)});
                continue;
            }
            bool composable = true;
            for (std::size_t k = 0; k + 1 < w.length(); ++k)
                if (P.generator(w.letters()[k]).source != P.generator(w.letters()[k + 1]).target)
                    composable = false;
            if (!composable) {
                rep.violations.push_back({ViolationKind::NonComposable, g.name, P.word_to_string(w)});
                continue;
            }
            if (w.source() != g.source || w.target() != g.target)
                rep.violations.push_back({ViolationKind::EndpointMismatch, g.name, P.word_to_string(w)});
            int dw = P.degree(w);
            if (dw != g.degree + 1)
                rep.violations.push_back({ViolationKind::DegreeMismatch, g.name,
                                          P.word_to_string(w) + " has degree " + std::to_string(dw) + ", expected " +
                                              std::to_string(g.degree + 1)});
        }
    }
    return rep;
}

std::vector<IdempotentId> word_vertices(const Presentation& P, const Word& w)
{
    if (w.is_idempotent())
        return {w.source()};
    std::vector<IdempotentId> v;
    v.reserve(w.length() + 1);
    v.push_back(w.source());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        v.push_back(P.generator(*it).target);
    return v;
}

}  // namespace cedga
