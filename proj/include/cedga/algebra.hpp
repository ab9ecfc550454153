#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cedga/coeff.hpp"

namespace cedga {

using IdempotentId = std::uint32_t;
using GeneratorId = std::uint32_t;

struct Idempotent {
    IdempotentId id = 0;
    std::string label;
    bool operator==(const Idempotent&) const = default;
};

enum class ChordRole : std::uint8_t { Long, Short };

struct Generator {
    std::string name;
    int degree = 0;
    IdempotentId source = 0;
    IdempotentId target = 0;
    ChordRole role = ChordRole::Long;
    std::string link;          // link id, only meaningful for short chords
    std::optional<int> level;  // p in c^p_ij
    bool operator==(const Generator&) const = default;
};

/// A composable word g1 g2 ... gm, printed left to right; the rightmost
/// letter acts first, so source(word) = source(gm) and target(word) =
/// target(g1). The empty word is a pure idempotent with source == target.
class Word {
public:
    Word() = default;

    static Word idempotent(IdempotentId e) { return Word({}, e, e); }
    /// Caller guarantees composability; see Presentation::make_word.
    static Word from_letters(std::vector<GeneratorId> letters, IdempotentId source, IdempotentId target)
    {
        return Word(std::move(letters), source, target);
    }

    bool is_idempotent() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }
    const std::vector<GeneratorId>& letters() const { return letters_; }
    IdempotentId source() const { return source_; }
    IdempotentId target() const { return target_; }

    /// Length first, then lexicographic by generator index, then endpoints.
    std::strong_ordering operator<=>(const Word& o) const
    {
        if (auto c = letters_.size() <=> o.letters_.size(); c != 0)
            return c;
        if (auto c = letters_ <=> o.letters_; c != 0)
            return c;
        if (auto c = source_ <=> o.source_; c != 0)
            return c;
        return target_ <=> o.target_;
    }
    bool operator==(const Word&) const = default;

private:
    Word(std::vector<GeneratorId> l, IdempotentId s, IdempotentId t)
        : letters_(std::move(l)), source_(s), target_(t) {}

    std::vector<GeneratorId> letters_;
    IdempotentId source_ = 0;
    IdempotentId target_ = 0;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

/// Product u*v (v acts first), or std::nullopt when the ends do not match.
std::optional<Word> word_concat(const Word& u, const Word& v);

/// Finite formal sum of words with nonzero coefficients.
class Element {
public:
    using Terms = std::map<Word, Coeff>;

    Element() = default;
    Element(const Word& w, const Coeff& c) { add_term(w, c); }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Word& w, const Coeff& c);
    Coeff coeff_of(const Word& w, const CoeffRing& ring) const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element scaled(const Coeff& c) const;

    /// Bilinear extension of word_concat.
    Element operator*(const Element& o) const;

    bool operator==(const Element& o) const { return terms_ == o.terms_; }

private:
    Terms terms_;
};

enum class PotentialConvention : std::uint8_t { PotentialPlus, PotentialMinus };

/// A finitely generated free graded algebra over a ring of idempotents
/// together with a differential given on generators.
class Presentation {
public:
    Presentation() = default;
    explicit Presentation(CoeffRing ring) : ring_(std::move(ring)) {}

    const CoeffRing& ring() const { return ring_; }
    void set_ring(CoeffRing r) { ring_ = std::move(r); }

    std::optional<PotentialConvention> convention() const { return convention_; }
    void set_convention(std::optional<PotentialConvention> c) { convention_ = c; }

    IdempotentId add_idempotent(std::string label);
    /// Appends a generator. Duplicate names are accepted here and reported
    /// by validate_presentation; lookup returns the first declaration.
    GeneratorId add_generator(Generator g);
    void set_differential(GeneratorId g, Element d);
    void clear_differential(GeneratorId g) { differential_.at(g).reset(); }

    const std::vector<Idempotent>& idempotents() const { return idempotents_; }
    const std::vector<Generator>& generators() const { return generators_; }
    const Generator& generator(GeneratorId g) const { return generators_.at(g); }
    const std::optional<Element>& differential(GeneratorId g) const { return differential_.at(g); }

    std::optional<GeneratorId> find_generator(const std::string& name) const;
    std::optional<IdempotentId> find_idempotent(const std::string& label) const;
    GeneratorId generator_id(const std::string& name) const;  // throws InvalidArgument

    /// Word from letters in print order; std::nullopt if not composable.
    std::optional<Word> make_word(std::span<const GeneratorId> letters) const;
    Word word(std::initializer_list<std::string> names) const;  // throws if not composable

    Element gen(const std::string& name) const;  // 1 * generator
    Element idem(const std::string& label) const;
    Element one() const;  // sum of all idempotents
    Element scalar(long c) const { return one().scaled(Coeff::from_int(ring_, c)); }
    Coeff coeff(long c) const { return Coeff::from_int(ring_, c); }

    int degree(const Word& w) const;
    /// Degree of a homogeneous element; std::nullopt for zero or mixed.
    std::optional<int> degree(const Element& x) const;

    std::string word_to_string(const Word& w) const;
    std::string to_string(const Element& x) const;

    /// Structural equality (ring, convention, idempotents, generators, differentials).
    bool operator==(const Presentation& o) const;

private:
    CoeffRing ring_;
    std::optional<PotentialConvention> convention_;
    std::vector<Idempotent> idempotents_;
    std::vector<Generator> generators_;
    std::vector<std::optional<Element>> differential_;
    std::unordered_map<std::string, GeneratorId> gen_index_;
    std::unordered_map<std::string, IdempotentId> idem_index_;
};

/// Multiplication in the algebra of a presentation (ring-checked).
Element element_mul(const Presentation& P, const Element& x, const Element& y);

/// Differential of a single word via the graded Leibniz rule
/// d(uv) = d(u) v + (-1)^|u| u d(v). Throws IncompletePresentation.
Element apply_differential(const Presentation& P, const Word& w);
Element apply_differential(const Presentation& P, const Element& x);

enum class ViolationKind : std::uint8_t {
    DuplicateName,
    DuplicateIdempotent,
    NonComposable,
    EndpointMismatch,
    DegreeMismatch,
    MissingDifferential,
    RingMismatch,
};

struct Violation {
    ViolationKind kind;
    std::string generator;  // empty for idempotent-level problems
    std::string detail;
};

std::string to_string(ViolationKind k);

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Name uniqueness, composability and endpoint agreement of every
/// differential word, and degree homogeneity (every word of dg has degree
/// |g| + 1).
ValidationReport validate_presentation(const Presentation& P);

/// Word-level helper: vertices visited by a word, from source to target.
std::vector<IdempotentId> word_vertices(const Presentation& P, const Word& w);

}  // namespace cedga
