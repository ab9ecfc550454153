#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cedga/algebra.hpp"

namespace cedga {

struct Bounds {
    int max_word_length = 6;
    int max_level = 2;
    int degree_bound = 8;  // h0 completion
};

enum class Parity : std::uint8_t { Even, Odd };

std::string to_string(Parity p);
inline Parity parity_of(std::size_t length) { return length % 2 == 0 ? Parity::Even : Parity::Odd; }
inline Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

// ------------------------------------------------------------------ d^2

struct Residual {
    std::string generator;
    Element residual;
};

struct DSquaredReport {
    std::vector<Residual> counterexamples;  // declaration order
    bool pass() const { return counterexamples.empty(); }
};

DSquaredReport check_d_squared(const Presentation& P);

// --------------------------------------------------------------- degree

struct DegreeReport {
    std::vector<Violation> violations;
    bool pass() const { return violations.empty(); }
};

DegreeReport check_degree(const Presentation& P);

// --------------------------------------------------------------- parity

struct ParityWitness {
    std::string generator;
    Word word;
};

struct ParityReport {
    std::optional<ParityWitness> witness;  // first monomial that keeps the parity
    bool pass() const { return !witness.has_value(); }
};

/// Every monomial of every d g has length of parity opposite to |g| = 1.
ParityReport check_parity_flip(const Presentation& P);

// ----------------------------------------------------------- exactness

enum class ExactVerdict : std::uint8_t { Witness, NoneWithinBounds };

struct ExactnessResult {
    ExactVerdict verdict = ExactVerdict::NoneWithinBounds;
    Element witness;                     // d(witness) == target when verdict is Witness
    Element target;
    int target_degree = 0;
    Bounds bounds;
    std::optional<Parity> parity;
    std::size_t candidates = 0;          // size of the search space
    std::size_t rank = 0;                // rank of d on the search space
    std::map<std::size_t, std::size_t> length_histogram;  // word length -> candidate count
};

/// Solves d x = target over the words of degree |target| - 1 within the
/// bounds (and of the requested length parity). The ring must be a field.
/// Throws InvalidArgument for a non-homogeneous target.
ExactnessResult exactness_search(const Presentation& P, const Element& target, const Bounds& bounds,
                                 std::optional<Parity> parity = std::nullopt);

struct TrivialityResult {
    bool certified_trivial = false;
    ExactnessResult search;
};

/// exactness_search with target 1.
TrivialityResult is_trivial(const Presentation& P, const Bounds& bounds);

/// Enumerates composable words from idempotent `from` to `to` of the given
/// degree, length 1..max_word_length and generator level <= max_level, in a
/// deterministic order.
std::vector<Word> enumerate_words(const Presentation& P, IdempotentId from, IdempotentId to, int degree,
                                  const Bounds& bounds, std::optional<Parity> parity = std::nullopt);

// ------------------------------------------------------------------ h0

struct RewriteRule {
    Word lhs;
    Element rhs;  // strictly smaller than lhs in the length-lex order
};

struct H0Report {
    std::vector<std::string> relation_sources;  // degree -1 generators, one per relation
    std::vector<Element> relations;
    std::vector<RewriteRule> rules;
    std::vector<IdempotentId> killed;           // idempotents that vanish in the quotient
    bool complete = true;                       // no overlap beyond degree_bound was skipped
    bool finite = false;                        // some length level has no normal words
    bool is_ground_ring = false;
    std::size_t dimension = 0;                  // normal words up to the bound
    std::vector<std::size_t> counts_by_length;  // index = word length
    std::vector<Word> basis;                    // normal words up to the bound
    int degree_bound = 0;
};

/// Degree-0 homology: the free algebra on degree-0 generators modulo the
/// ideal generated by d g for deg g = -1, via non-commutative completion.
/// Throws UnsupportedPresentation when a relation contains a letter of
/// nonzero degree or the ring is not a field.
H0Report h0(const Presentation& P, int degree_bound);

/// Reduces x to normal form under the rules of a completed report.
Element normal_form(const Presentation& P, const H0Report& rep, const Element& x);

}  // namespace cedga
