#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cedga/analysis.hpp"
#include "cedga/morphisms.hpp"

namespace cedga {

enum class ObstructionVerdict : std::uint8_t { Obstructed, Inconclusive };

std::string to_string(ObstructionVerdict v);

/// What the chain-map equation d eps(g) = eps(d g) says about the length
/// parity of eps(g) for a generator left free by the link map.
enum class ParityClassKind : std::uint8_t {
    Cycle,         // eps(d g) = 0: every parity part of eps(g) is a cycle
    Split,         // eps(d g) has one parity P: the P part is a cycle, the other is forced
    Undetermined,  // mixed parity, or eps(d g) involves other free images
};

struct ParityClass {
    std::string generator;
    ParityClassKind kind = ParityClassKind::Undetermined;
    std::optional<Parity> cycle_parity;  // Split only
    std::string image;                   // eps(d g) with free images written [g]
};

struct ObstructionReport {
    ObstructionVerdict verdict = ObstructionVerdict::Inconclusive;
    Bounds bounds;
    std::vector<ParityClass> classes;     // one per free generator, declaration order
    std::vector<std::string> transcript;  // the derivation, one step per line

    // Set when Obstructed.
    std::string decisive_generator;
    std::string decisive_image;           // eps(d a) with free images written [g]
    Parity decisive_part = Parity::Even;  // the parity part of eps(d a) used
    std::vector<std::string> cycle_unknowns;  // e.g. "[b]even", each constrained d z = 0
    std::size_t system_columns = 0;
    ExactnessResult certificate;          // NoneWithinBounds for the constant part

    // Set when Inconclusive.
    std::vector<std::string> blocking;
};

/// Tries to rule out a dg-map from `domain` to `codomain` extending
/// `link_map` (assigned on short generators, free on the rest) by a word
/// length parity argument. For each free generator a, eps(d a) splits into
/// parity parts; a part Q whose free images only enter through cycles gives
/// d T - sum u z w = R with T of parity not-Q and d z = 0, solved within the
/// bounds. An infeasible system is an obstruction. Throws
/// UnsupportedPresentation when the codomain fails the parity flip or its
/// ring is not a field.
ObstructionReport obstruct_y_filling(const Presentation& domain, const Presentation& codomain, const DgMap& link_map,
                                     const Bounds& bounds);

}  // namespace cedga
