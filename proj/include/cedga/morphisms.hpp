#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cedga/algebra.hpp"

namespace cedga {

using PresentationPtr = std::shared_ptr<const Presentation>;

/// A dg-algebra map given on idempotents and generators, extended linearly
/// and multiplicatively.
class DgMap {
public:
    DgMap() = default;
    DgMap(PresentationPtr source, PresentationPtr target);

    static DgMap identity(PresentationPtr P);

    const Presentation& source() const { return *source_; }
    const Presentation& target() const { return *target_; }
    const PresentationPtr& source_ptr() const { return source_; }
    const PresentationPtr& target_ptr() const { return target_; }

    void set_idempotent(IdempotentId from, IdempotentId to);
    /// Assigns the image of a generator. Every summand must run between the
    /// images of the generator's endpoints; throws InvalidArgument otherwise.
    void assign(GeneratorId g, Element image);

    const std::vector<std::optional<IdempotentId>>& idempotent_map() const { return idem_; }
    const std::optional<Element>& image(GeneratorId g) const { return images_.at(g); }

    bool operator==(const DgMap& o) const { return idem_ == o.idem_ && images_ == o.images_; }

private:
    PresentationPtr source_;
    PresentationPtr target_;
    std::vector<std::optional<IdempotentId>> idem_;
    std::vector<std::optional<Element>> images_;
};

/// phi(x) for an element of the source. Throws InvalidArgument when a
/// generator or idempotent in x is unassigned.
Element extend_map(const DgMap& phi, const Element& x);

/// psi after phi.
DgMap compose(const DgMap& psi, const DgMap& phi);

struct ChainMapFailure {
    std::string generator;
    Element residual;  // phi(d g) - d(phi(g)), in the target
};

struct ChainMapReport {
    std::vector<ChainMapFailure> failures;  // declaration order
    std::vector<std::string> degree_violations;
    std::vector<std::string> unassigned;
    bool ok() const { return failures.empty() && degree_violations.empty() && unassigned.empty(); }
};

/// Checks phi o d = d o phi on every source generator; also validates
/// degree preservation of the assignment.
ChainMapReport verify_chain_map(const DgMap& phi);

/// A map to the ground ring defined on the generators of the chosen links
/// ("scope"). All idempotents go to 1; unassigned scoped generators go to 0.
class Augmentation {
public:
    Augmentation() = default;
    Augmentation(PresentationPtr source, std::vector<std::string> scope);

    const Presentation& source() const { return *source_; }
    const PresentationPtr& source_ptr() const { return source_; }
    const std::vector<std::string>& scope() const { return scope_; }

    bool in_scope(GeneratorId g) const;
    /// Throws InvalidArgument for out-of-scope generators or for nonzero
    /// values on generators of nonzero degree.
    void set_value(GeneratorId g, Coeff value);
    Coeff value(GeneratorId g) const;
    /// Explicitly assigned values, in declaration order.
    const std::vector<std::optional<Coeff>>& values() const { return values_; }

    /// Evaluates an element supported on scoped generators; words are
    /// products of values in the commutative ground ring.
    Coeff evaluate(const Element& x) const;

    bool operator==(const Augmentation& o) const { return scope_ == o.scope_ && values_ == o.values_; }

private:
    PresentationPtr source_;
    std::vector<std::string> scope_;
    std::vector<std::optional<Coeff>> values_;
};

struct AugmentationFailure {
    std::string generator;
    Coeff residual;
};

struct AugmentationReport {
    std::vector<AugmentationFailure> failures;
    std::vector<std::string> scope_violations;  // scoped generators whose d leaves the scope
    bool ok() const { return failures.empty() && scope_violations.empty(); }
};

AugmentationReport verify_augmentation(const Augmentation& eps);

/// Long generators only; each word of d(long g) goes to eps(short letters)
/// times the word of its long letters. Throws InvalidArgument when eps
/// fails verification or a short generator is outside its scope.
Presentation partial_linearize(const Presentation& P, const Augmentation& eps);

}  // namespace cedga
