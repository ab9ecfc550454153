#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cedga/morphisms.hpp"

namespace cedga {

struct NamedPresentation {
    std::string name;
    PresentationPtr presentation;
};

struct NamedMap {
    std::string name;
    std::string source;
    std::string target;
    DgMap map;
};

struct NamedAugmentation {
    std::string name;
    std::string source;
    Augmentation aug;
};

/// Named presentations, maps and augmentations, with free-text notes.
/// This is both what the catalog hands out and what a .cedga file holds.
struct CatalogBundle {
    std::vector<NamedPresentation> presentations;
    std::vector<NamedMap> maps;
    std::vector<NamedAugmentation> augmentations;
    std::vector<std::string> notes;

    const NamedPresentation* find_presentation(const std::string& name) const;
    const NamedMap* find_map(const std::string& name) const;
    const NamedAugmentation* find_augmentation(const std::string& name) const;

    /// Lookup that throws InvalidArgument when the name is missing.
    const Presentation& presentation(const std::string& name) const;
    PresentationPtr presentation_ptr(const std::string& name) const;
    const DgMap& map(const std::string& name) const;
    const Augmentation& augmentation(const std::string& name) const;
};

bool operator==(const CatalogBundle& a, const CatalogBundle& b);

}  // namespace cedga
