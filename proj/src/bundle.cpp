#include "cedga/bundle.hpp"

namespace cedga {

const NamedPresentation* CatalogBundle::find_presentation(const std::string& name) const
{
    for (const auto& p : presentations)
        if (p.name == name)
            return &p;
    return nullptr;
}

const NamedMap* CatalogBundle::find_map(const std::string& name) const
{
    for (const auto& m : maps)
        if (m.name == name)
            return &m;
    return nullptr;
}

const NamedAugmentation* CatalogBundle::find_augmentation(const std::string& name) const
{
    for (const auto& a : augmentations)
        if (a.name == name)
            return &a;
    return nullptr;
}

const Presentation& CatalogBundle::presentation(const std::string& name) const
{
    return *presentation_ptr(name);
}

PresentationPtr CatalogBundle::presentation_ptr(const std::string& name) const
{
    if (auto p = find_presentation(name))
        return p->presentation;
    throw InvalidArgument("bundle has no presentation '" + name + "'");
}

const DgMap& CatalogBundle::map(const std::string& name) const
{
    if (auto m = find_map(name))
        return m->map;
    throw InvalidArgument("bundle has no map '" + name + "'");
}

const Augmentation& CatalogBundle::augmentation(const std::string& name) const
{
    if (auto a = find_augmentation(name))
        return a->aug;
    throw InvalidArgument("bundle has no augmentation '" + name + "'");
}

bool operator==(const CatalogBundle& a, const CatalogBundle& b)
{
    if (a.presentations.size() != b.presentations.size() || a.maps.size() != b.maps.size() ||
        a.augmentations.size() != b.augmentations.size() || a.notes != b.notes)
        return false;
    for (std::size_t i = 0; i < a.presentations.size(); ++i)
        if (a.presentations[i].name != b.presentations[i].name ||
            !(*a.presentations[i].presentation == *b.presentations[i].presentation))
            return false;
    for (std::size_t i = 0; i < a.maps.size(); ++i)
        if (a.maps[i].name != b.maps[i].name || a.maps[i].source != b.maps[i].source ||
            a.maps[i].target != b.maps[i].target || !(a.maps[i].map == b.maps[i].map))
            return false;
    for (std::size_t i = 0; i < a.augmentations.size(); ++i)
        if (a.augmentations[i].name != b.augmentations[i].name ||
            a.augmentations[i].source != b.augmentations[i].source ||
            !(a.augmentations[i].aug == b.augmentations[i].aug))
            return false;
    return true;
}

}  // namespace cedga
