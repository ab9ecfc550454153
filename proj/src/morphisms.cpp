#include "cedga/morphisms.hpp"

#include <algorithm>

namespace cedga {

DgMap::DgMap(PresentationPtr source, PresentationPtr target)
    : source_(std::move(source)), target_(std::move(target))
{
    if (!source_ || !target_)
        throw InvalidArgument("DgMap needs both a source and a target");
    if (!(source_->ring() == target_->ring()))
        throw RingMismatch("map between presentations over " + source_->ring().to_string() + " and " +
                           target_->ring().to_string());
    idem_.resize(source_->idempotents().size());
    images_.resize(source_->generators().size());
}

DgMap DgMap::identity(PresentationPtr P)
{
    DgMap phi(P, P);
    for (const auto& e : P->idempotents())
        phi.set_idempotent(e.id, e.id);
    for (GeneratorId g = 0; g < P->generators().size(); ++g)
        phi.assign(g, P->gen(P->generator(g).name));
    return phi;
}

void DgMap::set_idempotent(IdempotentId from, IdempotentId to)
{
    if (from >= idem_.size() || to >= target_->idempotents().size())
        throw InvalidArgument("idempotent index out of range");
    idem_[from] = to;
}

void DgMap::assign(GeneratorId g, Element image)
{
    const Generator& G = source_->generator(g);
    auto s = idem_.at(G.source);
    auto t = idem_.at(G.target);
    if (!s || !t)
        throw InvalidArgument("assign '" + G.name + "': endpoints have no idempotent image");
    for (const auto& [w, c] : image.terms()) {
        if (c.kind() != target_->ring().kind())
            throw RingMismatch("image of '" + G.name + "'");
        if (w.source() != *s || w.target() != *t)
            throw InvalidArgument("image of '" + G.name + "' contains '" + target_->word_to_string(w) +
                                  "' whose ends differ from the images of the generator's ends");
    }
    images_.at(g) = std::move(image);
}

Element extend_map(const DgMap& phi, const Element& x)
{
    const Presentation& S = phi.source();
    Element out;
    for (const auto& [w, c] : x.terms()) {
        if (w.is_idempotent()) {
            auto e = phi.idempotent_map().at(w.source());
            if (!e)
                throw InvalidArgument("idempotent '" + S.idempotents()[w.source()].label + "' is unassigned");
            out.add_term(Word::idempotent(*e), c);
            continue;
        }
        Element acc;
        bool first = true;
        for (GeneratorId g : w.letters()) {
            const auto& img = phi.image(g);
            if (!img)
                throw InvalidArgument("generator '" + S.generator(g).name + "' is unassigned");
            acc = first ? *img : acc * *img;
            first = false;
            if (acc.is_zero())
                break;
        }
        out += acc.scaled(c);
    }
    return out;
}

DgMap compose(const DgMap& psi, const DgMap& phi)
{
    if (phi.target_ptr() != psi.source_ptr() && !(phi.target() == psi.source()))
        throw InvalidArgument("maps are not composable");
    DgMap out(phi.source_ptr(), psi.target_ptr());
    for (IdempotentId e = 0; e < phi.idempotent_map().size(); ++e) {
        auto mid = phi.idempotent_map()[e];
        if (!mid)
            continue;
        if (auto end = psi.idempotent_map().at(*mid))
            out.set_idempotent(e, *end);
    }
    for (GeneratorId g = 0; g < phi.source().generators().size(); ++g)
        if (const auto& img = phi.image(g))
            out.assign(g, extend_map(psi, *img));
    return out;
}

ChainMapReport verify_chain_map(const DgMap& phi)
{
    const Presentation& S = phi.source();
    const Presentation& T = phi.target();
    ChainMapReport rep;
    for (GeneratorId g = 0; g < S.generators().size(); ++g) {
        const Generator& G = S.generator(g);
        const auto& img = phi.image(g);
        if (!img) {
            rep.unassigned.push_back(G.name);
            continue;
        }
        for (const auto& [w, c] : img->terms())
            if (T.degree(w) != G.degree) {
                rep.degree_violations.push_back(G.name);
                break;
            }
    }
    if (!rep.unassigned.empty())
        return rep;
    for (GeneratorId g = 0; g < S.generators().size(); ++g) {
        const auto& dg = S.differential(g);
        if (!dg)
            throw IncompletePresentation(S.generator(g).name);
        Element residual = extend_map(phi, *dg) - apply_differential(T, *phi.image(g));
        if (!residual.is_zero())
            rep.failures.push_back({S.generator(g).name, std::move(residual)});
    }
    return rep;
}

// ------------------------------------------------------------ Augmentation

Augmentation::Augmentation(PresentationPtr source, std::vector<std::string> scope)
    : source_(std::move(source)), scope_(std::move(scope))
{
    if (!source_)
        throw InvalidArgument("augmentation needs a source presentation");
    values_.resize(source_->generators().size());
}

bool Augmentation::in_scope(GeneratorId g) const
{
    const Generator& G = source_->generator(g);
    return G.role == ChordRole::Short && std::find(scope_.begin(), scope_.end(), G.link) != scope_.end();
}

void Augmentation::set_value(GeneratorId g, Coeff value)
{
    const Generator& G = source_->generator(g);
    if (!in_scope(g))
        throw InvalidArgument("generator '" + G.name + "' is outside the augmentation scope");
    if (value.kind() != source_->ring().kind())
        throw RingMismatch("augmentation value for '" + G.name + "'");
    if (G.degree != 0 && !value.is_zero())
        throw InvalidArgument("generator '" + G.name + "' has degree " + std::to_string(G.degree) +
                              " and must augment to 0");
    values_.at(g) = std::move(value);
}

Coeff Augmentation::value(GeneratorId g) const
{
    const auto& v = values_.at(g);
    return v ? *v : Coeff::zero(source_->ring());
}

Coeff Augmentation::evaluate(const Element& x) const
{
    const CoeffRing& ring = source_->ring();
    Coeff total = Coeff::zero(ring);
    for (const auto& [w, c] : x.terms()) {
        Coeff t = c;
        for (GeneratorId g : w.letters()) {
            if (!in_scope(g))
                throw InvalidArgument("generator '" + source_->generator(g).name +
                                      "' is outside the augmentation scope");
            t = t * value(g);
            if (t.is_zero())
                break;
        }
        total = total + t;
    }
    return total;
}

AugmentationReport verify_augmentation(const Augmentation& eps)
{
    const Presentation& P = eps.source();
    AugmentationReport rep;
    for (GeneratorId g = 0; g < P.generators().size(); ++g) {
        if (!eps.in_scope(g))
            continue;
        const auto& dg = P.differential(g);
        if (!dg)
            throw IncompletePresentation(P.generator(g).name);
        bool closed = true;
        for (const auto& [w, c] : dg->terms())
            for (GeneratorId h : w.letters())
                if (!eps.in_scope(h))
                    closed = false;
        if (!closed) {
            rep.scope_violations.push_back(P.generator(g).name);
            continue;
        }
        Coeff r = eps.evaluate(*dg);
        if (!r.is_zero())
            rep.failures.push_back({P.generator(g).name, r});
    }
    return rep;
}

Presentation partial_linearize(const Presentation& P, const Augmentation& eps)
{
    if (!eps.source().generators().empty() && !(eps.source() == P))
        throw InvalidArgument("augmentation is defined on a different presentation");
    if (!verify_augmentation(eps).ok())
        throw InvalidArgument("augmentation does not verify; refusing to linearize");

    // A short chord with a nonzero value between distinct idempotents would
    // glue those idempotents in the quotient; collapse to a single one then.
    bool collapse = false;
    for (GeneratorId g = 0; g < P.generators().size(); ++g) {
        const Generator& G = P.generator(g);
        if (G.role == ChordRole::Short && G.source != G.target && eps.in_scope(g) && !eps.value(g).is_zero())
            collapse = true;
    }

    Presentation out(P.ring());
    out.set_convention(P.convention());
    auto idem_of = [&](IdempotentId e) -> IdempotentId { return collapse ? 0 : e; };
    if (collapse)
        out.add_idempotent(P.idempotents().empty() ? "e" : P.idempotents().front().label);
    else
        for (const auto& e : P.idempotents())
            out.add_idempotent(e.label);

    std::vector<std::optional<GeneratorId>> remap(P.generators().size());
    for (GeneratorId g = 0; g < P.generators().size(); ++g) {
        Generator G = P.generator(g);
        if (G.role != ChordRole::Long)
            continue;
        G.source = idem_of(G.source);
        G.target = idem_of(G.target);
        remap[g] = out.add_generator(std::move(G));
    }

    for (GeneratorId g = 0; g < P.generators().size(); ++g) {
        if (!remap[g])
            continue;
        const auto& dg = P.differential(g);
        if (!dg)
            throw IncompletePresentation(P.generator(g).name);
        Element d;
        for (const auto& [w, c] : dg->terms()) {
            Coeff k = c;
            std::vector<GeneratorId> longs;
            for (GeneratorId h : w.letters()) {
                if (remap[h]) {
                    longs.push_back(*remap[h]);
                    continue;
                }
                if (!eps.in_scope(h))
                    throw InvalidArgument("short generator '" + P.generator(h).name + "' has no augmentation value");
                k = k * eps.value(h);
            }
            if (k.is_zero())
                continue;
            if (longs.empty()) {
                d.add_term(Word::idempotent(idem_of(w.source())), k);
                continue;
            }
            auto nw = out.make_word(longs);
            if (!nw)
                throw InvalidArgument("linearized word is not composable in '" + P.generator(g).name + "'");
            d.add_term(*nw, k);
        }
        out.set_differential(*remap[g], std::move(d));
    }
    return out;
}

}  // namespace cedga
