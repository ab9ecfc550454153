#include "cedga/catalog.hpp"

#include <functional>
#include <numeric>
#include <set>

namespace cedga {

std::string to_string(SignReading s)
{
    switch (s) {
    case SignReading::Transposed:
        return "transposed";
    case SignReading::Potential:
        return "potential";
    case SignReading::UniformMinus:
        return "uniform_minus";
    }
    return "?";
}

int chord_degree(const std::vector<int>& m, PotentialConvention conv, int p, int i, int j)
{
    int shift = m.at(static_cast<std::size_t>(j - 1)) - m.at(static_cast<std::size_t>(i - 1));
    return conv == PotentialConvention::PotentialMinus ? 1 - 2 * p - shift : 1 - 2 * p + shift;
}

std::string chord_name(const std::string& prefix, int p, int i, int j)
{
    std::string base = prefix + std::to_string(p) + "_";
    if (i < 10 && j < 10)
        return base + std::to_string(i) + std::to_string(j);
    return base + std::to_string(i) + "_" + std::to_string(j);
}

namespace {

int quadratic_sign(const PointFamily& f, int i, int j, int k)
{
    auto m = [&](int t) { return f.m[static_cast<std::size_t>(t - 1)]; };
    switch (f.signs) {
    case SignReading::Transposed:
        return (m(k) + m(j)) % 2 == 0 ? 1 : -1;
    case SignReading::Potential:
        return (m(i) + m(k)) % 2 == 0 ? 1 : -1;
    case SignReading::UniformMinus:
        return -1;
    }
    return 1;
}

void check_family(const Presentation& P, const PointFamily& f)
{
    if (f.sigma.size() < 2)
        throw InvalidArgument("point family '" + f.prefix + "' needs at least two points");
    if (f.m.size() != f.sigma.size())
        throw InvalidArgument("potential of family '" + f.prefix + "' has " + std::to_string(f.m.size()) +
                              " entries for " + std::to_string(f.sigma.size()) + " points");
    if (f.p_max < 0)
        throw InvalidArgument("p_max must be non-negative");
    for (IdempotentId e : f.sigma)
        if (e >= P.idempotents().size())
            throw InvalidArgument("family '" + f.prefix + "' refers to an unknown idempotent");
}

Word word2(const Presentation& P, GeneratorId left, GeneratorId right)
{
    return Word::from_letters({left, right}, P.generator(right).source, P.generator(left).target);
}

// Declares the generators of a family in (p, i, j) order.
FamilyIndex declare_family(Presentation& P, const PointFamily& f, int degree_shift)
{
    FamilyIndex idx;
    const int n = static_cast<int>(f.sigma.size());
    const std::string link = f.link.empty() ? f.prefix : f.link;
    for (int p = 0; p <= f.p_max; ++p)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (p == 0 && i >= j)
                    continue;
                Generator g;
                g.name = chord_name(f.prefix, p, i, j);
                g.degree = chord_degree(f.m, f.convention, p, i, j) + degree_shift;
                g.source = f.sigma[static_cast<std::size_t>(i - 1)];
                g.target = f.sigma[static_cast<std::size_t>(j - 1)];
                g.role = ChordRole::Short;
                g.link = link;
                g.level = p;
                idx.emplace(ChordKey{p, i, j}, P.add_generator(std::move(g)));
            }
    return idx;
}

GeneratorId lookup(const FamilyIndex& idx, int p, int i, int j, bool& found)
{
    auto it = idx.find(ChordKey{p, i, j});
    found = it != idx.end();
    return found ? it->second : 0;
}

}  // namespace

FamilyIndex add_point_family(Presentation& P, const PointFamily& f)
{
    check_family(P, f);
    FamilyIndex idx = declare_family(P, f, 0);
    const int n = static_cast<int>(f.sigma.size());
    const CoeffRing& ring = P.ring();
    for (const auto& [key, g] : idx) {
        auto [p, i, j] = key;
        Element d;
        if (p == 1 && i == j)
            d.add_term(Word::idempotent(f.sigma[static_cast<std::size_t>(i - 1)]), Coeff::one(ring));
        for (int l = 0; l <= p; ++l)
            for (int k = 1; k <= n; ++k) {
                bool ok_left = false, ok_right = false;
                GeneratorId left = lookup(idx, p - l, k, j, ok_left);
                GeneratorId right = lookup(idx, l, i, k, ok_right);
                if (!ok_left || !ok_right)
                    continue;
                d.add_term(word2(P, left, right), Coeff::from_int(ring, quadratic_sign(f, i, j, k)));
            }
        P.set_differential(g, std::move(d));
    }
    return idx;
}

FamilyIndex add_hat_family(Presentation& P, const PointFamily& hat, const FamilyIndex& x, const FamilyIndex& y)
{
    check_family(P, hat);
    FamilyIndex idx = declare_family(P, hat, -1);
    const int n = static_cast<int>(hat.sigma.size());
    const CoeffRing& ring = P.ring();
    auto single = [&](GeneratorId g) {
        const Generator& G = P.generator(g);
        return Element(Word::from_letters({g}, G.source, G.target), Coeff::one(ring));
    };
    for (const auto& [key, g] : idx) {
        auto [p, i, j] = key;
        GeneratorId xg = x.at(key);
        GeneratorId yg = y.at(key);
        Element d = single(xg) - single(yg);
        for (int l = 0; l <= p; ++l)
            for (int k = 1; k <= n; ++k) {
                bool a = false, b = false;
                GeneratorId hl = lookup(idx, p - l, k, j, a);
                GeneratorId hr = lookup(idx, l, i, k, b);
                if (!a || !b)
                    continue;
                Coeff s = Coeff::from_int(ring, -quadratic_sign(hat, i, j, k));
                GeneratorId xl = x.at(ChordKey{p - l, k, j});
                GeneratorId xr = x.at(ChordKey{l, i, k});
                GeneratorId yl = y.at(ChordKey{p - l, k, j});
                // -G(h1 h2) = -(h1 x2 + (-1)^{|x1|} y1 h2)
                d.add_term(word2(P, hl, xr), s);
                int koszul = P.generator(xl).degree % 2 == 0 ? 1 : -1;
                d.add_term(word2(P, yl, hr), s * Coeff::from_int(ring, koszul));
            }
        P.set_differential(g, std::move(d));
    }
    return idx;
}

Presentation make_point_algebra(int n, std::vector<int> m, int p_max, PotentialConvention conv, CoeffRing ring,
                                SignReading signs)
{
    if (n < 2)
        throw InvalidArgument("the n-point algebra needs n >= 2");
    if (p_max < 0)
        throw InvalidArgument("p_max must be non-negative");
    Presentation P(std::move(ring));
    P.set_convention(conv);
    PointFamily f;
    f.prefix = "c";
    for (int i = 1; i <= n; ++i)
        f.sigma.push_back(P.add_idempotent("e" + std::to_string(i)));
    f.m = std::move(m);
    f.p_max = p_max;
    f.convention = conv;
    f.signs = signs;
    add_point_family(P, f);
    return P;
}

Presentation make_hat_point_algebra(int n, std::vector<int> m, int p_max, bool closed, CoeffRing ring,
                                    PotentialConvention conv, SignReading signs)
{
    if (n < 2)
        throw InvalidArgument("the n-point algebra needs n >= 2");
    if (p_max < 0)
        throw InvalidArgument("p_max must be non-negative");
    Presentation P(std::move(ring));
    P.set_convention(conv);
    PointFamily f;
    for (int i = 1; i <= n; ++i)
        f.sigma.push_back(P.add_idempotent("e" + std::to_string(i)));
    f.m = std::move(m);
    f.p_max = p_max;
    f.convention = conv;
    f.signs = signs;
    f.prefix = "x";
    FamilyIndex x = add_point_family(P, f);
    FamilyIndex y = x;
    if (!closed) {
        f.prefix = "y";
        y = add_point_family(P, f);
    }
    f.prefix = "xh";
    add_hat_family(P, f, x, y);
    return P;
}

// ------------------------------------------------------------ free product

namespace {

Element remap_element(const Element& x, GeneratorId offset, const std::vector<IdempotentId>& idem)
{
    Element out;
    for (const auto& [w, c] : x.terms()) {
        if (w.is_idempotent()) {
            out.add_term(Word::idempotent(idem[w.source()]), c);
            continue;
        }
        std::vector<GeneratorId> letters = w.letters();
        for (auto& g : letters)
            g += offset;
        out.add_term(Word::from_letters(std::move(letters), idem[w.source()], idem[w.target()]), c);
    }
    return out;
}

}  // namespace

FreeProduct free_product(PresentationPtr P1, PresentationPtr P2, const std::vector<std::optional<IdempotentId>>& shared)
{
    if (!(P1->ring() == P2->ring()))
        throw RingMismatch("free product of presentations over " + P1->ring().to_string() + " and " +
                           P2->ring().to_string());
    if (shared.size() != P2->idempotents().size())
        throw InvalidArgument("idempotent matching must list every idempotent of the second factor");
    std::set<IdempotentId> used;
    for (const auto& s : shared)
        if (s) {
            if (*s >= P1->idempotents().size())
                throw InvalidArgument("idempotent matching refers to an unknown idempotent");
            if (!used.insert(*s).second)
                throw InvalidArgument("idempotent matching is not injective");
        }

    auto Q = std::make_shared<Presentation>(P1->ring());
    if (P1->convention() == P2->convention() || P2->generators().empty())
        Q->set_convention(P1->convention());
    std::vector<IdempotentId> idem1, idem2;
    for (const auto& e : P1->idempotents())
        idem1.push_back(Q->add_idempotent(e.label));
    for (IdempotentId k = 0; k < P2->idempotents().size(); ++k) {
        if (shared[k]) {
            idem2.push_back(idem1[*shared[k]]);
            continue;
        }
        const std::string& label = P2->idempotents()[k].label;
        if (Q->find_idempotent(label))
            throw InvalidArgument("unshared idempotent '" + label + "' clashes with the first factor");
        idem2.push_back(Q->add_idempotent(label));
    }
    for (const auto& g : P1->generators()) {
        Generator h = g;
        h.source = idem1[g.source];
        h.target = idem1[g.target];
        Q->add_generator(std::move(h));
    }
    const auto offset = static_cast<GeneratorId>(P1->generators().size());
    for (const auto& g : P2->generators()) {
        if (P1->find_generator(g.name))
            throw InvalidArgument("generator '" + g.name + "' occurs in both factors");
        Generator h = g;
        h.source = idem2[g.source];
        h.target = idem2[g.target];
        Q->add_generator(std::move(h));
    }
    for (GeneratorId g = 0; g < P1->generators().size(); ++g)
        if (const auto& d = P1->differential(g))
            Q->set_differential(g, remap_element(*d, 0, idem1));
    for (GeneratorId g = 0; g < P2->generators().size(); ++g)
        if (const auto& d = P2->differential(g))
            Q->set_differential(g + offset, remap_element(*d, offset, idem2));

    FreeProduct out{Q, DgMap(P1, Q), DgMap(P2, Q)};
    for (IdempotentId e = 0; e < idem1.size(); ++e)
        out.inc1.set_idempotent(e, idem1[e]);
    for (IdempotentId e = 0; e < idem2.size(); ++e)
        out.inc2.set_idempotent(e, idem2[e]);
    for (GeneratorId g = 0; g < P1->generators().size(); ++g)
        out.inc1.assign(g, Q->gen(P1->generator(g).name));
    for (GeneratorId g = 0; g < P2->generators().size(); ++g)
        out.inc2.assign(g, Q->gen(P2->generator(g).name));
    return out;
}

// ---------------------------------------------------------------- registry

namespace {

using PresPtr = std::shared_ptr<Presentation>;

struct LinkSpec {
    std::string prefix;
    std::vector<IdempotentId> sigma;
};

// Helper for writing transcribed differentials: sum of c * word.
class Terms {
public:
    explicit Terms(const Presentation& P) : P_(P) {}
    Terms& add(long c, std::initializer_list<std::string> names)
    {
        x_.add_term(P_.word(names), P_.coeff(c));
        return *this;
    }
    Terms& idem(long c, const std::string& label)
    {
        x_ += P_.idem(label).scaled(P_.coeff(c));
        return *this;
    }
    Terms& one(long c)
    {
        x_ += P_.scalar(c);
        return *this;
    }
    Element get() const { return x_; }

private:
    const Presentation& P_;
    Element x_;
};

GeneratorId add_long(Presentation& P, const std::string& name, int degree, const std::string& from,
                     const std::string& to)
{
    Generator g;
    g.name = name;
    g.degree = degree;
    g.source = *P.find_idempotent(from);
    g.target = *P.find_idempotent(to);
    g.role = ChordRole::Long;
    return P.add_generator(std::move(g));
}

GeneratorId add_short(Presentation& P, const std::string& name, int degree, const std::string& from,
                      const std::string& to, const std::string& link)
{
    Generator g;
    g.name = name;
    g.degree = degree;
    g.source = *P.find_idempotent(from);
    g.target = *P.find_idempotent(to);
    g.role = ChordRole::Short;
    g.link = link;
    return P.add_generator(std::move(g));
}

void add_links(Presentation& P, const std::vector<LinkSpec>& links, const std::vector<int>& m, int p_max,
               PotentialConvention conv)
{
    for (const auto& l : links) {
        PointFamily f;
        f.prefix = l.prefix;
        f.sigma = l.sigma;
        f.m = m;
        f.p_max = p_max;
        f.convention = conv;
        add_point_family(P, f);
    }
}

std::vector<IdempotentId> ids(const Presentation& P, std::initializer_list<std::string> labels)
{
    std::vector<IdempotentId> out;
    for (const auto& l : labels)
        out.push_back(*P.find_idempotent(l));
    return out;
}

struct PairingResult {
    PresentationPtr codomain;
    DgMap link_map;
};

// Glues the links of each pair into one copy of the n-point algebra. The
// codomain idempotents are the classes of domain idempotents identified
// by the gluing, labelled f1, f2, ... in order of first appearance.
PairingResult pairing_codomain(const PresentationPtr& dom, const std::vector<LinkSpec>& links,
                               const std::vector<std::vector<std::string>>& groups,
                               const std::vector<std::string>& copy_prefixes, const std::vector<int>& m, int p_max,
                               PotentialConvention conv)
{
    const std::size_t ne = dom->idempotents().size();
    std::vector<std::size_t> parent(ne);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        return parent[a] == a ? a : parent[a] = find(parent[a]);
    };
    auto spec = [&](const std::string& prefix) -> const LinkSpec& {
        for (const auto& l : links)
            if (l.prefix == prefix)
                return l;
        throw InvalidArgument("unknown link '" + prefix + "'");
    };
    for (const auto& group : groups)
        for (std::size_t k = 1; k < group.size(); ++k) {
            const auto& a = spec(group[0]).sigma;
            const auto& b = spec(group[k]).sigma;
            for (std::size_t t = 0; t < a.size(); ++t)
                parent[find(a[t])] = find(b[t]);
        }

    auto Q = std::make_shared<Presentation>(dom->ring());
    Q->set_convention(conv);
    std::map<std::size_t, IdempotentId> cls;
    std::vector<IdempotentId> image(ne);
    for (std::size_t e = 0; e < ne; ++e) {
        auto root = find(e);
        auto it = cls.find(root);
        if (it == cls.end())
            it = cls.emplace(root, Q->add_idempotent("f" + std::to_string(cls.size() + 1))).first;
        image[e] = it->second;
    }
    std::vector<FamilyIndex> copies;
    for (std::size_t c = 0; c < groups.size(); ++c) {
        PointFamily f;
        f.prefix = copy_prefixes.at(c);
        for (IdempotentId e : spec(groups[c][0]).sigma)
            f.sigma.push_back(image[e]);
        f.m = m;
        f.p_max = p_max;
        f.convention = conv;
        copies.push_back(add_point_family(*Q, f));
    }

    DgMap phi(dom, Q);
    for (IdempotentId e = 0; e < ne; ++e)
        phi.set_idempotent(e, image[e]);
    for (std::size_t c = 0; c < groups.size(); ++c)
        for (const auto& link : groups[c])
            for (const auto& [key, target] : copies[c]) {
                auto [p, i, j] = key;
                GeneratorId g = dom->generator_id(chord_name(link, p, i, j));
                phi.assign(g, Q->gen(Q->generator(target).name));
            }
    return {Q, std::move(phi)};
}

CoeffRing pick_ring(const ExampleOptions& o, CoeffRing dflt)
{
    return o.ring ? *o.ring : dflt;
}

void require_levels(const ExampleOptions& o, int needed, const std::string& name)
{
    if (o.p_max < needed)
        throw InvalidArgument("example '" + name + "' needs p_max >= " + std::to_string(needed));
}

// ------------------------------------------------------------ entries

CatalogBundle unknot_one_handle(const ExampleOptions& o)
{
    require_levels(o, 1, "unknot_one_handle");
    auto P = std::make_shared<Presentation>(pick_ring(o, CoeffRing::rationals()));
    P->set_convention(PotentialConvention::PotentialPlus);
    P->add_idempotent("e1");
    GeneratorId a = add_long(*P, "a", -1, "e1", "e1");
    add_links(*P, {{"t", ids(*P, {"e1", "e1"})}}, {1, 0}, o.p_max, PotentialConvention::PotentialPlus);
    P->set_differential(a, Terms(*P).one(1).add(-1, {"t0_12"}).get());

    CatalogBundle B;
    B.presentations.push_back({"main", P});
    Augmentation eps(P, {"t"});
    eps.set_value(P->generator_id("t0_12"), P->coeff(1));
    eps.set_value(P->generator_id("t1_21"), P->coeff(1));
    B.augmentations.push_back({"eps", "main", eps});
    B.notes = {
        "t: two-point link algebra, m = (1,0), potential_plus; both points on the single idempotent e1 [inferred]",
        "d a = 1 - t0_12",
        "eps: t0_12 -> 1, t1_21 -> 1, all other t chords -> 0",
    };
    return B;
}

CatalogBundle unknot_two_handles(const ExampleOptions& o)
{
    require_levels(o, 1, "unknot_two_handles");
    auto P = std::make_shared<Presentation>(pick_ring(o, CoeffRing::rationals()));
    P->set_convention(PotentialConvention::PotentialPlus);
    P->add_idempotent("e1");
    P->add_idempotent("e2");
    GeneratorId a = add_long(*P, "a", -1, "e1", "e2");
    add_links(*P, {{"ta", ids(*P, {"e1", "e2"})}, {"tb", ids(*P, {"e1", "e2"})}}, {1, 0}, o.p_max,
              PotentialConvention::PotentialPlus);
    P->set_differential(a, Terms(*P).add(1, {"ta0_12"}).add(-1, {"tb0_12"}).get());

    CatalogBundle B;
    B.presentations.push_back({"main", P});
    B.notes = {
        "ta, tb: the two 0-handle link algebras t(1), t(2); m = (1,0), potential_plus",
        "point i of either link sits on idempotent e_i [inferred from the ideal e1 - t1_21*t0_12, e2 - t0_12*t1_21]",
        "d a = ta0_12 - tb0_12",
    };
    return B;
}

CatalogBundle saddle_cobordism(const ExampleOptions& o)
{
    require_levels(o, 0, "saddle_cobordism");
    CoeffRing ring = pick_ring(o, CoeffRing::gf2());
    const std::vector<int> m{0, 1, 0};
    const auto conv = PotentialConvention::PotentialMinus;

    auto D = std::make_shared<Presentation>(ring);
    D->set_convention(conv);
    D->add_idempotent("e");
    GeneratorId a1 = add_long(*D, "a1p", -1, "e", "e");
    GeneratorId a2 = add_long(*D, "a2p", -1, "e", "e");
    GeneratorId b = add_long(*D, "b", 0, "e", "e");
    D->set_differential(a1, Terms(*D).one(1).add(1, {"b"}).get());
    D->set_differential(a2, Terms(*D).one(1).add(1, {"b"}).get());
    D->set_differential(b, Element());

    auto C = std::make_shared<Presentation>(ring);
    C->set_convention(conv);
    C->add_idempotent("f");
    GeneratorId a1m = add_long(*C, "a1m", -1, "f", "f");
    GeneratorId a2m = add_long(*C, "a2m", -1, "f", "f");
    PointFamily f;
    f.sigma = ids(*C, {"f", "f", "f"});
    f.m = m;
    f.p_max = o.p_max;
    f.convention = conv;
    f.prefix = "x";
    FamilyIndex x = add_point_family(*C, f);
    f.prefix = "y";
    FamilyIndex y = add_point_family(*C, f);
    f.prefix = "xh";
    add_hat_family(*C, f, x, y);
    C->set_differential(a1m, Terms(*C).one(1).add(1, {"x0_12"}).get());
    C->set_differential(a2m, Terms(*C).one(1).add(1, {"y0_12"}).get());

    DgMap phi(D, C);
    phi.set_idempotent(0, 0);
    phi.assign(a1, Terms(*C).add(1, {"a1m"}).add(1, {"xh0_12"}).get());
    phi.assign(a2, C->gen("a2m"));
    phi.assign(b, C->gen("y0_12"));

    CatalogBundle B;
    B.presentations.push_back({"main", D});
    B.presentations.push_back({"cobordism", C});
    B.maps.push_back({"Phi", "main", "cobordism", phi});
    B.notes = {
        "d a1p = 1 + b and d a2p = 1 + b [inferred: forced by d(Phi(a2p)) = d(a2m) = 1 + y0_12 = Phi(1 + b)]",
        "d b = 0 (displayed as the pair (0,0))",
        "d a1m = 1 + x0_12, d a2m = 1 + y0_12 [inferred: forced by the same verification identities]",
        "x, y, xh: hat algebra of three points, m = (0,1,0); all points on one idempotent f [inferred]",
        "Phi: a1p -> a1m + xh0_12, a2p -> a2m, b -> y0_12",
    };
    return B;
}

CatalogBundle unknot_edge(const ExampleOptions& o)
{
    require_levels(o, 0, "unknot_edge");
    const std::vector<int> m{0, 1, 0};
    const auto conv = PotentialConvention::PotentialMinus;
    auto D = std::make_shared<Presentation>(pick_ring(o, CoeffRing::gf2()));
    D->set_convention(conv);
    for (auto l : {"e1", "e2", "e3"})
        D->add_idempotent(l);
    GeneratorId a1 = add_long(*D, "a1", -1, "e1", "e1");
    GeneratorId a2 = add_long(*D, "a2", -1, "e2", "e2");
    std::vector<LinkSpec> links{{"x", ids(*D, {"e1", "e1", "e3"})}, {"y", ids(*D, {"e2", "e2", "e3"})}};
    add_links(*D, links, m, o.p_max, conv);
    D->set_differential(a1, Terms(*D).idem(1, "e1").add(-1, {"x0_12"}).get());
    D->set_differential(a2, Terms(*D).idem(1, "e2").add(-1, {"y0_12"}).get());

    auto [C, phi] = pairing_codomain(D, links, {{"x", "y"}}, {"xc"}, m, o.p_max, conv);
    CatalogBundle B;
    B.presentations.push_back({"main", D});
    B.presentations.push_back({"filling", C});
    B.maps.push_back({"link", "main", "filling", phi});
    B.notes = {
        "d a1 = e1 - x0_12, d a2 = e2 - y0_12",
        "x points sit on (e1,e1,e3), y points on (e2,e2,e3) [inferred: makes x0_12 a loop at e1 and y0_12 a loop at e2]",
        "m = (0,1,0) so that x0_12 and y0_12 have degree 0 [inferred]",
        "link: x and y chords -> xc chords of the single link algebra of the filling",
    };
    return B;
}

CatalogBundle theta(const ExampleOptions& o)
{
    require_levels(o, 1, "theta");
    const std::vector<int> m{0, 0, 0};
    const auto conv = PotentialConvention::PotentialMinus;
    auto D = std::make_shared<Presentation>(pick_ring(o, CoeffRing::gf2()));
    D->set_convention(conv);
    for (auto l : {"e1", "e2", "e3"})
        D->add_idempotent(l);
    GeneratorId a = add_long(*D, "a", -1, "e1", "e1");
    GeneratorId b = add_long(*D, "b", 0, "e2", "e3");
    std::vector<LinkSpec> links{{"x", ids(*D, {"e1", "e2", "e3"})}, {"y", ids(*D, {"e1", "e2", "e3"})}};
    add_links(*D, links, m, o.p_max, conv);
    D->set_differential(a, Terms(*D)
                               .idem(1, "e1")
                               .add(1, {"y1_31", "b", "x0_12"})
                               .add(1, {"y1_31", "x0_13"})
                               .add(-1, {"y1_21", "x0_12"})
                               .get());
    D->set_differential(b, Terms(*D).add(1, {"x0_23"}).add(-1, {"y0_23"}).get());

    auto [C, link] = pairing_codomain(D, links, {{"x", "y"}}, {"xc"}, m, o.p_max, conv);
    DgMap eps = link;
    eps.assign(a, C->gen("xc1_11"));
    eps.assign(b, Element());

    CatalogBundle B;
    B.presentations.push_back({"main", D});
    B.presentations.push_back({"filling", C});
    B.maps.push_back({"link", "main", "filling", link});
    B.maps.push_back({"eps", "main", "filling", eps});
    B.notes = {
        "d a = e1 + y1_31*b*x0_12 + y1_31*x0_13 - y1_21*x0_12",
        "d b = x0_23 - y0_23",
        "x and y points sit on e1, e2, e3; m = 0, so |a| = -1 and |b| = 0 [inferred]",
        "eps: a -> xc1_11, x and y chords -> xc chords, b -> 0",
    };
    return B;
}

const std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>>& four_link_pairings()
{
    static const std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> p{
        {"xw_yv", {{"x", "w"}, {"y", "v"}}},
        {"xv_yw", {{"x", "v"}, {"y", "w"}}},
        {"xy_vw", {{"x", "y"}, {"v", "w"}}},
    };
    return p;
}

void add_pairings(CatalogBundle& B, const PresentationPtr& D, const std::vector<LinkSpec>& links,
                  const std::vector<int>& m, int p_max, PotentialConvention conv)
{
    for (const auto& [tag, groups] : four_link_pairings()) {
        auto [C, phi] = pairing_codomain(D, links, groups, {"xc", "yc"}, m, p_max, conv);
        B.presentations.push_back({"filling_" + tag, C});
        B.maps.push_back({"link_" + tag, "main", "filling_" + tag, phi});
    }
}

CatalogBundle a3_link(const ExampleOptions& o)
{
    require_levels(o, 1, "a3_link");
    const std::vector<int> m{1, 0, 1};
    const auto conv = PotentialConvention::PotentialMinus;
    auto D = std::make_shared<Presentation>(pick_ring(o, CoeffRing::gf2()));
    D->set_convention(conv);
    for (auto l : {"E1", "E2", "S", "A", "B", "T"})
        D->add_idempotent(l);
    GeneratorId a1 = add_long(*D, "a1", -1, "E1", "E1");
    GeneratorId a2 = add_long(*D, "a2", -1, "E2", "E2");
    GeneratorId b = add_long(*D, "b", -1, "S", "T");
    std::vector<LinkSpec> links{{"x", ids(*D, {"E1", "S", "A"})},
                                {"y", ids(*D, {"E2", "A", "T"})},
                                {"v", ids(*D, {"E1", "B", "T"})},
                                {"w", ids(*D, {"E2", "S", "B"})}};
    add_links(*D, links, m, o.p_max, conv);
    D->set_differential(a1, Terms(*D)
                                .idem(1, "E1")
                                .add(1, {"v1_31", "b", "x0_12"})
                                .add(-1, {"v1_21", "w0_23", "x0_12"})
                                .add(1, {"v1_31", "y0_23", "x0_13"})
                                .get());
    D->set_differential(a2, Terms(*D)
                                .idem(1, "E2")
                                .add(-1, {"y1_31", "b", "w0_12"})
                                .add(-1, {"y1_21", "x0_23", "w0_12"})
                                .add(1, {"y1_31", "v0_23", "w0_13"})
                                .get());
    D->set_differential(b, Terms(*D).add(1, {"y0_23", "x0_23"}).add(-1, {"v0_23", "w0_23"}).get());

    CatalogBundle B;
    B.presentations.push_back({"main", D});
    add_pairings(B, D, links, m, o.p_max, conv);
    B.notes = {
        "d a1 = e1 + v1_31*b*x0_12 - v1_21*w0_23*x0_12 + v1_31*y0_23*x0_13 (e1 is written E1)",
        "d a2 = e2 - y1_31*b*w0_12 - y1_21*x0_23*w0_12 + y1_31*v0_23*w0_13 (e2 is written E2)",
        "d b = y0_23*x0_23 - v0_23*w0_23",
        "idempotents E1, E2, S, A, B, T and link points x:(E1,S,A) y:(E2,A,T) v:(E1,B,T) w:(E2,S,B) [inferred: "
        "the coarsest labelling that makes every displayed word composable]",
        "m = (1,0,1) on every link, giving |a1| = |a2| = |b| = -1 [inferred]",
        "filling_*: two glued copies xc, yc of the three-point link algebra, one per pair of links; link_* is the "
        "induced map on short chords",
    };
    return B;
}

CatalogBundle a3_arboreal(const ExampleOptions& o)
{
    require_levels(o, 1, "a3_arboreal");
    const std::vector<int> m{0, 0, 1};
    const auto conv = PotentialConvention::PotentialMinus;
    auto D = std::make_shared<Presentation>(pick_ring(o, CoeffRing::gf2()));
    D->set_convention(conv);
    for (auto l : {"e3", "S1", "T1", "Sb", "Tb", "M"})
        D->add_idempotent(l);
    GeneratorId a1 = add_long(*D, "a1", -1, "S1", "T1");
    GeneratorId a2 = add_long(*D, "a2", -1, "e3", "e3");
    GeneratorId b = add_long(*D, "b", -1, "Sb", "Tb");
    std::vector<LinkSpec> links{{"x", ids(*D, {"S1", "Sb", "M"})},
                                {"y", ids(*D, {"T1", "Sb", "Tb"})},
                                {"v", ids(*D, {"e3", "M", "Tb"})},
                                {"w", ids(*D, {"e3", "S1", "T1"})}};
    add_links(*D, links, m, o.p_max, conv);
    D->set_differential(a1, Terms(*D)
                                .add(1, {"w0_23"})
                                .add(1, {"y1_31", "b", "x0_12"})
                                .add(-1, {"y1_21", "x0_12"})
                                .add(1, {"y1_31", "v0_23", "x0_13"})
                                .get());
    D->set_differential(a2, Terms(*D)
                                .idem(1, "e3")
                                .add(-1, {"w1_21", "x1_31", "v0_12"})
                                .add(-1, {"w1_31", "y1_31", "v0_13"})
                                .add(-1, {"w1_31", "a1", "x1_31", "v0_12"})
                                .add(1, {"w1_31", "y1_21", "x1_32", "v0_12"})
                                .add(-1, {"w1_31", "y1_31", "b", "x1_32", "v0_12"})
                                .add(-1, {"w1_31", "y1_31", "v0_23", "x1_33", "v0_12"})
                                .get());
    D->set_differential(b, Terms(*D).add(1, {"v0_23", "x0_23"}).add(-1, {"y0_23"}).get());

    CatalogBundle B;
    B.presentations.push_back({"main", D});
    add_pairings(B, D, links, m, o.p_max, conv);
    B.notes = {
        "d a1 = w0_23 + y1_31*b*x0_12 - y1_21*x0_12 + y1_31*v0_23*x0_13",
        "d a2 = e3 - w1_21*x1_31*v0_12 - w1_31*(y1_31*v0_13 + (a1*x1_31 - y1_21*x1_32 + y1_31*b*x1_32 + "
        "y1_31*v0_23*x1_33)*v0_12), expanded with the outer minus applied to every summand",
        "d b = v0_23*x0_23 - y0_23",
        "idempotents e3, S1, T1, Sb, Tb, M and link points x:(S1,Sb,M) y:(T1,Sb,Tb) v:(e3,M,Tb) w:(e3,S1,T1) "
        "[inferred: the coarsest labelling that makes every displayed word composable]",
        "m = (0,0,1) on every link, giving |a1| = |a2| = |b| = -1 [inferred]",
        "filling_*: two glued copies xc, yc of the three-point link algebra, one per pair of links",
    };
    return B;
}

CatalogBundle singular_torus(const ExampleOptions& o)
{
    require_levels(o, 1, "singular_torus");
    CoeffRing ring = pick_ring(o, CoeffRing::laurent({"lam", "mu"}));
    const auto conv = PotentialConvention::PotentialMinus;
    auto P = std::make_shared<Presentation>(ring);
    P->set_convention(conv);
    P->add_idempotent("e");
    add_links(*P, {{"c", ids(*P, {"e", "e"})}}, {0, 1}, o.p_max, conv);
    GeneratorId p = add_short(*P, "p", 0, "e", "e", "hopf");
    GeneratorId q = add_short(*P, "q", 0, "e", "e", "hopf");
    GeneratorId ph = add_short(*P, "ph", -1, "e", "e", "hopf");
    GeneratorId qh = add_short(*P, "qh", -1, "e", "e", "hopf");
    GeneratorId a = add_long(*P, "a", -1, "e", "e");
    GeneratorId ah = add_long(*P, "ah", -2, "e", "e");
    P->set_differential(p, Element());
    P->set_differential(q, Element());
    P->set_differential(ph, Terms(*P).add(1, {"p"}).add(-1, {"c1_21", "p", "c0_12"}).get());
    P->set_differential(qh, Terms(*P).add(1, {"q"}).add(-1, {"c0_12", "q", "c1_21"}).get());
    P->set_differential(ah, Terms(*P)
                                .add(1, {"a"})
                                .add(-1, {"c1_21", "a", "c0_12"})
                                .add(1, {"ph"})
                                .add(-1, {"c1_11"})
                                .get());
    P->set_differential(a, Terms(*P).one(1).add(-1, {"p"}).get());

    CatalogBundle B;
    B.presentations.push_back({"main", P});
    B.notes = {
        "c: two-point link algebra at the minimum of the 1-handle, m = (0,1), potential_minus; one idempotent e "
        "[inferred]",
        "hopf: Hopf link chords p, q (degree 0) and ph, qh (degree -1)",
        "d p = d q = 0, d ph = p - c1_21*p*c0_12, d qh = q - c0_12*q*c1_21",
        "d ah = a - c1_21*a*c0_12 + ph - c1_11, d a = e - p",
    };
    if (ring.kind() == RingKind::Laurent && ring.parameters().size() == 2) {
        const Coeff lam = Coeff::monomial(ring, 1, {1, 0});
        const Coeff lam_inv = Coeff::monomial(ring, 1, {-1, 0});
        const Coeff mu = Coeff::monomial(ring, 1, {0, 1});
        Augmentation eps(P, {"c", "hopf"});
        eps.set_value(P->generator_id("c0_12"), lam);
        eps.set_value(P->generator_id("c1_21"), lam_inv);
        eps.set_value(p, mu);
        Augmentation epsp = eps;
        epsp.set_value(p, mu - mu * lam);
        B.augmentations.push_back({"eps", "main", eps});
        B.augmentations.push_back({"epsp", "main", epsp});
        B.notes.push_back("eps: c0_12 -> lam, c1_21 -> lam^-1, p -> mu; epsp agrees except p -> mu - mu*lam");
        B.notes.push_back("eps(q) and epsp(q) are not given; set to 0 [inferred: any value is consistent]");
    }
    else {
        B.notes.push_back("augmentations omitted: they need the ring laurent(lam,mu)");
    }
    return B;
}

CatalogBundle family_point(int n, const ExampleOptions& o)
{
    auto P = std::make_shared<Presentation>(make_point_algebra(n, std::vector<int>(static_cast<std::size_t>(n), 0),
                                                               o.p_max, PotentialConvention::PotentialMinus,
                                                               pick_ring(o, CoeffRing::rationals())));
    CatalogBundle B;
    B.presentations.push_back({"main", P});
    B.notes = {std::to_string(n) + "-point link algebra, m = 0, potential_minus"};
    return B;
}

CatalogBundle family_hat(bool closed, const ExampleOptions& o)
{
    auto P = std::make_shared<Presentation>(
        make_hat_point_algebra(3, {0, 0, 0}, o.p_max, closed, pick_ring(o, CoeffRing::rationals())));
    CatalogBundle B;
    B.presentations.push_back({"main", P});
    B.notes = {closed ? "closed hat algebra of three points (x and y identified), m = 0"
                      : "hat algebra of three points: families x, y, xh with |xh| = |x| - 1, m = 0"};
    return B;
}

CatalogBundle family_free_product(const ExampleOptions& o)
{
    CoeffRing ring = pick_ring(o, CoeffRing::rationals());
    auto make = [&](const std::string& prefix) {
        auto P = std::make_shared<Presentation>(ring);
        P->set_convention(PotentialConvention::PotentialMinus);
        PointFamily f;
        f.prefix = prefix;
        for (int i = 1; i <= 3; ++i)
            f.sigma.push_back(P->add_idempotent("e" + std::to_string(i)));
        f.m = {0, 0, 0};
        f.p_max = o.p_max;
        add_point_family(*P, f);
        return P;
    };
    PresentationPtr L = make("x");
    PresentationPtr R = make("y");
    FreeProduct fp = free_product(L, R, {0u, 1u, 2u});
    CatalogBundle B;
    B.presentations.push_back({"main", fp.product});
    B.presentations.push_back({"left", L});
    B.presentations.push_back({"right", R});
    B.maps.push_back({"inc1", "left", "main", fp.inc1});
    B.maps.push_back({"inc2", "right", "main", fp.inc2});
    B.notes = {"free product of two three-point link algebras (x and y) over shared e1, e2, e3"};
    return B;
}

using Builder = std::function<CatalogBundle(const ExampleOptions&)>;

const std::vector<std::pair<std::string, Builder>>& registry()
{
    static const std::vector<std::pair<std::string, Builder>> r{
        {"unknot_one_handle", unknot_one_handle},
        {"unknot_two_handles", unknot_two_handles},
        {"saddle_cobordism", saddle_cobordism},
        {"unknot_edge", unknot_edge},
        {"theta", theta},
        {"a3_link", a3_link},
        {"a3_arboreal", a3_arboreal},
        {"singular_torus", singular_torus},
        {"I2", [](const ExampleOptions& o) { return family_point(2, o); }},
        {"I3", [](const ExampleOptions& o) { return family_point(3, o); }},
        {"I4", [](const ExampleOptions& o) { return family_point(4, o); }},
        {"hatI3", [](const ExampleOptions& o) { return family_hat(false, o); }},
        {"closed_hatI3", [](const ExampleOptions& o) { return family_hat(true, o); }},
        {"I3_free_I3", family_free_product},
    };
    return r;
}

}  // namespace

std::vector<std::string> example_names()
{
    std::vector<std::string> out;
    for (const auto& [name, b] : registry())
        out.push_back(name);
    return out;
}

CatalogBundle example(const std::string& name, const ExampleOptions& opts)
{
    for (const auto& [n, build] : registry())
        if (n == name)
            return build(opts);
    throw InvalidArgument("unknown catalog entry '" + name + "'");
}

}  // namespace cedga
