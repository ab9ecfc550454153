#include "cedga/obstruct.hpp"

#include <map>
#include <set>
#include <tuple>

#include "linsolve.hpp"

namespace cedga {

std::string to_string(ObstructionVerdict v)
{
    return v == ObstructionVerdict::Obstructed ? "obstructed" : "inconclusive";
}

namespace {

// A word in the codomain in which free domain generators may appear as
// placeholders. Tokens >= 0 are codomain letters, token -1 - g is [g].
struct Mixed {
    std::vector<std::int64_t> tokens;
    IdempotentId source = 0;
    IdempotentId target = 0;

    auto key() const { return std::tie(tokens, source, target); }
    bool operator<(const Mixed& o) const { return key() < o.key(); }

    std::size_t holes() const
    {
        std::size_t n = 0;
        for (auto t : tokens)
            n += t < 0;
        return n;
    }
};

using MixedSum = std::map<Mixed, Coeff>;

void add_to(MixedSum& s, const Mixed& m, const Coeff& c)
{
    if (c.is_zero())
        return;
    auto [it, ins] = s.emplace(m, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero())
            s.erase(it);
    }
}

class Imager {
public:
    Imager(const Presentation& D, const Presentation& C, const DgMap& phi) : D_(D), C_(C), phi_(phi) {}

    IdempotentId idem(IdempotentId e) const
    {
        const auto& m = phi_.idempotent_map().at(e);
        if (!m)
            throw InvalidArgument("link map leaves idempotent '" + D_.idempotents().at(e).label + "' unassigned");
        return *m;
    }

    bool is_free(GeneratorId g) const { return !phi_.image(g).has_value(); }

    // eps(d g) with free generators kept as placeholders.
    MixedSum image_of_differential(GeneratorId g) const
    {
        const auto& dg = D_.differential(g);
        if (!dg)
            throw IncompletePresentation(D_.generator(g).name);
        MixedSum out;
        for (const auto& [w, c] : dg->terms()) {
            // partial products, built left to right; `source` is the running right end
            std::vector<std::pair<Mixed, Coeff>> acc;
            Mixed start;
            start.target = idem(w.target());
            start.source = start.target;
            acc.emplace_back(start, c.convert(C_.ring()));
            for (GeneratorId l : w.letters()) {
                std::vector<std::pair<Mixed, Coeff>> next;
                const Generator& G = D_.generator(l);
                if (is_free(l)) {
                    for (auto& [m, k] : acc) {
                        if (m.source != idem(G.target))
                            continue;
                        Mixed n = m;
                        n.tokens.push_back(-1 - static_cast<std::int64_t>(l));
                        n.source = idem(G.source);
                        next.emplace_back(std::move(n), k);
                    }
                }
                else {
                    for (auto& [m, k] : acc)
                        for (const auto& [iw, ic] : phi_.image(l)->terms()) {
                            if (m.source != iw.target())
                                continue;
                            Mixed n = m;
                            n.tokens.insert(n.tokens.end(), iw.letters().begin(), iw.letters().end());
                            n.source = iw.source();
                            next.emplace_back(std::move(n), k * ic);
                        }
                }
                acc = std::move(next);
            }
            for (auto& [m, k] : acc)
                if (m.source == idem(w.source()))
                    add_to(out, m, k);
        }
        return out;
    }

    std::string to_string(const MixedSum& s) const
    {
        if (s.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : s) {
            std::string w;
            if (m.tokens.empty())
                w = C_.idempotents().at(m.source).label;
            for (std::size_t k = 0; k < m.tokens.size(); ++k) {
                if (k)
                    w += '*';
                auto t = m.tokens[k];
                w += t >= 0 ? C_.generator(static_cast<GeneratorId>(t)).name
                            : "[" + D_.generator(static_cast<GeneratorId>(-1 - t)).name + "]";
            }
            std::string cs = c.is_one() ? "" : c.to_string(C_.ring()) + "*";
            out += (first ? "" : " + ") + cs + w;
            first = false;
        }
        return out;
    }

private:
    const Presentation& D_;
    const Presentation& C_;
    const DgMap& phi_;
};

Parity token_parity(std::size_t letters)
{
    return parity_of(letters);
}

Parity add(Parity a, Parity b)
{
    return a == b ? Parity::Even : Parity::Odd;
}

struct Hole {
    GeneratorId g;
    Parity parity;
    auto key() const { return std::tie(g, parity); }
    bool operator<(const Hole& o) const { return key() < o.key(); }
};

struct PartSystem {
    Element constant;                                             // R, in the codomain
    std::map<Hole, std::vector<std::tuple<std::vector<GeneratorId>, std::vector<GeneratorId>, Coeff, IdempotentId, IdempotentId>>> uses;  // u [g] w
    std::vector<std::string> blocked;
};

// Splits off the parity-Q part of eps(d a) as constant terms plus linear
// cycle terms, or records why that is not possible.
PartSystem build_part(const Presentation& D, const MixedSum& image, Parity Q,
                      const std::map<GeneratorId, ParityClass>& classes)
{
    PartSystem ps;
    for (const auto& [m, c] : image) {
        std::size_t h = m.holes();
        std::size_t letters = m.tokens.size() - h;
        if (h == 0) {
            if (token_parity(letters) != Q)
                continue;
            std::vector<GeneratorId> l(m.tokens.begin(), m.tokens.end());
            ps.constant.add_term(l.empty() ? Word::idempotent(m.source) : Word::from_letters(l, m.source, m.target), c);
            continue;
        }
        if (h > 1) {
            ps.blocked.push_back("term with several free images");
            continue;
        }
        std::vector<GeneratorId> u, w;
        GeneratorId g = 0;
        bool seen = false;
        for (auto t : m.tokens) {
            if (t < 0) {
                g = static_cast<GeneratorId>(-1 - t);
                seen = true;
            }
            else
                (seen ? w : u).push_back(static_cast<GeneratorId>(t));
        }
        Parity need = add(Q, token_parity(letters));
        const ParityClass& pc = classes.at(g);
        const std::string& name = D.generator(g).name;
        if (pc.kind == ParityClassKind::Undetermined) {
            ps.blocked.push_back("parity of [" + name + "] is undetermined");
            continue;
        }
        if (pc.kind == ParityClassKind::Split && *pc.cycle_parity != need) {
            ps.blocked.push_back("the " + to_string(need) + " part of [" + name + "] is forced but unknown");
            continue;
        }
        ps.uses[{g, need}].emplace_back(std::move(u), std::move(w), c, m.source, m.target);
    }
    return ps;
}

template <class V>
std::size_t solve_part(const Presentation& D, const Presentation& C, const Imager& im, GeneratorId a,
                       const PartSystem& ps, Parity t_parity, const Bounds& bounds, bool& feasible)
{
    detail::DiffTable<V> table(C);
    detail::RowIndex rows;
    detail::Eliminator<V> el(false);
    auto target = detail::to_sparse<V>(rows, 0, ps.constant);
    std::uint32_t col = 0;

    const Generator& A = D.generator(a);
    for (const auto& w : enumerate_words(C, im.idem(A.source), im.idem(A.target), A.degree, bounds, t_parity))
        el.add_column(col++, table.apply(rows, 0, w));

    std::uint32_t block = 1;
    for (const auto& [hole, uses] : ps.uses) {
        const Generator& G = D.generator(hole.g);
        for (const auto& z : enumerate_words(C, im.idem(G.source), im.idem(G.target), G.degree, bounds, hole.parity)) {
            auto v = table.apply(rows, block, z);
            for (const auto& [u, w, c, s, t] : uses) {
                std::vector<GeneratorId> l = u;
                l.insert(l.end(), z.letters().begin(), z.letters().end());
                l.insert(l.end(), w.begin(), w.end());
                V x = detail::from_coeff<V>(c);
                v.emplace_back(rows.id(0, Word::from_letters(std::move(l), s, t)), detail::sub(V(0), x));
            }
            el.add_column(col++, detail::normalize(std::move(v)));
        }
        ++block;
    }
    feasible = el.solve(std::move(target), nullptr);
    return col;
}

}  // namespace

ObstructionReport obstruct_y_filling(const Presentation& domain, const Presentation& codomain, const DgMap& link_map,
                                     const Bounds& bounds)
{
    if (!codomain.ring().is_field())
        throw UnsupportedPresentation("obstruction needs a field, got " + codomain.ring().to_string());
    if (auto pr = check_parity_flip(codomain); !pr.pass())
        throw UnsupportedPresentation("codomain fails the parity flip at d " + pr.witness->generator + " (term " +
                                      codomain.word_to_string(pr.witness->word) + ")");

    ObstructionReport rep;
    rep.bounds = bounds;
    Imager im(domain, codomain, link_map);

    std::vector<GeneratorId> free_gens;
    std::map<GeneratorId, MixedSum> images;
    for (GeneratorId g = 0; g < domain.generators().size(); ++g) {
        if (!im.is_free(g))
            continue;
        free_gens.push_back(g);
        images[g] = im.image_of_differential(g);
    }

    std::map<GeneratorId, ParityClass> classes;
    for (GeneratorId g : free_gens) {
        const MixedSum& I = images[g];
        ParityClass pc;
        pc.generator = domain.generator(g).name;
        pc.image = im.to_string(I);
        std::set<Parity> parities;
        bool holes = false;
        for (const auto& [m, c] : I) {
            holes = holes || m.holes() > 0;
            parities.insert(token_parity(m.tokens.size()));
        }
        std::string line = "eps(d " + pc.generator + ") = " + pc.image + ": ";
        if (holes) {
            pc.kind = ParityClassKind::Undetermined;
            line += "involves free images, parity of eps(" + pc.generator + ") undetermined";
        }
        else if (I.empty()) {
            pc.kind = ParityClassKind::Cycle;
            line += "every parity part of eps(" + pc.generator + ") is a cycle";
        }
        else if (parities.size() == 1) {
            pc.kind = ParityClassKind::Split;
            pc.cycle_parity = *parities.begin();
            line += "single parity " + to_string(*pc.cycle_parity) + ", so the " + to_string(*pc.cycle_parity) +
                    " part of eps(" + pc.generator + ") is a cycle and the " + to_string(flip(*pc.cycle_parity)) +
                    " part is forced";
        }
        else {
            pc.kind = ParityClassKind::Undetermined;
            line += "mixed parity, parity of eps(" + pc.generator + ") undetermined";
        }
        rep.transcript.push_back(line);
        rep.classes.push_back(pc);
        classes.emplace(g, std::move(pc));
    }

    // Candidate parts: those carrying an idempotent term first, then the rest.
    std::vector<std::pair<GeneratorId, Parity>> order, rest;
    for (GeneratorId g : free_gens) {
        std::set<Parity> idem_parts;
        for (const auto& [m, c] : images[g])
            if (m.tokens.empty())
                idem_parts.insert(Parity::Even);
        for (Parity Q : {Parity::Even, Parity::Odd})
            (idem_parts.count(Q) ? order : rest).emplace_back(g, Q);
    }
    order.insert(order.end(), rest.begin(), rest.end());

    for (const auto& [a, Q] : order) {
        const std::string& name = domain.generator(a).name;
        PartSystem ps = build_part(domain, images[a], Q, classes);
        if (ps.constant.is_zero())
            continue;
        std::string tag = "d " + name + ", " + to_string(Q) + " part";
        if (!ps.blocked.empty()) {
            for (const auto& b : ps.blocked)
                rep.blocking.push_back(tag + ": " + b);
            continue;
        }
        Parity tp = flip(Q);
        bool feasible = false;
        std::size_t cols = 0;
        std::optional<ExactnessResult> plain;
        if (ps.uses.empty()) {
            // no cycle unknowns: the system is the plain exactness search
            plain = exactness_search(codomain, ps.constant, bounds, tp);
            feasible = plain->verdict == ExactVerdict::Witness;
            cols = plain->candidates;
        }
        else if (codomain.ring().kind() == RingKind::GF2)
            cols = solve_part<std::uint8_t>(domain, codomain, im, a, ps, tp, bounds, feasible);
        else
            cols = solve_part<mpq_class>(domain, codomain, im, a, ps, tp, bounds, feasible);
        std::vector<std::string> unknowns;
        for (const auto& [h, u] : ps.uses)
            unknowns.push_back("[" + domain.generator(h.g).name + "]" + to_string(h.parity));
        std::string eq = "the " + to_string(tp) + " part T of eps(" + name + ") must satisfy d T";
        for (const auto& z : unknowns)
            eq += " - (terms in " + z + ")";
        eq += " = " + codomain.to_string(ps.constant);
        if (!unknowns.empty())
            eq += ", with d z = 0 for each cycle unknown";
        if (feasible) {
            rep.transcript.push_back(eq + ": solvable within bounds");
            rep.blocking.push_back(tag + ": system solvable within bounds");
            continue;
        }
        rep.transcript.push_back(eq + ": no solution within bounds (" + std::to_string(cols) + " unknown words)");
        rep.verdict = ObstructionVerdict::Obstructed;
        rep.decisive_generator = name;
        rep.decisive_image = im.to_string(images[a]);
        rep.decisive_part = Q;
        rep.cycle_unknowns = std::move(unknowns);
        rep.system_columns = cols;
        rep.certificate = plain ? std::move(*plain) : exactness_search(codomain, ps.constant, bounds, tp);
        if (rep.certificate.verdict != ExactVerdict::NoneWithinBounds)
            throw std::logic_error("obstruction certificate failed to re-check");
        return rep;
    }
    if (rep.blocking.empty())
        rep.blocking.push_back("no parity part with a nonzero constant term");
    return rep;
}

}  // namespace cedga
