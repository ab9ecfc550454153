#include "cedga/analysis.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>
#include <tuple>

#include "linsolve.hpp"

namespace cedga {

std::string to_string(Parity p)
{
    return p == Parity::Even ? "even" : "odd";
}

DSquaredReport check_d_squared(const Presentation& P)
{
    DSquaredReport rep;
    for (GeneratorId g = 0; g < P.generators().size(); ++g) {
        const auto& dg = P.differential(g);
        if (!dg)
            throw IncompletePresentation(P.generator(g).name);
        Element dd = apply_differential(P, *dg);
        if (!dd.is_zero())
            rep.counterexamples.push_back({P.generator(g).name, std::move(dd)});
    }
    return rep;
}

DegreeReport check_degree(const Presentation& P)
{
    DegreeReport rep;
    for (auto& v : validate_presentation(P).violations)
        if (v.kind == ViolationKind::DegreeMismatch)
            rep.violations.push_back(std::move(v));
    return rep;
}

ParityReport check_parity_flip(const Presentation& P)
{
    ParityReport rep;
    for (GeneratorId g = 0; g < P.generators().size(); ++g) {
        const auto& dg = P.differential(g);
        if (!dg)
            throw IncompletePresentation(P.generator(g).name);
        for (const auto& [w, c] : dg->terms()) {
            if (w.length() % 2 == 1) {
                rep.witness = ParityWitness{P.generator(g).name, w};
                return rep;
            }
        }
    }
    return rep;
}

// ------------------------------------------------------------ enumeration

std::vector<Word> enumerate_words(const Presentation& P, IdempotentId from, IdempotentId to, int degree,
                                  const Bounds& bounds, std::optional<Parity> parity)
{
    const auto& gens = P.generators();
    std::vector<std::vector<GeneratorId>> out_of(P.idempotents().size());
    int mn = 0, mx = 0;
    for (GeneratorId g = 0; g < gens.size(); ++g) {
        if (gens[g].level && *gens[g].level > bounds.max_level)
            continue;
        out_of[gens[g].source].push_back(g);
        mn = std::min(mn, gens[g].degree);
        mx = std::max(mx, gens[g].degree);
    }

    std::vector<Word> found;
    std::vector<GeneratorId> stack;  // rightmost letter first
    auto dfs = [&](auto&& self, IdempotentId at, int deg) -> void {
        int len = static_cast<int>(stack.size());
        if (len > 0 && at == to && deg == degree && (!parity || parity_of(stack.size()) == *parity))
            found.push_back(Word::from_letters(std::vector<GeneratorId>(stack.rbegin(), stack.rend()), from, to));
        int k = bounds.max_word_length - len;
        if (k <= 0)
            return;
        for (GeneratorId g : out_of[at]) {
            int nd = deg + gens[g].degree;
            int rest = degree - nd;
            int left = k - 1;
            if (rest < std::min(0, left * mn) || rest > std::max(0, left * mx))
                continue;
            stack.push_back(g);
            self(self, gens[g].target, nd);
            stack.pop_back();
        }
    };
    if (from < out_of.size())
        dfs(dfs, from, 0);
    std::sort(found.begin(), found.end());
    return found;
}

// ------------------------------------------------------------- exactness

namespace {

template <class V>
void solve_exact(const Presentation& P, const std::vector<Word>& cands, ExactnessResult& res)
{
    detail::DiffTable<V> table(P);
    auto run = [&](bool track, detail::SparseVec<V>* combo) {
        detail::RowIndex rows;
        detail::Eliminator<V> el(track);
        auto t = detail::to_sparse<V>(rows, 0, res.target);
        for (std::uint32_t i = 0; i < cands.size(); ++i)
            el.add_column(i, table.apply(rows, 0, cands[i]));
        res.rank = el.rank();
        return el.solve(std::move(t), combo);
    };
    if (!run(false, nullptr))
        return;
    detail::SparseVec<V> combo;
    run(true, &combo);
    res.verdict = ExactVerdict::Witness;
    res.witness = Element();
    for (const auto& [i, v] : combo)
        res.witness.add_term(cands[i], detail::to_coeff<V>(P.ring(), v));
    if (!(apply_differential(P, res.witness) == res.target))
        throw std::logic_error("exactness witness failed to re-check");
}

}  // namespace

ExactnessResult exactness_search(const Presentation& P, const Element& target, const Bounds& bounds,
                                 std::optional<Parity> parity)
{
    if (!P.ring().is_field())
        throw UnsupportedPresentation("exactness search needs a field, got " + P.ring().to_string());
    for (const auto& [w, c] : target.terms())
        if (c.kind() != P.ring().kind())
            throw RingMismatch("target coefficient outside " + P.ring().to_string());

    ExactnessResult res;
    res.target = target;
    res.bounds = bounds;
    res.parity = parity;
    if (target.is_zero()) {
        res.verdict = ExactVerdict::Witness;
        return res;
    }
    auto deg = P.degree(target);
    if (!deg)
        throw InvalidArgument("exactness target is not homogeneous");
    res.target_degree = *deg;

    std::set<std::pair<IdempotentId, IdempotentId>> ends;
    for (const auto& [w, c] : target.terms())
        ends.emplace(w.source(), w.target());
    std::vector<Word> cands;
    for (const auto& [s, t] : ends) {
        auto ws = enumerate_words(P, s, t, *deg - 1, bounds, parity);
        cands.insert(cands.end(), ws.begin(), ws.end());
    }
    for (const auto& w : cands)
        ++res.length_histogram[w.length()];
    res.candidates = cands.size();

    if (P.ring().kind() == RingKind::GF2)
        solve_exact<std::uint8_t>(P, cands, res);
    else
        solve_exact<mpq_class>(P, cands, res);
    return res;
}

TrivialityResult is_trivial(const Presentation& P, const Bounds& bounds)
{
    TrivialityResult r;
    r.search = exactness_search(P, P.one(), bounds);
    r.certified_trivial = r.search.verdict == ExactVerdict::Witness;
    return r;
}

// -------------------------------------------------------------------- h0

namespace {

struct Rule {
    Word lhs;
    Element rhs;
};

bool touches(const Presentation& P, const Word& w, const std::set<IdempotentId>& killed)
{
    if (killed.empty())
        return false;
    for (IdempotentId v : word_vertices(P, w))
        if (killed.count(v))
            return true;
    return false;
}

// Position of the first occurrence of `pat` inside `w`, if any.
std::optional<std::size_t> find_sub(const std::vector<GeneratorId>& w, const std::vector<GeneratorId>& pat)
{
    if (pat.size() > w.size())
        return std::nullopt;
    auto it = std::search(w.begin(), w.end(), pat.begin(), pat.end());
    if (it == w.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - w.begin());
}

// u * x * v for letter strings u, v around a homogeneous x, with the ends
// of the whole product given.
Element sandwich(const std::vector<GeneratorId>& u, const Element& x, const std::vector<GeneratorId>& v,
                 IdempotentId source, IdempotentId target)
{
    Element out;
    for (const auto& [w, c] : x.terms()) {
        std::vector<GeneratorId> l = u;
        l.insert(l.end(), w.letters().begin(), w.letters().end());
        l.insert(l.end(), v.begin(), v.end());
        out.add_term(l.empty() ? Word::idempotent(source) : Word::from_letters(std::move(l), source, target), c);
    }
    return out;
}

class Reducer {
public:
    Reducer(const Presentation& P, const std::vector<std::optional<Rule>>& rules, const std::set<IdempotentId>& killed)
        : P_(P), rules_(rules), killed_(killed)
    {
    }

    Element operator()(const Element& x) const
    {
        std::map<Word, Coeff> todo(x.terms().begin(), x.terms().end());
        Element out;
        while (!todo.empty()) {
            auto it = std::prev(todo.end());
            Word w = it->first;
            Coeff c = it->second;
            todo.erase(it);
            if (touches(P_, w, killed_))
                continue;
            bool reduced = false;
            for (const auto& r : rules_) {
                if (!r)
                    continue;
                auto pos = find_sub(w.letters(), r->lhs.letters());
                if (!pos)
                    continue;
                std::vector<GeneratorId> u(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(*pos));
                std::vector<GeneratorId> v(w.letters().begin() + static_cast<std::ptrdiff_t>(*pos + r->lhs.length()),
                                           w.letters().end());
                Element repl = sandwich(u, r->rhs, v, w.source(), w.target());
                for (const auto& [nw, nc] : repl.terms()) {
                    Coeff add = nc * c;
                    auto [jt, ins] = todo.emplace(nw, add);
                    if (!ins) {
                        jt->second += add;
                        if (jt->second.is_zero())
                            todo.erase(jt);
                    }
                }
                reduced = true;
                break;
            }
            if (!reduced)
                out.add_term(w, c);
        }
        return out;
    }

private:
    const Presentation& P_;
    const std::vector<std::optional<Rule>>& rules_;
    const std::set<IdempotentId>& killed_;
};

struct Overlap {
    std::size_t length;
    std::size_t a, b, shift;  // lhs_b starts at letter `shift` of lhs_a
    bool operator<(const Overlap& o) const
    {
        return std::tie(length, a, b, shift) < std::tie(o.length, o.a, o.b, o.shift);
    }
};

}  // namespace

H0Report h0(const Presentation& P, int degree_bound)
{
    if (!P.ring().is_field())
        throw UnsupportedPresentation("h0 needs a field, got " + P.ring().to_string());
    H0Report rep;
    rep.degree_bound = degree_bound;
    for (GeneratorId g = 0; g < P.generators().size(); ++g) {
        const Generator& G = P.generator(g);
        if (G.degree != -1)
            continue;
        const auto& dg = P.differential(g);
        if (!dg)
            throw IncompletePresentation(G.name);
        for (const auto& [w, c] : dg->terms())
            for (GeneratorId l : w.letters())
                if (P.generator(l).degree != 0)
                    throw UnsupportedPresentation("relation d " + G.name + " contains " + P.generator(l).name +
                                                  " of degree " + std::to_string(P.generator(l).degree));
        rep.relation_sources.push_back(G.name);
        rep.relations.push_back(*dg);
    }

    std::vector<std::optional<Rule>> rules;
    std::set<IdempotentId> killed;
    std::deque<Element> queue(rep.relations.begin(), rep.relations.end());
    std::set<Overlap> overlaps;
    Reducer nf(P, rules, killed);

    auto add_overlaps = [&](std::size_t n) {
        const auto& ln = rules[n]->lhs.letters();
        for (std::size_t o = 0; o < rules.size(); ++o) {
            if (!rules[o])
                continue;
            const auto& lo = rules[o]->lhs.letters();
            // suffix of first overlaps prefix of second, both orders
            auto scan = [&](std::size_t a, const std::vector<GeneratorId>& la, std::size_t b,
                            const std::vector<GeneratorId>& lb) {
                for (std::size_t s = 1; s < la.size(); ++s) {
                    std::size_t common = la.size() - s;
                    if (common >= lb.size())
                        continue;
                    if (!std::equal(la.begin() + static_cast<std::ptrdiff_t>(s), la.end(), lb.begin()))
                        continue;
                    overlaps.insert({s + lb.size(), a, b, s});
                }
            };
            scan(n, ln, o, lo);
            if (o != n)
                scan(o, lo, n, ln);
        }
    };

    while (true) {
        while (!queue.empty()) {
            Element f = nf(queue.front());
            queue.pop_front();
            if (f.is_zero())
                continue;
            auto lead = std::prev(f.terms().end());
            Word lw = lead->first;
            if (lw.is_idempotent()) {
                killed.insert(lw.source());
                for (auto& r : rules) {
                    if (!r)
                        continue;
                    queue.push_back(Element(r->lhs, Coeff::one(P.ring())) - r->rhs);
                    r.reset();
                }
                overlaps.clear();
                continue;
            }
            Coeff inv = *lead->second.inverse();
            Element rhs = -(f.scaled(inv) - Element(lw, Coeff::one(P.ring())));
            for (auto& r : rules) {
                if (r && find_sub(r->lhs.letters(), lw.letters())) {
                    queue.push_back(Element(r->lhs, Coeff::one(P.ring())) - r->rhs);
                    r.reset();
                }
            }
            rules.push_back(Rule{lw, std::move(rhs)});
            add_overlaps(rules.size() - 1);
        }
        if (overlaps.empty())
            break;
        Overlap ov = *overlaps.begin();
        overlaps.erase(overlaps.begin());
        if (!rules[ov.a] || !rules[ov.b])
            continue;
        if (ov.length > static_cast<std::size_t>(degree_bound)) {
            rep.complete = false;
            continue;
        }
        const Rule& A = *rules[ov.a];
        const Rule& B = *rules[ov.b];
        const auto& la = A.lhs.letters();
        const auto& lb = B.lhs.letters();
        std::vector<GeneratorId> x(la.begin(), la.begin() + static_cast<std::ptrdiff_t>(ov.shift));
        std::vector<GeneratorId> z(lb.begin() + static_cast<std::ptrdiff_t>(la.size() - ov.shift), lb.end());
        IdempotentId src = P.generator(lb.back()).source;
        IdempotentId tgt = P.generator(la.front()).target;
        Element s = sandwich({}, A.rhs, z, src, tgt) - sandwich(x, B.rhs, {}, src, tgt);
        queue.push_back(std::move(s));
    }

    // inter-reduce right-hand sides
    for (std::size_t i = 0; i < rules.size(); ++i) {
        if (!rules[i])
            continue;
        Rule r = std::move(*rules[i]);
        rules[i].reset();
        r.rhs = nf(r.rhs);
        rules[i] = std::move(r);
    }
    for (auto& r : rules)
        if (r)
            rep.rules.push_back({r->lhs, r->rhs});
    std::sort(rep.rules.begin(), rep.rules.end(), [](const RewriteRule& a, const RewriteRule& b) { return a.lhs < b.lhs; });
    rep.killed.assign(killed.begin(), killed.end());

    // normal words up to the bound; subwords of normal words are normal
    rep.counts_by_length.assign(static_cast<std::size_t>(std::max(degree_bound, 0)) + 1, 0);
    for (const auto& e : P.idempotents()) {
        if (killed.count(e.id))
            continue;
        rep.basis.push_back(Word::idempotent(e.id));
        ++rep.counts_by_length[0];
    }
    std::vector<GeneratorId> zero_gens;
    for (GeneratorId g = 0; g < P.generators().size(); ++g) {
        const Generator& G = P.generator(g);
        if (G.degree == 0 && !killed.count(G.source) && !killed.count(G.target))
            zero_gens.push_back(g);
    }
    std::vector<GeneratorId> stack;  // rightmost letter first
    auto is_normal_suffix = [&]() {
        // the new leftmost letter starts every new subword
        std::vector<GeneratorId> w(stack.rbegin(), stack.rend());
        for (const auto& r : rep.rules) {
            const auto& l = r.lhs.letters();
            if (l.size() <= w.size() && std::equal(l.begin(), l.end(), w.begin()))
                return false;
        }
        return true;
    };
    auto dfs = [&](auto&& self, IdempotentId at) -> void {
        if (static_cast<int>(stack.size()) >= degree_bound)
            return;
        for (GeneratorId g : zero_gens) {
            if (P.generator(g).source != at)
                continue;
            stack.push_back(g);
            if (is_normal_suffix()) {
                ++rep.counts_by_length[stack.size()];
                rep.basis.push_back(Word::from_letters(std::vector<GeneratorId>(stack.rbegin(), stack.rend()),
                                                       P.generator(stack.front()).source, P.generator(g).target));
                self(self, P.generator(g).target);
            }
            stack.pop_back();
        }
    };
    for (const auto& e : P.idempotents())
        if (!killed.count(e.id))
            dfs(dfs, e.id);
    std::sort(rep.basis.begin(), rep.basis.end());
    rep.dimension = rep.basis.size();
    for (std::size_t L = 1; L < rep.counts_by_length.size(); ++L)
        if (rep.counts_by_length[L] == 0)
            rep.finite = true;
    std::size_t alive = P.idempotents().size() - killed.size();
    rep.is_ground_ring = rep.complete && rep.finite && killed.empty() && rep.dimension == alive;
    return rep;
}

Element normal_form(const Presentation& P, const H0Report& rep, const Element& x)
{
    std::vector<std::optional<Rule>> rules;
    for (const auto& r : rep.rules)
        rules.push_back(Rule{r.lhs, r.rhs});
    std::set<IdempotentId> killed(rep.killed.begin(), rep.killed.end());
    return Reducer(P, rules, killed)(x);
}

}  // namespace cedga
