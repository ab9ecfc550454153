#include "cedga/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <sstream>

namespace cedga {

namespace {

enum class TokKind : std::uint8_t { Ident, Int, Sym, Newline, Text, End };

struct Token {
    TokKind kind = TokKind::End;
    std::string text;
    int line = 1;
    int col = 1;
};

std::vector<Token> lex(const std::string& src)
{
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto at_statement_start = [&]() { return out.empty() || out.back().kind == TokKind::Newline; };
    auto advance = [&](std::size_t n) {
        i += n;
        col += static_cast<int>(n);
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '\n') {
            out.push_back({TokKind::Newline, "\n", line, col});
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (c == '\r' || c == ' ' || c == '\t') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n')
                advance(1);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            bool note = at_statement_start() && src.compare(i, j - i, "note") == 0 && j - i == 4;
            out.push_back({TokKind::Ident, src.substr(i, j - i), line, col});
            advance(j - i);
            if (note) {
                while (i < src.size() && (src[i] == ' ' || src[i] == '\t'))
                    advance(1);
                std::size_t k = i;
                while (k < src.size() && src[k] != '\n')
                    ++k;
                std::string text = src.substr(i, k - i);
                while (!text.empty() && (text.back() == '\r' || text.back() == ' '))
                    text.pop_back();
                out.push_back({TokKind::Text, text, line, col});
                advance(k - i);
            }
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            out.push_back({TokKind::Int, src.substr(i, j - i), line, col});
            advance(j - i);
            continue;
        }
        if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            out.push_back({TokKind::Sym, "->", line, col});
            advance(2);
            continue;
        }
        if (std::string("+-*/^()[]{};:=,").find(c) != std::string::npos) {
            out.push_back({TokKind::Sym, std::string(1, c), line, col});
            advance(1);
            continue;
        }
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({TokKind::End, "", line, col});
    return out;
}

using MutablePtr = std::shared_ptr<Presentation>;

class Parser {
public:
    Parser(std::vector<Token> toks, const PresentationResolver& resolver)
        : toks_(std::move(toks)), resolver_(resolver)
    {
    }

    CatalogBundle run()
    {
        while (true) {
            skip_newlines();
            if (peek().kind == TokKind::End)
                break;
            statement();
        }
        for (const auto& name : order_)
            bundle_.presentations.push_back({name, defined_.at(name)});
        return std::move(bundle_);
    }

    // entry points for parse_coeff / parse_element
    Coeff coeff_only(const CoeffRing& ring)
    {
        Coeff c = coeff_sum(ring);
        expect_end();
        return c;
    }

    Element element_only(const Presentation& P)
    {
        Element x = expr(P);
        expect_end();
        return x;
    }

private:
    // -------------------------------------------------------------- tokens

    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

    [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(t.line, t.col, msg); }

    bool is_sym(const char* s, std::size_t k = 0) const { return peek(k).kind == TokKind::Sym && peek(k).text == s; }

    void expect_sym(const char* s)
    {
        if (!is_sym(s))
            fail(peek(), std::string("expected '") + s + "'" + found());
        next();
    }

    std::string found() const
    {
        const Token& t = peek();
        switch (t.kind) {
        case TokKind::End:
            return ", found end of input";
        case TokKind::Newline:
            return ", found end of line";
        default:
            return ", found '" + t.text + "'";
        }
    }

    const Token& expect_ident(const char* what)
    {
        if (peek().kind != TokKind::Ident)
            fail(peek(), std::string("expected ") + what + found());
        return next();
    }

    void expect_keyword(const char* kw)
    {
        if (peek().kind != TokKind::Ident || peek().text != kw)
            fail(peek(), std::string("expected '") + kw + "'" + found());
        next();
    }

    long expect_int(bool allow_sign)
    {
        bool neg = false;
        if (allow_sign && is_sym("-")) {
            next();
            neg = true;
        }
        if (peek().kind != TokKind::Int)
            fail(peek(), "expected an integer" + found());
        const Token& t = next();
        try {
            long v = std::stol(t.text);
            return neg ? -v : v;
        }
        catch (const std::exception&) {
            fail(t, "integer out of range");
        }
    }

    void skip_newlines()
    {
        while (peek().kind == TokKind::Newline)
            next();
    }

    void expect_end()
    {
        if (peek().kind != TokKind::Newline && peek().kind != TokKind::End)
            fail(peek(), "unexpected token" + found());
    }

    // --------------------------------------------------------- statements

    void statement()
    {
        const Token& kw = expect_ident("a statement keyword");
        try {
            dispatch(kw);
        }
        catch (const ParseError&) {
            throw;
        }
        catch (const Error& e) {
            fail(kw, e.what());
        }
        expect_end();
    }

    void dispatch(const Token& kw)
    {
        const std::string& k = kw.text;
        if (k == "presentation")
            return presentation_header();
        if (k == "ring")
            return ring_stmt(kw);
        if (k == "convention")
            return convention_stmt();
        if (k == "idempotents")
            return idempotents_stmt();
        if (k == "gen")
            return gen_stmt();
        if (k == "diff")
            return diff_stmt();
        if (k == "map")
            return map_stmt();
        if (k == "aug")
            return aug_stmt();
        if (k == "note") {
            if (peek().kind == TokKind::Text)
                bundle_.notes.push_back(next().text);
            else
                bundle_.notes.emplace_back();
            return;
        }
        fail(kw, "unknown statement '" + k + "'");
    }

    void presentation_header()
    {
        const Token& t = expect_ident("a presentation name");
        if (defined_.count(t.text))
            fail(t, "presentation '" + t.text + "' defined twice");
        open(t.text);
    }

    void open(const std::string& name)
    {
        auto P = std::make_shared<Presentation>(CoeffRing::rationals());
        defined_[name] = P;
        order_.push_back(name);
        current_ = P;
        current_name_ = name;
    }

    Presentation& cur(const Token& at)
    {
        if (!current_) {
            if (defined_.count("main"))
                fail(at, "statement outside a presentation; add a 'presentation NAME' header");
            open("main");
        }
        if (sealed_.count(current_name_))
            fail(at, "presentation '" + current_name_ + "' is already used by a map or augmentation");
        return *current_;
    }

    void ring_stmt(const Token& kw)
    {
        Presentation& P = cur(kw);
        if (!P.idempotents().empty() || !P.generators().empty())
            fail(kw, "'ring' must precede idempotents and generators");
        const Token& r = expect_ident("a ring (Q, GF2 or laurent(...))");
        if (r.text == "Q")
            P.set_ring(CoeffRing::rationals());
        else if (r.text == "GF2")
            P.set_ring(CoeffRing::gf2());
        else if (r.text == "laurent") {
            expect_sym("(");
            std::vector<std::string> params;
            if (!is_sym(")")) {
                params.push_back(expect_ident("a parameter name").text);
                while (is_sym(",")) {
                    next();
                    params.push_back(expect_ident("a parameter name").text);
                }
            }
            expect_sym(")");
            P.set_ring(CoeffRing::laurent(params));
        }
        else
            fail(r, "unknown ring '" + r.text + "'");
    }

    void convention_stmt()
    {
        const Token& t = expect_ident("potential_plus or potential_minus");
        Presentation& P = cur(t);
        if (t.text == "potential_plus")
            P.set_convention(PotentialConvention::PotentialPlus);
        else if (t.text == "potential_minus")
            P.set_convention(PotentialConvention::PotentialMinus);
        else
            fail(t, "unknown convention '" + t.text + "'");
    }

    void idempotents_stmt()
    {
        while (peek().kind == TokKind::Ident) {
            const Token& t = next();
            Presentation& P = cur(t);
            if (P.find_idempotent(t.text) || P.find_generator(t.text))
                fail(t, "name '" + t.text + "' declared twice");
            P.add_idempotent(t.text);
        }
    }

    IdempotentId idem_ref(const Presentation& P, const Token& t)
    {
        if (auto e = P.find_idempotent(t.text))
            return *e;
        fail(t, "undeclared idempotent '" + t.text + "'");
    }

    void gen_stmt()
    {
        const Token& name = expect_ident("a generator name");
        Presentation& P = cur(name);
        if (P.find_generator(name.text) || P.find_idempotent(name.text))
            fail(name, "name '" + name.text + "' declared twice");
        Generator g;
        g.name = name.text;
        expect_keyword("deg");
        g.degree = static_cast<int>(expect_int(true));
        expect_keyword("from");
        g.source = idem_ref(P, expect_ident("an idempotent"));
        expect_keyword("to");
        g.target = idem_ref(P, expect_ident("an idempotent"));
        while (peek().kind == TokKind::Ident) {
            const Token& opt = next();
            if (opt.text == "long")
                g.role = ChordRole::Long;
            else if (opt.text == "short") {
                g.role = ChordRole::Short;
                g.link = expect_ident("a link id").text;
            }
            else if (opt.text == "level") {
                long p = expect_int(false);
                g.level = static_cast<int>(p);
            }
            else
                fail(opt, "unknown generator option '" + opt.text + "'");
        }
        P.add_generator(std::move(g));
    }

    void diff_stmt()
    {
        const Token& name = expect_ident("a generator name");
        Presentation& P = cur(name);
        auto g = P.find_generator(name.text);
        if (!g)
            fail(name, "undeclared generator '" + name.text + "'");
        if (P.differential(*g))
            fail(name, "second diff statement for '" + name.text + "'");
        expect_sym("=");
        P.set_differential(*g, expr(P));
    }

    PresentationPtr lookup(const Token& t)
    {
        auto it = defined_.find(t.text);
        if (it != defined_.end()) {
            sealed_.insert(t.text);
            return it->second;
        }
        if (resolver_)
            if (auto p = resolver_(t.text))
                return p;
        fail(t, "unknown presentation '" + t.text + "'");
    }

    void check_new_name(const Token& t, bool is_map)
    {
        bool dup = is_map ? bundle_.find_map(t.text) != nullptr : bundle_.find_augmentation(t.text) != nullptr;
        if (dup)
            fail(t, std::string(is_map ? "map" : "augmentation") + " '" + t.text + "' defined twice");
    }

    void block_open()
    {
        skip_newlines();
        expect_sym("{");
        skip_newlines();
    }

    void entry_close()
    {
        skip_newlines();
        if (!is_sym("}"))
            expect_sym(";");
        skip_newlines();
    }

    void map_stmt()
    {
        const Token& name = expect_ident("a map name");
        check_new_name(name, true);
        expect_sym(":");
        const Token& src = expect_ident("a source presentation");
        expect_sym("->");
        const Token& tgt = expect_ident("a target presentation");
        PresentationPtr S = lookup(src);
        PresentationPtr T = lookup(tgt);
        DgMap phi(S, T);
        std::set<std::string> seen;
        block_open();
        while (!is_sym("}")) {
            const Token& lhs = expect_ident("a generator or idempotent");
            if (!seen.insert(lhs.text).second)
                fail(lhs, "'" + lhs.text + "' assigned twice");
            expect_sym("->");
            if (auto e = S->find_idempotent(lhs.text)) {
                const Token& r = expect_ident("an idempotent");
                phi.set_idempotent(*e, idem_ref(*T, r));
            }
            else if (auto g = S->find_generator(lhs.text)) {
                Element img = expr(*T);
                try {
                    phi.assign(*g, std::move(img));
                }
                catch (const Error& err) {
                    fail(lhs, err.what());
                }
            }
            else
                fail(lhs, "undeclared name '" + lhs.text + "' in " + src.text);
            entry_close();
        }
        next();
        bundle_.maps.push_back({name.text, src.text, tgt.text, std::move(phi)});
    }

    void aug_stmt()
    {
        const Token& name = expect_ident("an augmentation name");
        check_new_name(name, false);
        expect_keyword("on");
        const Token& src = expect_ident("a presentation");
        PresentationPtr S = lookup(src);
        expect_keyword("scope");
        std::vector<std::string> scope;
        while (peek().kind == TokKind::Ident)
            scope.push_back(next().text);
        Augmentation eps(S, scope);
        std::set<std::string> seen;
        block_open();
        while (!is_sym("}")) {
            const Token& lhs = expect_ident("a generator");
            if (!seen.insert(lhs.text).second)
                fail(lhs, "'" + lhs.text + "' assigned twice");
            auto g = S->find_generator(lhs.text);
            if (!g)
                fail(lhs, "undeclared generator '" + lhs.text + "' in " + src.text);
            expect_sym("->");
            Coeff v = coeff_sum(S->ring());
            try {
                eps.set_value(*g, v);
            }
            catch (const Error& err) {
                fail(lhs, err.what());
            }
            entry_close();
        }
        next();
        bundle_.augmentations.push_back({name.text, src.text, std::move(eps)});
    }

    // -------------------------------------------------------- expressions

    std::optional<Coeff> coeff_factor(const CoeffRing& ring)
    {
        const Token& t = peek();
        if (t.kind == TokKind::Int) {
            next();
            Rational q(t.text);
            if (is_sym("/")) {
                next();
                if (peek().kind != TokKind::Int)
                    fail(peek(), "expected a denominator" + found());
                const Token& d = next();
                Rational den(d.text);
                if (den == 0)
                    fail(d, "zero denominator");
                q /= den;
            }
            q.canonicalize();
            try {
                return Coeff::from_rational(ring, q);
            }
            catch (const Error& e) {
                fail(t, e.what());
            }
        }
        if (is_sym("(")) {
            next();
            Coeff c = coeff_sum(ring);
            expect_sym(")");
            return c;
        }
        if (t.kind == TokKind::Ident) {
            const auto& ps = ring.parameters();
            auto it = std::find(ps.begin(), ps.end(), t.text);
            if (it == ps.end())
                return std::nullopt;
            next();
            int e = 1;
            if (is_sym("^")) {
                next();
                e = static_cast<int>(expect_int(true));
            }
            std::vector<int> exps(ps.size(), 0);
            exps[static_cast<std::size_t>(it - ps.begin())] = e;
            return Coeff::monomial(ring, 1, exps);
        }
        return std::nullopt;
    }

    Coeff coeff_term(const CoeffRing& ring)
    {
        auto c = coeff_factor(ring);
        if (!c)
            fail(peek(), "expected a coefficient" + found());
        while (is_sym("*")) {
            next();
            auto d = coeff_factor(ring);
            if (!d)
                fail(peek(), "expected a coefficient" + found());
            *c *= *d;
        }
        return *c;
    }

    Coeff coeff_sum(const CoeffRing& ring)
    {
        Coeff total = Coeff::zero(ring);
        bool first = true;
        while (true) {
            bool neg = false;
            if (is_sym("+") || is_sym("-")) {
                neg = next().text == "-";
            }
            else if (!first)
                break;
            Coeff t = coeff_term(ring);
            total += neg ? -t : t;
            first = false;
        }
        return total;
    }

    struct Item {
        bool idem;
        std::uint32_t id;
        const Token* tok;
    };

    Element term(const Presentation& P)
    {
        Coeff c = Coeff::one(P.ring());
        std::vector<Item> items;
        while (true) {
            if (auto k = coeff_factor(P.ring()))
                c *= *k;
            else if (peek().kind == TokKind::Ident) {
                const Token& t = next();
                if (auto e = P.find_idempotent(t.text))
                    items.push_back({true, *e, &t});
                else if (auto g = P.find_generator(t.text))
                    items.push_back({false, *g, &t});
                else
                    fail(t, "undeclared name '" + t.text + "'");
            }
            else
                fail(peek(), "expected a term" + found());
            if (!is_sym("*"))
                break;
            next();
        }
        if (items.empty())
            return P.one().scaled(c);

        // ends of each item, composability left to right
        auto src = [&](const Item& it) { return it.idem ? it.id : P.generator(it.id).source; };
        auto tgt = [&](const Item& it) { return it.idem ? it.id : P.generator(it.id).target; };
        for (std::size_t k = 0; k + 1 < items.size(); ++k) {
            if (src(items[k]) != tgt(items[k + 1])) {
                std::string w;
                for (std::size_t j = 0; j < items.size(); ++j)
                    w += (j ? "*" : "") + items[j].tok->text;
                fail(*items[k + 1].tok, "word " + w + " is not composable at '" + items[k + 1].tok->text + "'");
            }
        }
        std::vector<GeneratorId> letters;
        for (const auto& it : items)
            if (!it.idem)
                letters.push_back(it.id);
        Word w = letters.empty() ? Word::idempotent(items.front().id)
                                 : Word::from_letters(std::move(letters), src(items.back()), tgt(items.front()));
        return Element(w, c);
    }

    Element expr(const Presentation& P)
    {
        Element out;
        bool first = true;
        while (true) {
            bool neg = false;
            if (is_sym("+") || is_sym("-"))
                neg = next().text == "-";
            else if (!first)
                break;
            Element t = term(P);
            if (neg)
                out -= t;
            else
                out += t;
            first = false;
        }
        return out;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const PresentationResolver& resolver_;
    CatalogBundle bundle_;
    std::map<std::string, MutablePtr> defined_;
    std::vector<std::string> order_;
    std::set<std::string> sealed_;
    MutablePtr current_;
    std::string current_name_;
};

std::string gen_line(const Presentation& P, const Generator& g)
{
    std::string s = "gen " + g.name + " deg " + std::to_string(g.degree) + " from " +
                    P.idempotents().at(g.source).label + " to " + P.idempotents().at(g.target).label;
    s += g.role == ChordRole::Long ? " long" : " short " + g.link;
    if (g.level)
        s += " level " + std::to_string(*g.level);
    return s;
}

void write_presentation(std::ostringstream& o, const std::string& name, const Presentation& P, bool header)
{
    if (header)
        o << "presentation " << name << "\n";
    o << "ring " << P.ring().to_string() << "\n";
    if (auto c = P.convention())
        o << "convention " << (*c == PotentialConvention::PotentialPlus ? "potential_plus" : "potential_minus")
          << "\n";
    if (!P.idempotents().empty()) {
        o << "idempotents";
        for (const auto& e : P.idempotents())
            o << " " << e.label;
        o << "\n";
    }
    for (const auto& g : P.generators())
        o << gen_line(P, g) << "\n";
    for (GeneratorId g = 0; g < P.generators().size(); ++g)
        if (const auto& d = P.differential(g))
            o << "diff " << P.generator(g).name << " = " << P.to_string(*d) << "\n";
}

}  // namespace

CatalogBundle parse(const std::string& text, const PresentationResolver& resolver)
{
    Parser p(lex(text), resolver);
    return p.run();
}

Coeff parse_coeff(const std::string& text, const CoeffRing& ring)
{
    PresentationResolver none;
    Parser p(lex(text), none);
    return p.coeff_only(ring);
}

Element parse_element(const std::string& text, const Presentation& P)
{
    PresentationResolver none;
    Parser p(lex(text), none);
    return p.element_only(P);
}

std::string serialize(const CatalogBundle& B)
{
    std::ostringstream o;
    for (std::size_t i = 0; i < B.presentations.size(); ++i) {
        const auto& np = B.presentations[i];
        if (i)
            o << "\n";
        write_presentation(o, np.name, *np.presentation, !(i == 0 && np.name == "main"));
    }
    for (const auto& m : B.maps) {
        const Presentation& S = m.map.source();
        const Presentation& T = m.map.target();
        o << "\nmap " << m.name << " : " << m.source << " -> " << m.target << " {\n";
        const auto& im = m.map.idempotent_map();
        for (IdempotentId e = 0; e < im.size(); ++e)
            if (im[e])
                o << "  " << S.idempotents()[e].label << " -> " << T.idempotents().at(*im[e]).label << " ;\n";
        for (GeneratorId g = 0; g < S.generators().size(); ++g)
            if (const auto& x = m.map.image(g))
                o << "  " << S.generator(g).name << " -> " << T.to_string(*x) << " ;\n";
        o << "}\n";
    }
    for (const auto& a : B.augmentations) {
        const Presentation& S = a.aug.source();
        o << "\naug " << a.name << " on " << a.source << " scope";
        for (const auto& l : a.aug.scope())
            o << " " << l;
        o << " {\n";
        const auto& vals = a.aug.values();
        for (GeneratorId g = 0; g < vals.size(); ++g)
            if (vals[g])
                o << "  " << S.generator(g).name << " -> " << vals[g]->to_string(S.ring()) << " ;\n";
        o << "}\n";
    }
    if (!B.notes.empty()) {
        o << "\n";
        for (const auto& n : B.notes)
            o << "note " << n << "\n";
    }
    return o.str();
}

}  // namespace cedga
