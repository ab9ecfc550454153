#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cedga/analysis.hpp"
#include "cedga/catalog.hpp"
#include "cedga/dsl.hpp"
#include "cedga/obstruct.hpp"

namespace cedga::cli {

namespace {

using json = nlohmann::ordered_json;

// Input or usage problems; reported with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string file;
    bool json_out = false;
    int max_len = 6;
    int max_level = 2;
    int degree_bound = 8;
    std::string parity;
    std::string ring;
    std::string presentation;
    // command specific
    std::string target;
    std::string map_name;
    std::string aug_name;
    std::string aug_file;
    std::string output;
    std::string codomain_file;
    std::string link_map_file;
    std::string catalog_name;
    bool emit = false;
    int p_max = 2;
};

struct Loaded {
    CatalogBundle bundle;
    std::string label;
};

std::string read_all(std::istream& in)
{
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Loaded load(const std::string& path, std::istream& in, const PresentationResolver& resolver = {})
{
    std::string text;
    std::string label = path == "-" ? "<stdin>" : path;
    if (path == "-")
        text = read_all(in);
    else {
        std::ifstream f(path, std::ios::binary);
        if (!f)
            throw UsageError("cannot open '" + path + "'");
        text = read_all(f);
    }
    Loaded L;
    try {
        L = {parse(text, resolver), label};
    }
    catch (const ParseError& e) {
        throw UsageError(label + ":" + std::to_string(e.line) + ":" + std::to_string(e.column) + ": " + e.message);
    }
    // Degree mismatches are findings of `grade`, not input errors.
    for (const auto& np : L.bundle.presentations)
        for (const auto& v : validate_presentation(*np.presentation).violations)
            if (v.kind != ViolationKind::DegreeMismatch)
                throw UsageError(label + ": presentation " + np.name + ": " + to_string(v.kind) +
                                 (v.generator.empty() ? "" : " at " + v.generator) + ": " + v.detail);
    return L;
}

CoeffRing ring_from_name(const std::string& s)
{
    if (s == "Q")
        return CoeffRing::rationals();
    if (s == "GF2")
        return CoeffRing::gf2();
    if (s.rfind("laurent(", 0) == 0 && s.back() == ')') {
        std::vector<std::string> params;
        std::string body = s.substr(8, s.size() - 9);
        std::stringstream ss(body);
        for (std::string p; std::getline(ss, p, ',');)
            params.push_back(p);
        return CoeffRing::laurent(params);
    }
    throw UsageError("unknown ring '" + s + "' (expected Q, GF2 or laurent(a,b,...))");
}

PresentationPtr with_ring(const PresentationPtr& P, const CoeffRing& ring)
{
    auto Q = std::make_shared<Presentation>(ring);
    Q->set_convention(P->convention());
    for (const auto& e : P->idempotents())
        Q->add_idempotent(e.label);
    for (const auto& g : P->generators())
        Q->add_generator(g);
    for (GeneratorId g = 0; g < P->generators().size(); ++g)
        if (const auto& d = P->differential(g)) {
            Element x;
            for (const auto& [w, c] : d->terms())
                x.add_term(w, c.convert(ring));
            Q->set_differential(g, x);
        }
    return Q;
}

PresentationPtr pick(const Loaded& L, const Options& o)
{
    const auto& ps = L.bundle.presentations;
    if (ps.empty())
        throw UsageError(L.label + ": no presentation");
    PresentationPtr P;
    if (o.presentation.empty())
        P = ps.front().presentation;
    else if (auto np = L.bundle.find_presentation(o.presentation))
        P = np->presentation;
    else
        throw UsageError(L.label + ": no presentation '" + o.presentation + "'");
    if (!o.ring.empty())
        P = with_ring(P, ring_from_name(o.ring));
    return P;
}

Bounds bounds_of(const Options& o)
{
    if (o.max_len < 0 || o.max_level < 0 || o.degree_bound < 0)
        throw UsageError("bounds must be non-negative");
    return Bounds{o.max_len, o.max_level, o.degree_bound};
}

std::optional<Parity> parity_of_flag(const std::string& s)
{
    if (s.empty())
        return std::nullopt;
    if (s == "even")
        return Parity::Even;
    if (s == "odd")
        return Parity::Odd;
    throw UsageError("--parity must be 'even' or 'odd'");
}

json bounds_json(const Bounds& b)
{
    return json{{"max_word_length", b.max_word_length}, {"max_level", b.max_level}, {"degree_bound", b.degree_bound}};
}

json histogram_json(const std::map<std::size_t, std::size_t>& h)
{
    json j = json::object();
    for (const auto& [k, v] : h)
        j[std::to_string(k)] = v;
    return j;
}

json exactness_json(const Presentation& P, const ExactnessResult& r)
{
    json j;
    j["verdict"] = r.verdict == ExactVerdict::Witness ? "witness" : "none_within_bounds";
    j["target"] = P.to_string(r.target);
    j["target_degree"] = r.target_degree;
    j["parity"] = r.parity ? json(to_string(*r.parity)) : json(nullptr);
    j["witness"] = r.verdict == ExactVerdict::Witness ? json(P.to_string(r.witness)) : json(nullptr);
    j["candidates"] = r.candidates;
    j["rank"] = r.rank;
    j["length_histogram"] = histogram_json(r.length_histogram);
    j["bounds"] = bounds_json(r.bounds);
    return j;
}

struct Result {
    int code = 0;
    json verdict;
    json certificates = json::object();
    std::vector<std::string> text;
};

// ------------------------------------------------------------ commands

Result cmd_check_d2(const Options& o, std::istream& in)
{
    auto L = load(o.file, in);
    auto P = pick(L, o);
    auto rep = check_d_squared(*P);
    Result r;
    r.code = rep.pass() ? 0 : 1;
    r.verdict = rep.pass() ? "pass" : "fail";
    json ce = json::array();
    for (const auto& c : rep.counterexamples)
        ce.push_back({{"generator", c.generator}, {"residual", P->to_string(c.residual)}});
    r.certificates["generators"] = P->generators().size();
    r.certificates["ring"] = P->ring().to_string();
    r.certificates["counterexamples"] = ce;
    r.text.push_back("d^2 = 0 over " + P->ring().to_string() + ": " + (rep.pass() ? "pass" : "fail") + " (" +
                     std::to_string(P->generators().size()) + " generators)");
    for (const auto& c : rep.counterexamples)
        r.text.push_back("  d(d " + c.generator + ") = " + P->to_string(c.residual));
    return r;
}

Result cmd_grade(const Options& o, std::istream& in)
{
    auto L = load(o.file, in);
    auto P = pick(L, o);
    auto rep = check_degree(*P);
    Result r;
    r.code = rep.pass() ? 0 : 1;
    r.verdict = rep.pass() ? "pass" : "fail";
    json degrees = json::object();
    for (const auto& g : P->generators())
        degrees[g.name] = g.degree;
    json vs = json::array();
    for (const auto& v : rep.violations)
        vs.push_back({{"generator", v.generator}, {"detail", v.detail}});
    r.certificates["degrees"] = degrees;
    r.certificates["violations"] = vs;
    r.text.push_back(std::string("differential raises degree by 1: ") + (rep.pass() ? "pass" : "fail"));
    for (const auto& g : P->generators())
        r.text.push_back("  |" + g.name + "| = " + std::to_string(g.degree));
    for (const auto& v : rep.violations)
        r.text.push_back("  d " + v.generator + ": " + v.detail);
    return r;
}

Result cmd_parity(const Options& o, std::istream& in)
{
    auto L = load(o.file, in);
    auto P = pick(L, o);
    auto rep = check_parity_flip(*P);
    Result r;
    r.code = rep.pass() ? 0 : 1;
    r.verdict = rep.pass() ? "pass" : "fail";
    r.certificates["witness"] =
        rep.witness ? json{{"generator", rep.witness->generator}, {"word", P->word_to_string(rep.witness->word)}}
                    : json(nullptr);
    r.text.push_back(std::string("differential flips word length parity: ") + (rep.pass() ? "pass" : "fail"));
    if (rep.witness)
        r.text.push_back("  d " + rep.witness->generator + " contains " + P->word_to_string(rep.witness->word) +
                         " of odd length");
    return r;
}

Result cmd_h0(const Options& o, std::istream& in)
{
    auto L = load(o.file, in);
    auto P = pick(L, o);
    auto rep = h0(*P, o.degree_bound);
    Result r;
    r.code = 0;
    r.verdict = {{"is_ground_ring", rep.is_ground_ring},
                 {"dimension", rep.dimension},
                 {"complete", rep.complete},
                 {"finite", rep.finite}};
    json rels = json::array(), rules = json::array(), basis = json::array(), killed = json::array();
    for (std::size_t k = 0; k < rep.relations.size(); ++k)
        rels.push_back({{"source", rep.relation_sources[k]}, {"relation", P->to_string(rep.relations[k])}});
    for (const auto& rule : rep.rules)
        rules.push_back({{"lhs", P->word_to_string(rule.lhs)}, {"rhs", P->to_string(rule.rhs)}});
    for (const auto& w : rep.basis)
        basis.push_back(P->word_to_string(w));
    for (auto e : rep.killed)
        killed.push_back(P->idempotents()[e].label);
    r.certificates["relations"] = rels;
    r.certificates["rules"] = rules;
    r.certificates["killed"] = killed;
    r.certificates["counts_by_length"] = rep.counts_by_length;
    r.certificates["basis"] = basis;
    r.text.push_back("H0 up to length " + std::to_string(rep.degree_bound) + ": dimension " +
                     std::to_string(rep.dimension) + (rep.finite ? "" : " (not finite within the bound)") +
                     (rep.complete ? "" : " (completion truncated)"));
    r.text.push_back(std::string("ground ring: ") + (rep.is_ground_ring ? "yes" : "no"));
    for (const auto& rule : rep.rules)
        r.text.push_back("  " + P->word_to_string(rule.lhs) + " -> " + P->to_string(rule.rhs));
    std::string b = "  basis:";
    for (const auto& w : rep.basis)
        b += " " + P->word_to_string(w);
    r.text.push_back(b);
    return r;
}

Result exact_like(const Presentation& P, const ExactnessResult& res, const std::string& yes, const std::string& no)
{
    Result r;
    bool w = res.verdict == ExactVerdict::Witness;
    r.code = w ? 0 : 1;
    r.verdict = w ? yes : no;
    r.certificates = exactness_json(P, res);
    r.certificates.erase("verdict");
    r.certificates.erase("bounds");
    if (w)
        r.text.push_back(yes + ": d(" + P.to_string(res.witness) + ") = " + P.to_string(res.target));
    else
        r.text.push_back(no + ": " + P.to_string(res.target) + " is not d of any combination of " +
                         std::to_string(res.candidates) + " words (length <= " +
                         std::to_string(res.bounds.max_word_length) + ", level <= " +
                         std::to_string(res.bounds.max_level) +
                         (res.parity ? ", " + to_string(*res.parity) + " length" : std::string()) + ")");
    return r;
}

Result cmd_exact(const Options& o, std::istream& in)
{
    if (o.target.empty())
        throw UsageError("exact needs --target EXPR");
    auto L = load(o.file, in);
    auto P = pick(L, o);
    Element t;
    try {
        t = parse_element(o.target, *P);
    }
    catch (const ParseError& e) {
        throw UsageError("--target: column " + std::to_string(e.column) + ": " + e.message);
    }
    return exact_like(*P, exactness_search(*P, t, bounds_of(o), parity_of_flag(o.parity)), "witness",
                      "none_within_bounds");
}

Result cmd_trivial(const Options& o, std::istream& in)
{
    auto L = load(o.file, in);
    auto P = pick(L, o);
    auto res = is_trivial(*P, bounds_of(o));
    return exact_like(*P, res.search, "certified_trivial", "not_within_bounds");
}

Result cmd_verify_map(const Options& o, std::istream& in)
{
    auto L = load(o.file, in);
    if (L.bundle.maps.empty())
        throw UsageError(L.label + ": no map");
    const NamedMap* m = o.map_name.empty() ? &L.bundle.maps.front() : L.bundle.find_map(o.map_name);
    if (!m)
        throw UsageError(L.label + ": no map '" + o.map_name + "'");
    const DgMap& phi = m->map;
    auto rep = verify_chain_map(phi);
    const Presentation& S = phi.source();
    const Presentation& T = phi.target();
    Result r;
    r.code = rep.ok() ? 0 : 1;
    r.verdict = rep.ok() ? "pass" : "fail";
    json values = json::array();
    r.text.push_back("chain map " + m->name + " : " + m->source + " -> " + m->target + ": " +
                     (rep.ok() ? "pass" : "fail"));
    for (GeneratorId g = 0; g < S.generators().size(); ++g) {
        const auto& img = phi.image(g);
        if (!img)
            continue;
        std::string d_img = T.to_string(apply_differential(T, *img));
        std::string img_d;
        try {
            img_d = T.to_string(extend_map(phi, *S.differential(g)));
        }
        catch (const Error&) {
            img_d = "?";
        }
        values.push_back({{"generator", S.generator(g).name}, {"d_of_image", d_img}, {"image_of_d", img_d}});
        r.text.push_back("  d(" + m->name + "(" + S.generator(g).name + ")) = " + d_img);
    }
    json fails = json::array();
    for (const auto& f : rep.failures) {
        fails.push_back({{"generator", f.generator}, {"residual", T.to_string(f.residual)}});
        r.text.push_back("  fails at " + f.generator + ": residual " + T.to_string(f.residual));
    }
    for (const auto& d : rep.degree_violations)
        r.text.push_back("  degree: " + d);
    for (const auto& u : rep.unassigned)
        r.text.push_back("  unassigned: " + u);
    r.certificates["map"] = m->name;
    r.certificates["values"] = values;
    r.certificates["failures"] = fails;
    r.certificates["degree_violations"] = rep.degree_violations;
    r.certificates["unassigned"] = rep.unassigned;
    return r;
}

const NamedAugmentation& pick_aug(const Loaded& L, const std::string& name)
{
    if (L.bundle.augmentations.empty())
        throw UsageError(L.label + ": no augmentation");
    const NamedAugmentation* a =
        name.empty() ? &L.bundle.augmentations.front() : L.bundle.find_augmentation(name);
    if (!a)
        throw UsageError(L.label + ": no augmentation '" + name + "'");
    return *a;
}

Result cmd_verify_aug(const Options& o, std::istream& in)
{
    auto L = load(o.file, in);
    const auto& a = pick_aug(L, o.aug_name);
    auto rep = verify_augmentation(a.aug);
    const Presentation& S = a.aug.source();
    Result r;
    r.code = rep.ok() ? 0 : 1;
    r.verdict = rep.ok() ? "pass" : "fail";
    json fails = json::array();
    r.text.push_back("augmentation " + a.name + " on " + a.source + ": " + (rep.ok() ? "pass" : "fail"));
    for (const auto& f : rep.failures) {
        fails.push_back({{"generator", f.generator}, {"residual", f.residual.to_string(S.ring())}});
        r.text.push_back("  " + a.name + "(d " + f.generator + ") = " + f.residual.to_string(S.ring()));
    }
    for (const auto& s : rep.scope_violations)
        r.text.push_back("  d " + s + " leaves the scope");
    r.certificates["augmentation"] = a.name;
    r.certificates["failures"] = fails;
    r.certificates["scope_violations"] = rep.scope_violations;
    return r;
}

Result cmd_linearize(const Options& o, std::istream& in)
{
    auto L = load(o.file, in);
    const NamedAugmentation* a = nullptr;
    std::optional<Loaded> A;
    if (!o.aug_file.empty()) {
        PresentationResolver res = [&](const std::string& n) -> PresentationPtr {
            auto p = L.bundle.find_presentation(n);
            return p ? p->presentation : nullptr;
        };
        A = load(o.aug_file, in, res);
        a = &pick_aug(*A, o.aug_name);
    }
    else
        a = &pick_aug(L, o.aug_name);
    Presentation lin;
    try {
        lin = partial_linearize(a->aug.source(), a->aug);
    }
    catch (const InvalidArgument& e) {
        Result r;
        r.code = 1;
        r.verdict = "refused";
        r.certificates["reason"] = e.what();
        r.text.push_back(std::string("linearization refused: ") + e.what());
        return r;
    }
    CatalogBundle out;
    out.presentations.push_back({"main", std::make_shared<Presentation>(lin)});
    std::string text = serialize(out);
    auto d2 = check_d_squared(lin);
    Result r;
    r.code = 0;
    r.verdict = "ok";
    r.certificates["augmentation"] = a->name;
    r.certificates["generators"] = lin.generators().size();
    r.certificates["d_squared"] = d2.pass() ? "pass" : "fail";
    if (!o.output.empty()) {
        std::ofstream f(o.output, std::ios::binary);
        if (!f)
            throw UsageError("cannot write '" + o.output + "'");
        f << text;
        r.certificates["output"] = o.output;
        r.text.push_back("wrote " + o.output + " (" + std::to_string(lin.generators().size()) + " generators)");
    }
    else {
        r.certificates["presentation"] = text;
        r.text.push_back(text.substr(0, text.size() - 1));
    }
    return r;
}

Result cmd_obstruct(const Options& o, std::istream& in)
{
    auto D = load(o.file, in);
    std::optional<Loaded> C;
    auto resolver = [&](const std::string& n) -> PresentationPtr {
        if (auto p = D.bundle.find_presentation(n))
            return p->presentation;
        if (C)
            if (auto p = C->bundle.find_presentation(n))
                return p->presentation;
        return nullptr;
    };
    if (!o.codomain_file.empty())
        C = load(o.codomain_file, in, resolver);
    std::optional<Loaded> M;
    const Loaded* maps = &D;
    if (!o.link_map_file.empty()) {
        M = load(o.link_map_file, in, resolver);
        maps = &*M;
    }
    else if (C && !C->bundle.maps.empty())
        maps = &*C;
    if (maps->bundle.maps.empty())
        throw UsageError("obstruct needs a link map (--link-map FILE, or a map in the input)");
    const NamedMap* m = o.map_name.empty() ? &maps->bundle.maps.front() : maps->bundle.find_map(o.map_name);
    if (!m)
        throw UsageError(maps->label + ": no map '" + o.map_name + "'");

    const Presentation& dom = m->map.source();
    const Presentation& cod = m->map.target();
    auto rep = obstruct_y_filling(dom, cod, m->map, bounds_of(o));
    Result r;
    bool ob = rep.verdict == ObstructionVerdict::Obstructed;
    r.code = ob ? 0 : 1;
    r.verdict = to_string(rep.verdict);
    json classes = json::array();
    for (const auto& c : rep.classes) {
        std::string kind = c.kind == ParityClassKind::Cycle ? "cycle"
                           : c.kind == ParityClassKind::Split ? "split"
                                                              : "undetermined";
        classes.push_back({{"generator", c.generator},
                           {"class", kind},
                           {"cycle_parity", c.cycle_parity ? json(to_string(*c.cycle_parity)) : json(nullptr)},
                           {"image_of_d", c.image}});
    }
    r.certificates["map"] = m->name;
    r.certificates["parity_classes"] = classes;
    r.certificates["transcript"] = rep.transcript;
    if (ob) {
        r.certificates["decisive_generator"] = rep.decisive_generator;
        r.certificates["decisive_equation"] = "d eps(" + rep.decisive_generator + ") = " + rep.decisive_image;
        r.certificates["decisive_part"] = to_string(rep.decisive_part);
        r.certificates["cycle_unknowns"] = rep.cycle_unknowns;
        r.certificates["system_columns"] = rep.system_columns;
        r.certificates["certificate"] = exactness_json(cod, rep.certificate);
    }
    else
        r.certificates["blocking"] = rep.blocking;
    r.text.push_back(std::string(ob ? "obstructed" : "inconclusive") + " (" + m->name + ")");
    for (const auto& t : rep.transcript)
        r.text.push_back("  " + t);
    if (ob)
        r.text.push_back("  certificate: " + cod.to_string(rep.certificate.target) + " is not d of any " +
                         to_string(*rep.certificate.parity) + "-length combination of " +
                         std::to_string(rep.certificate.candidates) + " words");
    else
        for (const auto& b : rep.blocking)
            r.text.push_back("  blocked: " + b);
    return r;
}

Result cmd_catalog(const Options& o)
{
    Result r;
    r.code = 0;
    r.verdict = "ok";
    if (o.catalog_name.empty()) {
        r.certificates["names"] = example_names();
        for (const auto& n : example_names())
            r.text.push_back(n);
        return r;
    }
    ExampleOptions eo;
    eo.p_max = o.p_max;
    if (!o.ring.empty())
        eo.ring = ring_from_name(o.ring);
    auto names = example_names();
    if (std::find(names.begin(), names.end(), o.catalog_name) == names.end())
        throw UsageError("unknown catalog entry '" + o.catalog_name + "'");
    CatalogBundle B = example(o.catalog_name, eo);
    if (o.emit) {
        r.text.push_back(serialize(B));
        r.certificates["text"] = r.text.back();
        return r;
    }
    json ps = json::array();
    for (const auto& p : B.presentations) {
        ps.push_back({{"name", p.name},
                      {"ring", p.presentation->ring().to_string()},
                      {"idempotents", p.presentation->idempotents().size()},
                      {"generators", p.presentation->generators().size()}});
        r.text.push_back("presentation " + p.name + ": " + std::to_string(p.presentation->generators().size()) +
                         " generators over " + p.presentation->ring().to_string());
    }
    json maps = json::array(), augs = json::array();
    for (const auto& m : B.maps) {
        maps.push_back(m.name);
        r.text.push_back("map " + m.name + " : " + m.source + " -> " + m.target);
    }
    for (const auto& a : B.augmentations) {
        augs.push_back(a.name);
        r.text.push_back("aug " + a.name + " on " + a.source);
    }
    for (const auto& n : B.notes)
        r.text.push_back("note " + n);
    r.certificates["name"] = o.catalog_name;
    r.certificates["presentations"] = ps;
    r.certificates["maps"] = maps;
    r.certificates["augmentations"] = augs;
    r.certificates["notes"] = B.notes;
    return r;
}

void add_common(CLI::App* sub, Options& o, bool file, bool search)
{
    if (file)
        sub->add_option("file", o.file, "input .cedga file, or - for standard input")->required();
    sub->add_flag("--json", o.json_out, "emit one JSON object");
    sub->add_option("--ring", o.ring, "override the coefficient ring (Q, GF2, laurent(a,b))");
    sub->add_option("--presentation", o.presentation, "presentation to use (default: the first)");
    if (search) {
        sub->add_option("--max-len", o.max_len, "maximal word length (default 6, or CEDGA_MAX_LEN)");
        sub->add_option("--max-level", o.max_level, "maximal chord level p (default 2)");
        sub->add_option("--parity", o.parity, "restrict the search to even or odd word lengths");
    }
    sub->add_option("--degree-bound", o.degree_bound, "completion bound for h0 (default 8)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    auto t0 = std::chrono::steady_clock::now();
    Options o;
    if (const char* env = std::getenv("CEDGA_MAX_LEN")) {
        try {
            o.max_len = std::stoi(env);
        }
        catch (const std::exception&) {
            err << "cedga: CEDGA_MAX_LEN is not an integer\n";
            return 2;
        }
    }

    CLI::App app{"cedga: dg-algebras over idempotents", "cedga"};
    app.require_subcommand(1);
    struct Cmd {
        const char* name;
        const char* help;
        bool file;
        bool search;
    };
    const std::vector<Cmd> cmds{
        {"check-d2", "check that d^2 = 0 on every generator", true, false},
        {"grade", "check that d raises degree by 1", true, false},
        {"parity", "check that d flips word length parity", true, false},
        {"h0", "degree-0 homology by rewriting", true, false},
        {"exact", "bounded search for x with d x = target", true, true},
        {"trivial", "bounded search for x with d x = 1", true, true},
        {"verify-map", "check that a map commutes with d", true, false},
        {"verify-aug", "check an augmentation on its scope", true, false},
        {"linearize", "partial linearization by an augmentation", true, false},
        {"obstruct", "parity obstruction to a filling map", true, true},
        {"catalog", "list or emit catalog entries", false, false},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& c : cmds) {
        auto* s = app.add_subcommand(c.name, c.help);
        add_common(s, o, c.file, c.search);
        subs[c.name] = s;
    }
    subs["exact"]->add_option("--target", o.target, "target element in DSL syntax");
    subs["verify-map"]->add_option("--map", o.map_name, "map name (default: the first)");
    subs["verify-aug"]->add_option("--aug", o.aug_name, "augmentation name (default: the first)");
    subs["linearize"]->add_option("augfile", o.aug_file, "file with the augmentation (default: the input)");
    subs["linearize"]->add_option("--aug", o.aug_name, "augmentation name (default: the first)");
    subs["linearize"]->add_option("-o,--output", o.output, "write the linearized presentation here");
    subs["obstruct"]->add_option("--codomain", o.codomain_file, "file with the codomain presentation");
    subs["obstruct"]->add_option("--link-map", o.link_map_file, "file with the link map");
    subs["obstruct"]->add_option("--map", o.map_name, "map name (default: the first)");
    subs["catalog"]->add_option("name", o.catalog_name, "entry name; omit to list all");
    subs["catalog"]->add_flag("--emit", o.emit, "write the entry in the DSL format");
    subs["catalog"]->add_option("--p-max", o.p_max, "highest chord level (default 2)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    }
    catch (const CLI::ParseError& e) {
        err << "cedga: " << e.what() << "\n";
        if (app.get_subcommands().empty())
            err << app.help();
        return 2;
    }

    std::string name = app.get_subcommands().front()->get_name();
    Result r;
    try {
        if (name == "check-d2")
            r = cmd_check_d2(o, in);
        else if (name == "grade")
            r = cmd_grade(o, in);
        else if (name == "parity")
            r = cmd_parity(o, in);
        else if (name == "h0")
            r = cmd_h0(o, in);
        else if (name == "exact")
            r = cmd_exact(o, in);
        else if (name == "trivial")
            r = cmd_trivial(o, in);
        else if (name == "verify-map")
            r = cmd_verify_map(o, in);
        else if (name == "verify-aug")
            r = cmd_verify_aug(o, in);
        else if (name == "linearize")
            r = cmd_linearize(o, in);
        else if (name == "obstruct")
            r = cmd_obstruct(o, in);
        else
            r = cmd_catalog(o);
    }
    catch (const UsageError& e) {
        err << "cedga " << name << ": " << e.what() << "\n";
        return 2;
    }
    catch (const Error& e) {
        err << "cedga " << name << ": " << e.what() << "\n";
        return 2;
    }

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    if (o.json_out) {
        json j;
        j["command"] = name;
        j["verdict"] = r.verdict;
        j["certificates"] = r.certificates;
        j["bounds"] = bounds_json(Bounds{o.max_len, o.max_level, o.degree_bound});
        j["timings"] = {{"total_ms", ms}};
        out << j.dump(2) << "\n";
    }
    else if (name == "catalog" && o.emit)
        out << r.text.front();
    else
        for (const auto& line : r.text)
            out << line << "\n";
    return r.code;
}

}  // namespace cedga::cli
