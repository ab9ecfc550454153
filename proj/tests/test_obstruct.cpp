#include <doctest.h>

#include <chrono>

#include "cedga/catalog.hpp"
#include "cedga/dsl.hpp"
#include "cedga/obstruct.hpp"
#include "oracle.hpp"

using namespace cedga;

namespace {

ObstructionReport run(const CatalogBundle& B, const std::string& map)
{
    const DgMap& phi = B.map(map);
    return obstruct_y_filling(phi.source(), phi.target(), phi, Bounds{6, 2, 8});
}

// Re-runs the embedded certificate and, over GF2 with a constant target,
// the oracle's own solve.
void recheck_certificate(const DgMap& phi, const ObstructionReport& rep)
{
    const Presentation& C = phi.target();
    const auto& cert = rep.certificate;
    REQUIRE(cert.verdict == ExactVerdict::NoneWithinBounds);
    auto again = exactness_search(C, cert.target, cert.bounds, cert.parity);
    CHECK(again.verdict == ExactVerdict::NoneWithinBounds);
    CHECK(again.candidates == cert.candidates);
}

}  // namespace

TEST_SUITE("obstruct")
{
    TEST_CASE("unknot edge")
    {
        CatalogBundle B = example("unknot_edge");
        auto rep = run(B, "link");
        REQUIRE(rep.verdict == ObstructionVerdict::Obstructed);
        CHECK(rep.decisive_generator == "a1");
        CHECK(rep.decisive_part == Parity::Even);
        CHECK(rep.certificate.parity == Parity::Odd);
        recheck_certificate(B.map("link"), rep);

        // Oracle: f1 is not d of an odd-length word of length <= 6.
        const Presentation& C = B.map("link").target();
        auto A = oracle::from_presentation(C);
        int v = static_cast<int>(*C.find_idempotent("f1")) + 1;
        std::vector<oracle::Letters> odd;
        for (auto& w : oracle::words(A, v, v, -1, 6, 2))
            if (w.size() % 2 == 1)
                odd.push_back(w);
        CHECK(odd.size() == rep.certificate.candidates);
        CHECK_FALSE(oracle::gf2_solvable(A, odd, oracle::Poly{{oracle::Key{{}, v}, 1}}));
    }

    TEST_CASE("a3 link and arboreal, all pairings")
    {
        auto t0 = std::chrono::steady_clock::now();
        for (const char* entry : {"a3_link", "a3_arboreal"}) {
            CatalogBundle B = example(entry);
            for (const char* m : {"link_xw_yv", "link_xv_yw", "link_xy_vw"}) {
                CAPTURE(entry);
                CAPTURE(m);
                auto rep = run(B, m);
                CHECK(rep.verdict == ObstructionVerdict::Obstructed);
                if (rep.verdict == ObstructionVerdict::Obstructed)
                    recheck_certificate(B.map(m), rep);
            }
        }
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        CHECK(secs < 60.0);
    }

    TEST_CASE("a3 link derives the odd parity of eps(b)")
    {
        auto rep = run(example("a3_link"), "link_xw_yv");
        REQUIRE(rep.verdict == ObstructionVerdict::Obstructed);
        bool b_cycle = false;
        for (const auto& c : rep.classes)
            if (c.generator == "b")
                b_cycle = c.kind == ParityClassKind::Cycle;
        CHECK(b_cycle);
        CHECK(rep.decisive_generator == "a1");
    }

    TEST_CASE("theta is inconclusive")
    {
        auto rep = run(example("theta"), "link");
        CHECK(rep.verdict == ObstructionVerdict::Inconclusive);
        CHECK_FALSE(rep.blocking.empty());
    }

    TEST_CASE("a codomain with d u = e defeats the argument")
    {
        auto bundle = parse("ring GF2\nidempotents e\ngen a deg -1 from e to e long\n"
                            "gen x deg 0 from e to e short x\ndiff x = 0\ndiff a = e + x\n"
                            "presentation cod\nring GF2\nidempotents f\n"
                            "gen u deg -1 from f to f long\ngen y deg 0 from f to f short y\n"
                            "diff u = f\ndiff y = 0\n"
                            "map link : main -> cod { e -> f ; x -> y ; }\n");
        const DgMap& phi = bundle.map("link");
        auto rep = obstruct_y_filling(phi.source(), phi.target(), phi, Bounds{});
        CHECK(rep.verdict == ObstructionVerdict::Inconclusive);
    }

    TEST_CASE("codomains that keep parity are refused")
    {
        auto bundle = parse("ring GF2\nidempotents e\ngen a deg -1 from e to e long\ndiff a = e\n"
                            "presentation cod\nring GF2\nidempotents f\n"
                            "gen u deg 0 from f to f long\ngen v deg 1 from f to f long\n"
                            "diff u = v\ndiff v = 0\n"
                            "map link : main -> cod { e -> f ; }\n");
        const DgMap& phi = bundle.map("link");
        CHECK_THROWS_AS(obstruct_y_filling(phi.source(), phi.target(), phi, Bounds{}), UnsupportedPresentation);
    }
}
