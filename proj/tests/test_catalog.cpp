#include <doctest.h>

#include "cedga/analysis.hpp"
#include "cedga/catalog.hpp"
#include "oracle.hpp"

using namespace cedga;

namespace {

const CoeffRing Q = CoeffRing::rationals();
const CoeffRing F2 = CoeffRing::gf2();

// Every generator's differential agrees with the oracle (mod 2 over GF2).
void check_against_oracle(const Presentation& P, const oracle::Algebra& A)
{
    REQUIRE(P.generators().size() == A.gens.size());
    const bool gf2 = P.ring().kind() == RingKind::GF2;
    for (const auto& g : A.gens) {
        CAPTURE(g.name);
        auto id = P.find_generator(g.name);
        REQUIRE(id);
        CHECK(P.generator(*id).degree == g.degree);
        auto got = oracle::from_element(P, *P.differential(*id));
        auto want = A.d.at(g.name);
        if (gf2)
            want = oracle::reduce_mod2(want);
        CHECK(got == want);
    }
}

bool oracle_d_squared_zero(const oracle::Algebra& A, bool mod2)
{
    for (const auto& g : A.gens) {
        auto dd = oracle::d(A, A.d.at(g.name));
        if (mod2)
            dd = oracle::reduce_mod2(dd);
        if (!oracle::is_zero(dd))
            return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("catalog")
{
    TEST_CASE("point algebra generator count and degrees")
    {
        Presentation P = make_point_algebra(3, {0, 0, 0}, 1, PotentialConvention::PotentialMinus, Q);
        CHECK(P.generators().size() == 12);
        CHECK(P.generator(P.generator_id("c1_11")).degree == -1);
        CHECK(P.generator(P.generator_id("c0_12")).degree == 1);
        CHECK(apply_differential(P, P.gen("c0_12")).is_zero());
        CHECK_THROWS_AS(make_point_algebra(1, {0}, 1, PotentialConvention::PotentialMinus, Q), InvalidArgument);
        CHECK_THROWS_AS(make_point_algebra(3, {0, 0}, 1, PotentialConvention::PotentialMinus, Q), InvalidArgument);
    }

    TEST_CASE("point algebras match the oracle transcription")
    {
        const std::vector<std::vector<int>> potentials{{0, 0}, {1, 0}, {0, 0, 0}, {0, 1, 0}, {2, -1, 5}, {0, 1, 1, 0}};
        for (const auto& m : potentials)
            for (int p_max : {0, 1, 2, 3})
                for (bool minus : {true, false}) {
                    CAPTURE(m.size());
                    CAPTURE(p_max);
                    auto conv = minus ? PotentialConvention::PotentialMinus : PotentialConvention::PotentialPlus;
                    int n = static_cast<int>(m.size());
                    check_against_oracle(make_point_algebra(n, m, p_max, conv, Q),
                                         oracle::point_algebra(n, m, p_max, minus, oracle::Sign::Transposed));
                    check_against_oracle(
                        make_point_algebra(n, m, p_max, conv, Q, SignReading::Potential),
                        oracle::point_algebra(n, m, p_max, minus, oracle::Sign::Potential));
                }
    }

    TEST_CASE("sign readings over Q")
    {
        // The transposed reading squares to zero for every potential; the
        // printed-order reading needs all potentials of one parity.
        for (const auto& m : std::vector<std::vector<int>>{{0, 0, 0}, {0, 1, 0}, {1, 0, 3}}) {
            auto T = oracle::point_algebra(3, m, 2, true, oracle::Sign::Transposed);
            CHECK(oracle_d_squared_zero(T, false));
            auto P = make_point_algebra(3, m, 2, PotentialConvention::PotentialMinus, Q);
            CHECK(check_d_squared(P).pass());
        }
        auto bad = oracle::point_algebra(3, {0, 1, 0}, 2, true, oracle::Sign::Potential);
        CHECK_FALSE(oracle_d_squared_zero(bad, false));
        CHECK(oracle_d_squared_zero(bad, true));
        auto lib = make_point_algebra(3, {0, 1, 0}, 2, PotentialConvention::PotentialMinus, Q, SignReading::Potential);
        CHECK_FALSE(check_d_squared(lib).pass());
        auto even = oracle::point_algebra(3, {0, 0, 0}, 2, true, oracle::Sign::Potential);
        CHECK(oracle_d_squared_zero(even, false));
    }

    TEST_CASE("hat algebra matches the oracle")
    {
        for (bool closed : {false, true})
            for (int p_max : {0, 1, 2}) {
                CAPTURE(closed);
                CAPTURE(p_max);
                auto A = oracle::hat_point_algebra(3, {0, 0, 0}, p_max, closed, oracle::Sign::Transposed);
                CHECK(oracle_d_squared_zero(A, false));
                check_against_oracle(make_hat_point_algebra(3, {0, 0, 0}, p_max, closed, Q), A);
            }
        Presentation H = make_hat_point_algebra(3, {0, 0, 0}, 0, false, Q);
        CHECK(H.to_string(*H.differential(H.generator_id("xh0_12"))) == "x0_12 - y0_12");
        Presentation C = make_hat_point_algebra(3, {0, 0, 0}, 0, true, Q);
        CHECK(C.differential(C.generator_id("xh0_12"))->is_zero());
        CHECK(C.generator(C.generator_id("xh0_12")).degree == C.generator(C.generator_id("x0_12")).degree - 1);
    }

    TEST_CASE("d squared of xh1_11 over GF2")
    {
        Presentation H = make_hat_point_algebra(3, {0, 0, 0}, 2, false, F2);
        Element dd = apply_differential(H, *H.differential(H.generator_id("xh1_11")));
        CHECK(dd.is_zero());
        auto A = oracle::hat_point_algebra(3, {0, 0, 0}, 2, false, oracle::Sign::Transposed);
        CHECK(oracle::is_zero(oracle::reduce_mod2(oracle::d(A, A.d.at("xh1_11")))));
    }

    TEST_CASE("truncation is closed under d")
    {
        for (const auto& name : example_names())
            for (const auto& np : example(name).presentations) {
                const Presentation& P = *np.presentation;
                for (GeneratorId g = 0; g < P.generators().size(); ++g) {
                    const auto& lvl = P.generator(g).level;
                    if (!lvl)
                        continue;
                    for (const auto& [w, c] : P.differential(g)->terms())
                        for (auto h : w.letters())
                            if (P.generator(h).level && P.generator(h).link == P.generator(g).link)
                                CHECK(*P.generator(h).level <= *lvl);
                }
            }
    }

    TEST_CASE("free product")
    {
        auto I3 = std::make_shared<Presentation>(
            make_point_algebra(3, {0, 0, 0}, 2, PotentialConvention::PotentialMinus, F2));
        auto J3 = std::make_shared<Presentation>(
            make_point_algebra(3, {0, 0, 0}, 2, PotentialConvention::PotentialMinus, F2));
        // Names must not clash.
        CHECK_THROWS_AS(free_product(I3, J3, {0, 1, 2}), InvalidArgument);

        CatalogBundle B = example("I3_free_I3", {2, F2});
        const Presentation& prod = B.presentation("main");
        CHECK(prod.generators().size() == 2 * B.presentation("left").generators().size());
        CHECK(prod.idempotents().size() == 3);
        CHECK(check_d_squared(prod).pass());

        auto empty = std::make_shared<Presentation>(F2);
        for (const auto& e : I3->idempotents())
            empty->add_idempotent(e.label);
        auto unit = free_product(I3, empty, {0, 1, 2});
        CHECK(*unit.product == *I3);

        auto other = std::make_shared<Presentation>(Q);
        other->add_idempotent("e1");
        CHECK_THROWS_AS(free_product(I3, other, {0}), RingMismatch);
        auto two = std::make_shared<Presentation>(F2);
        two->add_idempotent("f1");
        two->add_idempotent("f2");
        CHECK_THROWS_AS(free_product(I3, two, {0, 0}), InvalidArgument);
    }

    TEST_CASE("transcribed examples")
    {
        Presentation U = example("unknot_one_handle").presentation("main");
        CHECK(U.generator(U.generator_id("a")).degree == -1);
        CHECK(U.generator(U.generator_id("t0_12")).degree == 0);
        CHECK(U.to_string(*U.differential(U.generator_id("a"))) == "e1 - t0_12");
        CHECK(U.convention() == PotentialConvention::PotentialPlus);

        Presentation A = example("a3_link").presentation("main");
        CHECK(A.to_string(*A.differential(A.generator_id("b"))) == "y0_23*x0_23 + v0_23*w0_23");

        CatalogBundle S = example("singular_torus");
        const Augmentation& eps = S.augmentation("eps");
        const Presentation& T = S.presentation("main");
        const CoeffRing& R = T.ring();
        CHECK(eps.value(T.generator_id("c0_12")).to_string(R) == "lam");
        CHECK(eps.value(T.generator_id("c1_21")).to_string(R) == "lam^-1");
        CHECK(eps.value(T.generator_id("p")).to_string(R) == "mu");
        CHECK(T.to_string(*T.differential(T.generator_id("ph"))) == "p - c1_21*p*c0_12");
        CHECK(T.to_string(*T.differential(T.generator_id("a"))) == "e - p");

        for (const auto& name : {"saddle_cobordism", "unknot_edge", "theta", "a3_link", "a3_arboreal"})
            CHECK(example(name).presentations.front().presentation->ring() == F2);
        CHECK_THROWS_AS(example("no_such_entry"), InvalidArgument);
    }

    TEST_CASE("p_max and ring options")
    {
        CHECK(example("I3", {3, std::nullopt}).presentation("main").generators().size() == 3 + 9 * 3);
        CHECK(example("I3", {2, F2}).presentation("main").ring() == F2);
        CHECK(example("I2", {0, std::nullopt}).presentation("main").generators().size() == 1);
    }
}
