#include <doctest.h>

#include <random>

#include "cedga/algebra.hpp"
#include "cedga/catalog.hpp"
#include "cedga/dsl.hpp"

using namespace cedga;

namespace {

Presentation three_points()
{
    return make_point_algebra(3, {0, 0, 0}, 1, PotentialConvention::PotentialMinus, CoeffRing::rationals());
}

Element random_element(std::mt19937& rng, const Presentation& P, int max_len)
{
    std::uniform_int_distribution<std::size_t> pick_gen(0, P.generators().size() - 1);
    std::uniform_int_distribution<int> coeff(-2, 2), len(0, max_len);
    Element x;
    for (int t = 0; t < 3; ++t) {
        int l = len(rng);
        if (l == 0) {
            std::uniform_int_distribution<std::size_t> e(0, P.idempotents().size() - 1);
            x += Element(Word::idempotent(static_cast<IdempotentId>(e(rng))), P.coeff(coeff(rng) | 1));
            continue;
        }
        // Random walk so the word composes.
        std::vector<GeneratorId> letters;
        GeneratorId g = static_cast<GeneratorId>(pick_gen(rng));
        letters.push_back(g);
        for (int k = 1; k < l; ++k) {
            std::vector<GeneratorId> next;
            for (GeneratorId h = 0; h < P.generators().size(); ++h)
                if (P.generator(h).source == P.generator(letters.front()).target)
                    next.push_back(h);
            if (next.empty())
                break;
            std::uniform_int_distribution<std::size_t> n(0, next.size() - 1);
            letters.insert(letters.begin(), next[n(rng)]);
        }
        auto w = P.make_word(letters);
        REQUIRE(w);
        x += Element(*w, P.coeff(coeff(rng)));
    }
    return x;
}

// A homogeneous single word, with its degree.
std::pair<Element, int> random_word(std::mt19937& rng, const Presentation& P, int max_len)
{
    for (;;) {
        Element x = random_element(rng, P, max_len);
        if (x.is_zero())
            continue;
        const auto& [w, c] = *x.terms().begin();
        return {Element(w, P.coeff(1)), P.degree(w)};
    }
}

}  // namespace

TEST_SUITE("algebra")
{
    TEST_CASE("word composition follows print order")
    {
        Presentation P = three_points();
        Word c23 = P.word({"c0_23"}), c12 = P.word({"c0_12"});
        auto uv = word_concat(c23, c12);
        REQUIRE(uv);
        CHECK(P.word_to_string(*uv) == "c0_23*c0_12");
        CHECK(uv->source() == *P.find_idempotent("e1"));
        CHECK(uv->target() == *P.find_idempotent("e3"));
        CHECK_FALSE(word_concat(c12, c23).has_value());
        Word e1 = Word::idempotent(*P.find_idempotent("e1"));
        Word e2 = Word::idempotent(*P.find_idempotent("e2"));
        CHECK(word_concat(e2, c12).value() == c12);
        CHECK_FALSE(word_concat(e1, c12).has_value());
        CHECK(word_concat(c12, e1).value() == c12);
        CHECK_THROWS_AS(P.word({"c0_12", "c0_23"}), InvalidArgument);
    }

    TEST_CASE("products")
    {
        Presentation U = example("unknot_one_handle").presentation("main");
        Element t = U.gen("t0_12");
        Element lhs = element_mul(U, U.idem("e1") - t, t);
        CHECK(U.to_string(lhs) == "t0_12 - t0_12*t0_12");
        Element one = U.one();
        CHECK(element_mul(U, one, lhs) == lhs);
        CHECK(element_mul(U, lhs, one) == lhs);

        Presentation S = example("singular_torus").presentation("main");
        Element w = element_mul(S, element_mul(S, S.gen("c1_21"), S.gen("p")), S.gen("c0_12"));
        CHECK(S.to_string(w) == "c1_21*p*c0_12");
    }

    TEST_CASE("differential of generators and idempotents")
    {
        Presentation P = three_points();
        CHECK(P.to_string(apply_differential(P, P.gen("c0_13"))) == "c0_23*c0_12");
        CHECK(apply_differential(P, P.gen("c0_12")).is_zero());
        CHECK(apply_differential(P, P.idem("e1")).is_zero());
        CHECK(apply_differential(P, P.one()).is_zero());
    }

    TEST_CASE("leibniz sign on a square of an odd generator")
    {
        Presentation U = example("unknot_one_handle").presentation("main");
        Element a = U.gen("a");
        REQUIRE(U.generator(U.generator_id("a")).degree == -1);
        Element da = *U.differential(U.generator_id("a"));
        // |a| odd: d(a a) = (d a) a - a (d a).
        Element expected = element_mul(U, da, a) - element_mul(U, a, da);
        Element got = apply_differential(U, element_mul(U, a, a));
        CHECK(got == expected);
        // Written out: (e1 - t)a - a(e1 - t) = -t a + a t.
        CHECK(U.to_string(got) == "a*t0_12 - t0_12*a");
    }

    TEST_CASE("missing differential is reported")
    {
        Presentation P(CoeffRing::rationals());
        auto e = P.add_idempotent("e");
        P.add_generator({"a", 0, e, e, ChordRole::Long, "", std::nullopt});
        CHECK_THROWS_AS(apply_differential(P, P.gen("a")), IncompletePresentation);
        auto rep = validate_presentation(P);
        REQUIRE_FALSE(rep.ok());
        CHECK(rep.violations[0].kind == ViolationKind::MissingDifferential);
    }

    TEST_CASE("validation")
    {
        CHECK(validate_presentation(three_points()).ok());
        for (const auto& name : example_names()) {
            CAPTURE(name);
            for (const auto& p : example(name).presentations)
                CHECK(validate_presentation(*p.presentation).ok());
        }

        Presentation P(CoeffRing::rationals());
        auto e1 = P.add_idempotent("e1");
        auto e2 = P.add_idempotent("e2");
        auto a = P.add_generator({"a", -1, e1, e1, ChordRole::Long, "", std::nullopt});
        auto b = P.add_generator({"b", 0, e1, e2, ChordRole::Long, "", std::nullopt});
        P.set_differential(b, Element());
        // b goes e1 -> e2, so d a = b is not a loop at e1.
        P.set_differential(a, P.gen("b"));
        auto rep = validate_presentation(P);
        REQUIRE_FALSE(rep.ok());
        CHECK(rep.violations[0].generator == "a");
        CHECK(rep.violations[0].kind == ViolationKind::EndpointMismatch);

        // d a = e1 + (degree 2 word): the second word breaks homogeneity.
        Presentation H(CoeffRing::rationals());
        auto e = H.add_idempotent("e1");
        auto ha = H.add_generator({"a", -1, e, e, ChordRole::Long, "", std::nullopt});
        auto hc = H.add_generator({"c", 1, e, e, ChordRole::Long, "", std::nullopt});
        H.set_differential(hc, Element());
        H.set_differential(ha, H.idem("e1") + element_mul(H, H.gen("c"), H.gen("c")));
        auto hr = validate_presentation(H);
        REQUIRE_FALSE(hr.ok());
        CHECK(hr.violations[0].kind == ViolationKind::DegreeMismatch);
        CHECK(hr.violations[0].generator == "a");
    }

    TEST_CASE("duplicate names are reported")
    {
        Presentation P(CoeffRing::rationals());
        auto e = P.add_idempotent("e");
        auto a = P.add_generator({"a", 0, e, e, ChordRole::Long, "", std::nullopt});
        auto a2 = P.add_generator({"a", 0, e, e, ChordRole::Long, "", std::nullopt});
        P.set_differential(a, Element());
        P.set_differential(a2, Element());
        P.add_idempotent("e");
        CHECK(P.generator_id("a") == a);
        auto rep = validate_presentation(P);
        bool name = false, idem = false;
        for (const auto& v : rep.violations) {
            name |= v.kind == ViolationKind::DuplicateName && v.generator == "a";
            idem |= v.kind == ViolationKind::DuplicateIdempotent;
        }
        CHECK(name);
        CHECK(idem);
    }

    TEST_CASE("associativity, unit and leibniz on random elements")
    {
        std::mt19937 rng(424242);
        Presentation P = three_points();
        Presentation S = example("singular_torus").presentation("main");
        for (const Presentation* X : {&P, &S}) {
            for (int trial = 0; trial < 150; ++trial) {
                Element x = random_element(rng, *X, 3), y = random_element(rng, *X, 3), z = random_element(rng, *X, 3);
                CHECK(element_mul(*X, element_mul(*X, x, y), z) == element_mul(*X, x, element_mul(*X, y, z)));
                CHECK(element_mul(*X, X->one(), x) == x);
                CHECK(element_mul(*X, x, X->one()) == x);

                auto [u, du] = random_word(rng, *X, 3);
                auto [v, dv] = random_word(rng, *X, 3);
                (void)dv;
                Element uv = element_mul(*X, u, v);
                Coeff sign = X->coeff(du % 2 == 0 ? 1 : -1);
                Element rhs = element_mul(*X, apply_differential(*X, u), v) +
                              element_mul(*X, u, apply_differential(*X, v)).scaled(sign);
                if (uv.is_zero())
                    continue;
                CHECK(apply_differential(*X, uv) == rhs);
                Element duv = apply_differential(*X, uv);
                if (!duv.is_zero()) {
                    auto deg = X->degree(duv);
                    REQUIRE(deg.has_value());
                    CHECK(*deg == du + dv + 1);
                }
            }
        }
    }
}
