#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cftnvm/characters.hpp"

#include <random>
#include <vector>

using namespace cftnvm;

TEST_CASE("additive character values") {
    Field f7(7, 1);
    AddCharacter eps0(f7.zero());
    AddCharacter eps1(f7.one());
    for (const auto& x : f7.elements()) {
        CHECK(eps0(x) == CycNum(1L));
    }
    CHECK(eps1(f7.from_integer(3)) == CycNum::root_of_unity(7, 3));

    // Orthogonality: the full sum vanishes unless a = 0.
    for (unsigned long q : {4UL, 9UL, 16UL, 25UL, 49UL}) {
        Field f = make_field_for_q(q);
        for (const auto& a : f.elements()) {
            AddCharacter psi(a);
            CycNum sum(0L);
            for (const auto& x : f.elements()) sum += psi(x);
            if (a.is_zero()) {
                CHECK(sum == CycNum(static_cast<long>(q)));
            } else {
                CHECK(sum.is_zero());
            }
        }
    }
}

TEST_CASE("multiplicative character values") {
    Field f7(7, 1);
    MultCharacter chi0(f7, 0);
    MultCharacter chi1(f7, 1);
    for (const auto& x : f7.elements()) {
        if (x.is_zero()) {
            CHECK(chi0(x).is_zero());
            CHECK(chi1(x).is_zero());
        } else {
            CHECK(chi0(x) == CycNum(1L));
        }
    }
    CHECK(chi1(f7.from_integer(3)) == CycNum::root_of_unity(6, 1));

    for (unsigned long q : {5UL, 9UL, 13UL, 25UL, 49UL}) {
        Field f = make_field_for_q(q);
        for (unsigned long k = 0; k < q - 1; ++k) {
            MultCharacter chi(f, k);
            CycNum sum(0L);
            for (const auto& x : f.elements()) {
                if (!x.is_zero()) sum += chi(x);
            }
            if (k == 0) {
                CHECK(sum == CycNum(static_cast<long>(q - 1)));
            } else {
                CHECK(sum.is_zero());
            }
        }
    }
}

TEST_CASE("multiplicativity, exhaustively on small fields") {
    for (unsigned long q : {5UL, 8UL, 9UL, 16UL, 25UL}) {
        Field f = make_field_for_q(q);
        auto els = f.elements();
        AddCharacter psi(f.generator());
        MultCharacter chi(f, 1);
        for (const auto& x : els) {
            for (const auto& y : els) {
                CHECK(psi(x + y) == psi(x) * psi(y));
                if (!x.is_zero() && !y.is_zero()) {
                    CHECK(chi(x * y) == chi(x) * chi(y));
                }
            }
        }
    }
}

TEST_CASE("additive character duality, sampled") {
    Field f(3, 2);
    std::mt19937 rng(42);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
    for (int iter = 0; iter < 50; ++iter) {
        FieldElement a = f.from_index(pick(rng));
        FieldElement b = f.from_index(pick(rng));
        FieldElement x = f.from_index(pick(rng));
        CHECK(AddCharacter(a + b)(x) == AddCharacter(a)(x) * AddCharacter(b)(x));
    }
}

TEST_CASE("subgroups") {
    Field f7(7, 1);
    Subgroup h(f7, 3);
    CHECK(h.order() == 2);
    auto els = h.elements();
    REQUIRE(els.size() == 2);
    CHECK(els[0] == f7.one());
    CHECK(els[1] == f7.from_integer(6));
    CHECK(h.contains(f7.from_integer(6)));
    CHECK_FALSE(h.contains(f7.from_integer(3)));
    CHECK_FALSE(h.contains(f7.zero()));

    Subgroup full(f7, 1);
    CHECK(full.order() == 6);
    Subgroup triv(f7, 6);
    CHECK(triv.order() == 1);
    CHECK(triv.elements() == std::vector<FieldElement>{f7.one()});

    CHECK_THROWS_AS(Subgroup(f7, 4), std::invalid_argument);
    CHECK_THROWS_AS(Subgroup(f7, 0), std::invalid_argument);

    // Membership matches explicit enumeration for every divisor.
    for (unsigned long q : {9UL, 13UL, 16UL}) {
        Field f = make_field_for_q(q);
        for (unsigned long s = 1; s <= q - 1; ++s) {
            if ((q - 1) % s != 0) continue;
            Subgroup H(f, s);
            auto members = H.elements();
            CHECK(members.size() == H.order());
            for (const auto& x : f.elements()) {
                bool listed = false;
                for (const auto& m : members) listed = listed || (m == x);
                CHECK(H.contains(x) == listed);
            }
        }
    }
}

TEST_CASE("subgroup characters and extensions") {
    Field f7(7, 1);
    Subgroup h(f7, 3);
    SubgroupChar chi(h, 1);  // chi(6) = zeta_2 = -1
    CHECK(chi(f7.from_integer(6)) == CycNum(-1L));
    CHECK(chi(f7.one()) == CycNum(1L));
    CHECK_THROWS_AS(chi(f7.from_integer(3)), std::invalid_argument);

    auto ann = annihilator(h);
    REQUIRE(ann.size() == 3);
    CHECK(ann[0].k() == 0);
    CHECK(ann[1].k() == 2);
    CHECK(ann[2].k() == 4);

    auto ext = extensions(chi);
    REQUIRE(ext.size() == 3);
    CHECK(ext[0].k() == 1);
    CHECK(ext[1].k() == 3);
    CHECK(ext[2].k() == 5);

    // Trivial subgroup character extends to the annihilator.
    SubgroupChar triv(h, 0);
    auto ext0 = extensions(triv);
    REQUIRE(ext0.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(ext0[i] == ann[i]);

    CHECK(restrict_char(MultCharacter(f7, 1), h).j() == 1);
    CHECK(restrict_char(MultCharacter(f7, 0), h).is_trivial());

    // Full group: only the trivial character annihilates.
    Subgroup full(f7, 1);
    auto ann_full = annihilator(full);
    REQUIRE(ann_full.size() == 1);
    CHECK(ann_full[0].is_trivial());
}

TEST_CASE("extension restriction roundtrip and annihilator cosets") {
    for (unsigned long q : {7UL, 13UL, 16UL, 25UL}) {
        Field f = make_field_for_q(q);
        for (unsigned long s = 1; s <= q - 1; ++s) {
            if ((q - 1) % s != 0) continue;
            Subgroup H(f, s);
            for (unsigned long j = 0; j < H.order(); ++j) {
                SubgroupChar chi(H, j);
                auto ext = extensions(chi);
                CHECK(ext.size() == s);
                for (const auto& phi : ext) {
                    // Restriction agrees with chi by direct evaluation on H.
                    SubgroupChar back = restrict_char(phi, H);
                    CHECK(back == chi);
                    for (const auto& hh : H.elements()) {
                        CHECK(phi(hh) == chi(hh));
                    }
                }
                // Distinct extensions differ by an annihilator element.
                for (std::size_t a = 0; a < ext.size(); ++a) {
                    for (std::size_t b = 0; b < ext.size(); ++b) {
                        unsigned long diff =
                            (ext[a].k() + (q - 1) - ext[b].k()) % (q - 1);
                        CHECK(diff % H.order() == 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("index-3 annihilator is the Kummer triple") {
    for (unsigned long q : {7UL, 13UL, 16UL, 25UL, 31UL}) {
        Field f = make_field_for_q(q);
        REQUIRE((q - 1) % 3 == 0);
        Subgroup H(f, 3);
        auto ann = annihilator(H);
        REQUIRE(ann.size() == 3);
        unsigned long d = (q - 1) / 3;
        CHECK(ann[0].is_trivial());
        CHECK(ann[1].k() == d);
        CHECK(ann[2].k() == 2 * d);
        // kappa maps the generator to a primitive cube root; the third is its
        // conjugate and equals kappa squared.
        CHECK(ann[1](f.generator()) == CycNum::root_of_unity(3, 1));
        CHECK(ann[2](f.generator()) == CycNum::root_of_unity(3, 2));
        CHECK(ann[2] == ann[1].conjugated());
        for (const auto& x : f.elements()) {
            if (!x.is_zero()) CHECK(ann[2](x) == ann[1](x) * ann[1](x));
        }
    }
}
