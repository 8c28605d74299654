#include "bwf/classify.hpp"
#include "bwf/errors.hpp"

#include <doctest.h>

using namespace bwf;

namespace {

SemigroupCtx closed(std::string_view generators) {
    return SemigroupCtx(OmegaFamily::close(parse_set_list(generators)));
}

SemigroupCtx exact(std::string_view members) {
    return SemigroupCtx(OmegaFamily::validate(parse_set_list(members)));
}

Element el(const SemigroupCtx& ctx, std::string_view text) { return parse_element(ctx, text); }

} // namespace

TEST_CASE("identity") {
    const auto w = exact("w");
    CHECK(identity_element(w) == el(w, "(0,0,w)"));
    const auto tails = exact("w,[1),[2)");
    CHECK(identity_element(tails) == el(tails, "(0,0,w)"));
    CHECK_FALSE(identity_element(exact("{0},empty")).has_value());
    CHECK_FALSE(identity_element(exact("2+3w,empty")).has_value());
    CHECK(identity_element(exact("empty")) == Element::zero());
}

TEST_CASE("identity acts on the truncation") {
    const auto ctx = closed("[2),w");
    const Element one = *identity_element(ctx);
    for (const auto& x : truncate(ctx, 3)) {
        CHECK(multiply(ctx, one, x) == x);
        CHECK(multiply(ctx, x, one) == x);
    }
}

TEST_CASE("simplicity") {
    CHECK(is_simple(exact("w")));
    CHECK(is_simple(exact("w,[1),[2)")));
    CHECK_THROWS_AS(is_simple(exact("{0},empty")), ContractViolation);

    CHECK(is_zero_simple(exact("{0},empty")));
    CHECK(is_zero_simple(exact("2+3w,empty")));
    // No shift of {0} contains {0,1}, so the two nonzero D-classes are not J-related.
    CHECK_FALSE(is_zero_simple(closed("{0},{0,1}")));
    CHECK_FALSE(is_zero_simple(closed("w,0+2w")));
    CHECK_FALSE(is_zero_simple(exact("empty")));
    CHECK_THROWS_AS(is_zero_simple(exact("w")), ContractViolation);
}

TEST_CASE("closure({0},{0,1}) has three members") {
    CHECK(closed("{0},{0,1}").family().size() == 3);
}

TEST_CASE("bisimplicity") {
    CHECK(is_bisimple(exact("w")));
    CHECK_FALSE(is_zero_bisimple(exact("w")));
    CHECK(is_zero_bisimple(exact("empty,2+3w")));
    CHECK_FALSE(is_bisimple(exact("empty,2+3w")));
    CHECK_FALSE(is_bisimple(exact("w,[1),[2)")));
    CHECK_FALSE(is_zero_bisimple(exact("w,[1),[2)")));
    CHECK(is_bisimple(exact("empty")));
}

TEST_CASE("isomorphism types") {
    CHECK(iso_type(exact("empty,{7}")) == IsoType{IsoKind::MatrixUnits, 0});
    CHECK(iso_type(exact("empty,{0}")) == IsoType{IsoKind::MatrixUnits, 0});
    CHECK(iso_type(exact("empty,[3)")) == IsoType{IsoKind::BicyclicWithZero, 0});
    CHECK(iso_type(exact("empty,w")) == IsoType{IsoKind::BicyclicWithZero, 0});
    CHECK(iso_type(exact("empty,2+3w")) == IsoType{IsoKind::Progression, 3});
    CHECK(iso_type(closed("2+3w")) == IsoType{IsoKind::Progression, 3});
    CHECK(iso_type(exact("w")) == IsoType{IsoKind::Bicyclic, 0});
    CHECK(iso_type(exact("[4)")) == IsoType{IsoKind::Bicyclic, 0});
    CHECK(iso_type(exact("empty")) == IsoType{IsoKind::Trivial, 0});
    CHECK(iso_type(exact("w,[1),[2)")) == IsoType{IsoKind::Other, 0});
    CHECK(iso_type(exact("{0,1},{0},empty")) == IsoType{IsoKind::Other, 0});

    CHECK(format_iso_type(IsoType{IsoKind::Progression, 3}) == "Progression(3)");
    CHECK(format_iso_type(IsoType{IsoKind::BicyclicWithZero, 0}) == "BicyclicWithZero");
}

TEST_CASE("bicyclic copy") {
    CHECK(find_bicyclic_copy(exact("w,[1),[2)")) == NatSet::omega());
    CHECK(find_bicyclic_copy(exact("w")) == NatSet::omega());
    CHECK_FALSE(find_bicyclic_copy(exact("{0},empty")).has_value());
    CHECK(find_bicyclic_copy(exact("[3),empty")) == NatSet::tail(3));
}

TEST_CASE("E-unitarity") {
    CHECK(is_e_unitary(exact("w")));
    CHECK_FALSE(is_e_unitary(exact("{0},empty")));
    CHECK(is_e_unitary(exact("empty")));
}

TEST_CASE("classify populates exactly one simplicity field") {
    const auto free = classify(closed("[2),w"));
    CHECK_FALSE(free.has_zero);
    CHECK(free.simple == true);
    CHECK_FALSE(free.zero_simple.has_value());
    CHECK_FALSE(free.bisimple);
    CHECK(free.identity.has_value());
    CHECK(free.e_unitary);

    const auto with_zero = classify(closed("{0}"));
    CHECK(with_zero.has_zero);
    CHECK_FALSE(with_zero.simple.has_value());
    CHECK(with_zero.zero_simple == true);
    CHECK(with_zero.zero_bisimple);
    CHECK(with_zero.iso_type.kind == IsoKind::MatrixUnits);
    CHECK_FALSE(with_zero.e_unitary);
}

TEST_CASE("isomorphism maps") {
    const auto w = exact("w");
    CHECK(map_to_bicyclic(w, el(w, "(2,5,w)")) == std::pair<Nat, Nat>{2, 5});
    CHECK_THROWS_AS(map_to_matrix_units(w, el(w, "(2,5,w)")), ContractViolation);

    const auto mu = exact("{0},empty");
    CHECK_FALSE(map_to_matrix_units(mu, Element::zero()).has_value());
    CHECK(map_to_matrix_units(mu, el(mu, "(1,1,{0})")) == std::pair<Nat, Nat>{1, 1});
    CHECK_THROWS_AS(map_to_bicyclic(mu, el(mu, "(1,1,{0})")), ContractViolation);
}

TEST_CASE("property: the maps are homomorphisms") {
    const auto w = exact("w");
    const auto bw = truncate(w, 3);
    for (const auto& a : bw)
        for (const auto& b : bw) {
            const auto [i1, j1] = map_to_bicyclic(w, a);
            const auto [i2, j2] = map_to_bicyclic(w, b);
            const Nat m = std::min(j1, i2);
            CHECK(map_to_bicyclic(w, multiply(w, a, b)) == std::pair<Nat, Nat>{i1 + i2 - m, j1 + j2 - m});
        }

    const auto mu = exact("{0},empty");
    const auto bm = truncate(mu, 3);
    for (const auto& a : bm)
        for (const auto& b : bm) {
            const auto x = map_to_matrix_units(mu, a);
            const auto y = map_to_matrix_units(mu, b);
            std::optional<std::pair<Nat, Nat>> expected;
            if (x && y && x->second == y->first)
                expected = std::pair<Nat, Nat>{x->first, y->second};
            CHECK(map_to_matrix_units(mu, multiply(mu, a, b)) == expected);
        }
}
