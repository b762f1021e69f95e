// Visibility grades, the composition criterion, frame classes, visible
// images, and agreement with the definitional oracle.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chset/generate.hpp"
#include "chset/oracles.hpp"
#include "chset/visibility.hpp"
#include "helpers.hpp"

using namespace chset;
using testutil::code_of;

namespace {

BasicChangeableSet flat_frame(int n) {
    ElemSet elems;
    for (int i = 1; i <= n; ++i) elems.insert("p" + std::to_string(i));
    OrientedSet os = make_oriented_set(elems, {}, true);
    Chronologization c;
    c.scale.points = {"t1"};
    c.psi["t1"] = elems;
    return basic_from_formal(make_pcs(os, c));
}

ETS state(int i) { return {"t1", "p" + std::to_string(i)}; }

ChangeableSet z1() { return fixture_z1(flat_frame(2), flat_frame(1), state(1)); }
ChangeableSet z2() { return fixture_z2(flat_frame(2), flat_frame(1), state(1)); }

ChangeableSet zpv2() {
    std::map<ETS, ETS> swap{{state(1), state(2)}, {state(2), state(1)}};
    return make_zpv({{"a", flat_frame(2)}, {"b", flat_frame(2)}},
                    {{{"a", "b"}, swap}, {{"b", "a"}, swap}});
}

}  // namespace

TEST_CASE("z1: visible but not normally visible; the reverse is precise") {
    ChangeableSet z = z1();
    CHECK(frame_grade(z, "l1", "l2") == Grade::visible);
    CHECK(frame_visible(z, "l1", "l2"));
    CHECK_FALSE(frame_normally_visible(z, "l1", "l2"));
    CHECK(frame_visible(z, "l2", "l1"));
    CHECK(frame_grade(z, "l2", "l1") == Grade::precisely_visible);
}

TEST_CASE("z2: normally but not precisely visible") {
    ChangeableSet z = z2();
    CHECK(frame_grade(z, "l1", "l2") == Grade::normally_visible);
    CHECK(frame_normally_visible(z, "l1", "l2"));
    CHECK_FALSE(frame_precisely_visible(z, "l1", "l2"));
    CHECK(frame_grade(z, "l2", "l1") == Grade::invisible);
}

TEST_CASE("step-window: precise visibility only one step ahead") {
    ChangeableSet z = fixture_step_window(flat_frame(2), 4);
    for (int k = 1; k <= 3; ++k)
        CHECK(frame_precisely_visible(z, "l" + std::to_string(k),
                                      "l" + std::to_string(k + 1)));
    CHECK_FALSE(frame_precisely_visible(z, "l1", "l3"));
    CHECK(frame_normally_visible(z, "l1", "l3"));
}

TEST_CASE("moving-point: visibility itself is not transitive") {
    std::vector<ETS> omegas = {state(1), state(2), state(3), state(4)};
    ChangeableSet z = fixture_moving_point(flat_frame(4), 4, omegas);
    CHECK(frame_visible(z, "l1", "l2"));
    CHECK(frame_visible(z, "l2", "l3"));
    CHECK_FALSE(frame_visible(z, "l1", "l3"));
    CHECK(is_connected_visible(z));
}

TEST_CASE("system grades and the partition limit") {
    ChangeableSet z = z2();
    CHECK(system_grade(z, "l1", "l2", {state(1)}) == Grade::precisely_visible);
    CHECK(system_grade(z, "l1", "l2", frame_states(z, "l1")) ==
          Grade::normally_visible);
    CHECK(system_grade(z, "l2", "l1", frame_states(z, "l2")) == Grade::invisible);
    CHECK(code_of([&] {
              system_grade(z, "l1", "l2", frame_states(z, "l1"), 1);
          }) == "PartitionLimitExceeded");
}

TEST_CASE("composition criterion matches precise visibility of the set") {
    CHECK(composition_criterion(zpv2()));
    CHECK(is_precisely_visible_cset(zpv2()));
    CHECK_FALSE(is_precisely_visible_cset(z1()));
    CHECK_FALSE(composition_criterion(z1()));
    CHECK_FALSE(is_precisely_visible_cset(z2()));
    CHECK_FALSE(composition_criterion(z2()));
}

TEST_CASE("frame classes") {
    ChangeableSet z = zpv2();
    CHECK(precisely_equivalent(z, "a", "b"));
    CHECK(precise_visibility_classes(z).blocks ==
          std::set<std::set<FrameId>>{{"a", "b"}});
    CHECK(visibility_classes(z).blocks == std::set<std::set<FrameId>>{{"a", "b"}});
    CHECK(is_connected_visible(z));

    ChangeableSet dark = make_znv({{"a", flat_frame(2)}, {"b", flat_frame(1)}});
    CHECK(precise_visibility_classes(dark).blocks ==
          std::set<std::set<FrameId>>{{"a"}, {"b"}});
    CHECK_FALSE(is_connected_visible(dark));

    // z2: one-directional normal visibility is not mutual
    CHECK_FALSE(precisely_equivalent(z2(), "l1", "l2"));
    CHECK(precise_visibility_classes(z2()).blocks ==
          std::set<std::set<FrameId>>{{"l1"}, {"l2"}});
    // but one-directional visibility still connects the two frames
    CHECK(is_connected_visible(z2()));
}

TEST_CASE("visible image and pointwise transport") {
    ChangeableSet z = zpv2();
    CHECK(visible_image(z, "a", "b", state(1)) == state(2));
    CHECK(pointwise_uni(z, "a", "b", {state(1), state(2)}) ==
          apply_uni(z, "a", "b", {state(1), state(2)}));
    CHECK(code_of([&] { pointwise_uni(z, "a", "b", {}); }) == "BadParams");
    CHECK(code_of([&] { pointwise_uni(z1(), "l1", "l2", {state(1)}); }) ==
          "NotPreciselyVisible");
    CHECK(code_of([&] { visible_image(z2(), "l2", "l1", state(1)); }) ==
          "NotSingletonImage");
}

TEST_CASE("image algebra on a precisely visible set") {
    ChangeableSet z = zpv2();
    ETSSet A{state(1)}, B{state(2)};
    auto un = [&](const ETSSet& S) { return apply_uni(z, "a", "b", S); };
    CHECK(un(set_union(A, B)) == set_union(un(A), un(B)));
    CHECK(un(set_intersection(A, B)) == set_intersection(un(A), un(B)));
    CHECK(un(set_difference(A, B)) == set_difference(un(A), un(B)));
    CHECK(un(frame_states(z, "a")) == frame_states(z, "b"));
}

TEST_CASE("definitional oracle agrees on fixtures and random sets") {
    CHECK(oracle_visibility_diff(z1()).empty());
    CHECK(oracle_visibility_diff(z2()).empty());
    CHECK(oracle_visibility_diff(zpv2()).empty());
    CHECK(oracle_visibility_diff(fixture_step_window(flat_frame(2), 4)).empty());
    Rng rng(17);
    for (int i = 0; i < 8; ++i)
        CHECK(oracle_visibility_diff(random_cset(rng, 3, 4)).empty());
}
