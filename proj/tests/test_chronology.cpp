// Times on oriented sets: validity, kinds, the four constructions,
// equivalence and rescaling.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chset/chronology.hpp"
#include "helpers.hpp"

using namespace chset;
using testutil::code_of;
using testutil::f1;
using testutil::f2;
using testutil::f2_time;
using testutil::f3;
using testutil::f4;

TEST_CASE("check_time: coverage and temporal separation") {
    CHECK(check_time(f2(), f2_time()).empty());

    Chronologization bad1;
    bad1.scale.points = {"t"};
    bad1.psi = {{"t", {"x1"}}};
    // x2 is uncovered, which also leaves the change x1 -> x2 unseparated
    auto v1 = check_time(f1(), bad1);
    REQUIRE(v1.size() == 2);
    CHECK(v1[0].kind == "uncovered");
    CHECK(v1[0].detail == "x2");
    CHECK(v1[1].kind == "unseparated");

    Chronologization bad2;
    bad2.scale.points = {"t1", "t2"};
    bad2.psi = {{"t1", {"x2"}}, {"t2", {"x1"}}};
    auto v2 = check_time(f1(), bad2);
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].kind == "unseparated");
    CHECK(v2[0].detail == "x1 -> x2");

    Chronologization foreign;
    foreign.scale.points = {"t"};
    foreign.psi = {{"t", {"zz"}}};
    CHECK(code_of([&] { check_time(f1(), foreign); }) == "ForeignElement");
}

TEST_CASE("time kinds on the two-moment and four-moment examples") {
    TimeKindFlags k = time_kind(f2(), f2_time());
    CHECK(k.monotone);
    CHECK_FALSE(k.quasi_one_point);
    CHECK_FALSE(k.one_point);

    // four singleton moments walking x1..x4: quasi one-point and monotone
    // but not one-point (x3 does not result from x2)
    Chronologization c4;
    for (int i = 1; i <= 4; ++i) {
        TimeId t = std::to_string(i);
        c4.scale.points.push_back(t);
        c4.psi[t] = {"x" + std::to_string(i)};
    }
    TimeKindFlags k4 = time_kind(f2(), c4);
    CHECK(k4.quasi_one_point);
    CHECK(k4.monotone);
    CHECK_FALSE(k4.one_point);

    // x1 then x2 on f1 is one-point (and therefore strictly monotone)
    Chronologization c1;
    c1.scale.points = {"t1", "t2"};
    c1.psi = {{"t1", {"x1"}}, {"t2", {"x2"}}};
    TimeKindFlags k1 = time_kind(f1(), c1);
    CHECK(k1.one_point);
    CHECK(k1.quasi_one_point);
    CHECK(k1.monotone);
    CHECK(k1.strictly_monotone);

    CHECK(code_of([&] { time_kind(f1(), c4); }) == "ForeignElement");
}

TEST_CASE("trivial chronologization") {
    Chronologization c = trivial_chronologization(f1(), 2);
    CHECK(c.scale.points.size() == 2);
    for (const auto& t : c.scale.points) CHECK(c.at(t) == f1().elements);
    CHECK(is_time(f1(), c));
    CHECK(is_time(f3(), trivial_chronologization(f3(), 3)));
    CHECK(code_of([] { trivial_chronologization(f2(), 1); }) == "BadSize");
}

TEST_CASE("cyclic and chain chronologization") {
    CHECK(code_of([] { chronologize_cyclic(f1()); }) == "NotCyclic");
    OrientedSet cyc =
        make_oriented_set({"u", "v"}, {{"u", "v"}, {"v", "u"}}, true);
    Chronologization cc = chronologize_cyclic(cyc);
    CHECK(time_kind(cyc, cc).one_point);

    Chronologization ch = chronologize_chain(f1());
    CHECK(time_kind(f1(), ch).one_point);
    // every x1 moment precedes every x2 moment
    std::size_t last_x1 = 0, first_x2 = ch.scale.points.size();
    for (std::size_t i = 0; i < ch.scale.points.size(); ++i) {
        if (ch.at(ch.scale.points[i]).count("x1")) last_x1 = i;
        if (ch.at(ch.scale.points[i]).count("x2"))
            first_x2 = std::min(first_x2, i);
    }
    CHECK(last_x1 < first_x2);
    CHECK(code_of([] { chronologize_chain(f3()); }) == "NotChainOriented");
}

TEST_CASE("chronologize_any is quasi one-point on every oriented set") {
    Chronologization c3 = chronologize_any(f3());
    CHECK(is_time(f3(), c3));
    CHECK(time_kind(f3(), c3).quasi_one_point);

    Chronologization c1 = chronologize_any(f1());
    CHECK(time_kind(f1(), c1).one_point);  // single maximal chain

    Chronologization c4 = chronologize_any(f4());
    CHECK(is_time(f4(), c4));
    CHECK(time_kind(f4(), c4).quasi_one_point);
}

TEST_CASE("monotone obstruction triple") {
    auto t = monotone_obstruction(f4());
    REQUIRE(t.has_value());
    CHECK(*t == std::array<ElemId, 3>{"a", "b", "c"});
    CHECK_FALSE(monotone_obstruction(f2()).has_value());
    CHECK_FALSE(monotone_obstruction(f3()).has_value());
}

TEST_CASE("equivalence is positional psi comparison") {
    Chronologization a = f2_time();
    Chronologization b = f2_time();
    b.scale.points = {"m1", "m2"};
    b.psi = {{"m1", {"x1", "x3"}}, {"m2", {"x2", "x4"}}};
    CHECK(chronologizations_equivalent(a, b));
    b.psi["m1"] = {"x1"};
    CHECK_FALSE(chronologizations_equivalent(a, b));
    CHECK_FALSE(chronologizations_equivalent(a, trivial_chronologization(f2(), 3)));
}

TEST_CASE("restrict_time intersects psi with the sub base") {
    OrientedSet sub = make_oriented_set({"x1"}, {}, true);
    Chronologization c = restrict_time(sub, f1(), chronologize_chain(f1()));
    CHECK(is_time(sub, c));
    OrientedSet alien = make_oriented_set({"zz"}, {}, true);
    CHECK(code_of([&] { restrict_time(alien, f1(), chronologize_chain(f1())); }) ==
          "NotEmbedded");
}

TEST_CASE("rescale: trim drops only empty moments, embed adds empty ones") {
    Chronologization c;
    c.scale.points = {"t1", "t2", "t3"};
    c.psi = {{"t1", {"x1"}}, {"t2", {}}, {"t3", {"x2"}}};

    Chronologization trimmed =
        rescale_time(c, RescaleMode::trim, LinearScale{{"t1", "t3"}});
    CHECK(trimmed.scale.points == std::vector<TimeId>{"t1", "t3"});
    CHECK(code_of([&] {
              rescale_time(c, RescaleMode::trim, LinearScale{{"t2"}});
          }) == "TrimDropsNonEmpty");

    Chronologization embedded =
        rescale_time(trimmed, RescaleMode::embed, LinearScale{{"t0", "t1", "t3"}});
    CHECK(embedded.at("t0").empty());
    CHECK(embedded.at("t1") == ElemSet{"x1"});
    CHECK(code_of([&] {
              rescale_time(trimmed, RescaleMode::embed, LinearScale{{"t3", "t1"}});
          }) == "NotAnEmbedding");
}
