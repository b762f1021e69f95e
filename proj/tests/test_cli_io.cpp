// JSON interchange: parsing, schema errors with paths, canonical
// serialization round-trips, generator determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "chset/generate.hpp"
#include "chset/json_io.hpp"
#include "helpers.hpp"

using namespace chset;
using testutil::code_of;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(CHSET_FIXTURES_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string error_message(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("every fixture parses and canonical serialization is idempotent") {
    std::vector<std::string> files = {
        "f1.json",       "f2.json",        "f3.json",
        "f4.json",       "y3.json",        "psi1.json",
        "psi2.json",     "f2-bcs.json",    "swap-map.json",
        "z1.json",       "z2.json",        "zpv.json",
        "step-window-4.json", "moving-point-4.json"};
    for (const auto& name : files) {
        CAPTURE(name);
        Document doc = parse_document(slurp(name));
        std::string canonical = serialize(doc);
        CHECK(serialize(parse_document(canonical)) == canonical);
    }
}

TEST_CASE("parsed fixtures carry the expected structures") {
    Document f3 = parse_document(slurp("f3.json"));
    CHECK(f3.kind == "oriented-set");
    const auto& os = std::get<OrientedSet>(f3.body);
    CHECK(os.elements == ElemSet{"1", "2", "3", "4"});
    CHECK(os.related("1", "3"));
    CHECK(os.related("1", "1"));  // reflexive closure added on parse

    Document y3 = parse_document(slurp("y3.json"));
    CHECK(std::get<Simultaneity>(y3.body) == testutil::y3());

    Document psi1 = parse_document(slurp("psi1.json"));
    CHECK(std::get<Chronologization>(psi1.body) == testutil::psi1());
}

TEST_CASE("schema violations carry JSON paths") {
    std::string dangling = R"({"version":"chset/1","kind":"oriented-set",
        "body":{"elements":["a"],"arrows":[{"from":"zz","to":"a"}]}})";
    CHECK(code_of([&] { parse_document(dangling); }) == "SchemaViolation");
    CHECK(error_message([&] { parse_document(dangling); })
              .find("/body/arrows/0/from") != std::string::npos);

    CHECK(code_of([] { parse_document("{nope"); }) == "MalformedJson");
    CHECK(code_of([] {
              parse_document(R"({"version":"chset/0","kind":"x","body":{}})");
          }) == "UnsupportedVersion");
    CHECK(code_of([] {
              parse_document(R"({"version":"chset/1","kind":"nope","body":{}})");
          }) == "SchemaViolation");
    // the reserved synthetic element is rejected in user input
    CHECK(code_of([] {
              parse_document(R"({"version":"chset/1","kind":"oriented-set",
                  "body":{"elements":["~aug"],"arrows":[]}})");
          }) == "SchemaViolation");
}

TEST_CASE("semantic checks run on parse") {
    // psi leaving the scale
    CHECK(code_of([] {
              parse_document(R"({"version":"chset/1","kind":"chronologization",
                  "body":{"scale":["t"],"psi":{"t":["a"],"u":["a"]}}})");
          }) == "SchemaViolation");
    // a bcs whose base breaks the formal-sequence axiom
    std::string bad_bcs = R"({"version":"chset/1","kind":"bcs","body":{
        "pcs":{"oriented-set":{"elements":["x1","x2"],
                               "arrows":[{"from":"x1","to":"x2"}]},
               "chronologization":{"scale":["1","2"],
                                   "psi":{"1":["x1"],"2":["x2"]}}},
        "base":[
          {"from":{"time":"1","elem":"x1"},"to":{"time":"1","elem":"x1"}},
          {"from":{"time":"2","elem":"x2"},"to":{"time":"2","elem":"x2"}},
          {"from":{"time":"2","elem":"x2"},"to":{"time":"1","elem":"x1"}}]}})";
    CHECK(code_of([&] { parse_document(bad_bcs); }) == "InvalidBase");
}

TEST_CASE("serialization round-trips in-memory structures") {
    Rng rng(3);
    for (int i = 0; i < 5; ++i) {
        Document d = make_document("oriented-set", random_oriented_set(rng, 6));
        CHECK(std::get<OrientedSet>(parse_document(serialize(d)).body) ==
              std::get<OrientedSet>(d.body));
    }
    Document db = make_document("bcs", random_bcs(rng, 6));
    CHECK(std::get<BasicChangeableSet>(parse_document(serialize(db)).body) ==
          std::get<BasicChangeableSet>(db.body));
    Document dts = make_document("trajectory-system", random_trajectory_system(rng, 4));
    CHECK(serialize(parse_document(serialize(dts))) == serialize(dts));
    Document dz = make_document("changeable-set", random_cset(rng, 2, 4));
    CHECK(serialize(parse_document(serialize(dz))) == serialize(dz));
}

TEST_CASE("generators are deterministic under a fixed seed") {
    auto run = [] {
        Rng rng(42);
        std::string out;
        for (int i = 0; i < 10; ++i)
            out += serialize(make_document("oriented-set",
                                           random_oriented_set(rng, 6)));
        return out;
    };
    CHECK(run() == run());
}
