#pragma once

// json_io.hpp: JSON interchange for every chset structure.
//
// A document is {"version": "chset/1", "kind": <kind>, "body": {...}}.
// Canonical form is what serialize() emits: object keys sorted, every
// collection emitted in its natural sorted order, two-space indentation and
// a trailing newline.  parse -> serialize is idempotent, which the golden
// tests rely on byte for byte.

#include <string>
#include <variant>

#include <json.hpp>

#include "chset/changeable_base.hpp"
#include "chset/chronology.hpp"
#include "chset/core.hpp"
#include "chset/multiverse.hpp"
#include "chset/oriented_set.hpp"
#include "chset/simultaneity.hpp"

namespace chset {

using Json = nlohmann::ordered_json;

inline const std::string kFormatVersion = "chset/1";

struct Document {
    std::string kind;  // oriented-set, chronologization, simultaneity,
                       // trajectory-system, pcs, bcs, changeable-set, trans-map
    std::variant<OrientedSet, Chronologization, Simultaneity, TrajectorySystem,
                 PrimitiveChangeableSet, BasicChangeableSet, ChangeableSet, TransMap>
        body;
};

namespace jio {

// ---- schema helpers: every failure carries a JSON path ------------------

[[noreturn]] inline void bad(const std::string& path, const std::string& reason) {
    fail("SchemaViolation", path + ": " + reason);
}

inline const Json& expect(const Json& j, const std::string& path, const char* key) {
    if (!j.is_object()) bad(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(path + "/" + key, "missing field");
    return *it;
}

inline std::string expect_string(const Json& j, const std::string& path) {
    if (!j.is_string()) bad(path, "expected a string");
    return j.get<std::string>();
}

inline int expect_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) bad(path, "expected an integer");
    return j.get<int>();
}

inline void expect_array(const Json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array");
}

// User-facing tokens may not collide with the reserved internal ones.
inline std::string expect_token(const Json& j, const std::string& path) {
    std::string s = expect_string(j, path);
    if (s.empty()) bad(path, "empty token");
    if (s == kAugElem) bad(path, "token '" + s + "' is reserved");
    for (char ch : s)
        if (static_cast<unsigned char>(ch) < 0x20) bad(path, "control character in token");
    return s;
}

// ---- per-structure readers ----------------------------------------------

inline ElemSet read_token_set(const Json& j, const std::string& path) {
    expect_array(j, path);
    ElemSet out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.insert(expect_token(j[i], path + "/" + std::to_string(i)));
    return out;
}

inline OrientedSet read_oriented_set(const Json& j, const std::string& path) {
    ElemSet elems = read_token_set(expect(j, path, "elements"), path + "/elements");
    const Json& arr = expect(j, path, "arrows");
    expect_array(arr, path + "/arrows");
    ArrowSet arrows;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string p = path + "/arrows/" + std::to_string(i);
        std::string from = expect_token(expect(arr[i], p, "from"), p + "/from");
        std::string to = expect_token(expect(arr[i], p, "to"), p + "/to");
        if (!elems.count(from)) bad(p + "/from", "unknown element " + from);
        if (!elems.count(to)) bad(p + "/to", "unknown element " + to);
        arrows.insert({from, to});
    }
    return make_oriented_set(elems, arrows, /*auto_reflexive=*/true);
}

inline Chronologization read_chronologization(const Json& j, const std::string& path) {
    const Json& sc = expect(j, path, "scale");
    expect_array(sc, path + "/scale");
    Chronologization c;
    std::set<TimeId> seen;
    for (std::size_t i = 0; i < sc.size(); ++i) {
        TimeId t = expect_token(sc[i], path + "/scale/" + std::to_string(i));
        if (!seen.insert(t).second)
            bad(path + "/scale/" + std::to_string(i), "duplicate moment " + t);
        c.scale.points.push_back(t);
    }
    const Json& psi = expect(j, path, "psi");
    if (!psi.is_object()) bad(path + "/psi", "expected an object");
    for (auto it = psi.begin(); it != psi.end(); ++it) {
        if (!seen.count(it.key())) bad(path + "/psi/" + it.key(), "moment off the scale");
        c.psi[it.key()] = read_token_set(it.value(), path + "/psi/" + it.key());
    }
    for (const auto& t : c.scale.points)
        if (!c.psi.count(t)) bad(path + "/psi", "psi undefined at " + t);
    return c;
}

inline Simultaneity read_simultaneity(const Json& j, const std::string& path) {
    const Json& cl = expect(j, path, "classes");
    expect_array(cl, path + "/classes");
    Simultaneity y;
    for (std::size_t i = 0; i < cl.size(); ++i)
        y.classes.insert(read_token_set(cl[i], path + "/classes/" + std::to_string(i)));
    return y;
}

inline TrajectorySystem read_trajectory_system(const Json& j, const std::string& path) {
    TrajectorySystem ts;
    const Json& sc = expect(j, path, "scale");
    expect_array(sc, path + "/scale");
    for (std::size_t i = 0; i < sc.size(); ++i)
        ts.scale.points.push_back(expect_token(sc[i], path + "/scale/" + std::to_string(i)));
    ts.universe = read_token_set(expect(j, path, "universe"), path + "/universe");
    const Json& trs = expect(j, path, "trajectories");
    expect_array(trs, path + "/trajectories");
    for (std::size_t i = 0; i < trs.size(); ++i) {
        std::string p = path + "/trajectories/" + std::to_string(i);
        Trajectory r;
        r.id = expect_token(expect(trs[i], p, "id"), p + "/id");
        const Json& pts = expect(trs[i], p, "points");
        if (!pts.is_object()) bad(p + "/points", "expected an object");
        for (auto it = pts.begin(); it != pts.end(); ++it)
            r.points[it.key()] = expect_token(it.value(), p + "/points/" + it.key());
        ts.trajectories.push_back(std::move(r));
    }
    check_trajectory_system(ts);
    return ts;
}

inline PrimitiveChangeableSet read_pcs(const Json& j, const std::string& path) {
    OrientedSet os = read_oriented_set(expect(j, path, "oriented-set"),
                                       path + "/oriented-set");
    Chronologization c = read_chronologization(expect(j, path, "chronologization"),
                                               path + "/chronologization");
    return make_pcs(os, c);
}

inline ETS read_ets(const Json& j, const std::string& path) {
    return {expect_token(expect(j, path, "time"), path + "/time"),
            expect_token(expect(j, path, "elem"), path + "/elem")};
}

inline ETSSet read_ets_set(const Json& j, const std::string& path) {
    expect_array(j, path);
    ETSSet out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.insert(read_ets(j[i], path + "/" + std::to_string(i)));
    return out;
}

inline BasicChangeableSet read_bcs(const Json& j, const std::string& path) {
    PrimitiveChangeableSet p = read_pcs(expect(j, path, "pcs"), path + "/pcs");
    const Json& base = expect(j, path, "base");
    expect_array(base, path + "/base");
    ETSPairSet rel;
    for (std::size_t i = 0; i < base.size(); ++i) {
        std::string bp = path + "/base/" + std::to_string(i);
        rel.insert({read_ets(expect(base[i], bp, "from"), bp + "/from"),
                    read_ets(expect(base[i], bp, "to"), bp + "/to")});
    }
    return make_basic(p, rel);
}

inline TransMap read_trans_map(const Json& j, const std::string& path) {
    const Json& prs = expect(j, path, "pairs");
    expect_array(prs, path + "/pairs");
    TransMap u;
    for (std::size_t i = 0; i < prs.size(); ++i) {
        std::string p = path + "/pairs/" + std::to_string(i);
        ETS from = read_ets(expect(prs[i], p, "from"), p + "/from");
        ETS to = read_ets(expect(prs[i], p, "to"), p + "/to");
        if (!u.mapping.emplace(from, to).second)
            bad(p + "/from", "duplicate source state");
    }
    return u;
}

inline UniMap read_uni_map(const Json& j, const std::string& path) {
    std::string kind = expect_string(expect(j, path, "kind"), path + "/kind");
    UniMap u;
    if (kind == "identity") {
        u.kind = UniMap::Kind::identity;
    } else if (kind == "bijection") {
        u.kind = UniMap::Kind::bijection;
        const Json& prs = expect(j, path, "pairs");
        expect_array(prs, path + "/pairs");
        for (std::size_t i = 0; i < prs.size(); ++i) {
            std::string p = path + "/pairs/" + std::to_string(i);
            ETS from = read_ets(expect(prs[i], p, "from"), p + "/from");
            ETS to = read_ets(expect(prs[i], p, "to"), p + "/to");
            if (!u.bijection.emplace(from, to).second)
                bad(p + "/from", "duplicate source state");
        }
    } else if (kind == "table") {
        u.kind = UniMap::Kind::table;
        const Json& ent = expect(j, path, "entries");
        expect_array(ent, path + "/entries");
        for (std::size_t i = 0; i < ent.size(); ++i) {
            std::string p = path + "/entries/" + std::to_string(i);
            ETSSet from = read_ets_set(expect(ent[i], p, "from"), p + "/from");
            ETSSet to = read_ets_set(expect(ent[i], p, "to"), p + "/to");
            if (!u.table.emplace(std::move(from), std::move(to)).second)
                bad(p + "/from", "duplicate table entry");
        }
    } else if (kind == "rule") {
        u.kind = UniMap::Kind::rule;
        u.rule = expect_string(expect(j, path, "rule"), path + "/rule");
        if (j.contains("omega")) u.omega = read_ets(j["omega"], path + "/omega");
        if (j.contains("alpha")) u.alpha = expect_int(j["alpha"], path + "/alpha");
        if (j.contains("beta")) u.beta = expect_int(j["beta"], path + "/beta");
    } else {
        bad(path + "/kind", "unknown unification kind " + kind);
    }
    return u;
}

inline ChangeableSet read_changeable_set(const Json& j, const std::string& path) {
    ChangeableSet z;
    const Json& fr = expect(j, path, "frames");
    if (!fr.is_object()) bad(path + "/frames", "expected an object");
    for (auto it = fr.begin(); it != fr.end(); ++it)
        z.frames.emplace(it.key(), read_bcs(it.value(), path + "/frames/" + it.key()));
    const Json& un = expect(j, path, "uni");
    expect_array(un, path + "/uni");
    for (std::size_t i = 0; i < un.size(); ++i) {
        std::string p = path + "/uni/" + std::to_string(i);
        FrameId from = expect_token(expect(un[i], p, "from"), p + "/from");
        FrameId to = expect_token(expect(un[i], p, "to"), p + "/to");
        if (!z.frames.count(from)) bad(p + "/from", "unknown frame " + from);
        if (!z.frames.count(to)) bad(p + "/to", "unknown frame " + to);
        if (!z.uni.emplace(std::pair{from, to},
                           read_uni_map(expect(un[i], p, "map"), p + "/map"))
                 .second)
            bad(p, "duplicate mapping " + from + " -> " + to);
    }
    return z;
}

// ---- per-structure writers ----------------------------------------------

template <class S>
Json write_token_set(const S& s) {
    Json out = Json::array();
    for (const auto& x : s) out.push_back(x);
    return out;
}

inline Json write_oriented_set(const OrientedSet& os) {
    Json arrows = Json::array();
    for (const auto& [from, to] : os.arrow)
        arrows.push_back(Json{{"from", from}, {"to", to}});
    return Json{{"arrows", arrows}, {"elements", write_token_set(os.elements)}};
}

inline Json write_chronologization(const Chronologization& c) {
    Json psi = Json::object();
    for (const auto& [t, xs] : c.psi) psi[t] = write_token_set(xs);
    return Json{{"psi", psi}, {"scale", write_token_set(c.scale.points)}};
}

inline Json write_simultaneity(const Simultaneity& y) {
    Json classes = Json::array();
    for (const auto& cls : y.classes) classes.push_back(write_token_set(cls));
    return Json{{"classes", classes}};
}

inline Json write_trajectory_system(const TrajectorySystem& ts) {
    Json trs = Json::array();
    for (const auto& r : ts.trajectories) {
        Json pts = Json::object();
        for (const auto& [t, x] : r.points) pts[t] = x;
        trs.push_back(Json{{"id", r.id}, {"points", pts}});
    }
    return Json{{"scale", write_token_set(ts.scale.points)},
                {"trajectories", trs},
                {"universe", write_token_set(ts.universe)}};
}

inline Json write_pcs(const PrimitiveChangeableSet& p) {
    return Json{{"chronologization", write_chronologization(p.chron)},
                {"oriented-set", write_oriented_set(p.os)}};
}

inline Json write_ets(const ETS& w) {
    return Json{{"elem", w.elem}, {"time", w.time}};
}

inline Json write_ets_set(const ETSSet& ws) {
    Json out = Json::array();
    for (const auto& w : ws) out.push_back(write_ets(w));
    return out;
}

inline Json write_bcs(const BasicChangeableSet& b) {
    Json base = Json::array();
    for (const auto& [w1, w2] : b.bs_arrow)
        base.push_back(Json{{"from", write_ets(w1)}, {"to", write_ets(w2)}});
    return Json{{"base", base}, {"pcs", write_pcs(b.pcs)}};
}

inline Json write_trans_map(const TransMap& u) {
    Json prs = Json::array();
    for (const auto& [from, to] : u.mapping)
        prs.push_back(Json{{"from", write_ets(from)}, {"to", write_ets(to)}});
    return Json{{"pairs", prs}};
}

inline Json write_uni_map(const UniMap& u) {
    switch (u.kind) {
        case UniMap::Kind::identity:
            return Json{{"kind", "identity"}};
        case UniMap::Kind::bijection: {
            Json prs = Json::array();
            for (const auto& [from, to] : u.bijection)
                prs.push_back(Json{{"from", write_ets(from)}, {"to", write_ets(to)}});
            return Json{{"kind", "bijection"}, {"pairs", prs}};
        }
        case UniMap::Kind::table: {
            Json ent = Json::array();
            for (const auto& [from, to] : u.table)
                ent.push_back(
                    Json{{"from", write_ets_set(from)}, {"to", write_ets_set(to)}});
            return Json{{"entries", ent}, {"kind", "table"}};
        }
        case UniMap::Kind::rule: {
            Json out{{"kind", "rule"}, {"rule", u.rule}};
            out["alpha"] = u.alpha;
            out["beta"] = u.beta;
            if (!u.omega.time.empty() || !u.omega.elem.empty())
                out["omega"] = write_ets(u.omega);
            return out;
        }
    }
    fail("BadParams", "unreachable unification kind");
}

inline Json write_changeable_set(const ChangeableSet& z) {
    Json frames = Json::object();
    for (const auto& [id, b] : z.frames) frames[id] = write_bcs(b);
    Json uni = Json::array();
    for (const auto& [key, u] : z.uni)
        uni.push_back(Json{{"from", key.first},
                           {"map", write_uni_map(u)},
                           {"to", key.second}});
    return Json{{"frames", frames}, {"uni", uni}};
}

}  // namespace jio

// ---- document level -----------------------------------------------------

inline Document parse_document(const std::string& bytes) {
    Json j;
    try {
        j = Json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        fail("MalformedJson", e.what());
    }
    std::string version = jio::expect_string(jio::expect(j, "", "version"), "/version");
    if (version != kFormatVersion)
        fail("UnsupportedVersion", "got " + version + ", want " + kFormatVersion);
    std::string kind = jio::expect_string(jio::expect(j, "", "kind"), "/kind");
    const Json& body = jio::expect(j, "", "body");

    Document doc;
    doc.kind = kind;
    if (kind == "oriented-set")
        doc.body = jio::read_oriented_set(body, "/body");
    else if (kind == "chronologization")
        doc.body = jio::read_chronologization(body, "/body");
    else if (kind == "simultaneity")
        doc.body = jio::read_simultaneity(body, "/body");
    else if (kind == "trajectory-system")
        doc.body = jio::read_trajectory_system(body, "/body");
    else if (kind == "pcs")
        doc.body = jio::read_pcs(body, "/body");
    else if (kind == "bcs")
        doc.body = jio::read_bcs(body, "/body");
    else if (kind == "changeable-set")
        doc.body = jio::read_changeable_set(body, "/body");
    else if (kind == "trans-map")
        doc.body = jio::read_trans_map(body, "/body");
    else
        jio::bad("/kind", "unknown document kind " + kind);
    return doc;
}

inline Json document_json(const Document& doc) {
    Json body = std::visit(
        [](const auto& s) -> Json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, OrientedSet>)
                return jio::write_oriented_set(s);
            else if constexpr (std::is_same_v<T, Chronologization>)
                return jio::write_chronologization(s);
            else if constexpr (std::is_same_v<T, Simultaneity>)
                return jio::write_simultaneity(s);
            else if constexpr (std::is_same_v<T, TrajectorySystem>)
                return jio::write_trajectory_system(s);
            else if constexpr (std::is_same_v<T, PrimitiveChangeableSet>)
                return jio::write_pcs(s);
            else if constexpr (std::is_same_v<T, BasicChangeableSet>)
                return jio::write_bcs(s);
            else if constexpr (std::is_same_v<T, ChangeableSet>)
                return jio::write_changeable_set(s);
            else
                return jio::write_trans_map(s);
        },
        doc.body);
    return Json{{"body", body}, {"kind", doc.kind}, {"version", kFormatVersion}};
}

// Canonical bytes: sorted keys (writers emit them sorted), sorted
// collections, two-space indent, trailing newline.
inline std::string serialize(const Document& doc) {
    return document_json(doc).dump(2) + "\n";
}

template <class S>
Document make_document(const std::string& kind, const S& s) {
    Document d;
    d.kind = kind;
    d.body = s;
    return d;
}

}  // namespace chset
