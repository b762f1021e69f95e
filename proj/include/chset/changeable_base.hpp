#pragma once

// changeable_base.hpp: primitive and basic changeable sets.
//
// A primitive changeable set is an oriented set plus a valid time on it.
// Its elementary-time states (ETS) are the pairs (moment, state) with the
// state present at that moment.  A basic changeable set adds a "base of
// elementary processes": a reflexive relation on the ETSs that is contained
// in the formal-sequence relation and realizes every base-level change.
// Trajectory systems generate both levels (Atp / At), fate lines are the
// maximal ETS chains, and the round-trip theorem rebuilds a basic changeable
// set from its own fate lines.

#include <cstddef>

#include "chset/chronology.hpp"
#include "chset/core.hpp"
#include "chset/oriented_set.hpp"

namespace chset {

struct ETS {
    TimeId time;
    ElemId elem;

    auto operator<=>(const ETS& other) const = default;
};

inline const TimeId& tm(const ETS& w) { return w.time; }
inline const ElemId& bs(const ETS& w) { return w.elem; }

using ETSSet = std::set<ETS>;
using ETSPair = std::pair<ETS, ETS>;  // (source, result): second <- first
using ETSPairSet = std::set<ETSPair>;

struct PrimitiveChangeableSet {
    OrientedSet os;
    Chronologization chron;

    bool operator==(const PrimitiveChangeableSet& other) const = default;
};

inline PrimitiveChangeableSet make_pcs(const OrientedSet& os,
                                       const Chronologization& chron) {
    if (!is_time(os, chron)) fail("NotATime", "chronologization is not a time");
    return {os, chron};
}

// BS(P) = { (t, x) : x in psi(t) }.
inline ETSSet ets_of(const PrimitiveChangeableSet& p) {
    ETSSet out;
    for (const auto& t : p.chron.scale.points)
        for (const auto& x : p.chron.at(t)) out.insert({t, x});
    return out;
}

// w2 is formally sequential to w1: equal, or the base-level change
// bs(w2) <- bs(w1) holds with tm(w1) strictly earlier.
inline bool formally_sequential(const PrimitiveChangeableSet& p, const ETS& w1,
                                const ETS& w2) {
    ETSSet states = ets_of(p);
    if (!states.count(w1) || !states.count(w2))
        fail("UnknownState", "formally_sequential on foreign states");
    if (w1 == w2) return true;
    return p.os.related(bs(w1), bs(w2)) &&
           p.chron.scale.rank(tm(w1)) < p.chron.scale.rank(tm(w2));
}

// ---- trajectory systems ------------------------------------------------

struct Trajectory {
    std::string id;
    std::map<TimeId, ElemId> points;  // nonempty; domain inside the scale

    bool operator==(const Trajectory& other) const = default;
};

struct TrajectorySystem {
    LinearScale scale;
    ElemSet universe;
    std::vector<Trajectory> trajectories;

    bool operator==(const TrajectorySystem& other) const = default;
};

inline void check_trajectory_system(const TrajectorySystem& ts) {
    std::set<TimeId> moments(ts.scale.points.begin(), ts.scale.points.end());
    ElemSet visited;
    for (const auto& r : ts.trajectories) {
        if (r.points.empty())
            fail("CoverageViolation", "trajectory " + r.id + " has empty domain");
        for (const auto& [t, x] : r.points) {
            if (!moments.count(t))
                fail("CoverageViolation",
                     "trajectory " + r.id + " leaves the scale at " + t);
            visited.insert(x);
        }
    }
    if (visited != ts.universe)
        fail("CoverageViolation", "union of trajectory ranges != universe");
}

// Atp: the unique primitive changeable set of a trajectory system.
// y <- x iff some trajectory visits x at t and y at tau with t <= tau;
// psi(t) collects the states the trajectories occupy at t.
inline PrimitiveChangeableSet atp_from_trajectories(const TrajectorySystem& ts) {
    check_trajectory_system(ts);
    ArrowSet arrows;
    for (const auto& x : ts.universe) arrows.insert({x, x});
    for (const auto& r : ts.trajectories)
        for (const auto& [t, x] : r.points)
            for (const auto& [tau, y] : r.points)
                if (ts.scale.rank(t) <= ts.scale.rank(tau)) arrows.insert({x, y});
    OrientedSet os = make_oriented_set(ts.universe, arrows, /*auto_reflexive=*/true);
    Chronologization chron;
    chron.scale = ts.scale;
    for (const auto& t : ts.scale.points) chron.psi[t] = {};
    for (const auto& r : ts.trajectories)
        for (const auto& [t, x] : r.points) chron.psi[t].insert(x);
    return make_pcs(os, chron);
}

// ---- basic changeable sets ---------------------------------------------

struct BaseViolation {
    int axiom;           // 1 reflexivity, 2 inclusion in <-(f), 3 realization
    std::string detail;  // witness description
};

struct BasicChangeableSet {
    PrimitiveChangeableSet pcs;
    ETSPairSet bs_arrow;  // reflexive; subset of formally-sequential pairs

    bool related(const ETS& w1, const ETS& w2) const {
        return bs_arrow.count({w1, w2}) != 0;
    }

    bool operator==(const BasicChangeableSet& other) const = default;
};

inline std::string show_ets(const ETS& w) { return "(" + w.time + "," + w.elem + ")"; }

inline std::vector<BaseViolation> check_base(const PrimitiveChangeableSet& p,
                                             const ETSPairSet& rel) {
    ETSSet states = ets_of(p);
    std::vector<BaseViolation> out;
    for (const auto& [w1, w2] : rel)
        if (!states.count(w1) || !states.count(w2))
            fail("UnknownState", "base relation mentions a foreign state");
    // (1) reflexivity on all of BS(P)
    for (const auto& w : states)
        if (!rel.count({w, w})) out.push_back({1, "missing " + show_ets(w) + " loop"});
    // (2) inclusion in the formal-sequence relation
    for (const auto& [w1, w2] : rel)
        if (!formally_sequential(p, w1, w2))
            out.push_back({2, show_ets(w2) + " <- " + show_ets(w1) +
                                  " is not formally sequential"});
    // (3) realization: every strict base-level change is witnessed
    for (const auto& [x, y] : p.os.arrow) {
        if (x == y) continue;
        bool realized = false;
        for (const auto& [w1, w2] : rel)
            if (bs(w1) == x && bs(w2) == y && w1 != w2) { realized = true; break; }
        if (!realized) out.push_back({3, y + " <- " + x + " has no witnessing pair"});
    }
    return out;
}

inline BasicChangeableSet make_basic(const PrimitiveChangeableSet& p,
                                     const ETSPairSet& rel) {
    auto violations = check_base(p, rel);
    if (!violations.empty()) {
        std::string detail;
        for (const auto& v : violations)
            detail += "axiom " + std::to_string(v.axiom) + ": " + v.detail + "; ";
        fail("InvalidBase", detail);
    }
    return {p, rel};
}

// The largest base: all formally sequential pairs.
inline BasicChangeableSet basic_from_formal(const PrimitiveChangeableSet& p) {
    ETSSet states = ets_of(p);
    ETSPairSet rel;
    for (const auto& w1 : states)
        for (const auto& w2 : states)
            if (formally_sequential(p, w1, w2)) rel.insert({w1, w2});
    return make_basic(p, rel);
}

// At: the unique basic changeable set of a trajectory system.  Two states
// are related iff they lie on one trajectory in time order.
inline BasicChangeableSet at_from_trajectories(const TrajectorySystem& ts) {
    PrimitiveChangeableSet p = atp_from_trajectories(ts);
    ETSPairSet rel;
    for (const auto& w : ets_of(p)) rel.insert({w, w});
    for (const auto& r : ts.trajectories)
        for (const auto& [t, x] : r.points)
            for (const auto& [tau, y] : r.points)
                if (ts.scale.rank(t) <= ts.scale.rank(tau))
                    rel.insert({ETS{t, x}, ETS{tau, y}});
    return make_basic(p, rel);
}

namespace detail {

// Encode the ETS level as an oriented set so the order-core chain machinery
// applies.  Tokens are "<time>\x1f<elem>"; the scale and element tokens never
// contain the separator because JSON input forbids control characters.
inline constexpr char kEtsSep = '\x1f';

inline ElemId encode_ets(const ETS& w) { return w.time + kEtsSep + w.elem; }

inline ETS decode_ets(const ElemId& token) {
    auto pos = token.find(kEtsSep);
    return {token.substr(0, pos), token.substr(pos + 1)};
}

inline OrientedSet ets_oriented_set(const BasicChangeableSet& b) {
    ElemSet tokens;
    for (const auto& w : ets_of(b.pcs)) tokens.insert(encode_ets(w));
    ArrowSet arrows;
    for (const auto& [w1, w2] : b.bs_arrow)
        arrows.insert({encode_ets(w1), encode_ets(w2)});
    return make_oriented_set(tokens, arrows, /*auto_reflexive=*/true);
}

}  // namespace detail

// Fate lines: maximal chains of (BS(B), <-).
inline std::set<ETSSet> fate_lines(const BasicChangeableSet& b) {
    OrientedSet ets_os = detail::ets_oriented_set(b);
    std::set<ETSSet> out;
    for (const auto& chain : maximal_chains(ets_os)) {
        ETSSet line;
        for (const auto& token : chain) line.insert(detail::decode_ets(token));
        out.insert(line);
    }
    return out;
}

inline bool united_by_fate(const BasicChangeableSet& b, const ETS& w1,
                           const ETS& w2) {
    ETSSet states = ets_of(b.pcs);
    if (!states.count(w1) || !states.count(w2))
        fail("UnknownState", "united_by_fate on foreign states");
    return b.related(w1, w2) || b.related(w2, w1);
}

inline bool is_maximum_trajectory(const TrajectorySystem& ts, const Trajectory& r) {
    bool member = false;
    for (const auto& rho : ts.trajectories)
        if (rho.points == r.points) { member = true; break; }
    if (!member) fail("NotInSystem", "trajectory is not part of the system");
    for (const auto& rho : ts.trajectories) {
        if (rho.points == r.points) continue;
        bool contains = true;
        for (const auto& [t, x] : r.points) {
            auto it = rho.points.find(t);
            if (it == rho.points.end() || it->second != x) { contains = false; break; }
        }
        if (contains && rho.points.size() > r.points.size()) return false;
    }
    return true;
}

// Rebuild a trajectory system from the fate lines of b.  Fate lines are
// functional in time (no two states of a line share a moment), so each line
// reads back as an abstract trajectory.
inline TrajectorySystem fate_line_system(const BasicChangeableSet& b) {
    TrajectorySystem ts;
    ts.scale = b.pcs.chron.scale;
    ts.universe = b.pcs.os.elements;
    std::size_t index = 0;
    for (const auto& line : fate_lines(b)) {
        Trajectory r;
        r.id = "ld" + std::to_string(index++);
        for (const auto& w : line) {
            if (r.points.count(tm(w)))
                fail("NotLinear", "fate line visits one moment twice (internal)");
            r.points[tm(w)] = bs(w);
        }
        ts.trajectories.push_back(std::move(r));
    }
    return ts;
}

// Round-trip theorem: At(Tm(B), Ld(B)) = B, component for component.
inline bool roundtrip_holds(const BasicChangeableSet& b) {
    BasicChangeableSet rebuilt = at_from_trajectories(fate_line_system(b));
    return rebuilt == b;
}

// ---- changeable systems and processes ----------------------------------

struct ChangeableSystem {
    ETSSet states;  // subset of BS(B)

    bool operator==(const ChangeableSystem& other) const = default;
};

using Process = std::map<TimeId, ElemSet>;  // total on the scale

// S~(t) = { x : (t, x) in S }.
inline Process process_of(const BasicChangeableSet& b, const ChangeableSystem& S) {
    ETSSet states = ets_of(b.pcs);
    for (const auto& w : S.states)
        if (!states.count(w))
            fail("ForeignState", "system contains foreign state " + show_ets(w));
    Process proc;
    for (const auto& t : b.pcs.chron.scale.points) proc[t] = {};
    for (const auto& w : S.states) proc[tm(w)].insert(bs(w));
    return proc;
}

// The unique system whose process is proc.
inline ChangeableSystem system_of(const BasicChangeableSet& b, const Process& proc) {
    ChangeableSystem S;
    for (const auto& t : b.pcs.chron.scale.points) {
        auto it = proc.find(t);
        if (it == proc.end()) continue;  // absent moments read as empty
        if (!is_subset(it->second, b.pcs.chron.at(t)))
            fail("NotAProcess", "process leaves psi at moment " + t);
        for (const auto& x : it->second) S.states.insert({t, x});
    }
    return S;
}

inline bool member_at(const BasicChangeableSet& b, const ElemId& x, const TimeId& t,
                      const ChangeableSystem& S) {
    (void)b;
    return S.states.count({t, x}) != 0;
}

// ---- images under transforming mappings --------------------------------

struct TransMap {
    std::map<ETS, ETS> mapping;  // total on BS(B); image times stay on the scale

    const ETS& at(const ETS& w) const {
        auto it = mapping.find(w);
        if (it == mapping.end()) fail("NotTotal", "u undefined at " + show_ets(w));
        return it->second;
    }
};

// Image of a basic changeable set under a transforming mapping u.
// BS(U[B]) = u(BS(B)); the scale is unchanged; image states are related iff
// equal or their preimages are united by fate with strictly increasing time.
inline BasicChangeableSet image_basic(const BasicChangeableSet& b, const TransMap& u) {
    ETSSet states = ets_of(b.pcs);
    std::set<TimeId> moments(b.pcs.chron.scale.points.begin(),
                             b.pcs.chron.scale.points.end());
    for (const auto& w : states) {
        const ETS& img = u.at(w);
        if (!moments.count(tm(img)))
            fail("TimeOutOfScale", "image moment " + tm(img) + " is off the scale");
    }

    // psi_{U[B]}(t) = { bs(u(w)) : tm(u(w)) = t }
    Chronologization chron;
    chron.scale = b.pcs.chron.scale;
    for (const auto& t : chron.scale.points) chron.psi[t] = {};
    ElemSet image_elems;
    for (const auto& w : states) {
        const ETS& img = u.at(w);
        chron.psi[tm(img)].insert(bs(img));
        image_elems.insert(bs(img));
    }

    // ETS-level relation first; the base-level relation is read off from it.
    ETSSet image_states;
    for (const auto& w : states) image_states.insert(u.at(w));
    ETSPairSet rel;
    for (const auto& w : image_states) rel.insert({w, w});
    for (const auto& w1 : states)
        for (const auto& w2 : states) {
            if (!united_by_fate(b, w1, w2)) continue;
            const ETS& i1 = u.at(w1);
            const ETS& i2 = u.at(w2);
            std::size_t r1 = chron.scale.rank(tm(i1));
            std::size_t r2 = chron.scale.rank(tm(i2));
            if (r1 < r2) rel.insert({i1, i2});
            if (r2 < r1) rel.insert({i2, i1});
        }

    ArrowSet arrows;
    for (const auto& x : image_elems) arrows.insert({x, x});
    for (const auto& [w1, w2] : rel)
        if (w1 != w2) arrows.insert({bs(w1), bs(w2)});
    OrientedSet os = make_oriented_set(image_elems, arrows, /*auto_reflexive=*/true);
    return make_basic(make_pcs(os, chron), rel);
}

}  // namespace chset
