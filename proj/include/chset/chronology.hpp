#pragma once

// chronology.hpp: times on oriented sets.  A chronologization is a finite
// linear scale of moments plus a map psi from moments to subsets of the base.
// It is a *time* when (1) every element shows up at some moment, and
// (2) every strict change y <- x is temporally separated: x appears strictly
// before y somewhere on the scale.
//
// The four constructions (trivial / cyclic / chain / any) follow the
// classical chronologization proofs literally, with the nonconstructive
// "choose any linear order" steps replaced by canonical token order.

#include <array>
#include <cstddef>

#include "chset/core.hpp"
#include "chset/oriented_set.hpp"

namespace chset {

struct LinearScale {
    std::vector<TimeId> points;  // position = rank in <=; all distinct

    std::size_t rank(const TimeId& t) const {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i] == t) return i;
        fail("UnknownMoment", "moment " + t + " is not on the scale");
    }

    bool operator==(const LinearScale& other) const = default;
};

struct Chronologization {
    LinearScale scale;
    std::map<TimeId, ElemSet> psi;  // total on scale points

    const ElemSet& at(const TimeId& t) const {
        auto it = psi.find(t);
        if (it == psi.end()) fail("UnknownMoment", "psi undefined at " + t);
        return it->second;
    }

    bool operator==(const Chronologization& other) const = default;
};

struct TimeKindFlags {
    bool quasi_one_point = false;
    bool one_point = false;
    bool monotone = false;
    bool incessant = false;
    bool strictly_monotone = false;

    bool operator==(const TimeKindFlags& other) const = default;
};

struct TimeViolation {
    std::string kind;     // "uncovered" | "unseparated"
    std::string detail;   // element, or "x -> y" pair
};

inline void require_psi_total(const Chronologization& c) {
    for (const auto& t : c.scale.points)
        if (!c.psi.count(t)) fail("UnknownMoment", "psi undefined at " + t);
    if (c.psi.size() != c.scale.points.size())
        fail("UnknownMoment", "psi defined off the scale");
}

// Empty result iff c is a time on os.
inline std::vector<TimeViolation> check_time(const OrientedSet& os,
                                             const Chronologization& c) {
    require_psi_total(c);
    for (const auto& [t, xs] : c.psi)
        for (const auto& x : xs)
            if (!os.elements.count(x))
                fail("ForeignElement", "psi(" + t + ") contains foreign element " + x);

    std::vector<TimeViolation> violations;
    // (1) coverage
    for (const auto& x : os.elements) {
        bool covered = false;
        for (const auto& t : c.scale.points)
            if (c.at(t).count(x)) { covered = true; break; }
        if (!covered) violations.push_back({"uncovered", x});
    }
    // (2) temporal separation of every strict change
    for (const auto& [x, y] : os.arrow) {
        if (x == y) continue;
        bool separated = false;
        for (std::size_t i = 0; i < c.scale.points.size() && !separated; ++i)
            for (std::size_t j = i + 1; j < c.scale.points.size(); ++j)
                if (c.at(c.scale.points[i]).count(x) &&
                    c.at(c.scale.points[j]).count(y)) {
                    separated = true;
                    break;
                }
        if (!separated) violations.push_back({"unseparated", x + " -> " + y});
    }
    return violations;
}

inline bool is_time(const OrientedSet& os, const Chronologization& c) {
    return check_time(os, c).empty();
}

inline TimeKindFlags time_kind(const OrientedSet& os, const Chronologization& c) {
    if (!is_time(os, c)) fail("NotATime", "time_kind needs a valid time");
    const auto& pts = c.scale.points;
    TimeKindFlags k;

    // quasi one-point: psi(t) is a singleton at every moment.
    k.quasi_one_point = true;
    for (const auto& t : pts)
        if (c.at(t).size() != 1) { k.quasi_one_point = false; break; }

    // one-point: quasi one-point, and moving forward in time always follows
    // the directing relation: x1 at t1, x2 at t2, t1 <= t2 imply x2 <- x1.
    k.one_point = k.quasi_one_point;
    if (k.one_point) {
        for (std::size_t i = 0; i < pts.size() && k.one_point; ++i)
            for (std::size_t j = i; j < pts.size(); ++j) {
                const ElemId& x1 = *c.at(pts[i]).begin();
                const ElemId& x2 = *c.at(pts[j]).begin();
                if (!os.related(x1, x2)) { k.one_point = false; break; }
            }
    }

    // monotone: every witnessed strict one-way change points strictly
    // forward in time (for all witness moments).
    k.monotone = true;
    for (std::size_t i = 0; i < pts.size() && k.monotone; ++i)
        for (std::size_t j = 0; j < pts.size() && k.monotone; ++j)
            for (const auto& x1 : c.at(pts[i])) {
                bool stop = false;
                for (const auto& x2 : c.at(pts[j]))
                    if (os.related(x1, x2) && !os.related(x2, x1) && !(i < j)) {
                        k.monotone = false;
                        stop = true;
                        break;
                    }
                if (stop) break;
            }

    // incessant: psi is never constant across a nondegenerate stretch of
    // moments; on a finite scale that means adjacent moments always differ.
    k.incessant = true;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (c.at(pts[i]) == c.at(pts[i + 1])) { k.incessant = false; break; }

    k.strictly_monotone = k.monotone && k.incessant;
    return k;
}

// psi(t) := Bs on k >= 2 fresh moments.
inline Chronologization trivial_chronologization(const OrientedSet& os,
                                                 std::size_t k) {
    if (k < 2) fail("BadSize", "a trivial chronologization needs >= 2 moments");
    Chronologization c;
    for (std::size_t i = 0; i < k; ++i) {
        TimeId t = "t" + std::to_string(i + 1);
        c.scale.points.push_back(t);
        c.psi[t] = os.elements;
    }
    return c;
}

namespace detail {

// One-point chronologization of a cyclic oriented set: two tagged passes
// over the elements in canonical order, each moment carrying one element.
// Token scheme "c:<class-rank>:<copy>:<elem>" keeps scales self-describing.
inline Chronologization cyclic_scale(const OrientedSet& os,
                                     std::size_t class_rank) {
    Chronologization c;
    for (int copy = 1; copy <= 2; ++copy)
        for (const auto& x : os.elements) {
            TimeId t = "c:" + std::to_string(class_rank) + ":" +
                       std::to_string(copy) + ":" + x;
            c.scale.points.push_back(t);
            c.psi[t] = {x};
        }
    return c;
}

}  // namespace detail

inline Chronologization chronologize_cyclic(const OrientedSet& os) {
    if (!classify_oriented_set(os).cyclic)
        fail("NotCyclic", "cyclic chronologization needs a cyclic oriented set");
    return detail::cyclic_scale(os, 0);
}

// One-point chronologization of a chain oriented set: partition by the
// cyclic equivalence, chronologize every class as a cyclic set, concatenate
// the per-class scales in class order.
inline Chronologization chronologize_chain(const OrientedSet& os) {
    if (!classify_oriented_set(os).chain_oriented)
        fail("NotChainOriented", "chain chronologization needs a chain oriented set");
    Chronologization out;
    std::size_t rank = 0;
    for (const auto& cls : cyclic_equivalence_partition(os)) {
        Chronologization part = detail::cyclic_scale(OrientedSet{cls, {}}, rank++);
        out.scale.points.insert(out.scale.points.end(), part.scale.points.begin(),
                                part.scale.points.end());
        out.psi.insert(part.psi.begin(), part.psi.end());
    }
    return out;
}

// Quasi one-point chronologization of an arbitrary oriented set: one-point
// chronologize every maximal chain (a chain oriented sub-set) and
// concatenate the scales in canonical chain order.  Per-chain scale tokens
// get an extra "m:<index>:" prefix so moments stay unique even when chains
// share elements.
inline Chronologization chronologize_any(const OrientedSet& os) {
    Chronologization out;
    std::size_t index = 0;
    for (const auto& chain : maximal_chains(os)) {
        ArrowSet sub_arrows;
        for (const auto& [x, y] : os.arrow)
            if (chain.count(x) && chain.count(y)) sub_arrows.insert({x, y});
        OrientedSet sub{chain, sub_arrows};
        Chronologization part = chronologize_chain(sub);
        for (const auto& t : part.scale.points) {
            TimeId tagged = "m:" + std::to_string(index) + ":" + t;
            out.scale.points.push_back(tagged);
            out.psi[tagged] = part.psi[t];
        }
        ++index;
    }
    return out;
}

// A triple blocking every monotone chronologization: x2 <- x1 one-way,
// x3 <- x2 one-way, and x1 <- x3 with x1 != x3.
inline std::optional<std::array<ElemId, 3>> monotone_obstruction(
    const OrientedSet& os) {
    for (const auto& x1 : os.elements)
        for (const auto& x2 : os.elements)
            for (const auto& x3 : os.elements)
                if (os.related(x1, x2) && !os.related(x2, x1) &&
                    os.related(x2, x3) && !os.related(x3, x2) &&
                    os.related(x3, x1) && x1 != x3)
                    return std::array<ElemId, 3>{x1, x2, x3};
    return std::nullopt;
}

// Finite linear scales of equal length admit exactly one order isomorphism
// (rank to rank), so equivalence is a positional comparison of psi.
inline bool chronologizations_equivalent(const Chronologization& c1,
                                         const Chronologization& c2) {
    if (c1.scale.points.size() != c2.scale.points.size()) return false;
    for (std::size_t i = 0; i < c1.scale.points.size(); ++i)
        if (c1.at(c1.scale.points[i]) != c2.at(c2.scale.points[i])) return false;
    return true;
}

// Restriction of a time to an embedded sub oriented set:
// psi'(t) = psi(t) /\ Bs(sub).
inline Chronologization restrict_time(const OrientedSet& sub,
                                      const OrientedSet& os,
                                      const Chronologization& c) {
    if (!is_subset(sub.elements, os.elements) || !is_subset(sub.arrow, os.arrow))
        fail("NotEmbedded", "sub structure is not embedded in the host");
    Chronologization out;
    out.scale = c.scale;
    for (const auto& [t, xs] : c.psi) out.psi[t] = set_intersection(xs, sub.elements);
    return out;
}

enum class RescaleMode { trim, embed };

// trim: drop moments outside `keep`; only moments with psi = empty may go.
// embed: extend onto a larger scale containing the old one as an ordered
// subsequence; new moments get psi = empty ("moments of full death").
inline Chronologization rescale_time(const Chronologization& c, RescaleMode mode,
                                     const LinearScale& arg) {
    Chronologization out;
    if (mode == RescaleMode::trim) {
        std::set<TimeId> keep(arg.points.begin(), arg.points.end());
        if (keep.empty()) fail("BadSize", "trim needs a nonempty kept scale");
        for (const auto& t : arg.points)
            if (!c.psi.count(t)) fail("NotAnEmbedding", "kept moment " + t + " unknown");
        for (const auto& t : c.scale.points) {
            if (keep.count(t)) {
                out.scale.points.push_back(t);
                out.psi[t] = c.at(t);
            } else if (!c.at(t).empty()) {
                fail("TrimDropsNonEmpty", "moment " + t + " still has states");
            }
        }
        return out;
    }
    // embed: arg must contain c.scale as an order-embedded subsequence.
    std::size_t next = 0;
    for (const auto& t : arg.points) {
        if (next < c.scale.points.size() && c.scale.points[next] == t) {
            out.psi[t] = c.at(t);
            ++next;
        } else {
            if (c.psi.count(t))
                fail("NotAnEmbedding", "moment " + t + " reordered by embedding");
            out.psi[t] = {};
        }
        out.scale.points.push_back(t);
    }
    if (next != c.scale.points.size())
        fail("NotAnEmbedding", "target scale does not contain the source scale");
    return out;
}

}  // namespace chset
