#pragma once

// simultaneity.hpp: simultaneities on oriented sets and the machinery around
// them — the monotonously-sequential relation (m)<- between sets of states,
// its transitive closure within a system of sets, the unrepeatable / precise
// / monotone-connected predicates, generating times, internal time, and
// chronometric processes.

#include <cstddef>

#include "chset/chronology.hpp"
#include "chset/core.hpp"
#include "chset/oriented_set.hpp"

namespace chset {

struct Simultaneity {
    std::set<ElemSet> classes;  // union must equal the base of the subject set

    bool operator==(const Simultaneity& other) const = default;
};

// Transitive closure of single-step monotone sequentiality restricted to a
// system Q of sets.  (A, B) in `pairs` reads "B (m)<<- A over Q": B is
// transitively monotonously sequential to A through members of Q.
struct MSeqRelation {
    std::set<ElemSet> over;
    std::set<std::pair<ElemSet, ElemSet>> pairs;

    bool has(const ElemSet& A, const ElemSet& B) const {
        return pairs.count({A, B}) != 0;
    }
};

struct SimultaneityViolation {
    std::string kind;    // "uncovered"
    std::string detail;  // element token
};

inline std::vector<SimultaneityViolation> check_simultaneity(
    const OrientedSet& os, const Simultaneity& Y) {
    for (const auto& cls : Y.classes)
        for (const auto& x : cls)
            if (!os.elements.count(x))
                fail("ForeignElement", "class contains foreign element " + x);
    ElemSet covered;
    for (const auto& cls : Y.classes) covered.insert(cls.begin(), cls.end());
    std::vector<SimultaneityViolation> out;
    for (const auto& x : os.elements)
        if (!covered.count(x)) out.push_back({"uncovered", x});
    return out;
}

inline bool is_simultaneity(const OrientedSet& os, const Simultaneity& Y) {
    return check_simultaneity(os, Y).empty();
}

// The set of simultaneous states generated by a time: Y = { psi(t) } as a
// set, duplicates collapsed.
inline Simultaneity simultaneity_of(const OrientedSet& os,
                                    const Chronologization& c) {
    if (!is_time(os, c)) fail("NotATime", "simultaneity_of needs a valid time");
    Simultaneity Y;
    for (const auto& t : c.scale.points) Y.classes.insert(c.at(t));
    return Y;
}

// "B (m)<- A": B is monotonously sequential to A — some strict one-way
// change leads from a state of A to a state of B.
inline bool m_seq(const OrientedSet& os, const ElemSet& A, const ElemSet& B) {
    for (const auto& x : A)
        for (const auto& y : B)
            if (os.related(x, y) && !os.related(y, x)) return true;
    return false;
}

// Transitive closure (path length >= 1 through members of Q) of m_seq,
// computed Warshall-style on the finite system Q.
inline MSeqRelation m_seq_closure(const OrientedSet& os,
                                  const std::set<ElemSet>& Q) {
    MSeqRelation rel;
    rel.over = Q;
    std::vector<ElemSet> nodes(Q.begin(), Q.end());
    const std::size_t n = nodes.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            reach[i][j] = m_seq(os, nodes[i], nodes[j]);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (reach[i][j]) rel.pairs.insert({nodes[i], nodes[j]});
    return rel;
}

// No two members of S are mutually (transitively) monotonously sequential.
inline bool is_unrepeatable(const OrientedSet& os, const std::set<ElemSet>& S) {
    MSeqRelation rel = m_seq_closure(os, S);
    for (const auto& A : S)
        for (const auto& B : S)
            if (rel.has(A, B) && rel.has(B, A)) return false;
    return true;
}

// Y "fixes" every change: each strict change y <- x is separated by two
// distinct classes ordered by the closure.
inline bool is_precise(const OrientedSet& os, const Simultaneity& Y) {
    if (!is_simultaneity(os, Y)) fail("NotASimultaneity", "union of classes != base");
    MSeqRelation rel = m_seq_closure(os, Y.classes);
    for (const auto& [x, y] : os.arrow) {
        if (x == y) continue;
        bool fixed = false;
        for (const auto& A : Y.classes) {
            if (!A.count(x)) continue;
            for (const auto& B : Y.classes)
                if (B.count(y) && A != B && rel.has(A, B)) { fixed = true; break; }
            if (fixed) break;
        }
        if (!fixed) return false;
    }
    return true;
}

// Any two distinct classes are comparable in the closure.
inline bool is_monotone_connected(const OrientedSet& os, const Simultaneity& Y) {
    if (!is_simultaneity(os, Y)) fail("NotASimultaneity", "union of classes != base");
    MSeqRelation rel = m_seq_closure(os, Y.classes);
    for (const auto& A : Y.classes)
        for (const auto& B : Y.classes)
            if (A != B && !rel.has(A, B) && !rel.has(B, A)) return false;
    return true;
}

namespace detail {

// Derived oriented set (Y, <-) over the classes of a simultaneity:
// B <- A iff A = B = empty, or some state of B results from a state of A.
// Classes are encoded as indexed tokens "k<i>" so the order-core machinery
// applies; `decode` maps a token back to its class.
struct ClassOrientedSet {
    OrientedSet os;
    std::vector<ElemSet> classes;  // index i <-> token "k<i>"

    const ElemSet& decode(const ElemId& token) const {
        return classes[std::stoul(token.substr(1))];
    }
};

inline ClassOrientedSet class_oriented_set(const OrientedSet& os,
                                           const Simultaneity& Y) {
    ClassOrientedSet out;
    out.classes.assign(Y.classes.begin(), Y.classes.end());
    ElemSet tokens;
    for (std::size_t i = 0; i < out.classes.size(); ++i)
        tokens.insert("k" + std::to_string(i));
    ArrowSet arrows;
    for (std::size_t i = 0; i < out.classes.size(); ++i)
        for (std::size_t j = 0; j < out.classes.size(); ++j) {
            const ElemSet& A = out.classes[i];
            const ElemSet& B = out.classes[j];
            bool related = (A.empty() && B.empty());
            if (!related)
                for (const auto& x : A) {
                    for (const auto& y : B)
                        if (os.related(x, y)) { related = true; break; }
                    if (related) break;
                }
            if (related)
                arrows.insert({"k" + std::to_string(i), "k" + std::to_string(j)});
        }
    out.os = make_oriented_set(tokens, arrows, /*auto_reflexive=*/true);
    return out;
}

// The "separation" condition (Rp): every strict change y <- x is covered by
// two distinct classes x in A, y in B.
inline bool separation_holds(const OrientedSet& os, const Simultaneity& Y) {
    for (const auto& [x, y] : os.arrow) {
        if (x == y) continue;
        bool separated = false;
        for (const auto& A : Y.classes) {
            if (!A.count(x)) continue;
            for (const auto& B : Y.classes)
                if (B.count(y) && A != B) { separated = true; break; }
            if (separated) break;
        }
        if (!separated) return false;
    }
    return true;
}

// Separating branch of the generating-time construction: quasi one-point
// chronologize the derived class set and read each singleton moment back as
// the class itself.
inline Chronologization generating_time_separating(const OrientedSet& os,
                                                   const Simultaneity& Y) {
    ClassOrientedSet cos = class_oriented_set(os, Y);
    Chronologization big = chronologize_any(cos.os);
    Chronologization out;
    out.scale = big.scale;
    for (const auto& t : big.scale.points) {
        const ElemSet& singleton = big.at(t);
        out.psi[t] = cos.decode(*singleton.begin());
    }
    return out;
}

}  // namespace detail

// A time whose generated simultaneity is exactly Y.  If Y separates every
// strict change by distinct classes, chronologize the derived class set
// directly; otherwise adjoin the reserved synthetic element, augment every
// class holding an internal strict change, build the time there, and
// intersect back down to the original base.
inline Chronologization generating_time(const OrientedSet& os,
                                        const Simultaneity& Y) {
    if (!is_simultaneity(os, Y)) fail("NotASimultaneity", "union of classes != base");
    if (detail::separation_holds(os, Y))
        return detail::generating_time_separating(os, Y);

    OrientedSet aug = os;
    aug.elements.insert(kAugElem);
    aug.arrow.insert({kAugElem, kAugElem});
    Simultaneity augY;
    for (const auto& B : Y.classes) {
        augY.classes.insert(B);
        bool internal_change = false;
        for (const auto& x : B) {
            for (const auto& y : B)
                if (x != y && os.related(x, y)) { internal_change = true; break; }
            if (internal_change) break;
        }
        if (internal_change) {
            ElemSet augmented = B;
            augmented.insert(kAugElem);
            augY.classes.insert(augmented);
        }
    }
    Chronologization lifted = detail::generating_time_separating(aug, augY);
    Chronologization out;
    out.scale = lifted.scale;
    for (const auto& [t, xs] : lifted.psi)
        out.psi[t] = set_intersection(xs, os.elements);
    return out;
}

// Internal time of a precisely-unrepeatable, monotone-connected
// simultaneity: the scale *is* Y, linearly ordered by the closure, and
// psi(t) = t.  Unique up to equivalence of chronologizations.
inline Chronologization internal_time(const OrientedSet& os,
                                      const Simultaneity& Y) {
    if (!is_precise(os, Y)) fail("PreconditionFailed", "is_precise");
    if (!is_unrepeatable(os, Y.classes)) fail("PreconditionFailed", "is_unrepeatable");
    if (!is_monotone_connected(os, Y)) fail("PreconditionFailed", "is_monotone_connected");

    MSeqRelation rel = m_seq_closure(os, Y.classes);
    std::vector<ElemSet> ordered(Y.classes.begin(), Y.classes.end());
    // Unrepeatable + monotone-connected makes the closure a strict linear
    // order; sort the classes by it.
    std::sort(ordered.begin(), ordered.end(),
              [&rel](const ElemSet& A, const ElemSet& B) { return rel.has(A, B); });
    for (std::size_t i = 0; i + 1 < ordered.size(); ++i)
        if (!rel.has(ordered[i], ordered[i + 1]))
            fail("NotLinear", "closure failed to order the classes (internal)");

    Chronologization out;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        TimeId t = "y" + std::to_string(i);
        out.scale.points.push_back(t);
        out.psi[t] = ordered[i];
    }
    return out;
}

// A chronometric process: a sub-process h of psi whose closure ordering
// recovers the time order exactly.
using TimeMap = std::map<TimeId, ElemSet>;

inline bool is_chronometric_process(const OrientedSet& os,
                                    const Chronologization& c, const TimeMap& h) {
    for (const auto& t : c.scale.points)
        if (!h.count(t)) fail("DomainMismatch", "h undefined at " + t);
    for (const auto& [t, xs] : h) {
        if (!c.psi.count(t)) fail("DomainMismatch", "h defined off the scale at " + t);
        if (!is_subset(xs, c.at(t))) return false;
    }
    std::set<ElemSet> range;
    for (const auto& [t, xs] : h) range.insert(xs);
    MSeqRelation rel = m_seq_closure(os, range);
    const auto& pts = c.scale.points;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            const ElemSet& ht = h.at(pts[i]);
            const ElemSet& htau = h.at(pts[j]);
            bool lhs = i < j;
            bool rhs = rel.has(ht, htau) && ht != htau;
            if (lhs != rhs) return false;
        }
    return true;
}

// Search for a chronometric process of the time c.  Fast path: when c
// generates a precisely-unrepeatable monotone-connected simultaneity, the
// time is internal iff it is strictly monotone, with h = psi as witness.
// Otherwise exhaust all sub-assignments h(t) within `bound` candidates.
inline std::optional<TimeMap> find_chronometric_process(
    const OrientedSet& os, const Chronologization& c,
    unsigned long long bound = 1000000ULL) {
    Simultaneity Y = simultaneity_of(os, c);
    if (is_precise(os, Y) && is_unrepeatable(os, Y.classes) &&
        is_monotone_connected(os, Y)) {
        TimeKindFlags k = time_kind(os, c);
        if (!k.strictly_monotone) return std::nullopt;
        TimeMap h;
        for (const auto& t : c.scale.points) h[t] = c.at(t);
        // By construction of internal times this must verify; keep the check
        // as a consistency guard.
        if (!is_chronometric_process(os, c, h))
            fail("NotLinear", "fast path produced a non-chronometric h (internal)");
        return h;
    }

    // Exhaustive search: every h(t) ranges over subsets of psi(t).
    const auto& pts = c.scale.points;
    std::vector<std::vector<ElemSet>> choices;
    unsigned long long total = 1;
    for (const auto& t : pts) {
        auto subs = all_subsets(c.at(t));
        if (total > bound / subs.size())
            total = bound + 1;  // saturate instead of overflowing
        else
            total *= subs.size();
        if (total > bound)
            fail("SearchSpaceTooLarge",
                 "more than " + std::to_string(bound) + " candidate processes");
        choices.push_back(std::move(subs));
    }
    std::vector<std::size_t> idx(pts.size(), 0);
    while (true) {
        TimeMap h;
        for (std::size_t i = 0; i < pts.size(); ++i) h[pts[i]] = choices[i][idx[i]];
        if (is_chronometric_process(os, c, h)) return h;
        std::size_t i = 0;
        while (i < idx.size()) {
            if (++idx[i] < choices[i].size()) break;
            idx[i] = 0;
            ++i;
        }
        if (i == idx.size()) break;
    }
    return std::nullopt;
}

}  // namespace chset
