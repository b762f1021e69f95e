#pragma once

// oriented_set.hpp: finite oriented sets — a nonempty base set together with
// a reflexive "directing relation of changes".  (x, y) in `arrow` is read
// "y <- x": state y results from transformations of state x.
//
// Transitive subsets, chains, maximal chains and maximal transitive sets are
// enumerated exhaustively; the classical existence arguments via Zorn's lemma
// become total searches because everything here is finite.

#include <cstddef>

#include "chset/core.hpp"

namespace chset {

struct OrientedSet {
    ElemSet elements;   // Bs: nonempty
    ArrowSet arrow;     // reflexive, subset of elements x elements

    // "y <- x": y results from x.
    bool related(const ElemId& x, const ElemId& y) const {
        return arrow.count({x, y}) != 0;
    }

    bool operator==(const OrientedSet& other) const = default;
};

struct ClassifyFlags {
    bool chain_oriented = false;  // the whole base is a chain
    bool cyclic = false;          // every ordered pair is related
    bool anti_cyclical = false;   // mutual relation forces equality

    bool operator==(const ClassifyFlags& other) const = default;
};

// Default guard for the exponential subset enumerations below.
inline constexpr std::size_t kDefaultEnumElemLimit = 16;

inline OrientedSet make_oriented_set(const ElemSet& elements,
                                     const ArrowSet& arrows,
                                     bool auto_reflexive) {
    if (elements.empty()) fail("EmptyBase", "an oriented set needs a nonempty base");
    for (const auto& [from, to] : arrows) {
        if (!elements.count(from) || !elements.count(to))
            fail("DanglingArrow", "arrow (" + from + " -> " + to +
                                      ") leaves the element set");
    }
    OrientedSet os{elements, arrows};
    for (const auto& x : elements) {
        if (!os.arrow.count({x, x})) {
            if (auto_reflexive)
                os.arrow.insert({x, x});
            else
                fail("MissingReflexive", "element " + x + " lacks its reflexive arrow");
        }
    }
    return os;
}

inline void require_subset(const OrientedSet& os, const ElemSet& sub,
                           const char* what) {
    if (sub.empty()) fail("NotSubset", std::string(what) + " must be nonempty");
    if (!is_subset(sub, os.elements))
        fail("NotSubset", std::string(what) + " is not a subset of the base");
}

// N is transitive: z<-y and y<-x inside N imply z<-x.
inline bool is_transitive_subset(const OrientedSet& os, const ElemSet& N) {
    require_subset(os, N, "transitive-candidate");
    for (const auto& x : N)
        for (const auto& y : N)
            for (const auto& z : N)
                if (os.related(x, y) && os.related(y, z) && !os.related(x, z))
                    return false;
    return true;
}

// L is a chain: transitive and totally comparable under <-.
inline bool is_chain(const OrientedSet& os, const ElemSet& L) {
    if (!is_transitive_subset(os, L)) return false;
    for (const auto& x : L)
        for (const auto& y : L)
            if (!os.related(x, y) && !os.related(y, x)) return false;
    return true;
}

namespace detail {

inline void guard_enumeration(const OrientedSet& os, std::size_t limit_elems) {
    if (os.elements.size() > limit_elems)
        fail("SizeLimitExceeded",
             "exhaustive subset enumeration capped at " +
                 std::to_string(limit_elems) + " elements");
}

}  // namespace detail

// Every nonempty chain, in canonical (size, lexicographic) order, truncated
// at `limit`.  With exhaustive=true a truncation is an error instead.
inline std::vector<ElemSet> all_chains(const OrientedSet& os, std::size_t limit,
                                       bool exhaustive = false,
                                       std::size_t limit_elems = kDefaultEnumElemLimit) {
    if (limit == 0) fail("BadBounds", "all_chains needs limit > 0");
    detail::guard_enumeration(os, limit_elems);
    std::vector<ElemSet> chains;
    for (const auto& sub : all_subsets(os.elements, /*include_empty=*/false)) {
        if (!is_chain(os, sub)) continue;
        if (chains.size() == limit) {
            if (exhaustive)
                fail("LimitExceeded",
                     "more than " + std::to_string(limit) + " chains exist");
            return chains;
        }
        chains.push_back(sub);
    }
    return chains;
}

// Chains not strictly contained in another chain.  Finiteness guarantees a
// nonempty answer (every chain extends to a maximal one).
inline std::set<ElemSet> maximal_chains(const OrientedSet& os,
                                        std::size_t limit_elems = kDefaultEnumElemLimit) {
    detail::guard_enumeration(os, limit_elems);
    std::vector<ElemSet> chains;
    for (const auto& sub : all_subsets(os.elements, /*include_empty=*/false))
        if (is_chain(os, sub)) chains.push_back(sub);
    std::set<ElemSet> maximal;
    for (const auto& c : chains) {
        bool dominated = false;
        for (const auto& d : chains)
            if (c != d && is_subset(c, d)) { dominated = true; break; }
        if (!dominated) maximal.insert(c);
    }
    return maximal;
}

// Subset-maximal transitive subsets.
inline std::set<ElemSet> maximal_transitive_sets(
    const OrientedSet& os, std::size_t limit_elems = kDefaultEnumElemLimit) {
    detail::guard_enumeration(os, limit_elems);
    std::vector<ElemSet> transitive;
    for (const auto& sub : all_subsets(os.elements, /*include_empty=*/false))
        if (is_transitive_subset(os, sub)) transitive.push_back(sub);
    std::set<ElemSet> maximal;
    for (const auto& c : transitive) {
        bool dominated = false;
        for (const auto& d : transitive)
            if (c != d && is_subset(c, d)) { dominated = true; break; }
        if (!dominated) maximal.insert(c);
    }
    return maximal;
}

// Deterministic greedy extension of a chain to a maximal chain: repeatedly
// add the canonically smallest element that keeps the set a chain.
inline ElemSet extend_chain_to_maximal(const OrientedSet& os, const ElemSet& L) {
    if (!is_chain(os, L)) fail("NotAChain", "input is not a chain");
    ElemSet chain = L;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& x : os.elements) {
            if (chain.count(x)) continue;
            ElemSet candidate = chain;
            candidate.insert(x);
            if (is_chain(os, candidate)) {
                chain = std::move(candidate);
                grew = true;
                break;
            }
        }
    }
    return chain;
}

inline ClassifyFlags classify_oriented_set(const OrientedSet& os) {
    ClassifyFlags flags;
    flags.chain_oriented = is_chain(os, os.elements);
    flags.cyclic = true;
    flags.anti_cyclical = true;
    for (const auto& x : os.elements)
        for (const auto& y : os.elements) {
            if (!os.related(x, y) || !os.related(y, x)) flags.cyclic = false;
            if (os.related(x, y) && os.related(y, x) && x != y)
                flags.anti_cyclical = false;
        }
    return flags;
}

// Classes of the cyclic equivalence x =o= y (x<-y and y<-x), in the linear
// order induced by <- on the quotient.  Only meaningful on chain oriented
// sets, where the quotient order is total.
inline std::vector<ElemSet> cyclic_equivalence_partition(const OrientedSet& os) {
    if (!classify_oriented_set(os).chain_oriented)
        fail("NotChainOriented", "cyclic equivalence needs a chain oriented set");
    std::vector<ElemSet> classes;
    ElemSet seen;
    for (const auto& x : os.elements) {
        if (seen.count(x)) continue;
        ElemSet cls;
        for (const auto& y : os.elements)
            if (os.related(x, y) && os.related(y, x)) cls.insert(y);
        seen.insert(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    // Order classes: class A precedes class B when B results from A
    // (b <- a) without the converse.
    std::sort(classes.begin(), classes.end(),
              [&os](const ElemSet& A, const ElemSet& B) {
                  const ElemId& a = *A.begin();
                  const ElemId& b = *B.begin();
                  return os.related(a, b) && !os.related(b, a);
              });
    return classes;
}

}  // namespace chset
