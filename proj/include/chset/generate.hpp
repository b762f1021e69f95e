#pragma once

// generate.hpp: seeded random instance generators for the property suites
// and the `oracle generate` subcommand.  Everything is driven by a single
// std::mt19937 so a (seed, bounds) pair reproduces the exact same stream of
// structures on every platform (mt19937 output is specified bit for bit).
//
// All generators emit structures that pass their own validity checks by
// construction:
//   - oriented sets get their reflexive closure,
//   - primitive/basic changeable sets come from random trajectory systems
//     (optionally with the base pruned down while keeping the realization
//     axiom intact),
//   - changeable sets are built from relation kernels: each unification
//     mapping is the image map of a relation between state sets, and the
//     family of relations is closed under composition, which yields the
//     monotonicity and transport axioms for free.

#include <cstddef>
#include <random>

#include "chset/changeable_base.hpp"
#include "chset/core.hpp"
#include "chset/chronology.hpp"
#include "chset/multiverse.hpp"
#include "chset/oriented_set.hpp"

namespace chset {

using Rng = std::mt19937;

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool chance(Rng& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

inline OrientedSet random_oriented_set(Rng& rng, std::size_t max_elems) {
    if (max_elems == 0) fail("BadBounds", "max_elems must be positive");
    std::size_t n = pick(rng, 1, max_elems);
    ElemSet elems;
    for (std::size_t i = 1; i <= n; ++i) elems.insert("e" + std::to_string(i));
    ArrowSet arrows;
    double density = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
    for (const auto& x : elems)
        for (const auto& y : elems)
            if (x == y || chance(rng, density)) arrows.insert({x, y});
    return make_oriented_set(elems, arrows, /*auto_reflexive=*/true);
}

inline TrajectorySystem random_trajectory_system(Rng& rng, std::size_t max_elems,
                                                 std::size_t max_moments = 4) {
    if (max_elems == 0 || max_moments == 0)
        fail("BadBounds", "bounds must be positive");
    TrajectorySystem ts;
    std::size_t n = pick(rng, 1, max_elems);
    std::size_t k = pick(rng, 1, max_moments);
    std::vector<ElemId> elems;
    for (std::size_t i = 1; i <= n; ++i) {
        elems.push_back("e" + std::to_string(i));
        ts.universe.insert(elems.back());
    }
    for (std::size_t i = 1; i <= k; ++i) ts.scale.points.push_back("t" + std::to_string(i));

    // Random partial functions scale -> universe; a final sweep adds
    // one-point trajectories so the ranges cover the whole universe.
    std::size_t count = pick(rng, 1, n + 1);
    for (std::size_t r = 0; r < count; ++r) {
        Trajectory tr;
        tr.id = "r" + std::to_string(r);
        for (const auto& t : ts.scale.points)
            if (chance(rng, 0.7)) tr.points[t] = elems[pick(rng, 0, n - 1)];
        if (tr.points.empty())
            tr.points[ts.scale.points[pick(rng, 0, k - 1)]] = elems[pick(rng, 0, n - 1)];
        ts.trajectories.push_back(std::move(tr));
    }
    ElemSet visited;
    for (const auto& tr : ts.trajectories)
        for (const auto& [t, x] : tr.points) visited.insert(x);
    std::size_t extra = 0;
    for (const auto& x : ts.universe) {
        if (visited.count(x)) continue;
        Trajectory tr;
        tr.id = "cover" + std::to_string(extra++);
        tr.points[ts.scale.points[pick(rng, 0, k - 1)]] = x;
        ts.trajectories.push_back(std::move(tr));
    }
    return ts;
}

inline PrimitiveChangeableSet random_pcs(Rng& rng, std::size_t max_elems,
                                         std::size_t max_moments = 4) {
    return atp_from_trajectories(random_trajectory_system(rng, max_elems, max_moments));
}

// Random basic changeable set with |BS| <= max_states.  Start from the full
// formal-sequence base of a random primitive set, then randomly drop
// non-reflexive pairs as long as every strict base-level change keeps at
// least one witnessing pair (the realization axiom).
inline BasicChangeableSet random_bcs(Rng& rng, std::size_t max_states) {
    if (max_states == 0) fail("BadBounds", "max_states must be positive");
    for (;;) {
        PrimitiveChangeableSet p = random_pcs(rng, std::max<std::size_t>(max_states / 2, 1));
        if (ets_of(p).size() > max_states) continue;
        BasicChangeableSet full = basic_from_formal(p);
        ETSPairSet rel = full.bs_arrow;
        std::vector<ETSPair> candidates;
        for (const auto& pr : rel)
            if (pr.first != pr.second) candidates.push_back(pr);
        std::shuffle(candidates.begin(), candidates.end(), rng);
        for (const auto& pr : candidates) {
            if (!chance(rng, 0.5)) continue;
            ETSPairSet trimmed = rel;
            trimmed.erase(pr);
            // keep the pair when dropping it would orphan its base change
            bool witnessed = false;
            for (const auto& [w1, w2] : trimmed)
                if (w1 != w2 && bs(w1) == bs(pr.first) && bs(w2) == bs(pr.second)) {
                    witnessed = true;
                    break;
                }
            if (witnessed || bs(pr.first) == bs(pr.second)) rel = std::move(trimmed);
        }
        return make_basic(p, rel);
    }
}

namespace detail {

// A unification mapping as the image map of a relation between two state
// sets, serialized as an extensional table over all subsets of the source.
inline UniMap relation_table(const ETSSet& dom, const std::set<ETSPair>& rel) {
    UniMap u;
    u.kind = UniMap::Kind::table;
    for (const auto& A : all_subsets(dom)) {
        ETSSet img;
        for (const auto& w : A)
            for (const auto& [a, b] : rel)
                if (a == w) img.insert(b);
        u.table[A] = std::move(img);
    }
    return u;
}

}  // namespace detail

// Random changeable set with <= max_frames frames of <= max_states states
// each.  Off-diagonal mappings are relation image maps built by one of two
// composition-safe schemes:
//   - forward: arbitrary relations only from earlier frames to later ones
//     (in frame-id order).  Compositions stay forward and the closure under
//     composition is taken explicitly, so transport holds and no
//     composition can reach a diagonal.
//   - hub: every frame gets a partial injection of its states into a shared
//     index set, and R(l,m) links states with equal hub index.  Hub
//     relations compose into hub relations and land inside the identity on
//     the diagonal.
// Both schemes therefore satisfy the three unification axioms outright; no
// rejection sampling is involved.
inline ChangeableSet random_cset(Rng& rng, std::size_t max_frames,
                                 std::size_t max_states) {
    if (max_frames == 0) fail("BadBounds", "max_frames must be positive");
    std::size_t nf = pick(rng, 1, max_frames);
    ChangeableSet z;
    std::vector<FrameId> ids;
    for (std::size_t i = 1; i <= nf; ++i) {
        FrameId id = "l" + std::to_string(i);
        ids.push_back(id);
        z.frames.emplace(id, random_bcs(rng, max_states));
    }

    std::map<std::pair<FrameId, FrameId>, std::set<ETSPair>> rel;
    if (chance(rng, 0.5)) {
        // forward scheme
        for (std::size_t i = 0; i < nf; ++i)
            for (std::size_t j = i + 1; j < nf; ++j) {
                ETSSet later = frame_states(z, ids[j]);
                std::vector<ETS> targets(later.begin(), later.end());
                for (const auto& w : frame_states(z, ids[i]))
                    if (chance(rng, 0.6))
                        rel[{ids[i], ids[j]}].insert(
                            {w, targets[pick(rng, 0, targets.size() - 1)]});
            }
        // close the forward family under composition
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t i = 0; i < nf; ++i)
                for (std::size_t j = i + 1; j < nf; ++j)
                    for (std::size_t k = j + 1; k < nf; ++k)
                        for (const auto& [a, b] : rel[{ids[i], ids[j]}])
                            for (const auto& [c, d] : rel[{ids[j], ids[k]}])
                                if (b == c &&
                                    rel[{ids[i], ids[k]}].insert({a, d}).second)
                                    grew = true;
        }
    } else {
        // hub scheme: h_l injective per frame; R(l,m) matches hub indices
        std::map<FrameId, std::map<ETS, std::size_t>> hub;
        for (const auto& l : ids) {
            std::vector<std::size_t> slots;
            for (std::size_t s = 0; s < 2 * max_states; ++s) slots.push_back(s);
            std::shuffle(slots.begin(), slots.end(), rng);
            std::size_t next = 0;
            for (const auto& w : frame_states(z, l))
                if (chance(rng, 0.7)) hub[l][w] = slots[next++];
        }
        for (const auto& l : ids)
            for (const auto& m : ids) {
                if (l == m) continue;
                for (const auto& [w, s] : hub[l])
                    for (const auto& [w2, s2] : hub[m])
                        if (s == s2) rel[{l, m}].insert({w, w2});
            }
    }

    for (const auto& l : ids)
        for (const auto& m : ids)
            z.uni[{l, m}] = (l == m) ? uni_identity()
                                     : detail::relation_table(frame_states(z, l),
                                                              rel[{l, m}]);
    return z;
}

}  // namespace chset
