#pragma once

// oracles.hpp: independent brute-force verifiers.  Each oracle recomputes a
// result straight from the definitions, with none of the reductions the
// fast-path algorithms use, so the two sides can be diffed against each
// other on small instances.

#include <cstddef>
#include <functional>

#include "chset/chronology.hpp"
#include "chset/core.hpp"
#include "chset/multiverse.hpp"
#include "chset/oriented_set.hpp"
#include "chset/simultaneity.hpp"
#include "chset/visibility.hpp"

namespace chset {

// ---- monotone chronologization search -----------------------------------
//
// Exhaustive search for a monotone time with scale length <= scale_bound.
// Only nonempty psi values are tried: dropping an empty moment from a
// monotone time keeps it a monotone time, so if any exists within the bound
// one with nonempty values exists within the bound too.
//
// The search walks scale positions left to right and prunes with the two
// local consequences of monotonicity: no strict one-way change inside one
// moment, and no strict one-way change leading from a later moment back to
// an earlier (or equal) one.  Coverage and separation are checked on full
// assignments only.

inline std::optional<Chronologization> oracle_monotone_chron(
    const OrientedSet& os, std::size_t scale_bound,
    std::size_t max_elems = 6) {
    if (scale_bound == 0 || scale_bound > 6)
        fail("BadBounds", "scale bound must be between 1 and 6");
    if (os.elements.size() > max_elems)
        fail("SizeLimitExceeded", "oracle capped at " + std::to_string(max_elems) +
                                      " elements");

    // one-way strict changes drive every pruning rule
    auto one_way = [&os](const ElemId& x, const ElemId& y) {
        return os.related(x, y) && !os.related(y, x);
    };

    // candidate psi values: nonempty, no internal one-way change
    std::vector<ElemSet> candidates;
    for (const auto& sub : all_subsets(os.elements, /*include_empty=*/false)) {
        bool clean = true;
        for (const auto& x : sub) {
            for (const auto& y : sub)
                if (one_way(x, y)) { clean = false; break; }
            if (!clean) break;
        }
        if (clean) candidates.push_back(sub);
    }
    // compat[a][b]: b may appear strictly after a (no one-way change from a
    // member of b back to a member of a)
    const std::size_t nc = candidates.size();
    std::vector<std::vector<bool>> compat(nc, std::vector<bool>(nc, true));
    for (std::size_t a = 0; a < nc; ++a)
        for (std::size_t b = 0; b < nc; ++b)
            for (const auto& x : candidates[b]) {
                for (const auto& y : candidates[a])
                    if (one_way(x, y)) { compat[a][b] = false; break; }
                if (!compat[a][b]) break;
            }

    std::vector<std::size_t> seq;
    std::optional<Chronologization> found;
    std::function<bool(std::size_t)> dfs = [&](std::size_t length) {
        if (seq.size() == length) {
            Chronologization c;
            for (std::size_t i = 0; i < seq.size(); ++i) {
                TimeId t = "t" + std::to_string(i + 1);
                c.scale.points.push_back(t);
                c.psi[t] = candidates[seq[i]];
            }
            if (!is_time(os, c)) return false;
            TimeKindFlags k = time_kind(os, c);
            if (!k.monotone) return false;
            found = std::move(c);
            return true;
        }
        for (std::size_t b = 0; b < nc; ++b) {
            bool ok = true;
            for (std::size_t pos : seq)
                if (!compat[pos][b]) { ok = false; break; }
            if (!ok) continue;
            seq.push_back(b);
            if (dfs(length)) return true;
            seq.pop_back();
        }
        return false;
    };
    for (std::size_t length = 1; length <= scale_bound; ++length) {
        seq.clear();
        if (dfs(length)) return found;
    }
    return std::nullopt;
}

// ---- internal time uniqueness search ------------------------------------
//
// All strictly monotone times generating exactly Y, with scale lengths from
// |Y| up to |Y| + slack.  A generating time's psi values are classes of Y
// and must cover Y, so the search enumerates class sequences.  |Y| is a
// lower length bound (coverage); the slack covers repeated classes — the
// uniqueness claim is checked within this explicitly reported window.

inline std::vector<Chronologization> oracle_internal_time_candidates(
    const OrientedSet& os, const Simultaneity& Y, std::size_t slack = 2) {
    std::vector<ElemSet> classes(Y.classes.begin(), Y.classes.end());
    const std::size_t n = classes.size();
    if (n == 0) fail("BadBounds", "empty simultaneity");
    if (n > 6) fail("SizeLimitExceeded", "oracle capped at 6 classes");

    std::vector<Chronologization> out;
    for (std::size_t length = n; length <= n + slack; ++length) {
        std::vector<std::size_t> idx(length, 0);
        while (true) {
            Chronologization c;
            std::set<std::size_t> used(idx.begin(), idx.end());
            if (used.size() == n) {  // must generate all of Y
                for (std::size_t i = 0; i < length; ++i) {
                    TimeId t = "u" + std::to_string(i);
                    c.scale.points.push_back(t);
                    c.psi[t] = classes[idx[i]];
                }
                if (is_time(os, c) && time_kind(os, c).strictly_monotone &&
                    simultaneity_of(os, c) == Y)
                    out.push_back(std::move(c));
            }
            std::size_t i = 0;
            while (i < length) {
                if (++idx[i] < n) break;
                idx[i] = 0;
                ++i;
            }
            if (i == length) break;
        }
    }
    return out;
}

// ---- visibility from raw definitions ------------------------------------
//
// Frame grades recomputed with no reductions: normal visibility scans every
// nonempty subsystem (not just singletons), precise visibility scans every
// nonempty subsystem and every partition of it (not just BS and its
// partitions).

inline Grade oracle_frame_grade(const ChangeableSet& z, const FrameId& l,
                                const FrameId& m, std::size_t max_states = 8) {
    ETSSet bs_l = frame_states(z, l);
    if (bs_l.size() > max_states)
        fail("SizeLimitExceeded", "oracle capped at " + std::to_string(max_states) +
                                      " states per frame");
    if (apply_uni(z, l, m, bs_l).empty()) return Grade::invisible;
    for (const auto& A : all_subsets(bs_l, /*include_empty=*/false))
        if (apply_uni(z, l, m, A).empty()) return Grade::visible;
    for (const auto& A : all_subsets(bs_l, /*include_empty=*/false))
        if (!detail::partitions_disjointly(z, l, m, A)) return Grade::normally_visible;
    return Grade::precisely_visible;
}

struct GradeDiff {
    FrameId l, m;
    Grade fast, oracle;
};

inline std::vector<GradeDiff> oracle_visibility_diff(const ChangeableSet& z,
                                                     std::size_t max_states = 8) {
    std::vector<GradeDiff> out;
    for (const auto& l : z.frame_ids())
        for (const auto& m : z.frame_ids()) {
            Grade fast = frame_grade(z, l, m);
            Grade slow = oracle_frame_grade(z, l, m, max_states);
            if (fast != slow) out.push_back({l, m, fast, slow});
        }
    return out;
}

}  // namespace chset
