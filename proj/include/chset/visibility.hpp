#pragma once

// visibility.hpp: the visibility calculus on changeable sets.
//
// A changeable system A of frame l, watched from frame m, is
//   invisible          when its image is empty,
//   visible            when its image is nonempty,
//   normally visible   when every nonempty subsystem is visible
//                      (equivalently, by monotonicity: every singleton is),
//   precisely visible  when normally visible and every partition of A into
//                      nonempty blocks maps to a disjoint partition of the
//                      image.
// Frame-level grades reduce to the system A = BS(l).  Precise visibility of
// a whole changeable set is equivalent to the composition law
// un(m,p) o un(l,m) = un(l,p) holding everywhere.

#include <cstddef>
#include <functional>

#include "chset/core.hpp"
#include "chset/multiverse.hpp"

namespace chset {

enum class Grade { invisible, visible, normally_visible, precisely_visible };

inline const char* grade_name(Grade g) {
    switch (g) {
        case Grade::invisible: return "invisible";
        case Grade::visible: return "visible";
        case Grade::normally_visible: return "normally_visible";
        case Grade::precisely_visible: return "precisely_visible";
    }
    return "?";
}

struct FramePartition {
    std::set<std::set<FrameId>> blocks;

    bool operator==(const FramePartition& other) const = default;
};

namespace detail {

// Visit every partition of `items` into nonempty blocks, in restricted
// growth string order.  Visitor returns false to abort the scan.
template <class T, class Visitor>
void for_each_partition(const std::vector<T>& items, Visitor&& visit) {
    const std::size_t n = items.size();
    if (n == 0) return;
    std::vector<std::size_t> rgs(n, 0);  // block index of each item
    while (true) {
        std::size_t blocks = 0;
        for (std::size_t i = 0; i < n; ++i) blocks = std::max(blocks, rgs[i] + 1);
        std::vector<std::set<T>> part(blocks);
        for (std::size_t i = 0; i < n; ++i) part[rgs[i]].insert(items[i]);
        if (!visit(part)) return;
        // next restricted growth string: rgs[i] may rise to
        // 1 + max(rgs[0..i-1])
        std::size_t i = n;
        while (i > 1) {
            --i;
            std::size_t cap = 0;
            for (std::size_t j = 0; j < i; ++j) cap = std::max(cap, rgs[j] + 1);
            if (rgs[i] < cap) {
                ++rgs[i];
                for (std::size_t j = i + 1; j < n; ++j) rgs[j] = 0;
                i = 0;
                break;
            }
        }
        if (i != 0) return;  // wrapped past the last string
    }
}

// Precise visibility of A from m, by the partition definition.  Assumes A
// is already known to be normally visible.
inline bool partitions_disjointly(const ChangeableSet& z, const FrameId& l,
                                  const FrameId& m, const ETSSet& A) {
    ETSSet image = apply_uni(z, l, m, A);
    std::vector<ETS> items(A.begin(), A.end());
    bool ok = true;
    for_each_partition(items, [&](const std::vector<ETSSet>& part) {
        ETSSet seen;
        for (const auto& block : part) {
            ETSSet img = apply_uni(z, l, m, block);
            for (const auto& w : img)
                if (!seen.insert(w).second) { ok = false; return false; }
        }
        if (seen != image) { ok = false; return false; }
        return true;
    });
    return ok;
}

}  // namespace detail

inline constexpr std::size_t kDefaultPartitionLimit = 10;

// Grade of one changeable system A of frame l as seen from frame m.
inline Grade system_grade(const ChangeableSet& z, const FrameId& l, const FrameId& m,
                          const ETSSet& A,
                          std::size_t partition_limit = kDefaultPartitionLimit) {
    if (apply_uni(z, l, m, A).empty()) return Grade::invisible;
    // normal visibility via the singleton reduction (sound by monotonicity)
    for (const auto& w : A)
        if (apply_uni(z, l, m, {w}).empty()) return Grade::visible;
    if (A.size() > partition_limit)
        fail("PartitionLimitExceeded",
             "precise-visibility scan capped at " + std::to_string(partition_limit) +
                 " states");
    if (!detail::partitions_disjointly(z, l, m, A)) return Grade::normally_visible;
    return Grade::precisely_visible;
}

// Frame-level grade: the grade of the full system BS(l), which decides the
// grade of every system at once (empty image forces every subsystem empty;
// singleton visibility decides normal visibility of everything).
inline Grade frame_grade(const ChangeableSet& z, const FrameId& l, const FrameId& m,
                         std::size_t partition_limit = kDefaultPartitionLimit) {
    return system_grade(z, l, m, frame_states(z, l), partition_limit);
}

inline bool frame_visible(const ChangeableSet& z, const FrameId& l, const FrameId& m) {
    return frame_grade(z, l, m) >= Grade::visible;
}

inline bool frame_normally_visible(const ChangeableSet& z, const FrameId& l,
                                   const FrameId& m) {
    return frame_grade(z, l, m) >= Grade::normally_visible;
}

inline bool frame_precisely_visible(const ChangeableSet& z, const FrameId& l,
                                    const FrameId& m) {
    return frame_grade(z, l, m) == Grade::precisely_visible;
}

// A changeable set is precisely visible iff every frame is normally visible
// from every other (and then automatically precisely visible).
inline bool is_precisely_visible_cset(const ChangeableSet& z) {
    for (const auto& l : z.frame_ids())
        for (const auto& m : z.frame_ids())
            if (!frame_normally_visible(z, l, m)) return false;
    return true;
}

// Composition criterion: un(m,p) o un(l,m) = un(l,p) for all triples and all
// (scanned) subsets.  Equivalent to precise visibility of the whole set.
inline bool composition_criterion(const ChangeableSet& z, const CheckMode& mode = {}) {
    if (mode.exhaustive)
        for (const auto& [id, b] : z.frames)
            if (ets_of(b.pcs).size() > mode.exhaustive_limit)
                fail("SizeLimitExceeded", "frame " + id + " exceeds the scan limit");
    for (const auto& l : z.frame_ids()) {
        auto subsets = detail::scan_subsets(frame_states(z, l), mode);
        for (const auto& m : z.frame_ids())
            for (const auto& p : z.frame_ids())
                for (const auto& A : subsets)
                    if (apply_uni(z, m, p, apply_uni(z, l, m, A)) !=
                        apply_uni(z, l, p, A))
                        return false;
    }
    return true;
}

// Precise equivalence: mutual normal visibility (equivalently mutual
// precise visibility).
inline bool precisely_equivalent(const ChangeableSet& z, const FrameId& l,
                                 const FrameId& m) {
    return frame_normally_visible(z, l, m) && frame_normally_visible(z, m, l);
}

namespace detail {

inline FramePartition partition_by(const std::vector<FrameId>& ids,
                                   const std::vector<std::size_t>& root) {
    std::map<std::size_t, std::set<FrameId>> buckets;
    for (std::size_t i = 0; i < ids.size(); ++i) buckets[root[i]].insert(ids[i]);
    FramePartition out;
    for (auto& [r, block] : buckets) out.blocks.insert(std::move(block));
    return out;
}

template <class Related>
FramePartition components(const std::vector<FrameId>& ids, Related&& related) {
    std::vector<std::size_t> root(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) root[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        return root[i] == i ? i : root[i] = find(root[i]);
    };
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (related(ids[i], ids[j])) root[find(i)] = find(j);
    for (std::size_t i = 0; i < ids.size(); ++i) root[i] = find(i);
    return partition_by(ids, root);
}

}  // namespace detail

// Classes of mutual normal visibility (an equivalence: normal visibility is
// a quasi order on frames).
inline FramePartition precise_visibility_classes(const ChangeableSet& z) {
    auto ids = z.frame_ids();
    return detail::components(ids, [&z](const FrameId& a, const FrameId& b) {
        return precisely_equivalent(z, a, b);
    });
}

// Connected components of "directly connected by visibility"
// (l sees m or m sees l, in the partial sense).
inline FramePartition visibility_classes(const ChangeableSet& z) {
    auto ids = z.frame_ids();
    return detail::components(ids, [&z](const FrameId& a, const FrameId& b) {
        return frame_visible(z, a, b) || frame_visible(z, b, a);
    });
}

inline bool is_connected_visible(const ChangeableSet& z) {
    return visibility_classes(z).blocks.size() <= 1;
}

// Visible image of a single state: the unique member of un(l,m){omega}.
inline ETS visible_image(const ChangeableSet& z, const FrameId& l, const FrameId& m,
                         const ETS& w) {
    ETSSet img = apply_uni(z, l, m, {w});
    if (img.size() != 1)
        fail("NotSingletonImage",
             "image of " + show_ets(w) + " has " + std::to_string(img.size()) +
                 " states");
    return *img.begin();
}

// Pointwise evaluation of a unification mapping on a precisely visible
// changeable set; agrees with apply_uni and preserves cardinality.
inline ETSSet pointwise_uni(const ChangeableSet& z, const FrameId& l, const FrameId& m,
                            const ETSSet& A) {
    if (!is_precisely_visible_cset(z))
        fail("NotPreciselyVisible", "pointwise transport needs precise visibility");
    if (A.empty()) fail("BadParams", "pointwise transport of the empty system");
    ETSSet out;
    for (const auto& w : A) out.insert(visible_image(z, l, m, w));
    return out;
}

}  // namespace chset
