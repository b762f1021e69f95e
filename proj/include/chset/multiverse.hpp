#pragma once

// multiverse.hpp: changeable sets proper — an indexed family of basic
// changeable sets ("frames", areas of perception) joined by unification
// mappings between their power sets.  The three unification axioms:
//   (1) the diagonal map acts as the identity on every subset,
//   (2) every map is monotone under inclusion,
//   (3) transport through an intermediate frame never gains states:
//       un(m,p)(un(l,m)(A)) is contained in un(l,p)(A).
//
// UniMap is a closed serializable sum (identity / pointwise bijection /
// extensional table / named rule) so documents round-trip through files.

#include <cstddef>
#include <random>

#include "chset/changeable_base.hpp"
#include "chset/core.hpp"

namespace chset {

using FrameId = std::string;

struct UniMap {
    enum class Kind { identity, bijection, table, rule };

    Kind kind = Kind::identity;
    std::map<ETS, ETS> bijection;          // kind == bijection
    std::map<ETSSet, ETSSet> table;        // kind == table (tests only)
    std::string rule;                      // kind == rule: const-empty, z1-forward,
                                           // z1-backward, z2-forward, step-window,
                                           // moving-point
    ETS omega{};                           // rule parameter (z1/z2/moving-point)
    int alpha = 0, beta = 0;               // rule parameters (step/moving window)

    bool operator==(const UniMap& other) const = default;
};

inline UniMap uni_identity() { return {}; }

inline UniMap uni_rule(const std::string& name) {
    UniMap u;
    u.kind = UniMap::Kind::rule;
    u.rule = name;
    return u;
}

struct ChangeableSet {
    std::map<FrameId, BasicChangeableSet> frames;
    std::map<std::pair<FrameId, FrameId>, UniMap> uni;  // key (l, m): maps 2^BS(l) -> 2^BS(m)

    const BasicChangeableSet& frame(const FrameId& l) const {
        auto it = frames.find(l);
        if (it == frames.end()) fail("UnknownFrame", "no frame named " + l);
        return it->second;
    }

    std::vector<FrameId> frame_ids() const {
        std::vector<FrameId> out;
        for (const auto& [id, b] : frames) out.push_back(id);
        return out;
    }
};

inline ETSSet frame_states(const ChangeableSet& z, const FrameId& l) {
    return ets_of(z.frame(l).pcs);
}

// Evaluate one unification mapping on a subset of BS(l).
inline ETSSet apply_uni(const ChangeableSet& z, const FrameId& l, const FrameId& m,
                        const ETSSet& A) {
    ETSSet bs_l = frame_states(z, l);
    if (!is_subset(A, bs_l)) fail("ForeignStates", "A is not a subset of BS(" + l + ")");
    auto it = z.uni.find({l, m});
    if (it == z.uni.end()) {
        if (l == m) return A;  // diagonal defaults to identity
        fail("UnknownFrame", "no unification mapping " + l + " -> " + m);
    }
    const UniMap& u = it->second;
    switch (u.kind) {
        case UniMap::Kind::identity:
            return A;
        case UniMap::Kind::bijection: {
            ETSSet out;
            for (const auto& w : A) {
                auto hit = u.bijection.find(w);
                if (hit == u.bijection.end())
                    fail("ForeignStates", "bijection undefined at " + show_ets(w));
                out.insert(hit->second);
            }
            return out;
        }
        case UniMap::Kind::table: {
            auto hit = u.table.find(A);
            if (hit == u.table.end())
                fail("TableMiss", "extensional table has no entry for a " +
                                      std::to_string(A.size()) + "-state subset");
            return hit->second;
        }
        case UniMap::Kind::rule:
            break;
    }
    // Named closed-form rules.
    ETSSet bs_m = frame_states(z, m);
    if (u.rule == "const-empty") return {};
    if (u.rule == "z1-forward")  // A = BS(l) |-> {omega}, everything else |-> {}
        return A == bs_l ? ETSSet{u.omega} : ETSSet{};
    if (u.rule == "z1-backward")  // omega in A |-> BS(m), else {}
        return A.count(u.omega) ? bs_m : ETSSet{};
    if (u.rule == "z2-forward")  // nonempty |-> {omega}
        return A.empty() ? ETSSet{} : ETSSet{u.omega};
    if (u.rule == "step-window") {
        // identity one step ahead, collapse-to-BS further ahead, empty behind
        if (u.beta == u.alpha || u.beta == u.alpha + 1) return A;
        if (u.beta > u.alpha + 1) return A.empty() ? ETSSet{} : bs_m;
        return {};
    }
    if (u.rule == "moving-point") {
        if (u.beta == u.alpha) return A;
        if (u.beta == u.alpha + 1)
            return A.count(u.omega) ? ETSSet{u.omega} : ETSSet{};
        return {};
    }
    fail("BadParams", "unknown unification rule " + u.rule);
}

// ---- axiom checking ----------------------------------------------------

struct UniViolation {
    int axiom;  // 1, 2 or 3
    FrameId l, m, p;
    ETSSet subset;
    std::string detail;
};

struct CheckMode {
    bool exhaustive = true;
    unsigned seed = 0;      // sampled mode
    std::size_t samples = 1000;
    std::size_t exhaustive_limit = 10;  // max |BS(frame)| for exhaustive scans
};

namespace detail {

inline std::vector<ETSSet> sampled_subsets(const ETSSet& ground, unsigned seed,
                                           std::size_t n) {
    std::vector<ETS> items(ground.begin(), ground.end());
    std::mt19937 rng(seed);
    std::vector<ETSSet> out;
    out.push_back({});          // always probe the corner cases
    out.push_back(ground);
    for (std::size_t i = 0; i + 2 < n; ++i) {
        ETSSet s;
        for (const auto& w : items)
            if (rng() & 1u) s.insert(w);
        out.push_back(std::move(s));
    }
    return out;
}

inline std::vector<ETSSet> scan_subsets(const ETSSet& ground, const CheckMode& mode) {
    if (mode.exhaustive) return all_subsets(ground);
    return sampled_subsets(ground, mode.seed, mode.samples);
}

}  // namespace detail

// Verify the three unification axioms over all frame pairs/triples.
// Monotonicity is checked on covering pairs (A, A + one state); inclusion
// chains then carry the property to arbitrary pairs.
inline std::vector<UniViolation> check_unification(const ChangeableSet& z,
                                                   const CheckMode& mode = {}) {
    if (mode.exhaustive)
        for (const auto& [id, b] : z.frames)
            if (ets_of(b.pcs).size() > mode.exhaustive_limit)
                fail("SizeLimitExceeded",
                     "frame " + id + " exceeds the exhaustive scan limit of " +
                         std::to_string(mode.exhaustive_limit) + " states");

    std::vector<UniViolation> out;
    auto ids = z.frame_ids();
    for (const auto& l : ids) {
        ETSSet bs_l = frame_states(z, l);
        auto subsets = detail::scan_subsets(bs_l, mode);
        for (const auto& A : subsets) {
            // axiom 1: diagonal identity
            if (apply_uni(z, l, l, A) != A)
                out.push_back({1, l, l, l, A, "diagonal map is not the identity"});
            // axiom 2 via covering pairs
            for (const auto& m : ids) {
                ETSSet img = apply_uni(z, l, m, A);
                for (const auto& w : bs_l) {
                    if (A.count(w)) continue;
                    ETSSet bigger = A;
                    bigger.insert(w);
                    if (!is_subset(img, apply_uni(z, l, m, bigger))) {
                        out.push_back({2, l, m, m, A,
                                       "adding " + show_ets(w) + " shrank the image"});
                        break;
                    }
                }
            }
            // axiom 3: composition inclusion
            for (const auto& m : ids)
                for (const auto& p : ids) {
                    ETSSet via = apply_uni(z, m, p, apply_uni(z, l, m, A));
                    ETSSet direct = apply_uni(z, l, p, A);
                    if (!is_subset(via, direct))
                        out.push_back({3, l, m, p, A, "transport through " + m +
                                                          " gained states"});
                }
        }
    }
    return out;
}

// ---- constructors ------------------------------------------------------

// Zpv: frames joined by a pseudo-group of pointwise bijections
// (W_aa = id, W_cb o W_ba = W_ca).  Axiom 3 then holds with equality and the
// result is precisely visible.
inline ChangeableSet make_zpv(
    const std::map<FrameId, BasicChangeableSet>& frames,
    const std::map<std::pair<FrameId, FrameId>, std::map<ETS, ETS>>& W) {
    if (frames.empty()) fail("EmptyFamily", "Zpv needs at least one frame");
    ChangeableSet z;
    z.frames = frames;
    std::vector<FrameId> ids = z.frame_ids();
    std::size_t card = ets_of(frames.begin()->second.pcs).size();
    for (const auto& [id, b] : frames)
        if (ets_of(b.pcs).size() != card)
            fail("NotEquipotent", "frame " + id + " has a different state count");

    auto lookup = [&](const FrameId& a, const FrameId& b) -> std::map<ETS, ETS> {
        auto it = W.find({a, b});
        if (it != W.end()) return it->second;
        if (a == b) {  // diagonal defaults to the identity bijection
            std::map<ETS, ETS> id_map;
            for (const auto& w : ets_of(frames.at(a).pcs)) id_map[w] = w;
            return id_map;
        }
        fail("PseudoGroupViolation", "missing bijection " + a + " -> " + b);
    };

    for (const auto& a : ids)
        for (const auto& b : ids) {
            auto Wba = lookup(a, b);
            ETSSet dom = ets_of(frames.at(a).pcs);
            ETSSet ran = ets_of(frames.at(b).pcs);
            ETSSet hit;
            for (const auto& w : dom) {
                auto it = Wba.find(w);
                if (it == Wba.end())
                    fail("PseudoGroupViolation",
                         "W(" + a + "->" + b + ") undefined at " + show_ets(w));
                if (!ran.count(it->second) || !hit.insert(it->second).second)
                    fail("PseudoGroupViolation",
                         "W(" + a + "->" + b + ") is not a bijection onto BS(" + b + ")");
            }
            if (a == b)
                for (const auto& [w, img] : Wba)
                    if (w != img)
                        fail("PseudoGroupViolation", "W(" + a + "->" + a + ") is not id");
        }
    // composition condition
    for (const auto& a : ids)
        for (const auto& b : ids)
            for (const auto& c : ids) {
                auto Wba = lookup(a, b);
                auto Wcb = lookup(b, c);
                auto Wca = lookup(a, c);
                for (const auto& w : ets_of(frames.at(a).pcs))
                    if (Wcb.at(Wba.at(w)) != Wca.at(w))
                        fail("PseudoGroupViolation",
                             "W(" + b + "->" + c + ") o W(" + a + "->" + b +
                                 ") != W(" + a + "->" + c + ") at " + show_ets(w));
            }

    for (const auto& a : ids)
        for (const auto& b : ids) {
            if (a == b) {
                z.uni[{a, b}] = uni_identity();
                continue;
            }
            UniMap u;
            u.kind = UniMap::Kind::bijection;
            u.bijection = lookup(a, b);
            z.uni[{a, b}] = u;
        }
    return z;
}

// Zim: multi-figurative image of one basic changeable set under a family of
// bijective transforming mappings; frames are the images, bijections are
// U_b o U_a^{-1}.
inline ChangeableSet make_zim(const BasicChangeableSet& b,
                              const std::map<FrameId, TransMap>& transforms) {
    if (transforms.empty()) fail("EmptyFamily", "Zim needs at least one transform");
    ETSSet states = ets_of(b.pcs);
    std::map<FrameId, BasicChangeableSet> frames;
    std::map<FrameId, std::map<ETS, ETS>> forward, backward;
    for (const auto& [id, u] : transforms) {
        std::map<ETS, ETS> fwd, bwd;
        for (const auto& w : states) {
            const ETS& img = u.at(w);
            if (!bwd.emplace(img, w).second)
                fail("NotBijective", "transform " + id + " collapses two states");
            fwd[w] = img;
        }
        frames.emplace(id, image_basic(b, u));
        forward[id] = std::move(fwd);
        backward[id] = std::move(bwd);
    }
    std::map<std::pair<FrameId, FrameId>, std::map<ETS, ETS>> W;
    for (const auto& [a, fa] : forward)
        for (const auto& [c, fc] : forward) {
            std::map<ETS, ETS> Wca;
            for (const auto& w : ets_of(frames.at(a).pcs))
                Wca[w] = fc.at(backward.at(a).at(w));
            W[{a, c}] = std::move(Wca);
        }
    return make_zpv(frames, W);
}

// Znv: the fully invisible changeable set — identity on the diagonal,
// constant-empty everywhere else.
inline ChangeableSet make_znv(const std::map<FrameId, BasicChangeableSet>& frames) {
    if (frames.empty()) fail("EmptyFamily", "Znv needs at least one frame");
    ChangeableSet z;
    z.frames = frames;
    for (const auto& [l, bl] : frames)
        for (const auto& [m, bm] : frames)
            z.uni[{l, m}] = (l == m) ? uni_identity() : uni_rule("const-empty");
    return z;
}

// ---- counterexample fixtures -------------------------------------------

// z1: visible but not normally visible.  Forward map sees only the full
// BS(l1) (as {omega}); backward map blows {omega} up to all of BS(l1).
inline ChangeableSet fixture_z1(const BasicChangeableSet& b1,
                                const BasicChangeableSet& b2, const ETS& omega) {
    if (!ets_of(b2.pcs).count(omega))
        fail("BadParams", "omega must be a state of the second frame");
    ChangeableSet z;
    z.frames = {{"l1", b1}, {"l2", b2}};
    z.uni[{"l1", "l1"}] = uni_identity();
    z.uni[{"l2", "l2"}] = uni_identity();
    UniMap fwd = uni_rule("z1-forward");
    fwd.omega = omega;
    UniMap bwd = uni_rule("z1-backward");
    bwd.omega = omega;
    z.uni[{"l1", "l2"}] = fwd;
    z.uni[{"l2", "l1"}] = bwd;
    return z;
}

// z2: normally visible but not precisely visible.  Every nonempty subset of
// BS(l1) lands on the single state {omega}; the backward map is empty.
inline ChangeableSet fixture_z2(const BasicChangeableSet& b1,
                                const BasicChangeableSet& b2, const ETS& omega) {
    if (!ets_of(b2.pcs).count(omega))
        fail("BadParams", "omega must be a state of the second frame");
    ChangeableSet z;
    z.frames = {{"l1", b1}, {"l2", b2}};
    z.uni[{"l1", "l1"}] = uni_identity();
    z.uni[{"l2", "l2"}] = uni_identity();
    UniMap fwd = uni_rule("z2-forward");
    fwd.omega = omega;
    z.uni[{"l1", "l2"}] = fwd;
    z.uni[{"l2", "l1"}] = uni_rule("const-empty");
    return z;
}

// step-window(n): n copies of one frame; one step ahead is the identity,
// two or more steps ahead collapse every nonempty subset to the whole BS.
// Precise visibility holds only between adjacent frames.
inline ChangeableSet fixture_step_window(const BasicChangeableSet& b, int n) {
    if (n < 3 || n > 9) fail("BadParams", "step-window wants 3 <= n <= 9");
    ChangeableSet z;
    for (int i = 1; i <= n; ++i) z.frames.emplace("l" + std::to_string(i), b);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            UniMap u = uni_rule("step-window");
            u.alpha = i;
            u.beta = j;
            z.uni[{"l" + std::to_string(i), "l" + std::to_string(j)}] = u;
        }
    return z;
}

// moving-point(n): one step ahead only the chosen state omega_beta survives;
// two or more steps ahead nothing does.  Visibility itself fails to be
// transitive.
inline ChangeableSet fixture_moving_point(const BasicChangeableSet& b, int n,
                                          const std::vector<ETS>& omegas) {
    if (n < 3 || n > 9 || static_cast<int>(omegas.size()) != n)
        fail("BadParams", "moving-point wants 3 <= n <= 9 chosen states");
    ETSSet states = ets_of(b.pcs);
    ETSSet distinct(omegas.begin(), omegas.end());
    if (distinct.size() != omegas.size())
        fail("BadParams", "moving-point states must be pairwise distinct");
    for (const auto& w : omegas)
        if (!states.count(w)) fail("BadParams", "chosen state outside BS");
    ChangeableSet z;
    for (int i = 1; i <= n; ++i) z.frames.emplace("l" + std::to_string(i), b);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            UniMap u = uni_rule("moving-point");
            u.alpha = i;
            u.beta = j;
            u.omega = omegas[static_cast<std::size_t>(j) - 1];
            z.uni[{"l" + std::to_string(i), "l" + std::to_string(j)}] = u;
        }
    return z;
}

}  // namespace chset
