// Acceptance run: twelve independent checks, one line of output each.
// Exit status is nonzero when any check fails.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "chset/chset.hpp"
#include "helpers.hpp"

using namespace chset;
using testutil::f1;
using testutil::f2;
using testutil::f2_time;
using testutil::f3;
using testutil::f4;
using testutil::psi1;
using testutil::psi2;
using testutil::y3;

namespace {

int failures = 0;

void criterion(int n, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::cout << "AC" << n << " " << name << ": " << (ok ? "pass" : "fail") << note
              << "\n";
    if (!ok) ++failures;
}

BasicChangeableSet flat_frame(int n) {
    ElemSet elems;
    for (int i = 1; i <= n; ++i) elems.insert("p" + std::to_string(i));
    OrientedSet os = make_oriented_set(elems, {}, true);
    Chronologization c;
    c.scale.points = {"t1"};
    c.psi["t1"] = elems;
    return basic_from_formal(make_pcs(os, c));
}

ETS state(int i) { return {"t1", "p" + std::to_string(i)}; }

std::vector<ChangeableSet> fixture_csets() {
    std::vector<ETS> omegas = {state(1), state(2), state(3), state(4)};
    std::map<ETS, ETS> swap{{state(1), state(2)}, {state(2), state(1)}};
    return {fixture_z1(flat_frame(2), flat_frame(1), state(1)),
            fixture_z2(flat_frame(2), flat_frame(1), state(1)),
            fixture_step_window(flat_frame(2), 4),
            fixture_moving_point(flat_frame(4), 4, omegas),
            make_zpv({{"a", flat_frame(2)}, {"b", flat_frame(2)}},
                     {{{"a", "b"}, swap}, {{"b", "a"}, swap}}),
            make_znv({{"a", flat_frame(2)}, {"b", flat_frame(1)}})};
}

std::vector<ChangeableSet> corpus50() {
    std::vector<ChangeableSet> out = fixture_csets();
    Rng rng(2024);
    for (int i = 0; i < 50; ++i) out.push_back(random_cset(rng, 3, 6));
    return out;
}

// instances for the internal-time uniqueness sweep: oriented sets with at
// most 5 elements paired with simultaneities satisfying all three
// predicates, harvested from generated times and random class covers
std::vector<std::pair<OrientedSet, Simultaneity>> internal_instances() {
    std::vector<std::pair<OrientedSet, Simultaneity>> out;
    out.push_back({f3(), y3()});
    out.push_back({f3(), Simultaneity{{{"1", "2"}, {"3", "4"}}}});
    Rng rng(7);
    while (out.size() < 25) {
        OrientedSet os = random_oriented_set(rng, 5);
        std::vector<Simultaneity> candidates;
        candidates.push_back(simultaneity_of(os, chronologize_any(os)));
        candidates.push_back(simultaneity_of(os, trivial_chronologization(os, 2)));
        // a few random covers of the base
        for (int k = 0; k < 3; ++k) {
            Simultaneity y;
            std::size_t parts = pick(rng, 1, 3);
            std::vector<ElemSet> blocks(parts);
            for (const auto& x : os.elements)
                blocks[pick(rng, 0, parts - 1)].insert(x);
            for (const auto& b : blocks)
                if (!b.empty()) y.classes.insert(b);
            candidates.push_back(std::move(y));
        }
        for (const auto& y : candidates) {
            if (!is_simultaneity(os, y)) continue;
            if (y.classes.size() > 5) continue;
            if (!is_precise(os, y)) continue;
            if (!is_unrepeatable(os, y.classes)) continue;
            if (!is_monotone_connected(os, y)) continue;
            out.push_back({os, y});
            if (out.size() >= 25) break;
        }
    }
    return out;
}

}  // namespace

int main() {
    criterion(1, "time kinds on the two-change example", [] {
        TimeKindFlags k = time_kind(f2(), f2_time());
        if (!(k.monotone && !k.quasi_one_point)) return false;
        Chronologization c4;
        for (int i = 1; i <= 4; ++i) {
            TimeId t = std::to_string(i);
            c4.scale.points.push_back(t);
            c4.psi[t] = {"x" + std::to_string(i)};
        }
        TimeKindFlags k4 = time_kind(f2(), c4);
        return k4.quasi_one_point && k4.monotone && !k4.one_point;
    });

    criterion(2, "simultaneity facts for the sliding-window family", [] {
        OrientedSet os = f3();
        if (!is_unrepeatable(os, y3().classes)) return false;
        if (!is_monotone_connected(os, y3())) return false;
        if (!is_precise(os, y3())) return false;
        if (!time_kind(os, psi1()).monotone) return false;
        if (!is_unrepeatable(os, simultaneity_of(os, psi1()).classes)) return false;
        if (time_kind(os, psi2()).monotone) return false;
        return simultaneity_of(os, psi1()) == y3() &&
               simultaneity_of(os, psi2()) == y3();
    });

    criterion(3, "internal time and its uniqueness", [] {
        OrientedSet os = f3();
        Chronologization it = internal_time(os, y3());
        if (!time_kind(os, it).strictly_monotone) return false;
        if (simultaneity_of(os, it) != y3()) return false;
        if (!chronologizations_equivalent(it, psi1())) return false;
        for (const auto& [o, y] : internal_instances()) {
            Chronologization constructed = internal_time(o, y);
            auto candidates = oracle_internal_time_candidates(o, y);
            if (candidates.empty()) return false;
            for (const auto& c : candidates)
                if (!chronologizations_equivalent(c, constructed)) return false;
        }
        return true;
    });

    criterion(4, "chronologization constructions on 200 random sets", [] {
        Rng rng(41);
        for (int i = 0; i < 200; ++i) {
            OrientedSet os = random_oriented_set(rng, 7);
            Chronologization any = chronologize_any(os);
            if (!is_time(os, any)) return false;
            if (!time_kind(os, any).quasi_one_point) return false;
            ClassifyFlags flags = classify_oriented_set(os);
            if (flags.chain_oriented) {
                Chronologization ch = chronologize_chain(os);
                if (!is_time(os, ch) || !time_kind(os, ch).one_point) return false;
            }
            if (flags.cyclic) {
                Chronologization cy = chronologize_cyclic(os);
                if (!is_time(os, cy) || !time_kind(os, cy).one_point) return false;
            }
        }
        return true;
    });

    criterion(5, "fate-line round-trip on 200 random bases", [] {
        Rng rng(43);
        for (int i = 0; i < 200; ++i)
            if (!roundtrip_holds(random_bcs(rng, 8))) return false;
        return true;
    });

    criterion(6, "process/system duality on 200 random systems", [] {
        Rng rng(47);
        for (int i = 0; i < 200; ++i) {
            BasicChangeableSet b = random_bcs(rng, 8);
            ETSSet states = ets_of(b.pcs);
            ChangeableSystem S;
            for (const auto& w : states)
                if (chance(rng, 0.5)) S.states.insert(w);
            Process proc = process_of(b, S);
            if (system_of(b, proc) != S) return false;
            if (process_of(b, system_of(b, proc)) != proc) return false;
        }
        return true;
    });

    criterion(7, "counterexample fixtures reproduce the exact grades", [] {
        ChangeableSet z1 = fixture_z1(flat_frame(2), flat_frame(1), state(1));
        if (!(frame_visible(z1, "l1", "l2") &&
              !frame_normally_visible(z1, "l1", "l2") &&
              frame_visible(z1, "l2", "l1")))
            return false;
        ChangeableSet z2 = fixture_z2(flat_frame(2), flat_frame(1), state(1));
        if (!(frame_normally_visible(z2, "l1", "l2") &&
              !frame_precisely_visible(z2, "l1", "l2")))
            return false;
        ChangeableSet sw = fixture_step_window(flat_frame(2), 4);
        for (int k = 1; k <= 3; ++k)
            if (!frame_precisely_visible(sw, "l" + std::to_string(k),
                                         "l" + std::to_string(k + 1)))
                return false;
        if (frame_precisely_visible(sw, "l1", "l3")) return false;
        std::vector<ETS> omegas = {state(1), state(2), state(3), state(4)};
        ChangeableSet mp = fixture_moving_point(flat_frame(4), 4, omegas);
        return frame_visible(mp, "l1", "l2") && frame_visible(mp, "l2", "l3") &&
               !frame_visible(mp, "l1", "l3");
    });

    criterion(8, "composition criterion = precise visibility on the corpus", [] {
        for (const auto& z : corpus50())
            if (composition_criterion(z) != is_precisely_visible_cset(z))
                return false;
        return true;
    });

    criterion(9, "mutual normal = mutual precise visibility (oracle grades)", [] {
        for (const auto& z : corpus50())
            for (const auto& l : z.frame_ids())
                for (const auto& m : z.frame_ids()) {
                    Grade lm = oracle_frame_grade(z, l, m);
                    Grade ml = oracle_frame_grade(z, m, l);
                    bool mutual_normal = lm >= Grade::normally_visible &&
                                         ml >= Grade::normally_visible;
                    bool mutual_precise = lm == Grade::precisely_visible &&
                                          ml == Grade::precisely_visible;
                    if (mutual_normal != mutual_precise) return false;
                }
        return true;
    });

    criterion(10, "image algebra on precisely visible sets", [] {
        std::vector<ChangeableSet> precise;
        std::map<ETS, ETS> swap{{state(1), state(2)}, {state(2), state(1)}};
        precise.push_back(make_zpv({{"a", flat_frame(2)}, {"b", flat_frame(2)}},
                                   {{{"a", "b"}, swap}, {{"b", "a"}, swap}}));
        Rng rng(29);
        for (int i = 0; i < 10; ++i) {
            BasicChangeableSet b = random_bcs(rng, 6);
            ETSSet states = ets_of(b.pcs);
            // a random time-preserving permutation of the states per frame
            std::map<TimeId, std::vector<ETS>> by_moment;
            for (const auto& w : states) by_moment[chset::tm(w)].push_back(w);
            TransMap u;
            for (auto& [t, ws] : by_moment) {
                std::vector<ETS> to = ws;
                std::shuffle(to.begin(), to.end(), rng);
                for (std::size_t j = 0; j < ws.size(); ++j) u.mapping[ws[j]] = to[j];
            }
            TransMap id;
            for (const auto& w : states) id.mapping[w] = w;
            precise.push_back(make_zim(b, {{"a", id}, {"b", u}}));
        }
        for (const auto& z : precise) {
            if (!is_precisely_visible_cset(z)) return false;
            for (const auto& l : z.frame_ids())
                for (const auto& m : z.frame_ids()) {
                    ETSSet bs_l = frame_states(z, l);
                    auto un = [&](const ETSSet& S) { return apply_uni(z, l, m, S); };
                    if (un(bs_l) != frame_states(z, m)) return false;
                    auto subsets = all_subsets(bs_l);
                    for (const auto& A : subsets)
                        for (const auto& B : subsets) {
                            if (un(set_union(A, B)) != set_union(un(A), un(B)))
                                return false;
                            if (un(set_intersection(A, B)) !=
                                set_intersection(un(A), un(B)))
                                return false;
                            if (un(set_difference(A, B)) !=
                                set_difference(un(A), un(B)))
                                return false;
                        }
                    for (const auto& w : bs_l)
                        if (un({w}).size() != 1) return false;
                    if (!bs_l.empty() &&
                        pointwise_uni(z, l, m, bs_l) != un(bs_l))
                        return false;
                }
        }
        return true;
    });

    criterion(11, "oracle concordance", [] {
        for (const auto& z : fixture_csets())
            if (!oracle_visibility_diff(z).empty()) return false;
        // the cyclic obstruction blocks every monotone time within the bound
        if (oracle_monotone_chron(f4(), 5).has_value()) return false;
        Rng rng(71);
        int with_pattern = 0;
        while (with_pattern < 20) {
            OrientedSet os = random_oriented_set(rng, 5);
            if (!monotone_obstruction(os).has_value()) continue;
            ++with_pattern;
            if (oracle_monotone_chron(os, 5).has_value()) return false;
        }
        auto m2 = oracle_monotone_chron(f2(), 2);
        if (!m2 || !time_kind(f2(), *m2).monotone) return false;
        auto m3 = oracle_monotone_chron(f3(), 3);
        if (!m3 || !time_kind(f3(), *m3).monotone) return false;
        return true;
    });

    criterion(12, "relation laws across the corpus", [] {
        for (const auto& z : corpus50()) {
            auto ids = z.frame_ids();
            // normal visibility is a quasi order
            for (const auto& l : ids)
                if (!frame_normally_visible(z, l, l)) return false;
            for (const auto& l : ids)
                for (const auto& m : ids)
                    for (const auto& p : ids)
                        if (frame_normally_visible(z, l, m) &&
                            frame_normally_visible(z, m, p) &&
                            !frame_normally_visible(z, l, p))
                            return false;
            // both frame partitions really partition the frame family
            for (const auto& part :
                 {precise_visibility_classes(z), visibility_classes(z)}) {
                std::set<FrameId> seen;
                for (const auto& block : part.blocks)
                    for (const auto& id : block)
                        if (!seen.insert(id).second) return false;
                if (seen != std::set<FrameId>(ids.begin(), ids.end())) return false;
            }
            // un(empty) = empty for every mapping
            for (const auto& l : ids)
                for (const auto& m : ids)
                    if (!apply_uni(z, l, m, {}).empty()) return false;
            // the formal-sequence relation is asymmetric off the diagonal
            for (const auto& [id, b] : z.frames) {
                ETSSet states = ets_of(b.pcs);
                for (const auto& w1 : states)
                    for (const auto& w2 : states)
                        if (w1 != w2 && formally_sequential(b.pcs, w1, w2) &&
                            formally_sequential(b.pcs, w2, w1))
                            return false;
            }
        }
        return true;
    });

    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) +
                                      " criterion(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
