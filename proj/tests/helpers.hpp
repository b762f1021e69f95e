#pragma once

// Shared test fixtures: the small oriented sets and times the suites and
// the acceptance run keep coming back to.

#include <functional>
#include <string>

#include "chset/chronology.hpp"
#include "chset/oriented_set.hpp"
#include "chset/simultaneity.hpp"

namespace testutil {

using namespace chset;

// two elements, one strict change x2 <- x1
inline OrientedSet f1() {
    return make_oriented_set({"x1", "x2"}, {{"x1", "x2"}}, true);
}

// two independent strict changes x2 <- x1 and x4 <- x3
inline OrientedSet f2() {
    return make_oriented_set({"x1", "x2", "x3", "x4"},
                             {{"x1", "x2"}, {"x3", "x4"}}, true);
}

// two independent strict changes 3 <- 1 and 4 <- 2
inline OrientedSet f3() {
    return make_oriented_set({"1", "2", "3", "4"}, {{"1", "3"}, {"2", "4"}}, true);
}

// the three-cycle that blocks monotone chronologization
inline OrientedSet f4() {
    return make_oriented_set({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}},
                             true);
}

inline Simultaneity y3() {
    return Simultaneity{{{"1", "2"}, {"2", "3"}, {"3", "4"}}};
}

// the two times generating y3 on f3: psi1 is monotone, psi2 is not
inline Chronologization psi1() {
    Chronologization c;
    c.scale.points = {"1", "2", "3"};
    c.psi = {{"1", {"1", "2"}}, {"2", {"2", "3"}}, {"3", {"3", "4"}}};
    return c;
}

inline Chronologization psi2() {
    Chronologization c;
    c.scale.points = {"1", "2", "3"};
    c.psi = {{"1", {"1", "2"}}, {"2", {"3", "4"}}, {"3", {"2", "3"}}};
    return c;
}

// the monotone, not quasi one-point time on f2
inline Chronologization f2_time() {
    Chronologization c;
    c.scale.points = {"1", "2"};
    c.psi = {{"1", {"x1", "x3"}}, {"2", {"x2", "x4"}}};
    return c;
}

// error code raised by f, or "" when it returns normally
inline std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

}  // namespace testutil
