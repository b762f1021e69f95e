#pragma once

// core.hpp: shared identifiers, error type and small set utilities used by
// every chset module.  All structures in this library are finite, immutable
// after construction, and canonically ordered (std::set / std::map with the
// default lexicographic comparison on tokens), so that every "choose any"
// step in the underlying constructions is deterministic.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chset {

// Opaque identifiers.  Equality/ordering is plain token comparison.
using ElemId = std::string;
using TimeId = std::string;

using ElemSet = std::set<ElemId>;
// An arrow pair (source, result): (x, y) means "y <- x", i.e. y results
// from transformations of x.
using Arrow = std::pair<ElemId, ElemId>;
using ArrowSet = std::set<Arrow>;

// Reserved token for the synthetic element adjoined inside the generating
// time construction; user input containing it is rejected at parse time.
inline const ElemId kAugElem = "~aug";

// All library failures are reported through this exception.  `code` is a
// stable machine-readable tag (matching the operation contracts), `message`
// a human-readable explanation.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

// ---- small set helpers ------------------------------------------------

template <class T>
bool is_subset(const std::set<T>& a, const std::set<T>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

template <class T>
std::set<T> set_union(const std::set<T>& a, const std::set<T>& b) {
    std::set<T> out = a;
    out.insert(b.begin(), b.end());
    return out;
}

template <class T>
std::set<T> set_intersection(const std::set<T>& a, const std::set<T>& b) {
    std::set<T> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.end()));
    return out;
}

template <class T>
std::set<T> set_difference(const std::set<T>& a, const std::set<T>& b) {
    std::set<T> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
    return out;
}

template <class T>
bool disjoint(const std::set<T>& a, const std::set<T>& b) {
    return set_intersection(a, b).empty();
}

// Enumerate all subsets of the given ground set in canonical order
// (by size, then lexicographically by sorted content).  Intended for the
// small exhaustive scans the library performs (|ground| <= ~16).
template <class T>
std::vector<std::set<T>> all_subsets(const std::set<T>& ground,
                                     bool include_empty = true) {
    std::vector<T> items(ground.begin(), ground.end());
    const std::size_t n = items.size();
    std::vector<std::set<T>> out;
    std::vector<std::size_t> pick;
    // combinations of each size, lexicographic within a size
    for (std::size_t k = include_empty ? 0 : 1; k <= n; ++k) {
        pick.clear();
        for (std::size_t i = 0; i < k; ++i) pick.push_back(i);
        while (true) {
            std::set<T> s;
            for (std::size_t i : pick) s.insert(items[i]);
            out.push_back(std::move(s));
            if (k == 0) break;
            // advance combination
            std::size_t i = k;
            while (i > 0) {
                --i;
                if (pick[i] != i + n - k) {
                    ++pick[i];
                    for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                    break;
                }
                if (i == 0) { pick.clear(); break; }
            }
            if (pick.empty()) break;
        }
        if (n == 0) break;
    }
    return out;
}

template <class T>
std::string join(const T& items, const std::string& sep) {
    std::ostringstream os;
    bool first = true;
    for (const auto& it : items) {
        if (!first) os << sep;
        os << it;
        first = false;
    }
    return os.str();
}

template <class T>
std::string show_set(const std::set<T>& s) {
    return "{" + join(s, ",") + "}";
}

}  // namespace chset
