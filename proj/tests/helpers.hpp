#pragma once

#include <initializer_list>
#include <vector>

#include "nroots/ortho.hpp"
#include "nroots/root_system.hpp"

namespace testutil {

inline nroots::Coeffs coeffs(std::initializer_list<int> v) {
    nroots::Coeffs c(static_cast<int>(v.size()));
    int i = 0;
    for (int x : v) c[i++] = x;
    return c;
}

inline nroots::RootId root(const nroots::RootSystem& rs, std::initializer_list<int> v) {
    return rs.id_of(coeffs(v));
}

inline nroots::KRoot kroot(const nroots::RootSystem& rs,
                           std::initializer_list<std::initializer_list<int>> vs) {
    nroots::KRoot r;
    for (auto v : vs) r.push_back(root(rs, v));
    std::sort(r.begin(), r.end());
    return r;
}

// The three positive 4-roots of D4, as simple-root coefficient vectors.
inline nroots::KRoot d4_q1(const nroots::RootSystem& d4) {
    return kroot(d4, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 2, 1, 1}});
}
inline nroots::KRoot d4_q2(const nroots::RootSystem& d4) {
    return kroot(d4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 1}});
}
inline nroots::KRoot d4_q3(const nroots::RootSystem& d4) {
    return kroot(d4, {{0, 1, 0, 0}, {1, 1, 1, 0}, {1, 1, 0, 1}, {0, 1, 1, 1}});
}

} // namespace testutil
