#pragma once

/**
 * @file indexing.hpp
 * @brief Index bookkeeping for the tenth-order family.
 *
 * Every orbit index splits as i = 2*floor(i/2) + tau(i) with tau in {0,1};
 * the closed forms are organized around that parity split.  The back-shifted
 * presentation (initial data at indices -9..0) is reached through j = 9-k.
 */

#include <cassert>
#include <stdexcept>

namespace decarec {

struct TauFloor {
    long long floor_half; // floor(i/2)
    int tau;              // i mod 2
};

/// Split i >= 0 into i = 2*floor_half + tau.
inline TauFloor tau_floor(long long i) {
    assert(i >= 0);
    return {i / 2, static_cast<int>(i % 2)};
}

struct BackshiftIndex {
    int j;       // 9 - k
    int floor_j; // floor(j/2) = 4 - floor(k/2)
    int tau_j;   // tau(j) = 1 - tau(k)
};

/// Map a shifted residue k in 0..9 to the back-shifted residue j = 9-k,
/// together with its parity split.
inline BackshiftIndex backshift_index(int k) {
    if (k < 0 || k > 9)
        throw std::out_of_range("backshift_index: k must be in 0..9");
    const int j = 9 - k;
    return {j, j / 2, j % 2};
}

} // namespace decarec
