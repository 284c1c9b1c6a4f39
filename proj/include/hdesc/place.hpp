#pragma once

// Places of Q: the real place or a finite prime.

#include "hdesc/intutil.hpp"

#include <string>

namespace hdesc {

struct Place {
    bool infinite = false;
    Int p = 0;  // prime when finite

    static Place real() { return Place{true, Int(0)}; }
    static Place prime(const Int& q) { return Place{false, q}; }

    bool is_two() const { return !infinite && p == 2; }
    bool is_odd() const { return !infinite && p != 2; }
    bool operator==(const Place& o) const { return infinite == o.infinite && p == o.p; }
    bool operator<(const Place& o) const {
        if (infinite != o.infinite) return !infinite;  // finite places first, oo last
        return p < o.p;
    }
    std::string str() const { return infinite ? "oo" : p.get_str(); }
};

}  // namespace hdesc
