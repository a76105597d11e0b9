#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polyded/rational.hpp"

namespace polyded {

// Outcome of one exact identity check. holds is bit-exact equality of the two
// sides; params are (name, value) pairs in the canonical h,m,p,k,n,s,d,i order.
struct IdentityReport {
    std::string identity;
    std::vector<std::pair<std::string, long long>> params;
    Rational lhs;
    Rational rhs;
    bool holds = false;
};

inline IdentityReport make_report(std::string identity,
                                  std::vector<std::pair<std::string, long long>> params,
                                  Rational lhs, Rational rhs) {
    IdentityReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.holds = lhs == rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

}  // namespace polyded
