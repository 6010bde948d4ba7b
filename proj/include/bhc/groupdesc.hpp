#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bhc/error.hpp"

namespace bhc {

/// Structure fingerprint of a finite group. Abelian groups are identified up
/// to isomorphism by their invariant factors; non-abelian groups get the
/// fingerprint fields (order, center order, abelianization, order histogram),
/// which is not an isomorphism certificate.
struct GroupDescriptor {
    std::int64_t order = 0;
    bool abelian = false;
    std::vector<std::int64_t> invariant_factors;      // descending d_1 >= d_2 >= ..., abelian only
    std::map<std::int64_t, std::int64_t> order_histogram;
    std::int64_t center_order = 0;
    std::vector<std::int64_t> abelianization;         // invariant factors of G/[G,G], non-abelian only

    std::string to_string() const;
};

/// Computes the descriptor of the group {0..n-1} under mul. The identity is
/// located by scanning; inverses must exist (the table must be a group).
GroupDescriptor describe_group(int n, const std::function<int(int, int)>& mul);

} // namespace bhc
