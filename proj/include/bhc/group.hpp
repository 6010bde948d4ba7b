#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bhc/error.hpp"

namespace bhc {

/// Finite group as an explicit Cayley table over element indices 0..n-1.
/// Construction verifies the table is a Latin square, associative, and has
/// identity and inverses; index 0 is always the identity.
class FiniteGroup {
public:
    FiniteGroup(int order, std::vector<int> table, std::vector<std::string> labels);

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
    bool is_abelian() const;
    std::int64_t element_order(int a) const;

private:
    int n_;
    std::vector<int> table_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
    void validate() const;
};

/// Direct product of cyclic groups; elements in mixed-radix lexicographic
/// order (last factor fastest), identity first. Labels like "(1,3)".
FiniteGroup group_from_factors(const std::vector<std::int64_t>& orders);

/// "Z8" or "Z2xZ4": 'x'-separated cyclic factors.
FiniteGroup parse_group_spec(const std::string& spec);
std::vector<std::int64_t> parse_group_factors(const std::string& spec);

} // namespace bhc
