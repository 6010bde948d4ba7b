#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bhc/ring.hpp"

namespace bhc {

/// Coordinate permutation on n positions, stored as the lookup table of its
/// action: (pi(v))_j = v[fwd[j]]. Serialized as 1-based disjoint cycles of
/// fwd itself, cycles sorted by smallest element ("id" when trivial), which
/// is the printed form used throughout.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<std::int32_t> fwd);
    static Perm identity(int n);
    static Perm from_cycles(const std::string& text, int n);

    int size() const { return static_cast<int>(fwd_.size()); }
    std::int32_t fwd(int j) const { return fwd_[static_cast<std::size_t>(j)]; }
    const std::vector<std::int32_t>& table() const { return fwd_; }

    bool is_identity() const;
    bool has_fixed_point() const;
    Perm inverse() const;

    /// Permutation whose action is act(a) followed by nothing else, i.e.
    /// act(compose(a,b)) = act(a) o act(b): fwd[j] = b.fwd[a.fwd[j]].
    static Perm compose(const Perm& a, const Perm& b);

    Word act(const Word& w) const;
    std::vector<std::int32_t> act(const std::vector<std::int32_t>& v) const;

    std::string cycles() const;

    bool operator==(const Perm&) const = default;
    bool operator<(const Perm& o) const { return fwd_ < o.fwd_; }

private:
    std::vector<std::int32_t> fwd_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const noexcept;
};

} // namespace bhc
