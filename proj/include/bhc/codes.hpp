#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bhc/graymap.hpp"
#include "bhc/logmatrix.hpp"
#include "bhc/ring.hpp"

namespace bhc {

enum class CodeTag { f_code, c_code, image, custom };

/// A set of words over one Z_k, kept in first-insertion order so reports and
/// witnesses are reproducible. Duplicate inserts are merged and counted.
struct Code {
    std::vector<Word> words;
    int n = 0;
    std::int64_t k = 1;
    CodeTag tag = CodeTag::custom;
    int merged_duplicates = 0;

    Code() = default;
    Code(int n_, std::int64_t k_, CodeTag tag_) : n(n_), k(k_), tag(tag_) {}

    std::size_t size() const { return words.size(); }
    bool contains(const Word& w) const { return index_.count(w) > 0; }
    int index_of(const Word& w) const; // -1 when absent
    bool insert(const Word& w);        // false when merged as duplicate

private:
    std::unordered_map<Word, int, WordHash> index_;
};

/// F_H = rows of L(H); C_H = union of all constant translates F_H + alpha*1.
std::pair<Code, Code> build_codes(const LogMatrix& m);

/// Exact minimum over all unordered pairs; requires |C| >= 2. The only
/// shortcut is the running-minimum cutoff inside a pair's coordinate sum.
std::int64_t min_distance(const Code& c, Metric metric, const PhaseParams& pp);
std::int64_t min_hamming_distance(const Code& c);
std::int64_t min_lee_distance(const Code& c);

/// Subgroup test plus type extraction for codes over Z_{p^s}. When the code
/// is closed, t_i counts generators of order p^{s-i+1} obtained from the
/// element-order census; then |C| = p^{s t_1 + (s-1) t_2 + ... + t_s}.
struct AdditiveTypeResult {
    bool additive = false;
    std::vector<std::int64_t> t; // t_1..t_s when additive
    // witness when not additive: x + y (or a sum leaving the code)
    std::optional<Word> witness_x, witness_y, witness_sum;
};

AdditiveTypeResult additive_type(const Code& c, std::int64_t p, std::int64_t s);

/// Entrywise Gray image of every codeword; cardinality is preserved.
Code gray_image(const Code& c, GrayMap f, const GrayContext& ctx);

/// Deletes the first coordinate of F_H and tests whether the punctured code
/// meets the Plotkin bound at gamma*n, where gamma = avg wt-dagger over Z_k.
/// The comparison min_d * k == n * sum(wt) is exact (no rationals).
struct PlotkinResult {
    bool meets = false;
    std::int64_t weight_sum = 0;  // sum of wt-dagger over Z_k (gamma = weight_sum/k)
    std::int64_t min_distance = 0;
    std::int64_t p = 0;           // prime used for the wt-dagger split
};

PlotkinResult plotkin_check(const LogMatrix& m, std::optional<std::int64_t> p = std::nullopt);

} // namespace bhc
