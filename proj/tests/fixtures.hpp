#pragma once

#include <vector>

#include "bhc/butson.hpp"
#include "bhc/graymap.hpp"
#include "bhc/logmatrix.hpp"

namespace fixtures {

// BH(4,8), dephased.
inline bhc::LogMatrix bh48() {
    return bhc::LogMatrix(4, 8,
                          {0, 0, 0, 0,
                           0, 2, 4, 6,
                           0, 4, 0, 4,
                           0, 6, 4, 2});
}

// BH(8,8) = span of the generator with p=2, s=3, t=(1,1,1); equals F_2 (x) F_4 in phase 8.
inline bhc::LogMatrix bh88() {
    return bhc::LogMatrix(8, 8,
                          {0, 0, 0, 0, 0, 0, 0, 0,
                           0, 2, 4, 6, 0, 2, 4, 6,
                           0, 4, 0, 4, 0, 4, 0, 4,
                           0, 6, 4, 2, 0, 6, 4, 2,
                           0, 0, 0, 0, 4, 4, 4, 4,
                           0, 2, 4, 6, 4, 6, 0, 2,
                           0, 4, 0, 4, 4, 0, 4, 0,
                           0, 6, 4, 2, 4, 2, 0, 6});
}

// BH(8,4), cocyclic over Z_8; its BH-code is not additive.
inline bhc::LogMatrix bh84() {
    return bhc::LogMatrix(8, 4,
                          {0, 0, 0, 0, 0, 0, 0, 0,
                           0, 1, 3, 0, 2, 3, 1, 2,
                           0, 3, 2, 1, 0, 3, 2, 1,
                           0, 0, 1, 1, 2, 2, 3, 3,
                           0, 2, 0, 2, 0, 2, 0, 2,
                           0, 3, 3, 2, 2, 1, 1, 0,
                           0, 1, 2, 3, 0, 1, 2, 3,
                           0, 2, 1, 3, 2, 0, 3, 1});
}

struct SpanCase {
    std::int64_t p;
    std::int64_t s;
    std::vector<std::int64_t> t;
};

// Span constructions with p in {2,3} and order <= 81.
inline const std::vector<SpanCase>& span_cases() {
    static const std::vector<SpanCase> cases = {
        {2, 3, {1, 1, 0}}, {2, 3, {1, 1, 1}}, {2, 3, {2, 0, 0}}, {2, 3, {1, 2, 0}},
        {2, 3, {2, 1, 0}}, {2, 3, {1, 0, 2}}, {2, 2, {1, 1}},    {2, 2, {2, 0}},
        {2, 2, {2, 1}},    {2, 2, {3, 0}},    {2, 2, {2, 2}},    {2, 1, {2}},
        {2, 1, {3}},       {3, 2, {1, 1}},    {3, 2, {2, 0}},    {3, 2, {1, 2}},
        {3, 2, {2, 1}},    {3, 1, {2}},       {3, 1, {3}},       {3, 2, {2, 2}},
    };
    return cases;
}

// The construction suite: spans, Fourier matrices, Kronecker products.
inline const std::vector<bhc::LogMatrix>& suite() {
    static const std::vector<bhc::LogMatrix> ms = [] {
        std::vector<bhc::LogMatrix> v;
        for (const auto& c : span_cases()) v.push_back(bhc::span_rows(bhc::build_generator(c.p, c.s, c.t)));
        for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16, 27}) v.push_back(bhc::fourier(n));
        v.push_back(bhc::kronecker(bhc::fourier(2), bhc::fourier(4)));
        v.push_back(bhc::kronecker(bhc::fourier(4), bhc::fourier(4)));
        v.push_back(bhc::kronecker(bhc::fourier(2), bhc::fourier(2)));
        v.push_back(bhc::kronecker(bhc::fourier(3), bhc::fourier(3)));
        v.push_back(bhc::kronecker(bhc::fourier(2), bhc::fourier(3)));
        v.push_back(bhc::kronecker(bhc::fourier(4), bhc::fourier(6)));
        v.push_back(bh48());
        v.push_back(bh88());
        v.push_back(bh84());
        return v;
    }();
    return ms;
}

} // namespace fixtures
