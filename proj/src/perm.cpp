#include "bhc/perm.hpp"

#include <numeric>
#include <sstream>

namespace bhc {

Perm::Perm(std::vector<std::int32_t> fwd) : fwd_(std::move(fwd)) {
    std::vector<bool> seen(fwd_.size(), false);
    for (auto x : fwd_) {
        if (x < 0 || x >= static_cast<std::int32_t>(fwd_.size()) || seen[static_cast<std::size_t>(x)])
            throw Error("permutation table is not a bijection");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<std::int32_t> f(static_cast<std::size_t>(n));
    std::iota(f.begin(), f.end(), 0);
    return Perm(std::move(f));
}

bool Perm::is_identity() const {
    for (int j = 0; j < size(); ++j)
        if (fwd_[static_cast<std::size_t>(j)] != j) return false;
    return true;
}

bool Perm::has_fixed_point() const {
    for (int j = 0; j < size(); ++j)
        if (fwd_[static_cast<std::size_t>(j)] == j) return true;
    return false;
}

Perm Perm::inverse() const {
    std::vector<std::int32_t> inv(fwd_.size());
    for (int j = 0; j < size(); ++j) inv[static_cast<std::size_t>(fwd_[static_cast<std::size_t>(j)])] = static_cast<std::int32_t>(j);
    return Perm(std::move(inv));
}

Perm Perm::compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw Error("permutation sizes differ");
    std::vector<std::int32_t> f(a.fwd_.size());
    for (int j = 0; j < a.size(); ++j) f[static_cast<std::size_t>(j)] = b.fwd(a.fwd(j));
    return Perm(std::move(f));
}

Word Perm::act(const Word& w) const {
    if (w.n() != size()) throw Error("permutation size does not match word length");
    std::vector<std::int32_t> v(w.v.size());
    for (int j = 0; j < size(); ++j) v[static_cast<std::size_t>(j)] = w.v[static_cast<std::size_t>(fwd(j))];
    return Word(std::move(v), w.k);
}

std::vector<std::int32_t> Perm::act(const std::vector<std::int32_t>& in) const {
    std::vector<std::int32_t> v(in.size());
    for (int j = 0; j < size(); ++j) v[static_cast<std::size_t>(j)] = in[static_cast<std::size_t>(fwd(j))];
    return v;
}

std::string Perm::cycles() const {
    std::vector<bool> seen(fwd_.size(), false);
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < size(); ++i) {
        if (seen[static_cast<std::size_t>(i)] || fwd(i) == i) {
            seen[static_cast<std::size_t>(i)] = true;
            continue;
        }
        os << "(" << i + 1;
        seen[static_cast<std::size_t>(i)] = true;
        for (int j = fwd(i); j != i; j = fwd(j)) {
            os << "," << j + 1;
            seen[static_cast<std::size_t>(j)] = true;
        }
        os << ")";
        any = true;
    }
    return any ? os.str() : "id";
}

Perm Perm::from_cycles(const std::string& text, int n) {
    std::vector<std::int32_t> f(static_cast<std::size_t>(n));
    std::iota(f.begin(), f.end(), 0);
    if (text == "id") return Perm(std::move(f));
    std::size_t pos = 0;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    while (pos < text.size()) {
        if (text[pos] != '(') throw Error("bad cycle notation '" + text + "': expected '('");
        ++pos;
        std::vector<int> cyc;
        while (true) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw Error("bad cycle notation '" + text + "': expected a coordinate");
            int v = std::stoi(text.substr(start, pos - start));
            if (v < 1 || v > n) throw Error("cycle coordinate " + std::to_string(v) + " out of range 1.." + std::to_string(n));
            if (used[static_cast<std::size_t>(v - 1)]) throw Error("coordinate " + std::to_string(v) + " repeated in cycles");
            used[static_cast<std::size_t>(v - 1)] = true;
            cyc.push_back(v - 1);
            if (pos >= text.size()) throw Error("bad cycle notation '" + text + "': unterminated cycle");
            if (text[pos] == ',') {
                ++pos;
                continue;
            }
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            throw Error("bad cycle notation '" + text + "': expected ',' or ')'");
        }
        if (cyc.size() < 2) throw Error("cycles must have length >= 2");
        for (std::size_t i = 0; i < cyc.size(); ++i)
            f[static_cast<std::size_t>(cyc[i])] = static_cast<std::int32_t>(cyc[(i + 1) % cyc.size()]);
    }
    return Perm(std::move(f));
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : p.table()) {
        h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace bhc
