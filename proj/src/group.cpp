#include "bhc/group.hpp"

#include <sstream>

#include "bhc/checked.hpp"
#include "bhc/ring.hpp"

namespace bhc {

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::vector<std::string> labels)
    : n_(order), table_(std::move(table)), labels_(std::move(labels)) {
    if (n_ < 1) throw Error("group order must be >= 1");
    if (table_.size() != static_cast<std::size_t>(n_) * n_) throw Error("Cayley table size mismatch");
    if (labels_.size() != static_cast<std::size_t>(n_)) throw Error("label count mismatch");
    validate();
    inv_.assign(static_cast<std::size_t>(n_), -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0 && mul(b, a) == 0) inv_[static_cast<std::size_t>(a)] = b;
    for (int a = 0; a < n_; ++a)
        if (inv_[static_cast<std::size_t>(a)] < 0) throw Error("element " + labels_[static_cast<std::size_t>(a)] + " has no inverse");
}

void FiniteGroup::validate() const {
    for (auto e : table_)
        if (e < 0 || e >= n_) throw Error("Cayley table entry out of range");
    // identity at index 0
    for (int a = 0; a < n_; ++a)
        if (mul(0, a) != a || mul(a, 0) != a) throw Error("index 0 is not an identity element");
    // Latin square
    for (int a = 0; a < n_; ++a) {
        std::vector<bool> seen_row(static_cast<std::size_t>(n_), false), seen_col(seen_row);
        for (int b = 0; b < n_; ++b) {
            if (seen_row[static_cast<std::size_t>(mul(a, b))]) throw Error("Cayley table row is not a permutation");
            if (seen_col[static_cast<std::size_t>(mul(b, a))]) throw Error("Cayley table column is not a permutation");
            seen_row[static_cast<std::size_t>(mul(a, b))] = true;
            seen_col[static_cast<std::size_t>(mul(b, a))] = true;
        }
    }
    // associativity
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw Error("Cayley table is not associative");
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::int64_t FiniteGroup::element_order(int a) const {
    std::int64_t o = 1;
    int cur = a;
    while (cur != 0) {
        cur = mul(cur, a);
        ++o;
    }
    return o;
}

FiniteGroup group_from_factors(const std::vector<std::int64_t>& orders) {
    if (orders.empty()) throw Error("group needs at least one cyclic factor");
    std::int64_t n64 = 1;
    for (auto o : orders) {
        if (o < 1) throw Error("cyclic factor order must be >= 1");
        n64 = mul_ck(n64, o);
    }
    if (n64 > 1 << 16) throw Error("group order too large");
    int n = static_cast<int>(n64);
    std::size_t f = orders.size();

    auto digits = [&](int idx) {
        std::vector<std::int64_t> d(f);
        for (std::size_t i = f; i-- > 0;) {
            d[i] = idx % orders[i];
            idx = static_cast<int>(idx / orders[i]);
        }
        return d;
    };
    auto index_of = [&](const std::vector<std::int64_t>& d) {
        std::int64_t idx = 0;
        for (std::size_t i = 0; i < f; ++i) idx = idx * orders[i] + d[i];
        return static_cast<int>(idx);
    };

    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        auto da = digits(a);
        for (int b = 0; b < n; ++b) {
            auto db = digits(b);
            std::vector<std::int64_t> dc(f);
            for (std::size_t i = 0; i < f; ++i) dc[i] = (da[i] + db[i]) % orders[i];
            table[static_cast<std::size_t>(a) * n + b] = index_of(dc);
        }
    }
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        auto d = digits(a);
        std::ostringstream os;
        if (f == 1) {
            os << d[0];
        } else {
            os << "(";
            for (std::size_t i = 0; i < f; ++i) os << (i ? "," : "") << d[i];
            os << ")";
        }
        labels[static_cast<std::size_t>(a)] = os.str();
    }
    return FiniteGroup(n, std::move(table), std::move(labels));
}

std::vector<std::int64_t> parse_group_factors(const std::string& spec) {
    std::vector<std::int64_t> orders;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        if (spec[pos] != 'Z' && spec[pos] != 'z') throw Error("bad group spec '" + spec + "': expected 'Z<order>' factors separated by 'x'");
        ++pos;
        std::size_t start = pos;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
        if (start == pos) throw Error("bad group spec '" + spec + "': missing factor order");
        orders.push_back(std::stoll(spec.substr(start, pos - start)));
        if (pos < spec.size()) {
            if (spec[pos] != 'x' && spec[pos] != 'X') throw Error("bad group spec '" + spec + "': expected 'x' between factors");
            ++pos;
            if (pos == spec.size()) throw Error("bad group spec '" + spec + "': trailing 'x'");
        }
    }
    if (orders.empty()) throw Error("bad group spec '" + spec + "'");
    return orders;
}

FiniteGroup parse_group_spec(const std::string& spec) {
    return group_from_factors(parse_group_factors(spec));
}

} // namespace bhc
