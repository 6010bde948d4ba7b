#include "bhc/groupdesc.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "bhc/checked.hpp"
#include "bhc/ring.hpp"

namespace bhc {

namespace {

int find_identity(int n, const std::function<int(int, int)>& mul) {
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
        if (ok) return e;
    }
    throw Error("multiplication has no identity element");
}

std::vector<int> find_inverses(int n, const std::function<int(int, int)>& mul, int e) {
    std::vector<int> inv(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == e && mul(b, a) == e) {
                inv[static_cast<std::size_t>(a)] = b;
                break;
            }
    for (auto v : inv)
        if (v < 0) throw Error("multiplication has an element without inverse");
    return inv;
}

// Invariant factors (descending) of an abelian group from its element orders:
// per prime, the partition comes from the census of elements killed by p^j.
std::vector<std::int64_t> invariant_factors_from_orders(const std::vector<std::int64_t>& orders) {
    std::int64_t n = static_cast<std::int64_t>(orders.size());
    std::map<std::int64_t, std::vector<std::int64_t>> per_prime; // p -> partition desc
    for (std::int64_t p : prime_factors(n)) {
        std::int64_t s = 0;
        while (n % ipow(p, s + 1) == 0) ++s;
        std::vector<std::int64_t> logN(static_cast<std::size_t>(s) + 1, 0);
        for (std::int64_t j = 0; j <= s; ++j) {
            std::int64_t pj = ipow(p, j), cnt = 0;
            for (auto o : orders) cnt += pj % o == 0;
            std::int64_t lg = 0, t = cnt;
            while (t > 1) {
                if (t % p != 0) throw Error("p-subgroup census is not a power of p");
                t /= p;
                ++lg;
            }
            logN[static_cast<std::size_t>(j)] = lg;
        }
        std::vector<std::int64_t> part;
        for (std::int64_t j = s; j >= 1; --j) {
            std::int64_t dj = logN[static_cast<std::size_t>(j)] - logN[static_cast<std::size_t>(j - 1)];
            std::int64_t dj1 = j == s ? 0 : logN[static_cast<std::size_t>(j + 1)] - logN[static_cast<std::size_t>(j)];
            for (std::int64_t r = 0; r < dj - dj1; ++r) part.push_back(ipow(p, j));
        }
        if (!part.empty()) per_prime[p] = std::move(part);
    }
    std::size_t rank = 0;
    for (auto& [p, part] : per_prime) rank = std::max(rank, part.size());
    std::vector<std::int64_t> facs(rank, 1);
    for (auto& [p, part] : per_prime)
        for (std::size_t i = 0; i < part.size(); ++i) facs[i] = mul_ck(facs[i], part[i]);
    return facs;
}

} // namespace

GroupDescriptor describe_group(int n, const std::function<int(int, int)>& mul) {
    GroupDescriptor d;
    d.order = n;
    int e = find_identity(n, mul);
    auto inv = find_inverses(n, mul, e);

    std::vector<std::int64_t> orders(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        std::int64_t o = 1;
        int cur = a;
        while (cur != e) {
            cur = mul(cur, a);
            ++o;
        }
        orders[static_cast<std::size_t>(a)] = o;
        ++d.order_histogram[o];
    }

    d.abelian = true;
    for (int a = 0; a < n && d.abelian; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mul(a, b) != mul(b, a)) {
                d.abelian = false;
                break;
            }

    for (int a = 0; a < n; ++a) {
        bool central = true;
        for (int b = 0; b < n && central; ++b) central = mul(a, b) == mul(b, a);
        d.center_order += central;
    }

    if (d.abelian) {
        d.invariant_factors = invariant_factors_from_orders(orders);
        d.abelianization = d.invariant_factors;
        return d;
    }

    // Derived subgroup: closure of all commutators; then the quotient census.
    std::set<int> derived;
    std::vector<int> frontier;
    derived.insert(e);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int c = mul(mul(a, b), mul(inv[static_cast<std::size_t>(a)], inv[static_cast<std::size_t>(b)]));
            if (derived.insert(c).second) frontier.push_back(c);
        }
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier)
            for (int b : derived) {
                int c = mul(a, b);
                if (derived.insert(c).second) next.push_back(c);
                c = mul(b, a);
                if (derived.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }

    // Cosets of the derived subgroup; quotient is abelian.
    std::vector<int> coset_of(static_cast<std::size_t>(n), -1);
    std::vector<int> reps;
    for (int a = 0; a < n; ++a) {
        if (coset_of[static_cast<std::size_t>(a)] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(a);
        for (int h : derived) coset_of[static_cast<std::size_t>(mul(a, h))] = id;
    }
    std::vector<std::int64_t> qorders;
    int qe = coset_of[static_cast<std::size_t>(e)];
    for (int r : reps) {
        std::int64_t o = 1;
        int cur = r;
        while (coset_of[static_cast<std::size_t>(cur)] != qe) {
            cur = mul(cur, r);
            ++o;
        }
        qorders.push_back(o);
    }
    d.abelianization = invariant_factors_from_orders(qorders);
    return d;
}

std::string GroupDescriptor::to_string() const {
    std::ostringstream os;
    os << "order " << order << ", " << (abelian ? "abelian" : "non-abelian");
    if (abelian) {
        os << ", invariant factors (";
        for (std::size_t i = 0; i < invariant_factors.size(); ++i) os << (i ? "," : "") << invariant_factors[i];
        os << ")";
    } else {
        os << ", center order " << center_order << ", abelianization (";
        for (std::size_t i = 0; i < abelianization.size(); ++i) os << (i ? "," : "") << abelianization[i];
        os << ")";
    }
    return os.str();
}

} // namespace bhc
