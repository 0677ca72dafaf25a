#include "magma/constructors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <stdexcept>

namespace magma {

CayleyTable zn(int n) {
    if (n < 1)
        throw std::invalid_argument("zn: order must be at least 1");
    std::vector<Elem> entries(static_cast<std::size_t>(n) * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            entries[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
    return CayleyTable(n, std::move(entries));
}

CayleyTable abelian_product(const std::vector<int>& orders, int order_cap) {
    if (orders.empty())
        throw std::invalid_argument("abelian_product: need at least one order");
    CayleyTable t = zn(orders[0]);
    for (std::size_t i = 1; i < orders.size(); ++i)
        t = direct_product(t, zn(orders[i]), order_cap);
    return t;
}

CayleyTable leftzero(int n) {
    if (n < 1)
        throw std::invalid_argument("leftzero: order must be at least 1");
    std::vector<Elem> entries(static_cast<std::size_t>(n) * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            entries[static_cast<std::size_t>(x) * n + y] = x;
    return CayleyTable(n, std::move(entries));
}

CayleyTable rightzero(int n) {
    if (n < 1)
        throw std::invalid_argument("rightzero: order must be at least 1");
    std::vector<Elem> entries(static_cast<std::size_t>(n) * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            entries[static_cast<std::size_t>(x) * n + y] = y;
    return CayleyTable(n, std::move(entries));
}

namespace {

void require_commutative_group(const CayleyTable& g, const char* who) {
    ClassificationReport c = classify(g);
    if (!c.group || !c.commutative)
        throw std::invalid_argument(std::string(who) +
                                    ": expected a commutative group");
}

}  // namespace

CayleyTable rect_band_product(const CayleyTable& group, int rows, int cols,
                              int order_cap) {
    require_commutative_group(group, "rect_band_product");
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("rect_band_product: need rows, cols >= 1");
    return direct_product(direct_product(group, leftzero(rows), order_cap),
                          rightzero(cols), order_cap);
}

CayleyTable inflate(const CayleyTable& base, const std::map<Elem, int>& extra,
                    int order_cap) {
    if (!is_associative(base))
        throw std::invalid_argument("inflate: base must be associative");
    long long order = base.order();
    for (auto [b, k] : extra) {
        if (b < 0 || b >= base.order())
            throw std::invalid_argument("inflate: base element out of range");
        if (k < 0)
            throw std::invalid_argument("inflate: extra count must be >= 0");
        order += k;
    }
    if (order > order_cap)
        throw cap_exceeded("inflate: order " + std::to_string(order) +
                           " exceeds cap " + std::to_string(order_cap));
    const int n = static_cast<int>(order);
    std::vector<Elem> rep(n);
    std::iota(rep.begin(), rep.begin() + base.order(), 0);
    int next = base.order();
    for (auto [b, k] : extra)
        for (int i = 0; i < k; ++i)
            rep[next++] = b;
    std::vector<Elem> entries(static_cast<std::size_t>(n) * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            entries[static_cast<std::size_t>(x) * n + y] =
                base.at(rep[x], rep[y]);
    return CayleyTable(n, std::move(entries));
}

CayleyTable linear_quasigroup(const CayleyTable& group,
                              const std::vector<Elem>& phi,
                              const std::vector<Elem>& psi, Elem c) {
    require_commutative_group(group, "linear_quasigroup");
    const int n = group.order();
    if (c < 0 || c >= n)
        throw std::invalid_argument("linear_quasigroup: constant out of range");
    auto check_automorphism = [&](const std::vector<Elem>& f, const char* name) {
        if (static_cast<int>(f.size()) != n)
            throw std::invalid_argument(std::string("linear_quasigroup: ") +
                                        name + " has wrong size");
        std::vector<char> seen(n, 0);
        for (Elem v : f) {
            if (v < 0 || v >= n || seen[v])
                throw std::invalid_argument(std::string("linear_quasigroup: ") +
                                            name + " is not a permutation");
            seen[v] = 1;
        }
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y)
                if (f[group.at(x, y)] != group.at(f[x], f[y]))
                    throw std::invalid_argument(
                        std::string("linear_quasigroup: ") + name +
                        " is not an automorphism");
    };
    check_automorphism(phi, "phi");
    check_automorphism(psi, "psi");
    std::vector<Elem> entries(static_cast<std::size_t>(n) * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            entries[static_cast<std::size_t>(x) * n + y] =
                group.at(group.at(phi[x], psi[y]), c);
    return CayleyTable(n, std::move(entries));
}

namespace {

CayleyTable make_band8() {
    // Elements are bit triples (eps, i, l), index 4i + 2l + eps, with
    // (e,i,l)*(d,j,m) = (e + d + [i != j && l != m] mod 2, i, m).
    std::vector<Elem> entries(64);
    for (int idx = 0; idx < 8; ++idx)
        for (int jdx = 0; jdx < 8; ++jdx) {
            int e = idx & 1, i = idx >> 2 & 1, l = idx >> 1 & 1;
            int d = jdx & 1, j = jdx >> 2 & 1, m = jdx >> 1 & 1;
            int eps = (e + d + ((i != j && l != m) ? 1 : 0)) & 1;
            entries[static_cast<std::size_t>(idx) * 8 + jdx] = 4 * i + 2 * m + eps;
        }
    std::vector<std::string> names;
    for (int idx = 0; idx < 8; ++idx)
        names.push_back(std::to_string(idx & 1) + "_" +
                        std::to_string(idx >> 2 & 1) +
                        std::to_string(idx >> 1 & 1));
    CayleyTable t(8, std::move(entries), std::move(names));
    // The defining formula is easy to mistype; fail loudly if the build
    // ever regresses. The operation is associative but, because the
    // product keeps the left row and the right column, never commutative.
    if (!is_associative(t) || is_commutative(t))
        throw std::logic_error("band8 fixture failed its self-check");
    return t;
}

CayleyTable make_s3() {
    // Permutations of {0,1,2} in lexicographic one-line order;
    // (p*q)(i) = p(q(i)).
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto rank = [&](const std::array<int, 3>& p) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p)
                return static_cast<int>(i);
        throw std::logic_error("s3 fixture failed its self-check");
    };
    std::vector<Elem> entries(36);
    std::vector<std::string> names;
    for (int x = 0; x < 6; ++x) {
        names.push_back(std::to_string(perms[x][0]) +
                        std::to_string(perms[x][1]) +
                        std::to_string(perms[x][2]));
        for (int y = 0; y < 6; ++y) {
            std::array<int, 3> comp = {perms[x][perms[y][0]],
                                       perms[x][perms[y][1]],
                                       perms[x][perms[y][2]]};
            entries[static_cast<std::size_t>(x) * 6 + y] = rank(comp);
        }
    }
    CayleyTable t(6, std::move(entries), std::move(names));
    if (!classify(t).group)
        throw std::logic_error("s3 fixture failed its self-check");
    return t;
}

CayleyTable make_q8() {
    // Quaternion units 1, i, j, k with signs; index = 2*unit + sign bit.
    // unit_mul[u][v] = (sign, unit) of the product of units u and v.
    static const int unit_mul[4][4][2] = {
        {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
        {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
        {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
        {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
    };
    std::vector<Elem> entries(64);
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int ux = x >> 1, sx = x & 1, uy = y >> 1, sy = y & 1;
            int sign = (sx + sy + unit_mul[ux][uy][0]) & 1;
            int unit = unit_mul[ux][uy][1];
            entries[static_cast<std::size_t>(x) * 8 + y] = 2 * unit + sign;
        }
    std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    CayleyTable t(8, std::move(entries), std::move(names));
    ClassificationReport c = classify(t);
    if (!c.group || c.commutative)
        throw std::logic_error("q8 fixture failed its self-check");
    return t;
}

}  // namespace

CayleyTable fixture(const std::string& name) {
    if (name == "q4a")
        return CayleyTable::from_rows(
            {{1, 3, 2, 0}, {2, 0, 3, 1}, {0, 2, 1, 3}, {3, 1, 0, 2}});
    if (name == "q4b")
        return CayleyTable::from_rows(
            {{1, 0, 3, 2}, {2, 1, 0, 3}, {0, 3, 2, 1}, {3, 2, 1, 0}});
    if (name == "band8")
        return make_band8();
    if (name == "s3")
        return make_s3();
    if (name == "q8")
        return make_q8();
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
    return {"q4a", "q4b", "band8", "s3", "q8"};
}

namespace {

// Partial-table associativity check around nothing in particular: scans
// every triple whose four lookups are all defined. -1 marks empty cells.
bool partial_associative(const std::vector<int>& cells, int n) {
    auto at = [&](int x, int y) { return cells[static_cast<std::size_t>(x) * n + y]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = at(a, b);
            for (int c = 0; c < n; ++c) {
                int bc = at(b, c);
                if (ab < 0 && bc < 0)
                    continue;
                int left = ab < 0 ? -1 : at(ab, c);
                int right = bc < 0 ? -1 : at(a, bc);
                if (left >= 0 && right >= 0 && left != right)
                    return false;
            }
        }
    return true;
}

bool fill_semigroup(std::vector<int>& cells, int n, std::size_t pos,
                    std::mt19937_64& rng, long& budget) {
    if (pos == cells.size())
        return true;
    if (--budget < 0)
        return false;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int v : order) {
        cells[pos] = v;
        if (partial_associative(cells, n) &&
            fill_semigroup(cells, n, pos + 1, rng, budget))
            return true;
    }
    cells[pos] = -1;
    return false;
}

}  // namespace

CayleyTable random_semigroup(int n, std::uint64_t seed) {
    if (n < 1 || n > 16)
        throw std::invalid_argument("random_semigroup: order must be in [1, 16]");
    // Backtracking almost always succeeds immediately; the budget plus
    // reseeded restarts guard against unlucky value orders.
    for (std::uint64_t attempt = 0;; ++attempt) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + attempt);
        std::vector<int> cells(static_cast<std::size_t>(n) * n, -1);
        long budget = 200000;
        if (fill_semigroup(cells, n, 0, rng, budget))
            return CayleyTable(n, std::vector<Elem>(cells.begin(), cells.end()));
    }
}

CayleyTable random_latin_square(int n, std::uint64_t seed) {
    if (n < 1 || n > 16)
        throw std::invalid_argument(
            "random_latin_square: order must be in [1, 16]");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
    std::vector<int> cells(static_cast<std::size_t>(n) * n, -1);
    std::vector<std::uint32_t> row_used(n, 0), col_used(n, 0);
    std::vector<std::vector<int>> orders(cells.size());
    for (auto& o : orders) {
        o.resize(n);
        std::iota(o.begin(), o.end(), 0);
        std::shuffle(o.begin(), o.end(), rng);
    }
    std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
        if (pos == cells.size())
            return true;
        const int row = static_cast<int>(pos) / n, col = static_cast<int>(pos) % n;
        for (int v : orders[pos]) {
            if ((row_used[row] >> v & 1) || (col_used[col] >> v & 1))
                continue;
            cells[pos] = v;
            row_used[row] |= std::uint32_t{1} << v;
            col_used[col] |= std::uint32_t{1} << v;
            if (rec(pos + 1))
                return true;
            row_used[row] &= ~(std::uint32_t{1} << v);
            col_used[col] &= ~(std::uint32_t{1} << v);
            cells[pos] = -1;
        }
        return false;
    };
    // Full depth-first search is exhaustive, and completed squares exist
    // at every order, so this cannot fail.
    if (!rec(0))
        throw std::logic_error("random_latin_square: no square found");
    return CayleyTable(n, std::vector<Elem>(cells.begin(), cells.end()));
}

namespace {

void enumerate_latin(int n, const std::function<void(const CayleyTable&)>& visit) {
    std::vector<int> cells(static_cast<std::size_t>(n) * n, -1);
    std::vector<std::uint32_t> col_used(n, 0);
    std::vector<std::uint32_t> row_used(n, 0);
    // Lexicographic depth-first enumeration over cells.
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == cells.size()) {
            visit(CayleyTable(n, std::vector<Elem>(cells.begin(), cells.end())));
            return;
        }
        const int row = static_cast<int>(pos) / n, col = static_cast<int>(pos) % n;
        for (int v = 0; v < n; ++v) {
            if ((row_used[row] >> v & 1) || (col_used[col] >> v & 1))
                continue;
            cells[pos] = v;
            row_used[row] |= std::uint32_t{1} << v;
            col_used[col] |= std::uint32_t{1} << v;
            rec(pos + 1);
            row_used[row] &= ~(std::uint32_t{1} << v);
            col_used[col] &= ~(std::uint32_t{1} << v);
            cells[pos] = -1;
        }
    };
    rec(0);
}

}  // namespace

void enumerate_tables(int n, TableClass cls,
                      const std::function<void(const CayleyTable&)>& visit) {
    if (n < 1)
        throw std::invalid_argument("enumerate_tables: order must be >= 1");
    if (cls == TableClass::quasigroup) {
        if (n > 4)
            throw cap_exceeded("enumerate_tables: quasigroup enumeration capped at order 4");
        enumerate_latin(n, visit);
        return;
    }
    if (n > 3)
        throw cap_exceeded("enumerate_tables: exhaustive enumeration capped at order 3");
    std::vector<Elem> cells(static_cast<std::size_t>(n) * n, 0);
    // Odometer over all n^(n*n) tables, last cell fastest.
    for (;;) {
        CayleyTable t(n, cells);
        switch (cls) {
            case TableClass::any:
                visit(t);
                break;
            case TableClass::associative:
                if (is_associative(t))
                    visit(t);
                break;
            case TableClass::with_identity:
                if (identity_of(t).has_value())
                    visit(t);
                break;
            case TableClass::quasigroup:
                break;  // handled above
        }
        int i = static_cast<int>(cells.size()) - 1;
        while (i >= 0 && cells[i] == n - 1)
            cells[i--] = 0;
        if (i < 0)
            break;
        ++cells[i];
    }
}

}  // namespace magma
