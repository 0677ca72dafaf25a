#include "magma/semigroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "magma/constructors.hpp"
#include "magma/oracles.hpp"

namespace magma {

namespace {

void require_associative(const CayleyTable& t, const char* who) {
    if (!is_associative(t))
        throw std::invalid_argument(std::string(who) +
                                    ": operation must be associative");
}

/// C = A*A = all products, ascending.
std::vector<Elem> product_part(const CayleyTable& t) {
    std::vector<char> in(t.order(), 0);
    for (Elem x = 0; x < t.order(); ++x)
        for (Elem y = 0; y < t.order(); ++y)
            in[t.at(x, y)] = 1;
    std::vector<Elem> out;
    for (Elem x = 0; x < t.order(); ++x)
        if (in[x])
            out.push_back(x);
    return out;
}

void diagnose(ElementRelation& r) {
    const int m = static_cast<int>(r.universe.size());
    r.reflexive = r.symmetric = r.transitive = true;
    for (int i = 0; i < m && r.reflexive; ++i)
        r.reflexive = r.related_by_index(i, i);
    for (int i = 0; i < m && r.symmetric; ++i)
        for (int j = i + 1; j < m && r.symmetric; ++j)
            r.symmetric = r.related_by_index(i, j) == r.related_by_index(j, i);
    for (int i = 0; i < m && r.transitive; ++i)
        for (int j = 0; j < m && r.transitive; ++j) {
            if (!r.related_by_index(i, j))
                continue;
            for (int k = 0; k < m; ++k)
                if (r.related_by_index(j, k) && !r.related_by_index(i, k)) {
                    r.transitive = false;
                    break;
                }
        }
}

}  // namespace

int ElementRelation::index_of(Elem a) const {
    auto it = std::lower_bound(universe.begin(), universe.end(), a);
    if (it == universe.end() || *it != a)
        return -1;
    return static_cast<int>(it - universe.begin());
}

bool ElementRelation::related(Elem a, Elem b) const {
    int i = index_of(a), j = index_of(b);
    if (i < 0 || j < 0)
        throw std::invalid_argument("relation queried outside its universe");
    return related_by_index(i, j);
}

Partition ElementRelation::to_partition() const {
    if (!equivalence())
        throw std::invalid_argument("relation '" + name +
                                    "' is not an equivalence");
    const int m = static_cast<int>(universe.size());
    UnionFind uf(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (related_by_index(i, j))
                uf.unite(i, j);
    return uf.to_partition();
}

std::vector<std::vector<Elem>> ElementRelation::element_classes() const {
    std::vector<std::vector<Elem>> out;
    for (const std::vector<int>& cls : to_partition().classes()) {
        std::vector<Elem> elems;
        elems.reserve(cls.size());
        for (int i : cls)
            elems.push_back(universe[i]);
        out.push_back(std::move(elems));
    }
    return out;
}

Partition relation_alpha(const CayleyTable& t) {
    require_associative(t, "relation_alpha");
    const int n = t.order();
    // alpha is the kernel of a -> (row a, column a); group by signature.
    std::map<std::vector<Elem>, std::vector<int>> groups;
    for (Elem a = 0; a < n; ++a) {
        std::vector<Elem> sig;
        sig.reserve(2 * n);
        for (Elem x = 0; x < n; ++x)
            sig.push_back(t.at(a, x));
        for (Elem x = 0; x < n; ++x)
            sig.push_back(t.at(x, a));
        groups[std::move(sig)].push_back(a);
    }
    std::vector<std::vector<int>> classes;
    classes.reserve(groups.size());
    for (auto& [sig, cls] : groups)
        classes.push_back(std::move(cls));
    return Partition::from_classes(n, classes);
}

PhiPsiRelations relations_phi_psi(const CayleyTable& t) {
    require_associative(t, "relations_phi_psi");
    const int n = t.order();
    PhiPsiRelations out;
    out.phi.name = "phi";
    out.psi.name = "psi";
    for (ElementRelation* r : {&out.phi, &out.psi}) {
        r->universe.resize(n);
        for (int i = 0; i < n; ++i)
            r->universe[i] = i;
        r->adjacency.assign(static_cast<std::size_t>(n) * n, 0);
    }
    bool agree = true;
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            bool phi_some = false, phi_all = true;
            bool psi_some = false, psi_all = true;
            for (Elem z = 0; z < n; ++z) {
                const bool right_eq = t.at(x, z) == t.at(y, z);
                const bool left_eq = t.at(z, x) == t.at(z, y);
                phi_some |= right_eq;
                phi_all &= right_eq;
                psi_some |= left_eq;
                psi_all &= left_eq;
            }
            out.phi.adjacency[static_cast<std::size_t>(x) * n + y] = phi_some;
            out.psi.adjacency[static_cast<std::size_t>(x) * n + y] = psi_some;
            agree &= phi_some == phi_all && psi_some == psi_all;
        }
    diagnose(out.phi);
    diagnose(out.psi);
    out.exists_equals_forall = agree;
    return out;
}

XYZRelations relations_xyz(const CayleyTable& t) {
    require_associative(t, "relations_xyz");
    const std::vector<Elem> universe = product_part(t);
    const int m = static_cast<int>(universe.size());
    const std::vector<Elem> idem = idempotents(t);
    XYZRelations out;
    out.x.name = "X";
    out.y.name = "Y";
    out.z.name = "Z";
    for (ElementRelation* r : {&out.x, &out.y, &out.z}) {
        r->universe = universe;
        r->adjacency.assign(static_cast<std::size_t>(m) * m, 0);
    }
    // fixers_left[i]: idempotents z with z*c == c; dually on the right.
    std::vector<std::vector<char>> fix_left(m), fix_right(m);
    for (int i = 0; i < m; ++i) {
        fix_left[i].resize(idem.size());
        fix_right[i].resize(idem.size());
        for (std::size_t e = 0; e < idem.size(); ++e) {
            fix_left[i][e] = t.at(idem[e], universe[i]) == universe[i];
            fix_right[i][e] = t.at(universe[i], idem[e]) == universe[i];
        }
    }
    auto common = [&](const std::vector<char>& a, const std::vector<char>& b) {
        for (std::size_t e = 0; e < a.size(); ++e)
            if (a[e] && b[e])
                return true;
        return false;
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const bool xr = common(fix_left[i], fix_left[j]);
            const bool yr = common(fix_right[i], fix_right[j]);
            out.x.adjacency[static_cast<std::size_t>(i) * m + j] = xr;
            out.y.adjacency[static_cast<std::size_t>(i) * m + j] = yr;
            out.z.adjacency[static_cast<std::size_t>(i) * m + j] = xr && yr;
        }
    diagnose(out.x);
    diagnose(out.y);
    diagnose(out.z);
    return out;
}

StarConditionReport star_condition(const CayleyTable& t) {
    require_associative(t, "star_condition");
    const int n = t.order();
    auto row_set = [&](Elem a) {
        std::set<Elem> s;
        for (Elem x = 0; x < n; ++x)
            s.insert(t.at(a, x));
        return s;
    };
    auto col_set = [&](Elem a) {
        std::set<Elem> s;
        for (Elem x = 0; x < n; ++x)
            s.insert(t.at(x, a));
        return s;
    };
    for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) {
            const Elem bc = t.at(b, c);
            if (row_set(bc) != row_set(b) || col_set(bc) != col_set(c))
                return {false, std::make_pair(b, c)};
        }
    return {true, std::nullopt};
}

std::optional<std::pair<Elem, Elem>> idempotents_closed_witness(
    const CayleyTable& t) {
    const std::vector<Elem> idem = idempotents(t);
    for (Elem e : idem)
        for (Elem f : idem) {
            const Elem p = t.at(e, f);
            if (t.at(p, p) != p)
                return std::make_pair(e, f);
        }
    return std::nullopt;
}

bool idempotents_closed(const CayleyTable& t) {
    return !idempotents_closed_witness(t).has_value();
}

std::optional<InsertionWitness> idempotent_insertion_witness(
    const CayleyTable& t) {
    require_associative(t, "idempotent_insertion_witness");
    const std::vector<Elem> idem = idempotents(t);
    for (Elem x = 0; x < t.order(); ++x)
        for (Elem y = 0; y < t.order(); ++y) {
            const Elem xy = t.at(x, y);
            for (Elem f : idem)
                if (t.at(t.at(x, f), y) != xy)
                    return InsertionWitness{x, y, f};
        }
    return std::nullopt;
}

CayleyTable RectBandDecomposition::block_table(const CayleyTable& t,
                                               int index) const {
    const std::vector<Elem>& elems = blocks[index].elements;
    const int k = static_cast<int>(elems.size());
    std::vector<Elem> entries(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const Elem p = t.at(elems[i], elems[j]);
            auto it = std::lower_bound(elems.begin(), elems.end(), p);
            if (it == elems.end() || *it != p)
                throw std::logic_error("block is not closed");
            entries[static_cast<std::size_t>(i) * k + j] =
                static_cast<Elem>(it - elems.begin());
        }
    return CayleyTable(k, std::move(entries));
}

RectBandResult rect_band_of_abelian_groups(const CayleyTable& t) {
    require_associative(t, "rect_band_of_abelian_groups");
    XYZRelations rel = relations_xyz(t);
    for (const ElementRelation* r : {&rel.x, &rel.y, &rel.z})
        if (!r->equivalence())
            return {std::nullopt, "relation " + r->name +
                                      " is not an equivalence on the product part"};

    RectBandDecomposition d;
    d.universe = rel.x.universe;
    const int m = static_cast<int>(d.universe.size());
    Partition xp = rel.x.to_partition();
    Partition yp = rel.y.to_partition();
    Partition zp = rel.z.to_partition();
    d.rows = xp.class_count();
    d.cols = yp.class_count();
    if (zp.class_count() != d.rows * d.cols)
        return {std::nullopt,
                "the row/column grid has empty cells: " +
                    std::to_string(d.rows) + " rows x " + std::to_string(d.cols) +
                    " cols but " + std::to_string(zp.class_count()) + " blocks"};

    // Row/column ids ordered by least member, then blocks in grid order.
    std::vector<int> row_of(m, -1), col_of(m, -1);
    {
        auto xcls = xp.classes();
        for (std::size_t r = 0; r < xcls.size(); ++r)
            for (int i : xcls[r])
                row_of[i] = static_cast<int>(r);
        auto ycls = yp.classes();
        for (std::size_t c = 0; c < ycls.size(); ++c)
            for (int i : ycls[c])
                col_of[i] = static_cast<int>(c);
    }
    d.blocks.assign(static_cast<std::size_t>(d.rows) * d.cols, RectBandBlock{});
    for (int r = 0; r < d.rows; ++r)
        for (int c = 0; c < d.cols; ++c) {
            d.blocks[static_cast<std::size_t>(r) * d.cols + c].row = r;
            d.blocks[static_cast<std::size_t>(r) * d.cols + c].col = c;
        }
    for (int i = 0; i < m; ++i)
        d.blocks[static_cast<std::size_t>(row_of[i]) * d.cols + col_of[i]]
            .elements.push_back(d.universe[i]);

    d.block_index.assign(t.order(), -1);
    for (std::size_t b = 0; b < d.blocks.size(); ++b)
        for (Elem e : d.blocks[b].elements)
            d.block_index[e] = static_cast<int>(b);

    // Band law: block(i,l) * block(j,m) lands in block(i,m). Covers block
    // closure as the diagonal case.
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const Elem p = t.at(d.universe[i], d.universe[j]);
            const int want = row_of[i] * d.cols + col_of[j];
            if (d.block_index[p] != want)
                return {std::nullopt,
                        "product of " + std::to_string(d.universe[i]) + " and " +
                            std::to_string(d.universe[j]) +
                            " leaves its grid cell"};
        }

    // Each block must be a commutative group.
    for (RectBandBlock& blk : d.blocks) {
        CayleyTable bt = d.block_table(t, blk.row * d.cols + blk.col);
        ClassificationReport cls = classify(bt);
        std::string where = "block (" + std::to_string(blk.row) + ", " +
                            std::to_string(blk.col) + ")";
        if (!cls.identity.has_value())
            return {std::nullopt, where + " has no identity element"};
        if (!cls.group)
            return {std::nullopt, where + " is not a group"};
        if (!cls.commutative)
            return {std::nullopt, where + " is not commutative"};
        blk.identity = blk.elements[*cls.identity];
    }
    return {std::move(d), ""};
}

std::vector<std::vector<Elem>> InflationStructure::fibers() const {
    std::vector<std::vector<Elem>> out(base.size());
    for (Elem x = 0; x < static_cast<Elem>(representative.size()); ++x) {
        auto it = std::lower_bound(base.begin(), base.end(), representative[x]);
        out[it - base.begin()].push_back(x);
    }
    return out;
}

InflationResult inflation_base(const CayleyTable& t) {
    require_associative(t, "inflation_base");
    const std::vector<Elem> base = product_part(t);
    Partition alpha = relation_alpha(t);
    InflationStructure s;
    s.base = base;
    s.representative.assign(t.order(), -1);
    for (Elem b : base)
        s.representative[b] = b;
    for (Elem x = 0; x < t.order(); ++x) {
        if (s.representative[x] >= 0)
            continue;
        for (Elem b : base)
            if (alpha.same_class(x, b)) {
                s.representative[x] = b;
                break;
            }
        if (s.representative[x] < 0)
            return {std::nullopt, x};
    }
    // rep respects all products by definition of alpha; double-check.
    for (Elem x = 0; x < t.order(); ++x)
        for (Elem y = 0; y < t.order(); ++y)
            if (t.at(x, y) != t.at(s.representative[x], s.representative[y]))
                throw std::logic_error("inflation representatives disagree");
    return {std::move(s), std::nullopt};
}

const char* to_string(SemigroupAbelianFailure f) {
    switch (f) {
        case SemigroupAbelianFailure::none: return "none";
        case SemigroupAbelianFailure::idempotents_not_closed:
            return "idempotents-not-closed";
        case SemigroupAbelianFailure::product_part_not_band_of_groups:
            return "product-part-not-band-of-groups";
        default: return "not-inflation-of-product-part";
    }
}

SemigroupAbelianResult semigroup_abelian_fast(const CayleyTable& t) {
    require_associative(t, "semigroup_abelian_fast");
    SemigroupAbelianResult res;
    if (auto w = idempotents_closed_witness(t)) {
        res.failure = SemigroupAbelianFailure::idempotents_not_closed;
        res.detail = "idempotents " + std::to_string(w->first) + " and " +
                     std::to_string(w->second) + " multiply to a non-idempotent";
        return res;
    }
    RectBandResult band = rect_band_of_abelian_groups(t);
    if (!band.decomposition) {
        res.failure = SemigroupAbelianFailure::product_part_not_band_of_groups;
        res.detail = band.failure;
        return res;
    }
    InflationResult inf = inflation_base(t);
    if (!inf.structure) {
        res.failure = SemigroupAbelianFailure::not_inflation_of_product_part;
        res.detail = "element " + std::to_string(*inf.orphan) +
                     " acts like no element of the product part";
        return res;
    }
    res.abelian = true;
    return res;
}

RoutedVerdict semigroup_hamiltonian_fast(const CayleyTable& t,
                                         const SubuniverseCaps& caps) {
    if (semigroup_abelian_fast(t).abelian)
        return {Truth::yes, Route::semigroup_theorem, std::nullopt};
    HamiltonianResult oracle = hamiltonian_oracle(t, caps);
    return {oracle.verdict, Route::oracle, oracle.offender};
}

HijFactorization hij_factorization(const CayleyTable& t,
                                   const RectBandDecomposition& d) {
    if (!idempotents_closed(t))
        throw std::invalid_argument(
            "hij_factorization: idempotents must be closed under the product");
    HijFactorization f{d.block_table(t, 0), d.rows, d.cols, d.universe, {}};
    const RectBandBlock& corner = d.block_at(0, 0);
    const Elem e00 = corner.identity;
    auto group_index = [&](Elem v) {
        auto it = std::lower_bound(corner.elements.begin(),
                                   corner.elements.end(), v);
        if (it == corner.elements.end() || *it != v)
            throw std::logic_error(
                "hij_factorization: projection left the corner block");
        return static_cast<int>(it - corner.elements.begin());
    };
    f.coords.reserve(f.universe.size());
    for (Elem c : f.universe) {
        const int b = d.block_index[c];
        const int i = d.blocks[b].row, j = d.blocks[b].col;
        const int h = group_index(t.at(t.at(e00, c), e00));
        f.coords.push_back({h, i, j});
    }
    // The mapping must be a bijection onto group x rows x cols ...
    std::set<std::array<int, 3>> seen(f.coords.begin(), f.coords.end());
    if (seen.size() != f.coords.size() ||
        f.coords.size() != static_cast<std::size_t>(f.group.order()) *
                               f.rows * f.cols)
        throw std::logic_error("hij_factorization: coordinates are not a bijection");
    // ... and an isomorphism: compare against the direct product table.
    CayleyTable product = direct_product(
        direct_product(f.group, leftzero(f.rows),
                       f.group.order() * f.rows),
        rightzero(f.cols), f.group.order() * f.rows * f.cols);
    std::vector<int> elem_to_index(t.order(), -1);
    for (std::size_t i = 0; i < f.universe.size(); ++i)
        elem_to_index[f.universe[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < f.universe.size(); ++i)
        for (std::size_t j = 0; j < f.universe.size(); ++j) {
            const Elem p = t.at(f.universe[i], f.universe[j]);
            const int pi = elem_to_index[p];
            if (pi < 0 || product.at(f.product_index(f.coords[i]),
                                     f.product_index(f.coords[j])) !=
                              f.product_index(f.coords[pi]))
                throw std::logic_error(
                    "hij_factorization: mapping is not an isomorphism");
        }
    return f;
}

}  // namespace magma
