#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "magma/cayley_table.hpp"
#include "magma/constructors.hpp"
#include "magma/oracles.hpp"
#include "magma/partition.hpp"
#include "magma/semigroup.hpp"

using namespace magma;

using Classes = std::vector<std::vector<int>>;
using ElemSets = std::vector<std::vector<Elem>>;

namespace {

// x*y = min(x + y + 1, 2): associative, commutative, no band structure on
// its product part {1, 2} because 1 has no idempotent left fixer.
CayleyTable truncated_add() {
    return CayleyTable::from_rows({{1, 2, 2}, {2, 2, 2}, {2, 2, 2}});
}

// 0 and 1 act identically, 2 differs from both on 2*2; the product part
// {0, 1} leaves 2 with no representative.
CayleyTable orphaned() {
    return CayleyTable::from_rows({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}});
}

}  // namespace

TEST_CASE("kernel relation alpha") {
    CHECK(relation_alpha(zn(4)) == Partition(4));
    CHECK(relation_alpha(fixture("band8")) == Partition(8));
    CHECK(relation_alpha(leftzero(3)) == Partition(3));
    // inflated elements are alpha-related to their representative
    CHECK(relation_alpha(inflate(zn(2), {{0, 1}})) ==
          Partition::from_classes(3, {{0, 2}, {1}}));
    CHECK(relation_alpha(orphaned()) ==
          Partition::from_classes(3, {{0, 1}, {2}}));
    CHECK_THROWS_AS(relation_alpha(fixture("q4a")), std::invalid_argument);
}

TEST_CASE("one-sided translation relations phi and psi") {
    PhiPsiRelations lz = relations_phi_psi(leftzero(3));
    CHECK(lz.phi.equivalence());
    CHECK(lz.phi.to_partition() == Partition(3));  // x*z = x separates
    CHECK(lz.psi.equivalence());
    CHECK(lz.psi.to_partition().class_count() == 1);  // z*x = z never does
    CHECK(lz.exists_equals_forall);

    PhiPsiRelations grp = relations_phi_psi(zn(4));
    CHECK(grp.phi.to_partition() == Partition(4));
    CHECK(grp.psi.to_partition() == Partition(4));
    CHECK(grp.exists_equals_forall);

    // zn(2) x leftzero(2) x rightzero(1): phi separates, psi tracks the
    // group coordinate
    PhiPsiRelations band = relations_phi_psi(rect_band_product(zn(2), 2, 1));
    CHECK(band.phi.to_partition() == Partition(4));
    CHECK(band.psi.element_classes() == ElemSets{{0, 1}, {2, 3}});
    CHECK(band.exists_equals_forall);

    CHECK_THROWS_AS(relations_phi_psi(fixture("q4b")), std::invalid_argument);
}

TEST_CASE("phi and psi need not be equivalences") {
    PhiPsiRelations b8 = relations_phi_psi(fixture("band8"));
    CHECK(!b8.phi.equivalence());
    CHECK(b8.phi.reflexive);
    CHECK(b8.phi.symmetric);
    CHECK(!b8.phi.transitive);
    CHECK(!b8.psi.equivalence());
    CHECK(!b8.exists_equals_forall);
    // 0*z == 2*z at z = 0 (both 0), but 0 and 3 share no column value with 2
    CHECK(b8.phi.related(0, 2));
    CHECK(!b8.phi.related(2, 3));
    CHECK(!b8.phi.related(0, 4));
    CHECK(b8.phi.index_of(5) == 5);
    CHECK(b8.phi.index_of(9) == -1);
    CHECK_THROWS_AS(b8.phi.to_partition(), std::invalid_argument);
    CHECK_THROWS_AS(b8.phi.related(0, 9), std::invalid_argument);
}

TEST_CASE("idempotent fixer relations X, Y, Z on the product part") {
    XYZRelations b8 = relations_xyz(fixture("band8"));
    CHECK(b8.x.universe == std::vector<Elem>{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(b8.x.element_classes() == ElemSets{{0, 1, 2, 3}, {4, 5, 6, 7}});
    CHECK(b8.y.element_classes() == ElemSets{{0, 1, 4, 5}, {2, 3, 6, 7}});
    CHECK(b8.z.element_classes() == ElemSets{{0, 1}, {2, 3}, {4, 5}, {6, 7}});

    // a group has one idempotent fixing everything: single classes
    XYZRelations grp = relations_xyz(zn(4));
    CHECK(grp.z.element_classes() == ElemSets{{0, 1, 2, 3}});

    // rows by the left-zero coordinate, columns collapse
    XYZRelations mixed = relations_xyz(direct_product(zn(2), leftzero(2)));
    CHECK(mixed.x.element_classes() == ElemSets{{0, 2}, {1, 3}});
    CHECK(mixed.y.element_classes() == ElemSets{{0, 1, 2, 3}});
    CHECK(mixed.z.element_classes() == ElemSets{{0, 2}, {1, 3}});

    // the product part can be a proper subset
    XYZRelations infl = relations_xyz(inflate(zn(2), {{0, 1}}));
    CHECK(infl.x.universe == std::vector<Elem>{0, 1});
    CHECK(infl.z.element_classes() == ElemSets{{0, 1}});

    CHECK_THROWS_AS(relations_xyz(fixture("q4a")), std::invalid_argument);
}

TEST_CASE("star condition holds on bands of groups and fails without fixers") {
    for (const auto& t : {zn(6), leftzero(3), rightzero(3),
                          rect_band_product(zn(2), 2, 2), fixture("band8"),
                          fixture("s3")})
        CHECK(star_condition(t).pointwise);

    StarConditionReport bad = star_condition(truncated_add());
    CHECK(!bad.pointwise);
    REQUIRE(bad.witness.has_value());
    CHECK(*bad.witness == std::pair<Elem, Elem>{0, 0});  // 0*0*A = {2} but 0*A = {1,2}

    CHECK_THROWS_AS(star_condition(fixture("q4a")), std::invalid_argument);
}

TEST_CASE("closure of the idempotent set") {
    CHECK(idempotents_closed(zn(4)));
    CHECK(idempotents_closed(leftzero(3)));
    CHECK(idempotents_closed(rect_band_product(zn(3), 2, 2)));
    CHECK(idempotents_closed(fixture("s3")));

    CHECK(!idempotents_closed(fixture("band8")));
    auto w = idempotents_closed_witness(fixture("band8"));
    REQUIRE(w.has_value());
    CHECK(*w == std::pair<Elem, Elem>{0, 6});
    // 0*6 = 3 and 3*3 = 2, so the product is not idempotent
    CHECK(fixture("band8").at(0, 6) == 3);
    CHECK(fixture("band8").at(3, 3) == 2);
}

TEST_CASE("idempotent insertion") {
    CHECK(!idempotent_insertion_witness(zn(4)).has_value());
    CHECK(!idempotent_insertion_witness(leftzero(3)).has_value());
    CHECK(!idempotent_insertion_witness(rect_band_product(zn(2), 2, 3))
               .has_value());

    auto w = idempotent_insertion_witness(fixture("band8"));
    REQUIRE(w.has_value());
    const CayleyTable b = fixture("band8");
    CHECK(b.at(w->f, w->f) == w->f);
    CHECK(b.at(w->x, w->y) != b.at(b.at(w->x, w->f), w->y));

    CHECK_THROWS_AS(idempotent_insertion_witness(fixture("q4b")),
                    std::invalid_argument);
}

TEST_CASE("band8 decomposes as a 2x2 grid of 2-element groups") {
    RectBandResult r = rect_band_of_abelian_groups(fixture("band8"));
    REQUIRE(r.decomposition.has_value());
    CHECK(r.failure.empty());
    const RectBandDecomposition& d = *r.decomposition;
    CHECK(d.universe == std::vector<Elem>{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(d.rows == 2);
    CHECK(d.cols == 2);
    REQUIRE(d.blocks.size() == 4);

    CHECK(d.blocks[0].elements == std::vector<Elem>{0, 1});
    CHECK(d.blocks[1].elements == std::vector<Elem>{2, 3});
    CHECK(d.blocks[2].elements == std::vector<Elem>{4, 5});
    CHECK(d.blocks[3].elements == std::vector<Elem>{6, 7});
    CHECK(d.blocks[0].identity == 0);
    CHECK(d.blocks[1].identity == 2);
    CHECK(d.blocks[2].identity == 4);
    CHECK(d.blocks[3].identity == 6);
    for (int i = 0; i < 4; ++i) {
        CHECK(d.blocks[i].row == i / 2);
        CHECK(d.blocks[i].col == i % 2);
        CHECK(d.block_table(fixture("band8"), i) == zn(2));
    }
    CHECK(d.block_at(1, 0).elements == std::vector<Elem>{4, 5});
    CHECK(d.block_index == std::vector<int>{0, 0, 1, 1, 2, 2, 3, 3});

    // block(i,l) * block(j,m) lands in block(i,m)
    const CayleyTable b = fixture("band8");
    for (Elem x = 0; x < 8; ++x)
        for (Elem y = 0; y < 8; ++y) {
            int bx = d.block_index[x], by = d.block_index[y];
            int target = d.block_index[b.at(x, y)];
            CHECK(d.blocks[target].row == d.blocks[bx].row);
            CHECK(d.blocks[target].col == d.blocks[by].col);
        }
}

TEST_CASE("band decomposition of groups and zero tables") {
    RectBandResult grp = rect_band_of_abelian_groups(zn(4));
    REQUIRE(grp.decomposition.has_value());
    CHECK(grp.decomposition->rows == 1);
    CHECK(grp.decomposition->cols == 1);
    CHECK(grp.decomposition->block_table(zn(4), 0) == zn(4));

    // left-zero: rows split, columns collapse; every block is trivial
    RectBandResult lz = rect_band_of_abelian_groups(leftzero(2));
    REQUIRE(lz.decomposition.has_value());
    CHECK(lz.decomposition->rows == 2);
    CHECK(lz.decomposition->cols == 1);
    CHECK(lz.decomposition->blocks[0].elements == std::vector<Elem>{0});
    CHECK(lz.decomposition->blocks[1].elements == std::vector<Elem>{1});

    RectBandResult rz = rect_band_of_abelian_groups(rightzero(3));
    REQUIRE(rz.decomposition.has_value());
    CHECK(rz.decomposition->rows == 1);
    CHECK(rz.decomposition->cols == 3);

    RectBandResult big = rect_band_of_abelian_groups(
        rect_band_product(abelian_product({2, 2}), 3, 2));
    REQUIRE(big.decomposition.has_value());
    CHECK(big.decomposition->rows == 3);
    CHECK(big.decomposition->cols == 2);
    for (const auto& blk : big.decomposition->blocks)
        CHECK(blk.elements.size() == 4);
}

TEST_CASE("band decomposition failures carry a reason") {
    RectBandResult r = rect_band_of_abelian_groups(truncated_add());
    CHECK(!r.decomposition.has_value());
    CHECK(r.failure.find("not an equivalence") != std::string::npos);

    // a non-commutative group is a single non-commutative block
    RectBandResult s3 = rect_band_of_abelian_groups(fixture("s3"));
    CHECK(!s3.decomposition.has_value());
    CHECK(s3.failure.find("not commutative") != std::string::npos);

    CHECK_THROWS_AS(rect_band_of_abelian_groups(fixture("q4a")),
                    std::invalid_argument);
}

TEST_CASE("inflation structure over the product part") {
    InflationResult r = inflation_base(inflate(zn(2), {{0, 1}}));
    REQUIRE(r.structure.has_value());
    CHECK(!r.orphan.has_value());
    CHECK(r.structure->base == std::vector<Elem>{0, 1});
    CHECK(r.structure->representative == std::vector<Elem>{0, 1, 0});
    CHECK(r.structure->fibers() == ElemSets{{0, 2}, {1}});

    InflationResult plain = inflation_base(zn(4));
    REQUIRE(plain.structure.has_value());
    CHECK(plain.structure->base == std::vector<Elem>{0, 1, 2, 3});
    CHECK(plain.structure->fibers() == ElemSets{{0}, {1}, {2}, {3}});

    // richer inflation: two extras on 0, one on 3
    CayleyTable big = inflate(zn(4), {{0, 2}, {3, 1}});
    InflationResult r2 = inflation_base(big);
    REQUIRE(r2.structure.has_value());
    CHECK(r2.structure->representative ==
          std::vector<Elem>{0, 1, 2, 3, 0, 0, 3});
    CHECK(r2.structure->fibers() == ElemSets{{0, 4, 5}, {1}, {2}, {3, 6}});

    InflationResult bad = inflation_base(orphaned());
    CHECK(!bad.structure.has_value());
    REQUIRE(bad.orphan.has_value());
    CHECK(*bad.orphan == 2);

    CHECK_THROWS_AS(inflation_base(fixture("q4b")), std::invalid_argument);
}

TEST_CASE("fast abelian decision for semigroups") {
    for (const auto& t :
         {zn(1), zn(4), zn(6), leftzero(3), rightzero(4),
          rect_band_product(zn(2), 2, 2), rect_band_product(zn(3), 1, 2),
          inflate(zn(2), {{0, 1}}),
          inflate(rect_band_product(zn(2), 2, 1), {{0, 1}, {3, 2}})}) {
        SemigroupAbelianResult r = semigroup_abelian_fast(t);
        CHECK(r.abelian);
        CHECK(r.failure == SemigroupAbelianFailure::none);
    }

    SemigroupAbelianResult b8 = semigroup_abelian_fast(fixture("band8"));
    CHECK(!b8.abelian);
    CHECK(b8.failure == SemigroupAbelianFailure::idempotents_not_closed);
    CHECK(b8.detail.find("0 and 6") != std::string::npos);

    SemigroupAbelianResult s3 = semigroup_abelian_fast(fixture("s3"));
    CHECK(!s3.abelian);
    CHECK(s3.failure == SemigroupAbelianFailure::product_part_not_band_of_groups);
    CHECK(s3.detail.find("not commutative") != std::string::npos);

    SemigroupAbelianResult tr = semigroup_abelian_fast(truncated_add());
    CHECK(!tr.abelian);
    CHECK(tr.failure == SemigroupAbelianFailure::product_part_not_band_of_groups);

    CHECK(std::string(to_string(b8.failure)) == "idempotents-not-closed");
    CHECK(std::string(to_string(SemigroupAbelianFailure::none)) == "none");
    CHECK(std::string(
              to_string(SemigroupAbelianFailure::not_inflation_of_product_part)) ==
          "not-inflation-of-product-part");

    CHECK_THROWS_AS(semigroup_abelian_fast(fixture("q4a")),
                    std::invalid_argument);
}

TEST_CASE("fast decision agrees with the oracle on every order-3 semigroup") {
    enumerate_tables(3, TableClass::associative, [](const CayleyTable& t) {
        REQUIRE(semigroup_abelian_fast(t).abelian ==
                (abelian_oracle(t) == Truth::yes));
    });
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        CayleyTable t = random_semigroup(4, seed);
        CHECK(semigroup_abelian_fast(t).abelian ==
              (abelian_oracle(t) == Truth::yes));
    }
}

TEST_CASE("fast hamiltonian verdicts for semigroups") {
    RoutedVerdict pos = semigroup_hamiltonian_fast(zn(4));
    CHECK(pos.verdict == Truth::yes);
    CHECK(pos.route == Route::semigroup_theorem);

    RoutedVerdict b8 = semigroup_hamiltonian_fast(fixture("band8"));
    CHECK(b8.verdict == Truth::no);
    CHECK(b8.route == Route::oracle);
    REQUIRE(b8.offender.has_value());
    CHECK(*b8.offender == std::vector<int>{0, 2});

    RoutedVerdict s3 = semigroup_hamiltonian_fast(fixture("s3"));
    CHECK(s3.verdict == Truth::no);
    CHECK(s3.route == Route::oracle);

    RoutedVerdict capped = semigroup_hamiltonian_fast(fixture("q8"), {4, 10});
    CHECK(capped.verdict == Truth::undetermined);
    CHECK(capped.route == Route::oracle);

    RoutedVerdict theorem = semigroup_hamiltonian_fast(leftzero(3), {2, 5});
    CHECK(theorem.verdict == Truth::yes);
    CHECK(theorem.route == Route::semigroup_theorem);
}

TEST_CASE("three-factor normal form of a band of groups") {
    // zn(2) x leftzero(2) x rightzero(3): coordinates come back verbatim
    CayleyTable t = rect_band_product(zn(2), 2, 3);
    RectBandResult r = rect_band_of_abelian_groups(t);
    REQUIRE(r.decomposition.has_value());
    HijFactorization f = hij_factorization(t, *r.decomposition);
    CHECK(f.group == zn(2));
    CHECK(f.rows == 2);
    CHECK(f.cols == 3);
    REQUIRE(f.universe.size() == 12);
    REQUIRE(f.coords.size() == 12);
    for (int h = 0; h < 2; ++h)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j) {
                int idx = (h * 2 + i) * 3 + j;
                CHECK(f.coords[idx] == std::array<int, 3>{h, i, j});
                CHECK(f.product_index(f.coords[idx]) == idx);
            }

    // a group is the 1x1 case
    RectBandResult g = rect_band_of_abelian_groups(zn(4));
    HijFactorization fg = hij_factorization(zn(4), *g.decomposition);
    CHECK(fg.group == zn(4));
    CHECK(fg.rows == 1);
    CHECK(fg.cols == 1);

    // band8 decomposes but its idempotents are not closed: rejected
    RectBandResult b8 = rect_band_of_abelian_groups(fixture("band8"));
    REQUIRE(b8.decomposition.has_value());
    CHECK_THROWS_AS(hij_factorization(fixture("band8"), *b8.decomposition),
                    std::invalid_argument);
}
