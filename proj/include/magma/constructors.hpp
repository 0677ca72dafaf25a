#pragma once

/// Table generators: standard families, hardcoded fixtures, seeded random
/// tables, and exhaustive enumeration of small table classes.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "magma/cayley_table.hpp"

namespace magma {

/// Cyclic group of order n: x*y = (x + y) mod n.
CayleyTable zn(int n);

/// Direct product of cyclic groups, folded left to right.
CayleyTable abelian_product(const std::vector<int>& orders,
                            int order_cap = kDefaultOrderCap);

/// x*y = x.
CayleyTable leftzero(int n);
/// x*y = y.
CayleyTable rightzero(int n);

/// group x leftzero(rows) x rightzero(cols). Requires `group` to be a
/// commutative group; throws std::invalid_argument otherwise.
CayleyTable rect_band_product(const CayleyTable& group, int rows, int cols,
                              int order_cap = kDefaultOrderCap);

/// Adds `extra[b]` fresh elements behaving exactly like the base element b
/// (products only ever look at representatives). Base elements keep their
/// indices; the extras for b = 0, 1, ... follow in order. Requires an
/// associative base.
CayleyTable inflate(const CayleyTable& base, const std::map<Elem, int>& extra,
                    int order_cap = kDefaultOrderCap);

/// x*y = phi(x) + psi(y) + c over a commutative group. `phi` and `psi`
/// must be automorphisms of the group; throws std::invalid_argument
/// otherwise. Always a quasigroup.
CayleyTable linear_quasigroup(const CayleyTable& group,
                              const std::vector<Elem>& phi,
                              const std::vector<Elem>& psi, Elem c);

/// Named built-in tables used throughout the test suite:
///   q4a, q4b  4x4 quasigroups without identity
///   band8     8-element semigroup: pairs (eps, i, l) of bits with
///             (e,i,l)*(d,j,m) = (e+d+[i!=j && l!=m], i, m), encoded as
///             index 4i+2l+eps. Associative but not commutative (the
///             product keeps the left row and the right column), and its
///             idempotent set is not closed
///   s3        symmetric group on 3 letters (names: one-line notation)
///   q8        quaternion group
/// Throws std::invalid_argument for unknown names.
CayleyTable fixture(const std::string& name);
std::vector<std::string> fixture_names();

/// Seeded random associative table via randomized backtracking: cells are
/// filled row-major, candidate values tried in a seeded random order, and
/// every placement is checked against all fully determined triples. The
/// same (n, seed) always yields the same table.
CayleyTable random_semigroup(int n, std::uint64_t seed);

/// Seeded random Latin square via row-by-row backtracking.
CayleyTable random_latin_square(int n, std::uint64_t seed);

enum class TableClass { any, associative, with_identity, quasigroup };

/// Streams every table of the given order and class to `visit`, in a fixed
/// deterministic order. General classes enumerate all n^(n*n) tables and
/// are capped at n <= 3; quasigroups enumerate Latin squares and are
/// capped at n <= 4. Throws cap_exceeded beyond that.
void enumerate_tables(int n, TableClass cls,
                      const std::function<void(const CayleyTable&)>& visit);

}  // namespace magma
