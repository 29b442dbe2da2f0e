#include "doctest.h"
#include "twk/module.hpp"

using namespace twk;

static Mat from(long m, long n, std::initializer_list<long> xs) {
  Mat A(m, n);
  auto it = xs.begin();
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < n; ++j) A.at(i, j) = Q(*it++);
  return A;
}

// ============================================================
// invariants and element arithmetic
// ============================================================

TEST_CASE("Z^1/(2) is the cyclic group of order 2") {
  PresModule m(ring_z(), 1, from(1, 1, {2}));
  ModShape s = invariants(m);
  CHECK(s.free_rank == 0);
  REQUIRE(s.torsion.size() == 1);
  CHECK(s.torsion[0] == 2);
  CHECK_FALSE(is_trivial(m));
  CHECK_FALSE(is_free_pres(m));
}

TEST_CASE("field quotient just drops dimension") {
  PresModule m(ring_fp(5), 3, from(3, 1, {1, 2, 0}));
  ModShape s = invariants(m);
  CHECK(s.torsion.empty());
  CHECK(s.free_rank == 2);
  CHECK(is_free_pres(m));
}

TEST_CASE("canonical representatives in Z/2 and a rational quotient") {
  PresModule z2(ring_z(), 1, from(1, 1, {2}));
  CHECK(reduce_elem(z2, from(1, 1, {5})) == from(1, 1, {1}));
  CHECK(reduce_elem(z2, from(1, 1, {-1})) == from(1, 1, {1}));
  CHECK(elem_eq(z2, from(1, 1, {5}), from(1, 1, {1})));

  // Q^2 / span((1,1)): canonical rep zeroes the pivot coordinate
  PresModule q(ring_q(), 2, from(2, 1, {1, 1}));
  Mat r = reduce_elem(q, from(2, 1, {3, 5}));
  CHECK(r == from(2, 1, {0, 2}));
  CHECK(elem_eq(q, from(2, 1, {3, 5}), r));
  CHECK(reduce_elem(q, r) == r);  // idempotent
}

// ============================================================
// morphism predicates against hand oracles
// ============================================================

TEST_CASE("multiplication by 2 on Z: injective, not surjective, cokernel Z/2") {
  PresModule z = PresModule::free_mod(ring_z(), 1);
  ModMor f(z, z, from(1, 1, {2}));
  CHECK(well_defined(f));
  CHECK(is_injective(f));
  CHECK_FALSE(is_surjective(f));
  SubMod k = kernel_mor(f);
  CHECK(k.mod.gens == 0);
  QuotMod c = cokernel_mor(f);
  ModShape s = invariants(c.mod);
  REQUIRE(s.torsion.size() == 1);
  CHECK(s.torsion[0] == 2);
  CHECK(s.free_rank == 0);
}

TEST_CASE("projection Z -> Z/2: surjective with kernel 2Z") {
  PresModule z = PresModule::free_mod(ring_z(), 1);
  PresModule z2(ring_z(), 1, from(1, 1, {2}));
  ModMor p(z, z2, from(1, 1, {1}));
  CHECK(well_defined(p));
  CHECK(is_surjective(p));
  CHECK_FALSE(is_injective(p));
  SubMod k = kernel_mor(p);
  REQUIRE(k.mod.gens == 1);
  CHECK(is_free_pres(k.mod));
  CHECK(well_defined(k.incl));
  CHECK(is_injective(k.incl));
  CHECK(k.incl.a == from(1, 1, {2}));
  CHECK(is_zero_mor(compose(p, k.incl)));
}

TEST_CASE("map with trivial image has the whole module as kernel") {
  PresModule z4(ring_z(), 1, from(1, 1, {4}));
  PresModule z2(ring_z(), 1, from(1, 1, {2}));
  ModMor f(z4, z2, from(1, 1, {2}));  // x -> 2x, lands in 2Z/2Z = 0
  CHECK(well_defined(f));
  CHECK(is_zero_mor(f));
  SubMod k = kernel_mor(f);
  ModShape s = invariants(k.mod);
  REQUIRE(s.torsion.size() == 1);
  CHECK(s.torsion[0] == 4);
}

TEST_CASE("morphisms equal modulo relations") {
  PresModule z = PresModule::free_mod(ring_z(), 1);
  PresModule z2(ring_z(), 1, from(1, 1, {2}));
  ModMor f(z, z2, from(1, 1, {1}));
  ModMor g(z, z2, from(1, 1, {3}));
  CHECK(mor_eq(f, g));
  CHECK_FALSE(mor_eq(f, zero_mor(z, z2)));
}

// ============================================================
// isomorphisms and inverses
// ============================================================

TEST_CASE("unit multiplication on Z/3 inverts") {
  PresModule z3(ring_z(), 1, from(1, 1, {3}));
  ModMor f(z3, z3, from(1, 1, {2}));
  CHECK(is_iso_mor(f));
  auto g = inverse_mor(f);
  REQUIRE(g.has_value());
  CHECK(well_defined(*g));
  CHECK(mor_eq(compose(*g, f), id_mor(z3)));
  CHECK(mor_eq(compose(f, *g), id_mor(z3)));
}

TEST_CASE("non-isomorphisms have no inverse") {
  PresModule z = PresModule::free_mod(ring_z(), 1);
  ModMor f(z, z, from(1, 1, {2}));
  CHECK_FALSE(is_iso_mor(f));
  CHECK_FALSE(inverse_mor(f).has_value());
}

TEST_CASE("direct sum adds shapes") {
  PresModule z2(ring_z(), 1, from(1, 1, {2}));
  PresModule z = PresModule::free_mod(ring_z(), 1);
  ModShape s = invariants(dsum(z2, z));
  CHECK(s.free_rank == 1);
  REQUIRE(s.torsion.size() == 1);
  CHECK(s.torsion[0] == 2);
}
