#pragma once
// Finite monoids with exhaustive validation, plus the handful of concrete
// families the fixtures use: capped additive naturals, the boolean monoid,
// cyclic groups, and the sign homomorphism between them.

#include <string>
#include <vector>

#include "twk/exact.hpp"  // math_error

namespace twk {

struct Monoid {
  std::vector<std::string> elems;
  long unit = 0;                        // index into elems
  std::vector<std::vector<long>> mul;   // mul[a][b] = index of a*b

  long size() const { return static_cast<long>(elems.size()); }
  long times(long a, long b) const { return mul[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  bool operator==(const Monoid& o) const = default;
};

std::vector<std::string> validate_monoid(const Monoid& m);

struct MonHom {
  Monoid src, dst;
  std::vector<long> map;  // element index -> element index

  long at(long a) const { return map[static_cast<size_t>(a)]; }
  bool operator==(const MonHom& o) const = default;
};

bool validate_monhom(const MonHom& f);
MonHom id_monhom(const Monoid& m);
MonHom compose_monhom(const MonHom& g, const MonHom& f);
bool is_surjective_monhom(const MonHom& f);

// {0..k} under addition capped at k; 0 is the unit and k absorbs
Monoid capped_nat(long k);
// {0,1} under logical or; same thing as capped_nat(1)
Monoid bool_monoid();
// Z/n written additively
Monoid cyclic_group(long n);
Monoid trivial_monoid();

// capped_nat(k) -> bool_monoid, zero to zero and everything positive to one
MonHom sign_hom(long k);
// cyclic_group(n) -> cyclic_group(m) by reduction; requires m | n
MonHom cyclic_quotient(long n, long m);
// the unique homomorphism from the trivial monoid
MonHom unit_hom(const Monoid& dst);

}  // namespace twk
