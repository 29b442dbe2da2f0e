#pragma once
// Finitely presented modules R^g / col(rels) over Q, F_p, or Z, with
// morphisms given by matrices on generators.  Everything downstream
// (chain complexes, homology, adjunction components) reduces to these.

#include <optional>
#include <vector>

#include "twk/exact.hpp"

namespace twk {

// R^gens modulo the column span of rels (a gens x r matrix).
struct PresModule {
  Ring ring;
  long gens = 0;
  Mat rels;  // gens x r; r may be 0 (free module)

  PresModule() : ring(ring_q()), rels(0, 0) {}
  PresModule(Ring R, long g, Mat r);
  static PresModule free_mod(const Ring& R, long g);

  bool operator==(const PresModule& o) const {
    return ring.tag == o.ring.tag && ring.p == o.ring.p && gens == o.gens &&
           rels == o.rels;
  }
};

// Morphism src -> dst, acting on generators by the matrix a (dst.gens x src.gens).
struct ModMor {
  PresModule src, dst;
  Mat a;

  ModMor() : a(0, 0) {}
  ModMor(PresModule s, PresModule d, Mat m);
};

// torsion = invariant factors > 1 in divisibility order; over a field torsion
// is empty and free_rank is the dimension.
struct ModShape {
  std::vector<Zint> torsion;
  long free_rank = 0;
  bool operator==(const ModShape& o) const = default;
};

// --- elements -------------------------------------------------------------

// Canonical coset representative of each column of x (columnwise reduction
// against the canonical basis of the relation span).
Mat reduce_elem(const PresModule& m, Mat x);
bool elem_eq(const PresModule& m, const Mat& x, const Mat& y);

// --- morphisms ------------------------------------------------------------

// a carries the relation span of src into the relation span of dst
bool well_defined(const ModMor& f);
bool mor_eq(const ModMor& f, const ModMor& g);
bool is_zero_mor(const ModMor& f);
ModMor id_mor(const PresModule& m);
ModMor zero_mor(const PresModule& src, const PresModule& dst);
ModMor compose(const ModMor& g, const ModMor& f);  // g after f

// --- structure ------------------------------------------------------------

ModShape invariants(const PresModule& m);
bool is_trivial(const PresModule& m);
bool is_free_pres(const PresModule& m);

struct SubMod {
  PresModule mod;
  ModMor incl;  // mod -> ambient
};
struct QuotMod {
  PresModule mod;
  ModMor proj;  // ambient -> mod
};

SubMod kernel_mor(const ModMor& f);
QuotMod cokernel_mor(const ModMor& f);

bool is_injective(const ModMor& f);
bool is_surjective(const ModMor& f);
bool is_iso_mor(const ModMor& f);
// two-sided inverse as a module morphism, when one exists
std::optional<ModMor> inverse_mor(const ModMor& f);

PresModule dsum(const PresModule& a, const PresModule& b);

}  // namespace twk
