#pragma once
// Bounded non-negatively graded chain complexes of finitely presented
// modules, with the projective-type model structure:
//   weak equivalences = quasi-isomorphisms,
//   fibrations        = degreewise surjections in degrees >= 1,
//   cofibrations      = degreewise injections with degreewise free cokernel.
// Every object is fibrant.  Also the degree-shift adjunction (shift up is
// left adjoint to good-truncation shift down), which is strictly functorial
// on the nose thanks to canonical bases everywhere.

#include <optional>
#include <vector>

#include "twk/module.hpp"

namespace twk {

// Degrees 0..top, one presented module per degree, no trailing zero modules.
// diffs[n] : mods[n] -> mods[n-1] for n >= 1; diffs[0] is a 0-row dummy.
struct ChainComplex {
  Ring ring;
  std::vector<PresModule> mods;
  std::vector<Mat> diffs;

  ChainComplex() : ring(ring_q()) {}
  long top() const { return static_cast<long>(mods.size()) - 1; }
  PresModule mod_at(long n) const;  // zero module outside [0, top]
  Mat diff_at(long n) const;        // correctly shaped zero map outside
  long total_rank() const;          // sum of generator counts

  bool operator==(const ChainComplex& o) const;
};

ChainComplex zero_cx(const Ring& R);
// Trims trailing zero modules and installs the degree-0 dummy differential.
ChainComplex make_cx(const Ring& R, std::vector<PresModule> mods, std::vector<Mat> diffs);
bool validate_cx(const ChainComplex& x);  // shapes, well-definedness, d.d = 0

// Chain map; comps[n] : src.mod_at(n) -> dst.mod_at(n), stored for 0..src.top.
struct ChainMap {
  ChainComplex src, dst;
  std::vector<Mat> comps;

  Mat comp_at(long n) const;
  ModMor mor_at(long n) const;  // the same component as a module morphism
};

ChainMap make_map(ChainComplex src, ChainComplex dst, std::vector<Mat> comps);
ChainMap id_map(const ChainComplex& x);
ChainMap zero_map(const ChainComplex& src, const ChainComplex& dst);
bool validate_map(const ChainMap& f);  // components well defined + square with d
ChainMap compose_map(const ChainMap& g, const ChainMap& f);
bool map_eq(const ChainMap& f, const ChainMap& g);  // componentwise, mod relations
ChainMap add_map(const ChainMap& f, const ChainMap& g);
ChainMap sub_map(const ChainMap& f, const ChainMap& g);

// --- homology -------------------------------------------------------------

PresModule homology_mod(const ChainComplex& x, long n);
ModShape homology_shape(const ChainComplex& x, long n);
ModMor homology_map(const ChainMap& f, long n);

// --- model structure predicates ------------------------------------------

bool is_weq(const ChainMap& f);
bool is_fib(const ChainMap& f);          // epi in every degree >= 1
bool is_cof(const ChainMap& f);          // mono with degreewise free cokernel
bool is_acyclic_fib(const ChainMap& f);  // epi in ALL degrees + weq
bool is_acyclic_cof(const ChainMap& f);
bool is_cofibrant(const ChainComplex& x);  // degreewise free

// --- spheres, disks, generating morphisms --------------------------------

ChainComplex sphere_cx(const Ring& R, long n);  // R concentrated in degree n
ChainComplex disk_cx(const Ring& R, long n);    // R=R in degrees n, n-1 (n >= 1)
// n = 0: 0 -> sphere(0); n >= 1: sphere(n-1) -> disk(n) hitting the bottom
ChainMap gen_cof(const Ring& R, long n);
ChainMap gen_acyclic_cof(const Ring& R, long n);  // 0 -> disk(n), n >= 1

// --- factorization and lifting -------------------------------------------

struct Factorization {
  ChainMap first, second;  // second . first = original
};

// f = (acyclic cofibration) then (fibration): freely add a disk for every
// generator of the target in positive degrees.
Factorization factor_trivcof_fib(const ChainMap& f);
// f = (cofibration) then (acyclic fibration): attach free cells degree by
// degree, covering target generators and killing kernel homology.
Factorization factor_cof_trivfib(const ChainMap& f);

// (x_c, p) with x_c degreewise free and p an acyclic fibration; p = id when
// x is already cofibrant.
struct CofReplacement {
  ChainComplex xc;
  ChainMap p;  // xc -> x
};
CofReplacement cofibrant_replace(const ChainComplex& x);

// Lift w : i.dst -> p.src with w.i = u and p.w = v, given p.u = v.i.
std::optional<ChainMap> fill_square(const ChainMap& i, const ChainMap& p,
                                    const ChainMap& u, const ChainMap& v);

// Chain homotopy h with f - g = d h + h d, as degree-raising components.
std::optional<std::vector<Mat>> solve_homotopy(const ChainMap& f, const ChainMap& g);
bool chain_homotopic(const ChainMap& f, const ChainMap& g);

// --- degree shift adjunction ----------------------------------------------

// (shift_up_cx(x,k))_n = x_{n-k}; zero below degree k.
ChainComplex shift_up_cx(const ChainComplex& x, long k);
// good truncation: (shift_down_cx(y,k))_m = y_{m+k} for m >= 1, and in
// degree 0 the module of k-cycles of y.
ChainComplex shift_down_cx(const ChainComplex& y, long k);
ChainMap shift_up_map(const ChainMap& f, long k);
ChainMap shift_down_map(const ChainMap& f, long k);
// unit x -> shift_down(shift_up(x,k),k): literally the identity
ChainMap shift_unit(const ChainComplex& x, long k);
// counit shift_up(shift_down(y,k),k) -> y: cycle inclusion in degree k
ChainMap shift_counit(const ChainComplex& y, long k);
// cycles in degree k as a presented module with its inclusion into y_k
SubMod cycles_at(const ChainComplex& y, long k);

}  // namespace twk
