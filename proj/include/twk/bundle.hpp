#pragma once
// Adjunction bundles over a finite index category: one concrete category per
// object, one adjoint pair (F_sigma -| U_sigma) per arrow, with unit and
// counit components stored explicitly.  The right-hand functors U compose
// strictly on the nose — table equality, not up-to-iso — which is what the
// canonical-basis discipline in the lower layers buys us.  The left-hand
// functors compose only up to the uniqueness isomorphism built from eta/eps.
//
// Per fiber kind the adjunction data is:
//   pointed sets / M-sets : a monoid map; F = inducting up, U = restriction
//   vector spaces         : a weight w;  F = tensor with R^w, U = R^w-fold hom
//   chain complexes       : a shift k;   F = shift up, U = good truncation
//   products              : componentwise

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twk/concrete.hpp"

namespace twk {

struct FiberAdj {
  MonHom hom;       // M-set kinds: monoid map along the arrow
  long weight = 1;  // Vect: dimension of the tensoring space
  long shift = 0;   // Chain: degrees shifted
  std::vector<FiberAdj> parts;  // Prod: one per factor

  bool operator==(const FiberAdj& o) const = default;
};

FiberAdj identity_adj(const ConcreteCat& c);
// data of U_{tau.sigma} forced by strictness, given data for sigma then tau
FiberAdj composite_adj(const ConcreteCat& c, const FiberAdj& sigma, const FiberAdj& tau);
bool is_identity_adj(const ConcreteCat& lower, const ConcreteCat& upper, const FiberAdj& a);

// --- the adjoint pair between two fibers, driven by its data --------------

CObj fa_U(const ConcreteCat& lower, const ConcreteCat& upper, const FiberAdj& a, const CObj& y);
CMor fa_U_mor(const ConcreteCat& lower, const ConcreteCat& upper, const FiberAdj& a, const CMor& g);
CObj fa_F(const ConcreteCat& lower, const ConcreteCat& upper, const FiberAdj& a, const CObj& x);
CMor fa_F_mor(const ConcreteCat& lower, const ConcreteCat& upper, const FiberAdj& a, const CMor& f);
// X -> U F X and F U Y -> Y
CMor fa_unit(const ConcreteCat& lower, const ConcreteCat& upper, const FiberAdj& a, const CObj& x);
CMor fa_counit(const ConcreteCat& lower, const ConcreteCat& upper, const FiberAdj& a, const CObj& y);

// --- bundles --------------------------------------------------------------

struct Bundle {
  FinCat base;
  std::map<Obj, ConcreteCat> fiber;
  std::map<MorId, FiberAdj> adj;  // non-identity arrows; identities synthesized

  const ConcreteCat& fiber_at(const Obj& i) const;
  FiberAdj arrow_adj(const MorId& s) const;
};

CObj apply_U(const Bundle& b, const MorId& s, const CObj& y);
CMor apply_U_mor(const Bundle& b, const MorId& s, const CMor& g);
CObj apply_F(const Bundle& b, const MorId& s, const CObj& x);
CMor apply_F_mor(const Bundle& b, const MorId& s, const CMor& f);
CMor unit_at(const Bundle& b, const MorId& s, const CObj& x);
CMor counit_at(const Bundle& b, const MorId& s, const CObj& y);

// transposition across the adjunction of one arrow: a flat morphism
// X -> U_s(Y) against its sharp mate F_s(X) -> Y
CMor sharp_of(const Bundle& b, const MorId& s, const CMor& flat, const CObj& y);
CMor flat_of(const Bundle& b, const MorId& s, const CMor& sharp, const CObj& x);

// small deterministic per-fiber object and morphism stock used by the
// validators and the property checks
std::vector<CObj> basis_objs(const ConcreteCat& c);
std::vector<CMor> basis_mors(const ConcreteCat& c);

// every violation, one line each: strict U-functoriality on data and on a
// test basis, F and U at identities, triangular identities, naturality
std::vector<std::string> validate_bundle(const Bundle& b);
// true when F also composes strictly on the whole test basis (it does for
// linear and chain fibers; for M-set fibers only by accident)
bool f_appears_strict(const Bundle& b);
// literal equality of base tables, fibers, and adjunction data
bool bundle_eq(const Bundle& a, const Bundle& b);

// canonical comparison F_tau(F_sigma X) -> F_{tau.sigma}(X) and its inverse,
// built from unit/counit alone
CMor uniqueness_iso_fwd(const Bundle& b, const MorId& sigma, const MorId& tau, const CObj& x);
CMor uniqueness_iso_bwd(const Bundle& b, const MorId& sigma, const MorId& tau, const CObj& x);

// --- constructors ----------------------------------------------------------

Bundle trivial_bundle(const FinCat& base, const ConcreteCat& c);
// fibers of G(i)-equivariant pointed sets for a functor G from the base to
// finite monoids; the fiber kind stays PtdSet where the monoid is trivial
Bundle monoid_bundle(const FinCat& base, const std::map<Obj, Monoid>& g_ob,
                     const std::map<MorId, MonHom>& g_mor);
Bundle weight_bundle(const FinCat& base, const Ring& r, const std::map<MorId, long>& w);
Bundle shift_bundle(const FinCat& base, const Ring& r, const std::map<MorId, long>& k);
// reindex along phi : result base -> b.base
Bundle inverse_image_bundle(const FinFunctor& phi, const Bundle& b);
// over the disjoint union of the two bases (ids prefixed L: / R:)
Bundle product_bundle(const Bundle& a, const Bundle& b);

// the finite-monoid stand-in for the projective line: two capped monoids
// inducting into the sign monoid over the three-object poset <1>
Bundle p1_analog_bundle();

// --- bundle morphisms ------------------------------------------------------

// (phi, per-object adjoint pairs lambda_i -| rho_i) from src to dst, where
// rho_i carries fiber i of src to fiber phi(i) of dst and commutes strictly
// with the right-hand structure functors
struct BundleMor {
  FinFunctor phi;
  std::map<Obj, FiberAdj> comp;
};
std::vector<std::string> validate_bundle_mor(const Bundle& src, const Bundle& dst,
                                             const BundleMor& m);
// the I-morphism induced by a natural family of monoid maps g -> g'
// (components alpha_i : G_i -> G'_i), from the g'-bundle to the g-bundle
BundleMor monoid_bundle_mor(const Bundle& src, const Bundle& dst,
                            const std::map<Obj, MonHom>& alpha);

// --- Grothendieck construction --------------------------------------------

// The total category materialized over an explicit finite universe of fiber
// objects: objects (i, Y), morphisms (sigma : i -> j, A : Y -> U_sigma Z),
// composition (tau, B) . (sigma, A) = (tau.sigma, U_sigma(B) . A).
// Requires enumerable fibers (pointed sets / M-sets).
struct TotalCat {
  FinCat cat;
  FinFunctor proj;  // onto the base
  std::map<Obj, std::pair<Obj, long>> obj_of;        // total object -> (i, index)
  std::map<MorId, std::pair<MorId, long>> arrow_of;  // total morphism -> (sigma, index)
  std::map<MorId, CMor> flat_of;                     // total morphism -> its A
  std::map<Obj, std::vector<CObj>> universe;
};
TotalCat grothendieck(const Bundle& b, const std::map<Obj, std::vector<CObj>>& universe);

}  // namespace twk
