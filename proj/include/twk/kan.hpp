#pragma once
// Pointwise Kan extensions of twisted diagrams along a base functor
// phi : I -> J.  The left extension evaluates at j as the colimit of the
// comma-shaped diagram (i, sigma : phi(i) -> j) |-> F_sigma(Y_i) inside the
// fiber C_j; the right extension dually takes the limit over
// (i, sigma : j -> phi(i)) of U_sigma(Y_i).  Units and counits fall out of
// the stored per-object (co)limit certificates, and the free diagram on a
// single fiber object is the same colimit formula specialised to a
// one-object source, built here directly as a routed coproduct.

#include <map>

#include "twk/twisted.hpp"

namespace twk {

// the comma-shaped diagram in C_j whose colimit is the left extension at j.
// Built by pulling y back along the comma projection and pushing it through
// the fiber adjunctions of the sigma legs, so functoriality of the result
// is inherited rather than asserted.
CDiagram comma_diagram(const Bundle& b, const FinFunctor& phi,
                       const TwDiagram& y, const Obj& j);
// dual shape for the right extension: (i, sigma : j -> phi(i)) |-> U_sigma(Y_i)
CDiagram comma_diagram_op(const Bundle& b, const FinFunctor& phi,
                          const TwDiagram& y, const Obj& j);

// A computed extension.  For lan: unit eta_Y : Y -> phi* L(Y) and counit
// at the extension itself, L(phi* L(Y)) -> L(Y), so both triangular
// identities can be checked from results of this shape alone.  For ran the
// roles swap: counit eps_Y : phi* R(Y) -> Y and unit R(Y) -> R(phi* R(Y)).
struct KanResult {
  TwDiagram extension;  // over b
  TwMap unit, counit;
  std::map<Obj, ColimitCert> colim_certs;  // lan, keyed by objects of J
  std::map<Obj, LimitCert> lim_certs;      // ran
};

// y lives over inverse_image_bundle(phi, b); the extension lives over b.
// Every structure map of the extension is produced by a mediator whose
// competing (co)cone is validated on the way through, so the naturality of
// the routed legs is checked at runtime on every call.
KanResult lan(const Bundle& b, const FinFunctor& phi, const TwDiagram& y);
KanResult ran(const Bundle& b, const FinFunctor& phi, const TwDiagram& y);

// action on a map f : Y -> Y', mediated through the stored certificates
TwMap lan_map(const Bundle& b, const FinFunctor& phi, const KanResult& ky,
              const KanResult& kz, const TwMap& f);
TwMap ran_map(const Bundle& b, const FinFunctor& phi, const KanResult& ky,
              const KanResult& kz, const TwMap& f);

// counit L(phi* Z) -> Z at an arbitrary Z over b, given the computed
// extension of phi* Z, and its dual unit Z -> R(phi* Z)
TwMap lan_counit_at(const FinFunctor& phi, const KanResult& kpz,
                    const TwDiagram& z);
TwMap ran_unit_at(const FinFunctor& phi, const KanResult& kpz,
                  const TwDiagram& z);

// the free twisted diagram on a fiber object a sitting at index object i:
// component at j is the coproduct over hom(i, j) of F_alpha(a), and the
// structure map over beta routes the alpha-summand into the
// (beta.alpha)-summand through the canonical comparison
TwDiagram free_diagram(const Bundle& b, const Obj& i, const CObj& a);

// the free construction's action on a fiber morphism f at i: each alpha
// summand maps by F_alpha(f) into the alpha summand of the target
TwMap free_map(const Bundle& b, const Obj& i, const CMor& f);

}  // namespace twk
