#include "twk/kan.hpp"

#include <utility>
#include <vector>

namespace twk {

namespace {

// parts is a bijection onto the (i, sigma) pairs, so a scan is a lookup
const Obj& comma_obj(const CommaCat& cm, const Obj& i, const MorId& sigma) {
  for (const auto& [o, p] : cm.parts)
    if (p.first == i && p.second == sigma) return o;
  throw math_error("comma_obj: no comma object for (" + i + ", " + sigma + ")");
}

// the constant functor at j, sending every arrow to the identity
FinFunctor const_functor(const FinCat& src, const FinCat& dst, const Obj& j) {
  FinFunctor f;
  f.src = src;
  f.dst = dst;
  for (const Obj& o : src.objs) f.on_obj[o] = j;
  for (const auto& md : src.mors) f.on_mor[md.id] = dst.idmor.at(j);
  return f;
}

// a twisted diagram over a trivial bundle is an ordinary functor; read it
// off as a concrete diagram (identity entries synthesized by flat_at)
CDiagram functor_of(const FinCat& shape, const ConcreteCat& c, const TwDiagram& t) {
  CDiagram d;
  d.cat = c;
  d.shape = shape;
  for (const Obj& o : shape.objs) d.ob[o] = evaluate(t, o);
  for (const auto& md : shape.mors) d.mo[md.id] = flat_at(t, md.id);
  return d;
}

}  // namespace

CDiagram comma_diagram(const Bundle& b, const FinFunctor& phi,
                       const TwDiagram& y, const Obj& j) {
  CommaCat cm = comma_over(phi, j);
  const ConcreteCat& cj = b.fiber_at(j);
  // pull y to the comma shape, then push each (i, sigma) component through
  // F_sigma; the strict composition of the U's makes the pushed structure
  // maps land on the nose, so the result is a functor by construction
  TwDiagram pulled = inverse_image_diagram(cm.proj, y);
  BundleMor psi;
  psi.phi = cm.proj;
  for (const auto& [o, p] : cm.parts) psi.comp[o] = b.arrow_adj(p.second);
  TwDiagram tw = psi_inverse(trivial_bundle(cm.cat, cj), y.bundle, psi, pulled);
  return functor_of(cm.cat, cj, tw);
}

CDiagram comma_diagram_op(const Bundle& b, const FinFunctor& phi,
                          const TwDiagram& y, const Obj& j) {
  CommaCat cm = comma_under(phi, j);
  const ConcreteCat& cj = b.fiber_at(j);
  // dual: push each (i, sigma : j -> phi(i)) component down through U_sigma
  TwDiagram pulled = inverse_image_diagram(cm.proj, y);
  BundleMor psi;
  psi.phi = const_functor(cm.cat, b.base, j);
  for (const auto& [o, p] : cm.parts) psi.comp[o] = b.arrow_adj(p.second);
  TwDiagram tw = psi_direct(pulled.bundle, b, psi, pulled);
  return functor_of(cm.cat, cj, tw);
}

namespace {

// extension, unit, and certificates; the counit needs a second extension
// pass, so the public entry points bolt it on afterwards
KanResult lan_core(const Bundle& b, const FinFunctor& phi, const TwDiagram& y) {
  KanResult k;
  std::map<Obj, CommaCat> cms;
  k.extension.bundle = b;
  for (const Obj& j : b.base.objs) {
    cms.emplace(j, comma_over(phi, j));
    k.colim_certs.emplace(j, colimit(comma_diagram(b, phi, y, j)));
    k.extension.ob[j] = k.colim_certs.at(j).cocone.apex;
  }
  for (const auto& md : b.base.mors) {
    if (b.base.is_id(md.id)) continue;  // alpha : j -> k
    const ColimitCert& cj = k.colim_certs.at(md.src);
    const ConcreteCat& ck = b.fiber_at(md.dst);
    // each (i, sigma) summand routes into the (i, alpha.sigma) leg of the
    // target colimit; transposing across alpha gives a cocone on the source
    // diagram, and its mediator is the flat structure map.  The mediator
    // validates the cocone, so naturality of the routed legs is checked on
    // every call rather than taken on faith.
    Cocone cc;
    cc.apex = apply_U(b, md.id, k.extension.ob.at(md.dst));
    for (const auto& [o, p] : cms.at(md.src).parts) {
      MorId routed = b.base.compose(md.id, p.second);
      CMor t = compose_c(ck,
                         k.colim_certs.at(md.dst).cocone.legs.at(
                             comma_obj(cms.at(md.dst), p.first, routed)),
                         uniqueness_iso_fwd(b, p.second, md.id, evaluate(y, p.first)));
      cc.legs[o] = flat_of(b, md.id, t, cj.diag.ob.at(o));
    }
    k.extension.flat[md.id] = colimit_mediator(cj, cc);
  }
  // the unit component at i is the colimit leg over (i, id_phi(i))
  k.unit.src = y;
  k.unit.dst = inverse_image_diagram(phi, k.extension);
  for (const Obj& i : phi.src.objs) {
    const Obj& fi = phi.ob(i);
    k.unit.comp[i] = k.colim_certs.at(fi).cocone.legs.at(
        comma_obj(cms.at(fi), i, b.base.idmor.at(fi)));
  }
  return k;
}

KanResult ran_core(const Bundle& b, const FinFunctor& phi, const TwDiagram& y) {
  KanResult k;
  std::map<Obj, CommaCat> cms;
  k.extension.bundle = b;
  for (const Obj& j : b.base.objs) {
    cms.emplace(j, comma_under(phi, j));
    k.lim_certs.emplace(j, limit(comma_diagram_op(b, phi, y, j)));
    k.extension.ob[j] = k.lim_certs.at(j).cone.apex;
  }
  for (const auto& md : b.base.mors) {
    if (b.base.is_id(md.id)) continue;  // alpha : j -> k
    const LimitCert& lk = k.lim_certs.at(md.dst);
    const ConcreteCat& cj = b.fiber_at(md.src);
    // R_j -> U_alpha(R_k) through the auxiliary limit of U_alpha applied to
    // the target-shaped diagram: mediate from R_j via the (i, tau.alpha)
    // legs, mediate from U_alpha(R_k) via the pushed-down legs, and invert
    // the second mediator (U preserves limits; inverse_of throws otherwise)
    CDiagram aux;
    aux.cat = cj;
    aux.shape = lk.diag.shape;
    for (const auto& [o, x] : lk.diag.ob) aux.ob[o] = apply_U(b, md.id, x);
    for (const auto& [m, f] : lk.diag.mo) aux.mo[m] = apply_U_mor(b, md.id, f);
    LimitCert la = limit(aux);
    Cone c1;
    c1.apex = k.extension.ob.at(md.src);
    for (const auto& [o, p] : cms.at(md.dst).parts)
      c1.legs[o] = k.lim_certs.at(md.src).cone.legs.at(
          comma_obj(cms.at(md.src), p.first, b.base.compose(p.second, md.id)));
    Cone c2;
    c2.apex = apply_U(b, md.id, k.extension.ob.at(md.dst));
    for (const auto& [o, f] : lk.cone.legs) c2.legs[o] = apply_U_mor(b, md.id, f);
    k.extension.flat[md.id] = compose_c(cj, inverse_of(cj, limit_mediator(la, c2)),
                                        limit_mediator(la, c1));
  }
  // the counit component at i is the cone leg over (i, id_phi(i))
  k.counit.src = inverse_image_diagram(phi, k.extension);
  k.counit.dst = y;
  for (const Obj& i : phi.src.objs) {
    const Obj& fi = phi.ob(i);
    k.counit.comp[i] = k.lim_certs.at(fi).cone.legs.at(
        comma_obj(cms.at(fi), i, b.base.idmor.at(fi)));
  }
  return k;
}

}  // namespace

KanResult lan(const Bundle& b, const FinFunctor& phi, const TwDiagram& y) {
  KanResult k = lan_core(b, phi, y);
  KanResult k2 = lan_core(b, phi, inverse_image_diagram(phi, k.extension));
  k.counit = lan_counit_at(phi, k2, k.extension);
  return k;
}

KanResult ran(const Bundle& b, const FinFunctor& phi, const TwDiagram& y) {
  KanResult k = ran_core(b, phi, y);
  KanResult k2 = ran_core(b, phi, inverse_image_diagram(phi, k.extension));
  k.unit = ran_unit_at(phi, k2, k.extension);
  return k;
}

TwMap lan_map(const Bundle& b, const FinFunctor& phi, const KanResult& ky,
              const KanResult& kz, const TwMap& f) {
  TwMap out;
  out.src = ky.extension;
  out.dst = kz.extension;
  for (const auto& [j, cert] : ky.colim_certs) {
    CommaCat cm = comma_over(phi, j);
    Cocone cc;
    cc.apex = evaluate(kz.extension, j);
    for (const auto& [o, p] : cm.parts)
      cc.legs[o] = compose_c(b.fiber_at(j), kz.colim_certs.at(j).cocone.legs.at(o),
                             apply_F_mor(b, p.second, f.comp.at(p.first)));
    out.comp[j] = colimit_mediator(cert, cc);
  }
  return out;
}

TwMap ran_map(const Bundle& b, const FinFunctor& phi, const KanResult& ky,
              const KanResult& kz, const TwMap& f) {
  TwMap out;
  out.src = ky.extension;
  out.dst = kz.extension;
  for (const auto& [j, cert] : kz.lim_certs) {
    CommaCat cm = comma_under(phi, j);
    Cone c;
    c.apex = evaluate(ky.extension, j);
    for (const auto& [o, p] : cm.parts)
      c.legs[o] = compose_c(b.fiber_at(j), apply_U_mor(b, p.second, f.comp.at(p.first)),
                            ky.lim_certs.at(j).cone.legs.at(o));
    out.comp[j] = limit_mediator(cert, c);
  }
  return out;
}

TwMap lan_counit_at(const FinFunctor& phi, const KanResult& kpz,
                    const TwDiagram& z) {
  TwMap eps;
  eps.src = kpz.extension;
  eps.dst = z;
  // the sharp structure maps of z form a cocone on the comma diagram of
  // phi* z; the mediator out of each stored colimit is the counit component
  for (const auto& [j, cert] : kpz.colim_certs) {
    CommaCat cm = comma_over(phi, j);
    Cocone cc;
    cc.apex = evaluate(z, j);
    for (const auto& [o, p] : cm.parts) cc.legs[o] = sharp_at(z, p.second);
    eps.comp[j] = colimit_mediator(cert, cc);
  }
  return eps;
}

TwMap ran_unit_at(const FinFunctor& phi, const KanResult& kpz,
                  const TwDiagram& z) {
  TwMap eta;
  eta.src = z;
  eta.dst = kpz.extension;
  // dually, the flat structure maps of z form a cone over the dual comma
  // diagram of phi* z
  for (const auto& [j, cert] : kpz.lim_certs) {
    CommaCat cm = comma_under(phi, j);
    Cone c;
    c.apex = evaluate(z, j);
    for (const auto& [o, p] : cm.parts) c.legs[o] = flat_at(z, p.second);
    eta.comp[j] = limit_mediator(cert, c);
  }
  return eta;
}

namespace {

// the coproduct over hom(i, j) of the F_alpha images of a, as a certificate
ColimitCert free_part(const Bundle& b, const Obj& i, const CObj& a, const Obj& j) {
  CDiagram d;
  d.cat = b.fiber_at(j);
  std::vector<MorId> homs = b.base.hom(i, j);
  d.shape = discrete_cat(homs);
  for (const MorId& al : homs) {
    d.ob[al] = apply_F(b, al, a);
    d.mo[d.shape.idmor.at(al)] = id_mor_c(d.cat, d.ob.at(al));
  }
  return colimit(d);
}

}  // namespace

TwDiagram free_diagram(const Bundle& b, const Obj& i, const CObj& a) {
  TwDiagram out;
  out.bundle = b;
  std::map<Obj, ColimitCert> certs;
  std::map<Obj, std::vector<MorId>> homs;
  for (const Obj& j : b.base.objs) {
    homs[j] = b.base.hom(i, j);
    certs.emplace(j, free_part(b, i, a, j));
    out.ob[j] = certs.at(j).cocone.apex;
  }
  for (const auto& md : b.base.mors) {
    if (b.base.is_id(md.id)) continue;  // beta : j -> k
    Cocone cc;
    cc.apex = apply_U(b, md.id, out.ob.at(md.dst));
    for (const MorId& al : homs.at(md.src)) {
      CMor t = compose_c(b.fiber_at(md.dst),
                         certs.at(md.dst).cocone.legs.at(b.base.compose(md.id, al)),
                         uniqueness_iso_fwd(b, al, md.id, a));
      cc.legs[al] = flat_of(b, md.id, t, certs.at(md.src).diag.ob.at(al));
    }
    out.flat[md.id] = colimit_mediator(certs.at(md.src), cc);
  }
  return out;
}

TwMap free_map(const Bundle& b, const Obj& i, const CMor& f) {
  TwMap out;
  out.src = free_diagram(b, i, f.src);
  out.dst = free_diagram(b, i, f.dst);
  for (const Obj& j : b.base.objs) {
    // recomputing the two coproducts gives literally the certificates the
    // free diagrams were built from, canonical bases being deterministic
    ColimitCert cs = free_part(b, i, f.src, j);
    ColimitCert cd = free_part(b, i, f.dst, j);
    Cocone cc;
    cc.apex = cd.cocone.apex;
    for (const MorId& al : b.base.hom(i, j))
      cc.legs[al] = compose_c(b.fiber_at(j), cd.cocone.legs.at(al),
                              apply_F_mor(b, al, f));
    out.comp[j] = colimit_mediator(cs, cc);
  }
  return out;
}

}  // namespace twk
