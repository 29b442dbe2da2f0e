#include "twk/bundle.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace twk {

namespace {

bool mset_like(CKind k) { return k == CKind::PtdSet || k == CKind::MSet; }

// can an adjoint pair connect these two fibers at all?
bool kinds_linkable(const ConcreteCat& lower, const ConcreteCat& upper) {
  if (mset_like(lower.kind) && mset_like(upper.kind)) return true;
  if (lower.kind != upper.kind) return false;
  switch (lower.kind) {
    case CKind::Vect:
    case CKind::Chain:
      return lower.ring.tag == upper.ring.tag && lower.ring.p == upper.ring.p;
    case CKind::Prod: {
      if (lower.parts.size() != upper.parts.size()) return false;
      for (size_t t = 0; t < lower.parts.size(); ++t)
        if (!kinds_linkable(lower.parts[t], upper.parts[t])) return false;
      return true;
    }
    default:
      return false;
  }
}

std::vector<std::string> adj_typing(const ConcreteCat& lower, const ConcreteCat& upper,
                                    const FiberAdj& a, const std::string& where) {
  std::vector<std::string> out;
  if (!kinds_linkable(lower, upper)) {
    out.push_back(where + ": fibers of incompatible kinds");
    return out;
  }
  if (mset_like(lower.kind)) {
    if (!(a.hom.src == lower.monoid) || !(a.hom.dst == upper.monoid))
      out.push_back(where + ": monoid map endpoints do not match the fibers");
    else if (!validate_monhom(a.hom))
      out.push_back(where + ": not a monoid homomorphism");
  } else if (lower.kind == CKind::Vect) {
    if (a.weight < 0) out.push_back(where + ": negative weight");
  } else if (lower.kind == CKind::Chain) {
    if (a.shift < 0) out.push_back(where + ": negative shift");
  } else if (lower.kind == CKind::Prod) {
    if (a.parts.size() != lower.parts.size()) {
      out.push_back(where + ": wrong number of adjunction components");
    } else {
      for (size_t t = 0; t < a.parts.size(); ++t) {
        auto sub = adj_typing(lower.parts[t], upper.parts[t], a.parts[t],
                              where + " factor " + std::to_string(t));
        out.insert(out.end(), sub.begin(), sub.end());
      }
    }
  }
  return out;
}

MSetObj point_ms(const Monoid& m) {
  MSetObj p;
  p.n = 1;
  p.act.assign(1, std::vector<long>(static_cast<size_t>(m.size()), 0));
  return p;
}

MSetObj free_orbit_ms(const Monoid& m) {
  // basepoint plus one free orbit: element 1+a is "a", acted through the table
  MSetObj x;
  x.n = 1 + m.size();
  x.act.assign(static_cast<size_t>(x.n), std::vector<long>(static_cast<size_t>(m.size()), 0));
  for (long a = 0; a < m.size(); ++a)
    for (long b = 0; b < m.size(); ++b)
      x.act[static_cast<size_t>(1 + a)][static_cast<size_t>(b)] = 1 + m.times(a, b);
  return x;
}

MSetObj fixed_two_ms(const Monoid& m) {
  // basepoint plus one fixed point
  MSetObj x;
  x.n = 2;
  x.act.assign(2, std::vector<long>(static_cast<size_t>(m.size()), 0));
  for (long b = 0; b < m.size(); ++b) x.act[1][static_cast<size_t>(b)] = 1;
  return x;
}

// flatten a morphism of an enumerable fiber to a comparable key
void mor_key_into(const CMor& f, std::vector<long>& key) {
  if (f.kind == CKind::Prod) {
    for (const CMor& p : f.parts) {
      mor_key_into(p, key);
      key.push_back(-1);
    }
  } else {
    key.insert(key.end(), f.map.begin(), f.map.end());
  }
}

std::vector<long> mor_key(const CMor& f) {
  std::vector<long> key;
  mor_key_into(f, key);
  return key;
}

bool enumerable_cat(const ConcreteCat& c) {
  if (mset_like(c.kind)) return true;
  if (c.kind != CKind::Prod) return false;
  for (const auto& p : c.parts)
    if (!enumerable_cat(p)) return false;
  return true;
}

}  // namespace

FiberAdj identity_adj(const ConcreteCat& c) {
  FiberAdj a;
  if (mset_like(c.kind)) {
    a.hom = id_monhom(c.monoid);
  } else if (c.kind == CKind::Prod) {
    for (const auto& p : c.parts) a.parts.push_back(identity_adj(p));
  }
  return a;  // weight 1, shift 0 already
}

FiberAdj composite_adj(const ConcreteCat& c, const FiberAdj& sigma, const FiberAdj& tau) {
  FiberAdj r;
  r.hom = compose_monhom(tau.hom, sigma.hom);
  r.weight = sigma.weight * tau.weight;
  r.shift = sigma.shift + tau.shift;
  if (c.kind == CKind::Prod) {
    if (sigma.parts.size() != tau.parts.size())
      throw math_error("composite_adj: component counts differ");
    for (size_t t = 0; t < sigma.parts.size(); ++t)
      r.parts.push_back(composite_adj(c.parts[t], sigma.parts[t], tau.parts[t]));
  }
  return r;
}

bool is_identity_adj(const ConcreteCat& lower, const ConcreteCat& upper, const FiberAdj& a) {
  if (!(lower == upper)) return false;
  return a == identity_adj(lower);
}

// --- the adjoint pair itself ----------------------------------------------

CObj fa_U(const ConcreteCat& lower, const ConcreteCat& upper, const FiberAdj& a, const CObj& y) {
  switch (lower.kind) {
    case CKind::PtdSet:
    case CKind::MSet:
      return obj_mset(lower, restrict_mset(a.hom, y.ms));
    case CKind::Vect:
      return obj_vect(lower, a.weight * y.dim);
    case CKind::Chain:
      return obj_chain(lower, shift_down_cx(y.cx, a.shift));
    case CKind::Prod: {
      std::vector<CObj> parts;
      for (size_t t = 0; t < a.parts.size(); ++t)
        parts.push_back(fa_U(lower.parts[t], upper.parts[t], a.parts[t], y.parts[t]));
      return obj_prod(lower, std::move(parts));
    }
  }
  throw math_error("fa_U: unknown kind");
}

CMor fa_U_mor(const ConcreteCat& lower, const ConcreteCat& upper, const FiberAdj& a,
              const CMor& g) {
  CObj us = fa_U(lower, upper, a, g.src);
  CObj ud = fa_U(lower, upper, a, g.dst);
  switch (lower.kind) {
    case CKind::PtdSet:
    case CKind::MSet:
      return mor_mset(lower, us, ud, restrict_map(a.hom, g.map));
    case CKind::Vect:
      return mor_vect(lower, us, ud, kron(lower.ring, Mat::ident(a.weight), g.mat));
    case CKind::Chain:
      return mor_chain(lower, shift_down_map(g.ch, a.shift));
    case CKind::Prod: {
      std::vector<CMor> parts;
      for (size_t t = 0; t < a.parts.size(); ++t)
        parts.push_back(fa_U_mor(lower.parts[t], upper.parts[t], a.parts[t], g.parts[t]));
      return mor_prod(lower, std::move(parts));
    }
  }
  throw math_error("fa_U_mor: unknown kind");
}

CObj fa_F(const ConcreteCat& lower, const ConcreteCat& upper, const FiberAdj& a, const CObj& x) {
  switch (lower.kind) {
    case CKind::PtdSet:
    case CKind::MSet:
      return obj_mset(upper, induct_mset(a.hom, x.ms).obj);
    case CKind::Vect:
      return obj_vect(upper, x.dim * a.weight);
    case CKind::Chain:
      return obj_chain(upper, shift_up_cx(x.cx, a.shift));
    case CKind::Prod: {
      std::vector<CObj> parts;
      for (size_t t = 0; t < a.parts.size(); ++t)
        parts.push_back(fa_F(lower.parts[t], upper.parts[t], a.parts[t], x.parts[t]));
      return obj_prod(upper, std::move(parts));
    }
  }
  throw math_error("fa_F: unknown kind");
}

CMor fa_F_mor(const ConcreteCat& lower, const ConcreteCat& upper, const FiberAdj& a,
              const CMor& f) {
  switch (lower.kind) {
    case CKind::PtdSet:
    case CKind::MSet: {
      Induction isrc = induct_mset(a.hom, f.src.ms);
      Induction idst = induct_mset(a.hom, f.dst.ms);
      return mor_mset(upper, obj_mset(upper, isrc.obj), obj_mset(upper, idst.obj),
                      induct_map(a.hom, isrc, idst, f.map));
    }
    case CKind::Vect:
      return mor_vect(upper, fa_F(lower, upper, a, f.src), fa_F(lower, upper, a, f.dst),
                      kron(upper.ring, f.mat, Mat::ident(a.weight)));
    case CKind::Chain:
      return mor_chain(upper, shift_up_map(f.ch, a.shift));
    case CKind::Prod: {
      std::vector<CMor> parts;
      for (size_t t = 0; t < a.parts.size(); ++t)
        parts.push_back(fa_F_mor(lower.parts[t], upper.parts[t], a.parts[t], f.parts[t]));
      return mor_prod(upper, std::move(parts));
    }
  }
  throw math_error("fa_F_mor: unknown kind");
}

CMor fa_unit(const ConcreteCat& lower, const ConcreteCat& upper, const FiberAdj& a,
             const CObj& x) {
  switch (lower.kind) {
    case CKind::PtdSet:
    case CKind::MSet: {
      Induction ind = induct_mset(a.hom, x.ms);
      CObj ufx = obj_mset(lower, restrict_mset(a.hom, ind.obj));
      return mor_mset(lower, x, ufx, ind.unit);
    }
    case CKind::Vect: {
      // X -> Hom(W, X (x) W), e |-> sum_k e_k* (x) (e (x) e_k)
      long w = a.weight, n = x.dim;
      Mat N(w * n * w, n);
      for (long k = 0; k < w; ++k)
        for (long e = 0; e < n; ++e)
          N.at(k * (n * w) + e * w + k, e) = 1;
      CObj fx = fa_F(lower, upper, a, x);
      return mor_vect(lower, x, fa_U(lower, upper, a, fx), N);
    }
    case CKind::Chain:
      return mor_chain(lower, shift_unit(x.cx, a.shift));
    case CKind::Prod: {
      std::vector<CMor> parts;
      for (size_t t = 0; t < a.parts.size(); ++t)
        parts.push_back(fa_unit(lower.parts[t], upper.parts[t], a.parts[t], x.parts[t]));
      return mor_prod(lower, std::move(parts));
    }
  }
  throw math_error("fa_unit: unknown kind");
}

CMor fa_counit(const ConcreteCat& lower, const ConcreteCat& upper, const FiberAdj& a,
               const CObj& y) {
  switch (lower.kind) {
    case CKind::PtdSet:
    case CKind::MSet: {
      CObj uy = obj_mset(lower, restrict_mset(a.hom, y.ms));
      CObj fuy = obj_mset(upper, induct_mset(a.hom, uy.ms).obj);
      return mor_mset(upper, fuy, y, induct_counit(a.hom, y.ms));
    }
    case CKind::Vect: {
      // Hom(W, Y) (x) W -> Y, evaluation
      long w = a.weight, n = y.dim;
      Mat E(n, w * n * w);
      for (long k = 0; k < w; ++k)
        for (long r = 0; r < n; ++r)
          E.at(r, (k * n + r) * w + k) = 1;
      CObj uy = fa_U(lower, upper, a, y);
      return mor_vect(upper, fa_F(lower, upper, a, uy), y, E);
    }
    case CKind::Chain:
      return mor_chain(upper, shift_counit(y.cx, a.shift));
    case CKind::Prod: {
      std::vector<CMor> parts;
      for (size_t t = 0; t < a.parts.size(); ++t)
        parts.push_back(fa_counit(lower.parts[t], upper.parts[t], a.parts[t], y.parts[t]));
      return mor_prod(upper, std::move(parts));
    }
  }
  throw math_error("fa_counit: unknown kind");
}

// --- bundles --------------------------------------------------------------

const ConcreteCat& Bundle::fiber_at(const Obj& i) const {
  auto it = fiber.find(i);
  if (it == fiber.end()) throw math_error("Bundle: no fiber over " + i);
  return it->second;
}

FiberAdj Bundle::arrow_adj(const MorId& s) const {
  if (base.is_id(s)) return identity_adj(fiber_at(base.mor(s).src));
  auto it = adj.find(s);
  if (it == adj.end()) throw math_error("Bundle: no adjunction data for " + s);
  return it->second;
}

CObj apply_U(const Bundle& b, const MorId& s, const CObj& y) {
  const auto& d = b.base.mor(s);
  return fa_U(b.fiber_at(d.src), b.fiber_at(d.dst), b.arrow_adj(s), y);
}

CMor apply_U_mor(const Bundle& b, const MorId& s, const CMor& g) {
  const auto& d = b.base.mor(s);
  return fa_U_mor(b.fiber_at(d.src), b.fiber_at(d.dst), b.arrow_adj(s), g);
}

CObj apply_F(const Bundle& b, const MorId& s, const CObj& x) {
  const auto& d = b.base.mor(s);
  return fa_F(b.fiber_at(d.src), b.fiber_at(d.dst), b.arrow_adj(s), x);
}

CMor apply_F_mor(const Bundle& b, const MorId& s, const CMor& f) {
  const auto& d = b.base.mor(s);
  return fa_F_mor(b.fiber_at(d.src), b.fiber_at(d.dst), b.arrow_adj(s), f);
}

CMor unit_at(const Bundle& b, const MorId& s, const CObj& x) {
  const auto& d = b.base.mor(s);
  return fa_unit(b.fiber_at(d.src), b.fiber_at(d.dst), b.arrow_adj(s), x);
}

CMor counit_at(const Bundle& b, const MorId& s, const CObj& y) {
  const auto& d = b.base.mor(s);
  return fa_counit(b.fiber_at(d.src), b.fiber_at(d.dst), b.arrow_adj(s), y);
}

CMor sharp_of(const Bundle& b, const MorId& s, const CMor& flat, const CObj& y) {
  const auto& d = b.base.mor(s);
  const ConcreteCat& upper = b.fiber_at(d.dst);
  return compose_c(upper, counit_at(b, s, y), apply_F_mor(b, s, flat));
}

CMor flat_of(const Bundle& b, const MorId& s, const CMor& sharp, const CObj& x) {
  const auto& d = b.base.mor(s);
  const ConcreteCat& lower = b.fiber_at(d.src);
  return compose_c(lower, apply_U_mor(b, s, sharp), unit_at(b, s, x));
}

// --- test basis -----------------------------------------------------------

std::vector<CObj> basis_objs(const ConcreteCat& c) {
  switch (c.kind) {
    case CKind::PtdSet:
    case CKind::MSet: {
      std::vector<CObj> out;
      out.push_back(obj_mset(c, point_ms(c.monoid)));
      out.push_back(obj_mset(c, free_orbit_ms(c.monoid)));
      out.push_back(obj_mset(c, fixed_two_ms(c.monoid)));
      return out;
    }
    case CKind::Vect:
      return {obj_vect(c, 0), obj_vect(c, 1), obj_vect(c, 2)};
    case CKind::Chain:
      return {obj_chain(c, zero_cx(c.ring)), obj_chain(c, sphere_cx(c.ring, 0)),
              obj_chain(c, sphere_cx(c.ring, 1)), obj_chain(c, disk_cx(c.ring, 1))};
    case CKind::Prod: {
      std::vector<std::vector<CObj>> per;
      for (const auto& p : c.parts) per.push_back(basis_objs(p));
      // diagonal-ish sample instead of the full cartesian product
      size_t count = 0;
      for (const auto& v : per) count = std::max(count, v.size());
      count = std::min<size_t>(count, 3);
      std::vector<CObj> out;
      for (size_t k = 0; k < count; ++k) {
        std::vector<CObj> parts;
        for (const auto& v : per) parts.push_back(v[k % v.size()]);
        out.push_back(obj_prod(c, std::move(parts)));
      }
      return out;
    }
  }
  throw math_error("basis_objs: unknown kind");
}

std::vector<CMor> basis_mors(const ConcreteCat& c) {
  switch (c.kind) {
    case CKind::PtdSet:
    case CKind::MSet: {
      std::vector<CObj> objs = basis_objs(c);
      std::vector<CMor> out;
      for (const CObj& a : objs)
        for (const CObj& b : objs) {
          std::vector<CMor> homs = enumerate_hom(c, a, b);
          for (size_t t = 0; t < homs.size() && t < 2; ++t) out.push_back(homs[t]);
          if (out.size() >= 10) return out;
        }
      return out;
    }
    case CKind::Vect: {
      CObj v1 = obj_vect(c, 1), v2 = obj_vect(c, 2);
      Mat incl(2, 1), proj(1, 2), nil(2, 2), dbl(1, 1);
      incl.at(0, 0) = 1;
      proj.at(0, 1) = 1;
      nil.at(0, 1) = 1;
      dbl.at(0, 0) = 2;
      return {mor_vect(c, v1, v2, incl), mor_vect(c, v2, v1, proj),
              mor_vect(c, v2, v2, nil), mor_vect(c, v1, v1, dbl)};
    }
    case CKind::Chain: {
      CObj s0 = obj_chain(c, sphere_cx(c.ring, 0));
      CObj s1 = obj_chain(c, sphere_cx(c.ring, 1));
      CObj d1 = obj_chain(c, disk_cx(c.ring, 1));
      CMor att = mor_chain(c, gen_cof(c.ring, 1));
      ChainMap collapse = make_map(d1.cx, s1.cx, {Mat(0, 1), Mat::ident(1)});
      CMor col = mor_chain(c, collapse);
      CMor zer = mor_chain(c, zero_map(s0.cx, s1.cx));
      return {att, col, zer};
    }
    case CKind::Prod: {
      std::vector<std::vector<CMor>> per;
      for (const auto& p : c.parts) per.push_back(basis_mors(p));
      size_t count = 0;
      for (const auto& v : per) count = std::max(count, v.size());
      count = std::min<size_t>(count, 3);
      std::vector<CMor> out;
      for (size_t k = 0; k < count; ++k) {
        std::vector<CMor> parts;
        for (const auto& v : per) parts.push_back(v[k % v.size()]);
        out.push_back(mor_prod(c, std::move(parts)));
      }
      return out;
    }
  }
  throw math_error("basis_mors: unknown kind");
}

// --- validation -----------------------------------------------------------

namespace {

std::vector<std::string> fiber_report(const ConcreteCat& c, const std::string& where) {
  std::vector<std::string> out;
  switch (c.kind) {
    case CKind::PtdSet:
      if (c.monoid.size() != 1) out.push_back(where + ": pointed-set fiber with a nontrivial monoid");
      break;
    case CKind::MSet:
      for (const auto& v : validate_monoid(c.monoid)) out.push_back(where + ": " + v);
      break;
    case CKind::Vect:
    case CKind::Chain:
      if (c.kind == CKind::Vect && !c.ring.is_field())
        out.push_back(where + ": linear fiber over a non-field");
      break;
    case CKind::Prod:
      for (size_t t = 0; t < c.parts.size(); ++t) {
        auto sub = fiber_report(c.parts[t], where + " factor " + std::to_string(t));
        out.insert(out.end(), sub.begin(), sub.end());
      }
      break;
  }
  return out;
}

}  // namespace

std::vector<std::string> validate_bundle(const Bundle& b) {
  std::vector<std::string> out;
  for (const auto& v : validate_cat(b.base)) out.push_back("base: " + v);
  if (!out.empty()) return out;  // everything below trusts the tables

  for (const Obj& i : b.base.objs) {
    if (!b.fiber.count(i)) {
      out.push_back("object " + i + ": no fiber");
      continue;
    }
    auto f = fiber_report(b.fiber_at(i), "fiber " + i);
    out.insert(out.end(), f.begin(), f.end());
  }
  if (!out.empty()) return out;

  for (const auto& d : b.base.mors) {
    if (b.base.is_id(d.id)) continue;
    if (!b.adj.count(d.id)) {
      out.push_back("arrow " + d.id + ": no adjunction data");
      continue;
    }
    auto t = adj_typing(b.fiber_at(d.src), b.fiber_at(d.dst), b.adj.at(d.id),
                        "arrow " + d.id);
    out.insert(out.end(), t.begin(), t.end());
  }
  if (!out.empty()) return out;

  // strictness of the right-hand side, first on the stored data...
  for (const auto& [pair, h] : b.base.comp) {
    const auto& f = b.base.mor(pair.second);  // f then g
    FiberAdj fa = b.arrow_adj(pair.second), ga = b.arrow_adj(pair.first);
    if (!(composite_adj(b.fiber_at(f.src), fa, ga) == b.arrow_adj(h)))
      out.push_back("composite " + h + " != " + pair.first + " after " + pair.second +
                    ": adjunction data not strictly functorial");
  }
  if (!out.empty()) return out;

  // ...then pointwise on the basis, where the data leaves room (class
  // numbering of inductions, truncation bookkeeping)
  for (const auto& [pair, h] : b.base.comp) {
    const auto& g = b.base.mor(pair.first);
    if (b.base.is_id(pair.first) && b.base.is_id(pair.second)) continue;
    for (const CObj& y : basis_objs(b.fiber_at(g.dst)))
      if (!obj_eq(apply_U(b, h, y), apply_U(b, pair.second, apply_U(b, pair.first, y)))) {
        out.push_back("composite " + h + ": U tables do not compose on the nose");
        break;
      }
    std::vector<CMor> ms = basis_mors(b.fiber_at(g.dst));
    if (!ms.empty()) {
      const CMor& m = ms.front();
      CMor lhs = apply_U_mor(b, h, m);
      CMor rhs = apply_U_mor(b, pair.second, apply_U_mor(b, pair.first, m));
      if (!obj_eq(lhs.src, rhs.src) || !obj_eq(lhs.dst, rhs.dst) || !mor_eq_c(lhs, rhs))
        out.push_back("composite " + h + ": U on morphisms does not compose on the nose");
    }
  }

  // identities act as identities, literally
  for (const Obj& i : b.base.objs) {
    MorId id = b.base.idmor.at(i);
    for (const CObj& x : basis_objs(b.fiber_at(i))) {
      if (!obj_eq(apply_U(b, id, x), x)) out.push_back("identity " + id + ": U_id moves " + i);
      if (!obj_eq(apply_F(b, id, x), x)) out.push_back("identity " + id + ": F_id moves " + i);
    }
    std::vector<CMor> ms = basis_mors(b.fiber_at(i));
    if (!ms.empty()) {
      CMor lhs = apply_F_mor(b, id, ms.front());
      if (!mor_eq_c(lhs, ms.front()))
        out.push_back("identity " + id + ": F_id is not the identity on morphisms");
    }
  }

  // each arrow really carries an adjunction: triangles plus naturality
  for (const auto& d : b.base.mors) {
    if (b.base.is_id(d.id)) continue;
    const ConcreteCat& lower = b.fiber_at(d.src);
    const ConcreteCat& upper = b.fiber_at(d.dst);
    for (const CObj& x : basis_objs(lower)) {
      CObj fx = apply_F(b, d.id, x);
      CMor t1 = compose_c(upper, counit_at(b, d.id, fx), apply_F_mor(b, d.id, unit_at(b, d.id, x)));
      if (!mor_eq_c(t1, id_mor_c(upper, fx)))
        out.push_back("arrow " + d.id + ": triangle identity fails on F");
    }
    for (const CObj& y : basis_objs(upper)) {
      CObj uy = apply_U(b, d.id, y);
      CMor t2 = compose_c(lower, apply_U_mor(b, d.id, counit_at(b, d.id, y)), unit_at(b, d.id, uy));
      if (!mor_eq_c(t2, id_mor_c(lower, uy)))
        out.push_back("arrow " + d.id + ": triangle identity fails on U");
    }
    for (const CMor& f : basis_mors(lower)) {
      CMor lhs = compose_c(lower, unit_at(b, d.id, f.dst), f);
      CMor rhs = compose_c(lower, apply_U_mor(b, d.id, apply_F_mor(b, d.id, f)),
                           unit_at(b, d.id, f.src));
      if (!mor_eq_c(lhs, rhs)) out.push_back("arrow " + d.id + ": unit not natural");
    }
    for (const CMor& g : basis_mors(upper)) {
      CMor lhs = compose_c(upper, g, counit_at(b, d.id, g.src));
      CMor rhs = compose_c(upper, counit_at(b, d.id, g.dst),
                           apply_F_mor(b, d.id, apply_U_mor(b, d.id, g)));
      if (!mor_eq_c(lhs, rhs)) out.push_back("arrow " + d.id + ": counit not natural");
    }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool bundle_eq(const Bundle& a, const Bundle& b) {
  if (a.base.objs != b.base.objs) return false;
  if (a.base.mors.size() != b.base.mors.size()) return false;
  for (size_t k = 0; k < a.base.mors.size(); ++k) {
    const auto &x = a.base.mors[k], &y = b.base.mors[k];
    if (x.id != y.id || x.src != y.src || x.dst != y.dst) return false;
  }
  if (a.base.idmor != b.base.idmor || a.base.comp != b.base.comp) return false;
  if (a.fiber.size() != b.fiber.size() || a.adj.size() != b.adj.size()) return false;
  for (const auto& [i, c] : a.fiber)
    if (!b.fiber.count(i) || !(b.fiber.at(i) == c)) return false;
  for (const auto& [m, d] : a.adj)
    if (!b.adj.count(m) || !(b.adj.at(m) == d)) return false;
  return true;
}

bool f_appears_strict(const Bundle& b) {
  for (const auto& [pair, h] : b.base.comp) {
    const auto& f = b.base.mor(pair.second);
    for (const CObj& x : basis_objs(b.fiber_at(f.src)))
      if (!obj_eq(apply_F(b, h, x), apply_F(b, pair.first, apply_F(b, pair.second, x))))
        return false;
    for (const CMor& m : basis_mors(b.fiber_at(f.src))) {
      CMor lhs = apply_F_mor(b, h, m);
      CMor rhs = apply_F_mor(b, pair.first, apply_F_mor(b, pair.second, m));
      if (!obj_eq(lhs.src, rhs.src) || !obj_eq(lhs.dst, rhs.dst) || !mor_eq_c(lhs, rhs))
        return false;
    }
  }
  return true;
}

// --- uniqueness isomorphism ------------------------------------------------

CMor uniqueness_iso_fwd(const Bundle& b, const MorId& sigma, const MorId& tau, const CObj& x) {
  MorId rho = b.base.compose(tau, sigma);
  const ConcreteCat& top = b.fiber_at(b.base.mor(tau).dst);
  CObj z = apply_F(b, rho, x);
  CObj utz = apply_U(b, tau, z);
  // F_tau F_sigma (eta_rho) , then F_tau (eps_sigma) , then eps_tau
  CMor step1 = apply_F_mor(b, tau, apply_F_mor(b, sigma, unit_at(b, rho, x)));
  CMor step2 = apply_F_mor(b, tau, counit_at(b, sigma, utz));
  CMor step3 = counit_at(b, tau, z);
  return compose_c(top, step3, compose_c(top, step2, step1));
}

CMor uniqueness_iso_bwd(const Bundle& b, const MorId& sigma, const MorId& tau, const CObj& x) {
  MorId rho = b.base.compose(tau, sigma);
  const ConcreteCat& low = b.fiber_at(b.base.mor(sigma).src);
  const ConcreteCat& top = b.fiber_at(b.base.mor(tau).dst);
  CObj fsx = apply_F(b, sigma, x);
  CObj l1x = apply_F(b, tau, fsx);
  CMor eta1 = compose_c(low, apply_U_mor(b, sigma, unit_at(b, tau, fsx)), unit_at(b, sigma, x));
  return compose_c(top, counit_at(b, rho, l1x), apply_F_mor(b, rho, eta1));
}

// --- constructors ----------------------------------------------------------

Bundle trivial_bundle(const FinCat& base, const ConcreteCat& c) {
  Bundle b;
  b.base = base;
  for (const Obj& i : base.objs) b.fiber[i] = c;
  for (const auto& d : base.mors)
    if (!base.is_id(d.id)) b.adj[d.id] = identity_adj(c);
  return b;
}

Bundle monoid_bundle(const FinCat& base, const std::map<Obj, Monoid>& g_ob,
                     const std::map<MorId, MonHom>& g_mor) {
  auto hom_of = [&](const MorId& m) -> MonHom {
    if (base.is_id(m)) return id_monhom(g_ob.at(base.mor(m).src));
    auto it = g_mor.find(m);
    if (it == g_mor.end()) throw math_error("monoid_bundle: no map for arrow " + m);
    return it->second;
  };
  for (const auto& d : base.mors) {
    MonHom h = hom_of(d.id);
    if (!(h.src == g_ob.at(d.src)) || !(h.dst == g_ob.at(d.dst)))
      throw math_error("monoid_bundle: map endpoints wrong at " + d.id);
    if (!validate_monhom(h)) throw math_error("monoid_bundle: not a homomorphism at " + d.id);
  }
  for (const auto& [pair, h] : base.comp)
    if (!(compose_monhom(hom_of(pair.first), hom_of(pair.second)) == hom_of(h)))
      throw math_error("monoid_bundle: maps not functorial at " + h);

  Bundle b;
  b.base = base;
  for (const Obj& i : base.objs) {
    const Monoid& m = g_ob.at(i);
    ConcreteCat c = cat_mset(m);
    if (m.size() == 1) c.kind = CKind::PtdSet;  // honest kind tag, same tables
    b.fiber[i] = c;
  }
  for (const auto& d : base.mors)
    if (!base.is_id(d.id)) {
      FiberAdj a;
      a.hom = g_mor.at(d.id);
      b.adj[d.id] = a;
    }
  return b;
}

Bundle weight_bundle(const FinCat& base, const Ring& r, const std::map<MorId, long>& w) {
  auto w_of = [&](const MorId& m) -> long {
    if (base.is_id(m)) return 1;
    auto it = w.find(m);
    if (it == w.end()) throw math_error("weight_bundle: no weight for arrow " + m);
    return it->second;
  };
  for (const auto& [pair, h] : base.comp)
    if (w_of(pair.first) * w_of(pair.second) != w_of(h))
      throw math_error("weight_bundle: weights not multiplicative at " + h);

  Bundle b;
  b.base = base;
  for (const Obj& i : base.objs) b.fiber[i] = cat_vect(r);
  for (const auto& d : base.mors)
    if (!base.is_id(d.id)) {
      FiberAdj a;
      a.weight = w.at(d.id);
      b.adj[d.id] = a;
    }
  return b;
}

Bundle shift_bundle(const FinCat& base, const Ring& r, const std::map<MorId, long>& k) {
  auto k_of = [&](const MorId& m) -> long {
    if (base.is_id(m)) return 0;
    auto it = k.find(m);
    if (it == k.end()) throw math_error("shift_bundle: no shift for arrow " + m);
    return it->second;
  };
  for (const auto& [pair, h] : base.comp)
    if (k_of(pair.first) + k_of(pair.second) != k_of(h))
      throw math_error("shift_bundle: shifts not additive at " + h);

  Bundle b;
  b.base = base;
  for (const Obj& i : base.objs) b.fiber[i] = cat_chain(r);
  for (const auto& d : base.mors)
    if (!base.is_id(d.id)) {
      FiberAdj a;
      a.shift = k.at(d.id);
      b.adj[d.id] = a;
    }
  return b;
}

Bundle inverse_image_bundle(const FinFunctor& phi, const Bundle& b) {
  if (!validate_functor(phi)) throw math_error("inverse_image_bundle: not a functor");
  Bundle r;
  r.base = phi.src;
  for (const Obj& i : phi.src.objs) r.fiber[i] = b.fiber_at(phi.ob(i));
  for (const auto& d : phi.src.mors)
    if (!phi.src.is_id(d.id)) r.adj[d.id] = b.arrow_adj(phi.mo(d.id));
  return r;
}

Bundle product_bundle(const Bundle& a, const Bundle& b) {
  Bundle r;
  r.base = disjoint_union(a.base, b.base);
  for (const auto& [i, c] : a.fiber) r.fiber["L:" + i] = c;
  for (const auto& [i, c] : b.fiber) r.fiber["R:" + i] = c;
  for (const auto& [m, d] : a.adj) r.adj["L:" + m] = d;
  for (const auto& [m, d] : b.adj) r.adj["R:" + m] = d;
  return r;
}

Bundle p1_analog_bundle() {
  FinCat base = subset_poset(1);  // s0 -> s01 <- s1
  std::map<Obj, Monoid> g_ob = {
      {"s0", capped_nat(2)}, {"s1", capped_nat(2)}, {"s01", bool_monoid()}};
  std::map<MorId, MonHom> g_mor = {{"s0<=s01", sign_hom(2)}, {"s1<=s01", sign_hom(2)}};
  return monoid_bundle(base, g_ob, g_mor);
}

// --- bundle morphisms ------------------------------------------------------

std::vector<std::string> validate_bundle_mor(const Bundle& src, const Bundle& dst,
                                             const BundleMor& m) {
  std::vector<std::string> out;
  if (!validate_functor(m.phi)) {
    out.push_back("base map: not a functor");
    return out;
  }
  for (const Obj& i : src.base.objs) {
    if (!m.comp.count(i)) {
      out.push_back("object " + i + ": no fiber component");
      continue;
    }
    auto t = adj_typing(dst.fiber_at(m.phi.ob(i)), src.fiber_at(i), m.comp.at(i),
                        "object " + i);
    out.insert(out.end(), t.begin(), t.end());
  }
  if (!out.empty()) return out;

  for (const auto& d : src.base.mors) {
    if (src.base.is_id(d.id)) continue;
    const Obj &i = d.src, &j = d.dst;
    const ConcreteCat& di = dst.fiber_at(m.phi.ob(i));
    const ConcreteCat& dj = dst.fiber_at(m.phi.ob(j));
    const ConcreteCat& ci = src.fiber_at(i);
    const ConcreteCat& cj = src.fiber_at(j);
    // down C_j -> C_i -> D_i versus down C_j -> D_j -> D_i, strictly
    FiberAdj via_src = composite_adj(di, m.comp.at(i), src.arrow_adj(d.id));
    FiberAdj via_dst = composite_adj(di, dst.arrow_adj(m.phi.mo(d.id)), m.comp.at(j));
    if (!(via_src == via_dst))
      out.push_back("arrow " + d.id + ": component square not strictly commutative");
    for (const CObj& y : basis_objs(cj)) {
      CObj lhs = fa_U(di, ci, m.comp.at(i), apply_U(src, d.id, y));
      CObj rhs = fa_U(di, dj, dst.arrow_adj(m.phi.mo(d.id)), fa_U(dj, cj, m.comp.at(j), y));
      if (!obj_eq(lhs, rhs)) {
        out.push_back("arrow " + d.id + ": component square fails on objects");
        break;
      }
    }
  }
  return out;
}

BundleMor monoid_bundle_mor(const Bundle& src, const Bundle& dst,
                            const std::map<Obj, MonHom>& alpha) {
  BundleMor m;
  m.phi = id_functor(src.base);
  for (const Obj& i : src.base.objs) {
    FiberAdj a;
    a.hom = alpha.at(i);  // dst-side monoid into src-side monoid
    if (!(a.hom.src == dst.fiber_at(i).monoid) || !(a.hom.dst == src.fiber_at(i).monoid))
      throw math_error("monoid_bundle_mor: component endpoints wrong at " + i);
    m.comp[i] = a;
  }
  return m;
}

// --- Grothendieck construction --------------------------------------------

TotalCat grothendieck(const Bundle& b, const std::map<Obj, std::vector<CObj>>& universe) {
  for (const auto& [i, c] : b.fiber)
    if (!enumerable_cat(c)) throw math_error("grothendieck: fiber over " + i + " not enumerable");
  for (const Obj& i : b.base.objs)
    if (!universe.count(i)) throw math_error("grothendieck: no universe over " + i);

  TotalCat t;
  t.universe = universe;

  auto obj_id = [](const Obj& i, long k) { return i + "#" + std::to_string(k); };

  for (const Obj& i : b.base.objs) {
    const auto& objs = universe.at(i);
    for (size_t k = 0; k < objs.size(); ++k) {
      Obj o = obj_id(i, static_cast<long>(k));
      t.cat.objs.push_back(o);
      t.obj_of[o] = {i, static_cast<long>(k)};
    }
  }

  // lookup: (base arrow, total src, total dst, flattened map) -> morphism id
  std::map<std::tuple<MorId, Obj, Obj, std::vector<long>>, MorId> find;

  for (const auto& d : b.base.mors) {
    const auto& srcs = universe.at(d.src);
    const auto& dsts = universe.at(d.dst);
    const ConcreteCat& ci = b.fiber_at(d.src);
    for (size_t k = 0; k < srcs.size(); ++k)
      for (size_t l = 0; l < dsts.size(); ++l) {
        CObj uz = apply_U(b, d.id, dsts[l]);
        std::vector<CMor> homs = enumerate_hom(ci, srcs[k], uz);
        for (size_t h = 0; h < homs.size(); ++h) {
          Obj so = obj_id(d.src, static_cast<long>(k));
          Obj to = obj_id(d.dst, static_cast<long>(l));
          std::ostringstream name;
          name << d.id << "@" << so << ">" << to << "#" << h;
          MorId mid = name.str();
          t.cat.mors.push_back({mid, so, to});
          t.arrow_of[mid] = {d.id, static_cast<long>(h)};
          t.flat_of[mid] = homs[h];
          find[{d.id, so, to, mor_key(homs[h])}] = mid;
          if (b.base.is_id(d.id) && k == l && mor_eq_c(homs[h], id_mor_c(ci, srcs[k])))
            t.cat.idmor[so] = mid;
        }
      }
  }

  // composition: over the base composite, with the flat part U_sigma(B) . A
  for (const auto& m1 : t.cat.mors)
    for (const auto& m2 : t.cat.mors) {
      if (m2.src != m1.dst) continue;
      const MorId& s1 = t.arrow_of.at(m1.id).first;
      const MorId& s2 = t.arrow_of.at(m2.id).first;
      MorId rho = b.base.compose(s2, s1);
      const ConcreteCat& ci = b.fiber_at(b.base.mor(s1).src);
      CMor flat = compose_c(ci, apply_U_mor(b, s1, t.flat_of.at(m2.id)), t.flat_of.at(m1.id));
      auto it = find.find({rho, m1.src, m2.dst, mor_key(flat)});
      if (it == find.end()) throw math_error("grothendieck: composite morphism not enumerated");
      t.cat.comp[{m2.id, m1.id}] = it->second;
    }

  t.proj.src = t.cat;
  t.proj.dst = b.base;
  for (const auto& [o, p] : t.obj_of) t.proj.on_obj[o] = p.first;
  for (const auto& [m, p] : t.arrow_of) t.proj.on_mor[m] = p.first;
  return t;
}

}  // namespace twk
