#include "twk/concrete.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace twk {

namespace {

// union-find; class numbering is fixed afterwards, so union order is free
struct UF {
  std::vector<long> p;
  explicit UF(long n) : p(static_cast<size_t>(n)) { std::iota(p.begin(), p.end(), 0L); }
  long find(long x) {
    while (p[static_cast<size_t>(x)] != x) {
      p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
      x = p[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(long a, long b) {
    a = find(a);
    b = find(b);
    if (a != b) p[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

// classes renumbered so the class of `base` is 0, the rest in slot order
std::vector<long> number_classes(UF& uf, long nslots, long base, long* count) {
  std::vector<long> cls(static_cast<size_t>(nslots), -1);
  std::map<long, long> root_to_cls;
  root_to_cls[uf.find(base)] = 0;
  long next = 1;
  for (long s = 0; s < nslots; ++s) {
    long r = uf.find(s);
    auto it = root_to_cls.find(r);
    if (it == root_to_cls.end()) it = root_to_cls.emplace(r, next++).first;
    cls[static_cast<size_t>(s)] = it->second;
  }
  *count = next;
  return cls;
}

Mat hcat_all(const std::vector<Mat>& ms, long rows) {
  Mat out(rows, 0);
  for (const Mat& m : ms) out = hcat(out, m);
  return out;
}

Mat block_diag_all(const std::vector<Mat>& ms) {
  Mat out(0, 0);
  for (const Mat& m : ms) out = block_diag(out, m);
  return out;
}

bool valid_mset(const Monoid& M, const MSetObj& x) {
  if (x.n < 1 || static_cast<long>(x.act.size()) != x.n) return false;
  for (long e = 0; e < x.n; ++e) {
    if (static_cast<long>(x.act[static_cast<size_t>(e)].size()) != M.size()) return false;
    for (long m = 0; m < M.size(); ++m) {
      long v = x.act[static_cast<size_t>(e)][static_cast<size_t>(m)];
      if (v < 0 || v >= x.n) return false;
    }
  }
  for (long m = 0; m < M.size(); ++m)
    if (x.act[0][static_cast<size_t>(m)] != 0) return false;  // basepoint absorbs
  for (long e = 0; e < x.n; ++e) {
    if (x.act[static_cast<size_t>(e)][static_cast<size_t>(M.unit)] != e) return false;
    for (long a = 0; a < M.size(); ++a)
      for (long b = 0; b < M.size(); ++b) {
        long lhs = x.act[static_cast<size_t>(e)][static_cast<size_t>(M.times(a, b))];
        long rhs = x.act[static_cast<size_t>(x.act[static_cast<size_t>(e)][static_cast<size_t>(a)])]
                        [static_cast<size_t>(b)];
        if (lhs != rhs) return false;
      }
  }
  return true;
}

MSetObj point_mset(const Monoid& M) {
  MSetObj p;
  p.n = 1;
  p.act = {std::vector<long>(static_cast<size_t>(M.size()), 0L)};
  return p;
}

bool mset_kind(CKind k) { return k == CKind::PtdSet || k == CKind::MSet; }

// the unique shape object every other object maps to exactly once, if any
std::optional<Obj> find_terminal_obj(const FinCat& c) {
  for (const Obj& t : c.objs) {
    bool ok = true;
    for (const Obj& i : c.objs)
      if (c.hom(i, t).size() != 1) {
        ok = false;
        break;
      }
    if (ok) return t;
  }
  return std::nullopt;
}

std::optional<Obj> find_initial_obj(const FinCat& c) {
  for (const Obj& s : c.objs) {
    bool ok = true;
    for (const Obj& i : c.objs)
      if (c.hom(s, i).size() != 1) {
        ok = false;
        break;
      }
    if (ok) return s;
  }
  return std::nullopt;
}

}  // namespace

// --- category descriptors -------------------------------------------------

bool ConcreteCat::operator==(const ConcreteCat& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case CKind::PtdSet: return true;
    case CKind::MSet: return monoid == o.monoid;
    case CKind::Vect:
    case CKind::Chain: return ring == o.ring;
    case CKind::Prod: return parts == o.parts;
  }
  return false;
}

ConcreteCat cat_ptdset() {
  ConcreteCat c;
  c.kind = CKind::PtdSet;
  c.monoid = trivial_monoid();
  return c;
}

ConcreteCat cat_mset(Monoid m) {
  ConcreteCat c;
  c.kind = CKind::MSet;
  c.monoid = std::move(m);
  return c;
}

ConcreteCat cat_vect(Ring r) {
  if (!r.is_field()) throw math_error("cat_vect: coefficient ring must be a field");
  ConcreteCat c;
  c.kind = CKind::Vect;
  c.ring = r;
  return c;
}

ConcreteCat cat_chain(Ring r) {
  ConcreteCat c;
  c.kind = CKind::Chain;
  c.ring = r;
  return c;
}

ConcreteCat cat_prod(std::vector<ConcreteCat> parts) {
  ConcreteCat c;
  c.kind = CKind::Prod;
  c.parts = std::move(parts);
  return c;
}

// --- objects and morphisms ------------------------------------------------

bool CObj::operator==(const CObj& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case CKind::PtdSet:
    case CKind::MSet: return ms == o.ms;
    case CKind::Vect: return dim == o.dim;
    case CKind::Chain: return cx == o.cx;
    case CKind::Prod: return parts == o.parts;
  }
  return false;
}

CObj obj_mset(const ConcreteCat& c, MSetObj m) {
  if (!mset_kind(c.kind)) throw math_error("obj_mset: wrong category kind");
  CObj x;
  x.kind = c.kind;
  x.ms = std::move(m);
  return x;
}

CObj obj_vect(const ConcreteCat& c, long dim) {
  if (c.kind != CKind::Vect) throw math_error("obj_vect: wrong category kind");
  CObj x;
  x.kind = CKind::Vect;
  x.dim = dim;
  return x;
}

CObj obj_chain(const ConcreteCat& c, ChainComplex cx) {
  if (c.kind != CKind::Chain) throw math_error("obj_chain: wrong category kind");
  CObj x;
  x.kind = CKind::Chain;
  x.cx = std::move(cx);
  return x;
}

CObj obj_prod(const ConcreteCat& c, std::vector<CObj> parts) {
  if (c.kind != CKind::Prod) throw math_error("obj_prod: wrong category kind");
  if (parts.size() != c.parts.size()) throw math_error("obj_prod: wrong number of parts");
  CObj x;
  x.kind = CKind::Prod;
  x.parts = std::move(parts);
  return x;
}

CMor mor_mset(const ConcreteCat& c, CObj src, CObj dst, std::vector<long> map) {
  if (!mset_kind(c.kind)) throw math_error("mor_mset: wrong category kind");
  CMor f;
  f.kind = c.kind;
  f.src = std::move(src);
  f.dst = std::move(dst);
  f.map = std::move(map);
  return f;
}

CMor mor_vect(const ConcreteCat& c, CObj src, CObj dst, Mat m) {
  if (c.kind != CKind::Vect) throw math_error("mor_vect: wrong category kind");
  CMor f;
  f.kind = CKind::Vect;
  for (Q& x : m.a) x = c.ring.norm(x);
  f.mat = std::move(m);
  f.src = std::move(src);
  f.dst = std::move(dst);
  return f;
}

CMor mor_chain(const ConcreteCat& c, ChainMap fm) {
  if (c.kind != CKind::Chain) throw math_error("mor_chain: wrong category kind");
  CMor f;
  f.kind = CKind::Chain;
  f.src = obj_chain(c, fm.src);
  f.dst = obj_chain(c, fm.dst);
  f.ch = std::move(fm);
  return f;
}

CMor mor_prod(const ConcreteCat& c, std::vector<CMor> parts) {
  if (c.kind != CKind::Prod) throw math_error("mor_prod: wrong category kind");
  if (parts.size() != c.parts.size()) throw math_error("mor_prod: wrong number of parts");
  CMor f;
  f.kind = CKind::Prod;
  std::vector<CObj> srcs, dsts;
  for (const CMor& p : parts) {
    srcs.push_back(p.src);
    dsts.push_back(p.dst);
  }
  f.src = obj_prod(c, std::move(srcs));
  f.dst = obj_prod(c, std::move(dsts));
  f.parts = std::move(parts);
  return f;
}

bool validate_obj(const ConcreteCat& c, const CObj& x) {
  if (x.kind != c.kind) return false;
  switch (c.kind) {
    case CKind::PtdSet:
    case CKind::MSet: return valid_mset(c.monoid, x.ms);
    case CKind::Vect: return x.dim >= 0;
    case CKind::Chain: return x.cx.ring == c.ring && validate_cx(x.cx);
    case CKind::Prod: {
      if (x.parts.size() != c.parts.size()) return false;
      for (size_t k = 0; k < c.parts.size(); ++k)
        if (!validate_obj(c.parts[k], x.parts[k])) return false;
      return true;
    }
  }
  return false;
}

bool validate_mor(const ConcreteCat& c, const CMor& f) {
  if (f.kind != c.kind) return false;
  if (!validate_obj(c, f.src) || !validate_obj(c, f.dst)) return false;
  switch (c.kind) {
    case CKind::PtdSet:
    case CKind::MSet: {
      if (static_cast<long>(f.map.size()) != f.src.ms.n) return false;
      if (f.map[0] != 0) return false;
      for (long e = 0; e < f.src.ms.n; ++e) {
        long v = f.map[static_cast<size_t>(e)];
        if (v < 0 || v >= f.dst.ms.n) return false;
        for (long m = 0; m < c.monoid.size(); ++m) {
          long lhs = f.map[static_cast<size_t>(f.src.ms.act[static_cast<size_t>(e)][static_cast<size_t>(m)])];
          long rhs = f.dst.ms.act[static_cast<size_t>(v)][static_cast<size_t>(m)];
          if (lhs != rhs) return false;
        }
      }
      return true;
    }
    case CKind::Vect: return f.mat.m == f.dst.dim && f.mat.n == f.src.dim;
    case CKind::Chain:
      return f.ch.src == f.src.cx && f.ch.dst == f.dst.cx && validate_map(f.ch);
    case CKind::Prod: {
      if (f.parts.size() != c.parts.size()) return false;
      for (size_t k = 0; k < c.parts.size(); ++k) {
        if (!validate_mor(c.parts[k], f.parts[k])) return false;
        if (!(f.parts[k].src == f.src.parts[k]) || !(f.parts[k].dst == f.dst.parts[k]))
          return false;
      }
      return true;
    }
  }
  return false;
}

bool obj_eq(const CObj& a, const CObj& b) { return a == b; }

bool mor_eq_c(const CMor& a, const CMor& b) {
  if (a.kind != b.kind || !(a.src == b.src) || !(a.dst == b.dst)) return false;
  switch (a.kind) {
    case CKind::PtdSet:
    case CKind::MSet: return a.map == b.map;
    case CKind::Vect: return a.mat == b.mat;
    case CKind::Chain: return map_eq(a.ch, b.ch);
    case CKind::Prod: {
      if (a.parts.size() != b.parts.size()) return false;
      for (size_t k = 0; k < a.parts.size(); ++k)
        if (!mor_eq_c(a.parts[k], b.parts[k])) return false;
      return true;
    }
  }
  return false;
}

CMor id_mor_c(const ConcreteCat& c, const CObj& x) {
  switch (c.kind) {
    case CKind::PtdSet:
    case CKind::MSet: {
      std::vector<long> m(static_cast<size_t>(x.ms.n));
      std::iota(m.begin(), m.end(), 0L);
      return mor_mset(c, x, x, std::move(m));
    }
    case CKind::Vect: return mor_vect(c, x, x, Mat::ident(x.dim));
    case CKind::Chain: return mor_chain(c, id_map(x.cx));
    case CKind::Prod: {
      std::vector<CMor> parts;
      for (size_t k = 0; k < c.parts.size(); ++k)
        parts.push_back(id_mor_c(c.parts[k], x.parts[k]));
      return mor_prod(c, std::move(parts));
    }
  }
  throw math_error("id_mor_c: unknown kind");
}

CMor compose_c(const ConcreteCat& c, const CMor& g, const CMor& f) {
  if (!(f.dst == g.src)) throw math_error("compose_c: morphisms not composable");
  switch (c.kind) {
    case CKind::PtdSet:
    case CKind::MSet: {
      std::vector<long> m(f.map.size());
      for (size_t e = 0; e < f.map.size(); ++e)
        m[e] = g.map[static_cast<size_t>(f.map[e])];
      return mor_mset(c, f.src, g.dst, std::move(m));
    }
    case CKind::Vect: return mor_vect(c, f.src, g.dst, mul(c.ring, g.mat, f.mat));
    case CKind::Chain: return mor_chain(c, compose_map(g.ch, f.ch));
    case CKind::Prod: {
      std::vector<CMor> parts;
      for (size_t k = 0; k < c.parts.size(); ++k)
        parts.push_back(compose_c(c.parts[k], g.parts[k], f.parts[k]));
      return mor_prod(c, std::move(parts));
    }
  }
  throw math_error("compose_c: unknown kind");
}

bool is_iso_c(const ConcreteCat& c, const CMor& f) {
  switch (c.kind) {
    case CKind::PtdSet:
    case CKind::MSet: {
      if (f.src.ms.n != f.dst.ms.n) return false;
      std::vector<bool> hit(static_cast<size_t>(f.dst.ms.n), false);
      for (long v : f.map) {
        if (hit[static_cast<size_t>(v)]) return false;
        hit[static_cast<size_t>(v)] = true;
      }
      return true;  // a bijective equivariant pointed map has an equivariant inverse
    }
    case CKind::Vect:
      return f.src.dim == f.dst.dim && col_basis(c.ring, f.mat).n == f.src.dim;
    case CKind::Chain: {
      long top = std::max(f.src.cx.top(), f.dst.cx.top());
      for (long n = 0; n <= top; ++n)
        if (!is_iso_mor(f.ch.mor_at(n))) return false;
      return true;  // a degreewise module iso has a chain-map inverse
    }
    case CKind::Prod: {
      for (size_t k = 0; k < c.parts.size(); ++k)
        if (!is_iso_c(c.parts[k], f.parts[k])) return false;
      return true;
    }
  }
  return false;
}

CMor inverse_of(const ConcreteCat& c, const CMor& f) {
  if (!is_iso_c(c, f)) throw math_error("inverse_of: not invertible");
  switch (c.kind) {
    case CKind::PtdSet:
    case CKind::MSet: {
      std::vector<long> inv(f.map.size());
      for (size_t e = 0; e < f.map.size(); ++e) inv[static_cast<size_t>(f.map[e])] = static_cast<long>(e);
      return mor_mset(c, f.dst, f.src, std::move(inv));
    }
    case CKind::Vect: {
      auto x = solve(c.ring, f.mat, Mat::ident(f.mat.m));
      if (!x) throw math_error("inverse_of: no linear inverse");
      return mor_vect(c, f.dst, f.src, *x);
    }
    case CKind::Chain: {
      long top = std::max(f.src.cx.top(), f.dst.cx.top());
      std::vector<Mat> comps;
      for (long n = 0; n <= top; ++n) {
        auto g = inverse_mor(f.ch.mor_at(n));
        if (!g) throw math_error("inverse_of: no degreewise inverse");
        comps.push_back(g->a);
      }
      return mor_chain(c, make_map(f.dst.cx, f.src.cx, std::move(comps)));
    }
    case CKind::Prod: {
      std::vector<CMor> parts;
      for (size_t k = 0; k < c.parts.size(); ++k)
        parts.push_back(inverse_of(c.parts[k], f.parts[k]));
      return mor_prod(c, std::move(parts));
    }
  }
  throw math_error("inverse_of: unknown kind");
}

CObj initial_obj(const ConcreteCat& c) {
  switch (c.kind) {
    case CKind::PtdSet:
    case CKind::MSet: return obj_mset(c, point_mset(c.monoid));
    case CKind::Vect: return obj_vect(c, 0);
    case CKind::Chain: return obj_chain(c, zero_cx(c.ring));
    case CKind::Prod: {
      std::vector<CObj> parts;
      for (const ConcreteCat& p : c.parts) parts.push_back(initial_obj(p));
      return obj_prod(c, std::move(parts));
    }
  }
  throw math_error("initial_obj: unknown kind");
}

// all four kinds are pointed, so initial and terminal coincide
CObj terminal_obj(const ConcreteCat& c) { return initial_obj(c); }

// --- hom enumeration ------------------------------------------------------

namespace {

// backtracking over free choices with equivariance closure; every element
// reachable from an assigned one is forced, so unknowns are genuine choices
void hom_search(const Monoid& M, const MSetObj& x, const MSetObj& y,
                std::vector<long>& img, std::vector<std::vector<long>>& out) {
  long e = -1;
  for (long i = 0; i < x.n; ++i)
    if (img[static_cast<size_t>(i)] < 0) {
      e = i;
      break;
    }
  if (e < 0) {
    out.push_back(img);
    return;
  }
  for (long v = 0; v < y.n; ++v) {
    std::vector<long> trail;
    bool ok = true;
    img[static_cast<size_t>(e)] = v;
    trail.push_back(e);
    for (size_t qi = 0; ok && qi < trail.size(); ++qi) {
      long a = trail[qi];
      for (long m = 0; m < M.size(); ++m) {
        long b = x.act[static_cast<size_t>(a)][static_cast<size_t>(m)];
        long w = y.act[static_cast<size_t>(img[static_cast<size_t>(a)])][static_cast<size_t>(m)];
        long& slot = img[static_cast<size_t>(b)];
        if (slot < 0) {
          slot = w;
          trail.push_back(b);
        } else if (slot != w) {
          ok = false;
          break;
        }
      }
    }
    if (ok) hom_search(M, x, y, img, out);
    for (long t : trail) img[static_cast<size_t>(t)] = -1;
  }
}

}  // namespace

std::vector<CMor> enumerate_hom(const ConcreteCat& c, const CObj& src, const CObj& dst) {
  switch (c.kind) {
    case CKind::PtdSet:
    case CKind::MSet: {
      std::vector<long> img(static_cast<size_t>(src.ms.n), -1);
      img[0] = 0;
      std::vector<std::vector<long>> found;
      hom_search(c.monoid, src.ms, dst.ms, img, found);
      std::vector<CMor> out;
      for (auto& m : found) out.push_back(mor_mset(c, src, dst, std::move(m)));
      return out;
    }
    case CKind::Prod: {
      std::vector<std::vector<CMor>> per;
      for (size_t k = 0; k < c.parts.size(); ++k)
        per.push_back(enumerate_hom(c.parts[k], src.parts[k], dst.parts[k]));
      std::vector<std::vector<CMor>> tuples{{}};
      for (const auto& options : per) {
        std::vector<std::vector<CMor>> next;
        for (const auto& t : tuples)
          for (const CMor& o : options) {
            auto t2 = t;
            t2.push_back(o);
            next.push_back(std::move(t2));
          }
        tuples = std::move(next);
      }
      std::vector<CMor> out;
      for (auto& t : tuples) out.push_back(mor_prod(c, std::move(t)));
      return out;
    }
    default:
      throw math_error("enumerate_hom: hom sets of linear kinds are not finite");
  }
}

// --- diagrams -------------------------------------------------------------

bool validate_diagram(const CDiagram& d) {
  if (!validate_cat(d.shape).empty()) return false;
  for (const Obj& i : d.shape.objs) {
    auto it = d.ob.find(i);
    if (it == d.ob.end() || !validate_obj(d.cat, it->second)) return false;
  }
  for (const auto& md : d.shape.mors) {
    auto it = d.mo.find(md.id);
    if (it == d.mo.end()) return false;
    const CMor& f = it->second;
    if (!validate_mor(d.cat, f)) return false;
    if (!(f.src == d.ob.at(md.src)) || !(f.dst == d.ob.at(md.dst))) return false;
  }
  for (const Obj& i : d.shape.objs)
    if (!mor_eq_c(d.mo.at(d.shape.idmor.at(i)), id_mor_c(d.cat, d.ob.at(i)))) return false;
  for (const auto& [gf, h] : d.shape.comp) {
    const CMor& g = d.mo.at(gf.first);
    const CMor& f = d.mo.at(gf.second);
    if (!(f.dst == g.src)) continue;  // validate_cat already flags bad tables
    if (!mor_eq_c(d.mo.at(h), compose_c(d.cat, g, f))) return false;
  }
  return true;
}

bool validate_cocone(const CDiagram& d, const Cocone& c) {
  if (!validate_obj(d.cat, c.apex)) return false;
  for (const Obj& i : d.shape.objs) {
    auto it = c.legs.find(i);
    if (it == c.legs.end() || !validate_mor(d.cat, it->second)) return false;
    if (!(it->second.src == d.ob.at(i)) || !(it->second.dst == c.apex)) return false;
  }
  for (const auto& md : d.shape.mors) {
    if (d.shape.is_id(md.id)) continue;
    CMor around = compose_c(d.cat, c.legs.at(md.dst), d.mo.at(md.id));
    if (!mor_eq_c(around, c.legs.at(md.src))) return false;
  }
  return true;
}

bool validate_cone(const CDiagram& d, const Cone& c) {
  if (!validate_obj(d.cat, c.apex)) return false;
  for (const Obj& i : d.shape.objs) {
    auto it = c.legs.find(i);
    if (it == c.legs.end() || !validate_mor(d.cat, it->second)) return false;
    if (!(it->second.src == c.apex) || !(it->second.dst == d.ob.at(i))) return false;
  }
  for (const auto& md : d.shape.mors) {
    if (d.shape.is_id(md.id)) continue;
    CMor around = compose_c(d.cat, d.mo.at(md.id), c.legs.at(md.src));
    if (!mor_eq_c(around, c.legs.at(md.dst))) return false;
  }
  return true;
}

// --- colimits -------------------------------------------------------------

namespace {

// per-object generator offsets in the concatenated degree-n module
struct Layout {
  std::vector<long> offset;
  long total = 0;
};

Layout layout_of(const CDiagram& d, const std::function<long(const CObj&)>& size) {
  Layout l;
  for (const Obj& i : d.shape.objs) {
    l.offset.push_back(l.total);
    l.total += size(d.ob.at(i));
  }
  return l;
}

long obj_index(const FinCat& c, const Obj& o) {
  for (size_t k = 0; k < c.objs.size(); ++k)
    if (c.objs[k] == o) return static_cast<long>(k);
  throw math_error("unknown shape object " + o);
}

ColimitCert colimit_mset(const CDiagram& d) {
  ColimitCert cert;
  cert.diag = d;
  const Monoid& M = d.cat.monoid;
  std::vector<long> offset;
  long total = 0;
  for (const Obj& i : d.shape.objs) {
    offset.push_back(total);
    cert.tags.resize(cert.tags.size() + static_cast<size_t>(d.ob.at(i).ms.n));
    for (long x = 0; x < d.ob.at(i).ms.n; ++x)
      cert.tags[static_cast<size_t>(total + x)] = {i, x};
    total += d.ob.at(i).ms.n;
  }
  UF uf(std::max(total, 1L));
  for (size_t k = 1; k < d.shape.objs.size(); ++k)
    uf.unite(offset[0], offset[k]);  // all basepoints become one
  for (const auto& md : d.shape.mors) {
    if (d.shape.is_id(md.id)) continue;
    const CMor& f = d.mo.at(md.id);
    long si = offset[static_cast<size_t>(obj_index(d.shape, md.src))];
    long di = offset[static_cast<size_t>(obj_index(d.shape, md.dst))];
    for (long x = 0; x < f.src.ms.n; ++x)
      uf.unite(si + x, di + f.map[static_cast<size_t>(x)]);
  }
  long nc = 1;
  if (total > 0) {
    cert.cls = number_classes(uf, total, offset.empty() ? 0 : offset[0], &nc);
  } else {
    nc = 1;  // empty diagram: the colimit is the point
  }

  MSetObj apex;
  apex.n = nc;
  apex.act.assign(static_cast<size_t>(nc), std::vector<long>(static_cast<size_t>(M.size()), -1));
  for (long m = 0; m < M.size(); ++m) apex.act[0][static_cast<size_t>(m)] = 0;
  for (long s = 0; s < total; ++s) {
    auto [i, x] = cert.tags[static_cast<size_t>(s)];
    long c = cert.cls[static_cast<size_t>(s)];
    long base = offset[static_cast<size_t>(obj_index(d.shape, i))];
    const MSetObj& xi = d.ob.at(i).ms;
    for (long m = 0; m < M.size(); ++m) {
      long target = cert.cls[static_cast<size_t>(base + xi.act[static_cast<size_t>(x)][static_cast<size_t>(m)])];
      long& slot = apex.act[static_cast<size_t>(c)][static_cast<size_t>(m)];
      if (slot < 0)
        slot = target;
      else if (slot != target)
        throw math_error("colimit: induced action is ill-defined");
    }
  }
  for (auto& row : apex.act)
    for (long& v : row)
      if (v < 0) throw math_error("colimit: class without representative");

  cert.cocone.apex = obj_mset(d.cat, apex);
  for (size_t k = 0; k < d.shape.objs.size(); ++k) {
    const Obj& i = d.shape.objs[k];
    std::vector<long> leg(static_cast<size_t>(d.ob.at(i).ms.n));
    for (long x = 0; x < d.ob.at(i).ms.n; ++x)
      leg[static_cast<size_t>(x)] = cert.cls[static_cast<size_t>(offset[k] + x)];
    cert.cocone.legs[i] = mor_mset(d.cat, d.ob.at(i), cert.cocone.apex, std::move(leg));
  }
  return cert;
}

// relation columns of the coequalizing quotient: one per (arrow, generator)
Mat colim_relations(const CDiagram& d, const Layout& l,
                    const std::function<Mat(const CMor&)>& comp,
                    const std::function<long(const CObj&)>& size) {
  std::vector<Mat> cols;
  for (const auto& md : d.shape.mors) {
    if (d.shape.is_id(md.id)) continue;
    const CMor& f = d.mo.at(md.id);
    long si = obj_index(d.shape, md.src), di = obj_index(d.shape, md.dst);
    Mat fm = comp(f);
    long g = size(d.ob.at(md.src));
    Mat block(l.total, g);
    for (long e = 0; e < g; ++e) {
      block.at(l.offset[static_cast<size_t>(si)] + e, e) = Q(1);
      for (long r = 0; r < fm.m; ++r)
        block.at(l.offset[static_cast<size_t>(di)] + r, e) =
            d.cat.ring.neg(fm.at(r, e));
    }
    cols.push_back(block);
  }
  return hcat_all(cols, l.total);
}

ColimitCert colimit_vect(const CDiagram& d) {
  ColimitCert cert;
  cert.diag = d;
  const Ring& R = d.cat.ring;
  Layout l = layout_of(d, [](const CObj& x) { return x.dim; });
  Mat B = colim_relations(
      d, l, [](const CMor& f) { return f.mat; }, [](const CObj& x) { return x.dim; });
  PresModule pm(R, l.total, B);
  // surviving coordinates: rows that are not pivots of the relation span
  std::vector<bool> pivot(static_cast<size_t>(l.total), false);
  for (long j = 0; j < pm.rels.n; ++j)
    for (long r = 0; r < l.total; ++r)
      if (pm.rels.at(r, j) != 0) {
        pivot[static_cast<size_t>(r)] = true;
        break;
      }
  for (long r = 0; r < l.total; ++r)
    if (!pivot[static_cast<size_t>(r)]) cert.vect_coords.push_back(r);
  Mat reduced = reduce_elem(pm, Mat::ident(l.total));
  Mat P(static_cast<long>(cert.vect_coords.size()), l.total);
  for (size_t r = 0; r < cert.vect_coords.size(); ++r)
    for (long j = 0; j < l.total; ++j)
      P.at(static_cast<long>(r), j) = reduced.at(cert.vect_coords[r], j);
  cert.cocone.apex = obj_vect(d.cat, P.m);
  for (size_t k = 0; k < d.shape.objs.size(); ++k) {
    const Obj& i = d.shape.objs[k];
    long dim = d.ob.at(i).dim;
    Mat leg(P.m, dim);
    for (long r = 0; r < P.m; ++r)
      for (long e = 0; e < dim; ++e) leg.at(r, e) = P.at(r, l.offset[k] + e);
    cert.cocone.legs[i] = mor_vect(d.cat, d.ob.at(i), cert.cocone.apex, std::move(leg));
  }
  return cert;
}

ColimitCert colimit_chain(const CDiagram& d) {
  ColimitCert cert;
  cert.diag = d;
  const Ring& R = d.cat.ring;
  long maxtop = -1;
  for (const Obj& i : d.shape.objs) maxtop = std::max(maxtop, d.ob.at(i).cx.top());
  std::vector<PresModule> mods;
  std::vector<Mat> diffs;
  std::vector<Layout> lay;
  for (long n = 0; n <= std::max(maxtop, 0L); ++n) {
    Layout l = layout_of(d, [n](const CObj& x) { return x.cx.mod_at(n).gens; });
    lay.push_back(l);
    Mat B = colim_relations(
        d, l, [n](const CMor& f) { return f.ch.comp_at(n); },
        [n](const CObj& x) { return x.cx.mod_at(n).gens; });
    std::vector<Mat> rels;
    for (const Obj& i : d.shape.objs) rels.push_back(d.ob.at(i).cx.mod_at(n).rels);
    mods.emplace_back(R, l.total, hcat(B, block_diag_all(rels)));
    std::vector<Mat> dblocks;
    for (const Obj& i : d.shape.objs) dblocks.push_back(d.ob.at(i).cx.diff_at(n));
    diffs.push_back(block_diag_all(dblocks));
  }
  ChainComplex apex = make_cx(R, std::move(mods), std::move(diffs));
  cert.cocone.apex = obj_chain(d.cat, apex);
  for (size_t k = 0; k < d.shape.objs.size(); ++k) {
    const Obj& i = d.shape.objs[k];
    const ChainComplex& xi = d.ob.at(i).cx;
    std::vector<Mat> comps;
    for (long n = 0; n <= xi.top(); ++n) {
      Mat inc(lay[static_cast<size_t>(n)].total, xi.mod_at(n).gens);
      for (long e = 0; e < xi.mod_at(n).gens; ++e)
        inc.at(lay[static_cast<size_t>(n)].offset[k] + e, e) = Q(1);
      comps.push_back(std::move(inc));
    }
    cert.cocone.legs[i] = mor_chain(d.cat, make_map(xi, apex, std::move(comps)));
  }
  return cert;
}

}  // namespace

ColimitCert colimit(const CDiagram& d) {
  if (auto t = find_terminal_obj(d.shape)) {
    // the inclusion of a terminal object is final, so the colimit is just
    // its value; reusing it literally is what keeps latching objects equal
    // to shifted pieces on the nose downstream
    ColimitCert cert;
    cert.diag = d;
    cert.via = *t;
    cert.cocone.apex = d.ob.at(*t);
    for (const Obj& i : d.shape.objs)
      cert.cocone.legs[i] = d.mo.at(d.shape.hom(i, *t).front());
    return cert;
  }
  switch (d.cat.kind) {
    case CKind::PtdSet:
    case CKind::MSet: return colimit_mset(d);
    case CKind::Vect: return colimit_vect(d);
    case CKind::Chain: return colimit_chain(d);
    case CKind::Prod: {
      ColimitCert cert;
      cert.diag = d;
      std::vector<CObj> apices;
      std::map<Obj, std::vector<CMor>> legparts;
      for (size_t k = 0; k < d.cat.parts.size(); ++k) {
        CDiagram dk;
        dk.cat = d.cat.parts[k];
        dk.shape = d.shape;
        for (const auto& [i, x] : d.ob) dk.ob[i] = x.parts[k];
        for (const auto& [m, f] : d.mo) dk.mo[m] = f.parts[k];
        ColimitCert ck = colimit(dk);
        apices.push_back(ck.cocone.apex);
        for (const Obj& i : d.shape.objs) legparts[i].push_back(ck.cocone.legs.at(i));
        cert.parts.push_back(std::move(ck));
      }
      cert.cocone.apex = obj_prod(d.cat, std::move(apices));
      for (const Obj& i : d.shape.objs)
        cert.cocone.legs[i] = mor_prod(d.cat, std::move(legparts[i]));
      return cert;
    }
  }
  throw math_error("colimit: unknown kind");
}

CMor colimit_mediator(const ColimitCert& cert, const Cocone& other) {
  if (!validate_cocone(cert.diag, other))
    throw math_error("colimit_mediator: competing cocone does not commute");
  const CDiagram& d = cert.diag;
  if (cert.via) return other.legs.at(*cert.via);
  switch (d.cat.kind) {
    case CKind::PtdSet:
    case CKind::MSet: {
      long nc = cert.cocone.apex.ms.n;
      std::vector<long> med(static_cast<size_t>(nc), -1);
      med[0] = 0;
      std::vector<long> offset;
      long total = 0;
      for (const Obj& i : d.shape.objs) {
        offset.push_back(total);
        total += d.ob.at(i).ms.n;
      }
      for (long s = 0; s < total; ++s) {
        auto [i, x] = cert.tags[static_cast<size_t>(s)];
        long c = cert.cls[static_cast<size_t>(s)];
        long v = other.legs.at(i).map[static_cast<size_t>(x)];
        if (med[static_cast<size_t>(c)] < 0)
          med[static_cast<size_t>(c)] = v;
        else if (med[static_cast<size_t>(c)] != v)
          throw math_error("colimit_mediator: cocone legs disagree on a class");
      }
      return mor_mset(d.cat, cert.cocone.apex, other.apex, std::move(med));
    }
    case CKind::Vect: {
      std::vector<Mat> gs;
      for (const Obj& i : d.shape.objs) gs.push_back(other.legs.at(i).mat);
      Mat G = hcat_all(gs, other.apex.dim);
      Mat M(other.apex.dim, static_cast<long>(cert.vect_coords.size()));
      for (size_t c = 0; c < cert.vect_coords.size(); ++c)
        for (long r = 0; r < other.apex.dim; ++r)
          M.at(r, static_cast<long>(c)) = G.at(r, cert.vect_coords[c]);
      return mor_vect(d.cat, cert.cocone.apex, other.apex, std::move(M));
    }
    case CKind::Chain: {
      const ChainComplex& apex = cert.cocone.apex.cx;
      std::vector<Mat> comps;
      for (long n = 0; n <= apex.top(); ++n) {
        std::vector<Mat> gs;
        for (const Obj& i : d.shape.objs) gs.push_back(other.legs.at(i).ch.comp_at(n));
        comps.push_back(hcat_all(gs, other.apex.cx.mod_at(n).gens));
      }
      return mor_chain(d.cat, make_map(apex, other.apex.cx, std::move(comps)));
    }
    case CKind::Prod: {
      std::vector<CMor> parts;
      for (size_t k = 0; k < d.cat.parts.size(); ++k) {
        Cocone ok;
        ok.apex = other.apex.parts[k];
        for (const auto& [i, leg] : other.legs) ok.legs[i] = leg.parts[k];
        parts.push_back(colimit_mediator(cert.parts[k], ok));
      }
      return mor_prod(d.cat, std::move(parts));
    }
  }
  throw math_error("colimit_mediator: unknown kind");
}

// --- limits ---------------------------------------------------------------

namespace {

LimitCert limit_mset(const CDiagram& d) {
  LimitCert cert;
  cert.diag = d;
  const Monoid& M = d.cat.monoid;
  size_t no = d.shape.objs.size();
  std::vector<long> sizes;
  for (const Obj& i : d.shape.objs) sizes.push_back(d.ob.at(i).ms.n);
  // enumerate compatible tuples in lexicographic order; the all-basepoint
  // tuple is always compatible and always first
  std::vector<long> cur(no, 0);
  bool done = false;
  while (!done) {
    bool ok = true;
    for (const auto& md : d.shape.mors) {
      if (d.shape.is_id(md.id)) continue;
      const CMor& f = d.mo.at(md.id);
      long si = obj_index(d.shape, md.src), di = obj_index(d.shape, md.dst);
      if (f.map[static_cast<size_t>(cur[static_cast<size_t>(si)])] != cur[static_cast<size_t>(di)]) {
        ok = false;
        break;
      }
    }
    if (ok) cert.tuples.push_back(cur);
    done = true;
    for (size_t k = no; k-- > 0;) {
      if (++cur[k] < sizes[k]) {
        done = false;
        break;
      }
      cur[k] = 0;
    }
    if (no == 0) break;
  }

  std::map<std::vector<long>, long> index;
  for (size_t t = 0; t < cert.tuples.size(); ++t)
    index[cert.tuples[t]] = static_cast<long>(t);
  MSetObj apex;
  apex.n = static_cast<long>(cert.tuples.size());
  apex.act.assign(static_cast<size_t>(apex.n),
                  std::vector<long>(static_cast<size_t>(M.size()), 0));
  for (size_t t = 0; t < cert.tuples.size(); ++t)
    for (long m = 0; m < M.size(); ++m) {
      std::vector<long> moved(no);
      for (size_t k = 0; k < no; ++k)
        moved[k] = d.ob.at(d.shape.objs[k])
                       .ms.act[static_cast<size_t>(cert.tuples[t][k])][static_cast<size_t>(m)];
      auto it = index.find(moved);
      if (it == index.end()) throw math_error("limit: componentwise action left the family set");
      apex.act[t][static_cast<size_t>(m)] = it->second;
    }
  cert.cone.apex = obj_mset(d.cat, apex);
  for (size_t k = 0; k < no; ++k) {
    const Obj& i = d.shape.objs[k];
    std::vector<long> leg(cert.tuples.size());
    for (size_t t = 0; t < cert.tuples.size(); ++t) leg[t] = cert.tuples[t][k];
    cert.cone.legs[i] = mor_mset(d.cat, cert.cone.apex, d.ob.at(i), std::move(leg));
  }
  return cert;
}

// rows constraining a concatenated family: one block row per arrow,
// sigma at the source block minus the identity at the destination block
Mat limit_constraints(const CDiagram& d, const Layout& l,
                      const std::function<Mat(const CMor&)>& comp,
                      const std::function<long(const CObj&)>& size) {
  Mat K(0, l.total);
  for (const auto& md : d.shape.mors) {
    if (d.shape.is_id(md.id)) continue;
    const CMor& f = d.mo.at(md.id);
    long si = obj_index(d.shape, md.src), di = obj_index(d.shape, md.dst);
    Mat fm = comp(f);
    long tg = size(d.ob.at(md.dst));
    Mat row(tg, l.total);
    for (long r = 0; r < tg; ++r) {
      for (long e = 0; e < fm.n; ++e)
        row.at(r, l.offset[static_cast<size_t>(si)] + e) = fm.at(r, e);
      row.at(r, l.offset[static_cast<size_t>(di)] + r) =
          d.cat.ring.sub(row.at(r, l.offset[static_cast<size_t>(di)] + r), Q(1));
    }
    K = vcat(K, row);
  }
  return K;
}

LimitCert limit_vect(const CDiagram& d) {
  LimitCert cert;
  cert.diag = d;
  const Ring& R = d.cat.ring;
  Layout l = layout_of(d, [](const CObj& x) { return x.dim; });
  Mat K = limit_constraints(
      d, l, [](const CMor& f) { return f.mat; }, [](const CObj& x) { return x.dim; });
  cert.vect_basis = kernel(R, K);
  cert.cone.apex = obj_vect(d.cat, cert.vect_basis.n);
  for (size_t k = 0; k < d.shape.objs.size(); ++k) {
    const Obj& i = d.shape.objs[k];
    long dim = d.ob.at(i).dim;
    Mat leg(dim, cert.vect_basis.n);
    for (long r = 0; r < dim; ++r)
      for (long j = 0; j < cert.vect_basis.n; ++j)
        leg.at(r, j) = cert.vect_basis.at(l.offset[k] + r, j);
    cert.cone.legs[i] = mor_vect(d.cat, cert.cone.apex, d.ob.at(i), std::move(leg));
  }
  return cert;
}

LimitCert limit_chain(const CDiagram& d) {
  LimitCert cert;
  cert.diag = d;
  const Ring& R = d.cat.ring;
  long maxtop = -1;
  for (const Obj& i : d.shape.objs) maxtop = std::max(maxtop, d.ob.at(i).cx.top());
  std::vector<PresModule> mods;
  std::vector<Mat> diffs;
  std::vector<Layout> lay;
  for (long n = 0; n <= std::max(maxtop, 0L); ++n) {
    Layout l = layout_of(d, [n](const CObj& x) { return x.cx.mod_at(n).gens; });
    lay.push_back(l);
    Mat K = limit_constraints(
        d, l, [n](const CMor& f) { return f.ch.comp_at(n); },
        [n](const CObj& x) { return x.cx.mod_at(n).gens; });
    // relations of the arrow targets, stacked to match the constraint rows
    std::vector<Mat> tgt;
    for (const auto& md : d.shape.mors) {
      if (d.shape.is_id(md.id)) continue;
      tgt.push_back(d.ob.at(md.dst).cx.mod_at(n).rels);
    }
    Mat B = preimage_span(R, K, block_diag_all(tgt));
    cert.chain_bases.push_back(B);
    std::vector<Mat> own;
    for (const Obj& i : d.shape.objs) own.push_back(d.ob.at(i).cx.mod_at(n).rels);
    mods.emplace_back(R, B.n, preimage_span(R, B, block_diag_all(own)));
    if (n == 0) {
      diffs.push_back(Mat(0, B.n));
    } else {
      std::vector<Mat> dblocks;
      for (const Obj& i : d.shape.objs) dblocks.push_back(d.ob.at(i).cx.diff_at(n));
      Mat img = mul(R, block_diag_all(dblocks), B);
      diffs.push_back(solve_canonical(R, cert.chain_bases[static_cast<size_t>(n - 1)], img));
    }
  }
  ChainComplex apex = make_cx(R, std::move(mods), std::move(diffs));
  cert.cone.apex = obj_chain(d.cat, apex);
  for (size_t k = 0; k < d.shape.objs.size(); ++k) {
    const Obj& i = d.shape.objs[k];
    const ChainComplex& xi = d.ob.at(i).cx;
    std::vector<Mat> comps;
    for (long n = 0; n <= apex.top(); ++n) {
      const Mat& B = cert.chain_bases[static_cast<size_t>(n)];
      Mat pr(xi.mod_at(n).gens, B.n);
      for (long r = 0; r < pr.m; ++r)
        for (long j = 0; j < B.n; ++j)
          pr.at(r, j) = B.at(lay[static_cast<size_t>(n)].offset[k] + r, j);
      comps.push_back(std::move(pr));
    }
    cert.cone.legs[i] = mor_chain(d.cat, make_map(apex, xi, std::move(comps)));
  }
  return cert;
}

}  // namespace

LimitCert limit(const CDiagram& d) {
  if (auto s = find_initial_obj(d.shape)) {
    LimitCert cert;
    cert.diag = d;
    cert.via = *s;
    cert.cone.apex = d.ob.at(*s);
    for (const Obj& i : d.shape.objs)
      cert.cone.legs[i] = d.mo.at(d.shape.hom(*s, i).front());
    return cert;
  }
  switch (d.cat.kind) {
    case CKind::PtdSet:
    case CKind::MSet: return limit_mset(d);
    case CKind::Vect: return limit_vect(d);
    case CKind::Chain: return limit_chain(d);
    case CKind::Prod: {
      LimitCert cert;
      cert.diag = d;
      std::vector<CObj> apices;
      std::map<Obj, std::vector<CMor>> legparts;
      for (size_t k = 0; k < d.cat.parts.size(); ++k) {
        CDiagram dk;
        dk.cat = d.cat.parts[k];
        dk.shape = d.shape;
        for (const auto& [i, x] : d.ob) dk.ob[i] = x.parts[k];
        for (const auto& [m, f] : d.mo) dk.mo[m] = f.parts[k];
        LimitCert ck = limit(dk);
        apices.push_back(ck.cone.apex);
        for (const Obj& i : d.shape.objs) legparts[i].push_back(ck.cone.legs.at(i));
        cert.parts.push_back(std::move(ck));
      }
      cert.cone.apex = obj_prod(d.cat, std::move(apices));
      for (const Obj& i : d.shape.objs)
        cert.cone.legs[i] = mor_prod(d.cat, std::move(legparts[i]));
      return cert;
    }
  }
  throw math_error("limit: unknown kind");
}

CMor limit_mediator(const LimitCert& cert, const Cone& other) {
  if (!validate_cone(cert.diag, other))
    throw math_error("limit_mediator: competing cone does not commute");
  const CDiagram& d = cert.diag;
  if (cert.via) return other.legs.at(*cert.via);
  switch (d.cat.kind) {
    case CKind::PtdSet:
    case CKind::MSet: {
      std::map<std::vector<long>, long> index;
      for (size_t t = 0; t < cert.tuples.size(); ++t)
        index[cert.tuples[t]] = static_cast<long>(t);
      size_t no = d.shape.objs.size();
      std::vector<long> med(static_cast<size_t>(other.apex.ms.n));
      for (long w = 0; w < other.apex.ms.n; ++w) {
        std::vector<long> tup(no);
        for (size_t k = 0; k < no; ++k)
          tup[k] = other.legs.at(d.shape.objs[k]).map[static_cast<size_t>(w)];
        auto it = index.find(tup);
        if (it == index.end())
          throw math_error("limit_mediator: cone lands outside the family set");
        med[static_cast<size_t>(w)] = it->second;
      }
      return mor_mset(d.cat, other.apex, cert.cone.apex, std::move(med));
    }
    case CKind::Vect: {
      Mat F(0, other.apex.dim);
      for (const Obj& i : d.shape.objs) F = vcat(F, other.legs.at(i).mat);
      Mat u = solve_canonical(d.cat.ring, cert.vect_basis, F);
      return mor_vect(d.cat, other.apex, cert.cone.apex, std::move(u));
    }
    case CKind::Chain: {
      const ChainComplex& w = other.apex.cx;
      std::vector<Mat> comps;
      for (long n = 0; n <= w.top(); ++n) {
        Mat F(0, w.mod_at(n).gens);
        for (const Obj& i : d.shape.objs) F = vcat(F, other.legs.at(i).ch.comp_at(n));
        if (n < static_cast<long>(cert.chain_bases.size()))
          comps.push_back(solve_canonical(d.cat.ring, cert.chain_bases[static_cast<size_t>(n)], F));
        else
          comps.push_back(Mat(0, w.mod_at(n).gens));
      }
      return mor_chain(d.cat, make_map(w, cert.cone.apex.cx, std::move(comps)));
    }
    case CKind::Prod: {
      std::vector<CMor> parts;
      for (size_t k = 0; k < d.cat.parts.size(); ++k) {
        Cone ok;
        ok.apex = other.apex.parts[k];
        for (const auto& [i, leg] : other.legs) ok.legs[i] = leg.parts[k];
        parts.push_back(limit_mediator(cert.parts[k], ok));
      }
      return mor_prod(d.cat, std::move(parts));
    }
  }
  throw math_error("limit_mediator: unknown kind");
}

// --- induction / restriction ----------------------------------------------

MSetObj restrict_mset(const MonHom& f, const MSetObj& y) {
  MSetObj x;
  x.n = y.n;
  x.act.assign(static_cast<size_t>(y.n),
               std::vector<long>(static_cast<size_t>(f.src.size()), 0));
  for (long e = 0; e < y.n; ++e)
    for (long m = 0; m < f.src.size(); ++m)
      x.act[static_cast<size_t>(e)][static_cast<size_t>(m)] =
          y.act[static_cast<size_t>(e)][static_cast<size_t>(f.at(m))];
  return x;
}

std::vector<long> restrict_map(const MonHom&, const std::vector<long>& m) { return m; }

Induction induct_mset(const MonHom& f, const MSetObj& x) {
  const Monoid& Mp = f.dst;
  long S = Mp.size();
  // restriction along the identity is the identity, so induction along it
  // must be too — literally, not just up to iso
  if (f.src == f.dst) {
    bool ident = true;
    for (long m = 0; m < f.src.size(); ++m)
      if (f.at(m) != m) {
        ident = false;
        break;
      }
    if (ident) {
      Induction ind;
      ind.obj = x;
      ind.unit.resize(static_cast<size_t>(x.n));
      std::iota(ind.unit.begin(), ind.unit.end(), 0L);
      ind.cls_of.assign(static_cast<size_t>(x.n), std::vector<long>(static_cast<size_t>(S), 0));
      for (long e = 0; e < x.n; ++e)
        for (long mp = 0; mp < S; ++mp)
          ind.cls_of[static_cast<size_t>(e)][static_cast<size_t>(mp)] =
              x.act[static_cast<size_t>(e)][static_cast<size_t>(mp)];
      return ind;
    }
  }

  auto slot = [S](long e, long mp) { return e * S + mp; };
  UF uf(x.n * S);
  for (long mp = 0; mp < S; ++mp) uf.unite(slot(0, mp), slot(0, Mp.unit));
  for (long e = 0; e < x.n; ++e)
    for (long m = 0; m < f.src.size(); ++m)
      for (long mp = 0; mp < S; ++mp)
        uf.unite(slot(x.act[static_cast<size_t>(e)][static_cast<size_t>(m)], mp),
                 slot(e, Mp.times(f.at(m), mp)));
  long nc = 0;
  std::vector<long> cls = number_classes(uf, x.n * S, slot(0, Mp.unit), &nc);

  Induction ind;
  ind.obj.n = nc;
  ind.obj.act.assign(static_cast<size_t>(nc), std::vector<long>(static_cast<size_t>(S), -1));
  ind.cls_of.assign(static_cast<size_t>(x.n), std::vector<long>(static_cast<size_t>(S), 0));
  for (long e = 0; e < x.n; ++e)
    for (long mp = 0; mp < S; ++mp)
      ind.cls_of[static_cast<size_t>(e)][static_cast<size_t>(mp)] = cls[static_cast<size_t>(slot(e, mp))];
  for (long e = 0; e < x.n; ++e)
    for (long mp = 0; mp < S; ++mp) {
      long c = cls[static_cast<size_t>(slot(e, mp))];
      for (long np = 0; np < S; ++np) {
        long target = cls[static_cast<size_t>(slot(e, Mp.times(mp, np)))];
        long& out = ind.obj.act[static_cast<size_t>(c)][static_cast<size_t>(np)];
        if (out < 0)
          out = target;
        else if (out != target)
          throw math_error("induct_mset: induced action is ill-defined");
      }
    }
  ind.unit.resize(static_cast<size_t>(x.n));
  for (long e = 0; e < x.n; ++e)
    ind.unit[static_cast<size_t>(e)] = cls[static_cast<size_t>(slot(e, Mp.unit))];
  return ind;
}

std::vector<long> induct_map(const MonHom& f, const Induction& isrc, const Induction& idst,
                             const std::vector<long>& m) {
  long S = f.dst.size();
  std::vector<long> out(static_cast<size_t>(isrc.obj.n), -1);
  for (size_t e = 0; e < m.size(); ++e)
    for (long mp = 0; mp < S; ++mp) {
      long c = isrc.cls_of[e][static_cast<size_t>(mp)];
      long v = idst.cls_of[static_cast<size_t>(m[e])][static_cast<size_t>(mp)];
      if (out[static_cast<size_t>(c)] < 0)
        out[static_cast<size_t>(c)] = v;
      else if (out[static_cast<size_t>(c)] != v)
        throw math_error("induct_map: image is ill-defined");
    }
  return out;
}

std::vector<long> induct_counit(const MonHom& f, const MSetObj& y) {
  Induction ind = induct_mset(f, restrict_mset(f, y));
  long S = f.dst.size();
  std::vector<long> out(static_cast<size_t>(ind.obj.n), -1);
  for (long e = 0; e < y.n; ++e)
    for (long mp = 0; mp < S; ++mp) {
      long c = ind.cls_of[static_cast<size_t>(e)][static_cast<size_t>(mp)];
      long v = y.act[static_cast<size_t>(e)][static_cast<size_t>(mp)];
      if (out[static_cast<size_t>(c)] < 0)
        out[static_cast<size_t>(c)] = v;
      else if (out[static_cast<size_t>(c)] != v)
        throw math_error("induct_counit: component is ill-defined");
    }
  return out;
}

}  // namespace twk
