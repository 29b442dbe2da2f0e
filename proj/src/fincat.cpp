#include "twk/fincat.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

namespace twk {

bool FinCat::has_obj(const Obj& o) const {
  return std::find(objs.begin(), objs.end(), o) != objs.end();
}

const FinCat::MorData& FinCat::mor(const MorId& m) const {
  for (const auto& d : mors)
    if (d.id == m) return d;
  throw math_error("FinCat: unknown morphism id " + m);
}

std::vector<MorId> FinCat::hom(const Obj& a, const Obj& b) const {
  std::vector<MorId> out;
  for (const auto& d : mors)
    if (d.src == a && d.dst == b) out.push_back(d.id);
  return out;
}

MorId FinCat::compose(const MorId& g, const MorId& f) const {
  auto it = comp.find({g, f});
  if (it == comp.end()) throw math_error("FinCat: composition not tabled: " + g + " . " + f);
  return it->second;
}

bool FinCat::is_id(const MorId& m) const {
  for (const auto& [o, im] : idmor)
    if (im == m) return true;
  return false;
}

FinCat make_fincat(std::vector<Obj> objs, std::vector<FinCat::MorData> arrows,
                   std::vector<std::array<MorId, 3>> comp_rows) {
  FinCat c;
  c.objs = std::move(objs);
  for (const Obj& o : c.objs) {
    MorId im = "id_" + o;
    c.idmor[o] = im;
    c.mors.push_back({im, o, o});
  }
  for (auto& a : arrows) c.mors.push_back(std::move(a));
  for (const auto& d : c.mors) {
    // unit laws fill the identity rows
    c.comp[{c.idmor.at(d.dst), d.id}] = d.id;
    c.comp[{d.id, c.idmor.at(d.src)}] = d.id;
  }
  for (const auto& row : comp_rows) c.comp[{row[0], row[1]}] = row[2];
  return c;
}

FinCat make_poset(std::vector<Obj> objs, std::vector<std::pair<Obj, Obj>> covers) {
  // reachability closure; at most one arrow a -> b named "a<=b"
  std::set<std::pair<Obj, Obj>> le;
  for (const auto& [a, b] : covers) le.insert({a, b});
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& p : std::set<std::pair<Obj, Obj>>(le))
      for (const auto& q : std::set<std::pair<Obj, Obj>>(le))
        if (p.second == q.first && !le.count({p.first, q.second}) && p.first != q.second) {
          le.insert({p.first, q.second});
          grew = true;
        }
  }
  std::vector<FinCat::MorData> arrows;
  for (const auto& [a, b] : le)
    if (a != b) arrows.push_back({a + "<=" + b, a, b});
  FinCat c = make_fincat(std::move(objs), std::move(arrows), {});
  for (const auto& f : c.mors)
    for (const auto& g : c.mors)
      if (f.dst == g.src && !c.is_id(f.id) && !c.is_id(g.id))
        c.comp[{g.id, f.id}] = f.src + "<=" + g.dst;
  return c;
}

FinCat terminal_cat() { return make_fincat({"pt"}, {}, {}); }

FinCat discrete_cat(std::vector<Obj> objs) { return make_fincat(std::move(objs), {}, {}); }

FinCat interval_cat(long n) {
  std::vector<Obj> objs;
  std::vector<std::pair<Obj, Obj>> covers;
  for (long i = 0; i <= n; ++i) objs.push_back(std::to_string(i));
  for (long i = 0; i < n; ++i) covers.push_back({std::to_string(i), std::to_string(i + 1)});
  return make_poset(std::move(objs), std::move(covers));
}

static Obj subset_name(unsigned mask, long n) {
  // e.g. {0,2} of {0,1,2} prints "s02"
  Obj s = "s";
  for (long b = 0; b <= n; ++b)
    if (mask & (1u << b)) s += std::to_string(b);
  return s;
}

FinCat subset_poset(long n) {
  if (n < 0 || n > 4) throw math_error("subset_poset: size out of range");
  std::vector<Obj> objs;
  std::vector<std::pair<Obj, Obj>> covers;
  unsigned full = (1u << (n + 1)) - 1;
  for (unsigned m = 1; m <= full; ++m) objs.push_back(subset_name(m, n));
  for (unsigned m = 1; m <= full; ++m)
    for (unsigned M = 1; M <= full; ++M)
      if (m != M && (m & M) == m) covers.push_back({subset_name(m, n), subset_name(M, n)});
  return make_poset(std::move(objs), std::move(covers));
}

FinCat op_cat(const FinCat& c) {
  FinCat o;
  o.objs = c.objs;
  o.idmor = c.idmor;
  for (const auto& d : c.mors) o.mors.push_back({d.id, d.dst, d.src});
  for (const auto& [pair, h] : c.comp) o.comp[{pair.second, pair.first}] = h;
  return o;
}

FinCat disjoint_union(const FinCat& a, const FinCat& b) {
  FinCat u;
  auto add = [&](const FinCat& c, const std::string& pre) {
    for (const Obj& o : c.objs) u.objs.push_back(pre + o);
    for (const auto& d : c.mors) u.mors.push_back({pre + d.id, pre + d.src, pre + d.dst});
    for (const auto& [o, m] : c.idmor) u.idmor[pre + o] = pre + m;
    for (const auto& [pair, h] : c.comp) u.comp[{pre + pair.first, pre + pair.second}] = pre + h;
  };
  add(a, "L:");
  add(b, "R:");
  return u;
}

std::vector<std::string> validate_cat(const FinCat& c) {
  std::vector<std::string> out;
  std::set<MorId> morids;
  for (const auto& d : c.mors) {
    if (!morids.insert(d.id).second) out.push_back("duplicate morphism id " + d.id);
    if (!c.has_obj(d.src)) out.push_back("morphism " + d.id + " has undeclared source " + d.src);
    if (!c.has_obj(d.dst)) out.push_back("morphism " + d.id + " has undeclared target " + d.dst);
  }
  for (const Obj& o : c.objs) {
    auto it = c.idmor.find(o);
    if (it == c.idmor.end()) {
      out.push_back("object " + o + " has no identity");
      continue;
    }
    if (!morids.count(it->second)) out.push_back("identity of " + o + " is undeclared");
  }
  for (const auto& [pair, h] : c.comp) {
    if (!morids.count(pair.first) || !morids.count(pair.second) || !morids.count(h)) {
      out.push_back("composition row references undeclared id: " + pair.first + " . " +
                    pair.second);
      continue;
    }
    const auto &g = c.mor(pair.first), &f = c.mor(pair.second), &gf = c.mor(h);
    if (f.dst != g.src)
      out.push_back("typing: " + pair.first + " . " + pair.second + " not composable");
    else if (gf.src != f.src || gf.dst != g.dst)
      out.push_back("typing: " + pair.first + " . " + pair.second + " = " + h +
                    " has wrong endpoints");
  }
  // totality on composable pairs
  for (const auto& f : c.mors)
    for (const auto& g : c.mors)
      if (f.dst == g.src && !c.comp.count({g.id, f.id}))
        out.push_back("missing composite " + g.id + " . " + f.id);
  // identity laws
  for (const auto& d : c.mors) {
    auto l = c.comp.find({c.idmor.count(d.dst) ? c.idmor.at(d.dst) : "", d.id});
    if (l != c.comp.end() && l->second != d.id)
      out.push_back("left identity law fails for " + d.id);
    auto r = c.comp.find({d.id, c.idmor.count(d.src) ? c.idmor.at(d.src) : ""});
    if (r != c.comp.end() && r->second != d.id)
      out.push_back("right identity law fails for " + d.id);
  }
  // associativity on every composable triple
  for (const auto& f : c.mors)
    for (const auto& g : c.mors)
      for (const auto& h : c.mors)
        if (f.dst == g.src && g.dst == h.src && c.comp.count({g.id, f.id}) &&
            c.comp.count({h.id, g.id})) {
          auto gf = c.comp.at({g.id, f.id});
          auto hg = c.comp.at({h.id, g.id});
          if (c.comp.count({h.id, gf}) && c.comp.count({hg, f.id}) &&
              c.comp.at({h.id, gf}) != c.comp.at({hg, f.id}))
            out.push_back("associativity fails on (" + h.id + ", " + g.id + ", " + f.id + ")");
        }
  return out;
}

// --- degree functions and components --------------------------------------

std::vector<std::vector<Obj>> connected_components(const FinCat& c) {
  std::map<Obj, Obj> parent;
  for (const Obj& o : c.objs) parent[o] = o;
  std::function<Obj(Obj)> find = [&](Obj x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& d : c.mors) parent[find(d.src)] = find(d.dst);
  std::map<Obj, std::vector<Obj>> buckets;
  for (const Obj& o : c.objs) buckets[find(o)].push_back(o);
  std::vector<std::vector<Obj>> out;
  for (auto& [r, v] : buckets) out.push_back(std::move(v));
  return out;
}

DegreeInfo classify_degree(const FinCat& c, const std::map<Obj, long>& deg) {
  DegreeInfo info;
  info.arrows_change_degree = true;
  info.direct = true;
  info.inverse = true;
  for (const auto& d : c.mors) {
    if (c.is_id(d.id)) continue;
    long a = deg.at(d.src), b = deg.at(d.dst);
    if (a == b) info.arrows_change_degree = false;
    if (!(a < b)) info.direct = false;
    if (!(a > b)) info.inverse = false;
  }
  for (const auto& comp : connected_components(c)) {
    long lo = deg.at(comp.front()), hi = lo;
    for (const Obj& o : comp) {
      lo = std::min(lo, deg.at(o));
      hi = std::max(hi, deg.at(o));
    }
    info.component_bounds.push_back({lo, hi});
  }
  return info;
}

std::optional<std::map<Obj, long>> direct_degree(const FinCat& c) {
  // Kahn order on the non-identity arrow graph; degree = longest path from
  // the sources, so every surviving arrow raises it by at least one.
  std::map<Obj, long> indeg;
  for (const Obj& o : c.objs) indeg[o] = 0;
  for (const auto& d : c.mors) {
    if (c.is_id(d.id)) continue;
    if (d.src == d.dst) return std::nullopt;  // non-identity endomorphism
    ++indeg[d.dst];
  }
  std::map<Obj, long> deg;
  std::vector<Obj> ready;
  for (const Obj& o : c.objs)
    if (indeg.at(o) == 0) {
      ready.push_back(o);
      deg[o] = 0;
    }
  size_t done = 0;
  while (done < ready.size()) {
    Obj o = ready[done++];
    for (const auto& d : c.mors) {
      if (c.is_id(d.id) || d.src != o) continue;
      deg[d.dst] = std::max(deg.count(d.dst) ? deg.at(d.dst) : 0, deg.at(o) + 1);
      if (--indeg[d.dst] == 0) ready.push_back(d.dst);
    }
  }
  if (done < c.objs.size()) return std::nullopt;  // directed cycle
  return deg;
}

// --- functors -------------------------------------------------------------

Obj FinFunctor::ob(const Obj& o) const {
  auto it = on_obj.find(o);
  if (it == on_obj.end()) throw math_error("FinFunctor: unmapped object " + o);
  return it->second;
}

MorId FinFunctor::mo(const MorId& m) const {
  auto it = on_mor.find(m);
  if (it == on_mor.end()) throw math_error("FinFunctor: unmapped morphism " + m);
  return it->second;
}

FinFunctor id_functor(const FinCat& c) {
  FinFunctor f;
  f.src = c;
  f.dst = c;
  for (const Obj& o : c.objs) f.on_obj[o] = o;
  for (const auto& d : c.mors) f.on_mor[d.id] = d.id;
  return f;
}

bool validate_functor(const FinFunctor& f) {
  for (const Obj& o : f.src.objs) {
    if (!f.on_obj.count(o) || !f.dst.has_obj(f.on_obj.at(o))) return false;
    if (f.mo(f.src.idmor.at(o)) != f.dst.idmor.at(f.ob(o))) return false;
  }
  for (const auto& d : f.src.mors) {
    if (!f.on_mor.count(d.id)) return false;
    const auto& img = f.dst.mor(f.mo(d.id));
    if (img.src != f.ob(d.src) || img.dst != f.ob(d.dst)) return false;
  }
  for (const auto& a : f.src.mors)
    for (const auto& b : f.src.mors)
      if (a.dst == b.src)
        if (f.mo(f.src.compose(b.id, a.id)) != f.dst.compose(f.mo(b.id), f.mo(a.id)))
          return false;
  return true;
}

// --- comma categories -----------------------------------------------------

namespace {

Obj pair_name(const Obj& i, const MorId& s) { return "(" + i + "," + s + ")"; }
MorId lift_name(const MorId& alpha, const Obj& a, const Obj& b) {
  return "[" + alpha + ":" + a + ">" + b + "]";
}

// shared builder: objects are (i, sigma) pairs filtered by `admit`, a
// morphism alpha : i -> i' lifts when `lifts` approves the two sigmas
CommaCat build_comma(const FinCat& index, const FinCat& ambient,
                     const std::vector<std::pair<Obj, MorId>>& pairs,
                     const std::function<bool(const MorId&, const std::pair<Obj, MorId>&,
                                              const std::pair<Obj, MorId>&)>& lifts) {
  CommaCat cc;
  std::vector<FinCat::MorData> arrows;
  for (const auto& [i, s] : pairs) cc.cat.objs.push_back(pair_name(i, s));
  for (const auto& pa : pairs)
    for (const auto& pb : pairs)
      for (const MorId& alpha : index.hom(pa.first, pb.first)) {
        if (index.is_id(alpha) && pa == pb) continue;  // identities added below
        if (lifts(alpha, pa, pb)) {
          MorId m = lift_name(alpha, pair_name(pa.first, pa.second), pair_name(pb.first, pb.second));
          arrows.push_back({m, pair_name(pa.first, pa.second), pair_name(pb.first, pb.second)});
          cc.mor_alpha[m] = alpha;
        }
      }
  cc.cat = make_fincat(std::move(cc.cat.objs), std::move(arrows), {});
  for (const auto& [o, im] : cc.cat.idmor) {
    // identity lifts record the identity arrow downstairs
    for (const auto& p : pairs)
      if (pair_name(p.first, p.second) == o) cc.mor_alpha[im] = index.idmor.at(p.first);
  }
  for (const auto& p : pairs) cc.parts[pair_name(p.first, p.second)] = p;
  // compositions inherited from the index category
  for (const auto& f : cc.cat.mors)
    for (const auto& g : cc.cat.mors)
      if (f.dst == g.src && !cc.cat.is_id(f.id) && !cc.cat.is_id(g.id)) {
        MorId down = index.compose(cc.mor_alpha.at(g.id), cc.mor_alpha.at(f.id));
        cc.cat.comp[{g.id, f.id}] = index.is_id(down) && f.src == g.dst
                                        ? cc.cat.idmor.at(f.src)
                                        : lift_name(down, f.src, g.dst);
      }
  cc.proj.src = cc.cat;
  cc.proj.dst = ambient;
  for (const auto& [o, p] : cc.parts) cc.proj.on_obj[o] = p.first;
  for (const auto& [m, a] : cc.mor_alpha) cc.proj.on_mor[m] = a;
  return cc;
}

}  // namespace

CommaCat comma_over(const FinFunctor& phi, const Obj& j) {
  std::vector<std::pair<Obj, MorId>> pairs;
  for (const Obj& i : phi.src.objs)
    for (const MorId& s : phi.dst.hom(phi.ob(i), j)) pairs.push_back({i, s});
  return build_comma(phi.src, phi.src, pairs,
                     [&](const MorId& alpha, const std::pair<Obj, MorId>& pa,
                         const std::pair<Obj, MorId>& pb) {
                       // sigma' . Phi(alpha) = sigma
                       return phi.dst.compose(pb.second, phi.mo(alpha)) == pa.second;
                     });
}

CommaCat comma_under(const FinFunctor& phi, const Obj& j) {
  std::vector<std::pair<Obj, MorId>> pairs;
  for (const Obj& i : phi.src.objs)
    for (const MorId& s : phi.dst.hom(j, phi.ob(i))) pairs.push_back({i, s});
  return build_comma(phi.src, phi.src, pairs,
                     [&](const MorId& alpha, const std::pair<Obj, MorId>& pa,
                         const std::pair<Obj, MorId>& pb) {
                       // Phi(alpha) . sigma = sigma'
                       return phi.dst.compose(phi.mo(alpha), pa.second) == pb.second;
                     });
}

CommaCat strict_over(const FinCat& c, const Obj& i) {
  std::vector<std::pair<Obj, MorId>> pairs;
  for (const Obj& j : c.objs)
    for (const MorId& s : c.hom(j, i))
      if (s != c.idmor.at(i)) pairs.push_back({j, s});
  return build_comma(c, c, pairs,
                     [&](const MorId& alpha, const std::pair<Obj, MorId>& pa,
                         const std::pair<Obj, MorId>& pb) {
                       return c.compose(pb.second, alpha) == pa.second;
                     });
}

CommaCat strict_under(const FinCat& c, const Obj& i) {
  std::vector<std::pair<Obj, MorId>> pairs;
  for (const Obj& j : c.objs)
    for (const MorId& s : c.hom(i, j))
      if (s != c.idmor.at(i)) pairs.push_back({j, s});
  return build_comma(c, c, pairs,
                     [&](const MorId& alpha, const std::pair<Obj, MorId>& pa,
                         const std::pair<Obj, MorId>& pb) {
                       return c.compose(alpha, pa.second) == pb.second;
                     });
}

// --- finality -------------------------------------------------------------

FinalityResult is_final(const FinFunctor& f) {
  for (const Obj& a : f.dst.objs) {
    CommaCat under = comma_under(f, a);
    if (under.cat.objs.empty()) return {false, a};
    if (connected_components(under.cat).size() != 1) return {false, a};
  }
  return {true, Obj()};
}

}  // namespace twk
