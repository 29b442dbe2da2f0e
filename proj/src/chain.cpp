#include "twk/chain.hpp"

#include <algorithm>

#include "twk/eqsys.hpp"

namespace twk {

// --- complexes ------------------------------------------------------------

PresModule ChainComplex::mod_at(long n) const {
  if (n < 0 || n > top()) return PresModule(ring, 0, Mat(0, 0));
  return mods[static_cast<size_t>(n)];
}

Mat ChainComplex::diff_at(long n) const {
  if (n >= 1 && n <= top()) return diffs[static_cast<size_t>(n)];
  return Mat(mod_at(n - 1).gens, mod_at(n).gens);
}

long ChainComplex::total_rank() const {
  long s = 0;
  for (const auto& m : mods) s += m.gens;
  return s;
}

bool ChainComplex::operator==(const ChainComplex& o) const {
  if (ring.tag != o.ring.tag || ring.p != o.ring.p) return false;
  if (mods != o.mods) return false;
  for (long n = 1; n <= top(); ++n)
    if (!(diffs[static_cast<size_t>(n)] == o.diffs[static_cast<size_t>(n)]))
      return false;
  return true;
}

ChainComplex zero_cx(const Ring& R) {
  ChainComplex x;
  x.ring = R;
  x.mods = {PresModule(R, 0, Mat(0, 0))};
  x.diffs = {Mat(0, 0)};
  return x;
}

ChainComplex make_cx(const Ring& R, std::vector<PresModule> mods, std::vector<Mat> diffs) {
  if (mods.empty()) return zero_cx(R);
  if (diffs.size() != mods.size())
    throw math_error("make_cx: need one differential slot per degree");
  while (mods.size() > 1 && mods.back().gens == 0) {
    mods.pop_back();
    diffs.pop_back();
  }
  ChainComplex x;
  x.ring = R;
  x.mods = std::move(mods);
  x.diffs = std::move(diffs);
  x.diffs[0] = Mat(0, x.mods[0].gens);
  for (long n = 1; n <= x.top(); ++n) {
    const Mat& d = x.diffs[static_cast<size_t>(n)];
    if (d.m != x.mods[static_cast<size_t>(n - 1)].gens ||
        d.n != x.mods[static_cast<size_t>(n)].gens)
      throw math_error("make_cx: differential shape mismatch");
  }
  return x;
}

bool validate_cx(const ChainComplex& x) {
  if (x.mods.empty() || x.diffs.size() != x.mods.size()) return false;
  if (x.mods.size() > 1 && x.mods.back().gens == 0) return false;  // untrimmed
  for (long n = 1; n <= x.top(); ++n) {
    ModMor d(x.mod_at(n), x.mod_at(n - 1), x.diff_at(n));
    if (!well_defined(d)) return false;
    if (n >= 2) {
      ModMor dd(x.mod_at(n), x.mod_at(n - 2),
                mul(x.ring, x.diff_at(n - 1), x.diff_at(n)));
      if (!is_zero_mor(dd)) return false;
    }
  }
  return true;
}

// --- chain maps -----------------------------------------------------------

Mat ChainMap::comp_at(long n) const {
  if (n >= 0 && n < static_cast<long>(comps.size()))
    return comps[static_cast<size_t>(n)];
  return Mat(dst.mod_at(n).gens, src.mod_at(n).gens);
}

ModMor ChainMap::mor_at(long n) const {
  return ModMor(src.mod_at(n), dst.mod_at(n), comp_at(n));
}

ChainMap make_map(ChainComplex src, ChainComplex dst, std::vector<Mat> comps) {
  ChainMap f;
  f.src = std::move(src);
  f.dst = std::move(dst);
  comps.resize(static_cast<size_t>(f.src.top() + 1), Mat(0, 0));
  for (long n = 0; n <= f.src.top(); ++n) {
    Mat& c = comps[static_cast<size_t>(n)];
    long wantm = f.dst.mod_at(n).gens, wantn = f.src.mod_at(n).gens;
    if (c.m == 0 && c.n == 0 && (wantm != 0 || wantn != 0)) c = Mat(wantm, wantn);
    if (c.m != wantm || c.n != wantn)
      throw math_error("make_map: component shape mismatch");
  }
  f.comps = std::move(comps);
  return f;
}

ChainMap id_map(const ChainComplex& x) {
  std::vector<Mat> comps;
  for (long n = 0; n <= x.top(); ++n) comps.push_back(Mat::ident(x.mod_at(n).gens));
  return make_map(x, x, std::move(comps));
}

ChainMap zero_map(const ChainComplex& src, const ChainComplex& dst) {
  return make_map(src, dst, {});
}

bool validate_map(const ChainMap& f) {
  if (f.src.ring.tag != f.dst.ring.tag || f.src.ring.p != f.dst.ring.p) return false;
  long hi = std::max(f.src.top(), f.dst.top());
  for (long n = 0; n <= hi; ++n)
    if (!well_defined(f.mor_at(n))) return false;
  const Ring& R = f.src.ring;
  for (long n = 1; n <= f.src.top(); ++n) {
    Mat lhs = mul(R, f.comp_at(n - 1), f.src.diff_at(n));
    Mat rhs = mul(R, f.dst.diff_at(n), f.comp_at(n));
    ModMor diff(f.src.mod_at(n), f.dst.mod_at(n - 1), sub(R, lhs, rhs));
    if (!is_zero_mor(diff)) return false;
  }
  return true;
}

ChainMap compose_map(const ChainMap& g, const ChainMap& f) {
  if (!(g.src == f.dst)) throw math_error("compose_map: middle complexes differ");
  const Ring& R = f.src.ring;
  std::vector<Mat> comps;
  for (long n = 0; n <= f.src.top(); ++n)
    comps.push_back(mul(R, g.comp_at(n), f.comp_at(n)));
  return make_map(f.src, g.dst, std::move(comps));
}

bool map_eq(const ChainMap& f, const ChainMap& g) {
  if (!(f.src == g.src) || !(f.dst == g.dst)) return false;
  long hi = std::max(f.src.top(), f.dst.top());
  for (long n = 0; n <= hi; ++n)
    if (!mor_eq(f.mor_at(n), g.mor_at(n))) return false;
  return true;
}

ChainMap add_map(const ChainMap& f, const ChainMap& g) {
  if (!(f.src == g.src) || !(f.dst == g.dst)) throw math_error("add_map: shape mismatch");
  std::vector<Mat> comps;
  for (long n = 0; n <= f.src.top(); ++n)
    comps.push_back(add(f.src.ring, f.comp_at(n), g.comp_at(n)));
  return make_map(f.src, f.dst, std::move(comps));
}

ChainMap sub_map(const ChainMap& f, const ChainMap& g) {
  if (!(f.src == g.src) || !(f.dst == g.dst)) throw math_error("sub_map: shape mismatch");
  std::vector<Mat> comps;
  for (long n = 0; n <= f.src.top(); ++n)
    comps.push_back(sub(f.src.ring, f.comp_at(n), g.comp_at(n)));
  return make_map(f.src, f.dst, std::move(comps));
}

// --- homology -------------------------------------------------------------

// basis (in generator coordinates of x_n) of the n-cycles: d x in rel span
static Mat cycle_basis(const ChainComplex& x, long n) {
  return preimage_span(x.ring, x.diff_at(n), x.mod_at(n - 1).rels);
}

PresModule homology_mod(const ChainComplex& x, long n) {
  if (n < 0) throw math_error("homology_mod: negative degree");
  if (n > x.top()) return PresModule(x.ring, 0, Mat(0, 0));
  Mat Z = cycle_basis(x, n);
  Mat B = hcat(x.diff_at(n + 1), x.mod_at(n).rels);
  return PresModule(x.ring, Z.n, preimage_span(x.ring, Z, B));
}

ModShape homology_shape(const ChainComplex& x, long n) {
  return invariants(homology_mod(x, n));
}

ModMor homology_map(const ChainMap& f, long n) {
  if (n < 0) throw math_error("homology_map: negative degree");
  const Ring& R = f.src.ring;
  PresModule hs = homology_mod(f.src, n), hd = homology_mod(f.dst, n);
  Mat Zs = n > f.src.top() ? Mat(f.src.mod_at(n).gens, 0) : cycle_basis(f.src, n);
  Mat Zd = n > f.dst.top() ? Mat(f.dst.mod_at(n).gens, 0) : cycle_basis(f.dst, n);
  // f maps the cycle lattice into the cycle lattice, exactly
  Mat W = solve_canonical(R, Zd, mul(R, f.comp_at(n), Zs));
  return ModMor(hs, hd, W);
}

// --- model structure ------------------------------------------------------

bool is_weq(const ChainMap& f) {
  long hi = std::max(f.src.top(), f.dst.top());
  for (long n = 0; n <= hi; ++n)
    if (!is_iso_mor(homology_map(f, n))) return false;
  return true;
}

bool is_fib(const ChainMap& f) {
  for (long n = 1; n <= f.dst.top(); ++n)
    if (!is_surjective(f.mor_at(n))) return false;
  return true;
}

bool is_cof(const ChainMap& f) {
  long hi = std::max(f.src.top(), f.dst.top());
  for (long n = 0; n <= hi; ++n) {
    ModMor c = f.mor_at(n);
    if (!is_injective(c)) return false;
    if (!is_free_pres(cokernel_mor(c).mod)) return false;
  }
  return true;
}

bool is_acyclic_fib(const ChainMap& f) {
  // for surjections, quasi-iso is equivalent to an acyclic kernel; we use
  // the all-degrees-epi + weq characterization
  for (long n = 0; n <= f.dst.top(); ++n)
    if (!is_surjective(f.mor_at(n))) return false;
  return is_weq(f);
}

bool is_acyclic_cof(const ChainMap& f) { return is_cof(f) && is_weq(f); }

bool is_cofibrant(const ChainComplex& x) {
  for (const auto& m : x.mods)
    if (!is_free_pres(m)) return false;
  return true;
}

// --- spheres and disks ----------------------------------------------------

ChainComplex sphere_cx(const Ring& R, long n) {
  if (n < 0) throw math_error("sphere_cx: negative degree");
  std::vector<PresModule> mods;
  std::vector<Mat> diffs;
  for (long m = 0; m <= n; ++m) {
    mods.push_back(PresModule::free_mod(R, m == n ? 1 : 0));
    diffs.push_back(Mat(0, 0));
  }
  for (long m = 1; m <= n; ++m)
    diffs[static_cast<size_t>(m)] = Mat(mods[static_cast<size_t>(m - 1)].gens,
                                        mods[static_cast<size_t>(m)].gens);
  return make_cx(R, std::move(mods), std::move(diffs));
}

ChainComplex disk_cx(const Ring& R, long n) {
  if (n < 1) throw math_error("disk_cx: degree must be >= 1");
  std::vector<PresModule> mods;
  std::vector<Mat> diffs;
  for (long m = 0; m <= n; ++m) {
    long g = (m == n || m == n - 1) ? 1 : 0;
    mods.push_back(PresModule::free_mod(R, g));
    diffs.push_back(Mat(0, 0));
  }
  for (long m = 1; m <= n; ++m) {
    Mat d(mods[static_cast<size_t>(m - 1)].gens, mods[static_cast<size_t>(m)].gens);
    if (m == n) d.at(0, 0) = Q(1);
    diffs[static_cast<size_t>(m)] = d;
  }
  return make_cx(R, std::move(mods), std::move(diffs));
}

ChainMap gen_cof(const Ring& R, long n) {
  if (n == 0) return zero_map(zero_cx(R), sphere_cx(R, 0));
  ChainComplex s = sphere_cx(R, n - 1), d = disk_cx(R, n);
  std::vector<Mat> comps(static_cast<size_t>(n), Mat(0, 0));
  comps[static_cast<size_t>(n - 1)] = Mat::ident(1);
  return make_map(std::move(s), std::move(d), std::move(comps));
}

ChainMap gen_acyclic_cof(const Ring& R, long n) {
  return zero_map(zero_cx(R), disk_cx(R, n));
}

// --- factorization: acyclic cofibration then fibration --------------------

Factorization factor_trivcof_fib(const ChainMap& f) {
  const Ring& R = f.src.ring;
  const ChainComplex& X = f.src;
  const ChainComplex& Y = f.dst;
  long hi = std::max(X.top(), Y.top());
  auto gy = [&](long n) { return n >= 1 && n <= Y.top() ? Y.mod_at(n).gens : 0; };

  // T_m = X_m + (disk tops for Y_m) + (disk bottoms for Y_{m+1})
  std::vector<PresModule> mods;
  std::vector<Mat> diffs;
  std::vector<Mat> qc, jc;
  for (long m = 0; m <= hi; ++m) {
    long xg = X.mod_at(m).gens, tg = gy(m), bg = gy(m + 1);
    mods.push_back(dsum(X.mod_at(m), PresModule::free_mod(R, tg + bg)));
    Mat q(Y.mod_at(m).gens, xg + tg + bg);
    Mat fm = f.comp_at(m);
    for (long i = 0; i < q.m; ++i)
      for (long j = 0; j < xg; ++j) q.at(i, j) = fm.at(i, j);
    for (long k = 0; k < tg; ++k) q.at(k, xg + k) = Q(1);  // tops hit generators
    Mat dy = Y.diff_at(m + 1);
    for (long i = 0; i < q.m; ++i)
      for (long k = 0; k < bg; ++k) q.at(i, xg + tg + k) = dy.at(i, k);
    qc.push_back(std::move(q));
    Mat j(xg + tg + bg, xg);
    for (long i = 0; i < xg; ++i) j.at(i, i) = Q(1);
    jc.push_back(std::move(j));
    diffs.push_back(Mat(0, 0));
  }
  for (long m = 1; m <= hi; ++m) {
    long xg = X.mod_at(m).gens, tg = gy(m), bg = gy(m + 1);
    long pxg = X.mod_at(m - 1).gens, ptg = gy(m - 1);
    Mat d(pxg + ptg + gy(m), xg + tg + bg);
    Mat dx = X.diff_at(m);
    for (long i = 0; i < pxg; ++i)
      for (long j = 0; j < xg; ++j) d.at(i, j) = dx.at(i, j);
    for (long k = 0; k < tg; ++k) d.at(pxg + ptg + k, xg + k) = Q(1);  // top -> bottom
    diffs[static_cast<size_t>(m)] = std::move(d);
  }
  ChainComplex T = make_cx(R, std::move(mods), std::move(diffs));
  ChainMap j = make_map(X, T, std::move(jc));
  ChainMap q = make_map(T, Y, std::move(qc));
  return {std::move(j), std::move(q)};
}

// --- factorization: cofibration then acyclic fibration --------------------

// Free cells are attached degree by degree: first cells covering every
// generator of the target (keeps the projection epi in all degrees), then
// cells killing the cycles of the kernel one degree down.  Two degrees past
// all content, nothing is left to kill.
Factorization factor_cof_trivfib(const ChainMap& f) {
  const Ring& R = f.src.ring;
  const ChainComplex& X = f.src;
  const ChainComplex& Y = f.dst;
  long N = std::max(X.top(), Y.top());

  std::vector<PresModule> tmods;
  std::vector<Mat> tdiffs, pc;
  auto tmod = [&](long n) {
    return n >= 0 && n < static_cast<long>(tmods.size()) ? tmods[static_cast<size_t>(n)]
                                                         : PresModule(R, 0, Mat(0, 0));
  };

  for (long n = 0; n <= N + 2; ++n) {
    long xg = X.mod_at(n).gens;
    long cover = Y.mod_at(n).gens;

    // differentials of the cover cells: cycles mapping onto d(target gens)
    Mat cover_d(tmod(n - 1).gens, cover);
    if (n >= 1 && cover > 0) {
      EqSys sys(R);
      int t = sys.add_unknown(tmod(n - 1).gens, cover);
      const Mat relY = Y.mod_at(n - 1).rels;
      const Mat relT = tmod(n - 2).rels;
      sys.add_eq({{t, pc[static_cast<size_t>(n - 1)], Mat::ident(cover)}},
                 neg(R, Y.diff_at(n)), relY.n > 0 ? &relY : nullptr);
      sys.add_eq({{t, tdiffs[static_cast<size_t>(n - 1)], Mat::ident(cover)}},
                 Mat(tmod(n - 2).gens, cover), relT.n > 0 ? &relT : nullptr);
      auto sol = sys.solve_sys();
      if (!sol) throw math_error("factor_cof_trivfib: cover cell has no boundary");
      cover_d = (*sol)[0];
    }

    // provisional degree-n data with X part and cover cells
    Mat dn(tmod(n - 1).gens, xg + cover);
    {
      Mat dx = X.diff_at(n);  // X_{n} -> X_{n-1} sits in the leading block
      for (long i = 0; i < dx.m; ++i)
        for (long j = 0; j < xg; ++j) dn.at(i, j) = dx.at(i, j);
      for (long i = 0; i < dn.m; ++i)
        for (long k = 0; k < cover; ++k) dn.at(i, xg + k) = cover_d.at(i, k);
    }
    Mat pn(Y.mod_at(n).gens, xg + cover);
    {
      Mat fm = f.comp_at(n);
      for (long i = 0; i < pn.m; ++i)
        for (long j = 0; j < xg; ++j) pn.at(i, j) = fm.at(i, j);
      for (long k = 0; k < cover; ++k) pn.at(k, xg + k) = Q(1);
    }

    // kill cells: cycles of the kernel one degree down not already bounded
    std::vector<Mat> kills;
    if (n >= 1) {
      Mat A = vcat(pc[static_cast<size_t>(n - 1)], tdiffs[static_cast<size_t>(n - 1)]);
      Mat S = block_diag(Y.mod_at(n - 1).rels, tmod(n - 2).rels);
      Mat Zc = preimage_span(R, A, S);
      // boundaries of the kernel of p at this degree, plus ambient relations
      Mat Kb = preimage_span(R, pn, Y.mod_at(n).rels);
      Mat bnd = hcat(mul(R, dn, Kb), tmod(n - 1).rels);
      for (long j = 0; j < Zc.n; ++j) {
        Mat z = Zc.col(j);
        if (!in_span(R, bnd, z)) {
          kills.push_back(z);
          bnd = hcat(bnd, z);
        }
      }
    }
    long kn = static_cast<long>(kills.size());
    Mat dfull(tmod(n - 1).gens, xg + cover + kn);
    for (long i = 0; i < dfull.m; ++i)
      for (long j = 0; j < xg + cover; ++j) dfull.at(i, j) = dn.at(i, j);
    for (long k = 0; k < kn; ++k)
      for (long i = 0; i < dfull.m; ++i) dfull.at(i, xg + cover + k) = kills[static_cast<size_t>(k)].at(i, 0);
    Mat pfull(Y.mod_at(n).gens, xg + cover + kn);
    for (long i = 0; i < pfull.m; ++i)
      for (long j = 0; j < xg + cover; ++j) pfull.at(i, j) = pn.at(i, j);

    tmods.push_back(dsum(X.mod_at(n), PresModule::free_mod(R, cover + kn)));
    tdiffs.push_back(std::move(dfull));
    pc.push_back(std::move(pfull));
  }

  ChainComplex T = make_cx(R, tmods, tdiffs);
  // inclusion of X in the leading block of every degree
  std::vector<Mat> jc;
  for (long n = 0; n <= X.top(); ++n) {
    long xg = X.mod_at(n).gens;
    Mat j(T.mod_at(n).gens, xg);
    for (long i = 0; i < xg; ++i) j.at(i, i) = Q(1);
    jc.push_back(std::move(j));
  }
  pc.resize(static_cast<size_t>(T.top() + 1));
  ChainMap j = make_map(X, T, std::move(jc));
  ChainMap p = make_map(T, Y, std::move(pc));
  return {std::move(j), std::move(p)};
}

CofReplacement cofibrant_replace(const ChainComplex& x) {
  if (is_cofibrant(x)) return {x, id_map(x)};
  Factorization fac = factor_cof_trivfib(zero_map(zero_cx(x.ring), x));
  return {fac.second.src, fac.second};
}

// --- lifting --------------------------------------------------------------

std::optional<ChainMap> fill_square(const ChainMap& i, const ChainMap& p,
                                    const ChainMap& u, const ChainMap& v) {
  if (!(u.src == i.src) || !(v.src == i.dst) || !(u.dst == p.src) || !(v.dst == p.dst))
    throw math_error("fill_square: square corners do not match");
  const Ring& R = p.src.ring;
  const ChainComplex& B = i.dst;
  const ChainComplex& Xc = p.src;
  long bt = B.top();
  EqSys sys(R);
  std::vector<int> w(static_cast<size_t>(bt + 1));
  for (long n = 0; n <= bt; ++n)
    w[static_cast<size_t>(n)] = sys.add_unknown(Xc.mod_at(n).gens, B.mod_at(n).gens);
  for (long n = 0; n <= bt; ++n) {
    const Mat relX = Xc.mod_at(n).rels;
    const Mat* mx = relX.n > 0 ? &relX : nullptr;
    // respect relations of B_n
    Mat relB = B.mod_at(n).rels;
    if (relB.n > 0)
      sys.add_eq({{w[static_cast<size_t>(n)], Mat::ident(Xc.mod_at(n).gens), relB}},
                 Mat(Xc.mod_at(n).gens, relB.n), mx);
    // commute with differentials
    if (n >= 1) {
      const Mat relX1 = Xc.mod_at(n - 1).rels;
      const Mat* mx1 = relX1.n > 0 ? &relX1 : nullptr;
      sys.add_eq({{w[static_cast<size_t>(n - 1)], Mat::ident(Xc.mod_at(n - 1).gens), B.diff_at(n)},
                  {w[static_cast<size_t>(n)], neg(R, Xc.diff_at(n)), Mat::ident(B.mod_at(n).gens)}},
                 Mat(Xc.mod_at(n - 1).gens, B.mod_at(n).gens), mx1);
    }
    // w . i = u on degrees where the top row exists
    if (n <= i.src.top()) {
      sys.add_eq({{w[static_cast<size_t>(n)], Mat::ident(Xc.mod_at(n).gens), i.comp_at(n)}},
                 neg(R, u.comp_at(n)), mx);
    }
    // p . w = v
    const Mat relY = p.dst.mod_at(n).rels;
    const Mat* my = relY.n > 0 ? &relY : nullptr;
    sys.add_eq({{w[static_cast<size_t>(n)], p.comp_at(n), Mat::ident(B.mod_at(n).gens)}},
               neg(R, v.comp_at(n)), my);
  }
  // degrees of A above B's top force u to vanish there
  for (long n = bt + 1; n <= i.src.top(); ++n) {
    const Mat relX = p.src.mod_at(n).rels;
    const Mat* mx = relX.n > 0 ? &relX : nullptr;
    sys.add_eq({}, u.comp_at(n), mx);
  }
  auto sol = sys.solve_sys();
  if (!sol) return std::nullopt;
  std::vector<Mat> comps;
  for (long n = 0; n <= bt; ++n) comps.push_back((*sol)[static_cast<size_t>(n)]);
  return make_map(B, Xc, std::move(comps));
}

// --- chain homotopy -------------------------------------------------------

std::optional<std::vector<Mat>> solve_homotopy(const ChainMap& f, const ChainMap& g) {
  if (!(f.src == g.src) || !(f.dst == g.dst))
    throw math_error("solve_homotopy: maps must be parallel");
  const Ring& R = f.src.ring;
  const ChainComplex& X = f.src;
  const ChainComplex& Y = f.dst;
  long xt = X.top();
  EqSys sys(R);
  std::vector<int> h(static_cast<size_t>(xt + 1));
  for (long n = 0; n <= xt; ++n)
    h[static_cast<size_t>(n)] = sys.add_unknown(Y.mod_at(n + 1).gens, X.mod_at(n).gens);
  for (long n = 0; n <= xt; ++n) {
    // h respects relations
    Mat relX = X.mod_at(n).rels;
    Mat relY1 = Y.mod_at(n + 1).rels;
    const Mat* my1 = relY1.n > 0 ? &relY1 : nullptr;
    if (relX.n > 0)
      sys.add_eq({{h[static_cast<size_t>(n)], Mat::ident(Y.mod_at(n + 1).gens), relX}},
                 Mat(Y.mod_at(n + 1).gens, relX.n), my1);
    // d h + h d = f - g in degree n
    Mat relY = Y.mod_at(n).rels;
    const Mat* my = relY.n > 0 ? &relY : nullptr;
    std::vector<EqSys::Term> terms;
    terms.push_back({h[static_cast<size_t>(n)], Y.diff_at(n + 1), Mat::ident(X.mod_at(n).gens)});
    if (n >= 1)
      terms.push_back({h[static_cast<size_t>(n - 1)], Mat::ident(Y.mod_at(n).gens), X.diff_at(n)});
    sys.add_eq(std::move(terms), sub(R, g.comp_at(n), f.comp_at(n)), my);
  }
  return sys.solve_sys();
}

bool chain_homotopic(const ChainMap& f, const ChainMap& g) {
  return solve_homotopy(f, g).has_value();
}

// --- degree shift adjunction ----------------------------------------------

SubMod cycles_at(const ChainComplex& y, long k) {
  const Ring& R = y.ring;
  Mat Zb = preimage_span(R, y.diff_at(k), y.mod_at(k - 1).rels);
  PresModule mod(R, Zb.n, preimage_span(R, Zb, y.mod_at(k).rels));
  return {mod, ModMor(mod, y.mod_at(k), Zb)};
}

ChainComplex shift_up_cx(const ChainComplex& x, long k) {
  if (k == 0) return x;
  if (k < 0) throw math_error("shift_up_cx: negative shift");
  const Ring& R = x.ring;
  std::vector<PresModule> mods;
  std::vector<Mat> diffs;
  for (long m = 0; m < k; ++m) {
    mods.push_back(PresModule(R, 0, Mat(0, 0)));
    diffs.push_back(Mat(0, 0));
  }
  for (long n = 0; n <= x.top(); ++n) {
    mods.push_back(x.mod_at(n));
    diffs.push_back(n == 0 ? Mat(0, x.mod_at(0).gens) : x.diff_at(n));
  }
  return make_cx(R, std::move(mods), std::move(diffs));
}

ChainComplex shift_down_cx(const ChainComplex& y, long k) {
  if (k == 0) return y;
  if (k < 0) throw math_error("shift_down_cx: negative shift");
  if (k > y.top()) return zero_cx(y.ring);
  const Ring& R = y.ring;
  SubMod z = cycles_at(y, k);
  std::vector<PresModule> mods = {z.mod};
  std::vector<Mat> diffs = {Mat(0, 0)};
  for (long m = 1; m + k <= y.top(); ++m) {
    mods.push_back(y.mod_at(m + k));
    diffs.push_back(m == 1 ? solve_canonical(R, z.incl.a, y.diff_at(k + 1))
                           : y.diff_at(m + k));
  }
  return make_cx(R, std::move(mods), std::move(diffs));
}

ChainMap shift_up_map(const ChainMap& f, long k) {
  if (k == 0) return f;
  ChainComplex s = shift_up_cx(f.src, k), d = shift_up_cx(f.dst, k);
  std::vector<Mat> comps;
  for (long m = 0; m < k; ++m) comps.push_back(Mat(0, 0));
  for (long n = 0; n <= f.src.top(); ++n) comps.push_back(f.comp_at(n));
  return make_map(std::move(s), std::move(d), std::move(comps));
}

ChainMap shift_down_map(const ChainMap& f, long k) {
  if (k == 0) return f;
  const Ring& R = f.src.ring;
  ChainComplex s = shift_down_cx(f.src, k), d = shift_down_cx(f.dst, k);
  std::vector<Mat> comps;
  for (long m = 0; m <= s.top(); ++m) {
    if (m == 0) {
      Mat Zs = k <= f.src.top() ? cycles_at(f.src, k).incl.a : Mat(f.src.mod_at(k).gens, 0);
      Mat Zd = cycles_at(f.dst, k).incl.a;
      comps.push_back(solve_canonical(R, Zd, mul(R, f.comp_at(k), Zs)));
    } else {
      comps.push_back(f.comp_at(m + k));
    }
  }
  return make_map(std::move(s), std::move(d), std::move(comps));
}

ChainMap shift_unit(const ChainComplex& x, long k) {
  ChainComplex rt = shift_down_cx(shift_up_cx(x, k), k);
  if (!(rt == x)) throw math_error("shift_unit: round trip is not the identity");
  return id_map(x);
}

ChainMap shift_counit(const ChainComplex& y, long k) {
  if (k == 0) return id_map(y);
  ChainComplex s = shift_up_cx(shift_down_cx(y, k), k);
  std::vector<Mat> comps;
  for (long m = 0; m < k && m <= s.top(); ++m) comps.push_back(Mat(y.mod_at(m).gens, 0));
  if (k <= y.top()) {
    comps.push_back(cycles_at(y, k).incl.a);
    for (long m = 1; m + k <= y.top(); ++m) comps.push_back(Mat::ident(y.mod_at(m + k).gens));
  }
  return make_map(std::move(s), y, std::move(comps));
}

}  // namespace twk
