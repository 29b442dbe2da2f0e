#include "twk/module.hpp"

#include "twk/eqsys.hpp"

namespace twk {

PresModule::PresModule(Ring R, long g, Mat r) : ring(R), gens(g), rels(std::move(r)) {
  if (rels.m != gens) throw math_error("PresModule: relation matrix has wrong height");
  // store the canonical column basis of the relation span, so == on modules
  // means equality of presented quotients, not accident of presentation
  rels = col_basis(ring, rels);
}

PresModule PresModule::free_mod(const Ring& R, long g) {
  return PresModule(R, g, Mat(g, 0));
}

ModMor::ModMor(PresModule s, PresModule d, Mat m)
    : src(std::move(s)), dst(std::move(d)), a(std::move(m)) {
  if (a.m != dst.gens || a.n != src.gens)
    throw math_error("ModMor: matrix shape does not match src/dst generators");
  if (src.ring.tag != dst.ring.tag || src.ring.p != dst.ring.p)
    throw math_error("ModMor: mixed rings");
}

// --- elements -------------------------------------------------------------

Mat reduce_elem(const PresModule& m, Mat x) {
  if (x.m != m.gens) throw math_error("reduce_elem: element has wrong height");
  const Ring& R = m.ring;
  Mat B = col_basis(R, m.rels);
  // B is in column-echelon form: pivot rows strictly increase left to right,
  // so reducing at each pivot in order never disturbs an earlier pivot row.
  for (long j = 0; j < B.n; ++j) {
    long pr = -1;
    for (long i = 0; i < B.m; ++i)
      if (B.at(i, j) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    for (long c = 0; c < x.n; ++c) {
      Q coeff;
      if (R.tag == Rg::Z) {
        Zint q;
        mpz_fdiv_q(q.get_mpz_t(), x.at(pr, c).get_num().get_mpz_t(),
                   B.at(pr, j).get_num().get_mpz_t());
        coeff = Q(q);
      } else {
        coeff = R.norm(x.at(pr, c) / B.at(pr, j));
      }
      if (coeff != 0)
        for (long i = 0; i < x.m; ++i)
          x.at(i, c) = R.sub(x.at(i, c), R.mul(coeff, B.at(i, j)));
    }
  }
  for (auto& v : x.a) v = R.norm(v);
  return x;
}

bool elem_eq(const PresModule& m, const Mat& x, const Mat& y) {
  return in_span(m.ring, m.rels, sub(m.ring, x, y));
}

// --- morphisms ------------------------------------------------------------

bool well_defined(const ModMor& f) {
  if (f.src.rels.n == 0) return true;
  return in_span(f.dst.ring, f.dst.rels, mul(f.dst.ring, f.a, f.src.rels));
}

bool mor_eq(const ModMor& f, const ModMor& g) {
  if (!(f.src == g.src) || !(f.dst == g.dst)) return false;
  return in_span(f.dst.ring, f.dst.rels, sub(f.dst.ring, f.a, g.a));
}

bool is_zero_mor(const ModMor& f) {
  return in_span(f.dst.ring, f.dst.rels, f.a);
}

ModMor id_mor(const PresModule& m) { return ModMor(m, m, Mat::ident(m.gens)); }

ModMor zero_mor(const PresModule& src, const PresModule& dst) {
  return ModMor(src, dst, Mat(dst.gens, src.gens));
}

ModMor compose(const ModMor& g, const ModMor& f) {
  if (!(g.src == f.dst)) throw math_error("compose: middle modules differ");
  return ModMor(f.src, g.dst, mul(f.src.ring, g.a, f.a));
}

// --- structure ------------------------------------------------------------

ModShape invariants(const PresModule& m) {
  ModShape s;
  if (m.ring.is_field()) {
    Mat W = m.rels;
    long r = rref(m.ring, W, nullptr);
    s.free_rank = m.gens - r;
    return s;
  }
  Snf f = snf(m.rels);
  auto d = f.diag();
  s.free_rank = m.gens - static_cast<long>(d.size());
  for (const Zint& v : d)
    if (v != 1) s.torsion.push_back(v);
  return s;
}

bool is_trivial(const PresModule& m) {
  if (m.gens == 0) return true;
  return in_span(m.ring, m.rels, Mat::ident(m.gens));
}

bool is_free_pres(const PresModule& m) { return invariants(m).torsion.empty(); }

SubMod kernel_mor(const ModMor& f) {
  const Ring& R = f.src.ring;
  // generators of {x : a x lands in the relation span of dst}
  Mat K = preimage_span(R, f.a, f.dst.rels);
  // relations among those generators: combinations falling into rels_src
  Mat kr = preimage_span(R, K, f.src.rels);
  PresModule ker(R, K.n, kr);
  return {ker, ModMor(ker, f.src, K)};
}

QuotMod cokernel_mor(const ModMor& f) {
  const Ring& R = f.dst.ring;
  PresModule coker(R, f.dst.gens, hcat(f.a, f.dst.rels));
  return {coker, ModMor(f.dst, coker, Mat::ident(f.dst.gens))};
}

bool is_injective(const ModMor& f) {
  // the preimage of the dst relation span must already lie in the src span
  Mat P = preimage_span(f.src.ring, f.a, f.dst.rels);
  return in_span(f.src.ring, f.src.rels, P);
}

bool is_surjective(const ModMor& f) {
  return is_trivial(PresModule(f.dst.ring, f.dst.gens, hcat(f.a, f.dst.rels)));
}

bool is_iso_mor(const ModMor& f) { return is_injective(f) && is_surjective(f); }

std::optional<ModMor> inverse_mor(const ModMor& f) {
  const Ring& R = f.src.ring;
  EqSys sys(R);
  int g = sys.add_unknown(f.src.gens, f.dst.gens);
  long sg = f.src.gens, dg = f.dst.gens;
  const Mat* msrc = f.src.rels.n > 0 ? &f.src.rels : nullptr;
  const Mat* mdst = f.dst.rels.n > 0 ? &f.dst.rels : nullptr;
  // G a = id_src, a G = id_dst, and G respects the dst relations
  sys.add_eq({{g, Mat::ident(sg), f.a}}, neg(R, Mat::ident(sg)), msrc);
  sys.add_eq({{g, f.a, Mat::ident(dg)}}, neg(R, Mat::ident(dg)), mdst);
  if (f.dst.rels.n > 0)
    sys.add_eq({{g, Mat::ident(sg), f.dst.rels}}, Mat(sg, f.dst.rels.n), msrc);
  auto sol = sys.solve_sys();
  if (!sol) return std::nullopt;
  return ModMor(f.dst, f.src, (*sol)[0]);
}

PresModule dsum(const PresModule& a, const PresModule& b) {
  if (a.ring.tag != b.ring.tag || a.ring.p != b.ring.p)
    throw math_error("dsum: mixed rings");
  return PresModule(a.ring, a.gens + b.gens, block_diag(a.rels, b.rels));
}

}  // namespace twk
