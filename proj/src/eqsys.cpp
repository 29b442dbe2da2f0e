#include "twk/eqsys.hpp"

namespace twk {

int EqSys::add_unknown(long rows, long cols) {
  shapes_.push_back({rows, cols, false});
  return static_cast<int>(shapes_.size()) - 1;
}

void EqSys::add_eq(std::vector<Term> terms, Mat C, const Mat* modulo_span) {
  if (C.m * C.n == 0 && terms.empty()) return;
  for (const Term& t : terms) {
    const Shape& s = shapes_[static_cast<size_t>(t.id)];
    if (t.L.n != s.m || t.R.m != s.n || t.L.m != C.m || t.R.n != C.n)
      throw math_error("EqSys: term shape mismatch");
  }
  if (modulo_span && modulo_span->n > 0) {
    if (modulo_span->m != C.m) throw math_error("EqSys: span shape mismatch");
    shapes_.push_back({modulo_span->n, C.n, true});
    int w = static_cast<int>(shapes_.size()) - 1;
    terms.push_back({w, *modulo_span, Mat::ident(C.n)});
  }
  eqs_.push_back({std::move(terms), std::move(C)});
}

Mat EqSys::assemble(Mat* rhs) const {
  long width = 0;
  std::vector<long> off(shapes_.size());
  for (size_t i = 0; i < shapes_.size(); ++i) {
    off[i] = width;
    width += shapes_[i].m * shapes_[i].n;
  }
  long height = 0;
  for (const Eq& e : eqs_) height += e.C.m * e.C.n;
  Mat M(height, width);
  if (rhs) *rhs = Mat(height, 1);
  long row = 0;
  for (const Eq& e : eqs_) {
    long block = e.C.m * e.C.n;
    for (const Term& t : e.terms) {
      Mat K = kron(ring_, transpose(t.R), t.L);
      long o = off[static_cast<size_t>(t.id)];
      for (long i = 0; i < K.m; ++i)
        for (long j = 0; j < K.n; ++j)
          M.at(row + i, o + j) = ring_.add(M.at(row + i, o + j), K.at(i, j));
    }
    if (rhs) {
      Mat v = vec(e.C);
      for (long i = 0; i < block; ++i) rhs->at(row + i, 0) = ring_.neg(v.at(i, 0));
    }
    row += block;
  }
  return M;
}

std::vector<Mat> EqSys::split(const Mat& u) const {
  std::vector<Mat> out;
  long o = 0;
  for (const Shape& s : shapes_) {
    if (!s.slack) out.push_back(unvec([&] {
      Mat v(s.m * s.n, 1);
      for (long i = 0; i < s.m * s.n; ++i) v.at(i, 0) = u.at(o + i, 0);
      return v;
    }(), s.m, s.n));
    o += s.m * s.n;
  }
  return out;
}

std::optional<std::vector<Mat>> EqSys::solve_sys() {
  Mat rhs;
  Mat M = assemble(&rhs);
  // canonical particular solution: deterministic across runs and platforms
  auto u = solve_canonical_opt(ring_, M, rhs);
  if (!u) return std::nullopt;
  return split(*u);
}

std::vector<std::vector<Mat>> EqSys::kernel_gens() {
  Mat M = assemble(nullptr);
  Mat K = kernel(ring_, M);
  std::vector<std::vector<Mat>> out;
  for (long j = 0; j < K.n; ++j) {
    std::vector<Mat> g = split(K.col(j));
    bool nonzero = false;
    for (const Mat& x : g)
      if (!is_zero(x)) nonzero = true;
    if (nonzero) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace twk
