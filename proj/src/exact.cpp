#include "twk/exact.hpp"

#include <algorithm>
#include <sstream>

namespace twk {

// ---------------------------------------------------------------------------
// Ring
// ---------------------------------------------------------------------------
Ring ring_q() { return Ring{Rg::Q, 0}; }
Ring ring_fp(long p) {
  if (p < 2) throw math_error("F_p modulus must be >= 2");
  return Ring{Rg::Fp, p};
}
Ring ring_z() { return Ring{Rg::Z, 0}; }

static Zint qnum(const Q& x) { return x.get_num(); }

Q Ring::norm(const Q& x) const {
  switch (tag) {
    case Rg::Q:
      return x;
    case Rg::Fp: {
      if (x.get_den() != 1) throw math_error("F_p scalar with denominator");
      Zint r = qnum(x) % p;
      if (r < 0) r += p;
      return Q(r);
    }
    case Rg::Z:
      if (x.get_den() != 1) throw math_error("Z scalar with denominator");
      return x;
  }
  return x;
}

Q Ring::add(const Q& a, const Q& b) const { return norm(Q(a + b)); }
Q Ring::sub(const Q& a, const Q& b) const { return norm(Q(a - b)); }
Q Ring::mul(const Q& a, const Q& b) const { return norm(Q(a * b)); }
Q Ring::neg(const Q& a) const { return norm(Q(-a)); }

bool Ring::is_unit(const Q& a) const {
  switch (tag) {
    case Rg::Q:
      return a != 0;
    case Rg::Fp:
      return norm(a) != 0;
    case Rg::Z:
      return a == 1 || a == -1;
  }
  return false;
}

Q Ring::inv(const Q& a) const {
  switch (tag) {
    case Rg::Q:
      if (a == 0) throw math_error("division by zero");
      return Q(1) / a;
    case Rg::Fp: {
      Zint v = qnum(norm(a));
      if (v == 0) throw math_error("division by zero mod p");
      Zint r;
      if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), Zint(p).get_mpz_t()) == 0)
        throw math_error("non-invertible residue");
      return Q(r);
    }
    case Rg::Z:
      if (a == 1) return Q(1);
      if (a == -1) return Q(-1);
      throw math_error("non-unit integer has no inverse");
  }
  throw math_error("unreachable");
}

std::string Ring::show(const Q& a) const { return a.get_str(); }

// ---------------------------------------------------------------------------
// Mat basics
// ---------------------------------------------------------------------------
Mat Mat::ident(long k) {
  Mat r(k, k);
  for (long i = 0; i < k; ++i) r.at(i, i) = 1;
  return r;
}

Mat Mat::col(long j) const {
  Mat r(m, 1);
  for (long i = 0; i < m; ++i) r.at(i, 0) = at(i, j);
  return r;
}

Mat mul(const Ring& R, const Mat& A, const Mat& B) {
  if (A.n != B.m) throw math_error("mul: shape mismatch");
  Mat C(A.m, B.n);
  for (long i = 0; i < A.m; ++i)
    for (long k = 0; k < A.n; ++k) {
      const Q& aik = A.at(i, k);
      if (aik == 0) continue;
      for (long j = 0; j < B.n; ++j)
        if (B.at(k, j) != 0) C.at(i, j) += aik * B.at(k, j);
    }
  for (auto& x : C.a) x = R.norm(x);
  return C;
}

Mat add(const Ring& R, const Mat& A, const Mat& B) {
  if (A.m != B.m || A.n != B.n) throw math_error("add: shape mismatch");
  Mat C(A.m, A.n);
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = R.add(A.a[i], B.a[i]);
  return C;
}

Mat sub(const Ring& R, const Mat& A, const Mat& B) {
  if (A.m != B.m || A.n != B.n) throw math_error("sub: shape mismatch");
  Mat C(A.m, A.n);
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = R.sub(A.a[i], B.a[i]);
  return C;
}

Mat neg(const Ring& R, const Mat& A) {
  Mat C(A.m, A.n);
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = R.neg(A.a[i]);
  return C;
}

Mat scale(const Ring& R, const Q& c, const Mat& A) {
  Mat C(A.m, A.n);
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = R.mul(c, A.a[i]);
  return C;
}

Mat transpose(const Mat& A) {
  Mat C(A.n, A.m);
  for (long i = 0; i < A.m; ++i)
    for (long j = 0; j < A.n; ++j) C.at(j, i) = A.at(i, j);
  return C;
}

Mat hcat(const Mat& A, const Mat& B) {
  if (A.m != B.m) throw math_error("hcat: row mismatch");
  Mat C(A.m, A.n + B.n);
  for (long i = 0; i < A.m; ++i) {
    for (long j = 0; j < A.n; ++j) C.at(i, j) = A.at(i, j);
    for (long j = 0; j < B.n; ++j) C.at(i, A.n + j) = B.at(i, j);
  }
  return C;
}

Mat vcat(const Mat& A, const Mat& B) {
  if (A.n != B.n) throw math_error("vcat: col mismatch");
  Mat C(A.m + B.m, A.n);
  for (long i = 0; i < A.m; ++i)
    for (long j = 0; j < A.n; ++j) C.at(i, j) = A.at(i, j);
  for (long i = 0; i < B.m; ++i)
    for (long j = 0; j < B.n; ++j) C.at(A.m + i, j) = B.at(i, j);
  return C;
}

Mat block_diag(const Mat& A, const Mat& B) {
  Mat C(A.m + B.m, A.n + B.n);
  for (long i = 0; i < A.m; ++i)
    for (long j = 0; j < A.n; ++j) C.at(i, j) = A.at(i, j);
  for (long i = 0; i < B.m; ++i)
    for (long j = 0; j < B.n; ++j) C.at(A.m + i, A.n + j) = B.at(i, j);
  return C;
}

Mat kron(const Ring& R, const Mat& A, const Mat& B) {
  Mat C(A.m * B.m, A.n * B.n);
  for (long i = 0; i < A.m; ++i)
    for (long j = 0; j < A.n; ++j) {
      if (A.at(i, j) == 0) continue;
      for (long k = 0; k < B.m; ++k)
        for (long l = 0; l < B.n; ++l)
          C.at(i * B.m + k, j * B.n + l) = R.mul(A.at(i, j), B.at(k, l));
    }
  return C;
}

bool is_zero(const Mat& A) {
  return std::all_of(A.a.begin(), A.a.end(), [](const Q& x) { return x == 0; });
}

bool is_ident(const Mat& A) {
  if (A.m != A.n) return false;
  for (long i = 0; i < A.m; ++i)
    for (long j = 0; j < A.n; ++j)
      if (A.at(i, j) != ((i == j) ? 1 : 0)) return false;
  return true;
}

std::string show(const Ring& R, const Mat& A) {
  std::ostringstream os;
  os << "[" << A.m << "x" << A.n << ":";
  for (long i = 0; i < A.m; ++i) {
    if (i) os << ";";
    for (long j = 0; j < A.n; ++j) os << " " << R.show(A.at(i, j));
  }
  os << "]";
  return os.str();
}

Mat vec(const Mat& A) {
  Mat v(A.m * A.n, 1);
  for (long j = 0; j < A.n; ++j)
    for (long i = 0; i < A.m; ++i) v.at(j * A.m + i, 0) = A.at(i, j);
  return v;
}

Mat unvec(const Mat& v, long rows, long cols) {
  if (v.m != rows * cols || v.n != 1) throw math_error("unvec: shape mismatch");
  Mat A(rows, cols);
  for (long j = 0; j < cols; ++j)
    for (long i = 0; i < rows; ++i) A.at(i, j) = v.at(j * rows + i, 0);
  return A;
}

// ---------------------------------------------------------------------------
// Field elimination
// ---------------------------------------------------------------------------
long rref(const Ring& R, Mat& A, std::vector<long>* pivot_cols) {
  if (!R.is_field()) throw math_error("rref needs a field");
  long rank = 0;
  if (pivot_cols) pivot_cols->clear();
  for (long c = 0; c < A.n && rank < A.m; ++c) {
    long piv = -1;
    for (long i = rank; i < A.m; ++i)
      if (R.norm(A.at(i, c)) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (long j = 0; j < A.n; ++j) std::swap(A.at(piv, j), A.at(rank, j));
    Q inv = R.inv(A.at(rank, c));
    for (long j = 0; j < A.n; ++j) A.at(rank, j) = R.mul(inv, A.at(rank, j));
    for (long i = 0; i < A.m; ++i) {
      if (i == rank) continue;
      Q f = R.norm(A.at(i, c));
      if (f == 0) continue;
      for (long j = 0; j < A.n; ++j)
        A.at(i, j) = R.sub(A.at(i, j), R.mul(f, A.at(rank, j)));
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Integer forms
// ---------------------------------------------------------------------------
static void check_integral(const Mat& A) {
  for (const Q& x : A.a)
    if (x.get_den() != 1) throw math_error("integer routine fed a non-integer");
}

Mat hnf_rows(const Mat& A0) {
  check_integral(A0);
  Mat A = A0;
  long r = 0;
  for (long c = 0; c < A.n && r < A.m; ++c) {
    // Euclid on the entries of column c, rows >= r.
    for (;;) {
      long piv = -1;
      Zint best;
      for (long i = r; i < A.m; ++i) {
        Zint v = abs(A.at(i, c).get_num());
        if (v != 0 && (piv < 0 || v < best)) {
          piv = i;
          best = v;
        }
      }
      if (piv < 0) break;
      if (piv != r)
        for (long j = 0; j < A.n; ++j) std::swap(A.at(piv, j), A.at(r, j));
      bool clean = true;
      for (long i = r + 1; i < A.m; ++i) {
        if (A.at(i, c) == 0) continue;
        Zint q;
        mpz_fdiv_q(q.get_mpz_t(), A.at(i, c).get_num().get_mpz_t(),
                   A.at(r, c).get_num().get_mpz_t());
        if (q != 0)
          for (long j = 0; j < A.n; ++j) A.at(i, j) -= Q(q) * A.at(r, j);
        if (A.at(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (A.at(r, c) == 0) continue;
    if (A.at(r, c) < 0)
      for (long j = 0; j < A.n; ++j) A.at(r, j) = -A.at(r, j);
    for (long i = 0; i < r; ++i) {  // reduce entries above into [0, pivot)
      Zint q;
      mpz_fdiv_q(q.get_mpz_t(), A.at(i, c).get_num().get_mpz_t(),
                 A.at(r, c).get_num().get_mpz_t());
      if (q != 0)
        for (long j = 0; j < A.n; ++j) A.at(i, j) -= Q(q) * A.at(r, j);
    }
    ++r;
  }
  A.m = r;  // drop zero rows
  A.a.resize(static_cast<size_t>(r * A.n));
  return A;
}

std::vector<Zint> Snf::diag() const {
  std::vector<Zint> d;
  for (long i = 0; i < std::min(S.m, S.n); ++i)
    if (S.at(i, i) != 0) d.push_back(S.at(i, i).get_num());
  return d;
}

Snf snf(const Mat& A0) {
  check_integral(A0);
  Snf out;
  out.S = A0;
  out.L = Mat::ident(A0.m);
  out.R = Mat::ident(A0.n);
  Mat& S = out.S;
  Mat& L = out.L;
  Mat& R = out.R;

  auto row_sub = [&](long dst, long src, const Zint& q) {
    for (long j = 0; j < S.n; ++j) S.at(dst, j) -= Q(q) * S.at(src, j);
    for (long j = 0; j < L.n; ++j) L.at(dst, j) -= Q(q) * L.at(src, j);
  };
  auto col_sub = [&](long dst, long src, const Zint& q) {
    for (long i = 0; i < S.m; ++i) S.at(i, dst) -= Q(q) * S.at(i, src);
    for (long i = 0; i < R.m; ++i) R.at(i, dst) -= Q(q) * R.at(i, src);
  };
  auto row_swap = [&](long a, long b) {
    if (a == b) return;
    for (long j = 0; j < S.n; ++j) std::swap(S.at(a, j), S.at(b, j));
    for (long j = 0; j < L.n; ++j) std::swap(L.at(a, j), L.at(b, j));
  };
  auto col_swap = [&](long a, long b) {
    if (a == b) return;
    for (long i = 0; i < S.m; ++i) std::swap(S.at(i, a), S.at(i, b));
    for (long i = 0; i < R.m; ++i) std::swap(R.at(i, a), R.at(i, b));
  };
  auto row_negate = [&](long r) {
    for (long j = 0; j < S.n; ++j) S.at(r, j) = -S.at(r, j);
    for (long j = 0; j < L.n; ++j) L.at(r, j) = -L.at(r, j);
  };

  long t = 0;
  const long lim = std::min(S.m, S.n);
  while (t < lim) {
    // pick the entry of minimal absolute value in the remaining block
    long pi = -1, pj = -1;
    Zint best;
    for (long i = t; i < S.m; ++i)
      for (long j = t; j < S.n; ++j) {
        Zint v = abs(S.at(i, j).get_num());
        if (v != 0 && (pi < 0 || v < best)) {
          pi = i;
          pj = j;
          best = v;
        }
      }
    if (pi < 0) break;  // remaining block zero
    row_swap(t, pi);
    col_swap(t, pj);

    bool dirty = false;
    for (long i = t + 1; i < S.m; ++i) {
      if (S.at(i, t) == 0) continue;
      Zint q;
      mpz_tdiv_q(q.get_mpz_t(), S.at(i, t).get_num().get_mpz_t(),
                 S.at(t, t).get_num().get_mpz_t());
      row_sub(i, t, q);
      if (S.at(i, t) != 0) dirty = true;
    }
    for (long j = t + 1; j < S.n; ++j) {
      if (S.at(t, j) == 0) continue;
      Zint q;
      mpz_tdiv_q(q.get_mpz_t(), S.at(t, j).get_num().get_mpz_t(),
                 S.at(t, t).get_num().get_mpz_t());
      col_sub(j, t, q);
      if (S.at(t, j) != 0) dirty = true;
    }
    if (dirty) continue;  // smaller remainders appeared; re-pick pivot

    // pivot row/col clear; enforce divisibility s_t | everything below-right
    bool fixed = true;
    for (long i = t + 1; i < S.m && fixed; ++i)
      for (long j = t + 1; j < S.n && fixed; ++j) {
        if (S.at(i, j) == 0) continue;
        Zint rem;
        mpz_tdiv_r(rem.get_mpz_t(), S.at(i, j).get_num().get_mpz_t(),
                   S.at(t, t).get_num().get_mpz_t());
        if (rem != 0) {
          row_sub(t, i, Zint(-1));  // fold row i into pivot row, redo
          fixed = false;
        }
      }
    if (!fixed) continue;
    if (S.at(t, t) < 0) row_negate(t);
    ++t;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Unified solvers
// ---------------------------------------------------------------------------
static std::optional<Mat> solve_field(const Ring& R, const Mat& A, const Mat& B) {
  Mat W = hcat(A, B);
  std::vector<long> piv;
  rref(R, W, &piv);
  // inconsistent iff some pivot falls in the B block
  for (long c : piv)
    if (c >= A.n) return std::nullopt;
  Mat X(A.n, B.n);
  for (size_t k = 0; k < piv.size(); ++k)
    for (long j = 0; j < B.n; ++j)
      X.at(piv[k], j) = W.at(static_cast<long>(k), A.n + j);
  return X;  // free coordinates zero: canonical
}

static std::optional<Mat> solve_z(const Ring& R, const Mat& A, const Mat& B) {
  check_integral(A);
  check_integral(B);
  Snf f = snf(A);
  Mat Lb = mul(R, f.L, B);
  long lim = std::min(A.m, A.n);
  Mat Y(A.n, B.n);
  for (long j = 0; j < B.n; ++j) {
    for (long i = 0; i < A.m; ++i) {
      Q rhs = Lb.at(i, j);
      if (i < lim && f.S.at(i, i) != 0) {
        Zint q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rhs.get_num().get_mpz_t(),
                    f.S.at(i, i).get_num().get_mpz_t());
        if (r != 0) return std::nullopt;
        Y.at(i, j) = Q(q);
      } else if (rhs != 0) {
        return std::nullopt;
      }
    }
  }
  return mul(R, f.R, Y);
}

std::optional<Mat> solve(const Ring& R, const Mat& A, const Mat& B) {
  if (A.m != B.m) throw math_error("solve: shape mismatch");
  return R.is_field() ? solve_field(R, A, B) : solve_z(R, A, B);
}

Mat kernel(const Ring& R, const Mat& A) {
  if (R.is_field()) {
    Mat W = A;
    std::vector<long> piv;
    rref(R, W, &piv);
    std::vector<bool> is_piv(static_cast<size_t>(A.n), false);
    for (long c : piv) is_piv[static_cast<size_t>(c)] = true;
    std::vector<long> free_cols;
    for (long c = 0; c < A.n; ++c)
      if (!is_piv[static_cast<size_t>(c)]) free_cols.push_back(c);
    Mat K(A.n, static_cast<long>(free_cols.size()));
    for (size_t fc = 0; fc < free_cols.size(); ++fc) {
      K.at(free_cols[fc], static_cast<long>(fc)) = 1;
      for (size_t r = 0; r < piv.size(); ++r)
        K.at(piv[r], static_cast<long>(fc)) =
            R.neg(W.at(static_cast<long>(r), free_cols[fc]));
    }
    return K;
  }
  Snf f = snf(A);
  long lim = std::min(A.m, A.n);
  std::vector<long> zero_cols;
  for (long i = 0; i < lim; ++i)
    if (f.S.at(i, i) == 0) zero_cols.push_back(i);
  for (long i = lim; i < A.n; ++i) zero_cols.push_back(i);
  Mat K(A.n, static_cast<long>(zero_cols.size()));
  for (size_t k = 0; k < zero_cols.size(); ++k)
    for (long i = 0; i < A.n; ++i) K.at(i, static_cast<long>(k)) = f.R.at(i, zero_cols[k]);
  // canonicalize the lattice basis
  return col_basis(R, K);
}

Mat col_basis(const Ring& R, const Mat& A) {
  if (R.is_field()) {
    Mat W = transpose(A);
    long rank = rref(R, W, nullptr);
    W.m = rank;
    W.a.resize(static_cast<size_t>(rank * W.n));
    return transpose(W);
  }
  return transpose(hnf_rows(transpose(A)));
}

bool in_span(const Ring& R, const Mat& A, const Mat& B) {
  return solve(R, A, B).has_value();
}

Mat preimage_span(const Ring& R, const Mat& A, const Mat& S) {
  // {x : A x ∈ span(S)} = projection of ker[A | -S] onto the x block.
  // Always col_basis the result so equal sublattices get byte-equal bases
  // no matter which route computed them.
  if (S.n == 0) return col_basis(R, kernel(R, A));
  Mat K = kernel(R, hcat(A, neg(R, S)));
  Mat P(A.n, K.n);
  for (long i = 0; i < A.n; ++i)
    for (long j = 0; j < K.n; ++j) P.at(i, j) = K.at(i, j);
  return col_basis(R, P);
}

Mat solve_canonical(const Ring& R, const Mat& A, const Mat& B) {
  auto X = solve_canonical_opt(R, A, B);
  if (!X) throw math_error("solve_canonical: system unsolvable");
  return *X;
}

std::optional<Mat> solve_canonical_opt(const Ring& R, const Mat& A, const Mat& B) {
  auto X = solve(R, A, B);
  if (!X) return std::nullopt;
  if (R.is_field()) return *X;  // rref particular solution is canonical
  Mat K = kernel(R, A);
  if (K.n == 0) return *X;
  // pivot row of each HNF basis column = first nonzero entry
  std::vector<long> pivot_row(static_cast<size_t>(K.n), -1);
  for (long j = 0; j < K.n; ++j)
    for (long i = 0; i < K.m; ++i)
      if (K.at(i, j) != 0) {
        pivot_row[static_cast<size_t>(j)] = i;
        break;
      }
  Mat Xc = *X;
  for (long col = 0; col < Xc.n; ++col)
    for (long j = 0; j < K.n; ++j) {
      long pr = pivot_row[static_cast<size_t>(j)];
      if (pr < 0) continue;
      Zint q;
      mpz_fdiv_q(q.get_mpz_t(), Xc.at(pr, col).get_num().get_mpz_t(),
                 K.at(pr, j).get_num().get_mpz_t());
      if (q != 0)
        for (long i = 0; i < Xc.m; ++i) Xc.at(i, col) -= Q(q) * K.at(i, j);
    }
  return Xc;
}

}  // namespace twk
