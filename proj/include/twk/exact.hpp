#pragma once
// Exact scalar arithmetic and linear algebra over Q, F_p and Z.
// Everything downstream (modules, chain complexes, homology) reduces to the
// solvers in this header; there is no floating point anywhere in the project.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twk {

using Q = mpq_class;
using Zint = mpz_class;

struct math_error : std::runtime_error {
  explicit math_error(const std::string& w) : std::runtime_error(w) {}
};

// ---------------------------------------------------------------------------
// Ring context.  All scalars are carried as mpq_class; the context says how to
// interpret them: plain rationals, residues mod p (stored reduced in [0,p)),
// or integers (denominator always 1).
// ---------------------------------------------------------------------------
enum class Rg { Q, Fp, Z };

struct Ring {
  Rg tag = Rg::Q;
  long p = 0;  // modulus, only for Fp

  bool is_field() const { return tag != Rg::Z; }
  bool operator==(const Ring&) const = default;

  Q norm(const Q& x) const;              // canonical representative
  Q add(const Q& a, const Q& b) const;
  Q sub(const Q& a, const Q& b) const;
  Q mul(const Q& a, const Q& b) const;
  Q neg(const Q& a) const;
  Q inv(const Q& a) const;               // field inverse; throws over Z unless unit
  bool is_unit(const Q& a) const;
  std::string show(const Q& a) const;    // "p/q" or integer text
};

Ring ring_q();
Ring ring_fp(long p);
Ring ring_z();

// ---------------------------------------------------------------------------
// Dense matrices, row-major.
// ---------------------------------------------------------------------------
struct Mat {
  long m = 0, n = 0;
  std::vector<Q> a;

  Mat() = default;
  Mat(long rows, long cols) : m(rows), n(cols), a(static_cast<size_t>(rows * cols), Q(0)) {}

  static Mat ident(long k);
  static Mat zero(long rows, long cols) { return Mat(rows, cols); }

  Q& at(long i, long j) { return a[static_cast<size_t>(i * n + j)]; }
  const Q& at(long i, long j) const { return a[static_cast<size_t>(i * n + j)]; }

  Mat col(long j) const;
  bool operator==(const Mat&) const = default;
};

Mat mul(const Ring& R, const Mat& A, const Mat& B);
Mat add(const Ring& R, const Mat& A, const Mat& B);
Mat sub(const Ring& R, const Mat& A, const Mat& B);
Mat neg(const Ring& R, const Mat& A);
Mat scale(const Ring& R, const Q& c, const Mat& A);
Mat transpose(const Mat& A);
Mat hcat(const Mat& A, const Mat& B);
Mat vcat(const Mat& A, const Mat& B);
Mat block_diag(const Mat& A, const Mat& B);
Mat kron(const Ring& R, const Mat& A, const Mat& B);  // Kronecker product
bool is_zero(const Mat& A);
bool is_ident(const Mat& A);
std::string show(const Ring& R, const Mat& A);

// vec(A) stacks columns; vec(A·X·B) = (Bᵀ ⊗ A)·vec(X) is used to flatten
// matrix equations into ordinary linear systems.
Mat vec(const Mat& A);
Mat unvec(const Mat& v, long rows, long cols);

// ---------------------------------------------------------------------------
// Field elimination (Q, F_p).
// ---------------------------------------------------------------------------
// Reduced row echelon form in place; returns rank, records pivot columns.
long rref(const Ring& R, Mat& A, std::vector<long>* pivot_cols = nullptr);

// ---------------------------------------------------------------------------
// Integer forms (Z).
// ---------------------------------------------------------------------------
// Row-style Hermite normal form: H = U·A with U unimodular; H is the canonical
// echelon basis of the row lattice (pivots positive, entries above reduced).
Mat hnf_rows(const Mat& A);

// Smith normal form S = L·A·R with L, R unimodular, S diagonal with
// s_1 | s_2 | ... (nonnegative).  Deterministic pivot choice.
struct Snf {
  Mat S, L, R;
  std::vector<Zint> diag() const;  // nonzero invariant factors
};
Snf snf(const Mat& A);

// ---------------------------------------------------------------------------
// Unified solvers.  "span" means column space over a field / column lattice
// over Z.  All outputs are canonical so that equal inputs give equal bytes.
// ---------------------------------------------------------------------------
// Solve A·X = B exactly; nullopt if unsolvable over the ring.
std::optional<Mat> solve(const Ring& R, const Mat& A, const Mat& B);

// Canonical solution: over a field, free coordinates are zero (rref-based);
// over Z, the particular solution is reduced modulo the HNF kernel basis.
// solve_canonical throws math_error if unsolvable; the _opt variant doesn't.
Mat solve_canonical(const Ring& R, const Mat& A, const Mat& B);
std::optional<Mat> solve_canonical_opt(const Ring& R, const Mat& A, const Mat& B);

// Columns generate {x : A·x = 0}: a basis (field) or lattice basis (Z).
Mat kernel(const Ring& R, const Mat& A);

// Canonical basis of the span of the columns.
Mat col_basis(const Ring& R, const Mat& A);

// Is every column of B inside span(cols of A)?
bool in_span(const Ring& R, const Mat& A, const Mat& B);

// Generators of {x : A·x ∈ span(S)} — the preimage of a span.
Mat preimage_span(const Ring& R, const Mat& A, const Mat& S);

}  // namespace twk
