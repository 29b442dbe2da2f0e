#pragma once
// Model structures on twisted diagrams with pointwise weak equivalences:
// latching and matching objects with their canonical comparison maps, the
// corner-map classifiers, degreewise inductive factorization and lifting
// over a locally direct index, free generator sets with right-lifting-
// property deciders, and a seeded axiom check.
//
// Latching and matching work over any fiber kind; everything that needs
// fiber-level verdicts (classify, factor, lift, generators, axioms)
// requires chain fibers, the one kind that carries model data.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twk/kan.hpp"
#include "twk/twisted.hpp"

namespace twk {

// colimit of F_sigma(Y_j) over the non-identity arrows sigma : j -> i, with
// the canonical map into Y_i assembled from the sharp structure maps
struct LatchingCert {
  CObj obj;          // the latching object at i
  CMor to_fiber;     // latching object -> Y_i
  ColimitCert cert;  // over the strict comma shape at i
  CommaCat shape;    // (j, sigma) bookkeeping behind the legs
};
// dual: limit of U_sigma(Y_j) over sigma : i -> j, receiving Y_i through
// the flat structure maps
struct MatchingCert {
  CObj obj;
  CMor from_fiber;   // Y_i -> matching object
  LimitCert cert;
  CommaCat shape;
};

LatchingCert latching(const TwDiagram& y, const Obj& i);
MatchingCert matching(const TwDiagram& y, const Obj& i);

// one corner of a classified map f : Y -> Z: the pushout of Y_i and the
// latching object of Z under the latching object of Y, with its induced map
// to Z_i (c side), or the pullback of Z_i and the matching object of Y over
// the matching object of Z, with its induced map from Y_i (f side)
struct CornerMap {
  CObj obj;
  CMor induced;    // c: corner -> Z_i ; f: Y_i -> corner
  CMor canonical;  // c: Y_i -> corner ; f: corner -> Z_i
};

// verdicts for one map.  classify_c fills the corners from latching
// pushouts; the aggregate flags then read weq / c-fibration (pointwise) /
// c-cofibration (corner) / good acyclic c-cofibration (corner_acyclic).
// classify_f fills them from matching pullbacks; the same slots read weq /
// f-cofibration (pointwise) / f-fibration (corner) / corner-acyclic
// f-fibration.  Invariant: induced . canonical (resp. canonical . induced)
// recovers the component f_i.
struct MapClassification {
  bool weq = false;             // every component a weak equivalence
  bool pointwise = false;       // c: components fibrations; f: cofibrations
  bool corner = false;          // every corner map a (co)fibration
  bool corner_acyclic = false;  // every corner map acyclic
  std::map<Obj, bool> weq_at, fib_at, cof_at;
  std::map<Obj, CornerMap> corner_at;
};

// pre: locally direct index (a longest-path degree exists), chain fibers
MapClassification classify_c(const TwMap& f);
// pre: locally inverse index, chain fibers
MapClassification classify_f(const TwMap& f);

enum class FactorMode { GoodAcyclicThenFib, CofThenAcyclicFib };

struct TwFactorization {
  TwMap first, second;  // second . first = the factored map
};

// degree-by-degree factorization over a locally direct index: at each
// object the latching pushout corner is factored in the fiber and the
// colimit legs glue the pieces into structure maps.  Outputs satisfy the
// mode's classify_c verdicts and compose back exactly.
TwFactorization factorize_c(const TwMap& f, FactorMode mode);

enum class LiftKind { GoodAcyclicVsFib, CofVsAcyclicFib };

struct LiftSquare {
  TwMap left;    // A -> B, the cofibration side
  TwMap right;   // X -> Z, the fibration side
  TwMap top;     // A -> X
  TwMap bottom;  // B -> Z
};

// diagonal B -> X with diagonal . left = top and right . diagonal = bottom,
// found degree by degree through fiber corner squares.  Throws when the
// square does not commute or the verdicts demanded by kind fail.
TwMap solve_lift(const LiftSquare& sq, LiftKind kind);

// free images of the fiber generating (acyclic) cofibrations at every index
// object, degrees 0..top_degree (1..top_degree for the acyclic set)
struct GeneratorSets {
  std::vector<TwMap> cof, acof;
  std::vector<std::pair<Obj, long>> cof_from, acof_from;  // (object, degree)
};
GeneratorSets generators_g(const Bundle& b, long top_degree);

// right lifting property of p against every listed generator, decided by
// transposing across the free/evaluation adjunction into per-fiber linear
// algebra: no enumeration, no search
bool rlp_vs_acof(const GeneratorSets& gs, const TwMap& p);
bool rlp_vs_cof(const GeneratorSets& gs, const TwMap& p);

enum class McStructure { C, F };

struct AxiomReport {
  bool mc1 = false, mc2 = false, mc3 = false, mc4 = false, mc5 = false;
  long checks = 0;                 // individual assertions evaluated
  std::vector<std::string> notes;  // one line per failed check
  bool all() const { return mc1 && mc2 && mc3 && mc4 && mc5; }
};

// checks the five axioms for the chosen structure on a seeded instance
// suite generated over b: (co)limit existence, two-of-three, retract
// closure (including a genuine factor-and-lift retract presentation),
// lifting, and factorization with verdict re-checks
AxiomReport verify_mc(const Bundle& b, McStructure s, std::uint64_t seed);

}  // namespace twk
