#pragma once
// The concrete coefficient categories: finite pointed sets, finite pointed
// M-sets, finite-dimensional vector spaces, bounded chain complexes, and
// finite products of these.  Uniform interface for validation, composition,
// iso tests, hom enumeration where enumerable, and certified finite
// (co)limits with mediator solvers.
//
// Pointed sets are M-sets over the trivial monoid internally; the kind tag
// is kept so reports and serializations stay honest.

#include <map>
#include <optional>
#include <vector>

#include "twk/chain.hpp"
#include "twk/fincat.hpp"
#include "twk/monoid.hpp"

namespace twk {

enum class CKind { PtdSet, MSet, Vect, Chain, Prod };

// Pointed right M-set: elements 0..n-1, element 0 is the basepoint,
// act[x][m] is x acted on by the m-th monoid element.
struct MSetObj {
  long n = 1;
  std::vector<std::vector<long>> act;
  bool operator==(const MSetObj& o) const = default;
};

struct ConcreteCat {
  CKind kind = CKind::PtdSet;
  Monoid monoid;  // PtdSet: trivial; MSet: the acting monoid
  Ring ring;      // Vect / Chain

  std::vector<ConcreteCat> parts;  // Prod

  ConcreteCat() : monoid(trivial_monoid()), ring(ring_q()) {}
  bool operator==(const ConcreteCat& o) const;
};

ConcreteCat cat_ptdset();
ConcreteCat cat_mset(Monoid m);
ConcreteCat cat_vect(Ring r);
ConcreteCat cat_chain(Ring r);
ConcreteCat cat_prod(std::vector<ConcreteCat> parts);

struct CObj {
  CKind kind = CKind::PtdSet;
  MSetObj ms;       // PtdSet / MSet
  long dim = 0;     // Vect
  ChainComplex cx;  // Chain
  std::vector<CObj> parts;  // Prod

  bool operator==(const CObj& o) const;
};

struct CMor {
  CKind kind = CKind::PtdSet;
  CObj src, dst;
  std::vector<long> map;  // MSet: element images
  Mat mat;                // Vect
  ChainMap ch;            // Chain
  std::vector<CMor> parts;  // Prod

  CMor() : mat(0, 0) {}
};

// constructors per kind
CObj obj_mset(const ConcreteCat& c, MSetObj m);
CObj obj_vect(const ConcreteCat& c, long dim);
CObj obj_chain(const ConcreteCat& c, ChainComplex x);
CObj obj_prod(const ConcreteCat& c, std::vector<CObj> parts);
CMor mor_mset(const ConcreteCat& c, CObj src, CObj dst, std::vector<long> map);
CMor mor_vect(const ConcreteCat& c, CObj src, CObj dst, Mat m);
CMor mor_chain(const ConcreteCat& c, ChainMap f);
CMor mor_prod(const ConcreteCat& c, std::vector<CMor> parts);

bool validate_obj(const ConcreteCat& c, const CObj& x);
bool validate_mor(const ConcreteCat& c, const CMor& f);
bool obj_eq(const CObj& a, const CObj& b);       // literal
bool mor_eq_c(const CMor& a, const CMor& b);     // modulo relations for chains
CMor id_mor_c(const ConcreteCat& c, const CObj& x);
CMor compose_c(const ConcreteCat& c, const CMor& g, const CMor& f);
bool is_iso_c(const ConcreteCat& c, const CMor& f);
// two-sided inverse; throws when f has none
CMor inverse_of(const ConcreteCat& c, const CMor& f);
CObj initial_obj(const ConcreteCat& c);
CObj terminal_obj(const ConcreteCat& c);

// all morphisms src -> dst; enumerable kinds only (PtdSet, MSet, products)
std::vector<CMor> enumerate_hom(const ConcreteCat& c, const CObj& src, const CObj& dst);

// --- diagrams and (co)limits ----------------------------------------------

struct CDiagram {
  ConcreteCat cat;
  FinCat shape;
  std::map<Obj, CObj> ob;
  std::map<MorId, CMor> mo;
};
bool validate_diagram(const CDiagram& d);

struct Cocone {
  CObj apex;
  std::map<Obj, CMor> legs;  // D(i) -> apex
};
struct Cone {
  CObj apex;
  std::map<Obj, CMor> legs;  // apex -> D(i)
};
bool validate_cocone(const CDiagram& d, const Cocone& c);
bool validate_cone(const CDiagram& d, const Cone& c);

// A computed colimit keeps the diagram and enough bookkeeping to mediate
// to any competing cocone afterwards.
struct ColimitCert {
  CDiagram diag;
  Cocone cocone;
  std::optional<Obj> via;                    // terminal shape object shortcut
  std::vector<long> cls;                     // MSet: slot -> class index
  std::vector<std::pair<Obj, long>> tags;    // MSet: global slot -> (i, x)
  std::vector<long> vect_coords;             // Vect: chosen coker coordinates
  std::vector<ColimitCert> parts;            // Prod: one cert per factor
};
struct LimitCert {
  CDiagram diag;
  Cone cone;
  std::optional<Obj> via;                    // initial shape object shortcut
  std::vector<std::vector<long>> tuples;     // MSet: apex elements as tuples
  Mat vect_basis;                            // Vect: compatible-family basis
  std::vector<Mat> chain_bases;              // Chain: degreewise family bases
  std::vector<LimitCert> parts;

  LimitCert() : vect_basis(0, 0) {}
};

ColimitCert colimit(const CDiagram& d);
LimitCert limit(const CDiagram& d);
// unique mediating morphism; throws when the competing (co)cone is invalid
CMor colimit_mediator(const ColimitCert& cert, const Cocone& other);
CMor limit_mediator(const LimitCert& cert, const Cone& other);

// --- induction and restriction along a monoid map -------------------------

// same carrier, action through f; composes strictly
MSetObj restrict_mset(const MonHom& f, const MSetObj& y);
std::vector<long> restrict_map(const MonHom& f, const std::vector<long>& m);

// x smashed over M with M': quotient of (x elements) x M' by the action
// relations, plus the unit and counit components of the adjunction
struct Induction {
  MSetObj obj;
  std::vector<long> unit;                  // x -> restrict(f, obj)
  std::vector<std::vector<long>> cls_of;   // cls_of[x][m'] = class index
};
Induction induct_mset(const MonHom& f, const MSetObj& x);
// functorial action on an M-map, between already computed inductions
std::vector<long> induct_map(const MonHom& f, const Induction& isrc, const Induction& idst,
                             const std::vector<long>& m);
// counit induct(f, restrict(f, y)) -> y
std::vector<long> induct_counit(const MonHom& f, const MSetObj& y);

}  // namespace twk
