#pragma once
// Twisted diagrams over an adjunction bundle: one fiber object per index
// object, one structure map per index arrow, stored in the flat form
// y_sigma : Y_i -> U_sigma(Y_j).  The sharp mates F_sigma(Y_i) -> Y_j are
// always derived on demand; in flat form the diagram laws are strict
// equalities, while in sharp form they hold against the canonical comparison
// isomorphism, and the validators check either presentation.
//
// Maps, pointwise (co)limits with mediators, reindexing along a base functor,
// the direct/inverse image along a bundle morphism, and the dictionary
// between twisted diagrams and sections of the total category live here too.

#include <map>
#include <string>
#include <vector>

#include "twk/bundle.hpp"

namespace twk {

struct TwDiagram {
  Bundle bundle;
  std::map<Obj, CObj> ob;     // i -> Y_i
  std::map<MorId, CMor> flat; // non-identity arrows; identities synthesized
};

CObj evaluate(const TwDiagram& y, const Obj& i);
CMor flat_at(const TwDiagram& y, const MorId& s);   // id arrows give identities
CMor sharp_at(const TwDiagram& y, const MorId& s);  // derived adjoint mate
bool tw_diagram_eq(const TwDiagram& a, const TwDiagram& b);

enum class TwForm { Flat, Sharp };

// Violations, one line each.  The two forms flag literally identical lines on
// any input whose bundle is valid; dual-form agreement is a library property.
std::vector<std::string> validate_twisted(const TwDiagram& y, TwForm form);

struct TwMap {
  TwDiagram src, dst;
  std::map<Obj, CMor> comp;  // i -> f_i : Y_i -> Z_i
};

std::vector<std::string> validate_tw_map(const TwMap& f, TwForm form);
TwMap id_tw_map(const TwDiagram& y);
TwMap compose_tw(const TwMap& g, const TwMap& f);
bool tw_map_eq(const TwMap& a, const TwMap& b);
bool tw_map_is_iso(const TwMap& f);
// all twisted maps src -> dst; enumerable fibers only, sized for desk use
std::vector<TwMap> enumerate_tw_maps(const TwDiagram& src, const TwDiagram& dst);

// replace the structure map over one arrow by a different same-typed
// morphism, so both validator forms have something to disagree with;
// throws when the hom set offers no alternative
TwDiagram corrupt_structure_map(const TwDiagram& y, const MorId& s);

// --- diagrams of twisted diagrams and their (co)limits ---------------------

struct TwFamily {
  FinCat shape;
  Bundle bundle;  // the common coefficient bundle, kept even for empty shapes
  std::map<Obj, TwDiagram> ob;
  std::map<MorId, TwMap> mo;
};
std::vector<std::string> validate_tw_family(const TwFamily& g);

struct TwCocone {
  TwDiagram apex;
  std::map<Obj, TwMap> legs;  // shape object s -> (G s -> apex)
};
struct TwCone {
  TwDiagram apex;
  std::map<Obj, TwMap> legs;  // shape object s -> (apex -> G s)
};

// computed pointwise; the certificates keep every per-index-object
// (co)limit so mediators and evaluation comparisons stay available
struct TwColimit {
  TwFamily fam;
  TwCocone cocone;
  std::map<Obj, ColimitCert> certs;  // index object i -> colim (Ev_i . G)
};
struct TwLimit {
  TwFamily fam;
  TwCone cone;
  std::map<Obj, LimitCert> certs;
};

TwColimit tw_colimit(const TwFamily& g);
TwLimit tw_limit(const TwFamily& g);
TwMap tw_colimit_mediator(const TwColimit& c, const TwCocone& other);
TwMap tw_limit_mediator(const TwLimit& c, const TwCone& other);

// the canonical comparison Ev_i(colim G) -> colim(Ev_i . G) and its dual;
// the caller asserts these are isomorphisms
CMor ev_colimit_comparison(const TwColimit& c, const Obj& i);
CMor ev_limit_comparison(const TwLimit& c, const Obj& i);

// --- reindexing and the image functors -------------------------------------

// y over b pulled back to a diagram over inverse_image_bundle(phi, b)
TwDiagram inverse_image_diagram(const FinFunctor& phi, const TwDiagram& y);
// a map pulled back the same way, component at i taken from phi(i)
TwMap inverse_image_map(const FinFunctor& phi, const TwMap& f);

// along a bundle morphism m : src -> dst with components lambda_i -| rho_i:
// the direct image applies rho_i pointwise and lands over phi*(dst); its left
// adjoint applies lambda_i and mends the structure maps through the mate of
// the strict component square
TwDiagram psi_direct(const Bundle& src, const Bundle& dst, const BundleMor& m,
                     const TwDiagram& y);
TwDiagram psi_inverse(const Bundle& src, const Bundle& dst, const BundleMor& m,
                      const TwDiagram& z);

// --- sections of the total category ----------------------------------------

struct Section {
  std::map<Obj, Obj> on_obj;     // base object -> total object
  std::map<MorId, MorId> on_mor; // base morphism -> total morphism over it
};
std::vector<std::string> validate_section(const TotalCat& t, const Section& s);
TwDiagram diagram_of_section(const Bundle& b, const TotalCat& t, const Section& s);
Section section_of_diagram(const TotalCat& t, const TwDiagram& y);

}  // namespace twk
