#pragma once
// Finite categories stored as full hom and composition tables, with
// functors, degree functions, comma categories, and the finality test.
// Ids are opaque strings; everything is exhaustively checkable because
// index categories stay tiny.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twk/exact.hpp"  // for math_error

namespace twk {

using Obj = std::string;
using MorId = std::string;

struct FinCat {
  struct MorData {
    MorId id;
    Obj src, dst;
  };

  std::vector<Obj> objs;
  std::vector<MorData> mors;                 // identities included
  std::map<Obj, MorId> idmor;                // object -> its identity
  std::map<std::pair<MorId, MorId>, MorId> comp;  // (g, f) -> g.f

  bool has_obj(const Obj& o) const;
  const MorData& mor(const MorId& m) const;  // throws on unknown id
  std::vector<MorId> hom(const Obj& a, const Obj& b) const;
  MorId compose(const MorId& g, const MorId& f) const;  // throws if untabled
  bool is_id(const MorId& m) const;
};

// Arrows and composition rows for the non-identity part; identities and the
// unit rows are filled in automatically.
FinCat make_fincat(std::vector<Obj> objs,
                   std::vector<FinCat::MorData> arrows,
                   std::vector<std::array<MorId, 3>> comp_rows);  // {g, f, g.f}

// Poset presented by covering arrows; at most one morphism a -> b, so all
// composites are forced.  Arrow ids read "a<=b".
FinCat make_poset(std::vector<Obj> objs, std::vector<std::pair<Obj, Obj>> covers);

FinCat terminal_cat();
FinCat discrete_cat(std::vector<Obj> objs);
FinCat interval_cat(long n);  // 0 -> 1 -> ... -> n
// nonempty subsets of {0..n} under inclusion; <1> is (+ -> 0 <- -)
FinCat subset_poset(long n);
FinCat op_cat(const FinCat& c);
FinCat disjoint_union(const FinCat& a, const FinCat& b);  // ids prefixed L: / R:

// Every violated typing/identity/associativity instance, one line each.
std::vector<std::string> validate_cat(const FinCat& c);

// --- degree functions -----------------------------------------------------

struct DegreeInfo {
  bool arrows_change_degree = false;  // non-identity arrows never fix the degree
  bool direct = false;                // non-identity arrows strictly increase it
  bool inverse = false;
  std::vector<std::pair<long, long>> component_bounds;  // (min, max) per component
};
DegreeInfo classify_degree(const FinCat& c, const std::map<Obj, long>& deg);

// Longest-path degree function under which every non-identity arrow strictly
// raises the degree; nullopt when a non-identity endomorphism or a directed
// cycle rules any such function out.  Feed op_cat(c) for the inverse check.
std::optional<std::map<Obj, long>> direct_degree(const FinCat& c);

std::vector<std::vector<Obj>> connected_components(const FinCat& c);

// --- functors -------------------------------------------------------------

struct FinFunctor {
  FinCat src, dst;
  std::map<Obj, Obj> on_obj;
  std::map<MorId, MorId> on_mor;

  Obj ob(const Obj& o) const;
  MorId mo(const MorId& m) const;
};

FinFunctor id_functor(const FinCat& c);
bool validate_functor(const FinFunctor& f);

// --- comma categories -----------------------------------------------------

// A comma category remembers how its objects and morphisms were built:
// object id -> (index object i, connecting morphism sigma), morphism id ->
// the underlying arrow alpha of the index category.
struct CommaCat {
  FinCat cat;
  FinFunctor proj;  // to the index category of the i's
  std::map<Obj, std::pair<Obj, MorId>> parts;
  std::map<MorId, MorId> mor_alpha;
};

// objects (i, sigma : Phi(i) -> j)
CommaCat comma_over(const FinFunctor& phi, const Obj& j);
// objects (i, sigma : j -> Phi(i))
CommaCat comma_under(const FinFunctor& phi, const Obj& j);
// objects sigma : j -> i with sigma != id_i (latching shapes)
CommaCat strict_over(const FinCat& c, const Obj& i);
// objects tau : i -> j with tau != id_i (matching shapes)
CommaCat strict_under(const FinCat& c, const Obj& i);

// --- finality -------------------------------------------------------------

struct FinalityResult {
  bool final = false;
  Obj witness;  // target object whose under-category fails, when not final
};
// true iff A down F is non-empty and zig-zag connected for every target A
FinalityResult is_final(const FinFunctor& f);

}  // namespace twk
