#include "doctest.h"
#include "twk/fincat.hpp"

using namespace twk;

// ============================================================
// construction and validation
// ============================================================

TEST_CASE("terminal category and small posets validate") {
  CHECK(validate_cat(terminal_cat()).empty());
  CHECK(validate_cat(interval_cat(3)).empty());
  CHECK(validate_cat(subset_poset(1)).empty());
  CHECK(validate_cat(subset_poset(2)).empty());
  CHECK(validate_cat(op_cat(subset_poset(2))).empty());
}

TEST_CASE("the projective-line shaped poset has the right skeleton") {
  // nonempty subsets of a 2-element set: two points mapping into the whole
  FinCat c = subset_poset(1);
  CHECK(c.objs.size() == 3);
  CHECK(c.hom("s0", "s01").size() == 1);
  CHECK(c.hom("s1", "s01").size() == 1);
  CHECK(c.hom("s01", "s0").empty());
  CHECK(c.hom("s0", "s1").empty());
}

TEST_CASE("validator reports typing and missing-composite violations") {
  FinCat c = make_fincat({"a", "b", "c"},
                         {{"f", "a", "b"}, {"g", "b", "c"}},
                         {});  // composite g.f never declared
  auto report = validate_cat(c);
  REQUIRE(!report.empty());
  bool mentions_missing = false;
  for (const auto& line : report)
    if (line.find("missing composite") != std::string::npos) mentions_missing = true;
  CHECK(mentions_missing);

  FinCat bad = make_fincat({"a", "b"}, {{"f", "a", "b"}}, {{"f", "f", "f"}});
  auto rep2 = validate_cat(bad);
  bool mentions_typing = false;
  for (const auto& line : rep2)
    if (line.find("not composable") != std::string::npos) mentions_typing = true;
  CHECK(mentions_typing);
}

// ============================================================
// degree functions and components
// ============================================================

TEST_CASE("subset poset is direct under cardinality degree") {
  FinCat c = subset_poset(2);
  std::map<Obj, long> deg;
  for (const Obj& o : c.objs) deg[o] = static_cast<long>(o.size()) - 1;  // "s01" -> 2
  DegreeInfo info = classify_degree(c, deg);
  CHECK(info.arrows_change_degree);
  CHECK(info.direct);
  CHECK_FALSE(info.inverse);
  DegreeInfo opinfo = classify_degree(op_cat(c), deg);
  CHECK(opinfo.inverse);
  CHECK_FALSE(opinfo.direct);
}

TEST_CASE("discrete categories are simultaneously direct and inverse") {
  FinCat c = discrete_cat({"x", "y", "z"});
  std::map<Obj, long> deg{{"x", 0}, {"y", 5}, {"z", -2}};
  DegreeInfo info = classify_degree(c, deg);
  CHECK(info.direct);
  CHECK(info.inverse);
  CHECK(info.component_bounds.size() == 3);
}

TEST_CASE("direct_degree synthesizes a strictly increasing degree") {
  auto deg = direct_degree(subset_poset(2));
  REQUIRE(deg.has_value());
  CHECK(classify_degree(subset_poset(2), *deg).direct);
  CHECK(deg->at("s0") == 0);
  CHECK(deg->at("s01") == 1);
  CHECK(deg->at("s012") == 2);

  // longest path wins: the composite arrow a -> c alone would allow degree 1,
  // but the chain through b forces 2
  FinCat chain = make_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  auto d2 = direct_degree(chain);
  REQUIRE(d2.has_value());
  CHECK(d2->at("c") == 2);

  CHECK(direct_degree(op_cat(subset_poset(1))).has_value());
  CHECK(direct_degree(interval_cat(3)).has_value());
}

TEST_CASE("direct_degree rejects endomorphisms and cycles") {
  // one object with a non-identity endo: the C2 monoid as a category
  FinCat endo = make_fincat({"x"}, {{"t", "x", "x"}}, {{"t", "t", "id_x"}});
  CHECK_FALSE(direct_degree(endo).has_value());
}
  CHECK(connected_components(discrete_cat({"a", "b", "c"})).size() == 3);
  CHECK(connected_components(subset_poset(1)).size() == 1);
  CHECK(connected_components(disjoint_union(subset_poset(1), terminal_cat())).size() == 2);
}

// ============================================================
// comma categories
// ============================================================

TEST_CASE("comma over an identity functor counts all incoming arrows") {
  FinCat c = interval_cat(1);  // 0 -> 1
  FinFunctor idf = id_functor(c);
  CommaCat over = comma_over(idf, "1");
  // objects: (0, the arrow) and (1, id_1)
  CHECK(over.cat.objs.size() == 2);
  CHECK(validate_cat(over.cat).empty());
  CHECK(validate_functor(over.proj));
  long nonid = 0;
  for (const auto& d : over.cat.mors)
    if (!over.cat.is_id(d.id)) ++nonid;
  CHECK(nonid == 1);
}

TEST_CASE("comma object count equals the sum of hom sizes") {
  FinCat c = subset_poset(2);
  FinFunctor idf = id_functor(c);
  for (const Obj& j : c.objs) {
    CommaCat over = comma_over(idf, j);
    size_t expect = 0;
    for (const Obj& i : c.objs) expect += c.hom(i, j).size();
    CHECK(over.cat.objs.size() == expect);
    CHECK(validate_cat(over.cat).empty());
  }
}

TEST_CASE("strict comma categories drop the identity object") {
  FinCat c = interval_cat(1);
  CommaCat so = strict_over(c, "1");
  CHECK(so.cat.objs.size() == 1);  // just the arrow 0 -> 1
  CHECK(validate_cat(so.cat).empty());
  CommaCat su = strict_under(c, "0");
  CHECK(su.cat.objs.size() == 1);
  CHECK(strict_over(terminal_cat(), "pt").cat.objs.empty());
  CHECK(strict_under(discrete_cat({"a", "b"}), "a").cat.objs.empty());
}

TEST_CASE("latching shape at the top of the projective line poset") {
  FinCat c = subset_poset(1);
  CommaCat so = strict_over(c, "s01");
  // the two point inclusions, no arrows between them
  CHECK(so.cat.objs.size() == 2);
  CHECK(connected_components(so.cat).size() == 2);
}

// ============================================================
// finality
// ============================================================

TEST_CASE("identity functors are final; empty inclusions are not") {
  FinCat c = subset_poset(1);
  CHECK(is_final(id_functor(c)).final);
  FinFunctor empty_incl;
  empty_incl.src = discrete_cat({});
  empty_incl.dst = c;
  FinalityResult r = is_final(empty_incl);
  CHECK_FALSE(r.final);
  CHECK(!r.witness.empty());
}

TEST_CASE("inclusion of the terminal object of a poset is final") {
  // every object of interval_cat(2) maps to 2, uniquely: connected and nonempty
  FinCat c = interval_cat(2);
  FinCat pt = terminal_cat();
  FinFunctor f;
  f.src = pt;
  f.dst = c;
  f.on_obj["pt"] = "2";
  f.on_mor[pt.idmor.at("pt")] = c.idmor.at("2");
  REQUIRE(validate_functor(f));
  CHECK(is_final(f).final);

  // the bottom object is not final: 2 down F is empty
  FinFunctor g;
  g.src = pt;
  g.dst = c;
  g.on_obj["pt"] = "0";
  g.on_mor[pt.idmor.at("pt")] = c.idmor.at("0");
  FinalityResult r = is_final(g);
  CHECK_FALSE(r.final);
  CHECK(r.witness == "1");
}
