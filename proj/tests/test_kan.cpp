#include <doctest.h>

#include <set>

#include "twk/kan.hpp"

using namespace twk;

namespace {

// plain sets at 0, C2-sets at 1, inducting along the unit
Bundle small_bundle() {
  return monoid_bundle(interval_cat(1),
                       {{"0", trivial_monoid()}, {"1", cyclic_group(2)}},
                       {{"0<=1", unit_hom(cyclic_group(2))}});
}

// pointed sets on the whole cospan s0 -> s01 <- s1
Bundle ptd_span() {
  Monoid t = trivial_monoid();
  return monoid_bundle(subset_poset(1), {{"s0", t}, {"s1", t}, {"s01", t}},
                       {{"s0<=s01", unit_hom(t)}, {"s1<=s01", unit_hom(t)}});
}

// a functor out of a discrete category is just an object assignment
FinFunctor discrete_functor(const std::vector<Obj>& objs, const FinCat& dst,
                            const std::map<Obj, Obj>& im) {
  FinFunctor f;
  f.src = discrete_cat(objs);
  f.dst = dst;
  for (const Obj& o : objs) {
    f.on_obj[o] = im.at(o);
    f.on_mor["id_" + o] = dst.idmor.at(im.at(o));
  }
  return f;
}

// a diagram over the pullback of b with the given components and no
// structure maps to choose (discrete source)
TwDiagram discrete_diagram(const FinFunctor& phi, const Bundle& b,
                           const std::map<Obj, CObj>& ob) {
  TwDiagram y;
  y.bundle = inverse_image_bundle(phi, b);
  y.ob = ob;
  return y;
}

// the diagram generated at index 0 (same shape free_diagram must reproduce)
TwDiagram unit_diagram(const Bundle& b, const CObj& x0) {
  TwDiagram y;
  y.bundle = b;
  y.ob["0"] = x0;
  for (const Obj& i : b.base.objs)
    if (i != "0") y.ob[i] = apply_F(b, "0<=" + i, x0);
  for (const auto& md : b.base.mors) {
    if (b.base.is_id(md.id)) continue;
    if (md.src == "0") {
      y.flat[md.id] = unit_at(b, md.id, x0);
    } else {
      CMor shp = uniqueness_iso_fwd(b, "0<=" + md.src, md.id, x0);
      y.flat[md.id] = flat_of(b, md.id, shp, y.ob.at(md.src));
    }
  }
  return y;
}

// the map of unit-generated diagrams induced by a morphism of roots
TwMap tw_of_map(const TwDiagram& y, const TwDiagram& z, const CMor& u) {
  TwMap m;
  m.src = y;
  m.dst = z;
  m.comp["0"] = u;
  for (const Obj& i : y.bundle.base.objs)
    if (i != "0") m.comp[i] = apply_F_mor(y.bundle, "0<=" + i, u);
  return m;
}

// three fixed points; distinct from every stock object of a trivial-monoid
// fiber, whose free orbit and two-point objects collapse to the same table
MSetObj three_points() {
  MSetObj three;
  three.n = 3;
  three.act.assign(3, {0});
  three.act[1] = {1};
  three.act[2] = {2};
  return three;
}

// a valid diagram over the projective-line analog with every component and
// structure map chosen from the enumerated stock
TwDiagram p1_diagram(const Bundle& b) {
  TwDiagram y;
  y.bundle = b;
  y.ob["s0"] = basis_objs(b.fiber_at("s0"))[1];
  y.ob["s1"] = basis_objs(b.fiber_at("s1"))[2];
  y.ob["s01"] = basis_objs(b.fiber_at("s01"))[1];
  for (const MorId& s : {MorId("s0<=s01"), MorId("s1<=s01")}) {
    const auto& md = b.base.mor(s);
    std::vector<CMor> homs = enumerate_hom(b.fiber_at(md.src), y.ob.at(md.src),
                                           apply_U(b, s, y.ob.at(md.dst)));
    y.flat[s] = homs.back();
  }
  return y;
}

}  // namespace

TEST_CASE("comma shapes collapse and empty out where they should") {
  SUBCASE("one index object, identity functor: a single-object diagram") {
    Bundle b = trivial_bundle(discrete_cat({"p"}), cat_ptdset());
    TwDiagram y;
    y.bundle = b;
    y.ob["p"] = basis_objs(b.fiber_at("p"))[1];
    CDiagram d = comma_diagram(b, id_functor(b.base), y, "p");
    CHECK(d.shape.objs.size() == 1);
    CHECK(validate_diagram(d));
    CHECK(obj_eq(d.ob.begin()->second, evaluate(y, "p")));
  }

  SUBCASE("an unreachable target gives the empty diagram, hence the initial object") {
    Bundle b = small_bundle();
    FinFunctor phi = discrete_functor({"1"}, b.base, {{"1", "1"}});
    REQUIRE(validate_functor(phi));
    TwDiagram y = discrete_diagram(phi, b, {{"1", basis_objs(b.fiber_at("1"))[1]}});

    CHECK(comma_diagram(b, phi, y, "0").shape.objs.empty());

    KanResult k = lan(b, phi, y);
    CHECK(validate_twisted(k.extension, TwForm::Flat).empty());
    CHECK(validate_twisted(k.extension, TwForm::Sharp).empty());
    CHECK(obj_eq(evaluate(k.extension, "0"), initial_obj(b.fiber_at("0"))));
    CHECK(obj_eq(evaluate(k.extension, "1"), evaluate(y, "1")));
  }

  SUBCASE("dually, nothing under an object makes the right extension terminal") {
    Bundle b = small_bundle();
    FinFunctor phi = discrete_functor({"0"}, b.base, {{"0", "0"}});
    REQUIRE(validate_functor(phi));
    TwDiagram y = discrete_diagram(phi, b, {{"0", basis_objs(b.fiber_at("0"))[1]}});

    CHECK(comma_diagram_op(b, phi, y, "1").shape.objs.empty());

    KanResult r = ran(b, phi, y);
    CHECK(validate_twisted(r.extension, TwForm::Flat).empty());
    CHECK(validate_twisted(r.extension, TwForm::Sharp).empty());
    CHECK(obj_eq(evaluate(r.extension, "0"), evaluate(y, "0")));
    CHECK(obj_eq(evaluate(r.extension, "1"), terminal_obj(b.fiber_at("1"))));
  }
}

TEST_CASE("the comma diagram matches its direct enumeration") {
  Bundle b = p1_analog_bundle();
  TwDiagram y = p1_diagram(b);
  REQUIRE(validate_twisted(y, TwForm::Flat).empty());

  FinFunctor phi = id_functor(b.base);
  CDiagram d = comma_diagram(b, phi, y, "s01");
  CHECK(validate_diagram(d));

  // the cospan has three objects over its top and one lift per leg
  CommaCat cm = comma_over(phi, "s01");
  CHECK(cm.cat.objs.size() == 3);
  CHECK(cm.cat.mors.size() == 5);

  const ConcreteCat& cj = b.fiber_at("s01");
  for (const auto& [o, p] : cm.parts)
    CHECK(obj_eq(d.ob.at(o), apply_F(b, p.second, evaluate(y, p.first))));
  for (const auto& md : cm.cat.mors) {
    if (cm.cat.is_id(md.id)) continue;
    const auto& [i, sigma] = cm.parts.at(md.src);
    const auto& tau = cm.parts.at(md.dst).second;
    MorId alpha = cm.mor_alpha.at(md.id);
    CMor direct = compose_c(cj, apply_F_mor(b, tau, sharp_at(y, alpha)),
                            uniqueness_iso_bwd(b, alpha, tau, evaluate(y, i)));
    CHECK(mor_eq_c(d.mo.at(md.id), direct));
  }
}

TEST_CASE("extending along the identity changes nothing") {
  Bundle b = monoid_bundle(
      interval_cat(2),
      {{"0", cyclic_group(8)}, {"1", cyclic_group(4)}, {"2", cyclic_group(2)}},
      {{"0<=1", cyclic_quotient(8, 4)},
       {"1<=2", cyclic_quotient(4, 2)},
       {"0<=2", cyclic_quotient(8, 2)}});
  TwDiagram y = unit_diagram(b, basis_objs(b.fiber_at("0"))[1]);
  FinFunctor phi = id_functor(b.base);

  KanResult k = lan(b, phi, y);
  CHECK(validate_twisted(k.extension, TwForm::Flat).empty());
  CHECK(validate_twisted(k.extension, TwForm::Sharp).empty());
  CHECK(validate_tw_map(k.unit, TwForm::Flat).empty());
  CHECK(tw_map_is_iso(k.unit));

  // with nothing to extend along, the counit at Y inverts the unit
  TwMap eps = lan_counit_at(phi, k, y);
  CHECK(validate_tw_map(eps, TwForm::Sharp).empty());
  CHECK(tw_map_is_iso(eps));
  CHECK(tw_map_eq(compose_tw(eps, k.unit), id_tw_map(y)));

  SUBCASE("the right extension collapses the same way") {
    KanResult r = ran(b, phi, y);
    CHECK(validate_twisted(r.extension, TwForm::Flat).empty());
    CHECK(validate_twisted(r.extension, TwForm::Sharp).empty());
    CHECK(tw_map_is_iso(r.counit));
    TwMap eta = ran_unit_at(phi, r, y);
    CHECK(tw_map_is_iso(eta));
    CHECK(tw_map_eq(compose_tw(r.counit, eta), id_tw_map(y)));
  }
}

TEST_CASE("extension along a one-object inclusion is the free diagram") {
  SUBCASE("sets inducting up to C2-sets") {
    Bundle b = small_bundle();
    CObj a = obj_mset(b.fiber_at("0"), three_points());
    FinFunctor phi = discrete_functor({"0"}, b.base, {{"0", "0"}});
    REQUIRE(validate_functor(phi));
    TwDiagram y = discrete_diagram(phi, b, {{"0", a}});

    KanResult k = lan(b, phi, y);
    TwDiagram fr = free_diagram(b, "0", a);
    CHECK(validate_twisted(fr, TwForm::Flat).empty());
    CHECK(validate_twisted(fr, TwForm::Sharp).empty());
    CHECK(tw_diagram_eq(k.extension, fr));
    CHECK(tw_diagram_eq(fr, unit_diagram(b, a)));
    CHECK(mor_eq_c(k.unit.comp.at("0"), id_mor_c(b.fiber_at("0"), a)));
  }

  SUBCASE("the group tower exercises the comparison routing on long arrows") {
    Bundle b = monoid_bundle(
        interval_cat(2),
        {{"0", cyclic_group(8)}, {"1", cyclic_group(4)}, {"2", cyclic_group(2)}},
        {{"0<=1", cyclic_quotient(8, 4)},
         {"1<=2", cyclic_quotient(4, 2)},
         {"0<=2", cyclic_quotient(8, 2)}});
    CObj a = basis_objs(b.fiber_at("0"))[1];
    FinFunctor phi = discrete_functor({"0"}, b.base, {{"0", "0"}});
    TwDiagram y = discrete_diagram(phi, b, {{"0", a}});

    KanResult k = lan(b, phi, y);
    TwDiagram fr = free_diagram(b, "0", a);
    CHECK(tw_diagram_eq(k.extension, fr));
    CHECK(tw_diagram_eq(fr, unit_diagram(b, a)));
  }

  SUBCASE("maps out of a free diagram are exactly maps out of the generator") {
    Bundle b = small_bundle();
    CObj a = basis_objs(b.fiber_at("0"))[1];
    TwDiagram fr = free_diagram(b, "0", a);
    TwDiagram z = unit_diagram(b, obj_mset(b.fiber_at("0"), three_points()));
    CHECK(enumerate_tw_maps(fr, z).size() ==
          enumerate_hom(b.fiber_at("0"), a, evaluate(z, "0")).size());
  }
}

TEST_CASE("the extension transposes hom sets one for one") {
  Bundle b = ptd_span();
  FinFunctor phi =
      discrete_functor({"s0", "s1"}, b.base, {{"s0", "s0"}, {"s1", "s1"}});
  REQUIRE(validate_functor(phi));
  TwDiagram y = discrete_diagram(
      phi, b,
      {{"s0", basis_objs(b.fiber_at("s0"))[1]},
       {"s1", obj_mset(b.fiber_at("s1"), three_points())}});

  KanResult k = lan(b, phi, y);
  CHECK(validate_twisted(k.extension, TwForm::Flat).empty());
  CHECK(validate_twisted(k.extension, TwForm::Sharp).empty());
  // legs meet only in the basepoint: a wedge of a 2- and a 3-point set
  CHECK(evaluate(k.extension, "s01").ms.n == 4);

  TwDiagram z;
  z.bundle = b;
  z.ob["s0"] = obj_mset(b.fiber_at("s0"), three_points());
  z.ob["s01"] = basis_objs(b.fiber_at("s01"))[1];
  z.ob["s1"] = basis_objs(b.fiber_at("s1"))[1];
  for (const MorId& s : {MorId("s0<=s01"), MorId("s1<=s01")}) {
    const auto& md = b.base.mor(s);
    std::vector<CMor> homs = enumerate_hom(b.fiber_at(md.src), z.ob.at(md.src),
                                           apply_U(b, s, z.ob.at(md.dst)));
    z.flat[s] = homs.back();
  }
  REQUIRE(validate_twisted(z, TwForm::Flat).empty());

  std::vector<TwMap> down = enumerate_tw_maps(k.extension, z);
  std::vector<TwMap> up = enumerate_tw_maps(y, inverse_image_diagram(phi, z));
  REQUIRE(!down.empty());
  CHECK(down.size() == up.size());

  // transposing against the unit hits each member of the other hom set once
  std::set<std::size_t> hit;
  for (const TwMap& g : down) {
    TwMap t = compose_tw(inverse_image_map(phi, g), k.unit);
    std::size_t found = up.size();
    for (std::size_t n = 0; n < up.size(); ++n)
      if (tw_map_eq(t, up[n])) {
        found = n;
        break;
      }
    REQUIRE(found < up.size());
    hit.insert(found);
  }
  CHECK(hit.size() == down.size());
}

TEST_CASE("right extension to a point is the product of the fibers") {
  Bundle b = trivial_bundle(discrete_cat({"pt"}), cat_ptdset());
  FinFunctor phi =
      discrete_functor({"a", "b"}, b.base, {{"a", "pt"}, {"b", "pt"}});
  REQUIRE(validate_functor(phi));
  TwDiagram y = discrete_diagram(
      phi, b,
      {{"a", obj_mset(b.fiber_at("pt"), three_points())},
       {"b", basis_objs(b.fiber_at("pt"))[1]}});

  KanResult r = ran(b, phi, y);
  CHECK(validate_twisted(r.extension, TwForm::Flat).empty());
  CHECK(evaluate(r.extension, "pt").ms.n == 6);
  CHECK(validate_tw_map(r.counit, TwForm::Flat).empty());

  // and the left extension glues the same data into a wedge
  KanResult k = lan(b, phi, y);
  CHECK(evaluate(k.extension, "pt").ms.n == 4);

  SUBCASE("hom sets transpose across the right adjoint too") {
    TwDiagram z;
    z.bundle = b;
    z.ob["pt"] = basis_objs(b.fiber_at("pt"))[1];

    std::vector<TwMap> up = enumerate_tw_maps(inverse_image_diagram(phi, z), y);
    std::vector<TwMap> down = enumerate_tw_maps(z, r.extension);
    REQUIRE(!down.empty());
    CHECK(down.size() == up.size());

    std::set<std::size_t> hit;
    for (const TwMap& g : down) {
      TwMap t = compose_tw(r.counit, inverse_image_map(phi, g));
      std::size_t found = up.size();
      for (std::size_t n = 0; n < up.size(); ++n)
        if (tw_map_eq(t, up[n])) {
          found = n;
          break;
        }
      REQUIRE(found < up.size());
      hit.insert(found);
    }
    CHECK(hit.size() == down.size());
  }
}

TEST_CASE("triangular identities hold componentwise") {
  SUBCASE("sets under induction") {
    Bundle b = small_bundle();
    FinFunctor phi = discrete_functor({"0"}, b.base, {{"0", "0"}});
    TwDiagram y =
        discrete_diagram(phi, b, {{"0", basis_objs(b.fiber_at("0"))[1]}});

    KanResult k = lan(b, phi, y);
    KanResult k2 = lan(b, phi, inverse_image_diagram(phi, k.extension));
    TwMap leta = lan_map(b, phi, k, k2, k.unit);
    CHECK(tw_map_eq(compose_tw(k.counit, leta), id_tw_map(k.extension)));

    TwDiagram z = unit_diagram(b, obj_mset(b.fiber_at("0"), three_points()));
    KanResult kp = lan(b, phi, inverse_image_diagram(phi, z));
    TwMap eps = lan_counit_at(phi, kp, z);
    CHECK(validate_tw_map(eps, TwForm::Flat).empty());
    CHECK(tw_map_eq(compose_tw(inverse_image_map(phi, eps), kp.unit),
                    id_tw_map(inverse_image_diagram(phi, z))));
  }

  SUBCASE("chain complexes under the shift") {
    Ring R = ring_z();
    Bundle b = shift_bundle(interval_cat(1), R, {{"0<=1", 1}});
    const ConcreteCat& c0 = b.fiber_at("0");
    FinFunctor phi = discrete_functor({"0"}, b.base, {{"0", "0"}});
    TwDiagram y =
        discrete_diagram(phi, b, {{"0", obj_chain(c0, disk_cx(R, 1))}});

    KanResult k = lan(b, phi, y);
    CHECK(validate_twisted(k.extension, TwForm::Sharp).empty());
    KanResult k2 = lan(b, phi, inverse_image_diagram(phi, k.extension));
    TwMap leta = lan_map(b, phi, k, k2, k.unit);
    CHECK(tw_map_eq(compose_tw(k.counit, leta), id_tw_map(k.extension)));

    // a unit-generated diagram is recovered from its restriction
    TwDiagram z = unit_diagram(b, obj_chain(c0, sphere_cx(R, 0)));
    KanResult kp = lan(b, phi, inverse_image_diagram(phi, z));
    CHECK(tw_diagram_eq(kp.extension, z));
    TwMap eps = lan_counit_at(phi, kp, z);
    CHECK(tw_map_is_iso(eps));
    CHECK(tw_map_eq(compose_tw(inverse_image_map(phi, eps), kp.unit),
                    id_tw_map(inverse_image_diagram(phi, z))));
  }

  SUBCASE("and dually for the right extension") {
    Bundle b = small_bundle();
    FinFunctor phi = discrete_functor({"0"}, b.base, {{"0", "0"}});
    TwDiagram y =
        discrete_diagram(phi, b, {{"0", basis_objs(b.fiber_at("0"))[1]}});

    KanResult r = ran(b, phi, y);
    KanResult r2 = ran(b, phi, inverse_image_diagram(phi, r.extension));
    TwMap reps = ran_map(b, phi, r2, r, r.counit);
    CHECK(tw_map_eq(compose_tw(reps, r.unit), id_tw_map(r.extension)));

    TwDiagram z = unit_diagram(b, obj_mset(b.fiber_at("0"), three_points()));
    KanResult rp = ran(b, phi, inverse_image_diagram(phi, z));
    TwMap eta = ran_unit_at(phi, rp, z);
    CHECK(validate_tw_map(eta, TwForm::Flat).empty());
    CHECK(tw_map_eq(compose_tw(rp.counit, inverse_image_map(phi, eta)),
                    id_tw_map(inverse_image_diagram(phi, z))));
  }
}

TEST_CASE("unit and counit are natural in the diagram") {
  Bundle b = small_bundle();
  const ConcreteCat& c0 = b.fiber_at("0");
  FinFunctor phi = discrete_functor({"0"}, b.base, {{"0", "0"}});
  CObj a = basis_objs(c0)[1];
  CObj a2 = obj_mset(c0, three_points());

  TwDiagram y = discrete_diagram(phi, b, {{"0", a}});
  TwDiagram y2 = discrete_diagram(phi, b, {{"0", a2}});
  CMor u = enumerate_hom(c0, a, a2).back();
  TwMap f;
  f.src = y;
  f.dst = y2;
  f.comp["0"] = u;

  KanResult ky = lan(b, phi, y);
  KanResult kz = lan(b, phi, y2);
  TwMap lf = lan_map(b, phi, ky, kz, f);
  CHECK(validate_tw_map(lf, TwForm::Flat).empty());
  CHECK(validate_tw_map(lf, TwForm::Sharp).empty());

  SUBCASE("the unit square commutes") {
    CHECK(tw_map_eq(compose_tw(kz.unit, f),
                    compose_tw(inverse_image_map(phi, lf), ky.unit)));
  }

  SUBCASE("the counit square commutes") {
    TwDiagram z = unit_diagram(b, a);
    TwDiagram z2 = unit_diagram(b, a2);
    TwMap g = tw_of_map(z, z2, u);
    KanResult kp = lan(b, phi, inverse_image_diagram(phi, z));
    KanResult kp2 = lan(b, phi, inverse_image_diagram(phi, z2));
    TwMap eps = lan_counit_at(phi, kp, z);
    TwMap eps2 = lan_counit_at(phi, kp2, z2);
    TwMap lg = lan_map(b, phi, kp, kp2, inverse_image_map(phi, g));
    CHECK(tw_map_eq(compose_tw(g, eps), compose_tw(eps2, lg)));
  }

  SUBCASE("the action on maps is functorial") {
    CHECK(tw_map_eq(lan_map(b, phi, ky, ky, id_tw_map(y)),
                    id_tw_map(ky.extension)));
    CMor v = enumerate_hom(c0, a2, a).back();
    TwMap g;
    g.src = y2;
    g.dst = y;
    g.comp["0"] = v;
    TwMap lg = lan_map(b, phi, kz, ky, g);
    CHECK(tw_map_eq(compose_tw(lg, lf),
                    lan_map(b, phi, ky, ky, compose_tw(g, f))));
  }
}

TEST_CASE("the free diagram drops its generator at the chosen spot") {
  SUBCASE("over the shift tower the generator suspends rightward") {
    Ring R = ring_z();
    Bundle b = shift_bundle(interval_cat(2), R,
                            {{"0<=1", 1}, {"1<=2", 1}, {"0<=2", 2}});
    CObj gen = obj_chain(b.fiber_at("1"), sphere_cx(R, 1));
    TwDiagram fr = free_diagram(b, "1", gen);
    CHECK(validate_twisted(fr, TwForm::Flat).empty());
    CHECK(validate_twisted(fr, TwForm::Sharp).empty());
    CHECK(obj_eq(evaluate(fr, "0"), initial_obj(b.fiber_at("0"))));
    CHECK(obj_eq(evaluate(fr, "1"), gen));
    CHECK(obj_eq(evaluate(fr, "2"), apply_F(b, "1<=2", gen)));
    CHECK(mor_eq_c(sharp_at(fr, "1<=2"),
                   id_mor_c(b.fiber_at("2"), evaluate(fr, "2"))));
  }

  SUBCASE("over a discrete base the other fibers stay initial") {
    Bundle b = trivial_bundle(discrete_cat({"p", "q"}), cat_ptdset());
    CObj a = basis_objs(b.fiber_at("p"))[1];
    TwDiagram fr = free_diagram(b, "p", a);
    CHECK(obj_eq(evaluate(fr, "p"), a));
    CHECK(obj_eq(evaluate(fr, "q"), initial_obj(b.fiber_at("q"))));
  }
}

TEST_CASE("extension along the cospan leg keeps the leg and pads the rest") {
  Bundle b = p1_analog_bundle();
  TwDiagram y = p1_diagram(b);

  FinFunctor phi;
  phi.src = interval_cat(1);
  phi.dst = b.base;
  phi.on_obj = {{"0", "s0"}, {"1", "s01"}};
  phi.on_mor = {{"id_0", "id_s0"}, {"id_1", "id_s01"}, {"0<=1", "s0<=s01"}};
  REQUIRE(validate_functor(phi));
  TwDiagram pulled = inverse_image_diagram(phi, y);

  KanResult k = lan(b, phi, pulled);
  CHECK(validate_twisted(k.extension, TwForm::Flat).empty());
  CHECK(validate_twisted(k.extension, TwForm::Sharp).empty());
  CHECK(obj_eq(evaluate(k.extension, "s0"), evaluate(y, "s0")));
  CHECK(obj_eq(evaluate(k.extension, "s01"), evaluate(y, "s01")));
  CHECK(obj_eq(evaluate(k.extension, "s1"), initial_obj(b.fiber_at("s1"))));
  CHECK(mor_eq_c(flat_at(k.extension, "s0<=s01"), flat_at(y, "s0<=s01")));
  CHECK(tw_map_is_iso(k.unit));

  KanResult k2 = lan(b, phi, inverse_image_diagram(phi, k.extension));
  TwMap leta = lan_map(b, phi, k, k2, k.unit);
  CHECK(tw_map_eq(compose_tw(k.counit, leta), id_tw_map(k.extension)));
}
