#include "support/generators.hpp"
#include "unit/common.hpp"

using namespace extrop;
using namespace extrop::testing;

namespace {

const MonoidElement kInf = MonoidElement::inf();

ExtendedTropicalCurve point_curve(int genus, int markings, const PointedMonoid& base) {
  return {StableGraph{{genus}, {}, std::vector<int>(static_cast<std::size_t>(markings), 0)}, base, {}};
}

}  // namespace

TEST_SUITE("moduli") {
  TEST_CASE("cone of a graph") {
    CHECK(cone_of_graph(StableGraph{{0}, {}, {0, 0, 0}}) == Cone::zero(0));
    CHECK(cone_of_graph(StableGraph{{0}, {{0, 0}}, {0}}) == Cone::orthant(1));
    const StableGraph th{{0, 0}, {{0, 1}, {0, 1}, {0, 1}}, {}};
    CHECK(cone_of_graph(th).face_lattice().size() == 8);
  }

  TEST_CASE("curves from homomorphisms") {
    const PointedMonoid n1 = PointedMonoid::free(1);
    const StableGraph g{{0, 0}, {{0, 1}, {0, 0}}, {0, 1, 1}};
    const CurveFromHom a = curve_from_hom(g, n1, {el({2}), el({3})});
    CHECK(a.curve.graph == g);
    CHECK(a.curve.lengths == std::vector<MonoidElement>{el({2}), el({3})});
    CHECK(a.contraction.edges.empty());

    const CurveFromHom b = curve_from_hom(g, n1, {el({0}), el({3})});
    CHECK(b.curve.graph.num_vertices() == 1);
    CHECK(b.curve.graph.num_edges() == 1);
    CHECK(b.curve.lengths == std::vector<MonoidElement>{el({3})});
    CHECK(b.contraction.edges == std::vector<int>{0});

    const CurveFromHom c = curve_from_hom(g, n1, {kInf, el({1})});
    CHECK(c.curve.lengths[0].is_inf());

    // the same through a morphism N^2 -> N
    const PointedMorphism f = PointedMorphism::toric(PointedMonoid::free(2), n1, LatticeMap(mat(2, {{0, 3}})));
    const CurveFromHom d = curve_from_hom(g, f);
    CHECK(d.curve.graph == b.curve.graph);
    CHECK(d.curve.lengths == b.curve.lengths);

    CHECK_THROWS_AS(curve_from_hom(g, n1, {el({1})}), InvalidArgument);
    CHECK_THROWS_AS(curve_from_hom(g, n1, {el({-1}), el({1})}), InvalidArgument);
  }

  TEST_CASE("curve values are recovered from the contraction") {
    Gen gen(71);
    const auto atlas = moduli_atlas(1, 3, false);
    for (int t = 0; t < 100; ++t) {
      const PointedMonoid base = gen.monoid(2);
      const StableGraph& g = gen.pick(atlas.graphs);
      std::vector<MonoidElement> values;
      for (std::size_t e = 0; e < g.num_edges(); ++e)
        values.push_back(gen.coin(0.3) ? MonoidElement::of(IntVec(base.rank(), 0)) : gen.nonzero_element(base));
      const CurveFromHom c = curve_from_hom(g, base, values);
      for (std::size_t e = 0; e < values.size(); ++e) {
        const int img = c.contraction.edge_map[e];
        if (img < 0)
          CHECK(values[e] == MonoidElement::of(IntVec(base.rank(), 0)));
        else
          CHECK(c.curve.lengths[static_cast<std::size_t>(img)] == values[e]);
      }
      CHECK(c.curve.genus() == 1);
    }
  }

  TEST_CASE("clutching examples") {
    const PointedMonoid n1 = PointedMonoid::free(1);
    const ExtendedTropicalCurve a = point_curve(0, 3, n1);
    const ExtendedTropicalCurve ab = clutch(a, a);
    CHECK(ab.graph.num_vertices() == 2);
    CHECK(ab.graph.num_edges() == 1);
    CHECK(ab.graph.edges[0] == std::make_pair(0, 1));
    CHECK(ab.lengths == std::vector<MonoidElement>{kInf});
    CHECK(ab.graph.legs == std::vector<int>{0, 0, 1, 1});
    CHECK(ab.genus() == 0);

    const ExtendedTropicalCurve e = point_curve(1, 1, n1);
    const ExtendedTropicalCurve eb = clutch(e, a);
    CHECK(eb.genus() == 1);
    CHECK(eb.num_markings() == 2);
    CHECK(eb.graph.is_stable());

    CHECK_THROWS_AS(clutch(a, point_curve(0, 3, PointedMonoid::free(2))), InvalidArgument);
    const ExtendedTropicalCurve pr = clutch(a, point_curve(0, 3, PointedMonoid::free(2)), BaseMode::Product);
    CHECK(pr.base == PointedMonoid::free(3));
  }

  TEST_CASE("self-gluing examples") {
    const PointedMonoid n1 = PointedMonoid::free(1);
    const ExtendedTropicalCurve g4 = self_glue(point_curve(0, 4, n1));
    CHECK(g4.genus() == 1);
    CHECK(g4.graph.num_vertices() == 1);
    CHECK(g4.graph.edges == std::vector<std::pair<int, int>>{{0, 0}});
    CHECK(g4.lengths == std::vector<MonoidElement>{kInf});
    CHECK(g4.num_markings() == 2);

    const ExtendedTropicalCurve g3 = self_glue(point_curve(0, 3, n1), 1, 2);
    CHECK(g3.graph == StableGraph{{0}, {{0, 0}}, {0}});
    const auto atlas11 = moduli_atlas(1, 1, false);
    CHECK_NOTHROW(atlas11.index_of(g3.graph));

    const ExtendedTropicalCurve two{StableGraph{{0, 0}, {{0, 1}}, {0, 0, 1, 1}}, n1, {el({2})}};
    const ExtendedTropicalCurve t = self_glue(two, 1, 2);
    CHECK(t.graph.edges.back() == std::make_pair(0, 1));
    CHECK(t.genus() == 1);
    CHECK(t.graph.legs == std::vector<int>{0, 1});
  }

  TEST_CASE("atlas examples") {
    const ModuliAtlas a03 = moduli_atlas(0, 3);
    CHECK(a03.graphs.size() == 1);
    CHECK(a03.cones[0].rank() == 0);
    CHECK(a03.contractions.empty());
    CHECK(a03.automorphisms[0].size() == 1);

    const ModuliAtlas a11 = moduli_atlas(1, 1);
    CHECK(a11.graphs.size() == 2);
    REQUIRE(a11.contractions.size() == 1);
    const AtlasArrow& arrow = a11.contractions[0];
    CHECK(a11.graphs[arrow.source].num_edges() == 1);
    CHECK(a11.graphs[arrow.target].num_edges() == 0);
    CHECK(a11.automorphisms[arrow.source].size() == 2);

    const ModuliAtlas a04 = moduli_atlas(0, 4);
    CHECK(a04.graphs.size() == 4);
    CHECK(a04.contractions.size() == 3);
    for (const auto& c : a04.contractions) CHECK(a04.graphs[c.target].num_edges() == 0);
  }

  TEST_CASE("atlas arrows are isomorphisms onto listed graphs") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 5}, {1, 2}, {2, 0}, {1, 3}}) {
      const ModuliAtlas a = moduli_atlas(g, n);
      for (const auto& arrow : a.contractions) {
        const StableGraph h = contract(a.graphs[arrow.source], arrow.edges).first;
        CHECK(is_isomorphism(h, a.graphs[arrow.target], arrow.iso));
        CHECK(a.cones[arrow.target].rank() + arrow.edges.size() == a.cones[arrow.source].rank());
      }
      std::size_t expected = 0;
      for (const auto& x : a.graphs) expected += (std::size_t{1} << x.num_edges()) - 1;
      CHECK(a.contractions.size() == expected);
    }
  }

  TEST_CASE("genus additivity") {
    Gen gen(72);
    const auto a11 = moduli_atlas(1, 2, false), a03 = moduli_atlas(0, 4, false), a12 = moduli_atlas(1, 3, false);
    const std::vector<const ModuliAtlas*> atlases{&a11, &a03, &a12};
    for (int t = 0; t < 100; ++t) {
      const PointedMonoid base = gen.monoid(2);
      const ModuliAtlas& x = *gen.pick(atlases);
      const ModuliAtlas& y = *gen.pick(atlases);
      const ExtendedTropicalCurve a = gen.curve_on(gen.pick(x.graphs), base);
      const ExtendedTropicalCurve b = gen.curve_on(gen.pick(y.graphs), base);
      const ExtendedTropicalCurve c = clutch(a, b);
      CHECK(c.genus() == a.genus() + b.genus());
      CHECK(c.num_markings() + 2 == a.num_markings() + b.num_markings());
      CHECK(c.lengths.back().is_inf());
      const ExtendedTropicalCurve s = self_glue(a);
      CHECK(s.genus() == a.genus() + 1);
      CHECK(s.lengths.back().is_inf());
    }
  }

  TEST_CASE("contraction commutes with clutching") {
    Gen gen(73);
    const auto atlas = moduli_atlas(0, 5, false);
    int done = 0;
    for (int t = 0; t < 200 && done < 60; ++t) {
      const PointedMonoid base = gen.monoid(2);
      const ExtendedTropicalCurve a = gen.curve_on(gen.pick(atlas.graphs), base, 0.0);
      const ExtendedTropicalCurve b = gen.curve_on(gen.pick(atlas.graphs), base);
      if (a.graph.num_edges() == 0) continue;
      ++done;
      const std::size_t e = static_cast<std::size_t>(gen.uniform(0, static_cast<int>(a.graph.num_edges()) - 1));
      std::vector<MonoidElement> va = a.lengths;
      va[e] = MonoidElement::of(IntVec(base.rank(), 0));
      const ExtendedTropicalCurve first = clutch(curve_from_hom(a.graph, base, va).curve, b);
      const ExtendedTropicalCurve ab = clutch(a, b);
      std::vector<MonoidElement> vab = ab.lengths;
      vab[e] = MonoidElement::of(IntVec(base.rank(), 0));
      const ExtendedTropicalCurve second = curve_from_hom(ab.graph, base, vab).curve;
      CHECK(find_curve_isomorphism(first, second).has_value());
    }
    CHECK(done >= 30);
  }

  TEST_CASE("curve isomorphisms match lengths") {
    const PointedMonoid n1 = PointedMonoid::free(1);
    const StableGraph g{{0, 0}, {{0, 1}, {0, 1}}, {0, 1}};
    const ExtendedTropicalCurve a{g, n1, {el({1}), el({2})}};
    const ExtendedTropicalCurve b{g, n1, {el({2}), el({1})}};
    const ExtendedTropicalCurve c{g, n1, {el({2}), el({2})}};
    auto iso = find_curve_isomorphism(a, b);
    REQUIRE(iso.has_value());
    CHECK(iso->edge == std::vector<int>{1, 0});
    CHECK_FALSE(find_curve_isomorphism(a, c).has_value());
    const ExtendedTropicalCurve d{g, PointedMonoid::free(2), {el({1, 0}), el({2, 0})}};
    CHECK_FALSE(find_curve_isomorphism(a, d).has_value());
  }

  TEST_CASE("tropical base change") {
    const PointedMonoid n2 = PointedMonoid::free(2), n1 = PointedMonoid::free(1);
    const StableGraph g{{0, 0}, {{0, 1}, {0, 1}}, {0, 1}};
    const ExtendedTropicalCurve c{g, n2, {el({1, 0}), el({0, 1})}};
    auto kill = PointedMorphism::from_generator_images(n2, n1, {MonoidElement::inf(), el({1})});
    REQUIRE(kill.has_value());
    const ExtendedTropicalCurve k = tropical_base_change(c, *kill);
    CHECK(k.lengths == std::vector<MonoidElement>{el({1}), kInf});
    const PointedMorphism proj = PointedMorphism::toric(n2, n1, LatticeMap(mat(2, {{1, 0}})));
    const ExtendedTropicalCurve p = tropical_base_change(c, proj);
    CHECK(p.graph.num_vertices() == 1);
    CHECK(p.graph.num_edges() == 1);
    CHECK(p.genus() == 1);
  }
}
