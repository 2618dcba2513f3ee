#include "support/generators.hpp"
#include "unit/common.hpp"

#include <set>

using namespace extrop;
using namespace extrop::testing;

namespace {

Face ray_face(const Cone& c, const IntVec& r) { return smallest_face_containing(c, std::vector<IntVec>{r}); }

// I_S generated by the Hilbert basis elements outside S; prime when no
// x, y outside I_S (sums of at most three elements of S) have x + y in I_S.
bool brute_prime(const PointedMonoid& m, const std::vector<IntVec>& keep, const std::vector<IntVec>& gens) {
  auto in_ideal = [&](const IntVec& x) {
    for (const auto& g : gens)
      if (m.contains(sub(x, g))) return true;
    return false;
  };
  std::set<IntVec> level{IntVec(m.rank(), 0)}, all;
  for (int depth = 0; depth < 3; ++depth) {
    std::set<IntVec> next;
    for (const auto& x : level)
      for (const auto& s : keep) next.insert(add(x, s));
    for (const auto& x : next)
      if (!in_ideal(x)) all.insert(x);
    level = std::move(next);
  }
  for (const auto& x : all)
    for (const auto& y : all)
      if (in_ideal(add(x, y))) return false;
  return true;
}

}  // namespace

TEST_SUITE("monoids") {
  TEST_CASE("prime of face examples") {
    const PointedMonoid n2 = PointedMonoid::free(2);
    const Cone& s = n2.cone();
    const Face e1 = ray_face(s, iv({1, 0}));
    CHECK(prime_of_face(n2, e1).gens == std::vector<IntVec>{iv({1, 0})});
    CHECK(prime_of_face(n2, zero_face(s)).gens.empty());
    CHECK(prime_of_face(n2, full_face(s)).gens == std::vector<IntVec>{iv({0, 1}), iv({1, 0})});
    for (const auto& f : s.face_lattice().faces) CHECK(face_of_prime(n2, prime_of_face(n2, f)) == f);
  }

  TEST_CASE("ideal membership examples") {
    const PointedMonoid n2 = PointedMonoid::free(2);
    const MonomialIdeal i = make_ideal(n2, {iv({1, 1})});
    CHECK(ideal_contains(n2, i, iv({2, 3})));
    CHECK_FALSE(ideal_contains(n2, i, iv({2, 0})));
    const MonomialIdeal mx = make_ideal(n2, {iv({1, 0}), iv({0, 1})});
    CHECK_FALSE(ideal_contains(n2, mx, iv({0, 0})));
    CHECK(ideal_contains(n2, mx, MonoidElement::inf()));
    CHECK_THROWS_AS(ideal_contains(n2, mx, iv({-1, 0})), InvalidArgument);
    CHECK(make_ideal(n2, {iv({1, 1}), iv({2, 1}), iv({1, 0})}).gens == std::vector<IntVec>{iv({1, 0})});
  }

  TEST_CASE("prime closure examples") {
    const PointedMonoid n2 = PointedMonoid::free(2);
    const Face e1 = ray_face(n2.cone(), iv({1, 0}));
    const MonomialIdeal p = prime_of_face(n2, e1);
    CHECK(prime_closure(n2, p).prime == p);
    CHECK(prime_closure(n2, p).unique);

    const PrimeClosure c = prime_closure(n2, make_ideal(n2, {iv({1, 1})}));
    CHECK(c.prime == prime_of_face(n2, full_face(n2.cone())));
    CHECK_FALSE(c.unique);
    CHECK(c.minimal_faces.size() == 2);

    const PrimeClosure e = prime_closure(n2, MonomialIdeal{});
    CHECK(e.prime.gens.empty());
    CHECK(e.face == zero_face(n2.cone()));
  }

  TEST_CASE("primality witness") {
    const PointedMonoid n2 = PointedMonoid::free(2);
    const MonomialIdeal i = make_ideal(n2, {iv({1, 1})});
    CHECK_FALSE(is_prime(n2, i));
    auto w = primality_witness(n2, i);
    REQUIRE(w.has_value());
    CHECK_FALSE(ideal_contains(n2, i, w->first));
    CHECK_FALSE(ideal_contains(n2, i, w->second));
    CHECK(ideal_contains(n2, i, add(w->first, w->second)));
  }

  TEST_CASE("rees quotient examples") {
    const PointedMonoid n2 = PointedMonoid::free(2);
    const Face e1 = ray_face(n2.cone(), iv({1, 0}));
    const ReesQuotient r = rees_quotient(n2, e1);
    CHECK(r.quotient == PointedMonoid::free(1));
    CHECK(r.map(iv({0, 3})) == el({3}));
    CHECK(r.map(iv({1, 3})).is_inf());

    const ReesQuotient id = rees_quotient(n2, MonomialIdeal{});
    CHECK(id.quotient == n2);
    CHECK(id.map == PointedMorphism::identity(n2));

    const ReesQuotient top = rees_quotient(n2, full_face(n2.cone()));
    CHECK(top.quotient.rank() == 0);
    CHECK(top.map(iv({0, 0})) == el({}));
    CHECK(top.map(iv({0, 1})).is_inf());
  }

  TEST_CASE("factorization examples") {
    const PointedMonoid n2 = PointedMonoid::free(2), n1 = PointedMonoid::free(1);
    auto f = PointedMorphism::from_generator_images(n2, n1, {MonoidElement::inf(), el({1})});
    REQUIRE(f.has_value());  // hilbert basis order: (0,1), (1,0)
    CHECK((*f)(iv({1, 0})) == el({1}));
    CHECK((*f)(iv({0, 1})).is_inf());
    const Factorization fa = factorize_morphism(*f);
    CHECK(fa.rees.map.kernel_face() == ray_face(n2.cone(), iv({0, 1})));
    CHECK(prime_of_face(n2, fa.rees.map.kernel_face()).gens == std::vector<IntVec>{iv({0, 1})});
    CHECK(fa.rees.quotient == n1);
    CHECK(fa.toric == PointedMorphism::identity(n1));

    const PointedMonoid pt = PointedMonoid::trivial();
    auto g = PointedMorphism::from_generator_images(n1, pt, {MonoidElement::inf()});
    REQUIRE(g.has_value());
    const Factorization ga = factorize_morphism(*g);
    CHECK(ga.rees.map.kernel_face() == full_face(n1.cone()));
    CHECK(ga.toric == PointedMorphism::identity(pt));

    const PointedMorphism t = PointedMorphism::toric(n2, n1, LatticeMap(mat(2, {{1, 2}})));
    const Factorization ta = factorize_morphism(t);
    CHECK(ta.rees.map == PointedMorphism::identity(n2));
    CHECK(ta.toric == t);
  }

  TEST_CASE("composition examples") {
    Gen g(31);
    for (int t = 0; t < 30; ++t) {
      const PointedMonoid a = g.monoid(), b = g.monoid();
      const PointedMorphism f = g.pointed_morphism(a, b);
      CHECK(compose(f, PointedMorphism::identity(b)) == f);
      CHECK(compose(PointedMorphism::identity(a), f) == f);
    }
    // two Rees quotients compose to the quotient by the join
    const PointedMonoid n2 = PointedMonoid::free(2);
    const Face e1 = ray_face(n2.cone(), iv({1, 0}));
    const ReesQuotient r1 = rees_quotient(n2, e1);
    const ReesQuotient r2 = rees_quotient(r1.quotient, full_face(r1.quotient.cone()));
    const PointedMorphism c = compose(r1.map, r2.map);
    CHECK(c.kernel_face() == full_face(n2.cone()));
    CHECK(c == rees_quotient(n2, full_face(n2.cone())).map);

    const PointedMorphism t1 = PointedMorphism::toric(n2, n2, LatticeMap(mat(2, {{1, 1}, {0, 1}})));
    const PointedMorphism t2 = PointedMorphism::toric(n2, PointedMonoid::free(1), LatticeMap(mat(2, {{2, 1}})));
    const PointedMorphism tc = compose(t1, t2);
    CHECK(tc.is_toric());
    CHECK(tc.toric_part().matrix() == mat(2, {{2, 3}}));
  }

  TEST_CASE("composition agrees with elementwise composition") {
    Gen g(32);
    for (int t = 0; t < 100; ++t) {
      const PointedMonoid a = g.monoid(), b = g.monoid(), c = g.monoid();
      const PointedMorphism f = g.pointed_morphism(a, b), h = g.pointed_morphism(b, c);
      const PointedMorphism fh = compose(f, h);
      for (const auto& x : a.hilbert_basis()) CHECK(fh(x) == h(f(x)));
      for (int k = 0; k < 3; ++k) {
        const IntVec x = g.combination(a.hilbert_basis(), a.rank(), 3);
        CHECK(fh(x) == h(f(x)));
      }
    }
  }

  TEST_CASE("morphism values are additive and preserve infinity") {
    Gen g(33);
    for (int t = 0; t < 100; ++t) {
      const PointedMonoid a = g.monoid(), b = g.monoid();
      const PointedMorphism f = g.pointed_morphism(a, b);
      CHECK(f(MonoidElement::inf()).is_inf());
      CHECK(f(IntVec(a.rank(), 0)) == MonoidElement::of(IntVec(b.rank(), 0)));
      const auto& hb = a.hilbert_basis();
      for (const auto& x : hb)
        for (const auto& y : hb) {
          CHECK(f(add(x, y)) == f(x) + f(y));
          CHECK(b.contains(f(x)));
        }
    }
  }

  TEST_CASE("factorization is unique") {
    Gen g(34);
    for (int t = 0; t < 100; ++t) {
      const PointedMonoid a = g.monoid(), b = g.monoid();
      const PointedMorphism f = g.pointed_morphism(a, b);
      const Factorization fa = factorize_morphism(f);
      CHECK(fa.toric.is_toric());
      const PointedMorphism back = compose(fa.rees.map, fa.toric);
      CHECK(back == f);
      const Factorization again = factorize_morphism(back);
      CHECK(again.rees.map == fa.rees.map);
      CHECK(again.toric == fa.toric);
      CHECK(PointedMorphism::from_generator_images(a, b, f.generator_images()) == f);
    }
  }

  TEST_CASE("primes correspond to faces") {
    Gen g(35);
    int checked = 0;
    while (checked < 30) {
      const PointedMonoid m = g.monoid(3);
      const auto& hb = m.hilbert_basis();
      if (hb.size() > 9) continue;
      ++checked;
      std::set<MonomialIdeal, bool (*)(const MonomialIdeal&, const MonomialIdeal&)> primes(
          [](const MonomialIdeal& x, const MonomialIdeal& y) { return x.gens < y.gens; });
      for (unsigned mask = 0; mask < (1u << hb.size()); ++mask) {
        std::vector<IntVec> keep, gens;
        for (std::size_t i = 0; i < hb.size(); ++i) ((mask >> i) & 1 ? keep : gens).push_back(hb[i]);
        bool unit_gen = false;
        for (const auto& x : gens) unit_gen |= m.is_unit(x);
        if (unit_gen) continue;
        if (!brute_prime(m, keep, gens)) continue;
        const MonomialIdeal i = make_ideal(m, gens);
        CHECK(is_prime(m, i));
        primes.insert(i);
      }
      const FaceLattice& fl = m.cone().face_lattice();
      CHECK(primes.size() == fl.size());
      for (const auto& a : fl.faces)
        for (const auto& b : fl.faces)
          CHECK(a.subset_of(b) == ideal_subset(m, prime_of_face(m, a), prime_of_face(m, b)));
    }
  }

  TEST_CASE("pushout examples") {
    const PointedMonoid n2 = PointedMonoid::free(2);
    const PointedMorphism id = PointedMorphism::identity(n2);
    const Pushout p = pushout(id, id);
    CHECK(p.object == n2);
    CHECK(p.integral());

    const ReesQuotient ri = rees_quotient(n2, ray_face(n2.cone(), iv({0, 1})));
    const ReesQuotient rj = rees_quotient(n2, ray_face(n2.cone(), iv({1, 0})));
    const Pushout q = pushout(ri.map, rj.map);
    CHECK(q.object.rank() == 0);
    CHECK(q.kernel == full_face(n2.cone()));
    CHECK(q.integral());

    // diagonal N -> N^2 against N -> {0, ∞}
    const PointedMonoid n1 = PointedMonoid::free(1);
    const PointedMorphism diag = PointedMorphism::toric(n1, n2, LatticeMap(mat(1, {{1}, {1}})));
    const ReesQuotient rmax = rees_quotient(n1, full_face(n1.cone()));
    const Pushout d = pushout(diag, rmax.map);
    CHECK_FALSE(d.integral());
    CHECK_FALSE(d.raw_left.integral);
    CHECK(d.raw_left.ideal.gens == std::vector<IntVec>{iv({1, 1})});
    REQUIRE(d.raw_left.witness.has_value());
    CHECK(d.raw_left.witness->first != iv({0, 0}));
    CHECK(ideal_contains(n2, d.raw_left.ideal, add(d.raw_left.witness->first, d.raw_left.witness->second)));
    CHECK(d.object.rank() == 0);  // quotient by the prime closure, the maximal ideal
    CHECK(d.left_leg(iv({1, 0})).is_inf());
  }

  TEST_CASE("pushout squares commute") {
    Gen g(36);
    int done = 0;
    for (int t = 0; t < 300 && done < 60; ++t) {
      const PointedMonoid p = g.monoid(), q = g.monoid(), q2 = g.monoid();
      const PointedMorphism f = g.pointed_morphism(p, q), h = g.pointed_morphism(p, q2);
      std::optional<Pushout> po;
      try {
        po.emplace(pushout(f, h));
      } catch (const Error&) {
        continue;  // a collapsed unit: zero monoid
      }
      ++done;
      for (const auto& x : p.hilbert_basis()) CHECK(po->left_leg(f(x)) == po->right_leg(h(x)));
    }
    CHECK(done >= 30);
  }

  TEST_CASE("product monoid") {
    const PointedMonoid n1 = PointedMonoid::free(1);
    const ProductMonoid pr = product_monoid(n1, n1);
    CHECK(pr.monoid == PointedMonoid::free(2));
    CHECK(pr.left(iv({2})) == el({2, 0}));
    CHECK(pr.right(iv({3})) == el({0, 3}));
  }
}
