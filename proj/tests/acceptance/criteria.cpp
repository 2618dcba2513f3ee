#include "acceptance/criteria.hpp"

#include "extrop/io.hpp"
#include "support/generators.hpp"
#include "unit/oracles.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace extrop::acceptance {

using testing::Gen;
namespace fs = std::filesystem;

namespace {

// Counts checks; keeps the first failure message.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures == 0) return {true, summary + ", " + std::to_string(checks) + " checks"};
    return {false, summary + ", " + std::to_string(failures) + "/" + std::to_string(checks) + " failed; first: " + first};
  }
};

std::string str(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

bool is_simplicial(const Cone& c) { return c.rays().size() == c.dim(); }

// Sums of at most `depth` elements of `gens`, repetition allowed.
std::vector<IntVec> small_sums(const std::vector<IntVec>& gens, std::size_t rank, int depth) {
  std::vector<IntVec> out{IntVec(rank, 0)};
  std::vector<IntVec> layer = out;
  for (int d = 0; d < depth; ++d) {
    std::vector<IntVec> next;
    for (const auto& x : layer)
      for (const auto& g : gens) next.push_back(add(x, g));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Primes of P by exhaustion over sets T of Hilbert basis elements kept
// outside the ideal.  T is the complement of a prime exactly when it equals
// the set of basis elements orthogonal to every ray of σ orthogonal to T;
// only rays and dot products are used.
std::set<std::vector<IntVec>> brute_primes(const PointedMonoid& m) {
  const auto& hb = m.hilbert_basis();
  const auto& rays = m.cone().rays();
  std::set<std::vector<IntVec>> out;
  const std::size_t k = hb.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<IntVec> kept;
    std::vector<IntVec> perp_rays;
    for (std::size_t i = 0; i < k; ++i)
      if (!((mask >> i) & 1)) kept.push_back(hb[i]);
    for (const auto& r : rays) {
      bool orth = true;
      for (const auto& t : kept) orth = orth && dot(r, t) == 0;
      if (orth) perp_rays.push_back(r);
    }
    std::vector<IntVec> closure, gens;
    for (const auto& h : hb) {
      bool orth = true;
      for (const auto& r : perp_rays) orth = orth && dot(r, h) == 0;
      (orth ? closure : gens).push_back(h);
    }
    if (closure != kept) continue;
    // sanity: bounded sums of the complement stay outside
    const MonomialIdeal ideal = make_ideal(m, gens);
    for (const auto& s : small_sums(kept, m.rank(), 2))
      if (ideal_contains(m, ideal, s)) throw Error("exhaustive prime fails the sum test");
    out.insert(ideal.gens);
  }
  return out;
}

// A point of the stratum of τ: a nonnegative combination of the rays of σ/τ.
ExtendedPoint sample_point(Gen& g, const Cone& sigma, const Stratum& s) {
  IntVec x(s.quotient.cone.rank(), 0);
  for (const auto& r : s.quotient.cone.rays()) x = add(x, scale(g.uniform(0, 3), r));
  RatVec q;
  for (const auto& v : x) q.push_back(Rat(v));
  return make_point(sigma, s.face, q);
}

// ---- pushout helpers --------------------------------------------------------

bool in_generated_ideal(const PointedMonoid& q, const std::vector<IntVec>& gens, const IntVec& x) {
  for (const auto& j : gens)
    if (q.divides(j, x)) return true;
  return false;
}

// Elements of `m` with coordinates in [0, bound], plus ∞.  Free monoids only.
std::vector<MonoidElement> box_elements(std::size_t rank, int bound) {
  std::vector<MonoidElement> out{MonoidElement::inf()};
  IntVec v(rank, 0);
  for (;;) {
    out.push_back(MonoidElement::of(v));
    std::size_t i = 0;
    while (i < rank && v[i] == bound) v[i++] = 0;
    if (i == rank) break;
    v[i] += 1;
  }
  return out;
}

std::vector<PointedMorphism> all_maps(const PointedMonoid& from, const PointedMonoid& to,
                                      const std::vector<MonoidElement>& values) {
  std::vector<PointedMorphism> out;
  const std::size_t k = from.hilbert_basis().size();
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    std::vector<MonoidElement> images;
    for (auto i : idx) images.push_back(values[i]);
    if (auto f = PointedMorphism::from_generator_images(from, to, images)) out.push_back(*f);
    std::size_t i = 0;
    while (i < k && idx[i] + 1 == values.size()) idx[i++] = 0;
    if (i == k) break;
    ++idx[i];
  }
  return out;
}

bool agree_on(const PointedMonoid& p, const PointedMorphism& a, const PointedMorphism& b) {
  for (const auto& u : p.hilbert_basis())
    if (a(u) != b(u)) return false;
  return true;
}

// ---- CLI helpers ------------------------------------------------------------

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_shell(const std::string& cmd) {
  RunResult r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t k;
  while ((k = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

Outcome duality_equivalence() {
  Gen g(1001);
  Tally t;
  std::vector<Cone> cones;
  std::size_t simplicial = 0, other = 0;
  for (int attempt = 0; attempt < 2000 && (cones.size() < 60 || simplicial < 15 || other < 15); ++attempt) {
    const std::size_t rank = static_cast<std::size_t>(1 + attempt % 4);
    Cone c = g.pointed_cone(rank, g.coin(0.8));
    const bool s = is_simplicial(c);
    if (cones.size() >= 60 && ((s && simplicial >= 15) || (!s && other >= 15))) continue;
    (s ? simplicial : other) += 1;
    cones.push_back(std::move(c));
  }

  std::size_t brute_checked = 0;
  for (const auto& c : cones) {
    const std::string name = "cone rank " + std::to_string(c.rank()) + " rays " + std::to_string(c.rays().size());
    t.expect(dual_cone(dual_cone(c)) == c, "biduality fails for " + name);

    const PointedMonoid m(c);
    const auto& faces = c.face_lattice().faces;
    std::vector<MonomialIdeal> primes;
    std::set<std::vector<IntVec>> distinct;
    for (const auto& tau : faces) {
      const MonomialIdeal p = prime_of_face(m, tau);
      t.expect(is_prime(m, p), "prime_of_face not prime for " + name);
      t.expect(face_of_prime(m, p) == tau, "face_of_prime does not invert for " + name);
      primes.push_back(p);
      distinct.insert(p.gens);
    }
    t.expect(distinct.size() == faces.size(), "primes of distinct faces coincide for " + name);

    if (m.hilbert_basis().size() <= 14) {
      ++brute_checked;
      const auto brute = brute_primes(m);
      t.expect(brute.size() == faces.size(), name + ": " + std::to_string(faces.size()) + " faces but " +
                                                 std::to_string(brute.size()) + " primes by exhaustion");
      t.expect(brute == distinct, "prime sets differ for " + name);
    }

    // τ' ⪯ τ iff 𝔭_τ' ⊆ 𝔭_τ
    for (std::size_t i = 0; i < faces.size(); ++i)
      for (std::size_t j = 0; j < faces.size(); ++j) {
        bool contained = true;
        for (const auto& x : primes[i].gens) contained = contained && ideal_contains(m, primes[j], x);
        t.expect(faces[i].subset_of(faces[j]) == contained, "order mismatch for " + name);
      }
  }

  std::size_t morphisms = 0;
  while (morphisms < 250) {
    const PointedMonoid a = g.monoid(), b = g.monoid();
    const PointedMorphism f = g.pointed_morphism(a, b);
    const ExtConeMorphism e = dualize(f);
    t.expect(undualize(e) == f, "undualize(dualize f) != f");
    t.expect(dualize(undualize(e)) == e, "dualize(undualize e) != e");
    ++morphisms;
  }
  return t.outcome(std::to_string(cones.size()) + " cones (" + std::to_string(simplicial) + " simplicial, " +
                   std::to_string(other) + " not), " + std::to_string(brute_checked) + " with exhaustive primes, " +
                   std::to_string(morphisms) + " morphism round trips");
}

Outcome functoriality() {
  Gen g(1002);
  Tally t;
  std::size_t pairs = 0, nontoric = 0, points = 0;
  for (; pairs < 250; ++pairs) {
    const PointedMonoid a = g.monoid(), b = g.monoid(), c = g.monoid();
    const PointedMorphism f = g.pointed_morphism(a, b), h = g.pointed_morphism(b, c);
    const PointedMorphism hf = compose(f, h);
    nontoric += !hf.is_toric();
    for (const auto& u : a.hilbert_basis()) t.expect(hf(u) == h(f(u)), "compose is not composition on " + str(u));

    const ExtConeMorphism lhs = dualize(hf);
    const ExtConeMorphism rhs = compose_ext(dualize(h), dualize(f));
    t.expect(lhs == rhs, "dualize(compose(f, g)) != compose_ext(dualize g, dualize f)");

    // as maps of points
    const ExtConeMorphism df = dualize(f), dh = dualize(h);
    for (const auto& s : strata(c.cone())) {
      const ExtendedPoint p = sample_point(g, c.cone(), s);
      t.expect(evaluate(rhs, p) == evaluate(df, evaluate(dh, p)), "composite disagrees with pointwise composition");
      ++points;
    }
  }
  return t.outcome(std::to_string(pairs) + " composable pairs (" + std::to_string(nontoric) +
                   " with nontrivial kernel), " + std::to_string(points) + " points");
}

Outcome pushout_lemma() {
  Gen g(1003);
  Tally t;

  // Q ⊕ P/I = Q/(f(I) + Q)
  std::size_t case2 = 0, case2_nonintegral = 0, collapsed = 0;
  for (int attempt = 0; attempt < 3000 && case2 < 120; ++attempt) {
    const PointedMonoid p = g.monoid(3), q = g.monoid(3);
    if (p.rank() == 0) continue;
    const auto& faces = p.cone().face_lattice().faces;
    const Face tau = g.pick(faces);
    if (tau.rays.empty()) continue;
    const PointedMorphism f = g.pointed_morphism(p, q, 0.0);
    const ReesQuotient r = rees_quotient(p, tau);
    std::optional<Pushout> po;
    try {
      po.emplace(pushout(f, r.map));
    } catch (const Error&) {
      ++collapsed;
      continue;
    }
    std::vector<IntVec> fi;
    for (const auto& u : p.hilbert_basis())
      if (!in_perp(p.cone(), tau, u)) fi.push_back(*f(u).value);

    if (!po->raw_left.integral) {
      ++case2_nonintegral;
      t.expect(po->raw_left.witness.has_value(), "non-integral raw quotient without witness");
      if (po->raw_left.witness) {
        const auto& [x, y] = *po->raw_left.witness;
        t.expect(!in_generated_ideal(q, fi, x) && !in_generated_ideal(q, fi, y) &&
                     in_generated_ideal(q, fi, add(x, y)),
                 "witness does not show non-integrality");
      }
      continue;
    }
    ++case2;
    std::vector<std::pair<IntVec, MonoidElement>> finite;
    for (const auto& x : q.hilbert_basis()) {
      const MonoidElement v = po->left_leg(x);
      t.expect(v.is_inf() == in_generated_ideal(q, fi, x), "left leg at " + str(x) + " disagrees with f(I)+Q");
      if (!v.is_inf()) finite.emplace_back(x, v);
    }
    for (std::size_t i = 0; i < finite.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        t.expect(finite[i].second != finite[j].second, "left leg identifies two survivors");
    for (const auto& a : q.hilbert_basis())
      for (const auto& b : q.hilbert_basis()) {
        const bool inside = in_generated_ideal(q, fi, add(a, b));
        t.expect(inside == (in_generated_ideal(q, fi, a) || in_generated_ideal(q, fi, b)),
                 "integral raw quotient is not prime");
      }
    for (const auto& u : p.hilbert_basis())
      t.expect(po->left_leg(f(u)) == po->right_leg(r.map(u)), "case (2) square does not commute");
  }

  // P/I ⊕ P/J = P/(I ∪ J)
  std::size_t case3 = 0;
  for (int attempt = 0; attempt < 3000 && case3 < 120; ++attempt) {
    const PointedMonoid p = g.monoid(3);
    if (p.rank() == 0) continue;
    const auto& faces = p.cone().face_lattice().faces;
    const Face t1 = g.pick(faces), t2 = g.pick(faces);
    const ReesQuotient r1 = rees_quotient(p, t1), r2 = rees_quotient(p, t2);
    std::optional<Pushout> po;
    try {
      po.emplace(pushout(r1.map, r2.map));
    } catch (const Error&) {
      ++collapsed;
      continue;
    }
    ++case3;
    std::vector<std::pair<IntVec, MonoidElement>> finite;
    for (const auto& u : p.hilbert_basis()) {
      const MonoidElement v = po->left_leg(r1.map(u));
      const bool in_union = !in_perp(p.cone(), t1, u) || !in_perp(p.cone(), t2, u);
      t.expect(v.is_inf() == in_union, "composite at " + str(u) + " disagrees with I ∪ J");
      t.expect(v == po->right_leg(r2.map(u)), "case (3) square does not commute");
      if (!v.is_inf()) finite.emplace_back(u, v);
    }
    for (std::size_t i = 0; i < finite.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        t.expect(finite[i].second != finite[j].second, "composite identifies two survivors");
  }

  // universal property by bounded search.  Cocones with toric legs must
  // always factor; the claim is that every cocone does.
  std::size_t instances = 0, cocones = 0, toric_cocones = 0, unmediated = 0, bad_instances = 0, bad_nonunique = 0;
  const std::vector<PointedMonoid> small{PointedMonoid::trivial(), PointedMonoid::free(1), PointedMonoid::free(2),
                                         PointedMonoid(Cone::from_generators(2, {IntVec{1, 0}, IntVec{1, 2}}))};
  const std::vector<std::pair<PointedMonoid, int>> tests{{PointedMonoid::free(1), 3}, {PointedMonoid::free(2), 1}};
  Tally uni;
  for (int attempt = 0; attempt < 2000 && instances < 24; ++attempt) {
    const PointedMonoid p = g.pick(small), q1 = g.pick(small), q2 = g.pick(small);
    if (p.rank() == 0) continue;
    const PointedMorphism f = g.pointed_morphism(p, q1, 0.3), h = g.pointed_morphism(p, q2, 0.3);
    std::optional<Pushout> po;
    try {
      po.emplace(pushout(f, h));
    } catch (const Error&) {
      continue;
    }
    if (po->object.hilbert_basis().size() > 3) continue;
    ++instances;
    std::size_t missing_here = 0;
    for (const auto& [target, bound] : tests) {
      const auto values = box_elements(target.rank(), bound);
      const auto alphas = all_maps(q1, target, values), betas = all_maps(q2, target, values);
      const auto mediators = all_maps(po->object, target, box_elements(target.rank(), 2 * bound + 1));
      std::size_t taken = 0;
      for (const auto& a : alphas)
        for (const auto& b : betas) {
          if (!agree_on(p, compose(f, a), compose(h, b))) continue;
          const bool toric = a.is_toric() && b.is_toric();
          if (!toric && taken++ >= 12) continue;
          ++cocones;
          toric_cocones += toric;
          std::size_t found = 0;
          for (const auto& m : mediators)
            found += agree_on(q1, compose(po->left_leg, m), a) && agree_on(q2, compose(po->right_leg, m), b);
          t.expect(found <= 1, "cocone with " + std::to_string(found) + " mediating morphisms");
          if (toric) t.expect(found == 1, "toric cocone without a mediating morphism");
          uni.expect(found == 1, "cocone without a mediating morphism");
          missing_here += found == 0;
        }
    }
    if (missing_here) {
      unmediated += missing_here;
      ++bad_instances;
      bad_nonunique += !po->closure_unique;
    }
  }
  t.expect(uni.failures == 0, "universal property fails: " + std::to_string(unmediated) + " of " +
                                  std::to_string(cocones) + " cocones have no mediating morphism, in " +
                                  std::to_string(bad_instances) + " instances (" + std::to_string(bad_nonunique) +
                                  " with a non-unique prime closure)");

  // the diagonal example
  const PointedMonoid n1 = PointedMonoid::free(1), n2 = PointedMonoid::free(2);
  const PointedMorphism diag = PointedMorphism::toric(n1, n2, LatticeMap(1, 2, IntMatrix::from_rows(1, {IntVec{1}, IntVec{1}})));
  const Pushout d = pushout(diag, rees_quotient(n1, full_face(n1.cone())).map);
  t.expect(!d.raw_left.integral && !d.integral(), "diagonal raw quotient not flagged");
  t.expect(d.raw_left.witness.has_value() && d.raw_left.witness->first != IntVec{0, 0} &&
               d.raw_left.witness->second != IntVec{0, 0},
           "diagonal witness missing");

  t.expect(case2 >= 100 && case3 >= 100 && instances >= 20, "too few instances");
  return t.outcome(std::to_string(case2) + " integral case (2) instances (+" + std::to_string(case2_nonintegral) +
                   " flagged non-integral), " + std::to_string(case3) + " case (3) instances, " +
                   std::to_string(instances) + " universal-property instances with " + std::to_string(cocones) +
                   " cocones (" + std::to_string(toric_cocones) + " toric, all mediated uniquely), diagonal flagged");
}

Outcome factorization_uniqueness() {
  Gen g(1004);
  Tally t;
  std::size_t ext = 0, ext_toric = 0;
  for (; ext < 250; ++ext) {
    const PointedMonoid a = g.monoid(), b = g.monoid();
    const ExtConeMorphism f = dualize(g.pointed_morphism(a, b, 0.5));
    const ExtFactorization fa = factorize_ext(f);
    ext_toric += f.is_toric();
    t.expect(fa.toric.is_toric(), "first leg not toric");
    t.expect(compose_ext(fa.toric, fa.inclusion) == f, "legs do not recompose");
    const bool trivial = fa.inclusion == ExtConeMorphism::identity(f.target());
    t.expect(trivial == f.is_toric(), "trivial factorization returned for a non-toric morphism or vice versa");
    if (f.is_toric()) t.expect(fa.toric == f, "toric input not its own first leg");
    for (const auto& gamma : f.target().face_lattice().faces)
      if (gamma.subset_of(f.target_face()))
        t.expect(descend_to_stratum(f, gamma).is_toric() == (gamma == f.target_face()),
                 "a stratum other than the image stratum gives a toric first leg");
  }

  std::size_t cx = 0, cx_toroidal = 0;
  for (; cx < 200; ++cx) {
    const ConeComplex target = g.small_fan(static_cast<std::size_t>(g.uniform(1, 3)));
    const Cone sigma = g.pointed_cone(static_cast<std::size_t>(g.uniform(1, 3)), true);
    const ComplexMorphism f = g.complex_morphism(sigma, target);
    const ComplexFactorization fa = factorize_complex(f);
    cx_toroidal += f.is_toroidal();
    t.expect(fa.toroidal.is_toroidal(), "first leg not toroidal");
    t.expect(compose_complex(fa.toroidal, fa.inclusion) == f, "complex legs do not recompose");
    const bool trivial = fa.inclusion == ComplexMorphism::identity(target);
    t.expect(trivial == f.is_toroidal(), "trivial complex factorization mismatch");
    const ComplexFactorization again = factorize_complex(compose_complex(fa.toroidal, fa.inclusion));
    t.expect(again.gamma == fa.gamma && again.toroidal == fa.toroidal, "factorization not unique");
  }
  t.expect(ext_toric > 0 && ext_toric < ext && cx_toroidal > 0 && cx_toroidal < cx, "corpus lacks one of the kinds");
  return t.outcome(std::to_string(ext) + " extended-cone morphisms (" + std::to_string(ext_toric) + " toric), " +
                   std::to_string(cx) + " complex morphisms (" + std::to_string(cx_toroidal) + " toroidal)");
}

Outcome moduli_enumeration() {
  Tally t;
  std::size_t types = 0, graphs = 0, contractions = 0;
  for (int genus = 0; genus <= 3; ++genus)
    for (int n = 0; n <= 8; ++n) {
      if (2 * genus - 2 + n <= 0 || 3 * genus - 3 + n > 5) continue;
      ++types;
      const std::string type = "(" + std::to_string(genus) + "," + std::to_string(n) + ")";
      const auto a = enumerate_by_splitting(genus, n);
      const auto b = enumerate_by_partition(genus, n);
      std::set<std::string> ka, kb;
      for (const auto& x : a) ka.insert(canonical_key(x));
      for (const auto& x : b) kb.insert(canonical_key(x));
      t.expect(a.size() == b.size() && ka == kb && ka.size() == a.size(), "strategies disagree on " + type);
      graphs += b.size();
      for (const auto& x : b) {
        const std::size_t e = x.num_edges();
        for (unsigned mask = 1; mask < (1u << e); ++mask) {
          std::vector<int> es;
          for (std::size_t i = 0; i < e; ++i)
            if ((mask >> i) & 1) es.push_back(static_cast<int>(i));
          const StableGraph c = contract(x, es).first;
          ++contractions;
          t.expect(kb.count(canonical_key(c)) == 1, "contraction leaves the list for " + type);
        }
      }
    }
  for (auto [genus, n] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 0}}) {
    const std::size_t expect = oracle::stable_graph_count(genus, n);
    t.expect(enumerate_stable_graphs(genus, n).size() == expect,
             "count for (" + std::to_string(genus) + "," + std::to_string(n) + ") differs from the oracle");
  }
  const ModuliAtlas at = moduli_atlas(1, 2);
  for (const auto& arr : at.contractions)
    t.expect(is_isomorphism(contract(at.graphs[arr.source], arr.edges).first, at.graphs[arr.target], arr.iso),
             "atlas arrow is not a contraction");
  return t.outcome(std::to_string(types) + " types, " + std::to_string(graphs) + " classes, " +
                   std::to_string(contractions) + " contractions");
}

Outcome clutching_squares() {
  Gen g(1006);
  Tally t;
  std::vector<ModuliAtlas> atlases;
  for (int genus = 0; genus <= 2; ++genus)
    for (int n = 0; n <= 7; ++n)
      if (2 * genus - 2 + n > 0 && 3 * genus - 3 + n <= 4) atlases.push_back(moduli_atlas(genus, n, false));

  std::size_t clutches = 0, glues = 0, infinite = 0, rees = 0, product = 0;
  auto random_curve = [&](const PointedMonoid& base, std::size_t min_marks) -> std::optional<CombLogCurve> {
    std::vector<const ModuliAtlas*> ok;
    for (const auto& a : atlases)
      if (static_cast<std::size_t>(a.markings) >= min_marks) ok.push_back(&a);
    const ModuliAtlas& a = *ok[static_cast<std::size_t>(g.uniform(0, static_cast<int>(ok.size()) - 1))];
    CombLogCurve x = log_curve_of(g.curve_on(g.pick(a.graphs), base, 0.3));
    for (const auto& nd : x.nodes) infinite += nd.delta.is_inf();
    // sometimes pass through a Rees quotient of the base first
    if (base.rank() > 0 && g.coin(0.3)) {
      const Face tau = g.pick(base.cone().face_lattice().faces);
      const ReesQuotient r = rees_quotient(base, tau);
      t.expect(verify_base_change(x, r.map).pass, "base change square fails");
      x = base_change(x, r.map);
      ++rees;
    }
    return x;
  };

  auto check = [&](const SquareReport& r, int genus, const char* what) {
    t.expect(r.pass, std::string(what) + " square fails: " + r.certificate);
    if (!r.pass || !r.witness) return;
    const auto& iso = *r.witness;
    t.expect(is_isomorphism(r.left.graph, r.right.graph, iso), std::string(what) + " witness is not an isomorphism");
    for (std::size_t e = 0; e < r.left.lengths.size(); ++e)
      t.expect(r.left.lengths[e] == r.right.lengths[static_cast<std::size_t>(iso.edge[e])],
               std::string(what) + " lengths do not match under the witness");
    t.expect(r.left.genus() == genus, std::string(what) + " genus is wrong");
    t.expect(r.left.lengths.back().is_inf() && r.right.lengths.back().is_inf(),
             std::string(what) + " new edge is not at ∞");
  };

  while (clutches + glues < 600) {
    const PointedMonoid b1 = g.monoid(3);
    if (g.coin()) {
      auto x = random_curve(b1, 1);
      const bool prod = g.coin();
      const PointedMonoid b2 = prod ? g.monoid(3) : x->base;
      if (prod && x->base.rank() + b2.rank() > 3) continue;
      auto y = random_curve(b2, 1);
      if (!prod && y->base != x->base) continue;
      product += prod;
      check(verify_clutch(*x, *y, prod ? BaseMode::Product : BaseMode::Shared), x->genus() + y->genus(), "clutch");
      ++clutches;
    } else {
      auto x = random_curve(b1, 2);
      check(verify_glue(*x), x->genus() + 1, "glue");
      ++glues;
    }
  }
  return t.outcome(std::to_string(clutches) + " clutch (" + std::to_string(product) + " over product bases) and " +
                   std::to_string(glues) + " glue squares, " + std::to_string(infinite) + " nodes at ∞, " +
                   std::to_string(rees) + " Rees base changes");
}

Outcome cli_determinism(const Paths& given) {
  Tally t;
  const Paths paths{fs::absolute(given.cli).string(), fs::absolute(given.corpus).string()};
  std::ifstream in(fs::path(paths.corpus) / "commands.txt");
  if (!in) return {false, "cannot read commands.txt in " + paths.corpus};
  const fs::path cache = fs::temp_directory_path() / ("extrop-acceptance-cache-" + std::to_string(::getpid()));
  fs::remove_all(cache);

  std::size_t commands = 0;
  std::map<int, std::size_t> codes;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int expected = 0;
    ls >> expected;
    std::string args;
    std::getline(ls, args);
    const std::string base = "cd '" + paths.corpus + "' && ";
    const std::string cmd = " '" + paths.cli + "'" + args + " 2>/dev/null";
    const RunResult none = run_shell(base + "EXTROP_CACHE_DIR=" + cmd);
    const RunResult cold = run_shell(base + "EXTROP_CACHE_DIR='" + cache.string() + "'" + cmd);
    const RunResult warm = run_shell(base + "EXTROP_CACHE_DIR='" + cache.string() + "'" + cmd);
    ++commands;
    ++codes[none.code];
    t.expect(none.code == expected, "exit " + std::to_string(none.code) + " for" + args);
    t.expect(cold.code == expected && warm.code == expected, "exit code changes with the cache for" + args);
    t.expect(cold.out == none.out && warm.out == none.out, "output changes with the cache for" + args);
  }
  fs::remove_all(cache);
  t.expect(codes[0] > 0 && codes[1] > 0 && codes[2] > 0, "manifest does not cover every exit code");
  return t.outcome(std::to_string(commands) + " commands x 3 runs, exit codes 0/1/2: " + std::to_string(codes[0]) +
                   "/" + std::to_string(codes[1]) + "/" + std::to_string(codes[2]));
}

}  // namespace extrop::acceptance
