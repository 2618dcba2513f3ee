#pragma once

// Pointed toric monoids P∞ with P = σ∨ ∩ M, their prime and monomial ideals,
// Rees quotients, morphisms in factored form, and pushouts.

#include "extrop/cones.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace extrop {

/// An element of P∞: a lattice point of P, or the absorbing element.
struct MonoidElement {
  std::optional<IntVec> value;  ///< nullopt is ∞

  static MonoidElement inf() { return {}; }
  static MonoidElement of(IntVec v) { return {std::move(v)}; }
  bool is_inf() const { return !value.has_value(); }
  const IntVec& vec() const;  ///< throws on ∞
  auto operator<=>(const MonoidElement&) const = default;
};

std::string to_string(const MonoidElement& e);
MonoidElement operator+(const MonoidElement& a, const MonoidElement& b);

/// P∞ for P = σ∨ ∩ M, σ strictly convex in N = Z^rank.
class PointedMonoid {
 public:
  PointedMonoid();  ///< {0, ∞}
  explicit PointedMonoid(Cone sigma);

  static PointedMonoid free(std::size_t rank);  ///< (N^rank)∞
  static PointedMonoid trivial();               ///< {0, ∞}

  const Cone& cone() const { return sigma_; }
  const Cone& dual() const { return dual_; }
  std::size_t rank() const { return sigma_.rank(); }
  /// Minimal generators of P, sorted.
  const std::vector<IntVec>& hilbert_basis() const { return dual_.hilbert_basis(); }

  bool contains(const IntVec& u) const { return dual_.contains(u); }
  bool contains(const MonoidElement& e) const { return e.is_inf() || contains(*e.value); }
  bool is_unit(const IntVec& u) const;
  /// u - v in P.
  bool divides(const IntVec& v, const IntVec& u) const;

  bool operator==(const PointedMonoid& other) const { return sigma_ == other.sigma_; }
  bool operator!=(const PointedMonoid& other) const { return !(*this == other); }

 private:
  Cone sigma_;
  Cone dual_;
};

/// Monomial ideal of P∞ (∞ implicitly included); generators form the minimal
/// antichain under divisibility, sorted.
struct MonomialIdeal {
  std::vector<IntVec> gens;
  bool operator==(const MonomialIdeal&) const = default;
};

/// Reduces generators to the minimal antichain.  Throws if a generator lies
/// outside P or is a unit.
MonomialIdeal make_ideal(const PointedMonoid& m, const std::vector<IntVec>& gens);
bool ideal_contains(const PointedMonoid& m, const MonomialIdeal& i, const IntVec& x);
bool ideal_contains(const PointedMonoid& m, const MonomialIdeal& i, const MonoidElement& x);
bool ideal_subset(const PointedMonoid& m, const MonomialIdeal& a, const MonomialIdeal& b);

/// 𝔭_τ = P - τ^⊥.
MonomialIdeal prime_of_face(const PointedMonoid& m, const Face& tau);
/// Face cut out by the generators outside the ideal; throws if the ideal is
/// not prime.
Face face_of_prime(const PointedMonoid& m, const MonomialIdeal& p);
bool is_prime(const PointedMonoid& m, const MonomialIdeal& i);
/// x, y outside the ideal with x + y inside, if the ideal is not prime.
std::optional<std::pair<IntVec, IntVec>> primality_witness(const PointedMonoid& m, const MonomialIdeal& i);
/// u lies in τ^⊥.
bool in_perp(const Cone& sigma, const Face& tau, const IntVec& u);

/// Primes containing an ideal correspond to faces ω with I ⊆ 𝔭_ω.  We return
/// the prime of the join of the minimal such faces; `unique` records whether
/// there was only one.
struct PrimeClosure {
  MonomialIdeal prime;
  Face face;
  std::vector<Face> minimal_faces;
  bool unique = true;
};

PrimeClosure prime_closure(const PointedMonoid& m, const MonomialIdeal& i);

/// Morphism P∞ -> Q∞ in factored form: f(u) = ∞ for u outside τ^⊥, and
/// f(u) = T(s^T u) otherwise, where s is the section of N -> N(τ) so that
/// s^T identifies τ^⊥ with M(τ).
class PointedMorphism {
 public:
  /// Throws InvalidArgument unless T sends (σ/τ)∨ ∩ M(τ) into Q.
  PointedMorphism(PointedMonoid source, PointedMonoid target, Face kernel_face, LatticeMap toric_part);

  static PointedMorphism identity(const PointedMonoid& m);
  static PointedMorphism toric(const PointedMonoid& source, const PointedMonoid& target, LatticeMap t);
  /// The unique morphism with the given images of the source Hilbert basis,
  /// if one exists.
  static std::optional<PointedMorphism> from_generator_images(const PointedMonoid& source,
                                                               const PointedMonoid& target,
                                                               const std::vector<MonoidElement>& images);

  const PointedMonoid& source() const { return source_; }
  const PointedMonoid& target() const { return target_; }
  const Face& kernel_face() const { return kernel_face_; }
  const LatticeMap& toric_part() const { return toric_part_; }
  /// σ/τ with its projection and section.
  const ConeQuotient& quotient() const { return quotient_; }

  bool is_toric() const { return kernel_face_.rays.empty(); }
  MonoidElement operator()(const MonoidElement& u) const;
  MonoidElement operator()(const IntVec& u) const;
  /// Images of the source Hilbert basis.
  std::vector<MonoidElement> generator_images() const;

  bool operator==(const PointedMorphism& other) const;
  bool operator!=(const PointedMorphism& other) const { return !(*this == other); }

 private:
  PointedMonoid source_;
  PointedMonoid target_;
  Face kernel_face_;
  LatticeMap toric_part_;
  ConeQuotient quotient_;
};

/// g after f.
PointedMorphism compose(const PointedMorphism& f, const PointedMorphism& g);

/// P∞ -> P∞/𝔭_τ = (τ^⊥ ∩ P)∞, realised as the monoid of σ/τ.
struct ReesQuotient {
  PointedMonoid quotient;
  PointedMorphism map;
};

ReesQuotient rees_quotient(const PointedMonoid& m, const Face& tau);
ReesQuotient rees_quotient(const PointedMonoid& m, const MonomialIdeal& prime);

/// f = toric ∘ rees.map with toric purely toric.
struct Factorization {
  ReesQuotient rees;
  PointedMorphism toric;
};

Factorization factorize_morphism(const PointedMorphism& f);

/// Element-wise Rees quotient Q∞/(ideal), before any toric reflection.
struct RawReesQuotient {
  MonomialIdeal ideal;
  bool integral = true;
  std::optional<std::pair<IntVec, IntVec>> witness;
};

struct Pushout {
  PointedMonoid object;
  PointedMorphism left_leg;   ///< target(f) -> object
  PointedMorphism right_leg;  ///< target(g) -> object
  Face kernel;                ///< face of the common source killed by both composites
  RawReesQuotient raw_left;
  RawReesQuotient raw_right;
  bool closure_unique = true;

  bool integral() const { return raw_left.integral && raw_right.integral; }
};

/// (P × P')∞ with the inclusions u -> (u, 0) and u' -> (0, u').
struct ProductMonoid {
  PointedMonoid monoid;
  PointedMorphism left;
  PointedMorphism right;
};

ProductMonoid product_monoid(const PointedMonoid& a, const PointedMonoid& b);

/// Pushout of f: P∞ -> Q∞ and g: P∞ -> Q'∞ in the toric category (toric
/// reflection when a raw Rees quotient fails to be integral).  Throws Error
/// when an ideal to be collapsed contains a unit.
Pushout pushout(const PointedMorphism& f, const PointedMorphism& g);

}  // namespace extrop
