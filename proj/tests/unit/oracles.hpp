#pragma once

// Slow reference implementations used to cross-check the library.  None of
// them calls into the library's algorithms; they only share the data types.

#include "extrop/graphs.hpp"
#include "extrop/arith.hpp"

#include <set>
#include <vector>

namespace extrop::oracle {

/// Determinant by cofactor expansion (tiny matrices only).
Int det(const std::vector<IntVec>& rows);

/// Invariant factors from gcds of k x k minors.
std::vector<Int> invariant_factors(const IntMatrix& m);

/// Faces of a full-dimensional strictly convex cone as sets of ray indices,
/// found from supporting hyperplanes through d-1 independent rays.
std::set<std::vector<std::size_t>> faces(std::size_t rank, const std::vector<IntVec>& rays);

/// Irreducible lattice points of the cone spanned by `rays` inside the box
/// [-bound, bound]^rank (pointed cones only).
std::vector<IntVec> hilbert_basis(std::size_t rank, const std::vector<IntVec>& rays, int bound);

/// Number of automorphisms by trying every vertex permutation, edge
/// permutation and orientation of every edge.
std::size_t automorphism_count(const StableGraph& g);

/// Two graphs are isomorphic (markings fixed), by trying all vertex
/// permutations and comparing multiplicity matrices.
bool isomorphic(const StableGraph& a, const StableGraph& b);

/// Isomorphism classes of connected stable graphs of type (g, n) found by
/// generating every raw graph and comparing pairwise.
std::size_t stable_graph_count(int genus, int markings);

}  // namespace extrop::oracle
