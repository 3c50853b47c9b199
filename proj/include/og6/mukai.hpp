#pragma once

// Mukai vectors on an abelian surface, the complement of a square-2 vector,
// the OG6 lattice U^3+(-2)^2 built from it, the maps phi and varrho, and the
// generation of O+(U^3+(-2)^2) by the embedded O+(w-perp) and R_{zeta+eps}.

#include "og6/isometry.hpp"
#include "og6/lattice.hpp"

#include <optional>

namespace og6 {

/// (r, c, s) with c in U^3 with basis (e1,f1,e2,f2,e3,f3).
struct MukaiVector {
  Integer r;
  IntVector c;
  Integer s;

  bool operator==(const MukaiVector& other) const;
};

MukaiVector mukai_vector(long r, std::initializer_list<long> c, long s);
/// Untagged rank-8 lattice in coordinates (r, c, s), pairing c.c' - r s' - s r'.
LatticePtr mukai_lattice();
LatticePtr h2_lattice();  // U^3
LatticeVector to_lattice_vector(const MukaiVector& x);
MukaiVector to_mukai(const LatticeVector& v);

Integer mukai_pairing(const MukaiVector& x, const MukaiVector& y);
Integer mukai_square(const MukaiVector& x);

/// Saturated complement of w in the Mukai lattice. For w = (1,0,-1) the
/// basis is (e1,...,f3, zeta) with zeta = (1,0,1), Gram U^3+(-2).
/// NotPrimitive if w is not primitive.
Sublattice w_perp(const MukaiVector& w);

struct OG6Lattice {
  LatticePtr lattice;  // w_perp + Z eps, eps the last basis vector
  Sublattice complement;
  MukaiVector w;
};
/// SquareNotTwo unless w^2 = 2.
OG6Lattice og6_from_w(const MukaiVector& w);
LatticePtr og6_lattice();  // U^3+(-2)^2, basis (e1,f1,e2,f2,e3,f3,zeta,eps)

/// (r, ae+bf+alpha, s) -> (-a, re-(s+a)f+alpha, r+b) on (1,0,-1)-perp, with
/// e = e1, f = f1. NotInDomain if r != s.
MukaiVector phi(const MukaiVector& x);
/// (r, alpha, s) -> (-s, PD(alpha), -r). PDNotIsometry if pd is not an
/// isometry of U^3.
MukaiVector varrho(const MukaiVector& x, const IntMatrix& pd);
MukaiVector varrho(const MukaiVector& x);

/// Identity on U^3 and -1 on zeta, as an isometry of U^3+(-2).
Isometry det_minus_one_witness();

/// The unique isometry of the Mukai lattice fixing (1,0,-1) and restricting
/// to gamma on its complement (basis as in w_perp).
Isometry extend_from_w_perp(const Isometry& gamma);

/// For an isometry fixing (1,0,-1): the image of (1,0,1) written as
/// (2m+1, 2 alpha, 2m+1), or nothing if it is not of that shape.
struct ZetaImage {
  Integer m;
  IntVector alpha;
};
std::optional<ZetaImage> zeta_image(const Isometry& extended);

/// The reflection R_{zeta+eps} on U^3+(-2)^2.
Isometry reflection_zeta_eps(const LatticePtr& og6);

/// A word of ReflectionAtom(zeta+eps) and OpaqueAtom factors fixing eps
/// that evaluates to g. NotInOPlus if g does not preserve the positive cone.
IsometryWord decompose_monodromy(const Isometry& g);
bool is_monodromy(const Isometry& g);

}  // namespace og6
