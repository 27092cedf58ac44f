/**
 * Abelian extensions of a Hom-pre-Lie algebra (A, *, alpha) by (V, beta):
 * construction from a 2-cocycle on the direct sum A (+) V, extraction of
 * the defining data from an extension through a section, and the
 * classification of extensions by second cohomology.
 *
 * Extensions built here live in split coordinates (A first, V second);
 * foreign extensions may arrive in arbitrary coordinates and are handled
 * through their iota / proj / section matrices only.
 */

#ifndef HOMPRELIE_EXTENSION_HPP
#define HOMPRELIE_EXTENSION_HPP

#include <optional>

#include "homprelie/cohomology.hpp"

namespace homprelie {

/** (theta, xi) data of a degree-2 cochain: theta: A (x) A -> V,
 *  xi: A -> V. */
struct Cocycle2 {
  std::size_t adim = 0;  // d
  std::size_t vdim = 0;  // m
  std::vector<Scalar> theta;  // d*d*m, theta(e_i, e_j) = sum_v theta[(i*d+j)*m+v] f_v
  Matrix xi;                  // m x d

  Scalar& theta_at(std::size_t i, std::size_t j, std::size_t v) {
    return theta[(i * adim + j) * vdim + v];
  }
  const Scalar& theta_at(std::size_t i, std::size_t j, std::size_t v) const {
    return theta[(i * adim + j) * vdim + v];
  }

  Cochain as_cochain() const;
  static Cocycle2 from_cochain(const Cochain& c);
};

struct AbelianExtension {
  HomPreLieAlgebra total;  // algebra on a (d+m)-dimensional space
  Matrix iota;             // (d+m) x m
  Matrix proj;             // d x (d+m)
};

struct SectionData {
  Matrix s;  // (d+m) x d with proj * s = Id
};

/**
 * The extension defined by a cocycle candidate:
 *   (x+u) o (y+v) = x*y + theta(x,y) + rho(x)v + mu(y)u,
 *   twist(x+u)    = alpha(x) + xi(x) + beta(u),
 * with the canonical injection and projection. The total algebra passes
 * the Hom-pre-Lie axioms exactly when (theta, xi) is a 2-cocycle.
 */
AbelianExtension build(const HomPreLieAlgebra& a, const Representation& r, const Cocycle2& c);

struct ExtractedData {
  Cocycle2 cocycle;
  Representation representation;  // (V, beta, rho, mu) read off the extension
};

/**
 * Read (theta, xi, rho, mu, beta) off an extension through a section:
 * theta(x,y) = s(x) o s(y) - s(x*y), xi(x) = twist(s(x)) - s(alpha(x)),
 * rho(x)u = s(x) o iota(u), mu(x)u = iota(u) o s(x), and beta is the
 * restriction of the twisting map to iota(V). Throws when s is not a
 * section or when any of these fail to land in iota(V).
 */
ExtractedData extract(const AbelianExtension& e, const HomPreLieAlgebra& a, const SectionData& s);

struct IsomorphismWitness {
  Matrix zeta;  // (d+m) x (d+m), zeta(x+u) = x + u + phi(x)
  Matrix phi;   // m x d
};

/**
 * Decide whether build(c1) and build(c2) are isomorphic as extensions:
 * solve theta1 - theta2 = d_ww(phi), xi1 - xi2 = d_wa(phi) jointly, and
 * on success verify that zeta intertwines the two products and twists and
 * commutes with iota and proj. nullopt iff the classes differ.
 */
std::optional<IsomorphismWitness> classify(const HomPreLieAlgebra& a, const Representation& r,
                                           const Cocycle2& c1, const Cocycle2& c2);

/**
 * Check the abelian-extension invariants against the base algebra:
 * exactness of 0 -> V -> total -> A -> 0, the abelian-ideal condition
 * iota(u) o iota(v) = 0, the morphism conditions for iota and proj, and
 * the Hom-pre-Lie axioms of the total algebra itself.
 */
AxiomReport is_abelian_extension(const AbelianExtension& e, const HomPreLieAlgebra& a);

/** A linear section of proj by the deterministic solve convention;
 *  throws if proj is not surjective. */
SectionData section_exists(const AbelianExtension& e);

}  // namespace homprelie

#endif
