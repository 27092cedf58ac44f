/**
 * Shared fixtures and random generators for the test and acceptance
 * suites.
 *
 * Nontrivial fixtures are produced by brute-force search over structure
 * constants with entries in {-1, 0, 1}: the published theory contains no
 * worked example algebra, so the searcher below is the oracle that found
 * (and re-derives) the frozen two-dimensional fixture. Random passing
 * algebras are drawn from the same box by rejection; random
 * representations combine the regular one, zero-action ones and direct
 * sums.
 */

#ifndef HOMPRELIE_TEST_FIXTURES_HPP
#define HOMPRELIE_TEST_FIXTURES_HPP

#include <optional>
#include <random>

#include "homprelie/deformation.hpp"
#include "homprelie/representation.hpp"

namespace homprelie::testing {

using Rng = std::mt19937_64;

/** d=1, e*e = e, alpha = id. H^2 vanishes; the algebra is rigid. */
HomPreLieAlgebra idempotent_line();

/** d=1, zero product, alpha = 0. Everything is closed, nothing is exact. */
HomPreLieAlgebra zero_line();

/**
 * The frozen d=2 fixture: e2*e1 = e1, e2*e2 = e2 (all other products
 * zero), alpha = [[1,1],[0,1]]. Noncommutative, alpha invertible and
 * non-diagonal. Lexicographically first such algebra in the search box;
 * see search_two_dim_fixture.
 */
HomPreLieAlgebra two_dim_fixture();

/**
 * Exhaustive search over all d=2 structure constants and alpha entries in
 * {-1, 0, 1}: returns the lexicographically first passing algebra with a
 * noncommutative product and invertible, non-diagonal alpha.
 */
HomPreLieAlgebra search_two_dim_fixture();

/** Small random rational with numerator in [-3, 3], denominator in {1,2,3}. */
Scalar random_rational(Rng& rng);

/** Random d x d matrix over the {-1,0,1} box with the given fill rate. */
Matrix random_box_matrix(Rng& rng, std::size_t rows, std::size_t cols, double fill);

/**
 * Rejection-sample a passing Hom-pre-Lie algebra with entries in
 * {-1, 0, 1}. Sparsity keeps the acceptance rate workable at d = 3.
 * Returns nullopt if no sample passes within `attempts` tries.
 */
std::optional<HomPreLieAlgebra> random_passing_algebra(Rng& rng, std::size_t d,
                                                       std::size_t attempts = 20000);

/** As above but falls back to a curated passing algebra, never empty. */
HomPreLieAlgebra random_passing_algebra_always(Rng& rng, std::size_t d);

/** rho = mu = 0 with a random box beta: passes for every algebra. */
Representation zero_action_representation(Rng& rng, const HomPreLieAlgebra& a, std::size_t m);

/** Componentwise direct sum of two representations of the same algebra. */
Representation direct_sum(const Representation& r1, const Representation& r2);

/**
 * A random passing representation for the acceptance corpus: the regular
 * one, a zero-action one, or a direct sum truncated to m <= 3.
 */
Representation random_representation(Rng& rng, const HomPreLieAlgebra& a);

/** Random cochain with small rational coefficients. */
Cochain random_cochain(Rng& rng, std::size_t degree, std::size_t d, std::size_t m);

/** Random element of Z^2 as a span of the kernel basis of the assembled
 *  degree-2 differential. */
Cochain random_cocycle2(Rng& rng, const Representation& r);

/** Random gauge with matrices over the box, Id + phi_1 t + ... + phi_k t^k. */
GaugeTransformation random_gauge(Rng& rng, std::size_t d, std::size_t k);

/** Order-1 deformation sampled from Z^2 of the regular representation. */
TruncatedDeformation random_order1_deformation(Rng& rng, const HomPreLieAlgebra& a);

/** Verified order-k deformation built by gauging the zero deformation. */
TruncatedDeformation random_gauged_zero_deformation(Rng& rng, const HomPreLieAlgebra& a,
                                                    std::size_t k);

}  // namespace homprelie::testing

#endif
