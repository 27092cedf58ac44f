/**
 * The four coboundary operators of the full cochain complex and their
 * assembled matrices.
 *
 * Degree bookkeeping: an operator at degree n maps C^n into C^{n+1}. The
 * omega-to-omega and alpha-to-alpha operators are alternating sums over
 * hat-omitted arguments twisted by powers of alpha (alpha^0 = Id); the
 * omega-to-alpha operator is the two-term difference beta o phi - phi o
 * alpha^{x n}; the alpha-to-omega operator is a double sum over index
 * pairs. Composite arguments (alpha^k(x), x_i * x_last, [x_i, x_j]) are
 * expanded to coordinates before the cochain is evaluated.
 *
 * The total differential is
 *   d(phi, psi) = (d_ww phi + d_aw psi, d_wa phi + d_aa psi)   for n >= 2,
 *   d(phi)      = (d_ww phi, d_wa phi)                          for n = 1,
 * and the assembled matrix acts on stacked (omega, alpha) coefficients as
 * the 2x2 block matrix [[M_ww, M_aw], [M_wa, M_aa]].
 */

#ifndef HOMPRELIE_COBOUNDARY_HPP
#define HOMPRELIE_COBOUNDARY_HPP

#include <span>

#include "homprelie/cochain.hpp"
#include "homprelie/representation.hpp"

namespace homprelie {

struct CoboundaryBlocks {
  std::size_t degree = 0;  // source degree n
  Matrix m_ww;             // C^n_w -> C^{n+1}_w
  Matrix m_aa;             // C^n_a -> C^{n+1}_a
  Matrix m_wa;             // C^n_w -> C^{n+1}_a
  Matrix m_aw;             // C^n_a -> C^{n+1}_w

  /** [[M_ww, M_aw], [M_wa, M_aa]] on stacked coefficient vectors. */
  Matrix total() const;
};

/** d_ww applied to the omega part of c (degree n >= 1). The result is the
 *  omega part of a degree n+1 cochain. */
Cochain d_omega_omega(const Representation& r, const Cochain& c);
/** d_aa applied to the alpha part of c (degree n >= 2). */
Cochain d_alpha_alpha(const Representation& r, const Cochain& c);
/** d_wa applied to the omega part of c (degree n >= 1). */
Cochain d_omega_alpha(const Representation& r, const Cochain& c);
/** d_aw applied to the alpha part of c (degree n >= 2). */
Cochain d_alpha_omega(const Representation& r, const Cochain& c);

/** The total differential of c. */
Cochain apply(const Representation& r, const Cochain& c);

/**
 * Assemble all four operator matrices at degree n, column by basis
 * cochain. Columns are independent and are filled in parallel when
 * HOMPRELIE_THREADS allows; output placement is deterministic either way.
 */
CoboundaryBlocks assemble(const Representation& r, std::size_t n);

/**
 * Pointwise evaluation of the operators at arbitrary argument tuples;
 * used by the matrix assembly and directly by tests to confirm the
 * antisymmetry of operator outputs off the increasing tuples.
 */
Vec eval_d_omega_omega(const Representation& r, const Cochain& c, std::span<const Vec> args);
Vec eval_d_alpha_alpha(const Representation& r, const Cochain& c, std::span<const Vec> args);
Vec eval_d_omega_alpha(const Representation& r, const Cochain& c, std::span<const Vec> args);
Vec eval_d_alpha_omega(const Representation& r, const Cochain& c, std::span<const Vec> args);

/** Thread budget for parallel column assembly (HOMPRELIE_THREADS, >= 1). */
std::size_t assembly_threads();

}  // namespace homprelie

#endif
