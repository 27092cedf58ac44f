/**
 * Input documents for the command-line tool. A document is a single JSON
 * object with optional blocks: algebra, representation, cocycle, cocycle2,
 * deformation, gauge, extension. Every numeric entry is an exact rational
 * written as an integer or a "p/q" string; floating-point literals are
 * rejected. Tensors are sparse lists of 1-based [i, j, k, value] rows,
 * matrices are dense row lists.
 */

#ifndef HOMPRELIE_DOCUMENT_HPP
#define HOMPRELIE_DOCUMENT_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "homprelie/deformation.hpp"
#include "homprelie/extension.hpp"

namespace homprelie {

/** Input rejected: malformed syntax or an inconsistent shape. The message
 *  names the offending field. Maps to exit code 2. */
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExtensionBlock {
  AbelianExtension extension;
  std::optional<Matrix> section;
};

struct DeformationBlock {
  std::size_t order = 0;
  std::vector<StructureConstants> omegas;
  std::vector<Matrix> alphas;
};

struct InputDocument {
  std::optional<HomPreLieAlgebra> algebra;
  std::optional<Representation> representation;  // algebra field filled in later
  std::optional<Cocycle2> cocycle;
  std::optional<Cocycle2> cocycle2;
  std::optional<DeformationBlock> deformation;
  std::optional<GaugeTransformation> gauge;
  std::optional<ExtensionBlock> extension;
};

/** Parse a document from JSON text. Throws ParseError. */
InputDocument parse_document(const std::string& text);

/** The required algebra block, or a ParseError naming it. */
const HomPreLieAlgebra& require_algebra(const InputDocument& doc);

/**
 * The representation to compute with: the document's representation block
 * (with the algebra attached), or the regular representation when
 * use_regular is set or no block is present.
 */
Representation resolve_representation(const InputDocument& doc, bool use_regular);

/** The document's deformation block over the document's algebra. */
TruncatedDeformation resolve_deformation(const InputDocument& doc);

}  // namespace homprelie

#endif
