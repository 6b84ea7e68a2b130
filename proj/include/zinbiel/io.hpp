#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zinbiel/catalog.hpp"
#include "zinbiel/morphism.hpp"

namespace zinbiel::io {

/// On-disk algebra document: the structure-constant table plus the
/// optional adapted grading and any anomaly annotations carried along
/// from the catalog (quarantine mode keeps them attached to the data).
struct AlgebraDoc {
    AlgebraTable table;
    std::optional<GradingWitness> grading;
    std::vector<catalog::Anomaly> anomalies;
};

/// Canonical UTF-8 rendering; emit(load(emit(d))) == emit(d) byte for
/// byte.  Schema fields, in order: schema_version, dim, parameters,
/// labels (omitted when empty), products, grading (omitted when absent),
/// anomalies (omitted when empty).  Coefficients are canonical strings
/// in the scalar grammar; product blocks are sorted by (i, j), terms by k.
std::string emit_algebra(const AlgebraDoc& doc);

/// Parses and validates a document.  Duplicate (i, j) product blocks and
/// out-of-range indices raise IllFormedEntry; malformed JSON and bad
/// coefficient strings raise SyntaxError; coefficients may only use
/// parameters declared in the `parameters` field.
AlgebraDoc load_algebra(const std::string& text);

AlgebraDoc doc_from_entry(const catalog::CatalogEntry& entry);

/// Matrix file {dim, parameters, columns}: columns[j] is the image of
/// basis vector e_{j+1}, written in target coordinates.
std::string emit_matrix(const LinearMap& m, const std::vector<std::string>& params = {});
LinearMap load_matrix(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace zinbiel::io
