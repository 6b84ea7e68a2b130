#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zinbiel/structure.hpp"

namespace zinbiel::catalog {

enum class Section {
    dim_leq_4,
    nulfiliform,
    filiform,
    r1_general,
    r1_dim5,
    r2_general,
    r2_dim5,
    r2_dim6,
    r2_dim7,
    r3_dim5,
    r3_dim6,
    r3_dim7,
};

const char* section_name(Section s);
std::optional<Section> section_from_name(const std::string& name);

/// (section, name, n) identifies an entry; names repeat across sections
/// (KF_5^1 exists in both the r1 and r2 five-dimensional lists).
struct CatalogKey {
    Section section;
    std::string name;
    std::optional<std::size_t> n; // required for general-n families
};

struct Anomaly {
    std::string location;
    std::string description;
};

/// What the source lists claim about an entry, fixed at transcription
/// time; non-anomalous profiles must be reproduced by the analyses.
struct ExpectedProfile {
    bool zinbiel_holds = true;
    FiliformClass filiform_class = FiliformClass::other;
    std::size_t nilindex = 0;
    std::vector<std::size_t> lcs_dims;
    std::optional<std::size_t> type_r;
    bool witness_valid = true; // false when an anomaly breaks the grading
    std::optional<std::size_t> left_ann_dim;  // quoted in the proofs
    std::optional<std::size_t> right_ann_dim; // quoted in the proofs
    std::vector<Anomaly> anomalies;
};

struct CatalogEntry {
    CatalogKey key;
    AlgebraTable table;
    ExpectedProfile profile;
    std::optional<GradingWitness> witness;
    std::optional<std::size_t> extra_index; // designated e_n for type detection
};

struct FamilySpec {
    Section section;
    std::string name;
    bool general_n = false;    // entry is a family over n >= min_n
    std::size_t min_n = 0;
    std::vector<std::string> params;
    bool companion = false;    // corrected companion for checker tests,
                               // not part of the transcribed lists
};

/// All families in source-list order (companions trail their
/// primaries and are excluded from default listings).
const std::vector<FamilySpec>& families();

/// Keys in source-list order, optionally restricted to one section; companions
/// included only when asked.
std::vector<FamilySpec> list_keys(std::optional<Section> filter = std::nullopt,
                                  bool include_companions = false);

/// Builds the entry exactly as printed, symbolically in its parameters by
/// default; a complete parameter assignment instantiates the table.
CatalogEntry make(const CatalogKey& key,
                  const std::map<std::string, Rational>& assignment = {});

} // namespace zinbiel::catalog
