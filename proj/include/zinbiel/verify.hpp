#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zinbiel/catalog.hpp"

namespace zinbiel::verify {

enum class Verdict { pass, fail, anomaly, unresolved };
const char* verdict_name(Verdict v);

struct Check {
    std::string name;
    Verdict verdict = Verdict::pass;
    std::string detail;
};

struct EntryReport {
    catalog::CatalogKey key;
    std::string id; // "section/name" or "section/name n=K"
    std::vector<Check> checks;
    std::vector<catalog::Anomaly> anomalies; // documented annotations, echoed
};

struct Report {
    std::vector<EntryReport> entries;
    std::size_t pass_count = 0;
    std::size_t fail_count = 0;
    std::size_t anomaly_count = 0;
    std::size_t unresolved_count = 0;

    /// True when no check failed; anomalies and unresolved pairs do not
    /// poison the summary.
    bool ok() const { return fail_count == 0; }
};

/// Runs every check for every catalog entry (general families swept up to
/// max_n): defining identity, central series and nilindex, filiform
/// classification, grading witness, type detection, quoted annihilator
/// dimensions, and fingerprint separation inside each section's list.
/// Documented anomalies come back as ANOMALY; fingerprint ties inside a
/// list come back as UNRESOLVED.  Deterministic ordering throughout.
Report verify_catalog(std::optional<catalog::Section> section = std::nullopt,
                      std::size_t max_n = 10);

/// Ids of entries carrying at least one ANOMALY verdict, in report order.
std::vector<std::string> flagged_ids(const Report& report);

std::string render_text(const Report& report);
std::string render_json(const Report& report); // canonical machine rendering

} // namespace zinbiel::verify
