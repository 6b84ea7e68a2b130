// Acceptance harness: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "zinbiel/io.hpp"
#include "zinbiel/verify.hpp"

using namespace zinbiel;
using catalog::Section;

namespace {

int failures = 0;

void report(int num, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("criterion %2d: %s: %s%s%s\n", num, ok ? "PASS" : "FAIL", what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

bool nulfiliform_sweep(std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    for (std::size_t n = 2; n <= 12; ++n) {
        AlgebraTable a = testing::make_named(Section::nulfiliform, "NF", n);
        if (!is_zinbiel(a).holds) {
            detail = "identity fails at n=" + std::to_string(n);
            return false;
        }
        std::vector<std::size_t> want;
        for (std::size_t d = n; d + 1 > 0; --d) want.push_back(d);
        if (series_dims(lower_central_series(a)) != want || nilindex(a) != n + 1 ||
            classify_filiformity(a) != FiliformClass::zero_filiform) {
            detail = "series/classification mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << secs << "s";
    detail = os.str();
    return secs < 10.0;
}

bool filiform_sweep(std::string& detail) {
    for (std::size_t n = 5; n <= 12; ++n) {
        for (const char* name : {"F_n^1", "F_n^2", "F_n^3"}) {
            AlgebraTable a = testing::make_named(Section::filiform, name, n);
            if (!is_zinbiel(a).holds ||
                classify_filiformity(a) != FiliformClass::filiform) {
                detail = std::string(name) + " at n=" + std::to_string(n);
                return false;
            }
            auto dims = series_dims(lower_central_series(a));
            // filiform: dim A^i = n - i for 2 <= i <= n - 1
            for (std::size_t i = 2; i + 1 <= n; ++i)
                if (dims[i - 1] != n - i) {
                    detail = std::string(name) + " dims at n=" + std::to_string(n);
                    return false;
                }
        }
    }
    return true;
}

bool low_dim_list(std::string& detail) {
    for (const auto& f : catalog::list_keys(Section::dim_leq_4)) {
        auto e = catalog::make({f.section, f.name, std::nullopt});
        if (!is_zinbiel(e.table).holds) {
            detail = f.name;
            return false;
        }
    }
    bool match = testing::make_named(Section::nulfiliform, "NF", 4) ==
                 testing::make_named(Section::dim_leq_4, "Z_4^1");
    if (!match) detail = "NF_4 != Z_4^1";
    return match;
}

bool quasi_general(std::string& detail) {
    for (std::size_t n = 8; n <= 12; ++n) {
        for (const auto& f : catalog::list_keys(Section::r2_general)) {
            auto e = catalog::make({Section::r2_general, f.name, n});
            bool ok = is_zinbiel(e.table).holds &&
                      classify_filiformity(e.table) == FiliformClass::quasi_filiform &&
                      e.witness && check_grading_witness(e.table, *e.witness).valid &&
                      detect_type_r(e.table, *e.witness, *e.extra_index) == 2;
            if (!ok) {
                detail = f.name + " at n=" + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

bool annihilator_values(std::string& detail) {
    struct Probe {
        Section sec;
        const char* name;
        bool left;
        std::size_t want;
    };
    const Probe probes[] = {
        {Section::r1_dim5, "KF_5^2", true, 3},
        {Section::r1_dim5, "KF_5^3_corrected", true, 2},
        {Section::r2_dim6, "KF_6^5", false, 1},
        {Section::r2_dim6, "KF_6^6", false, 1},
        {Section::r2_dim6, "KF_6^7", false, 2},
    };
    for (const auto& p : probes) {
        AlgebraTable a = testing::make_named(p.sec, p.name);
        std::size_t got = p.left ? left_annihilator(a).rank() : right_annihilator(a).rank();
        if (got != p.want) {
            detail = std::string(p.name) + ": got " + std::to_string(got);
            return false;
        }
    }
    return true;
}

bool type_three_scope(std::string& detail) {
    for (auto sec : {Section::r3_dim5, Section::r3_dim6, Section::r3_dim7}) {
        for (const auto& f : catalog::list_keys(sec)) {
            auto e = catalog::make({sec, f.name, std::nullopt});
            if (e.table.dim() < 5 || e.table.dim() > 7) {
                detail = f.name + ": dim out of range";
                return false;
            }
            // generic vector of degree-1 basis vectors squares to zero
            Vector x(e.table.dim());
            int fresh = 0;
            for (std::size_t i = 0; i < e.table.dim(); ++i)
                if (e.witness->degrees[i] == 1)
                    x[i] = Scalar::parameter("t" + std::to_string(fresh++));
            if (!is_zero_vector(multiply(e.table, x, x))) {
                detail = f.name + ": degree-1 square nonzero";
                return false;
            }
        }
    }
    for (const auto& f : catalog::list_keys(std::nullopt, true)) {
        if (f.general_n) continue;
        std::optional<catalog::CatalogEntry> e;
        try {
            e = catalog::make({f.section, f.name, std::nullopt});
        } catch (const Error&) {
            continue; // the quarantined duplicate entry
        }
        if (e->profile.type_r && *e->profile.type_r > 3) {
            detail = f.name + ": type above 3";
            return false;
        }
    }
    return true;
}

bool transport_checks(std::string& detail) {
    AlgebraTable nf3 = testing::make_named(Section::nulfiliform, "NF", 3);
    LinearMap half = LinearMap::diagonal({Scalar(1), Scalar(1), Scalar(Rational(1, 2))});
    if (!(transport(nf3, half) == testing::make_named(Section::dim_leq_4, "Z_3^1"))) {
        detail = "NF_3 rescaling";
        return false;
    }
    testing::Rng rng(0x7ea5);
    struct Probe {
        Section sec;
        const char* name;
    };
    const Probe probes[] = {
        {Section::dim_leq_4, "Z_4^8"},    {Section::r1_dim5, "KF_5^2"},
        {Section::r2_dim5, "KF_5^11"},    {Section::r2_dim6, "KF_6^4"},
        {Section::r2_dim7, "KF_7^3"},
    };
    for (const auto& p : probes) {
        AlgebraTable a = testing::make_named(p.sec, p.name);
        Fingerprint fp = fingerprint(a);
        for (int iter = 0; iter < 20; ++iter) {
            LinearMap m = rng.invertible_map(a.dim());
            if (!(fingerprint(transport(a, m)) == fp)) {
                detail = std::string(p.name) + " iter " + std::to_string(iter);
                return false;
            }
        }
    }
    return true;
}

bool anomaly_inventory(std::string& detail) {
    const std::set<std::string> frozen{
        "r1_dim5/KF_5^1",  "r1_dim5/KF_5^2", "r1_dim5/KF_5^3", "r2_dim6/KF_6^5",
        "r2_dim6/KF_6^7",  "r2_dim7/KF_7^1", "r2_dim7/KF_7^5", "r2_dim7/KF_7^6",
    };
    verify::Report rep = verify::verify_catalog();
    auto ids = verify::flagged_ids(rep);
    std::set<std::string> got(ids.begin(), ids.end());
    if (got != frozen) {
        std::ostringstream os;
        os << "flagged:";
        for (const auto& id : got) os << " " << id;
        detail = os.str();
        return false;
    }
    return rep.ok();
}

bool rank_specialization(std::string& detail) {
    testing::Rng rng(0x9a9a);
    Scalar a = Scalar::parameter("a");
    Scalar b = Scalar::parameter("b");
    for (int iter = 0; iter < 100; ++iter) {
        std::size_t n = 2 + rng.next() % 5;
        std::vector<Vector> rows;
        for (std::size_t i = 0; i < n; ++i) {
            Vector row(n);
            for (auto& c : row)
                c = Scalar(rng.rational()) + Scalar(rng.rational()) * a +
                    Scalar(rng.rational()) * b;
            rows.push_back(std::move(row));
        }
        std::size_t generic = echelonize(n, rows).rank();
        std::size_t best = 0;
        for (int s = 0; s < 3; ++s) {
            std::map<std::string, Rational> sigma{
                {"a", Rational(static_cast<long>(rng.next() % 997) + 1, 5)},
                {"b", Rational(static_cast<long>(rng.next() % 991) + 1, 13)}};
            std::vector<Vector> inst;
            for (const auto& row : rows) {
                Vector r(n);
                for (std::size_t c = 0; c < n; ++c) r[c] = Scalar(row[c].eval(sigma));
                inst.push_back(std::move(r));
            }
            std::size_t rk = echelonize(n, inst).rank();
            if (rk > generic) {
                detail = "specialized rank exceeds generic at iter " + std::to_string(iter);
                return false;
            }
            best = std::max(best, rk);
        }
        if (best != generic) {
            detail = "rank drop persists across samples at iter " + std::to_string(iter);
            return false;
        }
    }
    return true;
}

bool roundtrip(std::string& detail) {
    std::size_t count = 0;
    for (const auto& f : catalog::list_keys(std::nullopt, true)) {
        std::vector<std::size_t> ns =
            f.general_n ? std::vector<std::size_t>{f.min_n, f.min_n + 1, f.min_n + 4}
                        : std::vector<std::size_t>{0};
        for (std::size_t n : ns) {
            catalog::CatalogKey key{f.section, f.name,
                                    f.general_n ? std::optional<std::size_t>(n) : std::nullopt};
            std::optional<catalog::CatalogEntry> e;
            try {
                e = catalog::make(key);
            } catch (const Error&) {
                continue;
            }
            std::string once = io::emit_algebra(io::doc_from_entry(*e));
            if (io::emit_algebra(io::load_algebra(once)) != once) {
                detail = key.name;
                return false;
            }
            ++count;
        }
    }
    detail = std::to_string(count) + " documents";
    return count > 0;
}

} // namespace

int main() {
    struct Criterion {
        int num;
        const char* what;
        bool (*run)(std::string&);
    };
    const Criterion criteria[] = {
        {1, "zero-filiform family n=2..12 within budget", nulfiliform_sweep},
        {2, "filiform families n=5..12 series dims", filiform_sweep},
        {3, "dimension <= 4 list holds symbolically; NF_4 matches Z_4^1", low_dim_list},
        {4, "general quasi-filiform families n=8..12", quasi_general},
        {5, "annihilator dimensions quoted in the proofs", annihilator_values},
        {6, "type-3 entries confined to dims 5..7 with abelian degree-1 slice",
         type_three_scope},
        {7, "basis-change transport and fingerprint invariance", transport_checks},
        {8, "anomaly inventory matches the frozen list exactly", anomaly_inventory},
        {9, "generic rank agrees with random specializations", rank_specialization},
        {10, "emit/load round-trip byte-identical across the catalog", roundtrip},
    };
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        report(c.num, c.what, ok, detail);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
