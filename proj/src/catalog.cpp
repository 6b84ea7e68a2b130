#include "zinbiel/catalog.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace zinbiel::catalog {

const char* section_name(Section s) {
    switch (s) {
    case Section::dim_leq_4: return "dim_leq_4";
    case Section::nulfiliform: return "nulfiliform";
    case Section::filiform: return "filiform";
    case Section::r1_general: return "r1_general";
    case Section::r1_dim5: return "r1_dim5";
    case Section::r2_general: return "r2_general";
    case Section::r2_dim5: return "r2_dim5";
    case Section::r2_dim6: return "r2_dim6";
    case Section::r2_dim7: return "r2_dim7";
    case Section::r3_dim5: return "r3_dim5";
    case Section::r3_dim6: return "r3_dim6";
    case Section::r3_dim7: return "r3_dim7";
    }
    return "?";
}

std::optional<Section> section_from_name(const std::string& name) {
    static const std::vector<Section> all{
        Section::dim_leq_4, Section::nulfiliform, Section::filiform,
        Section::r1_general, Section::r1_dim5,    Section::r2_general,
        Section::r2_dim5,   Section::r2_dim6,    Section::r2_dim7,
        Section::r3_dim5,   Section::r3_dim6,    Section::r3_dim7};
    for (Section s : all)
        if (name == section_name(s)) return s;
    return std::nullopt;
}

namespace {

using FC = FiliformClass;

/// Transcription helper: rejects a second definition of the same product
/// block, which is how duplicated table lines surface as IllFormedEntry.
struct TableBuilder {
    AlgebraTable table;
    std::set<std::string> params;
    std::set<std::pair<std::size_t, std::size_t>> defined;

    TableBuilder(std::size_t n, std::vector<std::string> ps = {})
        : table(n, ps), params(ps.begin(), ps.end()) {}

    TableBuilder& p(std::size_t i, std::size_t j,
                    std::initializer_list<std::pair<std::size_t, const char*>> terms) {
        if (!defined.insert({i, j}).second)
            throw Error(ErrorCode::IllFormedEntry,
                        "product e_" + std::to_string(i) + "*e_" + std::to_string(j) +
                            " is assigned twice");
        for (const auto& [k, coeff] : terms)
            table.set(i, j, k, parse_scalar(coeff, params));
        return *this;
    }

    /// e_i o e_j = C(i+j-1, j) e_{i+j} for 2 <= i+j <= upto.
    TableBuilder& nf_block(std::size_t upto) {
        for (std::size_t i = 1; i <= upto; ++i)
            for (std::size_t j = 1; i + j <= upto; ++j) {
                if (!defined.insert({i, j}).second)
                    throw Error(ErrorCode::IllFormedEntry, "nf block collides");
                table.set(i, j, i + j, Scalar(binomial(i + j - 1, j)));
            }
        return *this;
    }
};

std::vector<std::size_t> countdown(std::size_t from) {
    std::vector<std::size_t> v;
    for (std::size_t d = from + 1; d-- > 0;) v.push_back(d);
    return v;
}

// (n, n-2, n-4, n-5, ..., 1, 0): the series shape shared by the type-2
// quasi-filiform families.
std::vector<std::size_t> r2_dims(std::size_t n) {
    std::vector<std::size_t> v{n, n - 2};
    for (std::size_t d = n - 4; d + 1 > 0; --d) {
        v.push_back(d);
        if (d == 0) break;
    }
    return v;
}

// (n, n-3, n-4, ..., 1, 0).
std::vector<std::size_t> r1_dims(std::size_t n) {
    std::vector<std::size_t> v{n};
    for (std::size_t d = n - 3; ; --d) {
        v.push_back(d);
        if (d == 0) break;
    }
    return v;
}

// (n, n-2, n-3, ..., 1, 0).
std::vector<std::size_t> fil_dims(std::size_t n) {
    std::vector<std::size_t> v{n};
    for (std::size_t d = n - 2; ; --d) {
        v.push_back(d);
        if (d == 0) break;
    }
    return v;
}

GradingWitness chain_witness(std::size_t n) {
    GradingWitness w;
    for (std::size_t i = 1; i <= n; ++i) w.degrees.push_back(i);
    return w;
}

ExpectedProfile profile(bool zinbiel, FC cls, std::vector<std::size_t> dims,
                        std::optional<std::size_t> type_r = std::nullopt) {
    ExpectedProfile p;
    p.zinbiel_holds = zinbiel;
    p.filiform_class = cls;
    p.lcs_dims = std::move(dims);
    p.nilindex = p.lcs_dims.size();
    p.type_r = type_r;
    return p;
}

struct FamilyDef {
    FamilySpec spec;
    std::function<CatalogEntry(std::size_t)> build; // argument unused for fixed entries
};

CatalogEntry entry(const FamilySpec& spec, std::size_t n, TableBuilder&& tb,
                   ExpectedProfile prof, std::optional<GradingWitness> witness = {},
                   std::optional<std::size_t> extra = {}) {
    CatalogKey key{spec.section, spec.name,
                   spec.general_n ? std::optional<std::size_t>(n) : std::nullopt};
    return CatalogEntry{key, std::move(tb.table), std::move(prof), std::move(witness), extra};
}

std::vector<FamilyDef> build_registry() {
    std::vector<FamilyDef> defs;

    auto add = [&](Section sec, std::string name, bool general, std::size_t min_n,
                   std::vector<std::string> params, bool companion,
                   std::function<CatalogEntry(std::size_t)> build) {
        defs.push_back(FamilyDef{
            FamilySpec{sec, std::move(name), general, min_n, std::move(params), companion},
            std::move(build)});
    };

    auto fixed = [&](Section sec, const std::string& name, std::vector<std::string> params,
                     std::function<CatalogEntry(const FamilySpec&)> build) {
        add(sec, name, false, 0, params, false,
            [build, sec, name, params](std::size_t) {
                return build(FamilySpec{sec, name, false, 0, params, false});
            });
    };
    auto companion = [&](Section sec, const std::string& name,
                         std::function<CatalogEntry(const FamilySpec&)> build) {
        add(sec, name, false, 0, {}, true, [build, sec, name](std::size_t) {
            return build(FamilySpec{sec, name, false, 0, {}, true});
        });
    };

    // ---- dimension <= 4 ----------------------------------------------
    fixed(Section::dim_leq_4, "Z_1^1", {}, [](const FamilySpec& s) {
        return entry(s, 1, TableBuilder(1), profile(true, FC::zero_filiform, {1, 0}));
    });
    fixed(Section::dim_leq_4, "Z_2^1", {}, [](const FamilySpec& s) {
        TableBuilder tb(2);
        tb.p(1, 1, {{2, "1"}});
        return entry(s, 2, std::move(tb), profile(true, FC::zero_filiform, {2, 1, 0}));
    });
    fixed(Section::dim_leq_4, "Z_3^1", {}, [](const FamilySpec& s) {
        TableBuilder tb(3);
        tb.p(1, 1, {{2, "1"}}).p(1, 2, {{3, "1/2"}}).p(2, 1, {{3, "1"}});
        return entry(s, 3, std::move(tb), profile(true, FC::zero_filiform, {3, 2, 1, 0}));
    });
    fixed(Section::dim_leq_4, "Z_3^2", {}, [](const FamilySpec& s) {
        TableBuilder tb(3);
        tb.p(1, 2, {{3, "1"}}).p(2, 1, {{3, "-1"}});
        return entry(s, 3, std::move(tb), profile(true, FC::filiform, {3, 1, 0}));
    });
    fixed(Section::dim_leq_4, "Z_3^3", {"alpha"}, [](const FamilySpec& s) {
        TableBuilder tb(3, {"alpha"});
        tb.p(1, 1, {{3, "1"}}).p(1, 2, {{3, "1"}}).p(2, 2, {{3, "alpha"}});
        return entry(s, 3, std::move(tb), profile(true, FC::filiform, {3, 1, 0}));
    });
    fixed(Section::dim_leq_4, "Z_3^4", {}, [](const FamilySpec& s) {
        TableBuilder tb(3);
        tb.p(1, 1, {{3, "1"}}).p(1, 2, {{3, "1"}}).p(2, 1, {{3, "1"}});
        return entry(s, 3, std::move(tb), profile(true, FC::filiform, {3, 1, 0}));
    });
    fixed(Section::dim_leq_4, "Z_4^1", {}, [](const FamilySpec& s) {
        TableBuilder tb(4);
        tb.p(1, 1, {{2, "1"}}).p(1, 2, {{3, "1"}}).p(2, 1, {{3, "2"}});
        tb.p(1, 3, {{4, "1"}}).p(2, 2, {{4, "3"}}).p(3, 1, {{4, "3"}});
        return entry(s, 4, std::move(tb), profile(true, FC::zero_filiform, {4, 3, 2, 1, 0}));
    });
    fixed(Section::dim_leq_4, "Z_4^2", {}, [](const FamilySpec& s) {
        TableBuilder tb(4);
        tb.p(1, 1, {{3, "1"}}).p(1, 2, {{4, "1"}}).p(1, 3, {{4, "1"}}).p(3, 1, {{4, "2"}});
        return entry(s, 4, std::move(tb), profile(true, FC::filiform, {4, 2, 1, 0}));
    });
    fixed(Section::dim_leq_4, "Z_4^3", {}, [](const FamilySpec& s) {
        TableBuilder tb(4);
        tb.p(1, 1, {{3, "1"}}).p(1, 3, {{4, "1"}}).p(2, 2, {{4, "1"}}).p(3, 1, {{4, "2"}});
        return entry(s, 4, std::move(tb), profile(true, FC::filiform, {4, 2, 1, 0}));
    });
    fixed(Section::dim_leq_4, "Z_4^4", {}, [](const FamilySpec& s) {
        TableBuilder tb(4);
        tb.p(1, 2, {{3, "1"}}).p(1, 3, {{4, "1"}}).p(2, 1, {{3, "-1"}});
        return entry(s, 4, std::move(tb), profile(true, FC::filiform, {4, 2, 1, 0}));
    });
    fixed(Section::dim_leq_4, "Z_4^5", {}, [](const FamilySpec& s) {
        TableBuilder tb(4);
        tb.p(1, 2, {{3, "1"}}).p(1, 3, {{4, "1"}}).p(2, 1, {{3, "-1"}}).p(2, 2, {{4, "1"}});
        return entry(s, 4, std::move(tb), profile(true, FC::filiform, {4, 2, 1, 0}));
    });
    fixed(Section::dim_leq_4, "Z_4^6", {}, [](const FamilySpec& s) {
        TableBuilder tb(4);
        tb.p(1, 1, {{4, "1"}}).p(1, 2, {{3, "1"}}).p(2, 1, {{3, "-1"}});
        tb.p(2, 2, {{3, "-2"}, {4, "1"}});
        return entry(s, 4, std::move(tb), profile(true, FC::quasi_filiform, {4, 2, 0}));
    });
    fixed(Section::dim_leq_4, "Z_4^7", {}, [](const FamilySpec& s) {
        TableBuilder tb(4);
        tb.p(1, 2, {{3, "1"}}).p(2, 1, {{4, "1"}}).p(2, 2, {{3, "-1"}});
        return entry(s, 4, std::move(tb), profile(true, FC::quasi_filiform, {4, 2, 0}));
    });
    fixed(Section::dim_leq_4, "Z_4^8", {"alpha"}, [](const FamilySpec& s) {
        TableBuilder tb(4, {"alpha"});
        tb.p(1, 1, {{3, "1"}}).p(1, 2, {{4, "1"}}).p(2, 1, {{3, "-alpha"}}).p(2, 2, {{4, "-1"}});
        return entry(s, 4, std::move(tb), profile(true, FC::quasi_filiform, {4, 2, 0}));
    });
    fixed(Section::dim_leq_4, "Z_4^9", {"alpha"}, [](const FamilySpec& s) {
        TableBuilder tb(4, {"alpha"});
        tb.p(1, 1, {{4, "1"}}).p(1, 2, {{4, "alpha"}}).p(2, 1, {{4, "-alpha"}});
        tb.p(2, 2, {{4, "1"}}).p(3, 3, {{4, "1"}});
        return entry(s, 4, std::move(tb), profile(true, FC::quasi_filiform, {4, 1, 0}));
    });
    fixed(Section::dim_leq_4, "Z_4^10", {}, [](const FamilySpec& s) {
        TableBuilder tb(4);
        tb.p(1, 2, {{4, "1"}}).p(1, 3, {{4, "1"}}).p(2, 1, {{4, "-1"}});
        tb.p(2, 2, {{4, "1"}}).p(3, 1, {{4, "1"}});
        return entry(s, 4, std::move(tb), profile(true, FC::quasi_filiform, {4, 1, 0}));
    });
    fixed(Section::dim_leq_4, "Z_4^11", {}, [](const FamilySpec& s) {
        TableBuilder tb(4);
        tb.p(1, 1, {{4, "1"}}).p(1, 2, {{4, "1"}}).p(2, 1, {{4, "-1"}}).p(3, 3, {{4, "1"}});
        return entry(s, 4, std::move(tb), profile(true, FC::quasi_filiform, {4, 1, 0}));
    });
    fixed(Section::dim_leq_4, "Z_4^12", {}, [](const FamilySpec& s) {
        TableBuilder tb(4);
        tb.p(1, 2, {{3, "1"}}).p(2, 1, {{4, "1"}});
        return entry(s, 4, std::move(tb), profile(true, FC::quasi_filiform, {4, 2, 0}));
    });
    fixed(Section::dim_leq_4, "Z_4^13", {}, [](const FamilySpec& s) {
        TableBuilder tb(4);
        tb.p(1, 2, {{3, "1"}}).p(2, 1, {{3, "-1"}}).p(2, 2, {{4, "1"}});
        return entry(s, 4, std::move(tb), profile(true, FC::quasi_filiform, {4, 2, 0}));
    });
    fixed(Section::dim_leq_4, "Z_4^14", {}, [](const FamilySpec& s) {
        TableBuilder tb(4);
        tb.p(2, 1, {{4, "1"}}).p(2, 2, {{3, "1"}});
        return entry(s, 4, std::move(tb), profile(true, FC::quasi_filiform, {4, 2, 0}));
    });
    fixed(Section::dim_leq_4, "Z_4^15", {"alpha"}, [](const FamilySpec& s) {
        TableBuilder tb(4, {"alpha"});
        tb.p(1, 2, {{4, "1"}}).p(2, 2, {{3, "1"}});
        tb.p(2, 1, {{4, "(1+alpha)/(1-alpha)"}});
        return entry(s, 4, std::move(tb), profile(true, FC::quasi_filiform, {4, 2, 0}));
    });
    fixed(Section::dim_leq_4, "Z_4^16", {}, [](const FamilySpec& s) {
        TableBuilder tb(4);
        tb.p(1, 2, {{4, "1"}}).p(2, 1, {{4, "-1"}}).p(3, 3, {{4, "1"}});
        return entry(s, 4, std::move(tb), profile(true, FC::quasi_filiform, {4, 1, 0}));
    });

    // ---- zero-filiform family NF_n -----------------------------------
    add(Section::nulfiliform, "NF", true, 1, {}, false, [](std::size_t n) {
        FamilySpec s{Section::nulfiliform, "NF", true, 1, {}, false};
        TableBuilder tb(n);
        tb.nf_block(n);
        return entry(s, n, std::move(tb), profile(true, FC::zero_filiform, countdown(n)),
                     chain_witness(n));
    });

    // ---- filiform families F_n^v -------------------------------------
    for (int v = 1; v <= 3; ++v) {
        std::string name = "F_n^" + std::to_string(v);
        add(Section::filiform, name, true, 5, {}, false, [v](std::size_t n) {
            FamilySpec s{Section::filiform, "F_n^" + std::to_string(v), true, 5, {}, false};
            TableBuilder tb(n);
            tb.nf_block(n - 1);
            if (v == 2) tb.p(n, 1, {{n - 1, "1"}});
            if (v == 3) tb.p(n, n, {{n - 1, "1"}});
            ExpectedProfile prof = profile(true, FC::filiform, fil_dims(n));
            std::optional<GradingWitness> w;
            if (v == 1) {
                // adapted natural grading only for F_n^1
                GradingWitness gw = chain_witness(n - 1);
                gw.degrees.push_back(1);
                w = gw;
            }
            return entry(s, n, std::move(tb), std::move(prof), std::move(w));
        });
    }

    // ---- type A_(1), general n ---------------------------------------
    add(Section::r1_general, "KF_n^1", true, 6, {}, false, [](std::size_t n) {
        FamilySpec s{Section::r1_general, "KF_n^1", true, 6, {}, false};
        TableBuilder tb(n);
        tb.nf_block(n - 2);
        GradingWitness w = chain_witness(n - 2);
        w.degrees.push_back(1);
        w.degrees.push_back(1);
        return entry(s, n, std::move(tb), profile(true, FC::quasi_filiform, r1_dims(n), 1),
                     std::move(w), n);
    });

    // ---- type A_(1), dimension 5 -------------------------------------
    {
        GradingWitness w5{{1, 2, 3, 1, 1}};
        fixed(Section::r1_dim5, "KF_5^1", {}, [w5](const FamilySpec& s) {
            TableBuilder tb(5);
            tb.p(1, 1, {{2, "1"}}).p(1, 2, {{3, "1"}}).p(2, 1, {{3, "1"}});
            ExpectedProfile prof = profile(false, FC::quasi_filiform, {5, 2, 1, 0}, 1);
            prof.anomalies.push_back(
                {"e_2*e_1",
                 "printed coefficient 1 breaks the defining identity at (e_1,e_1,e_1); "
                 "the zero-filiform block requires e_2*e_1 = 2e_3"});
            return entry(s, 5, std::move(tb), std::move(prof), w5, 5);
        });
        companion(Section::r1_dim5, "KF_5^1_corrected", [w5](const FamilySpec& s) {
            TableBuilder tb(5);
            tb.p(1, 1, {{2, "1"}}).p(1, 2, {{3, "1"}}).p(2, 1, {{3, "2"}});
            return entry(s, 5, std::move(tb),
                         profile(true, FC::quasi_filiform, {5, 2, 1, 0}, 1), w5, 5);
        });
        fixed(Section::r1_dim5, "KF_5^2", {}, [w5](const FamilySpec& s) {
            TableBuilder tb(5);
            tb.p(1, 4, {{2, "1"}}).p(1, 2, {{3, "1"}}).p(4, 1, {{3, "-1"}});
            ExpectedProfile prof = profile(false, FC::quasi_filiform, {5, 2, 1, 0}, 1);
            prof.left_ann_dim = 3;
            prof.witness_valid = false;
            prof.anomalies.push_back(
                {"e_4*e_1",
                 "product of two degree-1 vectors lands on e_3 (degree 3); the grading "
                 "requires a degree-2 target, and the identity fails at (e_1,e_1,e_4)"});
            return entry(s, 5, std::move(tb), std::move(prof), w5, 5);
        });
        companion(Section::r1_dim5, "KF_5^2_corrected", [w5](const FamilySpec& s) {
            TableBuilder tb(5);
            tb.p(1, 4, {{2, "1"}}).p(1, 2, {{3, "1"}}).p(4, 1, {{2, "-1"}});
            ExpectedProfile prof = profile(true, FC::quasi_filiform, {5, 2, 1, 0}, 1);
            prof.left_ann_dim = 3;
            return entry(s, 5, std::move(tb), std::move(prof), w5, 5);
        });
        fixed(Section::r1_dim5, "KF_5^3", {}, [](const FamilySpec& s) -> CatalogEntry {
            TableBuilder tb(5);
            tb.p(1, 4, {{2, "1"}}).p(1, 2, {{3, "1"}});
            tb.p(4, 1, {{3, "-1"}});
            tb.p(4, 1, {{3, "1"}}); // the printed table assigns e_4*e_1 twice
            return entry(s, 5, std::move(tb), profile(false, FC::quasi_filiform, {5, 2, 1, 0}, 1));
        });
        companion(Section::r1_dim5, "KF_5^3_corrected", [w5](const FamilySpec& s) {
            TableBuilder tb(5);
            tb.p(1, 4, {{2, "1"}}).p(1, 2, {{3, "1"}}).p(4, 1, {{2, "-1"}}).p(5, 2, {{3, "1"}});
            ExpectedProfile prof = profile(true, FC::quasi_filiform, {5, 2, 1, 0}, 1);
            prof.left_ann_dim = 2;
            return entry(s, 5, std::move(tb), std::move(prof), w5, 5);
        });
    }

    // ---- type A_(2), general n (n >= 8) ------------------------------
    for (int v = 1; v <= 4; ++v) {
        std::string name = "KF_n^" + std::to_string(v);
        std::vector<std::string> params = v == 1 ? std::vector<std::string>{"alpha"}
                                                 : std::vector<std::string>{};
        add(Section::r2_general, name, true, 8, params, false, [v](std::size_t n) {
            std::vector<std::string> ps =
                v == 1 ? std::vector<std::string>{"alpha"} : std::vector<std::string>{};
            FamilySpec s{Section::r2_general, "KF_n^" + std::to_string(v), true, 8, ps, false};
            TableBuilder tb(n, ps);
            tb.nf_block(n - 2);
            switch (v) {
            case 1:
                tb.p(1, n - 1, {{n, "1"}}).p(n - 1, 1, {{n, "alpha"}});
                break;
            case 2:
                tb.p(1, n - 1, {{n, "1"}}).p(n - 1, 1, {{n, "1"}}).p(n - 1, n - 1, {{n, "1"}});
                break;
            case 3:
                tb.p(1, n - 1, {{n, "1"}}).p(n - 1, n - 1, {{n, "1"}});
                break;
            case 4:
                tb.p(n - 1, 1, {{n, "1"}});
                break;
            }
            GradingWitness w = chain_witness(n - 2);
            w.degrees.push_back(1);
            w.degrees.push_back(2);
            return entry(s, n, std::move(tb), profile(true, FC::quasi_filiform, r2_dims(n), 2),
                         std::move(w), n);
        });
    }

    // ---- type A_(2), dimension 5 -------------------------------------
    {
        const GradingWitness w5{{1, 2, 3, 1, 2}};
        auto qf5 = [w5](const FamilySpec& s, TableBuilder&& tb) {
            return entry(s, 5, std::move(tb), profile(true, FC::quasi_filiform, {5, 3, 1, 0}, 2),
                         w5, 5);
        };
        fixed(Section::r2_dim5, "KF_5^1", {}, [qf5](const FamilySpec& s) {
            TableBuilder tb(5);
            tb.p(1, 1, {{2, "1"}}).p(4, 4, {{5, "1"}}).p(1, 2, {{3, "1"}});
            tb.p(4, 5, {{3, "1"}}).p(2, 1, {{3, "2"}}).p(5, 4, {{3, "2"}});
            return qf5(s, std::move(tb));
        });
        fixed(Section::r2_dim5, "KF_5^2", {}, [qf5](const FamilySpec& s) {
            TableBuilder tb(5);
            tb.p(1, 1, {{2, "1"}}).p(1, 2, {{3, "1"}}).p(1, 4, {{5, "1"}}).p(1, 5, {{3, "1"}});
            tb.p(2, 1, {{3, "2"}}).p(4, 1, {{2, "-1"}}).p(4, 2, {{3, "-1"}}).p(4, 5, {{3, "-1"}});
            return qf5(s, std::move(tb));
        });
        fixed(Section::r2_dim5, "KF_5^3", {"beta"}, [qf5](const FamilySpec& s) {
            TableBuilder tb(5, {"beta"});
            tb.p(1, 1, {{2, "1"}}).p(1, 2, {{3, "1"}}).p(1, 4, {{5, "1"}}).p(1, 5, {{3, "beta"}});
            tb.p(2, 1, {{3, "2"}}).p(2, 4, {{3, "beta-1"}}).p(4, 1, {{2, "-1"}});
            tb.p(4, 4, {{5, "-1"}}).p(4, 2, {{3, "-1"}}).p(4, 5, {{3, "-beta"}});
            tb.p(5, 1, {{3, "beta-1"}}).p(5, 4, {{3, "-2*beta"}});
            return qf5(s, std::move(tb));
        });
        fixed(Section::r2_dim5, "KF_5^4", {}, [qf5](const FamilySpec& s) {
            TableBuilder tb(5);
            tb.p(1, 1, {{2, "1"}}).p(1, 2, {{3, "1"}}).p(1, 4, {{5, "1"}});
            tb.p(2, 1, {{3, "2"}}).p(4, 4, {{5, "-1"}});
            return qf5(s, std::move(tb));
        });
        fixed(Section::r2_dim5, "KF_5^5", {}, [qf5](const FamilySpec& s) {
            TableBuilder tb(5);
            tb.p(1, 4, {{2, "1"}}).p(1, 2, {{3, "1"}}).p(1, 5, {{3, "-1"}});
            tb.p(4, 1, {{5, "1"}}).p(4, 2, {{3, "1"}}).p(4, 5, {{3, "-1"}});
            return qf5(s, std::move(tb));
        });
        fixed(Section::r2_dim5, "KF_5^6", {}, [qf5](const FamilySpec& s) {
            TableBuilder tb(5);
            tb.p(1, 4, {{2, "1"}}).p(1, 2, {{3, "1"}}).p(1, 5, {{3, "-1"}}).p(4, 1, {{5, "1"}});
            return qf5(s, std::move(tb));
        });
        fixed(Section::r2_dim5, "KF_5^7", {}, [qf5](const FamilySpec& s) {
            TableBuilder tb(5);
            tb.p(1, 1, {{2, "1"}}).p(1, 2, {{3, "1"}}).p(1, 4, {{5, "1"}}).p(1, 5, {{3, "1"}});
            tb.p(2, 1, {{3, "2"}}).p(2, 4, {{3, "1"}}).p(5, 1, {{3, "1"}});
            return qf5(s, std::move(tb));
        });
        fixed(Section::r2_dim5, "KF_5^8", {}, [qf5](const FamilySpec& s) {
            TableBuilder tb(5);
            tb.p(1, 1, {{2, "1"}}).p(1, 2, {{3, "1"}}).p(1, 4, {{5, "1"}}).p(2, 1, {{3, "2"}});
            return qf5(s, std::move(tb));
        });
        fixed(Section::r2_dim5, "KF_5^9", {}, [qf5](const FamilySpec& s) {
            TableBuilder tb(5);
            tb.p(1, 1, {{2, "1"}}).p(1, 2, {{3, "1"}}).p(1, 4, {{5, "-1"}});
            tb.p(2, 1, {{3, "2"}}).p(4, 1, {{5, "1"}}).p(4, 5, {{3, "1"}});
            return qf5(s, std::move(tb));
        });
        fixed(Section::r2_dim5, "KF_5^10", {}, [qf5](const FamilySpec& s) {
            TableBuilder tb(5);
            tb.p(1, 1, {{2, "1"}}).p(1, 4, {{5, "-1"}}).p(4, 1, {{5, "1"}}).p(4, 5, {{3, "1"}});
            return qf5(s, std::move(tb));
        });
        fixed(Section::r2_dim5, "KF_5^11", {}, [qf5](const FamilySpec& s) {
            TableBuilder tb(5);
            tb.p(1, 1, {{2, "1"}}).p(1, 2, {{3, "1"}}).p(1, 4, {{5, "-1"}}).p(1, 5, {{3, "1"}});
            tb.p(2, 1, {{3, "2"}}).p(4, 1, {{5, "1"}});
            return qf5(s, std::move(tb));
        });
        fixed(Section::r2_dim5, "KF_5^12", {}, [qf5](const FamilySpec& s) {
            TableBuilder tb(5);
            tb.p(1, 1, {{2, "1"}}).p(1, 2, {{3, "1"}}).p(1, 4, {{5, "-1"}});
            tb.p(2, 1, {{3, "2"}}).p(4, 1, {{5, "1"}});
            return qf5(s, std::move(tb));
        });
        fixed(Section::r2_dim5, "KF_5^13", {}, [qf5](const FamilySpec& s) {
            TableBuilder tb(5);
            tb.p(1, 1, {{2, "1"}}).p(1, 4, {{5, "-1"}}).p(1, 5, {{3, "1"}}).p(4, 1, {{5, "1"}});
            return qf5(s, std::move(tb));
        });
        fixed(Section::r2_dim5, "KF_5^14", {"alpha"}, [qf5](const FamilySpec& s) {
            TableBuilder tb(5, {"alpha"});
            tb.p(1, 1, {{2, "1"}}).p(1, 2, {{3, "1"}}).p(1, 4, {{5, "alpha"}});
            tb.p(2, 1, {{3, "2"}}).p(4, 1, {{5, "1"}});
            return qf5(s, std::move(tb)); // alpha != -1
        });
        fixed(Section::r2_dim5, "KF_5^15", {"alpha"}, [qf5](const FamilySpec& s) {
            TableBuilder tb(5, {"alpha"});
            tb.p(1, 1, {{2, "1"}}).p(1, 4, {{5, "alpha"}});
            tb.p(1, 5, {{3, "(2*alpha)/(1+alpha)"}}).p(2, 4, {{3, "2*alpha"}});
            tb.p(4, 1, {{5, "1"}}).p(4, 2, {{3, "1"}}).p(5, 1, {{3, "2"}});
            return qf5(s, std::move(tb)); // alpha != -1, -1/2
        });
        fixed(Section::r2_dim5, "KF_5^16", {}, [qf5](const FamilySpec& s) {
            TableBuilder tb(5);
            tb.p(1, 1, {{2, "1"}}).p(1, 2, {{3, "1"}}).p(1, 4, {{5, "-1/2"}}).p(1, 5, {{3, "-2"}});
            tb.p(2, 1, {{3, "2"}}).p(2, 4, {{3, "-1"}}).p(4, 1, {{5, "1"}}).p(4, 2, {{3, "1"}});
            tb.p(5, 1, {{3, "2"}});
            return qf5(s, std::move(tb));
        });
        fixed(Section::r2_dim5, "KF_5^17", {}, [qf5](const FamilySpec& s) {
            TableBuilder tb(5);
            tb.p(1, 1, {{2, "1"}}).p(1, 4, {{5, "-1/2"}}).p(1, 5, {{3, "-2"}}).p(2, 4, {{3, "-1"}});
            tb.p(4, 1, {{5, "1"}}).p(4, 2, {{3, "1"}}).p(5, 1, {{3, "2"}});
            return qf5(s, std::move(tb));
        });
    }

    // ---- type A_(2), dimension 6 -------------------------------------
    {
        const GradingWitness w_chain{{1, 2, 3, 4, 1, 2}}; // KF_6^1..KF_6^4
        const GradingWitness w_alt{{1, 2, 3, 4, 1, 2}};
        auto qf6 = [](const FamilySpec& s, TableBuilder&& tb, const GradingWitness& w,
                      std::optional<std::size_t> dimR = std::nullopt) {
            ExpectedProfile prof = profile(true, FC::quasi_filiform, r2_dims(6), 2);
            prof.right_ann_dim = dimR;
            return entry(s, 6, std::move(tb), std::move(prof), w, 6);
        };
        fixed(Section::r2_dim6, "KF_6^1", {}, [qf6, w_chain](const FamilySpec& s) {
            TableBuilder tb(6);
            tb.nf_block(4).p(1, 5, {{6, "1"}}).p(5, 1, {{6, "1"}});
            return qf6(s, std::move(tb), w_chain);
        });
        fixed(Section::r2_dim6, "KF_6^2", {}, [qf6, w_chain](const FamilySpec& s) {
            TableBuilder tb(6);
            tb.nf_block(4).p(1, 5, {{6, "1"}}).p(5, 1, {{6, "1"}}).p(5, 5, {{6, "1"}});
            return qf6(s, std::move(tb), w_chain);
        });
        fixed(Section::r2_dim6, "KF_6^3", {}, [qf6, w_chain](const FamilySpec& s) {
            TableBuilder tb(6);
            tb.nf_block(4).p(1, 5, {{6, "1"}}).p(5, 5, {{6, "1"}});
            return qf6(s, std::move(tb), w_chain);
        });
        fixed(Section::r2_dim6, "KF_6^4", {}, [qf6, w_chain](const FamilySpec& s) {
            TableBuilder tb(6);
            tb.nf_block(4).p(5, 1, {{6, "1"}});
            return qf6(s, std::move(tb), w_chain);
        });
        // KF_6^5..KF_6^7 carry the grading e_1,e_5 | e_2,e_6 | e_3 | e_4.
        const GradingWitness w567{{1, 2, 3, 4, 1, 2}};
        fixed(Section::r2_dim6, "KF_6^5", {}, [qf6, w567](const FamilySpec& s) {
            TableBuilder tb(6);
            tb.p(1, 1, {{2, "1"}}).p(1, 3, {{4, "1"}}).p(1, 5, {{6, "1"}}).p(1, 6, {{3, "1"}});
            tb.p(2, 5, {{3, "-1"}}).p(5, 1, {{2, "-3"}, {6, "-2"}}).p(5, 2, {{3, "1"}});
            tb.p(5, 5, {{2, "2"}, {6, "1"}}).p(5, 6, {{3, "-2"}}).p(6, 1, {{3, "-1"}});
            tb.p(6, 5, {{3, "1"}});
            CatalogEntry e = qf6(s, std::move(tb), w567, 1);
            e.profile.zinbiel_holds = false;
            e.profile.anomalies.push_back(
                {"(e_1,e_5,e_5)",
                 "the defining identity fails as printed: (e_1 o e_5) o e_5 = e_3 but "
                 "e_1 o (e_5 o e_5) + e_1 o (e_5 o e_5) = 2e_3"});
            return e;
        });
        fixed(Section::r2_dim6, "KF_6^6", {}, [qf6, w567](const FamilySpec& s) {
            TableBuilder tb(6);
            tb.p(1, 1, {{2, "1"}}).p(1, 3, {{4, "1"}}).p(1, 5, {{6, "1"}}).p(1, 6, {{3, "1"}});
            tb.p(2, 5, {{3, "-1"}}).p(5, 1, {{6, "-2"}}).p(5, 2, {{3, "1"}}).p(6, 1, {{3, "-1"}});
            return qf6(s, std::move(tb), w567, 1);
        });
        fixed(Section::r2_dim6, "KF_6^7", {}, [qf6, w567](const FamilySpec& s) {
            TableBuilder tb(6);
            tb.p(1, 1, {{2, "1"}}).p(1, 3, {{4, "1"}}).p(1, 5, {{6, "1"}}).p(1, 6, {{3, "1"}});
            tb.p(3, 1, {{4, "1"}}).p(5, 1, {{6, "-1"}});
            CatalogEntry e = qf6(s, std::move(tb), w567, 2);
            e.profile.zinbiel_holds = false;
            e.profile.anomalies.push_back(
                {"(e_1,e_1,e_6)",
                 "the defining identity fails as printed: (e_1 o e_1) o e_6 = 0 but "
                 "e_1 o (e_1 o e_6) + e_1 o (e_6 o e_1) = e_4; a product e_2 o e_6 = e_4 "
                 "appears to be missing"});
            return e;
        });
        (void)w_alt;
    }

    // ---- type A_(2), dimension 7 -------------------------------------
    {
        const GradingWitness w_chain{{1, 2, 3, 4, 5, 1, 2}};
        auto qf7 = [](const FamilySpec& s, TableBuilder&& tb, const GradingWitness& w,
                      ExpectedProfile prof) {
            return entry(s, 7, std::move(tb), std::move(prof), w, 7);
        };
        fixed(Section::r2_dim7, "KF_7^1", {"alpha"}, [qf7, w_chain](const FamilySpec& s) {
            TableBuilder tb(7, {"alpha"});
            tb.nf_block(5).p(1, 6, {{7, "1"}}).p(6, 1, {{6, "alpha"}});
            ExpectedProfile prof =
                profile(false, FC::quasi_filiform, {7, 6, 4, 2, 1, 0}, 2);
            prof.witness_valid = false;
            prof.anomalies.push_back(
                {"e_6*e_1",
                 "printed target alpha e_6 is degree-inconsistent (degree 1+1 must land in "
                 "degree 2), breaks the defining identity symbolically in alpha, and "
                 "inflates the central series to dims (7,6,4,2,1,0); the general KF_n^1 "
                 "family suggests alpha e_7, which is not assumed"});
            return qf7(s, std::move(tb), w_chain, std::move(prof));
        });
        companion(Section::r2_dim7, "KF_7^1_corrected", [qf7, w_chain](const FamilySpec& s) {
            TableBuilder tb(7, {"alpha"});
            tb.nf_block(5).p(1, 6, {{7, "1"}}).p(6, 1, {{7, "alpha"}});
            return qf7(s, std::move(tb), w_chain,
                       profile(true, FC::quasi_filiform, r2_dims(7), 2));
        });
        fixed(Section::r2_dim7, "KF_7^2", {}, [qf7, w_chain](const FamilySpec& s) {
            TableBuilder tb(7);
            tb.nf_block(5).p(1, 6, {{7, "1"}}).p(6, 1, {{7, "1"}}).p(6, 6, {{7, "1"}});
            return qf7(s, std::move(tb), w_chain,
                       profile(true, FC::quasi_filiform, r2_dims(7), 2));
        });
        fixed(Section::r2_dim7, "KF_7^3", {}, [qf7, w_chain](const FamilySpec& s) {
            TableBuilder tb(7);
            tb.nf_block(5).p(1, 6, {{7, "1"}}).p(6, 6, {{7, "1"}});
            return qf7(s, std::move(tb), w_chain,
                       profile(true, FC::quasi_filiform, r2_dims(7), 2));
        });
        fixed(Section::r2_dim7, "KF_7^4", {}, [qf7, w_chain](const FamilySpec& s) {
            TableBuilder tb(7);
            tb.nf_block(5).p(6, 1, {{7, "1"}});
            return qf7(s, std::move(tb), w_chain,
                       profile(true, FC::quasi_filiform, r2_dims(7), 2));
        });
        const GradingWitness w56{{1, 2, 3, 4, 5, 1, 2}};
        fixed(Section::r2_dim7, "KF_7^5", {}, [qf7, w56](const FamilySpec& s) {
            TableBuilder tb(7);
            tb.p(1, 1, {{2, "1"}}).p(1, 3, {{4, "1"}}).p(1, 4, {{5, "1"}}).p(1, 6, {{7, "1"}});
            tb.p(1, 7, {{3, "1"}}).p(2, 6, {{3, "-1"}}).p(3, 1, {{4, "-1"}});
            tb.p(6, 1, {{7, "-2"}}).p(6, 2, {{3, "1"}}).p(7, 1, {{3, "-1"}});
            ExpectedProfile prof = profile(false, FC::quasi_filiform, r2_dims(7), 2);
            prof.anomalies.push_back(
                {"(e_1,e_7,e_1)",
                 "the defining identity fails as printed: (e_1 o e_7) o e_1 = -e_4 but "
                 "e_1 o (e_7 o e_1) + e_1 o (e_1 o e_7) = 0"});
            return qf7(s, std::move(tb), w56, std::move(prof));
        });
        fixed(Section::r2_dim7, "KF_7^6", {}, [qf7, w56](const FamilySpec& s) {
            TableBuilder tb(7);
            tb.p(1, 1, {{2, "1"}}).p(1, 3, {{4, "1"}}).p(1, 4, {{5, "1"}}).p(1, 6, {{7, "1"}});
            tb.p(1, 7, {{3, "1"}}).p(2, 6, {{3, "-1"}}).p(3, 1, {{4, "-1"}});
            tb.p(6, 1, {{7, "-2"}}).p(6, 2, {{3, "1"}}).p(6, 4, {{5, "1"}}).p(7, 1, {{3, "-1"}});
            ExpectedProfile prof = profile(false, FC::quasi_filiform, r2_dims(7), 2);
            prof.anomalies.push_back(
                {"(e_1,e_7,e_1)",
                 "the defining identity fails as printed: (e_1 o e_7) o e_1 = -e_4 but "
                 "e_1 o (e_7 o e_1) + e_1 o (e_1 o e_7) = 0"});
            return qf7(s, std::move(tb), w56, std::move(prof));
        });
    }

    // ---- type A_(3) corollaries --------------------------------------
    fixed(Section::r3_dim5, "A3_5", {}, [](const FamilySpec& s) {
        TableBuilder tb(5);
        tb.p(1, 2, {{3, "1"}}).p(2, 1, {{3, "-1"}}).p(1, 3, {{4, "1"}}).p(2, 3, {{5, "1"}});
        return entry(s, 5, std::move(tb), profile(true, FC::quasi_filiform, {5, 3, 2, 0}, 3),
                     GradingWitness{{1, 1, 2, 3, 3}}, 5);
    });
    fixed(Section::r3_dim6, "A3_6", {}, [](const FamilySpec& s) {
        TableBuilder tb(6);
        tb.p(1, 2, {{3, "1"}}).p(1, 3, {{4, "1"}}).p(1, 5, {{6, "1"}}).p(2, 1, {{3, "-1"}});
        tb.p(2, 3, {{5, "1"}}).p(2, 4, {{6, "-1"}}).p(3, 3, {{6, "1"}}).p(4, 2, {{6, "1"}});
        tb.p(5, 1, {{6, "-1"}});
        return entry(s, 6, std::move(tb), profile(true, FC::quasi_filiform, {6, 4, 3, 1, 0}, 3),
                     GradingWitness{{1, 1, 2, 3, 3, 4}}, 5);
    });
    fixed(Section::r3_dim7, "A3_7", {}, [](const FamilySpec& s) {
        TableBuilder tb(7);
        tb.p(1, 2, {{3, "1"}}).p(1, 3, {{4, "1"}}).p(1, 5, {{6, "1"}}).p(1, 6, {{7, "1"}});
        tb.p(2, 1, {{3, "-1"}}).p(2, 3, {{5, "1"}}).p(2, 4, {{6, "-1"}}).p(3, 3, {{6, "1"}});
        tb.p(4, 2, {{6, "1"}}).p(4, 3, {{7, "2"}}).p(5, 1, {{6, "-1"}});
        return entry(s, 7, std::move(tb),
                     profile(true, FC::quasi_filiform, {7, 5, 4, 2, 1, 0}, 3),
                     GradingWitness{{1, 1, 2, 3, 3, 4, 5}}, 5);
    });

    return defs;
}

const std::vector<FamilyDef>& registry() {
    static const std::vector<FamilyDef> defs = build_registry();
    return defs;
}

AlgebraTable instantiate(const AlgebraTable& t,
                         const std::map<std::string, Rational>& assignment) {
    for (const auto& [name, _] : assignment) {
        if (std::find(t.params().begin(), t.params().end(), name) == t.params().end())
            throw Error(ErrorCode::UnknownParameter,
                        "parameter '" + name + "' is not a parameter of this family");
    }
    AlgebraTable out(t.dim(), {}, t.labels());
    for (const auto& [ij, block] : t.products())
        for (const auto& [k, c] : block)
            out.set(ij.first, ij.second, k, Scalar(c.eval(assignment)));
    return out;
}

} // namespace

const std::vector<FamilySpec>& families() {
    static const std::vector<FamilySpec> specs = [] {
        std::vector<FamilySpec> out;
        for (const FamilyDef& d : registry()) out.push_back(d.spec);
        return out;
    }();
    return specs;
}

std::vector<FamilySpec> list_keys(std::optional<Section> filter, bool include_companions) {
    std::vector<FamilySpec> out;
    for (const FamilySpec& s : families()) {
        if (filter && s.section != *filter) continue;
        if (s.companion && !include_companions) continue;
        out.push_back(s);
    }
    return out;
}

CatalogEntry make(const CatalogKey& key, const std::map<std::string, Rational>& assignment) {
    const FamilyDef* def = nullptr;
    for (const FamilyDef& d : registry())
        if (d.spec.section == key.section && d.spec.name == key.name) {
            def = &d;
            break;
        }
    if (!def)
        throw Error(ErrorCode::UnknownKey, "no catalog entry '" + key.name + "' in section " +
                                               section_name(key.section));
    std::size_t n = 0;
    if (def->spec.general_n) {
        if (!key.n)
            throw Error(ErrorCode::DimensionOutOfRange,
                        "family '" + key.name + "' requires a dimension n");
        n = *key.n;
        if (n < def->spec.min_n)
            throw Error(ErrorCode::DimensionOutOfRange,
                        "family '" + key.name + "' requires n >= " +
                            std::to_string(def->spec.min_n));
    } else if (key.n) {
        throw Error(ErrorCode::DimensionOutOfRange,
                    "entry '" + key.name + "' has a fixed dimension; do not pass n");
    }
    CatalogEntry e = def->build(n);
    if (!assignment.empty()) {
        for (const std::string& p : e.table.params())
            if (!assignment.count(p))
                throw Error(ErrorCode::MissingParameter,
                            "no value for parameter '" + p + "'");
        e.table = instantiate(e.table, assignment);
    }
    return e;
}

} // namespace zinbiel::catalog
