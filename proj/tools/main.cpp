#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zinbiel/io.hpp"
#include "zinbiel/verify.hpp"

using namespace zinbiel;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string format_vector(const Vector& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + print_scalar(v[k]) + ")*e_" + std::to_string(k + 1);
    }
    return out.empty() ? "0" : out;
}

void print_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        io::write_file(out_path, text);
}

ordered_json json_dims(const std::vector<std::size_t>& dims) {
    ordered_json j = ordered_json::array();
    for (auto d : dims) j.push_back(d);
    return j;
}

ordered_json fingerprint_json(const Fingerprint& fp) {
    return {{"dim", fp.dim},          {"lcs_dims", json_dims(fp.lcs_dims)},
            {"nilindex", fp.nilindex}, {"left_ann_dim", fp.left_ann_dim},
            {"right_ann_dim", fp.right_ann_dim}, {"sym_rank", fp.sym_rank},
            {"antisym_rank", fp.antisym_rank}};
}

std::map<std::string, Rational> parse_assignment(const std::vector<std::string>& params) {
    std::map<std::string, Rational> out;
    for (const std::string& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error(ErrorCode::SyntaxError, "--param expects NAME=RATIONAL, got: " + p);
        out.emplace(p.substr(0, eq), Rational::from_string(p.substr(eq + 1)));
    }
    return out;
}

catalog::CatalogKey resolve_key(const std::string& name, const std::string& section,
                                std::optional<std::size_t> n) {
    std::optional<catalog::Section> sec;
    if (!section.empty()) {
        sec = catalog::section_from_name(section);
        if (!sec) throw Error(ErrorCode::UnknownKey, "unknown section: " + section);
    }
    std::vector<catalog::FamilySpec> hits;
    for (const auto& f : catalog::list_keys(sec, true))
        if (f.name == name) hits.push_back(f);
    if (hits.empty()) throw Error(ErrorCode::UnknownKey, "no catalog entry named: " + name);
    if (hits.size() > 1)
        throw Error(ErrorCode::UnknownKey,
                    "name '" + name + "' appears in several sections; add --section");
    return {hits[0].section, hits[0].name, n};
}

int cmd_check(const std::string& path, bool json) {
    io::AlgebraDoc doc = io::load_algebra(io::read_file(path));
    ZinbielVerdict v = is_zinbiel(doc.table);
    if (json) {
        ordered_json j{{"zinbiel", v.holds}};
        if (!v.holds) {
            j["witness"] = {{"i", v.i}, {"j", v.j}, {"k", v.k}};
            j["defect"] = format_vector(v.defect);
        }
        std::cout << j.dump(2) << "\n";
    } else if (v.holds) {
        std::cout << "zinbiel: holds\n";
    } else {
        std::cout << "zinbiel: fails, Z(e_" << v.i << ",e_" << v.j << ",e_" << v.k
                  << ") = " << format_vector(v.defect) << "\n";
    }
    return v.holds ? 0 : 1;
}

int cmd_series(const std::string& path, bool json) {
    io::AlgebraDoc doc = io::load_algebra(io::read_file(path));
    auto dims = series_dims(lower_central_series(doc.table));
    FiliformClass fc = classify_filiformity(doc.table);
    if (json) {
        ordered_json j{{"lcs_dims", json_dims(dims)},
                       {"nilindex", dims.size()},
                       {"class", filiform_class_name(fc)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dims:";
        for (auto d : dims) std::cout << " " << d;
        std::cout << "\nnilindex: " << dims.size() << "\nclass: " << filiform_class_name(fc)
                  << "\n";
    }
    return 0;
}

int cmd_annihilators(const std::string& path, bool json) {
    io::AlgebraDoc doc = io::load_algebra(io::read_file(path));
    std::size_t l = left_annihilator(doc.table).rank();
    std::size_t r = right_annihilator(doc.table).rank();
    if (json) {
        ordered_json j{{"left_ann_dim", l}, {"right_ann_dim", r}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dim L = " << l << "\ndim R = " << r << "\n";
    }
    return 0;
}

int cmd_fingerprint(const std::string& path, bool json) {
    io::AlgebraDoc doc = io::load_algebra(io::read_file(path));
    Fingerprint fp = fingerprint(doc.table);
    if (json)
        std::cout << fingerprint_json(fp).dump(2) << "\n";
    else
        std::cout << fp.str() << "\n";
    return 0;
}

int cmd_grade(const std::string& path, bool json) {
    io::AlgebraDoc doc = io::load_algebra(io::read_file(path));
    if (!doc.grading)
        throw Error(ErrorCode::IncompleteWitness, "file carries no grading field");
    GradingVerdict v = check_grading_witness(doc.table, *doc.grading);
    if (json) {
        ordered_json j{{"valid", v.valid}};
        if (!v.valid) j["violation"] = v.violation;
        j["degrees"] = json_dims(doc.grading->degrees);
        std::cout << j.dump(2) << "\n";
    } else if (v.valid) {
        std::cout << "grading: valid\ndegrees:";
        for (auto d : doc.grading->degrees) std::cout << " " << d;
        std::cout << "\n";
    } else {
        std::cout << "grading: invalid, " << v.violation << "\n";
    }
    return v.valid ? 0 : 1;
}

int cmd_catalog_list(const std::string& section, bool companions, bool json) {
    std::optional<catalog::Section> sec;
    if (!section.empty()) {
        sec = catalog::section_from_name(section);
        if (!sec) throw Error(ErrorCode::UnknownKey, "unknown section: " + section);
    }
    auto keys = catalog::list_keys(sec, companions);
    if (json) {
        ordered_json j = ordered_json::array();
        for (const auto& f : keys) {
            ordered_json e{{"section", catalog::section_name(f.section)}, {"name", f.name}};
            if (f.general_n) e["min_n"] = f.min_n;
            if (!f.params.empty()) e["parameters"] = f.params;
            if (f.companion) e["companion"] = true;
            j.push_back(std::move(e));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& f : keys) {
            std::cout << catalog::section_name(f.section) << "/" << f.name;
            if (f.general_n) std::cout << " (n >= " << f.min_n << ")";
            for (const auto& p : f.params) std::cout << " [" << p << "]";
            if (f.companion) std::cout << " (companion)";
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_catalog_emit(const std::string& name, const std::string& section,
                     std::optional<std::size_t> n, const std::vector<std::string>& params,
                     const std::string& out_path) {
    catalog::CatalogKey key = resolve_key(name, section, n);
    catalog::CatalogEntry entry = catalog::make(key, parse_assignment(params));
    print_out(io::emit_algebra(io::doc_from_entry(entry)), out_path);
    return 0;
}

int cmd_verify_catalog(const std::string& section, std::size_t max_n, bool json,
                       const std::string& out_path) {
    std::optional<catalog::Section> sec;
    if (!section.empty()) {
        sec = catalog::section_from_name(section);
        if (!sec) throw Error(ErrorCode::UnknownKey, "unknown section: " + section);
    }
    verify::Report rep = verify::verify_catalog(sec, max_n);
    print_out(json ? verify::render_json(rep) : verify::render_text(rep), out_path);
    return rep.ok() ? 0 : 1;
}

int cmd_transport(const std::string& path, const std::string& matrix_path,
                  const std::string& out_path) {
    io::AlgebraDoc doc = io::load_algebra(io::read_file(path));
    LinearMap m = io::load_matrix(io::read_file(matrix_path));
    AlgebraTable moved = transport(doc.table, m);
    // grading and anomaly annotations refer to the old basis; drop them
    print_out(io::emit_algebra({std::move(moved), std::nullopt, {}}), out_path);
    return 0;
}

int cmd_compare(const std::string& path_a, const std::string& path_b, bool json) {
    io::AlgebraDoc a = io::load_algebra(io::read_file(path_a));
    io::AlgebraDoc b = io::load_algebra(io::read_file(path_b));
    Fingerprint fa = fingerprint(a.table);
    Fingerprint fb = fingerprint(b.table);
    auto cert = noniso_certificate(a.table, b.table);
    if (json) {
        ordered_json j{{"fingerprint_a", fingerprint_json(fa)},
                       {"fingerprint_b", fingerprint_json(fb)}};
        if (cert)
            j["certificate"] = cert->invariant;
        else
            j["certificate"] = nullptr;
        j["verdict"] = cert ? "NOT_ISOMORPHIC" : "UNRESOLVED";
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "A: " << fa.str() << "\nB: " << fb.str() << "\n";
        if (cert)
            std::cout << "certificate: " << cert->invariant << "\n";
        else
            std::cout << "UNRESOLVED (equal fingerprints)\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for nilpotent Zinbiel algebra tables"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    std::string file, file_b, matrix_path, out_path, section, key_name;
    std::size_t max_n = 10;
    std::optional<std::size_t> dim_n;
    std::vector<std::string> param_args;
    bool companions = false;

    auto* check = app.add_subcommand("check", "verify the defining identity");
    check->add_option("file", file)->required();

    auto* series = app.add_subcommand("series", "lower central series and classification");
    series->add_option("file", file)->required();

    auto* ann = app.add_subcommand("annihilators", "left/right annihilator dimensions");
    ann->add_option("file", file)->required();

    auto* fp = app.add_subcommand("fingerprint", "isomorphism-invariant fingerprint");
    fp->add_option("file", file)->required();

    auto* grade = app.add_subcommand("grade", "check the adapted grading witness");
    grade->add_option("file", file)->required();

    auto* cat = app.add_subcommand("catalog", "catalog access");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "list keys in source order");
    cat_list->add_option("--section", section);
    cat_list->add_flag("--companions", companions, "include corrected companions");
    auto* cat_emit = cat->add_subcommand("emit", "write one entry as an algebra file");
    cat_emit->add_option("name", key_name)->required();
    cat_emit->add_option("--section", section);
    cat_emit->add_option("--n", dim_n, "dimension for general-n families");
    cat_emit->add_option("--param", param_args, "NAME=RATIONAL parameter assignment");
    cat_emit->add_option("--out", out_path);

    auto* verify_cmd = app.add_subcommand("verify-catalog", "run every check on every entry");
    verify_cmd->add_option("--section", section);
    verify_cmd->add_option("--max-n", max_n, "sweep bound for general-n families");
    verify_cmd->add_option("--out", out_path);

    auto* trans = app.add_subcommand("transport", "rewrite a table in a new basis");
    trans->add_option("file", file)->required();
    trans->add_option("--matrix", matrix_path)->required();
    trans->add_option("--out", out_path);

    auto* comp = app.add_subcommand("compare", "fingerprints and non-isomorphism certificate");
    comp->add_option("fileA", file)->required();
    comp->add_option("fileB", file_b)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(file, json);
        if (series->parsed()) return cmd_series(file, json);
        if (ann->parsed()) return cmd_annihilators(file, json);
        if (fp->parsed()) return cmd_fingerprint(file, json);
        if (grade->parsed()) return cmd_grade(file, json);
        if (cat_list->parsed()) return cmd_catalog_list(section, companions, json);
        if (cat_emit->parsed())
            return cmd_catalog_emit(key_name, section, dim_n, param_args, out_path);
        if (verify_cmd->parsed()) return cmd_verify_catalog(section, max_n, json, out_path);
        if (trans->parsed()) return cmd_transport(file, matrix_path, out_path);
        if (comp->parsed()) return cmd_compare(file, file_b, json);
    } catch (const Error& e) {
        std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
        return 2;
    }
    return 2;
}
