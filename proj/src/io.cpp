#include "zinbiel/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace zinbiel::io {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";

std::size_t get_index(const ordered_json& j, const char* field, std::size_t dim) {
    if (!j.contains(field) || !j[field].is_number_unsigned())
        throw Error(ErrorCode::IllFormedEntry,
                    std::string("product field '") + field + "' must be a positive integer");
    std::size_t v = j[field].get<std::size_t>();
    if (v < 1 || v > dim)
        throw Error(ErrorCode::IllFormedEntry,
                    std::string("index ") + field + "=" + std::to_string(v) +
                        " out of range 1.." + std::to_string(dim));
    return v;
}

} // namespace

std::string emit_algebra(const AlgebraDoc& doc) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["dim"] = doc.table.dim();
    j["parameters"] = doc.table.params();
    if (!doc.table.labels().empty()) j["labels"] = doc.table.labels();
    ordered_json products = ordered_json::array();
    for (const auto& [ij, block] : doc.table.products()) {
        ordered_json terms = ordered_json::array();
        for (const auto& [k, c] : block) {
            if (c.is_zero()) continue;
            terms.push_back({{"k", k}, {"coeff", print_scalar(c)}});
        }
        if (terms.empty()) continue;
        products.push_back({{"i", ij.first}, {"j", ij.second}, {"terms", std::move(terms)}});
    }
    j["products"] = std::move(products);
    if (doc.grading) j["grading"] = doc.grading->degrees;
    if (!doc.anomalies.empty()) {
        ordered_json anomalies = ordered_json::array();
        for (const auto& a : doc.anomalies)
            anomalies.push_back({{"location", a.location}, {"description", a.description}});
        j["anomalies"] = std::move(anomalies);
    }
    return j.dump(2) + "\n";
}

AlgebraDoc load_algebra(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::SyntaxError, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw Error(ErrorCode::SyntaxError, "top level must be an object");
    if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
        throw Error(ErrorCode::SyntaxError, "missing or unsupported schema_version");
    if (!j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
        throw Error(ErrorCode::SyntaxError, "dim must be a positive integer");
    const std::size_t dim = j["dim"].get<std::size_t>();

    std::vector<std::string> params;
    if (j.contains("parameters")) {
        for (const auto& p : j["parameters"]) {
            if (!p.is_string())
                throw Error(ErrorCode::SyntaxError, "parameters must be a list of names");
            params.push_back(p.get<std::string>());
        }
    }
    std::vector<std::string> labels;
    if (j.contains("labels"))
        for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());

    AlgebraDoc doc{AlgebraTable(dim, params, labels), std::nullopt, {}};
    const std::set<std::string> allowed(params.begin(), params.end());

    if (!j.contains("products") || !j["products"].is_array())
        throw Error(ErrorCode::SyntaxError, "products must be a list");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& block : j["products"]) {
        std::size_t i = get_index(block, "i", dim);
        std::size_t jj = get_index(block, "j", dim);
        if (!seen.insert({i, jj}).second)
            throw Error(ErrorCode::IllFormedEntry,
                        "product e_" + std::to_string(i) + "*e_" + std::to_string(jj) +
                            " is assigned twice");
        if (!block.contains("terms") || !block["terms"].is_array())
            throw Error(ErrorCode::SyntaxError, "product block without terms list");
        for (const auto& term : block["terms"]) {
            std::size_t k = get_index(term, "k", dim);
            if (!term.contains("coeff") || !term["coeff"].is_string())
                throw Error(ErrorCode::SyntaxError, "term coeff must be a string");
            doc.table.set(i, jj, k, parse_scalar(term["coeff"].get<std::string>(), allowed));
        }
    }

    if (j.contains("grading")) {
        GradingWitness w;
        for (const auto& d : j["grading"]) {
            if (!d.is_number_unsigned() || d.get<std::size_t>() == 0)
                throw Error(ErrorCode::SyntaxError, "grading degrees must be positive integers");
            w.degrees.push_back(d.get<std::size_t>());
        }
        if (w.degrees.size() != dim)
            throw Error(ErrorCode::IncompleteWitness,
                        "grading must assign a degree to every basis vector");
        doc.grading = std::move(w);
    }
    if (j.contains("anomalies"))
        for (const auto& a : j["anomalies"])
            doc.anomalies.push_back({a.value("location", std::string()),
                                     a.value("description", std::string())});
    return doc;
}

AlgebraDoc doc_from_entry(const catalog::CatalogEntry& entry) {
    return AlgebraDoc{entry.table, entry.witness, entry.profile.anomalies};
}

std::string emit_matrix(const LinearMap& m, const std::vector<std::string>& params) {
    ordered_json j;
    j["dim"] = m.dim();
    j["parameters"] = params;
    ordered_json columns = ordered_json::array();
    for (std::size_t c = 1; c <= m.dim(); ++c) {
        ordered_json col = ordered_json::array();
        for (const Scalar& entry : m.column(c)) col.push_back(print_scalar(entry));
        columns.push_back(std::move(col));
    }
    j["columns"] = std::move(columns);
    return j.dump(2) + "\n";
}

LinearMap load_matrix(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::SyntaxError, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_unsigned())
        throw Error(ErrorCode::SyntaxError, "matrix file needs a positive integer dim");
    const std::size_t dim = j["dim"].get<std::size_t>();
    std::set<std::string> allowed;
    if (j.contains("parameters"))
        for (const auto& p : j["parameters"]) allowed.insert(p.get<std::string>());
    if (!j.contains("columns") || !j["columns"].is_array() || j["columns"].size() != dim)
        throw Error(ErrorCode::DimensionMismatch, "columns must be a list of dim columns");
    std::vector<Vector> columns;
    for (const auto& col : j["columns"]) {
        if (!col.is_array() || col.size() != dim)
            throw Error(ErrorCode::DimensionMismatch, "each column must have dim entries");
        Vector v;
        for (const auto& entry : col) {
            if (!entry.is_string())
                throw Error(ErrorCode::SyntaxError, "matrix entries must be coefficient strings");
            v.push_back(parse_scalar(entry.get<std::string>(), allowed));
        }
        columns.push_back(std::move(v));
    }
    return LinearMap::from_columns(columns);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::SyntaxError, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::SyntaxError, "cannot write file: " + path);
    out << content;
}

} // namespace zinbiel::io
