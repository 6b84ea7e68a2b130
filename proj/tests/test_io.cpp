#include <doctest.h>

#include "helpers.hpp"
#include "zinbiel/io.hpp"

using namespace zinbiel;
using catalog::Section;

TEST_CASE("round-trip is byte-identical on every constructible entry") {
    for (const auto& f : catalog::list_keys(std::nullopt, true)) {
        std::vector<std::size_t> ns = f.general_n
                                          ? std::vector<std::size_t>{f.min_n, f.min_n + 3}
                                          : std::vector<std::size_t>{0};
        for (std::size_t n : ns) {
            catalog::CatalogKey key{f.section, f.name,
                                    f.general_n ? std::optional<std::size_t>(n) : std::nullopt};
            std::optional<catalog::CatalogEntry> e;
            try {
                e = catalog::make(key);
            } catch (const Error&) {
                continue; // the quarantined duplicate entry
            }
            std::string once = io::emit_algebra(io::doc_from_entry(*e));
            std::string twice = io::emit_algebra(io::load_algebra(once));
            CHECK(once == twice);
        }
    }
}

TEST_CASE("loaded documents preserve table, grading and anomalies") {
    auto e = catalog::make({Section::r2_dim6, "KF_6^7", std::nullopt});
    io::AlgebraDoc doc = io::load_algebra(io::emit_algebra(io::doc_from_entry(e)));
    CHECK(doc.table == e.table);
    REQUIRE(doc.grading);
    CHECK(doc.grading->degrees == e.witness->degrees);
    REQUIRE(doc.anomalies.size() == e.profile.anomalies.size());
}

TEST_CASE("duplicate product blocks are rejected") {
    std::string text = R"({
  "schema_version": "1",
  "dim": 2,
  "parameters": [],
  "products": [
    {"i": 1, "j": 1, "terms": [{"k": 2, "coeff": "1"}]},
    {"i": 1, "j": 1, "terms": [{"k": 2, "coeff": "2"}]}
  ]
})";
    CHECK_THROWS_AS(io::load_algebra(text), Error);
    try {
        io::load_algebra(text);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IllFormedEntry);
    }
}

TEST_CASE("out-of-range indices are rejected") {
    std::string text = R"({
  "schema_version": "1",
  "dim": 2,
  "parameters": [],
  "products": [{"i": 1, "j": 3, "terms": [{"k": 2, "coeff": "1"}]}]
})";
    try {
        io::load_algebra(text);
        FAIL("expected IllFormedEntry");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IllFormedEntry);
    }
}

TEST_CASE("coefficients may only use declared parameters") {
    std::string text = R"({
  "schema_version": "1",
  "dim": 2,
  "parameters": ["alpha"],
  "products": [{"i": 1, "j": 1, "terms": [{"k": 2, "coeff": "beta"}]}]
})";
    try {
        io::load_algebra(text);
        FAIL("expected UnknownParameter");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownParameter);
    }
}

TEST_CASE("grading array must cover every basis vector") {
    std::string text = R"({
  "schema_version": "1",
  "dim": 3,
  "parameters": [],
  "products": [{"i": 1, "j": 1, "terms": [{"k": 2, "coeff": "1"}]}],
  "grading": [1, 2]
})";
    try {
        io::load_algebra(text);
        FAIL("expected IncompleteWitness");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IncompleteWitness);
    }
}

TEST_CASE("malformed input raises SyntaxError") {
    for (const char* text :
         {"{", "[]", R"({"schema_version": "2", "dim": 1, "parameters": [], "products": []})",
          R"({"dim": 1})"}) {
        try {
            io::load_algebra(text);
            FAIL("expected SyntaxError for: " << text);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::SyntaxError);
        }
    }
}

TEST_CASE("matrix files round-trip") {
    testing::Rng rng(31);
    LinearMap m = rng.invertible_map(4);
    std::string once = io::emit_matrix(m);
    LinearMap back = io::load_matrix(once);
    CHECK(back.matrix() == m.matrix());
    CHECK(io::emit_matrix(back) == once);
}
