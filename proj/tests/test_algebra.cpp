#include <doctest.h>

#include "helpers.hpp"

using namespace zinbiel;
using catalog::Section;

namespace {

Vector scaled(const Vector& v, const Scalar& s) {
    Vector out = v;
    for (auto& c : out) c *= s;
    return out;
}

Vector plus(const Vector& a, const Vector& b) {
    Vector out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

} // namespace

TEST_CASE("multiply expands the table bilinearly") {
    AlgebraTable nf4 = testing::make_named(Section::nulfiliform, "NF", 4);
    Vector p = multiply(nf4, basis_vector(4, 2), basis_vector(4, 2));
    CHECK(p == scaled(basis_vector(4, 4), Scalar(3)));

    AlgebraTable abelian(4);
    testing::Rng rng(11);
    CHECK(is_zero_vector(multiply(abelian, rng.vector(4), rng.vector(4))));

    AlgebraTable kf57 = testing::make_named(Section::r2_dim5, "KF_5^7");
    Vector q = multiply(kf57, basis_vector(5, 1),
                        plus(basis_vector(5, 2), basis_vector(5, 4)));
    CHECK(q == plus(basis_vector(5, 3), basis_vector(5, 5)));
}

TEST_CASE("defect expansion on known witnesses") {
    AlgebraTable abelian(3);
    testing::Rng rng(12);
    CHECK(is_zero_vector(zinbiel_defect(abelian, rng.vector(3), rng.vector(3), rng.vector(3))));

    // NF_3 with e_2 o e_1 removed: (e_1 e_1) e_1 - 2 e_1 (e_1 e_1) = -2 e_3
    AlgebraTable corrupted = testing::make_named(Section::nulfiliform, "NF", 3);
    corrupted.set(2, 1, 3, Scalar(0));
    Vector d = zinbiel_defect(corrupted, basis_vector(3, 1), basis_vector(3, 1),
                              basis_vector(3, 1));
    CHECK(d == scaled(basis_vector(3, 3), Scalar(-2)));

    AlgebraTable kf91 = testing::make_named(Section::r2_general, "KF_n^1", 9);
    CHECK(is_zero_vector(zinbiel_defect(kf91, basis_vector(9, 1), basis_vector(9, 8),
                                        basis_vector(9, 1))));
}

TEST_CASE("identity verdicts with deterministic witnesses") {
    CHECK(is_zinbiel(testing::make_named(Section::nulfiliform, "NF", 8)).holds);
    CHECK(is_zinbiel(testing::make_named(Section::dim_leq_4, "Z_4^8")).holds);

    AlgebraTable corrupted = testing::make_named(Section::nulfiliform, "NF", 3);
    corrupted.set(2, 1, 3, Scalar(0));
    ZinbielVerdict v = is_zinbiel(corrupted);
    REQUIRE_FALSE(v.holds);
    CHECK(v.i == 1);
    CHECK(v.j == 1);
    CHECK(v.k == 1);
    CHECK(v.defect == scaled(basis_vector(3, 3), Scalar(-2)));
}

TEST_CASE("defect is trilinear on randomized vectors") {
    AlgebraTable a = testing::make_named(Section::r2_dim6, "KF_6^6");
    testing::Rng rng(13);
    for (int iter = 0; iter < 10; ++iter) {
        Vector u = rng.vector(6), u2 = rng.vector(6), v = rng.vector(6), w = rng.vector(6);
        Scalar t(rng.rational());
        Vector lhs = zinbiel_defect(a, plus(u, scaled(u2, t)), v, w);
        Vector rhs = plus(zinbiel_defect(a, u, v, w),
                          scaled(zinbiel_defect(a, u2, v, w), t));
        CHECK(lhs == rhs);
        lhs = zinbiel_defect(a, u, plus(v, scaled(w, t)), w);
        rhs = plus(zinbiel_defect(a, u, v, w), scaled(zinbiel_defect(a, u, w, w), t));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("holds verdict implies zero defect on random vectors") {
    AlgebraTable a = testing::make_named(Section::r2_dim5, "KF_5^16");
    REQUIRE(is_zinbiel(a).holds);
    testing::Rng rng(14);
    for (int iter = 0; iter < 100; ++iter)
        CHECK(is_zero_vector(zinbiel_defect(a, rng.vector(5), rng.vector(5), rng.vector(5))));
}

TEST_CASE("multiplication commutes with parameter evaluation") {
    AlgebraTable sym = testing::make_named(Section::dim_leq_4, "Z_4^8");
    std::map<std::string, Rational> sigma{{"alpha", Rational(5, 3)}};
    AlgebraTable inst = catalog::make({Section::dim_leq_4, "Z_4^8", std::nullopt},
                                      {{"alpha", Rational(5, 3)}})
                            .table;
    testing::Rng rng(15);
    for (int iter = 0; iter < 20; ++iter) {
        Vector u = rng.vector(4), v = rng.vector(4);
        Vector ps = multiply(sym, u, v);
        Vector pi = multiply(inst, u, v);
        for (std::size_t k = 0; k < 4; ++k)
            CHECK(ps[k].eval(sigma) == pi[k].eval(sigma));
    }
}

TEST_CASE("table indices are checked") {
    AlgebraTable a(3);
    CHECK_THROWS_AS(a.set(0, 1, 1, Scalar(1)), Error);
    CHECK_THROWS_AS(a.set(1, 4, 1, Scalar(1)), Error);
    CHECK_THROWS_AS(multiply(a, Vector(2), Vector(3)), Error);
}
