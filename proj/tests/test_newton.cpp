#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace dltz;

namespace {

// Brute-force minimum, written out for the four monomials of f.
long brute_N(long a, long b, long c)
{
    return std::min({4 * a, 2 * a + 2 * b, 6 * b, 3 * c});
}

Polynomial from_text(const std::string &s) { return parse_polynomial(nlohmann::json::parse(s)); }

} // namespace

TEST(ParsePolynomial, PaperPolynomial)
{
    Polynomial f = fx::poly();
    EXPECT_EQ(f.nvars, 3u);
    EXPECT_EQ(f.terms.size(), 4u);
    EXPECT_EQ(f.terms.at(lv({2, 2, 0})), 1);
}

TEST(ParsePolynomial, Errors)
{
    auto code = [](const std::string &s) {
        try {
            from_text(s);
        } catch (const Error &e) {
            return e.code();
        }
        return Errc::invalid_argument;
    };
    EXPECT_EQ(code(R"({"nvars":3,"terms":[{"exp":[1,0,0],"coef":"1"},{"exp":[1,0,0],"coef":"-1"}]})"),
              Errc::empty_polynomial);
    EXPECT_EQ(code(R"({"nvars":3,"terms":[{"exp":[0,0,0],"coef":"1"},{"exp":[1,0,0],"coef":"1"}]})"),
              Errc::constant_term_present);
    EXPECT_EQ(code(R"({"nvars":3,"terms":[{"exp":[1,0],"coef":"1"}]})"), Errc::schema_error);
    EXPECT_EQ(code(R"({"nvars":3,"terms":[{"exp":[1,0,0],"coef":"x"}]})"), Errc::schema_error);
    EXPECT_EQ(code(R"({"terms":[]})"), Errc::schema_error);
}

TEST(NewtonData, PaperValues)
{
    Polynomial f = fx::poly();
    auto d1 = newton_data(f, lv({3, 3, 4}));
    EXPECT_EQ(d1.N, 12);
    EXPECT_EQ(d1.nu, 10);
    auto d6 = newton_data(f, lv({1, 1, 1}));
    EXPECT_EQ(d6.N, 3);
    EXPECT_EQ(d6.nu, 3);
    auto dz = newton_data(f, lv({0, 0, 1}));
    EXPECT_EQ(dz.N, brute_N(0, 0, 1));
    EXPECT_EQ(dz.N, 0);
    EXPECT_EQ(dz.nu, 1);
    try {
        newton_data(f, lv({1, -1, 0}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::negative_coordinate);
    }
}

TEST(FaceOfCone, Examples)
{
    Polynomial f = fx::poly();
    NewtonFace seg{{lv({0, 0, 3}), lv({2, 2, 0})}, 1};
    EXPECT_EQ(face_of_cone(f, Cone{{lv({5, 4, 6})}}), seg);
    EXPECT_EQ(face_of_cone(f, Cone{{lv({3, 3, 4}), lv({2, 1, 2})}}), seg);
    NewtonFace vtx{{lv({0, 0, 3})}, 0};
    EXPECT_EQ(face_of_cone(f, Cone{{lv({1, 1, 1})}}), vtx);
    EXPECT_EQ(face_of_cone(f, Cone{}).vertices.size(), 4u);
}

TEST(FaceStratumClass, Examples)
{
    Polynomial f = fx::poly();
    Fan s2 = fx::fan("sigma2"), s1 = fx::fan("sigma1");
    EXPECT_EQ(face_stratum_class(f, s2, fx::cone(s2, {"3"})).str(), "L - 1");
    EXPECT_EQ(face_stratum_class(f, s1, fx::cone(s1, {"1", "2"})), MotiveClass(Rational(1)));
    auto atom = face_stratum_class(f, s1, fx::cone(s1, {"2"}));
    ASSERT_TRUE(atom.has_opaque_atoms());
    const auto &a = atom.parts().begin()->first;
    EXPECT_EQ(a.dim, 1);
    EXPECT_NE(a.key.find("E0-stratum"), std::string::npos);
    EXPECT_NE(a.key.find("(0,6,0)"), std::string::npos);
    // {y^6 + z^3 = 0} in the 2-torus: three cosets of a 1-torus.
    EXPECT_EQ(face_stratum_class(f, s1, fx::cone(s1, {"x"})), MotiveClass::torus(1) * RationalFunction(Rational(3)));
    // Vertex face x^4: empty stratum.
    EXPECT_TRUE(face_stratum_class(f, s1, fx::cone(s1, {"y", "z"})).is_zero());
}

TEST(SegmentNondegeneracy, Examples)
{
    Polynomial f = fx::poly();
    EXPECT_TRUE(check_segment_nondegeneracy(f, face_of_cone(f, Cone{{lv({5, 4, 6})}})));
    EXPECT_TRUE(check_segment_nondegeneracy(f, NewtonFace{{lv({0, 0, 3})}, 0}));
    Polynomial g = from_text(R"({"nvars":2,"terms":[{"exp":[2,0],"coef":"1"},{"exp":[1,1],"coef":"2"},{"exp":[0,2],"coef":"1"}]})");
    EXPECT_FALSE(check_segment_nondegeneracy(g, face_of_cone(g, Cone{{lv({1, 1})}})));
    Polynomial h = from_text(R"({"nvars":2,"terms":[{"exp":[2,0],"coef":"1"},{"exp":[1,1],"coef":"3"},{"exp":[0,2],"coef":"1"}]})");
    EXPECT_TRUE(check_segment_nondegeneracy(h, face_of_cone(h, Cone{{lv({1, 1})}})));
    try {
        check_segment_nondegeneracy(f, face_of_cone(f, Cone{}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::dimension_too_high);
    }
}

TEST(NewtonProperty, SuperadditiveHomogeneousLinear)
{
    Polynomial f = fx::poly();
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> d(0, 9);
    for (int k = 0; k < 200; ++k) {
        LatticeVector u = lv({d(rng), d(rng), d(rng)}), v = lv({d(rng), d(rng), d(rng)});
        if (is_zero(u) || is_zero(v))
            continue;
        auto du = newton_data(f, u), dv = newton_data(f, v), dw = newton_data(f, u + v);
        EXPECT_GE(dw.N, du.N + dv.N);
        EXPECT_EQ(dw.nu, du.nu + dv.nu);
        EXPECT_EQ(newton_data(f, Integer(3) * u).N, 3 * du.N);
        EXPECT_EQ(du.N, brute_N(u[0].get_si(), u[1].get_si(), u[2].get_si()));
    }
}

TEST(NewtonProperty, FaceMonotoneAndVertexClassZero)
{
    Polynomial f = fx::poly();
    for (const char *name : {"sigma1", "sigma2", "sigma_res", "sigmaB"}) {
        Fan fan = fx::fan(name);
        for (const auto &c : fan.all_cones()) {
            NewtonFace fc = face_of_cone(f, fan.cone(c));
            for (const auto &m : fan.cones) {
                if (!is_subset(c, m))
                    continue;
                NewtonFace fm = face_of_cone(f, fan.cone(m));
                EXPECT_TRUE(std::includes(fc.vertices.begin(), fc.vertices.end(), fm.vertices.begin(),
                                          fm.vertices.end()));
            }
            if (fc.dim == 0) {
                EXPECT_TRUE(face_stratum_class(f, fan, c).is_zero());
            }
            if (fc.dim == 1) {
                // Coset count = lattice length, by an independent gcd of the differences.
                auto a = fc.vertices.front(), b = fc.vertices.back();
                long g = 0;
                for (int i = 0; i < 3; ++i)
                    g = std::gcd(g, std::abs(Integer(b[i] - a[i]).get_si()));
                MotiveClass cls = face_stratum_class(f, fan, c);
                MotiveClass expect = MotiveClass::torus(static_cast<unsigned>(3 - c.size() - 1)) *
                                     RationalFunction(Rational(g));
                EXPECT_EQ(cls, expect);
            }
        }
    }
}
