#include <gtest/gtest.h>

#include <dltzeta/zeta.hpp>

#include "fixtures.hpp"

using namespace dltz;

namespace {

Rational q(const char *s) { return parse_rational(s); }

RationalFunction rf(long c) { return RationalFunction(Rational(c)); }

RationalFunction L() { return l_power(1); }

RationalFunction w(const char *a) { return stringy_factor(q(a)); }

ZetaTerm term(const RationalFunction &c, std::vector<DenomPair> d)
{
    std::sort(d.begin(), d.end());
    return ZetaTerm(MotiveClass(c), d);
}

const DenomPair d0{1, 1}, d1{12, 10}, d2{6, 5}, d3{18, 15};

// Stringy value of the edge strata E_1 cap E_2 and E_1 cap E_3.
RationalFunction edge_value() { return L() - rf(2) + w("1/2") + w("1/3"); }

std::set<std::string> names(const std::vector<StratumInfo> &v)
{
    std::set<std::string> out;
    for (const auto &s : v)
        out.insert(s.name);
    return out;
}

std::set<Rational> ratios(const PoleReport &p)
{
    std::set<Rational> out;
    for (const auto &c : p.candidates)
        out.insert(c.ratio);
    return out;
}

struct CurveCase {
    const char *poly;
    std::vector<const char *> models;
};

const std::vector<CurveCase> kCurves = {
    {"curve1", {"curve1_min", "curve1_blowup"}},
    {"curve2", {"curve2_min", "curve2_blowup"}},
    {"curve3", {"curve3_min", "curve3_blowup"}},
};

} // namespace

TEST(Strata, Sigma1)
{
    auto f = fx::poly();
    auto s = enumerate_strata(f, fx::fan("sigma1"));
    std::set<std::string> expected = {"{}", "{0}", "{1}", "{2}", "{0,1}", "{0,2}", "{1,2}", "{0,1,2}"};
    EXPECT_EQ(names(s), expected);
    for (const auto &i : s)
        if (i.name == "{0,1,2}") {
            EXPECT_EQ(i.dens, (std::vector<DenomPair>{d0, d2, d1}));
            EXPECT_EQ(i.open_class, MotiveClass(rf(1)));
        }
}

TEST(Strata, SigmaBKeepsTheEdge)
{
    // <rho_1, rho_2> is a face of two maximal cones of Sigma_B.
    auto f = fx::poly();
    auto fan = fx::fan("sigmaB");
    EXPECT_TRUE(fan.contains_cone(fx::cone(fan, {"1", "2"})));
    auto n = names(enumerate_strata(f, fan));
    EXPECT_TRUE(n.count("{1,2}"));
    EXPECT_TRUE(n.count("{0,1,2}"));
}

TEST(Strata, SmoothHyperplane)
{
    Polynomial x;
    x.nvars = 3;
    x.terms[lv({1, 0, 0})] = 1;
    EXPECT_EQ(names(enumerate_strata(x, fx::fan("sigma3"))), (std::set<std::string>{"{}", "{0}"}));
}

TEST(Filter, Parsing)
{
    auto fan = fx::fan("sigma1");
    auto a = parse_closed_set(fan, "E1 cap E2");
    ASSERT_EQ(a.parts.size(), 1u);
    EXPECT_EQ(a.parts[0].cone, fx::cone(fan, {"1", "2"}));
    auto b = parse_closed_set(fan, "V(y,2);E0 cap V(2)");
    ASSERT_EQ(b.parts.size(), 2u);
    EXPECT_EQ(b.parts[0].cone, fx::cone(fan, {"y", "2"}));
    EXPECT_TRUE(b.parts[1].e0);
    EXPECT_THROW(parse_closed_set(fan, "V(x,y,z)"), Error);
}

TEST(DltZeta, Z1ClosedForm)
{
    auto f = fx::poly();
    auto fan = fx::fan("sigma1");
    auto z = dlt_zeta(f, fan, parse_closed_set(fan, "E1 cap E2"));
    ZetaExpr closed({term(edge_value(), {d1, d2}), term(rf(1), {d0, d1, d2})});
    EXPECT_TRUE(expr_equal(z.expr, closed * l_power(-3)));
    EXPECT_EQ(z.breakdown.size(), 2u);
}

TEST(DltZeta, Z2ClosedForm)
{
    auto f = fx::poly();
    auto fan = fx::fan("sigma2");
    auto z = dlt_zeta(f, fan, parse_closed_set(fan, "E3"));
    RationalFunction lm1 = L() - rf(1);
    ZetaExpr closed({term(lm1 * lm1 + lm1, {d3}), term(lm1, {d0, d3}), term(edge_value(), {d1, d3}),
                      term(rf(1), {d0, d1, d3}), term(edge_value(), {d2, d3}), term(rf(1), {d0, d2, d3})});
    EXPECT_TRUE(expr_equal(z.expr, closed * l_power(-3)));
    EXPECT_EQ(z.breakdown.size(), 6u);
}

TEST(DltZeta, BlowupDifference)
{
    auto f = fx::poly();
    auto s1 = fx::fan("sigma1"), s2 = fx::fan("sigma2");
    auto z1 = dlt_zeta(f, s1, parse_closed_set(s1, "E1 cap E2"));
    auto z2 = dlt_zeta(f, s2, parse_closed_set(s2, "E3"));
    auto cmp = compare_zeta(z1, z2);
    EXPECT_FALSE(cmp.equal);
    RationalFunction lm1 = L() - rf(1);
    ZetaExpr closed({term((w("1/2") + w("1/3") - rf(2)) * lm1, {d3})});
    // The closed form below omits the common factor L^(-3).
    EXPECT_TRUE(expr_equal(cmp.difference, closed * l_power(-3)));
    EXPECT_FALSE(expr_equal(cmp.difference, closed));

    // Unfiltered: the shared strata cancel, opaque atoms included.
    auto full = compare_zeta(dlt_zeta(f, s1), dlt_zeta(f, s2));
    EXPECT_TRUE(expr_equal(full.difference, cmp.difference));
}

TEST(DltZeta, FlopContributions)
{
    auto f = fx::poly();
    auto a = fx::fan("sigmaA"), b = fx::fan("sigmaB");
    auto za = dlt_zeta(f, a, parse_closed_set(a, "V(y,2)"));
    auto zb = dlt_zeta(f, b, parse_closed_set(b, "V(x,1)"));
    RationalFunction lm1 = L() - rf(1);
    ZetaExpr pa({term(lm1 * w("1/2") + w("1/2"), {d2}), term(w("1/2"), {d1, d2})});
    ZetaExpr pb({term(lm1 + (L() + rf(1)) * w("1/2"), {d1}), term(w("1/2"), {d1, d2})});
    // Closed forms without the factor L^(-3).
    EXPECT_TRUE(expr_equal(za.expr, pa * l_power(-3)));
    EXPECT_TRUE(expr_equal(zb.expr, pb * l_power(-3)));
    EXPECT_FALSE(compare_zeta(za, zb).equal);
    EXPECT_FALSE(compare_zeta(dlt_zeta(f, a), dlt_zeta(f, b)).equal);
    EXPECT_TRUE(expr_equal(compare_zeta(dlt_zeta(f, a), dlt_zeta(f, b)).difference, (za.expr - zb.expr)));
}

TEST(DltZeta, CrepantDistinctness)
{
    auto f = fx::poly();
    auto a = fx::fan("sigmaA"), b = fx::fan("sigmaB");
    Stratum e1a = parse_stratum(a, "1"), e1b = parse_stratum(b, "1");
    MotiveClass diff = stratum_pair_stringy(f, b, e1b) - stratum_pair_stringy(f, a, e1a);
    EXPECT_FALSE(diff.has_opaque_atoms());
    EXPECT_EQ(diff, MotiveClass(L() - rf(1) + (L() + rf(1)) * w("1/2")));
    EXPECT_FALSE(diff.is_zero());
}

TEST(DltZeta, FilterLinearity)
{
    auto f = fx::poly();
    auto fan = fx::fan("sigma2");
    auto both = dlt_zeta(f, fan, parse_closed_set(fan, "E1;E2"));
    auto e1 = dlt_zeta(f, fan, parse_closed_set(fan, "E1"));
    auto e2 = dlt_zeta(f, fan, parse_closed_set(fan, "E2"));
    EXPECT_TRUE(expr_equal(both.expr, e1.expr + e2.expr));
}

TEST(DltZeta, PartialFractionIdentity)
{
    RationalFunction lm1 = L() - rf(1);
    ZetaExpr lhs({term(rf(1), {d1, d2})});
    ZetaExpr rhs({term(rf(1), {d1, d3}), term(rf(1), {d2, d3}), term(lm1, {d3})});
    EXPECT_TRUE(expr_equal(lhs, rhs));
}

TEST(DlZeta, SmoothHyperplane)
{
    Polynomial x;
    x.nvars = 3;
    x.terms[lv({1, 0, 0})] = 1;
    RationalFunction l = L();
    auto z = dl_zeta(x, fx::fan("sigma3"));
    ZetaExpr expect({term(l * l * l - l * l, {}), term(l * l, {d0})});
    EXPECT_TRUE(expr_equal(z.expr, expect * l_power(-3)));
    EXPECT_TRUE(expr_equal(z.expr, dlt_zeta(x, fx::fan("sigma3")).expr));
}

TEST(DlZeta, RequiresRegularFan)
{
    try {
        dl_zeta(fx::poly(), fx::fan("sigma1"));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::not_regular);
    }
}

TEST(DlZeta, ResolutionCandidates)
{
    auto f = fx::poly();
    auto res = fx::fan("sigma_res");
    auto z = dl_zeta(f, res);
    EXPECT_EQ(ratios(pole_report(z)), (std::set<Rational>{q("1"), q("5/6"), q("7/8")}));
}

TEST(DlZeta, RefinementInvariance)
{
    auto f = fx::poly();
    auto base = dl_zeta(f, resolve_fan(fx::fan("sigma1")).fan).expr;
    EXPECT_TRUE(expr_equal(base, dl_zeta(f, resolve_fan(fx::fan("sigma2")).fan).expr));
    EXPECT_TRUE(expr_equal(base, dl_zeta(f, resolve_fan(fx::fan("sigmaB")).fan).expr));
    EXPECT_TRUE(expr_equal(base, dl_zeta(f, resolve_fan(fx::fan("sigma1"), {{}, 2}).fan).expr));
}

TEST(DlZeta, AgreesWithDltOnRegularModels)
{
    for (const auto &c : kCurves)
        for (const char *m : c.models) {
            auto f = fx::poly(c.poly);
            auto fan = fx::fan(m);
            bool regular = std::all_of(fan.cones.begin(), fan.cones.end(),
                                       [&](const ConeIdx &k) { return cone_multiplicity(fan, k) == 1; });
            if (!regular)
                continue;
            ASSERT_TRUE(certify_dlt_modification(f, fan).valid()) << m;
            EXPECT_TRUE(expr_equal(dl_zeta(f, fan).expr, dlt_zeta(f, fan).expr)) << m;
        }
}

TEST(Curves, ModelsCertify)
{
    for (const auto &c : kCurves)
        for (const char *m : c.models) {
            auto cert = certify_dlt_modification(fx::poly(c.poly), fx::fan(m));
            EXPECT_TRUE(cert.valid()) << m << ": " << (cert.failures.empty() ? "" : cert.failures[0]);
        }
    auto bad = certify_dlt_modification(fx::poly("curve2"), fx::fan("curve2_singular"));
    EXPECT_TRUE(bad.lc.log_canonical);
    EXPECT_FALSE(bad.valid());
}

TEST(Curves, WellDefinedInDimensionTwo)
{
    for (const auto &c : kCurves) {
        auto f = fx::poly(c.poly);
        auto first = dlt_zeta(f, fx::fan(c.models[0])).expr;
        for (std::size_t i = 1; i < c.models.size(); ++i)
            EXPECT_TRUE(expr_equal(first, dlt_zeta(f, fx::fan(c.models[i])).expr)) << c.models[i];
        // Not equal to the Denef-Loeser function in general, but with the same poles.
        auto dl = dl_zeta(f, resolve_fan(fx::fan(c.models[0])).fan).expr;
        std::set<Rational> a, b;
        for (const auto &d : pole_report(first).detected)
            a.insert(d.ratio);
        for (const auto &d : pole_report(dl).detected)
            b.insert(d.ratio);
        EXPECT_EQ(a, b) << c.poly;
        EXPECT_FALSE(a.empty());
    }
}

TEST(Poles, CandidateSets)
{
    auto f = fx::poly();
    auto p1 = pole_report(dlt_zeta(f, fx::fan("sigma1")));
    EXPECT_EQ(ratios(p1), (std::set<Rational>{q("1"), q("5/6")}));
    auto p2 = pole_report(dlt_zeta(f, fx::fan("sigma2")));
    EXPECT_EQ(ratios(p2), (std::set<Rational>{q("1"), q("5/6")}));
    bool has_rho3 = false;
    for (const auto &c : p2.candidates)
        for (const auto &d : c.sources)
            has_rho3 |= d == d3;
    EXPECT_TRUE(has_rho3);
}

TEST(Poles, Z1Detected)
{
    auto f = fx::poly();
    auto fan = fx::fan("sigma1");
    auto p = pole_report(dlt_zeta(f, fan, parse_closed_set(fan, "E1 cap E2")));
    EXPECT_EQ(ratios(p), (std::set<Rational>{q("1"), q("5/6")}));
    bool found = false;
    for (const auto &d : p.detected)
        found |= d.ratio == q("5/6");
    EXPECT_TRUE(found);
    for (const auto &d : p.detected)
        EXPECT_TRUE(ratios(p).count(d.ratio));
}

TEST(Poles, DifferenceHasSimplePole)
{
    auto f = fx::poly();
    auto s1 = fx::fan("sigma1"), s2 = fx::fan("sigma2");
    auto cmp = compare_zeta(dlt_zeta(f, s1, parse_closed_set(s1, "E1 cap E2")),
                            dlt_zeta(f, s2, parse_closed_set(s2, "E3")));
    auto p = pole_report(cmp.difference);
    ASSERT_EQ(p.detected.size(), 1u);
    EXPECT_EQ(p.detected[0].ratio, q("5/6"));
    EXPECT_EQ(p.detected[0].order, 1);
}

TEST(Poles, ZeroExpression)
{
    ZetaExpr z({term(rf(1), {d1}), term(rf(-1), {d1})});
    EXPECT_TRUE(pole_report(z).detected.empty());
}

TEST(Poles, OrderTwo)
{
    // (L - 1)^2 / (L^(2s+2) - 1)^2 has a double pole at s = -1.
    ZetaExpr z({term(rf(1), {DenomPair{2, 2}, DenomPair{2, 2}})});
    auto p = pole_report(z);
    ASSERT_EQ(p.detected.size(), 1u);
    EXPECT_EQ(p.detected[0].order, 2);
    EXPECT_TRUE(p.detected[0].non_real);
}
