#include <cmath>

#include <gtest/gtest.h>

#include <geofit/diagnostics.hpp>
#include <geofit/oracle.hpp>

#include "random_clouds.hpp"

using namespace geofit;

TEST(Diagnostics, TwoPointResidualIsZero)
{
    const auto f = fit(PointCloud(std::vector<double>{0, 2}, std::vector<double>{1, 5}));
    EXPECT_EQ(residuals(f), Vector({0, 0}));
    EXPECT_EQ(sse(f), 0.0);

    const auto d = orthogonality_report(f);
    EXPECT_LE(std::abs(d.residual_dot_i), 1e-12);
    EXPECT_LE(std::abs(d.ones_dot_i), 1e-12);
    EXPECT_LE(std::abs(d.ones_dot_u), 1e-12);
}

TEST(Diagnostics, ConstantResponse)
{
    const auto f = fit(PointCloud(std::vector<double>{1, 4, 6}, std::vector<double>{2, 2, 2}));
    EXPECT_EQ(f.slope, 0.0);
    EXPECT_EQ(residuals(f), Vector({0, 0, 0}));
    const auto d = orthogonality_report(f);
    EXPECT_EQ(d.ones_dot_u_normalized, 0.0); // |u| = 0, never NaN
}

TEST(Diagnostics, Example1)
{
    const auto cloud = testkit::example1();
    const auto f = fit(cloud);
    const auto res = residuals(f);

    // direct summation of (y~ - a x~)^2
    long double direct = 0.0L;
    for (std::size_t k = 0; k < res.size(); ++k)
    {
        const long double d = static_cast<long double>(f.centered.u_vec[k]) -
                              static_cast<long double>(f.slope) * f.centered.i_vec[k];
        direct += d * d;
    }
    const double pythagoras = norm_sq(f.centered.u_vec) - f.slope * f.slope * norm_sq(f.centered.i_vec);
    EXPECT_NEAR(norm_sq(res), static_cast<double>(direct), 1e-12 * static_cast<double>(direct));
    EXPECT_NEAR(sse(f), pythagoras, 1e-6 * pythagoras);
    EXPECT_NEAR(sse(f), testkit::ex1::sse, 1e-9 * testkit::ex1::sse);
    EXPECT_NEAR(sse(f), oracle::sse_of(cloud, f.slope, f.intercept), 1e-9 * sse(f));

    for (double da : {-0.5, -1e-3, 1e-3, 0.5})
        for (double db : {-1.0, 0.0, 1.0})
            EXPECT_GE(oracle::sse_of(cloud, f.slope + da, f.intercept + db), sse(f));
}

TEST(Diagnostics, OrthogonalityOnExamples)
{
    for (const auto& cloud : {testkit::example1(), testkit::example2()})
    {
        const auto d = orthogonality_report(fit(cloud));
        EXPECT_LE(std::abs(d.residual_dot_i_normalized), 1e-6);
        EXPECT_LE(std::abs(d.ones_dot_i_normalized), 1e-6);
        EXPECT_LE(std::abs(d.ones_dot_u_normalized), 1e-6);
    }
}

TEST(DiagnosticsProperty, Geometry)
{
    testkit::CloudGenerator gen(41);
    for (int trial = 0; trial < 300; ++trial)
    {
        const auto cloud = gen(gen.size_in(2, 30));
        const auto f = fit(cloud);
        const auto d = orthogonality_report(f);
        const double n = static_cast<double>(cloud.size());

        EXPECT_NEAR(d.sse, norm_sq(d.residual), 1e-12 * d.sse);
        EXPECT_GE(d.sse, 0.0);

        const double uu = norm_sq(f.centered.u_vec);
        EXPECT_NEAR(uu, norm_sq(f.j_vec) + d.sse, 1e-9 * uu);

        const double ybound = n * 1e-9 * std::max(1.0, max_abs(cloud.ys()));
        EXPECT_LE(std::abs(sum(d.residual)), ybound);
        EXPECT_LE(std::abs(dot(ones(cloud.size()), f.j_vec)), std::abs(f.slope) * n * 1e-9 * std::max(1.0, max_abs(cloud.xs())));

        for (std::size_t k = 0; k < cloud.size(); ++k)
        {
            const double raw = cloud.ys()[k] - predict(f, cloud.xs()[k]);
            EXPECT_NEAR(raw, d.residual[k], 1e-9 * std::max(1.0, max_abs(cloud.ys())));
        }
    }
}
