#include <cmath>

#include <gtest/gtest.h>

#include <geofit/cloud.hpp>

#include "random_clouds.hpp"

using namespace geofit;

TEST(Cloud, RequiresMatchingColumns)
{
    EXPECT_THROW(PointCloud(std::vector<double>{1, 2}, std::vector<double>{1}), Error);
    EXPECT_THROW(PointCloud(std::vector<double>{}, std::vector<double>{}), Error);
}

TEST(Cloud, CentroidOfExamples)
{
    const auto c1 = centroid(testkit::example1());
    EXPECT_NEAR(c1.x, 16.6417, 1e-4);
    EXPECT_NEAR(c1.y, 64.9167, 1e-4);

    const auto c2 = centroid(testkit::example2());
    EXPECT_EQ(c2.x, 78.5);
    EXPECT_NEAR(c2.y, 29648.583, 1e-3);

    const auto single = centroid(PointCloud(std::vector<double>{5}, std::vector<double>{7}));
    EXPECT_EQ(single, (Point2{5, 7}));
}

TEST(Cloud, CenterFirstRows)
{
    const auto c1 = center(testkit::example1());
    EXPECT_NEAR(c1.i_vec[0], -5.3417, 1e-4);
    EXPECT_NEAR(c1.u_vec[0], 57.0833, 1e-4);

    const auto c2 = center(testkit::example2());
    EXPECT_NEAR(c2.i_vec[0], -11.5, 1e-3);
    EXPECT_NEAR(c2.u_vec[0], -2380.583, 1e-3);
    EXPECT_EQ(c2.i_vec[23], 11.5);
}

TEST(Cloud, AlreadyCentered)
{
    const PointCloud cloud(std::vector<double>{-1, 0, 1}, std::vector<double>{2, -4, 2});
    const auto c = center(cloud);
    EXPECT_EQ(c.centroid, (Point2{0, 0}));
    EXPECT_EQ(c.i_vec, cloud.xs());
    EXPECT_EQ(c.u_vec, cloud.ys());
}

TEST(CloudProperty, CenteringInvariants)
{
    testkit::CloudGenerator gen(11);
    for (int trial = 0; trial < 300; ++trial)
    {
        const auto cloud = gen(gen.size_in(1, 40));
        const auto c = center(cloud);
        const double n = static_cast<double>(cloud.size());

        EXPECT_LE(std::abs(sum(c.i_vec)), n * 1e-9 * std::max(1.0, max_abs(cloud.xs())));
        EXPECT_LE(std::abs(sum(c.u_vec)), n * 1e-9 * std::max(1.0, max_abs(cloud.ys())));
        EXPECT_LE(std::abs(dot(ones(cloud.size()), c.i_vec)), n * 1e-9 * std::max(1.0, max_abs(cloud.xs())));

        const auto back = uncenter(c);
        for (std::size_t k = 0; k < cloud.size(); ++k)
        {
            EXPECT_NEAR(back.xs()[k], cloud.xs()[k], 1e-12 * std::max(1.0, max_abs(cloud.xs())));
            EXPECT_NEAR(back.ys()[k], cloud.ys()[k], 1e-12 * std::max(1.0, max_abs(cloud.ys())));
        }

        const auto again = center(PointCloud(c.i_vec, c.u_vec));
        for (std::size_t k = 0; k < cloud.size(); ++k)
        {
            EXPECT_NEAR(again.i_vec[k], c.i_vec[k], 1e-12 * std::max(1.0, max_abs(cloud.xs())));
            EXPECT_NEAR(again.u_vec[k], c.u_vec[k], 1e-12 * std::max(1.0, max_abs(cloud.ys())));
        }
    }
}
