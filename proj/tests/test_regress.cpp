#include <cmath>

#include <gtest/gtest.h>

#include <geofit/oracle.hpp>
#include <geofit/regress.hpp>

#include "random_clouds.hpp"

using namespace geofit;
namespace ex1 = geofit::testkit::ex1;
namespace ex2 = geofit::testkit::ex2;

namespace
{

ErrorKind kind_of(auto&& fn)
{
    try
    {
        fn();
    }
    catch (const Error& e)
    {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvalidArgument;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

} // namespace

TEST(Regress, SlopeOfExamples)
{
    EXPECT_NEAR(fit_slope_centered(center(testkit::example1())), -9.7069, 1e-3);
    EXPECT_NEAR(fit_slope_centered(center(testkit::example2())), 227.809, 1e-2);
    EXPECT_NEAR(fit_slope_centered(center(testkit::example1())), ex1::slope, 1e-12);

    const PointCloud line(std::vector<double>{0, 1, 2}, std::vector<double>{1, 3, 5});
    EXPECT_EQ(fit_slope_centered(center(line)), 2.0);
}

TEST(Regress, FitExamples)
{
    const auto f1 = fit(testkit::example1());
    EXPECT_NEAR(f1.slope, -9.7069, 1e-3);
    EXPECT_NEAR(f1.intercept, 226.4557, 0.05);
    EXPECT_NEAR(f1.intercept, ex1::intercept, 1e-10);

    const auto f2 = fit(testkit::example2());
    EXPECT_NEAR(f2.slope, 227.809, 0.01);
    EXPECT_NEAR(f2.intercept, 11765.601, 0.5);
    EXPECT_NEAR(f2.intercept, ex2::intercept, 1e-8);
}

TEST(Regress, TwoPointsGiveExactLine)
{
    const auto f = fit(PointCloud(std::vector<double>{0, 2}, std::vector<double>{1, 5}));
    EXPECT_EQ(f.slope, 2.0);
    EXPECT_EQ(f.intercept, 1.0);
    EXPECT_EQ(sub(f.centered.u_vec, f.j_vec), Vector({0, 0}));
}

TEST(Regress, Errors)
{
    EXPECT_EQ(kind_of([] { fit(PointCloud(std::vector<double>{3}, std::vector<double>{1})); }),
              ErrorKind::TooFewPoints);
    EXPECT_EQ(kind_of([] { fit(PointCloud(std::vector<double>{4, 4, 4}, std::vector<double>{1, 2, 3})); }),
              ErrorKind::DegenerateX);
    // Non-representable constant: centered values are rounding noise, still degenerate.
    EXPECT_EQ(kind_of([] {
                  fit(PointCloud(std::vector<double>(9, 0.1), std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8, 9}));
              }),
              ErrorKind::DegenerateX);
}

TEST(Regress, ConstantResponse)
{
    const auto f = fit(PointCloud(std::vector<double>{1, 2, 5}, std::vector<double>{3, 3, 3}));
    EXPECT_EQ(f.slope, 0.0);
    EXPECT_EQ(f.intercept, 3.0);
}

TEST(Regress, Predict)
{
    const auto f1 = fit(testkit::example1());
    EXPECT_NEAR(predict(f1, 16.6417), 64.9167, 0.01);

    const auto line = fit(PointCloud(std::vector<double>{0, 1, 2}, std::vector<double>{1, 3, 5}));
    EXPECT_EQ(predict(line, 3), 7.0);

    EXPECT_NEAR(predict(fit(testkit::example2()), 90), 32268.4, 2.0);
}

TEST(RegressProperty, FitInvariants)
{
    testkit::CloudGenerator gen(21);
    for (int trial = 0; trial < 300; ++trial)
    {
        const auto cloud = gen(gen.size_in(2, 30));
        const auto f = fit(cloud);
        const auto& c = f.centered;

        // j = a i
        for (std::size_t k = 0; k < cloud.size(); ++k)
            EXPECT_NEAR(f.j_vec[k], f.slope * c.i_vec[k], 1e-12 * std::abs(f.slope * c.i_vec[k]));

        // (u - j) . i = 0
        EXPECT_LE(std::abs(dot(sub(c.u_vec, f.j_vec), c.i_vec)), 1e-9 * norm(c.u_vec) * norm(c.i_vec));

        // centroid lies on the line
        EXPECT_LE(std::abs(predict(f, c.centroid.x) - c.centroid.y),
                  1e-9 * std::max(1.0, std::abs(c.centroid.y)));

        // translation moves the intercept, never the slope
        const double dx = gen.uniform(-1e3, 1e3), dy = gen.uniform(-1e3, 1e3);
        std::vector<double> xs, ys;
        for (std::size_t k = 0; k < cloud.size(); ++k)
        {
            xs.push_back(cloud.xs()[k] + dx);
            ys.push_back(cloud.ys()[k] + dy);
        }
        const auto moved = fit(PointCloud(xs, ys));
        EXPECT_LE(rel(moved.slope, f.slope), 1e-9);
        const double expect_b = (c.centroid.y + dy) - f.slope * (c.centroid.x + dx);
        EXPECT_NEAR(moved.intercept, expect_b, 1e-9 * std::max(1.0, std::abs(expect_b)) + 1e-9 * std::abs(f.slope) * 1e3);

        // scaling y scales both parameters
        const double s = gen.uniform(-20, 20);
        std::vector<double> scaled;
        for (double y : cloud.ys())
            scaled.push_back(s * y);
        const auto fs = fit(PointCloud(cloud.xs(), Vector(scaled)));
        EXPECT_LE(std::abs(fs.slope - s * f.slope), 1e-9 * std::abs(s * f.slope));
        EXPECT_LE(std::abs(fs.intercept - s * f.intercept),
                  1e-9 * std::max(std::abs(s * f.intercept), std::abs(s) * std::abs(f.slope * c.centroid.x)));
    }
}

TEST(RegressProperty, MatchesBruteForceMinimizer)
{
    testkit::CloudGenerator gen(22);
    for (int trial = 0; trial < 20; ++trial)
    {
        const auto cloud = gen(gen.size_in(2, 30));
        const auto f = fit(cloud);
        const auto found = oracle::grid_search_fit(cloud, oracle::SearchBox::around(f.slope, f.intercept));
        EXPECT_NEAR(found.slope, f.slope, 1e-6);
        EXPECT_NEAR(found.intercept, f.intercept, 1e-6);
    }
}
