#include <gtest/gtest.h>

#include <random>

#include "xrisk/special_functions.hpp"

namespace {

struct Ref {
    double x;
    double value;
};

// 30-digit references computed offline with an arbitrary-precision library.
constexpr Ref kErf[] = {
    {0.0, 0.0},
    {1e-8, 1.1283791670955125599e-8},
    {0.05, 0.056371977797016626955},
    {0.1, 0.1124629160182848984},
    {0.25, 0.27632639016823693299},
    {0.5, 0.52049987781304653768},
    {0.75, 0.7111556336535151316},
    {1.0, 0.84270079294971486934},
    {1.25, 0.92290012825645823014},
    {1.5, 0.96610514647531072707},
    {2.0, 0.99532226501895273416},
    {2.5, 0.99959304798255504106},
    {3.0, 0.99997790950300141456},
    {3.5, 0.99999925690162765859},
    {4.0, 0.99999998458274209972},
    {4.5, 0.99999999980338395585},
    {5.0, 0.99999999999846254021},
    {5.9, 0.9999999999999999281},
    {-0.3, -0.32862675945912741619},
    {-2.2, -0.99813715370201811014},
};

constexpr Ref kErfcx[] = {
    {0.0, 1.0},
    {0.5, 0.61569034419292587487},
    {1.0, 0.42758357615580700441},
    {2.0, 0.25539567631050574387},
    {3.9, 0.14031418160068970328},
    {4.1, 0.13383411641865221245},
    {8.0, 0.069985166200880927723},
    {20.0, 0.028174348741051319319},
    {30.0, 0.018795888861416751497},
    {100.0, 0.0056416137829894329036},
};

}  // namespace

TEST(Erf, ReferenceTable) {
    for (const auto& r : kErf) EXPECT_NEAR(xrisk::erf(r.x), r.value, 1e-10) << "x = " << r.x;
}

TEST(Erf, OddAndMonotone) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-6.0, 6.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = u(rng), y = u(rng);
        EXPECT_EQ(xrisk::erf(-x), -xrisk::erf(x));
        if (x < y) EXPECT_LE(xrisk::erf(x), xrisk::erf(y));
        else EXPECT_GE(xrisk::erf(x), xrisk::erf(y));
    }
}

TEST(Erfcx, ReferenceTableRelative) {
    for (const auto& r : kErfcx) EXPECT_NEAR(xrisk::erfcx(r.x), r.value, 1e-13 * r.value) << "x = " << r.x;
}

TEST(Erfcx, ContinuousAtBranchSwitch) {
    EXPECT_NEAR(xrisk::erfcx(4.0 - 1e-12), xrisk::erfcx(4.0), 1e-13);
}
