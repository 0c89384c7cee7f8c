#include <gtest/gtest.h>

#include "xrisk/config.hpp"
#include "xrisk/errors.hpp"

using namespace xrisk;

TEST(Config, BasicValues) {
    const auto c = parse_config("c0=47000\ng_baseline=0.0175");
    ASSERT_TRUE(c.c0.has_value());
    EXPECT_EQ(*c.c0, 47000.0);
    EXPECT_EQ(c.g_baseline, 0.0175);
}

TEST(Config, EmptyIsDefaults) {
    const auto c = parse_config("");
    EXPECT_FALSE(c.c0.has_value());
    EXPECT_FALSE(c.g_ai_grid.has_value());
    EXPECT_EQ(c.output_format, OutputFormat::csv);
    EXPECT_EQ(c.saving_rate, 0.3);
}

TEST(Config, CommentsListsAndWhitespace) {
    const auto c = parse_config(
        "# grid override\n"
        "  g_ai_grid = 0.1, 0.2 ,0.3  # trailing comment\n"
        "\n"
        "theta_set=1,2\r\n"
        "output_format=markdown\n");
    ASSERT_TRUE(c.g_ai_grid.has_value());
    EXPECT_EQ(*c.g_ai_grid, (std::vector<double>{0.1, 0.2, 0.3}));
    EXPECT_EQ(*c.theta_set, (std::vector<double>{1.0, 2.0}));
    EXPECT_EQ(c.output_format, OutputFormat::markdown);
}

TEST(Config, RangeErrorNamesKey) {
    try {
        parse_config("c0=0.5");
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("c0"), std::string::npos);
        EXPECT_EQ(e.line(), 1);
        EXPECT_EQ(e.column(), 4);
    }
}

TEST(Config, UnknownKeyReportsPosition) {
    try {
        parse_config("c0=2\n  bogus=1\n");
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_EQ(e.line(), 2);
        EXPECT_EQ(e.column(), 3);
        EXPECT_NE(std::string(e.what()).find("bogus"), std::string::npos);
    }
}

TEST(Config, MalformedLines) {
    EXPECT_THROW(parse_config("c0"), ConfigError);
    EXPECT_THROW(parse_config("=3"), ConfigError);
    EXPECT_THROW(parse_config("c0="), ConfigError);
    EXPECT_THROW(parse_config("c0=12x"), ConfigError);
    EXPECT_THROW(parse_config("rho_grid=0.05,0.01"), ConfigError);
    EXPECT_THROW(parse_config("rho_grid=0.01,,0.05"), ConfigError);
    EXPECT_THROW(parse_config("p3=1.5"), ConfigError);
    EXPECT_THROW(parse_config("output_format=json"), ConfigError);
}

TEST(Config, ApplySettingOverrides) {
    auto c = parse_config("T=50");
    apply_setting(c, "T", "75");
    EXPECT_EQ(*c.T, 75.0);
    EXPECT_THROW(apply_setting(c, "nope", "1"), ConfigError);
}

TEST(Config, EveryDocumentedKeyIsAccepted) {
    for (const auto& key : config_keys()) {
        RunConfig c;
        const std::string value = key == "output_format" ? "csv"
                                  : key.find("grid") != std::string::npos || key == "theta_set" ? "0.1,0.2"
                                  : key == "c0" ? "2"
                                                : "0.1";
        EXPECT_NO_THROW(apply_setting(c, key, value)) << key;
    }
}
