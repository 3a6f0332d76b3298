#include <doctest.h>

#include "wmark/error.hpp"
#include "wmark/keyfile.hpp"

#include <random>

using namespace wmark;

namespace {

const char* kDefaultKey =
    "WMKEY v1\n"
    "wavelet=db4\n"
    "levels=4\n"
    "q=4\n"
    "lcg_a=1103515245\n"
    "lcg_c0=12345\n"
    "lcg_m=2147483648\n"
    "lcg_z0=42\n"
    "select_threshold=0.5\n"
    "perm_seed=2654435731\n"
    "wm_width=32\n"
    "wm_height=32\n";

std::string replace_line(std::string text, const std::string& from, const std::string& to)
{
    text.replace(text.find(from), from.size(), to);
    return text;
}

} // namespace

TEST_CASE("canonical serialization of the default key")
{
    WatermarkKey key;
    key.lcg.z0 = 42;
    key.perm_seed = default_perm_seed(42);
    CHECK(key.perm_seed == (42u ^ 0x9E3779B9u));
    CHECK(serialize_key(key) == kDefaultKey);
    CHECK(parse_key(kDefaultKey) == key);
}

TEST_CASE("round trip over random keys (property)")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        WatermarkKey k;
        k.wavelet = rng() % 2 ? WaveletId::haar : WaveletId::db4;
        k.levels = 1 + static_cast<int>(rng() % 8);
        k.q = 1 + static_cast<int>(rng() % 64);
        k.lcg.a = 1 + rng() % 4000000000ULL;
        k.lcg.c0 = rng();
        k.lcg.m = 2 + rng() % (1ULL << 40);
        k.lcg.z0 = rng() % k.lcg.m;
        k.select_threshold = quantize_threshold(1e-6 + (rng() % 1000000) / 1e6);
        k.perm_seed = static_cast<std::uint32_t>(rng());
        k.wm_width = 1 + static_cast<int>(rng() % 128);
        k.wm_height = 1 + static_cast<int>(rng() % 128);
        CHECK(parse_key(serialize_key(k)) == k);
        CHECK(serialize_key(parse_key(serialize_key(k))) == serialize_key(k));
    }
}

TEST_CASE("threshold formatting keeps at most 6 fraction digits")
{
    WatermarkKey k;
    k.select_threshold = quantize_threshold(0.1234567);
    const auto text = serialize_key(k);
    CHECK(text.find("select_threshold=0.123457\n") != std::string::npos);
    k.select_threshold = 1.0;
    CHECK(serialize_key(k).find("select_threshold=1.0\n") != std::string::npos);
}

TEST_CASE("malformed key files are rejected")
{
    const std::string good = kDefaultKey;
    CHECK_THROWS_AS(parse_key(""), FormatError);
    CHECK_THROWS_AS(parse_key(replace_line(good, "WMKEY v1", "WMKEY v2")), FormatError);
    CHECK_THROWS_AS(parse_key(replace_line(good, "levels=4\nq=4\n", "q=4\nlevels=4\n")), FormatError);
    CHECK_THROWS_AS(parse_key(replace_line(good, "q=4\n", "")), FormatError);
    CHECK_THROWS_AS(parse_key(good + "extra=1\n"), FormatError);
    CHECK_THROWS_AS(parse_key(good.substr(0, good.size() - 1)), FormatError);
    CHECK_THROWS_AS(parse_key(replace_line(good, "q=4", "q=four")), FormatError);
    CHECK_THROWS_AS(parse_key(replace_line(good, "q=4", "q=-4")), FormatError);
    CHECK_THROWS_AS(parse_key(replace_line(good, "wavelet=db4", "wavelet=sym8")), FormatError);
    CHECK_THROWS_AS(parse_key(replace_line(good, "select_threshold=0.5", "select_threshold=0.1234567")),
                    FormatError);
    CHECK_THROWS_AS(parse_key(replace_line(good, "perm_seed=2654435731", "perm_seed=4294967296")), FormatError);
    // well-formed but semantically invalid
    CHECK_THROWS_AS(parse_key(replace_line(good, "q=4", "q=0")), ParameterError);
    CHECK_THROWS_AS(parse_key(replace_line(good, "lcg_z0=42", "lcg_z0=2147483648")), ParameterError);
    CHECK_THROWS_AS(parse_key(replace_line(good, "select_threshold=0.5", "select_threshold=0.0")),
                    ParameterError);
}
