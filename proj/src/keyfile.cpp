#include "wmark/keyfile.hpp"

#include "wmark/error.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

namespace wmark {

namespace {

constexpr std::string_view kMagic = "WMKEY v1";
constexpr std::array<std::string_view, 11> kFields = {
    "wavelet", "levels", "q", "lcg_a", "lcg_c0", "lcg_m", "lcg_z0",
    "select_threshold", "perm_seed", "wm_width", "wm_height",
};

std::string format_threshold(double t)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", t);
    std::string s = buf;
    while (s.size() > 1 && s.back() == '0' && s[s.size() - 2] != '.')
        s.pop_back();
    return s;
}

std::uint64_t parse_u64(std::string_view field, std::string_view text, std::uint64_t max)
{
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw FormatError("key file: field '" + std::string(field) + "' is not a decimal integer");
    if (v > max)
        throw FormatError("key file: field '" + std::string(field) + "' out of range");
    return v;
}

double parse_threshold(std::string_view text)
{
    // decimal digits with an optional fraction of at most 6 digits
    const auto dot = text.find('.');
    const auto int_part = text.substr(0, dot);
    const auto frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    auto all_digits = [](std::string_view s) {
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    if (int_part.empty() || !all_digits(int_part) || !all_digits(frac) || frac.size() > 6 ||
        (dot != std::string_view::npos && frac.empty()))
        throw FormatError("key file: select_threshold must be a decimal with at most 6 fraction digits");
    double v = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), v);
    return v;
}

} // namespace

double quantize_threshold(double t)
{
    return std::round(t * 1e6) / 1e6;
}

std::uint32_t default_perm_seed(std::uint64_t z0)
{
    return static_cast<std::uint32_t>((z0 ^ 0x9E3779B9ULL) & 0xFFFFFFFFULL);
}

std::string serialize_key(const WatermarkKey& key)
{
    std::string out;
    out += kMagic;
    out += '\n';
    auto put = [&](std::string_view name, const std::string& value) {
        out += name;
        out += '=';
        out += value;
        out += '\n';
    };
    put("wavelet", std::string(to_string(key.wavelet)));
    put("levels", std::to_string(key.levels));
    put("q", std::to_string(key.q));
    put("lcg_a", std::to_string(key.lcg.a));
    put("lcg_c0", std::to_string(key.lcg.c0));
    put("lcg_m", std::to_string(key.lcg.m));
    put("lcg_z0", std::to_string(key.lcg.z0));
    put("select_threshold", format_threshold(key.select_threshold));
    put("perm_seed", std::to_string(key.perm_seed));
    put("wm_width", std::to_string(key.wm_width));
    put("wm_height", std::to_string(key.wm_height));
    return out;
}

WatermarkKey parse_key(std::string_view text)
{
    std::array<std::string_view, kFields.size() + 1> lines{};
    std::size_t count = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        if (nl == std::string_view::npos)
            throw FormatError("key file: last line is not LF-terminated");
        if (count == lines.size())
            throw FormatError("key file: unexpected trailing content");
        lines[count++] = text.substr(0, nl);
        text.remove_prefix(nl + 1);
    }
    if (count == 0 || lines[0] != kMagic)
        throw FormatError("key file: missing 'WMKEY v1' header");
    if (count != lines.size())
        throw FormatError("key file: expected " + std::to_string(kFields.size()) + " fields, found " +
                          std::to_string(count - 1));

    std::array<std::string_view, kFields.size()> values{};
    for (std::size_t i = 0; i < kFields.size(); ++i) {
        const auto line = lines[i + 1];
        const auto eq = line.find('=');
        if (eq == std::string_view::npos || line.substr(0, eq) != kFields[i])
            throw FormatError("key file: line " + std::to_string(i + 2) + " must be '" +
                              std::string(kFields[i]) + "=...'");
        values[i] = line.substr(eq + 1);
    }

    constexpr auto kIntMax = static_cast<std::uint64_t>(std::numeric_limits<int>::max());
    constexpr auto kU64Max = std::numeric_limits<std::uint64_t>::max();
    WatermarkKey key;
    try {
        key.wavelet = parse_wavelet(values[0]);
    } catch (const ParameterError& e) {
        throw FormatError(std::string("key file: ") + e.what());
    }
    key.levels = static_cast<int>(parse_u64(kFields[1], values[1], kIntMax));
    key.q = static_cast<int>(parse_u64(kFields[2], values[2], kIntMax));
    key.lcg.a = parse_u64(kFields[3], values[3], kU64Max);
    key.lcg.c0 = parse_u64(kFields[4], values[4], kU64Max);
    key.lcg.m = parse_u64(kFields[5], values[5], kU64Max);
    key.lcg.z0 = parse_u64(kFields[6], values[6], kU64Max);
    key.select_threshold = parse_threshold(values[7]);
    key.perm_seed = static_cast<std::uint32_t>(parse_u64(kFields[8], values[8], 0xFFFFFFFFULL));
    key.wm_width = static_cast<int>(parse_u64(kFields[9], values[9], kIntMax));
    key.wm_height = static_cast<int>(parse_u64(kFields[10], values[10], kIntMax));
    key.validate();
    return key;
}

} // namespace wmark
