#include "wmark/attacks.hpp"

#include "wmark/error.hpp"

#include <charconv>
#include <cmath>
#include <initializer_list>
#include <limits>

namespace wmark {

namespace {

struct KindInfo {
    std::string_view name;
    AttackKind kind;
    std::initializer_list<std::string_view> keys;
};

constexpr std::string_view kKinds = "gaussian, saltpepper, mean3, median3, crop, jpeglike";

const KindInfo* find_kind(std::string_view name)
{
    static const KindInfo table[] = {
        {"gaussian", AttackKind::gaussian, {"sigma", "seed"}},
        {"saltpepper", AttackKind::saltpepper, {"density", "seed"}},
        {"mean3", AttackKind::mean3, {}},
        {"median3", AttackKind::median3, {}},
        {"crop", AttackKind::crop, {"x", "y", "w", "h", "fill"}},
        {"jpeglike", AttackKind::jpeglike, {"quality"}},
    };
    for (const auto& k : table)
        if (k.name == name)
            return &k;
    return nullptr;
}

double parse_real(std::string_view key, std::string_view text)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
        throw ParameterError("attack spec: '" + std::string(key) + "' expects a number, got '" +
                             std::string(text) + "'");
    return v;
}

long long parse_int(std::string_view key, std::string_view text, long long lo, long long hi)
{
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ParameterError("attack spec: '" + std::string(key) + "' expects an integer, got '" +
                             std::string(text) + "'");
    if (v < lo || v > hi)
        throw ParameterError("attack spec: '" + std::string(key) + "' out of range [" +
                             std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
}

} // namespace

std::string_view supported_attack_kinds()
{
    return kKinds;
}

AttackSpec parse_attack_spec(std::string_view text)
{
    const auto colon = text.find(':');
    const auto name = text.substr(0, colon);
    const KindInfo* info = find_kind(name);
    if (!info)
        throw ParameterError("unknown attack kind '" + std::string(name) +
                             "' (supported: " + std::string(kKinds) + ")");

    AttackSpec spec;
    spec.kind = info->kind;
    if (colon == std::string_view::npos)
        return spec;

    constexpr long long kIntMax = std::numeric_limits<int>::max();
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);

        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw ParameterError("attack spec: expected key=value, got '" + std::string(item) + "'");
        const auto key = item.substr(0, eq);
        const auto value = item.substr(eq + 1);
        bool allowed = false;
        for (auto k : info->keys)
            allowed = allowed || k == key;
        if (!allowed)
            throw ParameterError("attack spec: '" + std::string(name) + "' takes no parameter '" +
                                 std::string(key) + "'");

        if (key == "sigma") {
            spec.sigma = parse_real(key, value);
            if (spec.sigma < 0.0)
                throw ParameterError("attack spec: sigma must be >= 0");
        } else if (key == "density") {
            spec.density = parse_real(key, value);
            if (spec.density < 0.0 || spec.density > 1.0)
                throw ParameterError("attack spec: density must be in [0, 1]");
        } else if (key == "seed") {
            spec.seed = static_cast<std::uint32_t>(parse_int(key, value, 0, 4294967295LL));
        } else if (key == "x") {
            spec.rect.x = static_cast<int>(parse_int(key, value, 0, kIntMax));
        } else if (key == "y") {
            spec.rect.y = static_cast<int>(parse_int(key, value, 0, kIntMax));
        } else if (key == "w") {
            spec.rect.w = static_cast<int>(parse_int(key, value, 0, kIntMax));
        } else if (key == "h") {
            spec.rect.h = static_cast<int>(parse_int(key, value, 0, kIntMax));
        } else if (key == "fill") {
            spec.fill = static_cast<int>(parse_int(key, value, 0, 255));
        } else if (key == "quality") {
            spec.quality = static_cast<int>(parse_int(key, value, 1, 100));
        }
    }
    return spec;
}

} // namespace wmark
