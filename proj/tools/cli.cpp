#include "cli.hpp"

#include "wmark/attacks.hpp"
#include "wmark/codec.hpp"
#include "wmark/error.hpp"
#include "wmark/keyfile.hpp"
#include "wmark/metrics.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace wmark::cli {

namespace {

std::string fixed4(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::pair<int, int> parse_size(const std::string& text)
{
    const auto x = text.find('x');
    try {
        if (x == std::string::npos)
            throw std::invalid_argument(text);
        std::size_t used_w = 0, used_h = 0;
        const int w = std::stoi(text.substr(0, x), &used_w);
        const int h = std::stoi(text.substr(x + 1), &used_h);
        if (used_w != x || used_h != text.size() - x - 1 || w < 1 || h < 1)
            throw std::invalid_argument(text);
        return {w, h};
    } catch (const std::logic_error&) {
        throw ParameterError("--wm-size expects WIDTHxHEIGHT with positive integers, got '" + text + "'");
    }
}

WatermarkKey load_key(const std::string& path)
{
    const auto bytes = read_file(path);
    return parse_key(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

void save_text(const std::string& path, const std::string& text)
{
    write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

struct KeygenArgs {
    std::uint64_t seed = 0;
    std::string wm_size = "32x32";
    std::string wavelet = "db4";
    int levels = 4;
    int q = 4;
    double threshold = 0.5;
    std::uint64_t lcg_a = LcgParams{}.a;
    std::uint64_t lcg_c0 = LcgParams{}.c0;
    std::uint64_t lcg_m = LcgParams{}.m;
    std::int64_t perm_seed = -1;
    std::string out;
};

int cmd_keygen(const KeygenArgs& a, std::ostream& err)
{
    WatermarkKey key;
    key.wavelet = parse_wavelet(a.wavelet);
    key.levels = a.levels;
    key.q = a.q;
    key.lcg = LcgParams{a.lcg_a, a.lcg_c0, a.lcg_m, a.seed};
    key.select_threshold = quantize_threshold(a.threshold);
    if (a.perm_seed > 0xFFFFFFFFLL)
        throw ParameterError("--perm-seed must fit in 32 bits");
    key.perm_seed = a.perm_seed >= 0 ? static_cast<std::uint32_t>(a.perm_seed) : default_perm_seed(a.seed);
    std::tie(key.wm_width, key.wm_height) = parse_size(a.wm_size);
    key.validate();
    if (key.q < 2)
        err << "warning: q=1 can only carry bit 0; use q >= 2\n";
    save_text(a.out, serialize_key(key));
    return kOk;
}

struct EmbedArgs {
    std::string image, watermark, key, out;
};

int cmd_embed(const EmbedArgs& a, std::ostream& out, std::ostream& err)
{
    const auto key = load_key(a.key);
    const auto host = read_pgm(read_file(a.image));
    const auto wm = read_pbm(read_file(a.watermark));
    if (key.q < 2)
        err << "warning: q=1 can only carry bit 0; use q >= 2\n";
    const auto [marked, report] = embed(host, wm, key);
    write_file(a.out, write_pgm(marked));
    if (report.bits_uncovered > 0)
        err << "warning: " << report.bits_uncovered
            << " watermark bits have no embedding location (watermark exceeds capacity)\n";
    out << "locations_total=" << report.locations_total << "\n"
        << "locations_selected=" << report.locations_selected << "\n"
        << "locations_skipped=" << report.locations_skipped << "\n"
        << "q1_fallbacks=" << report.q1_fallbacks << "\n"
        << "bits_uncovered=" << report.bits_uncovered << "\n"
        << "repetitions=" << fixed4(report.repetitions) << "\n"
        << "psnr_db=" << fixed4(report.psnr_db) << "\n";
    return kOk;
}

struct ExtractArgs {
    std::string image, key, out;
};

int cmd_extract(const ExtractArgs& a, std::ostream& out)
{
    const auto key = load_key(a.key);
    const auto img = read_pgm(read_file(a.image));
    const auto [wm, tally] = extract(img, key);
    write_file(a.out, write_pbm(wm));
    out << "total_votes=" << tally.total_votes() << "\n"
        << "zero_vote_bits=" << tally.zero_vote_bits() << "\n"
        << "tie_bits=" << tally.tie_bits() << "\n";
    return kOk;
}

struct AttackArgs {
    std::string image, spec, out;
};

int cmd_attack(const AttackArgs& a)
{
    const auto spec = parse_attack_spec(a.spec);
    const auto img = read_pgm(read_file(a.image));
    write_file(a.out, write_pgm(apply_attack(img, spec)));
    return kOk;
}

int cmd_eval(const std::string& original, const std::string& extracted, std::ostream& out)
{
    const auto w = read_pbm(read_file(original));
    const auto w2 = read_pbm(read_file(extracted));
    out << "ber=" << fixed4(ber(w, w2)) << "\n"
        << "ncc=" << fixed4(ncc(w, w2)) << "\n";
    return kOk;
}

int cmd_psnr(const std::string& a, const std::string& b, std::ostream& out)
{
    const auto ia = read_pgm(read_file(a));
    const auto ib = read_pgm(read_file(b));
    out << "psnr_db=" << fixed4(psnr(ia, ib)) << "\n";
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Blind DWT-domain image watermarking"};
    app.name("wmark");
    app.require_subcommand(1);

    KeygenArgs kg;
    auto* keygen = app.add_subcommand("keygen", "Generate a watermark key file");
    keygen->add_option("--seed", kg.seed, "Congruential seed Z0")->required();
    keygen->add_option("--wm-size", kg.wm_size, "Watermark size WIDTHxHEIGHT")->capture_default_str();
    keygen->add_option("--wavelet", kg.wavelet, "haar or db4")->capture_default_str();
    keygen->add_option("--levels", kg.levels, "Decomposition levels")->capture_default_str();
    keygen->add_option("--q", kg.q, "Quantization parameter Q (>= 1)")->capture_default_str();
    keygen->add_option("--threshold", kg.threshold, "Location selection threshold in (0, 1]")->capture_default_str();
    keygen->add_option("--lcg-a", kg.lcg_a, "Congruential multiplier")->capture_default_str();
    keygen->add_option("--lcg-c0", kg.lcg_c0, "Initial congruential increment")->capture_default_str();
    keygen->add_option("--lcg-m", kg.lcg_m, "Congruential modulus")->capture_default_str();
    keygen->add_option("--perm-seed", kg.perm_seed, "Scramble seed (default derived from --seed)");
    keygen->add_option("--out", kg.out, "Key file to write")->required();

    EmbedArgs em;
    auto* embed_cmd = app.add_subcommand("embed", "Embed a PBM watermark into a PGM host");
    embed_cmd->add_option("--image", em.image, "Host PGM")->required();
    embed_cmd->add_option("--watermark", em.watermark, "Watermark PBM")->required();
    embed_cmd->add_option("--key", em.key, "Key file")->required();
    embed_cmd->add_option("--out", em.out, "Watermarked PGM to write")->required();

    ExtractArgs ex;
    auto* extract_cmd = app.add_subcommand("extract", "Blindly extract the watermark from a PGM");
    extract_cmd->add_option("--image", ex.image, "Watermarked PGM")->required();
    extract_cmd->add_option("--key", ex.key, "Key file")->required();
    extract_cmd->add_option("--out", ex.out, "Recovered PBM to write")->required();

    AttackArgs at;
    auto* attack_cmd = app.add_subcommand("attack", "Apply one degradation to a PGM");
    attack_cmd->add_option("--image", at.image, "Input PGM")->required();
    attack_cmd->add_option("--spec", at.spec, "kind:key=value,... (" + std::string(supported_attack_kinds()) + ")")
        ->required();
    attack_cmd->add_option("--out", at.out, "Output PGM")->required();

    std::string original, extracted;
    auto* eval_cmd = app.add_subcommand("eval", "Compare two watermarks (BER, NCC)");
    eval_cmd->add_option("--original", original, "Reference PBM")->required();
    eval_cmd->add_option("--extracted", extracted, "Recovered PBM")->required();

    std::string pa, pb;
    auto* psnr_cmd = app.add_subcommand("psnr", "PSNR between two PGM images");
    psnr_cmd->add_option("--a", pa, "First PGM")->required();
    psnr_cmd->add_option("--b", pb, "Second PGM")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (keygen->parsed())
            return cmd_keygen(kg, err);
        if (embed_cmd->parsed())
            return cmd_embed(em, out, err);
        if (extract_cmd->parsed())
            return cmd_extract(ex, out);
        if (attack_cmd->parsed())
            return cmd_attack(at);
        if (eval_cmd->parsed())
            return cmd_eval(original, extracted, out);
        if (psnr_cmd->parsed())
            return cmd_psnr(pa, pb, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return kFormatError;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << "\n";
        return kDimensionError;
    } catch (const KeyMismatchError& e) {
        err << "error: " << e.what() << "\n";
        return kKeyMismatch;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return kParameterError;
    } catch (const EmptySelectionError& e) {
        err << "error: " << e.what() << "\n";
        return kEmptySelection;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInternalError;
    }
    return kUsage;
}

} // namespace wmark::cli
