#pragma once

// Straight-line re-implementation of the embed/extract pipeline for small
// square hosts, written against plain vectors with no library helpers:
// dense periodic analysis matrices (C' = A C A^T), its own generators, its
// own quantizer. Used only as an oracle.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace refimpl {

using Grid = std::vector<std::vector<double>>;

struct Key {
    bool db4 = true;
    int levels = 2;
    int q = 4;
    std::uint64_t a = 1103515245, c0 = 12345, m = 2147483648ULL, z0 = 0;
    double threshold = 0.5;
    std::uint32_t perm_seed = 0;
    int nbits = 4;
};

inline Grid analysis(int n, bool db4)
{
    std::vector<double> h;
    if (db4) {
        const double r = std::sqrt(3.0), s = 4.0 * std::sqrt(2.0);
        h = {(1 + r) / s, (3 + r) / s, (3 - r) / s, (1 - r) / s};
    } else {
        h = {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
    }
    const int t = static_cast<int>(h.size());
    Grid a(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n / 2; ++i)
        for (int k = 0; k < t; ++k) {
            a[i][(2 * i + k) % n] += h[k];
            a[n / 2 + i][(2 * i + k) % n] += (k % 2 == 0 ? 1.0 : -1.0) * h[t - 1 - k];
        }
    return a;
}

// Applies out = L * B * R to the top-left n x n block of c in place.
inline void transform_block(Grid& c, int n, const Grid& left, const Grid& right)
{
    Grid tmp(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k)
                s += left[i][k] * c[k][j];
            tmp[i][j] = s;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k)
                s += tmp[i][k] * right[k][j];
            c[i][j] = s;
        }
}

inline Grid transpose(const Grid& g)
{
    Grid t(g[0].size(), std::vector<double>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g[0].size(); ++j)
            t[j][i] = g[i][j];
    return t;
}

// Mallat layout: after the call, level-l details of an N x N host sit in the
// quadrants of the top-left (N >> (l-1)) block.
inline Grid forward(Grid c, const Key& k)
{
    int n = static_cast<int>(c.size());
    for (int l = 0; l < k.levels; ++l, n /= 2) {
        const Grid a = analysis(n, k.db4);
        transform_block(c, n, a, transpose(a));
    }
    return c;
}

inline Grid inverse(Grid c, const Key& k)
{
    const int n0 = static_cast<int>(c.size());
    for (int l = k.levels - 1; l >= 0; --l) {
        const int n = n0 >> l;
        const Grid a = analysis(n, k.db4);
        transform_block(c, n, transpose(a), a);
    }
    return c;
}

inline std::vector<int> mask(const Key& k, int count)
{
    std::vector<int> out;
    unsigned __int128 z = k.z0;
    unsigned __int128 c = k.c0;
    for (int i = 0; i < count; ++i) {
        z = (k.a * z + c) % k.m;
        c = c + 1;
        const double u = static_cast<double>(static_cast<std::uint64_t>(z)) / static_cast<double>(k.m);
        out.push_back(u < k.threshold ? 1 : 0);
    }
    return out;
}

inline std::vector<int> scramble_map(std::uint32_t seed, int n)
{
    std::vector<int> map(n);
    for (int i = 0; i < n; ++i)
        map[i] = i;
    std::uint32_t w = seed;
    for (int i = n - 1; i > 0; --i) {
        w = w * 1664525u + 1013904223u;
        std::swap(map[i], map[static_cast<int>(w % static_cast<std::uint32_t>(i + 1))]);
    }
    return map;
}

struct Loc {
    int r[3];
    int c[3];
};

// Location triples in scan order; the three cells are horizontal
// (top-right), diagonal (bottom-right), vertical (bottom-left).
inline std::vector<Loc> locations(int size, int levels)
{
    std::vector<Loc> out;
    for (int l = 1; l <= levels; ++l) {
        const int s = size >> l;
        for (int m = 0; m < s; ++m)
            for (int n = 0; n < s; ++n)
                out.push_back(Loc{{m, m + s, m + s}, {n + s, n + s, n}});
    }
    return out;
}

inline Grid embed_coefficients(const Grid& host, const std::vector<int>& bits, const Key& k)
{
    Grid c = forward(host, k);
    const int size = static_cast<int>(host.size());
    const auto locs = locations(size, k.levels);
    const auto sel = mask(k, static_cast<int>(locs.size()));
    const auto map = scramble_map(k.perm_seed, k.nbits);
    int j = 0;
    for (std::size_t i = 0; i < locs.size(); ++i) {
        if (!sel[i])
            continue;
        const int bit = bits[map[j % k.nbits]];
        ++j;
        int order[3] = {0, 1, 2};
        double v[3];
        for (int o = 0; o < 3; ++o)
            v[o] = c[locs[i].r[o]][locs[i].c[o]];
        // insertion sort; values within round-off of each other count as
        // equal and keep orientation order (this route's arithmetic differs
        // from the separable one in the last few ulps)
        for (int a = 1; a < 3; ++a)
            for (int b = a; b > 0 && v[order[b]] < v[order[b - 1]] - 1e-9; --b)
                std::swap(order[b], order[b - 1]);
        const double lo = v[order[0]], mid = v[order[1]], hi = v[order[2]];
        const double width = (hi - lo) / (2 * k.q - 1);
        if (width <= 1e-6)
            continue;
        double best = lo + 0.5 * width, dist = 1e300;
        for (int b = 0; b < 2 * k.q - 1; ++b) {
            if (b % 2 != bit)
                continue;
            const double centre = lo + (b + 0.5) * width;
            if (std::fabs(mid - centre) < dist) {
                dist = std::fabs(mid - centre);
                best = centre;
            }
        }
        c[locs[i].r[order[1]]][locs[i].c[order[1]]] = best;
    }
    return c;
}

inline std::vector<int> extract_bits(const Grid& marked, const Key& k)
{
    const Grid c = forward(marked, k);
    const int size = static_cast<int>(marked.size());
    const auto locs = locations(size, k.levels);
    const auto sel = mask(k, static_cast<int>(locs.size()));
    std::vector<int> ones(k.nbits, 0), zeros(k.nbits, 0);
    int j = 0;
    for (std::size_t i = 0; i < locs.size(); ++i) {
        if (!sel[i])
            continue;
        const int slot = j % k.nbits;
        ++j;
        double v[3];
        for (int o = 0; o < 3; ++o)
            v[o] = c[locs[i].r[o]][locs[i].c[o]];
        double s[3] = {v[0], v[1], v[2]};
        std::sort(s, s + 3);
        const double width = (s[2] - s[0]) / (2 * k.q - 1);
        if (width <= 1e-6)
            continue;
        int best = 0;
        double dist = 1e300;
        for (int b = 0; b < 2 * k.q - 1; ++b) {
            const double d = std::fabs(s[1] - (s[0] + (b + 0.5) * width));
            if (d < dist) {
                dist = d;
                best = b;
            }
        }
        (best % 2 ? ones : zeros)[slot]++;
    }
    const auto map = scramble_map(k.perm_seed, k.nbits);
    std::vector<int> out(k.nbits, 0);
    for (int i = 0; i < k.nbits; ++i)
        out[map[i]] = ones[i] > zeros[i] ? 1 : 0;
    return out;
}

} // namespace refimpl
