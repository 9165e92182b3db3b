// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file levels_io.cpp
 * @brief Plain-text level cache keyed by oracle parameters.
 */

#include <qce1d/error.hpp>
#include <qce1d/oracles.hpp>

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace qce1d::oracles {

namespace {

std::string exact(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, p);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

void write_levels(const LevelList& levels, const std::string& path, const std::string& key) {
    levels.validate();
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp);
        if (!os) throw DomainError("cannot write level cache " + tmp);
        os << "# qce1d-levels version " << kOracleVersion << "\n";
        os << "# key " << key << "\n";
        os << "# provenance " << levels.provenance << "\n";
        os << "# E_max " << exact(levels.E_max) << "\n";
        for (std::size_t i = 0; i < levels.size(); ++i)
            os << exact(levels.energies[i]) << ' ' << levels.degeneracies[i] << '\n';
        if (!os) {
            std::remove(tmp.c_str());
            throw DomainError("failed writing level cache " + tmp);
        }
    }
    std::filesystem::rename(tmp, path);
}

std::optional<LevelList> read_levels(const std::string& path, const std::string& key) {
    std::ifstream is(path);
    if (!is) return std::nullopt;
    LevelList out;
    std::string line;
    bool version_ok = false, key_ok = false, emax_ok = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string tag;
            hs >> tag;
            std::string rest;
            std::getline(hs >> std::ws, rest);
            if (tag == "qce1d-levels") version_ok = rest == std::string("version ") + kOracleVersion;
            else if (tag == "key") key_ok = rest == key;
            else if (tag == "provenance") out.provenance = rest;
            else if (tag == "E_max") {
                out.E_max = std::strtod(rest.c_str(), nullptr);
                emax_ok = true;
            }
            continue;
        }
        std::istringstream ls(line);
        double e;
        int g;
        if (!(ls >> e >> g)) return std::nullopt;
        out.energies.push_back(e);
        out.degeneracies.push_back(g);
    }
    if (!version_ok || !key_ok || !emax_ok) return std::nullopt;
    try {
        out.validate();
    } catch (const DomainError&) {
        return std::nullopt;
    }
    return out;
}

std::string cache_path(const std::string& key) {
    const char* dir = std::getenv("QCE1D_CACHE_DIR");
    if (!dir || !*dir) return {};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
    return (std::filesystem::path(dir) / (std::string("levels-") + buf + ".txt")).string();
}

LevelList cached_levels(const std::string& key, const std::function<LevelList()>& compute) {
    const std::string path = cache_path(key);
    if (!path.empty())
        if (auto hit = read_levels(path, key)) return *hit;
    LevelList levels = compute();
    if (!path.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
        try {
            write_levels(levels, path, key);
        } catch (const std::exception&) {
            // an unwritable cache only costs recomputation
        }
    }
    return levels;
}

} // namespace qce1d::oracles
