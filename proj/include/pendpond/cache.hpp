#ifndef PENDPOND_CACHE_HPP
#define PENDPOND_CACHE_HPP

// Write-once JSON cache for coefficient tables. Each entry lives in
// <dir>/<sha256 of the canonical request>.json and records the tool version
// and a checksum of its payload; a stale or damaged entry is a miss.
//
// Needs OpenSSL's libcrypto at link time.

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>
#include <openssl/evp.h>

#include "errors.hpp"

namespace pendpond {

inline std::string sha256_hex(const std::string& data)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
        throw error("SHA-256 failed");
    static const char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xF]);
    }
    return out;
}

class Cache {
public:
    Cache(std::filesystem::path dir, std::string version)
        : dir_(std::move(dir)), version_(std::move(version))
    {
        std::filesystem::create_directories(dir_);
    }

    const std::filesystem::path& dir() const { return dir_; }

    // nlohmann::json sorts object keys, so dump() is canonical.
    static std::string key_of(const nlohmann::json& request) { return sha256_hex(request.dump()); }

    std::filesystem::path path_of(const nlohmann::json& request) const
    {
        return dir_ / (key_of(request) + ".json");
    }

    std::optional<nlohmann::json> load(const nlohmann::json& request) const
    {
        auto path = path_of(request);
        std::ifstream in(path);
        if (!in)
            return std::nullopt;
        nlohmann::json entry = nlohmann::json::parse(in, nullptr, false);
        if (entry.is_discarded() || !entry.is_object())
            return std::nullopt;
        if (entry.value("version", "") != version_ || entry.value("request", nlohmann::json()) != request)
            return std::nullopt;
        if (!entry.contains("payload") || entry.value("checksum", "") != sha256_hex(entry["payload"].dump()))
            return std::nullopt;
        return entry["payload"];
    }

    void store(const nlohmann::json& request, const nlohmann::json& payload) const
    {
        nlohmann::json entry = {{"version", version_},
                                {"request", request},
                                {"payload", payload},
                                {"checksum", sha256_hex(payload.dump())}};
        auto target = path_of(request);
        std::random_device rd;
        auto tmp = target;
        tmp += ".tmp" + std::to_string(rd());
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out)
                throw error("cannot write cache file " + tmp.string());
            out << entry.dump();
            if (!out.flush())
                throw error("cannot write cache file " + tmp.string());
        }
        std::filesystem::rename(tmp, target);
    }

    template <class Compute>
    nlohmann::json get_or_compute(const nlohmann::json& request, Compute&& compute, bool* hit = nullptr) const
    {
        if (auto cached = load(request)) {
            if (hit)
                *hit = true;
            return *cached;
        }
        if (hit)
            *hit = false;
        nlohmann::json payload = compute();
        store(request, payload);
        return payload;
    }

private:
    std::filesystem::path dir_;
    std::string version_;
};

} // namespace pendpond

#endif
