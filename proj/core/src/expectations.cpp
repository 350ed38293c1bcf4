#include "horoct/expectations.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace horoct {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::string hex64(std::uint64_t v) {
    std::array<char, 20> buf{};
    std::snprintf(buf.data(), buf.size(), "0x%016llx", static_cast<unsigned long long>(v));
    return buf.data();
}

char status_char(Status s) {
    switch (s) {
        case Status::match: return 'm';
        case Status::mismatch: return 'x';
        case Status::inapplicable: return 'i';
    }
    throw std::logic_error("unreachable status");
}

} // namespace

Expectations summarize(const SweepConfig& cfg, const std::vector<Verdict>& verdicts) {
    Expectations e;
    e.n_range = std::to_string(cfg.n_min) + ".." + std::to_string(cfg.n_max);

    std::vector<HoradamParams> points = cfg.points;
    std::sort(points.begin(), points.end(), params_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    e.point_count = points.size();
    std::string blob;
    for (const HoradamParams& pt : points) {
        blob += to_canonical(pt.a) + ',' + to_canonical(pt.b) + ',' + to_canonical(pt.p) + ',' +
                to_canonical(pt.q) + ';';
    }
    e.points_fingerprint = hex64(fnv1a64(blob));

    std::map<std::string, std::string> streams;
    for (const Verdict& v : verdicts) {
        StatusProfile& p = e.profiles[v.identity_id];
        switch (v.status) {
            case Status::match: ++p.match; break;
            case Status::mismatch: ++p.mismatch; break;
            case Status::inapplicable: ++p.inapplicable; break;
        }
        streams[v.identity_id] += status_char(v.status);
    }
    for (auto& [id, profile] : e.profiles) profile.fingerprint = hex64(fnv1a64(streams[id]));
    return e;
}

std::string expectations_to_json(const Expectations& e) {
    std::string out = "{\n";
    out += "  \"n_range\": \"" + e.n_range + "\",\n";
    out += "  \"point_count\": " + std::to_string(e.point_count) + ",\n";
    out += "  \"points_fingerprint\": \"" + e.points_fingerprint + "\",\n";
    out += "  \"profiles\": {";
    bool first = true;
    for (const auto& [id, p] : e.profiles) {
        out += first ? "\n" : ",\n";
        first = false;
        out += "    \"" + id + "\": {\"match\": " + std::to_string(p.match) +
               ", \"mismatch\": " + std::to_string(p.mismatch) +
               ", \"inapplicable\": " + std::to_string(p.inapplicable) + ", \"fingerprint\": \"" +
               p.fingerprint + "\"}";
    }
    out += first ? "}\n" : "\n  }\n";
    out += "}\n";
    return out;
}

Expectations expectations_from_json(const std::string& text) {
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        Expectations e;
        e.n_range = j.at("n_range").get<std::string>();
        e.point_count = j.at("point_count").get<std::uint64_t>();
        e.points_fingerprint = j.at("points_fingerprint").get<std::string>();
        for (const auto& [id, pj] : j.at("profiles").items()) {
            StatusProfile p;
            p.match = pj.at("match").get<std::uint64_t>();
            p.mismatch = pj.at("mismatch").get<std::uint64_t>();
            p.inapplicable = pj.at("inapplicable").get<std::uint64_t>();
            p.fingerprint = pj.at("fingerprint").get<std::string>();
            e.profiles.emplace(id, std::move(p));
        }
        return e;
    } catch (const nlohmann::json::exception& err) {
        throw UsageError(std::string("malformed expectations: ") + err.what());
    }
}

Expectations load_expectations(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read expectations file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return expectations_from_json(buf.str());
}

void save_expectations(const std::string& path, const Expectations& e) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write expectations file: " + path);
    out << expectations_to_json(e);
    if (!out.flush()) throw UsageError("cannot write expectations file: " + path);
}

bool same_config(const Expectations& a, const Expectations& b) {
    return a.n_range == b.n_range && a.point_count == b.point_count &&
           a.points_fingerprint == b.points_fingerprint;
}

namespace {

std::string profile_line(const StatusProfile& p) {
    return std::to_string(p.match) + " match / " + std::to_string(p.mismatch) + " mismatch / " +
           std::to_string(p.inapplicable) + " inapplicable (" + p.fingerprint + ")";
}

} // namespace

std::vector<std::string> diff_profiles(const Expectations& pinned, const Expectations& fresh) {
    std::vector<std::string> drift;
    for (const auto& [id, profile] : fresh.profiles) {
        const auto it = pinned.profiles.find(id);
        if (it == pinned.profiles.end()) {
            drift.push_back(id + ": no pinned profile");
        } else if (!(it->second == profile)) {
            drift.push_back(id + ": expected " + profile_line(it->second) + ", got " +
                            profile_line(profile));
        }
    }
    return drift;
}

} // namespace horoct
