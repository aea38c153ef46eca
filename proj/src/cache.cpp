#include "cyclotome/cache.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace cyclotome {

using nlohmann::json;

std::string record_to_json_line(const HeightRecord& rec) {
    json j;
    j["schemaVersion"] = kCacheSchemaVersion;
    j["n"] = rec.n;
    j["omega"] = rec.omega;
    j["phi"] = rec.phi;
    j["A"] = rec.A.to_string();
    j["S"] = rec.S.to_string();
    if (rec.C) j["C"] = rec.C->to_string();
    if (rec.B) j["B"] = rec.B->to_string();
    if (rec.witnessSubset) j["witnessSubset"] = *rec.witnessSubset;
    if (rec.bOverLimit) j["bOverLimit"] = true;
    return j.dump();
}

HeightRecord record_from_json_line(const std::string& line) {
    const json j = json::parse(line);
    HeightRecord rec;
    rec.n = j.at("n").get<long>();
    rec.omega = j.at("omega").get<int>();
    rec.phi = j.at("phi").get<long>();
    rec.A = BigInt(j.at("A").get<std::string>());
    rec.S = BigInt(j.at("S").get<std::string>());
    if (j.contains("C")) rec.C = BigInt(j.at("C").get<std::string>());
    if (j.contains("B")) rec.B = BigInt(j.at("B").get<std::string>());
    if (j.contains("witnessSubset")) rec.witnessSubset = j.at("witnessSubset").get<std::vector<long>>();
    if (j.contains("bOverLimit")) rec.bOverLimit = j.at("bOverLimit").get<bool>();
    return rec;
}

HeightCache::HeightCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        try {
            HeightRecord rec = record_from_json_line(lines[i]);
            records_[rec.n] = std::move(rec);
        } catch (const std::exception& e) {
            if (i + 1 == lines.size()) break;  // interrupted trailing write; drop it
            throw std::runtime_error("cache '" + path_ + "' corrupted at line " +
                                     std::to_string(i + 1) + ": " + e.what());
        }
    }
}

const HeightRecord* HeightCache::find(long n, bool with_b) const {
    const auto it = records_.find(n);
    if (it == records_.end()) return nullptr;
    if (with_b && !it->second.B && !it->second.bOverLimit) return nullptr;
    return &it->second;
}

void HeightCache::append(const HeightRecord& rec) {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cache '" + path_ + "' is not writable");
    out << record_to_json_line(rec) << "\n";
    records_[rec.n] = rec;
}

}  // namespace cyclotome
