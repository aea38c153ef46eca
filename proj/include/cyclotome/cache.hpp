#ifndef CYCLOTOME_CACHE_HPP
#define CYCLOTOME_CACHE_HPP

#include <map>
#include <optional>
#include <string>

#include "cyclotome/heights.hpp"

namespace cyclotome {

inline constexpr int kCacheSchemaVersion = 1;

/// One HeightRecord as a single JSON line. Heights are serialized as decimal
/// strings so B_n survives a round trip losslessly; keys come out sorted, so
/// identical records are byte-identical.
std::string record_to_json_line(const HeightRecord& rec);
HeightRecord record_from_json_line(const std::string& line);

/// Append-only json-lines store of HeightRecords keyed by n. A corrupted
/// trailing line (interrupted write) is dropped on load; corruption anywhere
/// else is an error.
class HeightCache {
  public:
    /// Loads the file when it exists; a missing file is an empty cache.
    explicit HeightCache(std::string path);

    /// A record usable for this request: when with_b, it must either carry B
    /// or be flagged over-limit.
    const HeightRecord* find(long n, bool with_b) const;

    /// Stores in memory and appends one line to the file.
    void append(const HeightRecord& rec);

    std::size_t size() const { return records_.size(); }

  private:
    std::string path_;
    std::map<long, HeightRecord> records_;
};

}  // namespace cyclotome

#endif
