#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "automorph/forms.hpp"

namespace automorph {

inline constexpr int kSchemaVersion = 1;

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t line, std::size_t byte_offset, std::string field = {})
        : std::runtime_error(what), line(line), byte_offset(byte_offset), field(std::move(field)) {}
    std::size_t line;
    std::size_t byte_offset;
    std::string field;
};

struct NetworkError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SchemaDriftError : std::runtime_error {
    SchemaDriftError(const std::string& what, std::string raw) : std::runtime_error(what), raw_payload(std::move(raw)) {}
    std::string raw_payload;
};

struct CacheEntry {
    std::string label;
    std::string fetched_at;  // ISO 8601, UTC
    MaassFormRecord payload;
    int schema_version = kSchemaVersion;
};

// One JSON document per line, canonical key order, shortest round-trip doubles.
std::string serialize_record(const MaassFormRecord& r);
std::string serialize_entry(const CacheEntry& e);
MaassFormRecord parse_record(const std::string& line, std::size_t line_no = 1, std::size_t offset = 0);
CacheEntry parse_entry(const std::string& line, std::size_t line_no = 1, std::size_t offset = 0);

std::vector<MaassFormRecord> parse_fixture_text(const std::string& text);
std::string serialize_fixture(const std::vector<MaassFormRecord>& records);
std::vector<MaassFormRecord> load_fixture(const std::filesystem::path& path);
void write_fixture(const std::filesystem::path& path, const std::vector<MaassFormRecord>& records);

// AUTOMORPH_FIXTURE_DIR, else the source-tree data/fixtures.
std::filesystem::path default_fixture_dir();
std::filesystem::path default_fixture_file();
// AUTOMORPH_CACHE_DIR, else $XDG_CACHE_HOME/automorph, else ~/.cache/automorph.
std::filesystem::path default_cache_dir();
// AUTOMORPH_LMFDB_URL, else https://www.lmfdb.org/api
std::string default_lmfdb_base_url();

// Writes go to a temporary file in the same directory followed by an atomic rename.
void atomic_write(const std::filesystem::path& path, const std::string& contents);

class MaassCache {
public:
    explicit MaassCache(std::filesystem::path dir);
    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path file() const { return dir_ / "maass_forms.jsonl"; }
    std::vector<CacheEntry> entries() const;
    std::optional<CacheEntry> find(const std::string& label) const;
    // Append or replace by label.
    void put(const std::vector<MaassFormRecord>& records);
    std::optional<std::vector<std::string>> query_labels(const std::string& key) const;
    void put_query(const std::string& key, const std::vector<std::string>& labels);

private:
    std::filesystem::path dir_;
};

// Declarative LMFDB field mapping (config/lmfdb_fields.json).
struct FieldMap {
    std::string collection = "maass_newforms";
    std::string label = "maass_label";
    std::string spectral_parameter = "spectral_parameter";
    std::string symmetry = "symmetry";
    std::string even_value = "0";
    std::string coefficients = "coefficients";
    std::string level = "level";
    bool rescale_to_lambda1 = true;

    static FieldMap load(const std::filesystem::path& path);
    static FieldMap defaults();
};

struct MaassQuery {
    std::optional<std::string> label;
    std::optional<double> t_min, t_max;
    std::string parity = "even";
    int limit = 1;

    std::string key() const;
    static MaassQuery smallest_even();
};

bool valid_label(const std::string& label);

using HttpGet = std::function<std::string(const std::string& url)>;
HttpGet curl_http_get();

struct FetchOptions {
    std::string base_url = default_lmfdb_base_url();
    FieldMap fields = FieldMap::defaults();
    HttpGet http;  // curl when empty
};

std::vector<MaassFormRecord> fetch_maass_form(const MaassQuery& query, MaassCache& cache,
                                              const FetchOptions& opts = {});
// Maps one API payload (the "data" array form) to records.
std::vector<MaassFormRecord> map_lmfdb_payload(const std::string& payload, const FieldMap& fields,
                                               const std::string& url);

}  // namespace automorph
