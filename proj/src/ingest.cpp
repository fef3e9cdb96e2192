#include "automorph/ingest.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#ifdef AUTOMORPH_HAVE_CURL
#include <curl/curl.h>
#endif

#ifndef AUTOMORPH_SOURCE_DIR
#define AUTOMORPH_SOURCE_DIR "."
#endif

namespace automorph {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

const std::regex kDecimal(R"(^-?[0-9]+(\.[0-9]+)?([eE][-+]?[0-9]+)?$)");

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return (v && *v) ? std::string(v) : fallback;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string number_text(double v) { return ojson(v).dump(); }

ojson record_json(const MaassFormRecord& r) {
    ojson j;
    j["schema_version"] = kSchemaVersion;
    j["label"] = r.label;
    j["spectral_parameter"] = r.spectral_parameter_text.empty() ? number_text(r.spectral_parameter)
                                                                : r.spectral_parameter_text;
    j["parity"] = r.parity;
    if (r.sym2_L_value) j["sym2_L_value"] = *r.sym2_L_value;
    j["source"] = to_string(r.source);
    j["provenance"] = r.provenance;
    j["coefficients"] = r.coefficients;
    return j;
}

template <class J>
const J& need(const J& j, const char* field, std::size_t line_no, std::size_t offset) {
    if (!j.is_object() || !j.contains(field))
        throw ParseError("line " + std::to_string(line_no) + ": missing field '" + field + "'", line_no, offset, field);
    return j.at(field);
}

MaassFormRecord record_from_json(const ojson& j, std::size_t line_no, std::size_t offset) {
    auto fail = [&](const char* field, const std::string& why) {
        return ParseError("line " + std::to_string(line_no) + ", field '" + field + "': " + why, line_no, offset,
                          field);
    };
    MaassFormRecord r;
    try {
        int sv = need(j, "schema_version", line_no, offset).template get<int>();
        if (sv != kSchemaVersion) throw fail("schema_version", "unsupported version " + std::to_string(sv));
        r.label = need(j, "label", line_no, offset).template get<std::string>();
        const ojson& sp = need(j, "spectral_parameter", line_no, offset);
        if (!sp.is_string()) throw fail("spectral_parameter", "must be a decimal string");
        r.spectral_parameter_text = sp.get<std::string>();
        if (!std::regex_match(r.spectral_parameter_text, kDecimal))
            throw fail("spectral_parameter", "not a decimal number");
        r.spectral_parameter = std::stod(r.spectral_parameter_text);
        r.parity = need(j, "parity", line_no, offset).template get<std::string>();
        if (j.contains("sym2_L_value") && !j.at("sym2_L_value").is_null())
            r.sym2_L_value = j.at("sym2_L_value").template get<double>();
        r.source = data_source_from_string(need(j, "source", line_no, offset).template get<std::string>());
        r.provenance = need(j, "provenance", line_no, offset).template get<std::string>();
        const ojson& c = need(j, "coefficients", line_no, offset);
        if (!c.is_array()) throw fail("coefficients", "must be an array");
        r.coefficients = c.get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no, offset);
    } catch (const std::invalid_argument& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no, offset);
    }
    try {
        validate_record(r);
    } catch (const std::invalid_argument& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no, offset);
    }
    return r;
}

ojson parse_line(const std::string& line, std::size_t line_no, std::size_t offset) {
    try {
        return ojson::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t at = offset + (e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("line " + std::to_string(line_no) + ": JSON parse error at byte offset " + std::to_string(at),
                         line_no, at);
    }
}

std::string utc_now() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

class DirLock {
public:
    explicit DirLock(const fs::path& dir) {
        fd_ = ::open((dir / ".lock").c_str(), O_CREAT | O_RDWR, 0644);
        if (fd_ >= 0) ::flock(fd_, LOCK_EX);
    }
    ~DirLock() {
        if (fd_ >= 0) {
            ::flock(fd_, LOCK_UN);
            ::close(fd_);
        }
    }
    DirLock(const DirLock&) = delete;
    DirLock& operator=(const DirLock&) = delete;

private:
    int fd_ = -1;
};

template <class F>
void for_each_line(const std::string& text, F&& f) {
    std::size_t pos = 0, line_no = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        ++line_no;
        if (end > pos) f(text.substr(pos, end - pos), line_no, pos);
        pos = end + 1;
    }
}

std::string url_encode(const std::string& s) {
    std::string out;
    const char* hex = "0123456789ABCDEF";
    for (unsigned char c : s) {
        if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
            out += char(c);
        } else {
            out += '%';
            out += hex[c >> 4];
            out += hex[c & 15];
        }
    }
    return out;
}

}  // namespace

std::string serialize_record(const MaassFormRecord& r) { return record_json(r).dump(); }

std::string serialize_entry(const CacheEntry& e) {
    ojson j;
    j["schema_version"] = e.schema_version;
    j["label"] = e.label;
    j["fetched_at"] = e.fetched_at;
    j["payload"] = record_json(e.payload);
    return j.dump();
}

MaassFormRecord parse_record(const std::string& line, std::size_t line_no, std::size_t offset) {
    return record_from_json(parse_line(line, line_no, offset), line_no, offset);
}

CacheEntry parse_entry(const std::string& line, std::size_t line_no, std::size_t offset) {
    ojson j = parse_line(line, line_no, offset);
    CacheEntry e;
    try {
        e.schema_version = need(j, "schema_version", line_no, offset).get<int>();
        if (e.schema_version != kSchemaVersion)
            throw ParseError("cache line " + std::to_string(line_no) + ": unsupported schema_version", line_no, offset,
                             "schema_version");
        e.label = need(j, "label", line_no, offset).get<std::string>();
        e.fetched_at = need(j, "fetched_at", line_no, offset).get<std::string>();
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError("cache line " + std::to_string(line_no) + ": " + ex.what(), line_no, offset);
    }
    e.payload = record_from_json(need(j, "payload", line_no, offset), line_no, offset);
    return e;
}

std::vector<MaassFormRecord> parse_fixture_text(const std::string& text) {
    std::vector<MaassFormRecord> out;
    for_each_line(text, [&](const std::string& line, std::size_t no, std::size_t off) {
        out.push_back(parse_record(line, no, off));
    });
    return out;
}

std::string serialize_fixture(const std::vector<MaassFormRecord>& records) {
    std::string s;
    for (const auto& r : records) s += serialize_record(r) + "\n";
    return s;
}

std::vector<MaassFormRecord> load_fixture(const fs::path& path) {
    if (!fs::exists(path)) throw std::runtime_error("fixture not found: " + path.string());
    return parse_fixture_text(read_file(path));
}

void write_fixture(const fs::path& path, const std::vector<MaassFormRecord>& records) {
    atomic_write(path, serialize_fixture(records));
}

fs::path default_fixture_dir() {
    return env_or("AUTOMORPH_FIXTURE_DIR", std::string(AUTOMORPH_SOURCE_DIR) + "/data/fixtures");
}

fs::path default_fixture_file() { return default_fixture_dir() / "maass_even.jsonl"; }

fs::path default_cache_dir() {
    if (const char* v = std::getenv("AUTOMORPH_CACHE_DIR"); v && *v) return v;
    if (const char* v = std::getenv("XDG_CACHE_HOME"); v && *v) return fs::path(v) / "automorph";
    if (const char* v = std::getenv("HOME"); v && *v) return fs::path(v) / ".cache" / "automorph";
    return fs::temp_directory_path() / "automorph-cache";
}

std::string default_lmfdb_base_url() { return env_or("AUTOMORPH_LMFDB_URL", "https://www.lmfdb.org/api"); }

void atomic_write(const fs::path& path, const std::string& contents) {
    static std::atomic<unsigned> counter{0};
    fs::path dir = path.parent_path().empty() ? fs::path(".") : path.parent_path();
    fs::create_directories(dir);
    fs::path tmp = dir / ("." + path.filename().string() + ".tmp." + std::to_string(::getpid()) + "." +
                          std::to_string(counter++));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << contents;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    int fd = ::open(tmp.c_str(), O_RDONLY);
    if (fd >= 0) {
        ::fsync(fd);
        ::close(fd);
    }
    fs::rename(tmp, path);
}

MaassCache::MaassCache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

std::vector<CacheEntry> MaassCache::entries() const {
    std::vector<CacheEntry> out;
    if (!fs::exists(file())) return out;
    std::string text = read_file(file());
    for_each_line(text, [&](const std::string& line, std::size_t no, std::size_t off) {
        out.push_back(parse_entry(line, no, off));
    });
    return out;
}

std::optional<CacheEntry> MaassCache::find(const std::string& label) const {
    for (auto& e : entries())
        if (e.label == label) return e;
    return std::nullopt;
}

void MaassCache::put(const std::vector<MaassFormRecord>& records) {
    DirLock lock(dir_);
    std::vector<CacheEntry> all = entries();
    for (const auto& r : records) {
        MaassFormRecord copy = r;
        validate_record(copy);
        CacheEntry e{r.label, utc_now(), copy, kSchemaVersion};
        bool replaced = false;
        for (auto& old : all)
            if (old.label == r.label) {
                old = e;
                replaced = true;
            }
        if (!replaced) all.push_back(e);
    }
    std::string text;
    for (const auto& e : all) text += serialize_entry(e) + "\n";
    atomic_write(file(), text);
}

std::optional<std::vector<std::string>> MaassCache::query_labels(const std::string& key) const {
    fs::path f = dir_ / "queries.jsonl";
    if (!fs::exists(f)) return std::nullopt;
    std::optional<std::vector<std::string>> found;
    for_each_line(read_file(f), [&](const std::string& line, std::size_t no, std::size_t off) {
        ojson j = parse_line(line, no, off);
        if (j.value("key", "") == key) found = j.at("labels").get<std::vector<std::string>>();
    });
    return found;
}

void MaassCache::put_query(const std::string& key, const std::vector<std::string>& labels) {
    DirLock lock(dir_);
    fs::path f = dir_ / "queries.jsonl";
    std::string text;
    if (fs::exists(f))
        for_each_line(read_file(f), [&](const std::string& line, std::size_t no, std::size_t off) {
            if (parse_line(line, no, off).value("key", "") != key) text += line + "\n";
        });
    ojson j;
    j["key"] = key;
    j["labels"] = labels;
    text += j.dump() + "\n";
    atomic_write(f, text);
}

FieldMap FieldMap::defaults() { return FieldMap{}; }

FieldMap FieldMap::load(const fs::path& path) {
    ojson j;
    try {
        j = ojson::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("field map " + path.string() + ": JSON parse error", 1, e.byte);
    }
    FieldMap m;
    auto str = [&](const char* k, std::string& dst) {
        if (j.contains(k)) dst = j.at(k).get<std::string>();
    };
    str("collection", m.collection);
    str("label", m.label);
    str("spectral_parameter", m.spectral_parameter);
    str("symmetry", m.symmetry);
    str("even_value", m.even_value);
    str("coefficients", m.coefficients);
    str("level", m.level);
    if (j.contains("rescale_to_lambda1")) m.rescale_to_lambda1 = j.at("rescale_to_lambda1").get<bool>();
    return m;
}

std::string MaassQuery::key() const {
    std::ostringstream os;
    os.precision(17);
    if (label) os << "label=" << *label;
    if (t_min) os << ";tmin=" << *t_min;
    if (t_max) os << ";tmax=" << *t_max;
    os << ";parity=" << parity << ";limit=" << limit;
    return os.str();
}

MaassQuery MaassQuery::smallest_even() {
    MaassQuery q;
    q.parity = "even";
    q.limit = 1;
    return q;
}

bool valid_label(const std::string& label) {
    static const std::regex re(R"(^[A-Za-z0-9][A-Za-z0-9._-]{0,63}$)");
    return std::regex_match(label, re);
}

HttpGet curl_http_get() {
    return [](const std::string& url) -> std::string {
#ifdef AUTOMORPH_HAVE_CURL
        CURL* h = curl_easy_init();
        if (!h) throw NetworkError("curl initialisation failed");
        std::string body;
        curl_easy_setopt(h, CURLOPT_URL, url.c_str());
        curl_easy_setopt(h, CURLOPT_FOLLOWLOCATION, 1L);
        curl_easy_setopt(h, CURLOPT_TIMEOUT, 30L);
        curl_easy_setopt(h, CURLOPT_USERAGENT, "automorph/1.0");
        curl_easy_setopt(h, CURLOPT_WRITEFUNCTION, +[](char* p, size_t s, size_t n, void* ud) -> size_t {
            static_cast<std::string*>(ud)->append(p, s * n);
            return s * n;
        });
        curl_easy_setopt(h, CURLOPT_WRITEDATA, &body);
        CURLcode rc = curl_easy_perform(h);
        long status = 0;
        curl_easy_getinfo(h, CURLINFO_RESPONSE_CODE, &status);
        curl_easy_cleanup(h);
        if (rc != CURLE_OK) throw NetworkError(std::string("GET ") + url + ": " + curl_easy_strerror(rc));
        if (status != 200) throw NetworkError("GET " + url + ": HTTP status " + std::to_string(status));
        return body;
#else
        throw NetworkError("GET " + url + ": built without libcurl");
#endif
    };
}

std::vector<MaassFormRecord> map_lmfdb_payload(const std::string& payload, const FieldMap& fm, const std::string& url) {
    ojson j;
    try {
        j = ojson::parse(payload);
    } catch (const nlohmann::json::parse_error&) {
        throw SchemaDriftError("LMFDB response is not JSON", payload);
    }
    if (!j.is_object() || !j.contains("data") || !j.at("data").is_array())
        throw SchemaDriftError("LMFDB response lacks a 'data' array", payload);
    std::vector<MaassFormRecord> out;
    for (const auto& d : j.at("data")) {
        for (const std::string* f : {&fm.label, &fm.spectral_parameter, &fm.coefficients})
            if (!d.contains(*f)) throw SchemaDriftError("LMFDB record lacks field '" + *f + "'", payload);
        MaassFormRecord r;
        const auto& lab = d.at(fm.label);
        r.label = lab.is_string() ? lab.get<std::string>() : lab.dump();
        const auto& sp = d.at(fm.spectral_parameter);
        if (sp.is_string()) {
            r.spectral_parameter_text = sp.get<std::string>();
        } else if (sp.is_number()) {
            r.spectral_parameter_text = sp.dump();
        } else {
            throw SchemaDriftError("spectral parameter has unexpected type", payload);
        }
        if (!std::regex_match(r.spectral_parameter_text, kDecimal))
            throw SchemaDriftError("spectral parameter is not a decimal", payload);
        r.spectral_parameter = std::stod(r.spectral_parameter_text);
        if (d.contains(fm.symmetry)) {
            const auto& s = d.at(fm.symmetry);
            std::string sv = s.is_string() ? s.get<std::string>() : s.dump();
            r.parity = sv == fm.even_value ? "even" : "odd";
        }
        const auto& c = d.at(fm.coefficients);
        if (!c.is_array()) throw SchemaDriftError("coefficients are not an array", payload);
        for (const auto& v : c) {
            if (v.is_number()) r.coefficients.push_back(v.get<double>());
            else if (v.is_string()) r.coefficients.push_back(std::stod(v.get<std::string>()));
            else if (v.is_array() && !v.empty() && v.at(0).is_number()) r.coefficients.push_back(v.at(0).get<double>());
            else throw SchemaDriftError("coefficient entry has unexpected type", payload);
        }
        if (fm.rescale_to_lambda1 && !r.coefficients.empty() && r.coefficients[0] != 0.0 &&
            r.coefficients[0] != 1.0) {
            double c0 = r.coefficients[0];
            for (double& v : r.coefficients) v /= c0;
        }
        r.source = DataSource::lmfdb;
        r.provenance = url;
        validate_record(r);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<MaassFormRecord> fetch_maass_form(const MaassQuery& q, MaassCache& cache, const FetchOptions& opts) {
    if (q.limit < 1) throw std::invalid_argument("fetch_maass_form: limit must be positive");
    if (q.label) {
        if (!valid_label(*q.label)) throw std::invalid_argument("fetch_maass_form: malformed label '" + *q.label + "'");
        if (auto e = cache.find(*q.label)) return {e->payload};
    } else if (auto labels = cache.query_labels(q.key())) {
        std::vector<MaassFormRecord> out;
        bool complete = true;
        for (const auto& l : *labels) {
            auto e = cache.find(l);
            if (!e) {
                complete = false;
                break;
            }
            out.push_back(e->payload);
        }
        if (complete) return out;
    }
    const FieldMap& fm = opts.fields;
    std::string url = opts.base_url + "/" + fm.collection + "/?_format=json";
    if (q.label) {
        url += "&" + fm.label + "=" + url_encode(*q.label);
    } else {
        url += "&" + fm.level + "=i1";
        if (q.parity == "even") url += "&" + fm.symmetry + "=i" + fm.even_value;
        if (q.t_min || q.t_max) {
            std::ostringstream rng;
            rng.precision(17);
            rng << "py{";
            if (q.t_min) rng << "\"$gte\":" << *q.t_min;
            if (q.t_min && q.t_max) rng << ",";
            if (q.t_max) rng << "\"$lte\":" << *q.t_max;
            rng << "}";
            url += "&" + fm.spectral_parameter + "=" + url_encode(rng.str());
        }
        url += "&_sort=" + fm.spectral_parameter + "&_limit=" + std::to_string(q.limit);
    }
    HttpGet get = opts.http ? opts.http : curl_http_get();
    std::string payload;
    try {
        payload = get(url);
    } catch (const NetworkError&) {
        throw;
    } catch (const std::exception& e) {
        throw NetworkError(std::string("GET ") + url + ": " + e.what());
    }
    std::vector<MaassFormRecord> recs = map_lmfdb_payload(payload, fm, url);
    if (q.label && recs.empty()) throw std::runtime_error("fetch_maass_form: no record for label " + *q.label);
    if (int(recs.size()) > q.limit) recs.resize(std::size_t(q.limit));
    cache.put(recs);
    if (!q.label) {
        std::vector<std::string> labels;
        for (const auto& r : recs) labels.push_back(r.label);
        cache.put_query(q.key(), labels);
    }
    return recs;
}

}  // namespace automorph
