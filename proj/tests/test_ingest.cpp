#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

#include "automorph/ingest.hpp"
#include "doctest.h"

using namespace automorph;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("automorph-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static std::atomic<int>& counter() {
        static std::atomic<int> c{0};
        return c;
    }
};

struct Recorder {
    std::vector<std::string> urls;
    std::string response;
    HttpGet get() {
        return [this](const std::string& url) {
            urls.push_back(url);
            return response;
        };
    }
};

const char* kPayload = R"({"data": [
  {"maass_label": "1.1.1.1.1", "spectral_parameter": "9.53369526135355755434423523592877032382125639510725",
   "symmetry": 0, "level": 1,
   "coefficients": [1.0, -1.068333551, -0.4565125, 0.141336, -0.290807, 0.487705, -0.7945, 0.72]}
]})";

}  // namespace

TEST_CASE("fetch maps the payload, caches it, and serves the cache without network") {
    TempDir d;
    MaassCache cache(d.path);
    Recorder rec;
    rec.response = kPayload;
    FetchOptions opts;
    opts.base_url = "http://example.invalid/api";
    opts.http = rec.get();
    MaassQuery q;
    q.label = "1.1.1.1.1";
    auto r = fetch_maass_form(q, cache, opts);
    REQUIRE(r.size() == 1);
    CHECK(r[0].spectral_parameter_text == "9.53369526135355755434423523592877032382125639510725");
    CHECK(r[0].source == DataSource::lmfdb);
    CHECK(r[0].provenance == rec.urls.at(0));
    CHECK(rec.urls.size() == 1);
    CHECK(rec.urls[0].find("maass_label=1.1.1.1.1") != std::string::npos);
    auto again = fetch_maass_form(q, cache, opts);
    CHECK(rec.urls.size() == 1);
    CHECK(serialize_record(again.at(0)) == serialize_record(r[0]));
}

TEST_CASE("range query is cached by its key") {
    TempDir d;
    MaassCache cache(d.path);
    Recorder rec;
    rec.response = kPayload;
    FetchOptions opts;
    opts.http = rec.get();
    MaassQuery q = MaassQuery::smallest_even();
    fetch_maass_form(q, cache, opts);
    fetch_maass_form(q, cache, opts);
    CHECK(rec.urls.size() == 1);
    CHECK(rec.urls[0].find("_limit=1") != std::string::npos);
}

TEST_CASE("malformed label fails before any network call or cache write") {
    TempDir d;
    MaassCache cache(d.path);
    Recorder rec;
    FetchOptions opts;
    opts.http = rec.get();
    MaassQuery q;
    q.label = "../../etc/passwd";
    CHECK_THROWS_AS(fetch_maass_form(q, cache, opts), std::invalid_argument);
    CHECK(rec.urls.empty());
    CHECK_FALSE(fs::exists(cache.file()));
}

TEST_CASE("schema drift is reported with the raw payload and nothing is cached") {
    TempDir d;
    MaassCache cache(d.path);
    Recorder rec;
    rec.response = R"({"results": []})";
    FetchOptions opts;
    opts.http = rec.get();
    MaassQuery q;
    q.label = "1.1.1.1.1";
    try {
        fetch_maass_form(q, cache, opts);
        FAIL("expected SchemaDriftError");
    } catch (const SchemaDriftError& e) {
        CHECK(e.raw_payload == rec.response);
    }
    CHECK(cache.entries().empty());
}

TEST_CASE("network failures surface as NetworkError") {
    TempDir d;
    MaassCache cache(d.path);
    FetchOptions opts;
    opts.http = [](const std::string&) -> std::string { throw std::runtime_error("connection refused"); };
    MaassQuery q;
    q.label = "1.1.1.1.1";
    CHECK_THROWS_AS(fetch_maass_form(q, cache, opts), NetworkError);
}

TEST_CASE("records failing lambda(1) = 1 after mapping are rejected") {
    FieldMap fm = FieldMap::defaults();
    fm.rescale_to_lambda1 = false;
    std::string p = R"({"data": [{"maass_label": "a", "spectral_parameter": "9.5", "symmetry": 0, "level": 1, "coefficients": [2.0, 1.0]}]})";
    CHECK_THROWS(map_lmfdb_payload(p, fm, "u"));
}

TEST_CASE("fixture round trip is byte-identical and truncation names a byte offset") {
    fs::path f = default_fixture_file();
    std::ifstream in(f, std::ios::binary);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto recs = parse_fixture_text(text);
    CHECK(recs.size() == 3);
    CHECK(serialize_fixture(recs) == text);
    std::string cut = text.substr(0, text.size() - 100);
    try {
        parse_fixture_text(cut);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.byte_offset > text.find('\n', text.find('\n') + 1));
        CHECK(e.byte_offset <= cut.size());
    }
}

TEST_CASE("field errors name the field") {
    std::string line = R"({"schema_version": 1, "label": "a", "spectral_parameter": 9.5, "parity": "even", "source": "fixture", "provenance": "", "coefficients": [1]})";
    try {
        parse_record(line, 7);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.field == "spectral_parameter");
        CHECK(e.line == 7);
    }
}

TEST_CASE("concurrent readers never observe a partial cache file") {
    TempDir d;
    MaassCache cache(d.path);
    auto recs = load_fixture(default_fixture_file());
    cache.put({recs[0]});
    std::atomic<bool> stop{false};
    std::atomic<int> bad{0};
    std::thread reader([&] {
        while (!stop) {
            try {
                MaassCache view(d.path);
                if (view.entries().empty()) ++bad;
            } catch (...) {
                ++bad;
            }
        }
    });
    for (int i = 0; i < 30; ++i) cache.put({recs[i % 3]});
    stop = true;
    reader.join();
    CHECK(bad == 0);
    CHECK(cache.entries().size() == 3);
}

TEST_CASE("labels") {
    CHECK(valid_label("1.even.1"));
    CHECK(valid_label("1.1.1.1.1"));
    CHECK_FALSE(valid_label(""));
    CHECK_FALSE(valid_label("a/b"));
    CHECK_FALSE(valid_label(".hidden"));
}
