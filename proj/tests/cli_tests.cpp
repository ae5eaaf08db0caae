// End-to-end checks of the qvseg binary. The path to the built CLI comes in
// through the QVSEG_CLI environment variable (set by the ctest registration).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "qvseg/json_io.hpp"
#include "qvseg/pgm_io.hpp"
#include "qvseg/video.hpp"

using namespace qvseg;
namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    const char* env = std::getenv("QVSEG_CLI");
    REQUIRE_MESSAGE(env != nullptr, "QVSEG_CLI must point at the built CLI binary");
    return env;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("qvseg_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

int run_cli(const std::string& args, const fs::path& log) {
    const std::string command = cli_path() + " " + args + " > " + log.string() + " 2>&1";
    const int status = std::system(command.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -2;
}

std::string slurp(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

Video moving_target_video() {
    // Fixed background with a bright pixel walking down the diagonal.
    Video v = Video::filled(2, 2, 3, 2);
    for (size_t j = 0; j < 4; ++j) {
        v.at(j, j, j) = 7;
    }
    return v;
}

}  // namespace

TEST_CASE("segment produces artifacts and a summary") {
    TempDir dir;
    const fs::path manifest = dir.path / "video.json";
    write_video_manifest(moving_target_video(), manifest);

    const fs::path out = dir.path / "out";
    const fs::path log = dir.path / "log.txt";
    const int code = run_cli("segment --input " + manifest.string() + " --threshold 001 --shots 1024" +
                                 " --seed 7 --out " + out.string(),
                             log);
    CHECK(code == 0);
    for (const char* name : {"frame_0000.pgm", "frame_0003.pgm", "histogram.json", "cost.json",
                             "layout.json", "result.json"}) {
        CAPTURE(name);
        CHECK(fs::exists(out / name));
    }
    const std::string summary = slurp(log);
    CHECK(summary.find("width=21") != std::string::npos);
    CHECK(summary.find("foreground=") != std::string::npos);

    auto histogram = nlohmann::json::parse(slurp(out / "histogram.json"));
    CHECK(histogram.at("shots") == 1024);
    CHECK(histogram.at("counts").size() <= 64);
    uint64_t total = 0;
    for (const auto& [key, n] : histogram.at("counts").items()) {
        total += n.get<uint64_t>();
    }
    CHECK(total == 1024);
}

TEST_CASE("segment artifacts are byte-identical across runs") {
    TempDir dir;
    const fs::path manifest = dir.path / "video.json";
    write_video_manifest(moving_target_video(), manifest);

    const std::string common = "segment --input " + manifest.string() + " --threshold 1 --seed 42 --out ";
    const fs::path out_a = dir.path / "a";
    const fs::path out_b = dir.path / "b";
    CHECK(run_cli(common + out_a.string(), dir.path / "log_a.txt") == 0);
    CHECK(run_cli(common + out_b.string(), dir.path / "log_b.txt") == 0);
    for (const auto& entry : fs::directory_iterator(out_a)) {
        const auto name = entry.path().filename();
        CAPTURE(name.string());
        CHECK(slurp(entry.path()) == slurp(out_b / name));
    }
    CHECK(slurp(dir.path / "log_a.txt") == slurp(dir.path / "log_b.txt"));
}

TEST_CASE("static input reports zero foreground") {
    TempDir dir;
    const fs::path manifest = dir.path / "video.json";
    write_video_manifest(Video::filled(1, 1, 3, 4), manifest);
    const fs::path log = dir.path / "log.txt";
    const int code =
        run_cli("segment --input " + manifest.string() + " --out " + (dir.path / "out").string(), log);
    CHECK(code == 0);
    CHECK(slurp(log).find("foreground=0") != std::string::npos);
}

TEST_CASE("segment PGM output round-trips as a binary video") {
    TempDir dir;
    const fs::path manifest = dir.path / "video.json";
    write_video_manifest(moving_target_video(), manifest);
    const fs::path out = dir.path / "out";
    REQUIRE(run_cli("segment --input " + manifest.string() + " --out " + out.string(),
                    dir.path / "log.txt") == 0);
    Video mask = read_video_pgm_dir(out);
    CHECK(mask.q == 1);
    CHECK(validate_video(mask).empty());
}

TEST_CASE("compare finds no mismatches on a valid video") {
    TempDir dir;
    const fs::path manifest = dir.path / "video.json";
    write_video_manifest(moving_target_video(), manifest);
    const fs::path out = dir.path / "out";
    const int code = run_cli("compare --input " + manifest.string() + " --threshold 1 --out " +
                                 out.string(),
                             dir.path / "log.txt");
    CHECK(code == 0);
    auto diff = nlohmann::json::parse(slurp(out / "diff.json"));
    CHECK(diff.at("count") == 0);
}

TEST_CASE("compare flags a corrupted result (test hook)") {
    TempDir dir;
    const fs::path manifest = dir.path / "video.json";
    write_video_manifest(moving_target_video(), manifest);
    const fs::path out = dir.path / "out";
    const int code = run_cli("compare --input " + manifest.string() +
                                 " --corrupt-result --out " + out.string(),
                             dir.path / "log.txt");
    CHECK(code == 1);
    auto diff = nlohmann::json::parse(slurp(out / "diff.json"));
    CHECK(diff.at("count").get<int>() >= 1);
}

TEST_CASE("clamp-vs-cyclic mismatches stay on the boundary frames") {
    TempDir dir;
    const fs::path manifest = dir.path / "video.json";
    write_video_manifest(moving_target_video(), manifest);
    const fs::path out = dir.path / "out";
    run_cli("compare --input " + manifest.string() + " --boundary clamp --out " + out.string(),
            dir.path / "log.txt");
    auto diff = nlohmann::json::parse(slurp(out / "diff.json"));
    for (const auto& cell : diff.at("mismatches")) {
        const int j = cell.at("j").get<int>();
        CHECK((j == 0 || j == 3));
    }
}

TEST_CASE("exit codes distinguish input and parameter errors") {
    TempDir dir;
    CHECK(run_cli("segment --input " + (dir.path / "missing.json").string() + " --out " +
                      (dir.path / "out").string(),
                  dir.path / "log.txt") == 2);

    const fs::path manifest = dir.path / "video.json";
    write_video_manifest(Video::filled(1, 1, 2, 1), manifest);
    CHECK(run_cli("segment --input " + manifest.string() + " --threshold 9 --out " +
                      (dir.path / "out").string(),
                  dir.path / "log.txt") == 3);
    CHECK(run_cli("segment --input " + manifest.string() + " --mode bogus --out " +
                      (dir.path / "out").string(),
                  dir.path / "log.txt") == 3);

    Video bad = Video::filled(1, 1, 2);
    bad.frames.pop_back();
    write_video_manifest(bad, manifest);
    CHECK(run_cli("segment --input " + manifest.string() + " --out " + (dir.path / "out").string(),
                  dir.path / "log.txt") == 2);
}

TEST_CASE("cost table prints the affine fit") {
    TempDir dir;
    const fs::path log = dir.path / "log.txt";
    const fs::path json_out = dir.path / "cost.json";
    const int code = run_cli("cost --m-range 1:2 --n-range 1:2 --q-range 3 --out " + json_out.string(),
                             log);
    CHECK(code == 0);
    const std::string text = slurp(log);
    CHECK(text.find("cost(q) = 11*q + 7 (exact)") != std::string::npos);
    auto j = nlohmann::json::parse(slurp(json_out));
    CHECK(j.at("comparator").at("affine_fit").at("alpha") == 11);
    CHECK(j.at("comparator").at("affine_fit").at("exact") == true);
    CHECK(j.at("pipeline").size() == 4);
    // Skeleton cost depends on m and q only, never on n.
    std::map<std::pair<int, int>, int64_t> by_mq;
    for (const auto& row : j.at("pipeline")) {
        const auto key = std::make_pair(row.at("m_exp").get<int>(), row.at("q").get<int>());
        const int64_t cost = row.at("total_cost").get<int64_t>();
        if (by_mq.count(key)) {
            CHECK(by_mq.at(key) == cost);
        }
        by_mq[key] = cost;
    }
}

TEST_CASE("segment accepts a PGM directory as input") {
    TempDir dir;
    const fs::path frames = dir.path / "frames";
    write_video_pgm_dir(moving_target_video(), frames);
    const fs::path log = dir.path / "log.txt";
    const int code = run_cli("segment --input " + frames.string() + " --threshold 1 --out " +
                                 (dir.path / "out").string(),
                             log);
    CHECK(code == 0);
    CHECK(slurp(log).find("width=21") != std::string::npos);
}

TEST_CASE("blocks describe prints a contract") {
    TempDir dir;
    const fs::path log = dir.path / "log.txt";
    CHECK(run_cli("blocks describe comparator --q 3", log) == 0);
    const std::string text = slurp(log);
    CHECK(text.find("block: comparator") != std::string::npos);
    CHECK(text.find("scratch anc") != std::string::npos);
    CHECK(run_cli("blocks describe nonesuch", log) == 3);
}
