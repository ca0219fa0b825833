#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(MCKAY_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (const std::size_t k = std::fread(buf.data(), 1, buf.size(), p))
        out.append(buf.data(), k);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::size_t count(const std::string& s, const std::string& needle)
{
    std::size_t k = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1))
        ++k;
    return k;
}

} // namespace

TEST_CASE("quiver as DOT")
{
    const Run r = run("quiver --n 4 --format dot");
    CHECK(r.code == 0);
    CHECK(count(r.out, "\";\n") == 5);
    CHECK(count(r.out, " -- ") == 4);
}

TEST_CASE("fixed points as JSON")
{
    const Run r = run("fixed-points --n 5 --format json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("n") == 5);
    CHECK(j.at("anchor").is_string());
    REQUIRE(j.at("payload").is_array());
    CHECK(j.at("payload").size() == 1);
    const auto many = nlohmann::json::parse(run("fixed-points --n-range 3..6 --format json").out);
    REQUIRE(many.is_array());
    CHECK(many.size() == 4);
    CHECK(many[1].at("payload").size() == 2);
}

TEST_CASE("tables")
{
    const Run r = run("socle-table --n 4");
    CHECK(r.code == 0);
    CHECK(r.out.find("| B1 ") != std::string::npos);
    const Run many = run("chartable --n-range 3..5");
    CHECK(count(many.out, "## n = ") == 3);
    CHECK(run("taut-table --n 6 --k 2").code == 0);
    CHECK(run("refdiv --n 7 --format json").code == 0);
}

TEST_CASE("theta checks with a seeds file")
{
    const auto path = std::filesystem::temp_directory_path() / "mckay_cli_seeds.txt";
    {
        std::ofstream f(path);
        f << "[p] y | -1@[tau p] x\n[p] 1\n";
    }
    const Run r = run("socle-table --n 4 --theta -3,1,1,0,0 --family " + path.string() + " --format json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("payload").at("witnesses").at(0).at("family_size") == 2);
    CHECK(j.at("payload").at("generic") == false);
    const Run d = run("socle-table --n 4 --theta -3,1,1,0,0 --format json");
    CHECK(d.code == 0);
    CHECK(nlohmann::json::parse(d.out).at("payload").at("witnesses").at(0).at("destabilized") == true);
    CHECK(run("socle-table --n 4 --family " + path.string()).code == 1);
    std::filesystem::remove(path);
}

TEST_CASE("verify on a small range")
{
    const Run r = run("verify --n-range 3..6");
    CHECK(r.code == 0);
    CHECK(r.out.find("11/11") != std::string::npos);
    CHECK(count(r.out, "[PASS]") == 11);
}

TEST_CASE("usage errors name the flag")
{
    const Run bad_n = run("quiver --n 2");
    CHECK(bad_n.code == 1);
    CHECK(bad_n.out.find("--n") != std::string::npos);
    const Run bad_range = run("quiver --n-range 7..3");
    CHECK(bad_range.code == 1);
    CHECK(bad_range.out.find("--n-range") != std::string::npos);
    const Run bad_format = run("chartable --n 4 --format dot");
    CHECK(bad_format.code == 1);
    CHECK(bad_format.out.find("--format") != std::string::npos);
    const Run bad_theta = run("socle-table --n 4 --theta 1,2");
    CHECK(bad_theta.code == 1);
    CHECK(bad_theta.out.find("--theta") != std::string::npos);
    const Run bad_alpha = run("socle-table --n 4 --alpha -1");
    CHECK(bad_alpha.code == 1);
    CHECK(bad_alpha.out.find("--alpha") != std::string::npos);
    CHECK(run("no-such-command").code == 1);
}

TEST_CASE("output is deterministic")
{
    CHECK(run("strict-transforms --n 6 --format json").out == run("strict-transforms --n 6 --format json").out);
    CHECK(run("verify --n-range 3..4 --format json").out == run("verify --n-range 3..4 --format json").out);
}

TEST_CASE("--out writes a file")
{
    const auto path = std::filesystem::temp_directory_path() / "mckay_cli_out.json";
    std::filesystem::remove(path);
    const Run r = run("fold --n 5 --format json --out " + path.string());
    CHECK(r.code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    const auto j = nlohmann::json::parse(in);
    CHECK(j.at("n") == 5);
    std::filesystem::remove(path);
}
