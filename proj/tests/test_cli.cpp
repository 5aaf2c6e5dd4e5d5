#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wordrep/exponents.hpp"
#include "wordrep/repetition.hpp"
#include "wordrep/word.hpp"

namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
    std::string cmd = std::string(WORDREP_CLI_PATH) + " " + args;
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return (status >> 8) & 0xff;  // POSIX wait status
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    for (std::string line; std::getline(ss, line);) out.push_back(line);
    return out;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("wordrep_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("profile emits the expected CSV table") {
    TempDir dir;
    auto csv = dir.path / "profile.csv";
    auto jcsv = dir.path / "jumps.csv";
    REQUIRE(run("profile --word fib --n 12 --len 256 --out " + csv.string() +
                " --jumps-out " + jcsv.string() + " > /dev/null 2>&1") == 0);

    auto rows = lines_of(slurp(csv));
    REQUIRE(rows.size() == 13);
    CHECK(rows[0] == "n,p_n,r_n,status");
    CHECK(rows[1] == "1,2,3,exact");
    CHECK(rows[3] == "3,4,6,exact");
    CHECK(rows[7] == "7,8,15,exact");

    auto jrows = lines_of(slurp(jcsv));
    REQUIRE(jrows.size() == 5);  // header + jumps at n = 1, 3, 6, 11
    CHECK(jrows[0] == "n,r_n,r_n1,lambda,lambda_prime,v_n,case,audit_pass");
    CHECK(jrows[2] == "3,6,9,3,5,1,i,true");
    CHECK(jrows[3] == "6,11,15,5,8,3,i,true");
    CHECK(jrows[4] == "11,19,25,8,13,6,i,true");
}

TEST_CASE("profile JSON mirrors the CSV") {
    TempDir dir;
    auto out = dir.path / "profile.json";
    REQUIRE(run("profile --word fib --n 8 --len 256 --format json --out " + out.string() +
                " > /dev/null 2>&1") == 0);
    auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc["word_spec"] == "fib");
    CHECK(doc["prefix_len"] == 256);
    REQUIRE(doc["rows"].size() == 8);
    CHECK(doc["rows"][2]["n"] == 3);
    CHECK(doc["rows"][2]["p_n"] == 4);
    CHECK(doc["rows"][2]["r_n"] == 6);
    CHECK(doc["rows"][2]["status"] == "exact");
}

TEST_CASE("profile flags entries beyond the horizon") {
    TempDir dir;
    auto out = dir.path / "p.csv";
    // 01 repeated twice: no repeated factor of length 3 in 0101... wait, use 0011
    REQUIRE(run("profile --word periodic:pre=01,per=1 --n 3 --len 4 --out " + out.string() +
                " > /dev/null 2>&1") == 0);
    auto rows = lines_of(slurp(out));
    REQUIRE(rows.size() == 4);
    // word 0111: length-3 factors 011, 111 both unique in the prefix
    CHECK(rows[3] == "3,2,,exceeds-horizon");
}

TEST_CASE("exponents JSON round-trips against the library") {
    TempDir dir;
    auto out = dir.path / "exp.json";
    auto conv = dir.path / "conv.csv";
    REQUIRE(run("exponents --word fib --len 32768 --n 12000 --out " + out.string() +
                " --convergence-out " + conv.string() + " > /dev/null 2>&1") == 0);
    auto doc = nlohmann::json::parse(slurp(out));

    wordrep::Word f = wordrep::fibonacci_word(std::size_t{1} << 17);
    auto profile = wordrep::repetition_profile(f, 12000, 32768);
    auto js = wordrep::jumps(f, profile);
    auto est = wordrep::estimate_exponents(js);

    CHECK(doc["word_spec"] == "fib");
    CHECK(doc["rep_est"].get<double>() == est.rep_est);
    CHECK(doc["Rep_est"].get<double>() == est.Rep_est);
    CHECK(doc["beta_est"].get<double>() == est.beta_est);
    CHECK(doc["window"]["n_lo"].get<std::int64_t>() == est.n_lo);
    CHECK(doc["window"]["n_hi"].get<std::int64_t>() == est.n_hi);
    CHECK(doc["window"]["samples"].get<std::size_t>() == est.sample_count);

    REQUIRE(doc["bounds"].size() == 5);
    std::vector<std::string> ids;
    for (const auto& b : doc["bounds"]) {
        ids.push_back(b["id"]);
        CHECK(b["pass"].get<bool>());
    }
    CHECK(ids == std::vector<std::string>{"Rep_vs_new_bound", "Rep_vs_old_bound",
                                          "beta_vs_bound", "liminf_p_over_n",
                                          "p_ge_r_minus_n"});
    CHECK(doc["approximations"].size() == js.size());

    auto conv_rows = lines_of(slurp(conv));
    REQUIRE(conv_rows.size() == est.sequence.size() + 1);
    CHECK(conv_rows[0] == "n_j,rep_ratio,Rep_ratio");
    // first jump of fib: n = 1, r(1)/1 = 3, r(2)/2 = 2.5
    CHECK(conv_rows[1] == "1,3,2.5");
}

TEST_CASE("reports are deterministic across runs") {
    TempDir dir;
    auto a = dir.path / "a.json", b = dir.path / "b.json";
    REQUIRE(run("exponents --word sturm:cf=[2,1] --len 8192 --out " + a.string() +
                " > /dev/null 2>&1") == 0);
    REQUIRE(run("exponents --word sturm:cf=[2,1] --len 8192 --out " + b.string() +
                " > /dev/null 2>&1") == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("exit codes follow the contract") {
    // usage errors
    CHECK(run("profile > /dev/null 2>&1") == 1);                  // missing --word
    CHECK(run("profile --word nope > /dev/null 2>&1") == 1);      // unknown family
    CHECK(run("frobnicate > /dev/null 2>&1") == 1);               // unknown subcommand
    CHECK(run("profile --word fib --format xml > /dev/null 2>&1") == 1);
    // periodic-consistent word cannot be fed to the exponent estimator
    CHECK(run("exponents --word periodic:per=01 --len 4096 > /dev/null 2>&1") == 1);
    // I/O errors
    CHECK(run("profile --word file:base=10,path=/no/such/file > /dev/null 2>&1") == 3);
    CHECK(run("profile --word fib --len 64 --out /no/such/dir/x.csv > /dev/null 2>&1") == 3);
}

TEST_CASE("WORDREP_HORIZON caps materialization") {
    TempDir dir;
    std::string cmd = "WORDREP_HORIZON=nope " + std::string(WORDREP_CLI_PATH) +
                      " profile --word fib --len 64 > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(((status >> 8) & 0xff) == 1);

    // a generous horizon through the environment works normally
    auto out = dir.path / "h.csv";
    std::string ok = "WORDREP_HORIZON=4096 " + std::string(WORDREP_CLI_PATH) +
                     " profile --word fib --n 4 --len 64 --out " + out.string() +
                     " > /dev/null 2>&1";
    REQUIRE(((std::system(ok.c_str()) >> 8) & 0xff) == 0);
    CHECK(lines_of(slurp(out)).size() == 5);
}

TEST_CASE("verify subcommand runs the property suite") {
    CHECK(run("verify --random-words 5 --max-len 200 --seed 7 > /dev/null 2>&1") == 0);
    CHECK(run("verify --word fib --jumps 6 --golden-r > /dev/null 2>&1") == 0);
}
