#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("meissner_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunResult run(const std::string& args) {
    const fs::path out = work_dir() / "stdout.txt";
    const fs::path err = work_dir() / "stderr.txt";
    const std::string cmd = std::string(MEISSNER_CLI_PATH) + " " + args + " >" +
                            out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    return {WEXITSTATUS(status), slurp(out), slurp(err)};
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("point: stable anchor") {
    const RunResult r = run("point --epsilon 0 --j0 0 --omega0-sq 1.01 -t 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"class\": \"stable\"") != std::string::npos);
    CHECK(r.out.find("\"N1\": 0") != std::string::npos);
    CHECK(r.out.find("\"E_N\": 0") != std::string::npos);
    CHECK(r.out.find("\"Lambda\":") != std::string::npos);
    // deterministic field order: t first, class last
    CHECK(r.out.find("\"t\":") < r.out.find("\"N1\":"));
    CHECK(r.out.find("\"S\":") < r.out.find("\"class\":"));
}

TEST_CASE("point: unstable anchor reports Lambda about 1.005") {
    const RunResult r = run("point --epsilon 0.1 --j0 0 --omega0-sq 1.01 -t 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"class\": \"unstable\"") != std::string::npos);
    const size_t pos = r.out.find("\"Lambda\": ");
    REQUIRE(pos != std::string::npos);
    const double lambda = std::stod(r.out.substr(pos + 10));
    CHECK(lambda == doctest::Approx(1.005).epsilon(2e-3));
}

TEST_CASE("point: unbounded parameters exit with code 2") {
    const RunResult r = run("point --epsilon 1.2 --j0 0 --omega0-sq 1 -t 0");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("unbounded") != std::string::npos);
}

TEST_CASE("dynamics: schema") {
    const RunResult r = run("dynamics --epsilon 0 --j0 0.3 --omega0-sq 1.01 "
                            "--horizon 3.14159 --samples 40");
    CHECK(r.exit_code == 0);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "t,h1,h2,nu1,nu2,N1,N2,M12,mu,lambda_min,E_N");
    CHECK(count_lines(r.out) == 41);
}

TEST_CASE("boundness-map: full grid emission") {
    const RunResult r = run("boundness-map --axis1 epsilon --axis1-min 0 --axis1-max 2 "
                            "--axis1-count 4 --axis2 j0 --axis2-min 0 --axis2-max 2 "
                            "--axis2-count 5 --omega0-sq 1");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 1 + 4 * 5);
}

TEST_CASE("stability-map: bad axis exits with code 2") {
    const RunResult r = run("stability-map --axis1 bogus --axis1-min 0 --axis1-max 1 "
                            "--axis1-count 4 --axis2 j0 --axis2-min 0 --axis2-max 1 "
                            "--axis2-count 4");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("axis1") != std::string::npos);
}

TEST_CASE("render: deterministic SVG from a map file") {
    const fs::path csv = work_dir() / "map.csv";
    const RunResult map = run("stability-map --axis1 epsilon --axis1-min 0 --axis1-max 0.5 "
                              "--axis1-count 3 --axis2 omega0_sq --axis2-min 0.5 "
                              "--axis2-max 1.5 --axis2-count 3 -o " + csv.string());
    REQUIRE(map.exit_code == 0);

    const fs::path svg1 = work_dir() / "a.svg";
    const fs::path svg2 = work_dir() / "b.svg";
    CHECK(run("render -i " + csv.string() + " -o " + svg1.string()).exit_code == 0);
    CHECK(run("render -i " + csv.string() + " -o " + svg2.string()).exit_code == 0);
    const std::string bytes = slurp(svg1);
    CHECK(bytes == slurp(svg2));
    CHECK(bytes.find("<svg") != std::string::npos);

    // missing input is an I/O error
    CHECK(run("render -i " + (work_dir() / "missing.csv").string()).exit_code == 3);

    // malformed input is rejected
    const fs::path bad = work_dir() / "bad.csv";
    std::ofstream(bad) << "a,b,class\n1,2,odd\n";
    CHECK(run("render -i " + bad.string()).exit_code == 2);
}

TEST_CASE("config file supplies defaults, flags win") {
    const fs::path conf = work_dir() / "dyn.toml";
    std::ofstream(conf) << "[dynamics]\n"
                        << "epsilon = 0.0\n"
                        << "j0 = 0.3\n"
                        << "omega0-sq = 1.01\n"
                        << "samples = 50\n";
    const RunResult from_conf = run("--config " + conf.string() + " dynamics");
    CHECK(from_conf.exit_code == 0);
    CHECK(count_lines(from_conf.out) == 51);

    const RunResult flag_wins = run("--config " + conf.string() + " dynamics --samples 60");
    CHECK(flag_wins.exit_code == 0);
    CHECK(count_lines(flag_wins.out) == 61);
}

TEST_CASE("selftest passes on a fresh build and lists the suites") {
    const RunResult r = run("selftest");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) >= 3);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("RK4") != std::string::npos);
    CHECK(r.out.find("quadrature") != std::string::npos);
}
