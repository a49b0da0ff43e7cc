#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "alm/dataset.hpp"
#include "alm/narrow_path.hpp"
#include "alm/pgm.hpp"

using namespace alm;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    static int counter = 0;
    const fs::path dir =
        fs::temp_directory_path() / ("alm_cli_test_" + std::to_string(counter++));
    fs::create_directories(dir);
    return dir;
}

int run_cli(const std::string& args) {
    const std::string command = std::string(ALM_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("gen writes deterministic CSVs") {
    const fs::path dir = temp_dir();
    const std::string a = (dir / "a.csv").string();
    const std::string b = (dir / "b.csv").string();
    REQUIRE(run_cli("gen --shape chained --n 120 --seed 7 --out " + a) == 0);
    REQUIRE(run_cli("gen --shape chained --n 120 --seed 7 --out " + b) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(read_dataset_csv(a).size() == 120);
}

TEST_CASE("gen circle points satisfy the circle equation") {
    const fs::path dir = temp_dir();
    const std::string out = (dir / "circle.csv").string();
    REQUIRE(run_cli("gen --shape circle --n 400 --noise 0 --seed 3 --out " + out) == 0);
    const Dataset d = read_dataset_csv(out);
    REQUIRE(d.size() == 400);
    for (const Sample& s : d)
        CHECK(std::abs(s.inputs[0] * s.inputs[0] + s.output * s.output - 1.0) <= 1e-9);
}

TEST_CASE("gen rejects unknown shapes") {
    CHECK(run_cli("gen --shape blob --out /tmp/x.csv") == 2);
}

TEST_CASE("pipeline emits artifacts and a summary") {
    const fs::path dir = temp_dir();
    const std::string data = (dir / "circle.csv").string();
    REQUIRE(run_cli("gen --shape circle --n 400 --noise 0 --seed 3 --out " + data) == 0);

    SUBCASE("ids + cog: one delegate per nonempty column") {
        const fs::path out = dir / "cog";
        REQUIRE(run_cli("pipeline --data " + data + " --out-dir " + out.string() +
                        " --diffusion ids --extraction cog") == 0);
        CHECK(fs::exists(out / "plane_raw_x1.pgm"));
        CHECK(fs::exists(out / "plane_diffused_x1.pgm"));
        CHECK(fs::exists(out / "overlay_x1.pgm"));
        CHECK(fs::exists(out / "summary.txt"));
        const std::vector<PathCsvRow> rows = read_path_csv(out / "path_x1.csv");
        CHECK_FALSE(rows.empty());
        for (const PathCsvRow& row : rows) CHECK(row.branch == 0);
        // the PGMs parse back
        CHECK(read_pgm(out / "plane_diffused_x1.pgm").maxval >= 1);
    }
    SUBCASE("thicken + thin: interior columns split into two branches") {
        const fs::path out = dir / "thin";
        REQUIRE(run_cli("pipeline --data " + data + " --out-dir " + out.string() +
                        " --diffusion thicken --extraction thin") == 0);
        const std::vector<PathCsvRow> rows = read_path_csv(out / "path_x1.csv");
        int second_branches = 0;
        for (const PathCsvRow& row : rows) second_branches += row.branch == 1;
        CHECK(second_branches > 20);
        const std::string summary = slurp(out / "summary.txt");
        CHECK(summary.find("delegates=2") != std::string::npos);
    }
    SUBCASE("repeated runs are byte-identical") {
        const fs::path out1 = dir / "rep1";
        const fs::path out2 = dir / "rep2";
        REQUIRE(run_cli("pipeline --data " + data + " --out-dir " + out1.string()) == 0);
        REQUIRE(run_cli("pipeline --data " + data + " --out-dir " + out2.string()) == 0);
        CHECK(slurp(out1 / "path_x1.csv") == slurp(out2 / "path_x1.csv"));
        CHECK(slurp(out1 / "plane_diffused_x1.pgm") == slurp(out2 / "plane_diffused_x1.pgm"));
        CHECK(slurp(out1 / "summary.txt") == slurp(out2 / "summary.txt"));
    }
    SUBCASE("empty dataset fails cleanly") {
        const fs::path empty = dir / "empty.csv";
        {
            std::ofstream out_file(empty);
            out_file << "x1,y\n";
        }
        CHECK(run_cli("pipeline --data " + empty.string() + " --out-dir " +
                      (dir / "none").string()) == 2);
    }
    SUBCASE("missing dataset fails cleanly") {
        CHECK(run_cli("pipeline --data " + (dir / "nope.csv").string()) == 2);
    }
}

TEST_CASE("axioms subcommand exit codes") {
    const fs::path dir = temp_dir();
    CHECK(run_cli("axioms --target ext-thin --trials 60 --seed 5 --out-dir " +
                  (dir / "thin").string()) == 0);
    CHECK(run_cli("axioms --target ext-thicken --trials 60 --seed 5 --out-dir " +
                  (dir / "thicken").string()) == 0);
    CHECK(run_cli("axioms --target minmax --trials 60 --seed 5 --out-dir " +
                  (dir / "minmax").string()) == 0);
    CHECK(run_cli("axioms --target cog --trials 100 --seed 5 --out-dir " +
                  (dir / "cog").string()) == 0);
    CHECK(run_cli("axioms --target duality --trials 50 --seed 5 --out-dir " +
                  (dir / "duality").string()) == 0);
    CHECK(run_cli("axioms --target duality-extended --trials 60 --seed 5 --out-dir " +
                  (dir / "ext").string()) == 0);
    CHECK(run_cli("axioms --target bogus") == 2);

    CHECK(fs::exists(dir / "thin" / "report.txt"));
    CHECK(fs::exists(dir / "thin" / "report.json"));
    const std::string report = slurp(dir / "thin" / "report.txt");
    CHECK(report.find("law=commutativity trials=60 passes=60") != std::string::npos);
}

TEST_CASE("render projects a dataset, optionally burning a path") {
    const fs::path dir = temp_dir();
    const std::string data = (dir / "sine.csv").string();
    REQUIRE(run_cli("gen --shape function --fn sine --n 200 --seed 2 --out " + data) == 0);
    REQUIRE(run_cli("render --data " + data + " --nx 32 --ny 32 --out " +
                    (dir / "plain.pgm").string()) == 0);
    CHECK(read_pgm(dir / "plain.pgm").width == 32);

    const fs::path pipe = dir / "pipe";
    REQUIRE(run_cli("pipeline --data " + data + " --out-dir " + pipe.string()) == 0);
    REQUIRE(run_cli("render --data " + data + " --path " + (pipe / "path_x1.csv").string() +
                    " --out " + (dir / "overlay.pgm").string()) == 0);
    const PgmData overlay = read_pgm(dir / "overlay.pgm");
    // burned delegates sit at the file's maxval
    CHECK(std::count(overlay.values.begin(), overlay.values.end(), overlay.maxval) > 0);
}

TEST_CASE("config file values apply under flag precedence") {
    const fs::path dir = temp_dir();
    const fs::path config = dir / "run.cfg";
    {
        std::ofstream out(config);
        out << "[gen]\nshape=circle\nn=7\nseed=11\nout=" << (dir / "from_config.csv").string()
            << "\n";
    }
    REQUIRE(run_cli("--config " + config.string() + " gen") == 0);
    CHECK(read_dataset_csv(dir / "from_config.csv").size() == 7);

    // flags beat the config file
    REQUIRE(run_cli("--config " + config.string() + " gen --n 9 --out " +
                    (dir / "flag_wins.csv").string()) == 0);
    CHECK(read_dataset_csv(dir / "flag_wins.csv").size() == 9);
}
