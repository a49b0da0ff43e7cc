#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "alm/data_plane.hpp"
#include "alm/dataset.hpp"
#include "alm/errors.hpp"
#include "alm/mask.hpp"
#include "alm/narrow_path.hpp"
#include "alm/pgm.hpp"
#include "alm/rng.hpp"

#include "oracles.hpp"

using namespace alm;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    static int counter = 0;
    const fs::path dir =
        fs::temp_directory_path() / ("alm_io_test_" + std::to_string(counter++));
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("binary PGM round-trip") {
    const fs::path dir = temp_dir();
    Rng rng(1);
    const BinaryImage img = oracles::random_image(rng, 9, 5);
    write_pgm(dir / "img.pgm", img);
    CHECK(read_pgm_binary(dir / "img.pgm") == img);

    // header of the written file
    std::ifstream in(dir / "img.pgm");
    std::string magic;
    int w, h, maxval;
    in >> magic >> w >> h >> maxval;
    CHECK(magic == "P2");
    CHECK(w == 9);
    CHECK(h == 5);
    CHECK(maxval == 1);
}

TEST_CASE("PGM reader tolerates comments and rejects junk") {
    const fs::path dir = temp_dir();
    {
        std::ofstream out(dir / "ok.pgm");
        out << "P2\n# a comment\n2 2\n3\n0 1\n2 3\n";
    }
    const PgmData data = read_pgm(dir / "ok.pgm");
    CHECK(data.width == 2);
    CHECK(data.maxval == 3);
    CHECK(data.values == std::vector<long long>{0, 1, 2, 3});

    {
        std::ofstream out(dir / "bad_magic.pgm");
        out << "P5\n2 2\n1\n0 0 0 0\n";
    }
    CHECK_THROWS_AS(read_pgm(dir / "bad_magic.pgm"), ParseError);
    {
        std::ofstream out(dir / "short.pgm");
        out << "P2\n2 2\n1\n0 0 0\n";
    }
    CHECK_THROWS_AS(read_pgm(dir / "short.pgm"), ParseError);
    {
        std::ofstream out(dir / "not01.pgm");
        out << "P2\n2 1\n5\n0 4\n";
    }
    CHECK_THROWS_AS(read_pgm_binary(dir / "not01.pgm"), ParseError);
    CHECK_THROWS_AS(read_pgm(dir / "missing.pgm"), IoError);
}

TEST_CASE("plane PGM puts the largest y on top") {
    const fs::path dir = temp_dir();
    DataPlane plane(2, 3, {0, 1}, {0, 3});
    plane.set_cell(0, 0, 1);  // bottom-left
    plane.set_cell(1, 2, 9);  // top-right
    write_plane_pgm(dir / "plane.pgm", plane);
    const PgmData data = read_pgm(dir / "plane.pgm");
    CHECK(data.maxval == 9);
    CHECK(data.values == std::vector<long long>{0, 9, 0, 0, 1, 0});
}

TEST_CASE("mask and octet files") {
    const fs::path dir = temp_dir();
    SUBCASE("octet round-trip") {
        write_octet(dir / "octet.txt", MaskOctet::standard_thinning());
        const MaskOctet loaded = load_octet(dir / "octet.txt");
        for (size_t i = 0; i < 8; ++i)
            CHECK(loaded[i] == MaskOctet::standard_thinning()[i]);
    }
    SUBCASE("block count is enforced") {
        std::ofstream out(dir / "seven.txt");
        for (int i = 0; i < 7; ++i) out << "10\n01\n\n";
        out.close();
        CHECK_THROWS_AS(load_octet(dir / "seven.txt"), ParseError);
    }
    SUBCASE("bad characters are rejected") {
        std::istringstream in("12\n01\n");
        CHECK_THROWS_AS(parse_masks(in), ParseError);
    }
    SUBCASE("non-square blocks are rejected") {
        std::istringstream in("101\n01*\n");
        CHECK_THROWS_AS(parse_masks(in), ParseError);
    }
    SUBCASE("blank lines split blocks") {
        std::istringstream in("1\n\n0\n\n*\n");
        const std::vector<TriValuedMask> masks = parse_masks(in);
        REQUIRE(masks.size() == 3);
        CHECK(masks[0].at(0, 0) == MaskCell::Foreground);
        CHECK(masks[1].at(0, 0) == MaskCell::Background);
        CHECK(masks[2].at(0, 0) == MaskCell::DontCare);
    }
}

TEST_CASE("dataset CSV") {
    const fs::path dir = temp_dir();
    SUBCASE("round-trip preserves values exactly") {
        Dataset d(2);
        d.add({0.1, -3.5}, 2.25);
        d.add({1e-9, 7.0}, -0.125);
        write_dataset_csv(dir / "d.csv", d);
        const Dataset back = read_dataset_csv(dir / "d.csv");
        REQUIRE(back.size() == 2);
        CHECK(back.input_dim() == 2);
        CHECK(back[0].inputs == d[0].inputs);
        CHECK(back[1].output == d[1].output);
    }
    SUBCASE("header must be x1..xd,y") {
        {
            std::ofstream out(dir / "badheader.csv");
            out << "a,b\n1,2\n";
        }
        CHECK_THROWS_AS(read_dataset_csv(dir / "badheader.csv"), ParseError);
        {
            std::ofstream out(dir / "gap.csv");
            out << "x1,x3,y\n1,2,3\n";
        }
        CHECK_THROWS_AS(read_dataset_csv(dir / "gap.csv"), ParseError);
    }
    SUBCASE("ragged rows and bad numbers are rejected") {
        {
            std::ofstream out(dir / "ragged.csv");
            out << "x1,y\n1\n";
        }
        CHECK_THROWS_AS(read_dataset_csv(dir / "ragged.csv"), ParseError);
        {
            std::ofstream out(dir / "nan.csv");
            out << "x1,y\nfoo,2\n";
        }
        CHECK_THROWS_AS(read_dataset_csv(dir / "nan.csv"), ParseError);
    }
    SUBCASE("header-only file parses as an empty dataset") {
        {
            std::ofstream out(dir / "empty.csv");
            out << "x1,y\n";
        }
        const Dataset d = read_dataset_csv(dir / "empty.csv");
        CHECK(d.empty());
        CHECK_THROWS_AS(project(d, 0, 4, 4), EmptyDataset);
    }
}

TEST_CASE("path CSV round-trip") {
    const fs::path dir = temp_dir();
    NarrowPath path(3, {0, 3}, {0, 10});
    path.add_delegate(0, {1.5, 0, 2.0});
    path.add_delegate(2, {8.0, 0, 1.0});
    path.add_delegate(2, {3.0, 1, 4.0});
    write_path_csv(dir / "path.csv", path);

    const std::vector<PathCsvRow> rows = read_path_csv(dir / "path.csv");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].x_index == 0);
    CHECK(rows[0].y == 1.5);
    CHECK(rows[0].x_center == 0.5);
    CHECK(rows[2].x_index == 2);
    CHECK(rows[2].branch == 1);
    CHECK(rows[2].weight == 4.0);

    {
        std::ofstream out(dir / "bad.csv");
        out << "x,y\n";
    }
    CHECK_THROWS_AS(read_path_csv(dir / "bad.csv"), ParseError);
}
