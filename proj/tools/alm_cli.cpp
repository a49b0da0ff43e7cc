// Command-line front end: synthetic dataset generation, modeling pipeline
// runs, axiom/duality verification, and PGM rendering.
//
// Exit codes: 0 success / claims verified, 1 claim violated, 2 usage or I/O
// error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "alm/axioms.hpp"
#include "alm/data_plane.hpp"
#include "alm/dataset.hpp"
#include "alm/errors.hpp"
#include "alm/extended_norms.hpp"
#include "alm/mask.hpp"
#include "alm/model.hpp"
#include "alm/narrow_path.hpp"
#include "alm/pgm.hpp"
#include "alm/synthetic.hpp"

namespace {

namespace fs = std::filesystem;

struct GenOptions {
    std::string shape = "circle";
    int n = 400;
    double noise = 0.0;
    uint64_t seed = 1;
    std::string out = "dataset.csv";
    alm::ShapeParams params;
};

int run_gen(const GenOptions& opt) {
    const alm::Dataset dataset =
        alm::generate_shape(alm::parse_shape(opt.shape), opt.n, opt.noise, opt.seed, opt.params);
    alm::write_dataset_csv(opt.out, dataset);
    std::cout << "wrote " << dataset.size() << " samples to " << opt.out << '\n';
    return 0;
}

struct PipelineOptions {
    std::string data;
    std::string out_dir = "out";
    std::string diffusion = "ids";
    std::string extraction = "cog";
    std::string octet_file;
    double radius_units = -1.0;  // <0: use the cell radius directly
    alm::FitConfig config;
};

void write_overlay(const fs::path& path, const alm::DataPlane& plane,
                   const alm::NarrowPath& narrow_path) {
    alm::PgmData data;
    data.width = plane.nx();
    data.height = plane.ny();
    data.maxval = std::max(plane.max_cell(), 0LL) + 1;  // burn value, strictly brightest
    data.values.reserve(static_cast<size_t>(plane.nx()) * plane.ny());
    for (int iy = plane.ny() - 1; iy >= 0; --iy)
        for (int ix = 0; ix < plane.nx(); ++ix) data.values.push_back(plane.cell(ix, iy));
    for (int ix = 0; ix < narrow_path.nx(); ++ix) {
        for (const alm::Delegate& d : narrow_path.column(ix)) {
            const int iy = plane.y_bin(d.y);
            const int row = plane.ny() - 1 - iy;
            data.values[static_cast<size_t>(row) * plane.nx() + ix] = data.maxval;
        }
    }
    alm::write_pgm(path, data);
}

int run_pipeline(const PipelineOptions& opt) {
    alm::Dataset dataset = alm::read_dataset_csv(opt.data);
    alm::FitConfig config = opt.config;
    config.diffusion =
        opt.diffusion == "ids" ? alm::DiffusionMode::Ids : alm::DiffusionMode::Thicken;
    config.extraction =
        opt.extraction == "cog" ? alm::ExtractionMode::Cog : alm::ExtractionMode::Thin;
    if (!opt.octet_file.empty())
        config.octets = alm::OctetPair::from_thinning(alm::load_octet(opt.octet_file));

    fs::create_directories(opt.out_dir);
    std::ofstream summary(fs::path(opt.out_dir) / "summary.txt");
    if (!summary) throw alm::IoError("cannot write summary in " + opt.out_dir);

    for (int dim = 0; dim < dataset.input_dim(); ++dim) {
        if (opt.radius_units >= 0.0) {
            const alm::DataPlane probe = alm::project(dataset, dim, config.nx, config.ny);
            config.radius = alm::radius_to_cells(probe, opt.radius_units);
        }
        const alm::SisoStage stage = alm::run_siso(dataset, dim, config);
        const std::string tag = "x" + std::to_string(dim + 1);
        alm::write_plane_pgm(fs::path(opt.out_dir) / ("plane_raw_" + tag + ".pgm"), stage.raw);
        alm::write_plane_pgm(fs::path(opt.out_dir) / ("plane_diffused_" + tag + ".pgm"),
                             stage.diffused);
        alm::write_path_csv(fs::path(opt.out_dir) / ("path_" + tag + ".csv"), stage.path);
        write_overlay(fs::path(opt.out_dir) / ("overlay_" + tag + ".pgm"), stage.diffused,
                      stage.path);

        summary << "dim=" << tag << " confidence=" << stage.path.confidence()
                << " nonempty_columns=" << stage.path.nonempty_columns()
                << " delegates=" << stage.path.delegate_count() << '\n';
        for (int ix = 0; ix < stage.path.nx(); ++ix)
            summary << "dim=" << tag << " column=" << ix
                    << " delegates=" << stage.path.column(ix).size() << '\n';
    }
    std::cout << "pipeline artifacts written to " << opt.out_dir << '\n';
    return 0;
}

struct AxiomsOptions {
    std::string target = "ext-thin";
    int trials = 1000;
    uint64_t seed = 42;
    std::string out_dir = ".";
};

bool law_perfect(const std::vector<alm::AxiomReport>& reports, const std::string& law) {
    for (const alm::AxiomReport& r : reports)
        if (r.law == law) return r.perfect();
    return false;
}

int run_axioms(const AxiomsOptions& opt) {
    std::vector<alm::AxiomReport> reports;
    bool verified = false;
    const alm::MatrixGen gen;

    if (opt.target == "ext-thin" || opt.target == "ext-thicken") {
        reports = opt.target == "ext-thin"
                      ? alm::check_snorm(alm::ext_thin, gen, opt.trials, opt.seed)
                      : alm::check_tnorm(alm::ext_thicken, gen, opt.trials, opt.seed);
        // Associativity holds only up to the padded-mask effects recorded in
        // the report; commutativity, monotony and neutrality are the gating
        // claims.
        verified = law_perfect(reports, "commutativity") && law_perfect(reports, "monotony") &&
                   law_perfect(reports, "neutrality");
    } else if (opt.target == "minmax") {
        reports = alm::check_snorm(alm::reference_max, gen, opt.trials, opt.seed);
        const std::vector<alm::AxiomReport> tnorm =
            alm::check_tnorm(alm::reference_min, gen, opt.trials, opt.seed);
        reports.insert(reports.end(), tnorm.begin(), tnorm.end());
        verified = true;
        for (const alm::AxiomReport& r : reports) verified = verified && r.perfect();
    } else if (opt.target == "cog") {
        reports = {alm::check_cog_associativity(opt.trials, opt.seed)};
        // The claim here is NON-associativity: a counterexample must exist.
        verified = reports.front().passes < reports.front().trials;
    } else if (opt.target == "duality") {
        reports = {alm::check_classical_duality(opt.trials, opt.seed)};
        verified = reports.front().perfect();
    } else if (opt.target == "duality-extended") {
        reports = alm::check_extended_duality(opt.trials, opt.seed, gen);
        verified = true;
        for (const alm::AxiomReport& r : reports) verified = verified && r.perfect();
    } else {
        throw alm::Error("unknown axioms target '" + opt.target + "'");
    }

    fs::create_directories(opt.out_dir);
    {
        std::ofstream text(fs::path(opt.out_dir) / "report.txt");
        if (!text) throw alm::IoError("cannot write report.txt in " + opt.out_dir);
        alm::write_reports_text(text, reports);
    }
    {
        std::ofstream json(fs::path(opt.out_dir) / "report.json");
        if (!json) throw alm::IoError("cannot write report.json in " + opt.out_dir);
        alm::write_reports_json(json, reports);
    }
    alm::write_reports_text(std::cout, reports);
    std::cout << (verified ? "verified" : "VIOLATED") << ": target " << opt.target << '\n';
    return verified ? 0 : 1;
}

struct RenderOptions {
    std::string data;
    std::string out = "render.pgm";
    std::string path_csv;
    int nx = 64;
    int ny = 64;
};

int run_render(const RenderOptions& opt) {
    const alm::Dataset dataset = alm::read_dataset_csv(opt.data);
    const alm::DataPlane plane = alm::project(dataset, 0, opt.nx, opt.ny);
    if (opt.path_csv.empty()) {
        alm::write_plane_pgm(opt.out, plane);
    } else {
        alm::PgmData data;
        data.width = plane.nx();
        data.height = plane.ny();
        data.maxval = std::max(plane.max_cell(), 0LL) + 1;
        for (int iy = plane.ny() - 1; iy >= 0; --iy)
            for (int ix = 0; ix < plane.nx(); ++ix) data.values.push_back(plane.cell(ix, iy));
        for (const alm::PathCsvRow& row : alm::read_path_csv(opt.path_csv)) {
            if (row.x_index < 0 || row.x_index >= plane.nx()) continue;
            const int iy = plane.y_bin(row.y);
            const int r = plane.ny() - 1 - iy;
            data.values[static_cast<size_t>(r) * plane.nx() + row.x_index] = data.maxval;
        }
        alm::write_pgm(opt.out, data);
    }
    std::cout << "wrote " << opt.out << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Active Learning Method modeling with morphological operators"};
    app.set_config("--config", "",
                   "key=value config file, one [section] per subcommand; flags win");
    app.require_subcommand(1);

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "generate a synthetic dataset CSV");
    gen->add_option("--shape", gen_opt.shape, "circle|chained|halfmoon-set|function")
        ->check(CLI::IsMember({"circle", "chained", "halfmoon-set", "function"}));
    gen->add_option("--n", gen_opt.n, "number of samples")->check(CLI::PositiveNumber);
    gen->add_option("--noise", gen_opt.noise, "additive Gaussian noise scale");
    gen->add_option("--seed", gen_opt.seed, "RNG seed");
    gen->add_option("--out", gen_opt.out, "output CSV path");
    gen->add_option("--radius", gen_opt.params.radius, "circle radius");
    gen->add_option("--cx", gen_opt.params.center_x, "circle center x");
    gen->add_option("--cy", gen_opt.params.center_y, "circle center y");
    gen->add_option("--fn", gen_opt.params.function, "sine|line|quadratic|constant");
    gen->add_option("--x-lo", gen_opt.params.x_lo, "function domain start");
    gen->add_option("--x-hi", gen_opt.params.x_hi, "function domain end");

    PipelineOptions pipe_opt;
    CLI::App* pipeline = app.add_subcommand("pipeline", "run the modeling pipeline");
    pipeline->add_option("--data", pipe_opt.data, "dataset CSV")->required();
    pipeline->add_option("--out-dir", pipe_opt.out_dir, "artifact directory");
    pipeline->add_option("--nx", pipe_opt.config.nx, "grid columns")->check(CLI::Range(2, 4096));
    pipeline->add_option("--ny", pipe_opt.config.ny, "grid rows")->check(CLI::Range(2, 4096));
    pipeline->add_option("--diffusion", pipe_opt.diffusion, "ids|thicken")
        ->check(CLI::IsMember({"ids", "thicken"}));
    pipeline->add_option("--extraction", pipe_opt.extraction, "cog|thin")
        ->check(CLI::IsMember({"cog", "thin"}));
    pipeline->add_option("--radius", pipe_opt.config.radius, "IDS spread radius in cells")
        ->check(CLI::NonNegativeNumber);
    pipeline->add_option("--radius-units", pipe_opt.radius_units,
                         "IDS spread radius in data units (overrides --radius)");
    pipeline->add_option("--height", pipe_opt.config.height, "IDS stamp height")
        ->check(CLI::PositiveNumber);
    pipeline->add_option("--tau", pipe_opt.config.threshold, "binarization threshold")
        ->check(CLI::PositiveNumber);
    pipeline->add_option("--thicken-passes", pipe_opt.config.thicken_passes, "thickening passes")
        ->check(CLI::NonNegativeNumber);
    pipeline->add_option("--gap-threshold", pipe_opt.config.gap_threshold,
                         "run split gap; negative = structuring-element radius");
    pipeline->add_option("--max-passes", pipe_opt.config.max_passes,
                         "thinning pass cap; 0 = width+height");
    pipeline->add_option("--octets", pipe_opt.octet_file, "thinning octet file");

    AxiomsOptions ax_opt;
    CLI::App* axioms = app.add_subcommand("axioms", "verify operator laws empirically");
    axioms->add_option("--target", ax_opt.target,
                       "ext-thin|ext-thicken|minmax|cog|duality|duality-extended")
        ->check(CLI::IsMember(
            {"ext-thin", "ext-thicken", "minmax", "cog", "duality", "duality-extended"}));
    axioms->add_option("--trials", ax_opt.trials, "trial count")->check(CLI::PositiveNumber);
    axioms->add_option("--seed", ax_opt.seed, "RNG seed");
    axioms->add_option("--out-dir", ax_opt.out_dir, "report directory");

    RenderOptions render_opt;
    CLI::App* render = app.add_subcommand("render", "project a dataset to a PGM image");
    render->add_option("--data", render_opt.data, "dataset CSV")->required();
    render->add_option("--out", render_opt.out, "output PGM path");
    render->add_option("--path", render_opt.path_csv, "optional path CSV to burn in");
    render->add_option("--nx", render_opt.nx, "grid columns")->check(CLI::Range(2, 4096));
    render->add_option("--ny", render_opt.ny, "grid rows")->check(CLI::Range(2, 4096));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen(gen_opt);
        if (pipeline->parsed()) return run_pipeline(pipe_opt);
        if (axioms->parsed()) return run_axioms(ax_opt);
        if (render->parsed()) return run_render(render_opt);
    } catch (const alm::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
