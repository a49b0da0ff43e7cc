#include "alm/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "alm/errors.hpp"

namespace alm {

Dataset::Dataset(int input_dim) : input_dim_(input_dim) {
    if (input_dim < 1) throw Error("Dataset: input_dim must be >= 1");
}

void Dataset::add(std::vector<double> inputs, double output) {
    if (static_cast<int>(inputs.size()) != input_dim_)
        throw Error("Dataset: sample has wrong input dimension");
    for (double v : inputs)
        if (!std::isfinite(v)) throw Error("Dataset: inputs must be finite");
    if (!std::isfinite(output)) throw Error("Dataset: output must be finite");
    samples_.push_back({std::move(inputs), output});
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        // trim spaces
        const size_t begin = field.find_first_not_of(" \t");
        if (begin == std::string::npos) field.clear();
        else {
            const size_t end = field.find_last_not_of(" \t");
            field = field.substr(begin, end - begin + 1);
        }
        fields.push_back(field);
    }
    return fields;
}

double parse_double(const std::string& token, const std::filesystem::path& path) {
    try {
        size_t pos = 0;
        const double value = std::stod(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw ParseError("bad CSV number '" + token + "' in " + path.string());
    }
}

}  // namespace

Dataset read_dataset_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open dataset: " + path.string());

    std::string line;
    if (!std::getline(in, line)) throw ParseError("dataset has no header row: " + path.string());
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> header = split_csv_line(line);
    if (header.size() < 2 || header.back() != "y")
        throw ParseError("dataset header must be x1..xd,y: " + path.string());
    for (size_t i = 0; i + 1 < header.size(); ++i) {
        if (header[i] != "x" + std::to_string(i + 1))
            throw ParseError("dataset header must be x1..xd,y: " + path.string());
    }

    Dataset dataset(static_cast<int>(header.size()) - 1);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw ParseError("dataset row has wrong field count: " + path.string());
        std::vector<double> inputs;
        inputs.reserve(fields.size() - 1);
        for (size_t i = 0; i + 1 < fields.size(); ++i) inputs.push_back(parse_double(fields[i], path));
        dataset.add(std::move(inputs), parse_double(fields.back(), path));
    }
    return dataset;
}

void write_dataset_csv(const std::filesystem::path& path, const Dataset& dataset) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write dataset: " + path.string());
    for (int d = 1; d <= dataset.input_dim(); ++d) out << 'x' << d << ',';
    out << "y\n";
    char buf[64];
    for (const Sample& sample : dataset) {
        for (double v : sample.inputs) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out << buf << ',';
        }
        std::snprintf(buf, sizeof(buf), "%.17g", sample.output);
        out << buf << '\n';
    }
    if (!out) throw IoError("failed writing dataset: " + path.string());
}

}  // namespace alm
