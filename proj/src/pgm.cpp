#include "alm/pgm.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "alm/errors.hpp"

namespace alm {

namespace {

// Reads the next whitespace-separated token, skipping '#' comments.
bool next_token(std::istream& in, std::string& token) {
    token.clear();
    char ch;
    while (in.get(ch)) {
        if (ch == '#') {
            std::string comment;
            std::getline(in, comment);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!token.empty()) return true;
            continue;
        }
        token.push_back(ch);
    }
    return !token.empty();
}

long long parse_value(const std::string& token, const std::filesystem::path& path) {
    try {
        size_t pos = 0;
        const long long value = std::stoll(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw ParseError("bad PGM token '" + token + "' in " + path.string());
    }
}

}  // namespace

PgmData read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open PGM file: " + path.string());

    std::string token;
    if (!next_token(in, token) || token != "P2")
        throw ParseError("expected P2 magic in " + path.string());

    PgmData data;
    if (!next_token(in, token)) throw ParseError("truncated PGM header: " + path.string());
    data.width = static_cast<int>(parse_value(token, path));
    if (!next_token(in, token)) throw ParseError("truncated PGM header: " + path.string());
    data.height = static_cast<int>(parse_value(token, path));
    if (!next_token(in, token)) throw ParseError("truncated PGM header: " + path.string());
    data.maxval = parse_value(token, path);
    if (data.width < 1 || data.height < 1 || data.maxval < 1)
        throw ParseError("bad PGM dimensions in " + path.string());

    data.values.reserve(static_cast<size_t>(data.width) * data.height);
    for (long long i = 0; i < static_cast<long long>(data.width) * data.height; ++i) {
        if (!next_token(in, token)) throw ParseError("truncated PGM pixels: " + path.string());
        const long long value = parse_value(token, path);
        if (value < 0 || value > data.maxval)
            throw ParseError("PGM pixel out of range in " + path.string());
        data.values.push_back(value);
    }
    return data;
}

void write_pgm(const std::filesystem::path& path, const PgmData& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write PGM file: " + path.string());
    out << "P2\n" << data.width << ' ' << data.height << '\n' << data.maxval << '\n';
    for (int r = 0; r < data.height; ++r) {
        for (int c = 0; c < data.width; ++c) {
            if (c) out << ' ';
            out << data.values[static_cast<size_t>(r) * data.width + c];
        }
        out << '\n';
    }
    if (!out) throw IoError("failed writing PGM file: " + path.string());
}

void write_pgm(const std::filesystem::path& path, const BinaryImage& img) {
    PgmData data;
    data.width = img.width();
    data.height = img.height();
    data.maxval = 1;
    data.values.reserve(static_cast<size_t>(img.width()) * img.height());
    for (int r = 0; r < img.height(); ++r)
        for (int c = 0; c < img.width(); ++c) data.values.push_back(img.at(r, c));
    write_pgm(path, data);
}

BinaryImage read_pgm_binary(const std::filesystem::path& path) {
    const PgmData data = read_pgm(path);
    BinaryImage img(data.width, data.height);
    for (int r = 0; r < data.height; ++r) {
        for (int c = 0; c < data.width; ++c) {
            const long long value = data.values[static_cast<size_t>(r) * data.width + c];
            if (value != 0 && value != 1)
                throw ParseError("binary PGM must hold only 0/1 pixels: " + path.string());
            img.set(r, c, value == 1);
        }
    }
    return img;
}

}  // namespace alm
