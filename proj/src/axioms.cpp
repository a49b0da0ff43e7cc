#include "alm/axioms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "alm/binary_image.hpp"
#include "alm/errors.hpp"
#include "alm/extended_norms.hpp"
#include "alm/morphology.hpp"
#include "alm/narrow_path.hpp"

namespace alm {

namespace {

constexpr size_t kMaxCounterexamples = 3;

void record(AxiomReport& report, std::vector<std::string> operands) {
    if (report.counterexamples.size() < kMaxCounterexamples)
        report.counterexamples.push_back(std::move(operands));
}

// Multiset of history layers: every layer behind the numeric one, flattened
// and sorted so concatenation order does not matter.
std::vector<std::string> history_multiset(const StringMatrix& m) {
    std::vector<std::string> out;
    const std::vector<Layer> all = layers(m);
    for (size_t k = 1; k < all.size(); ++k) out.push_back(all[k].flat());
    std::sort(out.begin(), out.end());
    return out;
}

// Sizes (a, b, c) for one of the five relative positions of c against
// a < b: c<a<b, c=a<b, a<c<b, a<b=c, a<b<c.
std::array<int, 3> monotony_sizes(Rng& rng, int situation, int lo, int hi) {
    auto distinct_sorted = [&](int k) {
        std::vector<int> vals;
        while (static_cast<int>(vals.size()) < k) {
            const int v = rng.next_int(lo, hi);
            if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
        }
        std::sort(vals.begin(), vals.end());
        return vals;
    };
    switch (situation) {
        case 0: { const auto v = distinct_sorted(3); return {v[1], v[2], v[0]}; }
        case 1: { const auto v = distinct_sorted(2); return {v[0], v[1], v[0]}; }
        case 2: { const auto v = distinct_sorted(3); return {v[0], v[2], v[1]}; }
        case 3: { const auto v = distinct_sorted(2); return {v[0], v[1], v[1]}; }
        default: { const auto v = distinct_sorted(3); return {v[0], v[1], v[2]}; }
    }
}

std::vector<AxiomReport> check_norm(const MatrixOp& op, const MatrixGen& gen, int trials,
                                    uint64_t seed, const StringMatrix& neutral) {
    if (trials < 1) throw Error("check_norm: trials must be >= 1");
    if (gen.max_size - gen.min_size < 2)
        throw Error("check_norm: monotony stratification needs at least 3 distinct sizes");

    AxiomReport comm;
    comm.law = "commutativity";
    AxiomReport mono;
    mono.law = "monotony";
    AxiomReport assoc;
    assoc.law = "associativity";
    AxiomReport neut;
    neut.law = "neutrality";

    for (int t = 0; t < trials; ++t) {
        {
            Rng rng(Rng::derive(seed, static_cast<uint64_t>(t) * 4 + 0));
            const StringMatrix a = gen.matrix(rng);
            const StringMatrix b = gen.matrix(rng);
            ++comm.trials;
            if (op(a, b) == op(b, a)) ++comm.passes;
            else record(comm, {format_string_matrix(a), format_string_matrix(b)});
        }
        {
            Rng rng(Rng::derive(seed, static_cast<uint64_t>(t) * 4 + 1));
            const auto [sa, sb, sc] = monotony_sizes(rng, t % 5, gen.min_size, gen.max_size);
            const StringMatrix a = gen.matrix(rng, sa);
            const StringMatrix b = gen.matrix(rng, sb);
            const StringMatrix c = gen.matrix(rng, sc);
            ++mono.trials;
            if (SizeOrder{}(op(a, c), op(b, c))) ++mono.passes;
            else
                record(mono, {format_string_matrix(a), format_string_matrix(b),
                              format_string_matrix(c)});
        }
        {
            Rng rng(Rng::derive(seed, static_cast<uint64_t>(t) * 4 + 2));
            const StringMatrix a = gen.matrix(rng);
            const StringMatrix b = gen.matrix(rng);
            const StringMatrix c = gen.matrix(rng);
            const StringMatrix lhs = op(a, op(b, c));
            const StringMatrix rhs = op(op(a, b), c);
            ++assoc.trials;
            if (left(lhs) == left(rhs) && history_multiset(lhs) == history_multiset(rhs))
                ++assoc.passes;
            else
                record(assoc, {format_string_matrix(a), format_string_matrix(b),
                               format_string_matrix(c)});
        }
        {
            Rng rng(Rng::derive(seed, static_cast<uint64_t>(t) * 4 + 3));
            const int size = rng.next_int(std::max(2, gen.min_size), gen.max_size);
            const StringMatrix a = gen.matrix(rng, size);
            ++neut.trials;
            if (left(op(a, neutral)) == left(a)) ++neut.passes;
            else record(neut, {format_string_matrix(a)});
        }
    }
    return {comm, mono, assoc, neut};
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string image_block(const BinaryImage& img) {
    std::ostringstream out;
    for (int r = 0; r < img.height(); ++r) {
        for (int c = 0; c < img.width(); ++c) out << (img.at(r, c) ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

std::string mask_block(const TriValuedMask& mask) {
    std::ostringstream out;
    for (const std::string& row : mask.rows()) out << row << '\n';
    return out.str();
}

}  // namespace

StringMatrix MatrixGen::matrix(Rng& rng, int size) const {
    std::vector<std::vector<std::string>> rows(static_cast<size_t>(size),
                                               std::vector<std::string>(static_cast<size_t>(size)));
    for (auto& row : rows)
        for (std::string& cell : row) cell = rng.next_bool(p_one) ? "1" : "0";
    return StringMatrix::from_cells(rows);
}

std::vector<AxiomReport> check_snorm(const MatrixOp& op, const MatrixGen& gen, int trials,
                                     uint64_t seed) {
    return check_norm(op, gen, trials, seed, NeutralElements::zero());
}

std::vector<AxiomReport> check_tnorm(const MatrixOp& op, const MatrixGen& gen, int trials,
                                     uint64_t seed) {
    return check_norm(op, gen, trials, seed, NeutralElements::one());
}

namespace {

// Pointwise lift of the scalar norms: pad both operands to the common size
// and combine cellwise, with '*' acting as the identity on either side. The
// result size is max(size(a), size(b)), matching the size arithmetic of the
// extended operators, and the 1x1 neutral elements behave exactly like the
// scalar 0 and 1.
StringMatrix cellwise_extreme(const StringMatrix& a, const StringMatrix& b, bool take_max) {
    const int n = std::max(a.size(), b.size());
    const StringMatrix pa = pad_cells(a, n);
    const StringMatrix pb = pad_cells(b, n);
    std::vector<std::vector<std::string>> rows(static_cast<size_t>(n),
                                               std::vector<std::string>(static_cast<size_t>(n)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const char x = pa.cell(r, c).front();
            const char y = pb.cell(r, c).front();
            char out = '*';
            if (x == '*') out = y;
            else if (y == '*') out = x;
            else if (take_max) out = (x == '1' || y == '1') ? '1' : '0';
            else out = (x == '0' || y == '0') ? '0' : '1';
            rows[r][c] = std::string(1, out);
        }
    }
    return StringMatrix::from_cells(rows);
}

}  // namespace

StringMatrix reference_max(const StringMatrix& a, const StringMatrix& b) {
    return cellwise_extreme(a, b, true);
}

StringMatrix reference_min(const StringMatrix& a, const StringMatrix& b) {
    return cellwise_extreme(a, b, false);
}

AxiomReport check_classical_duality(int trials, uint64_t seed, int width, int height) {
    if (trials < 1) throw Error("check_classical_duality: trials must be >= 1");
    AxiomReport report;
    report.law = "classical-duality";
    const MaskOctet& octet = MaskOctet::standard_thinning();
    for (int t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, static_cast<uint64_t>(t)));
        BinaryImage img(width, height);
        for (int r = 0; r < height; ++r)
            for (int c = 0; c < width; ++c) img.set(r, c, rng.next_bool() ? 1 : 0);
        ++report.trials;
        bool all_ok = true;
        for (const TriValuedMask& mask : octet) {
            const auto [thick_ok, thin_ok] = check_duality(img, mask);
            if (!thick_ok || !thin_ok) {
                all_ok = false;
                record(report, {image_block(img), mask_block(mask)});
                break;
            }
        }
        if (all_ok) ++report.passes;
    }
    return report;
}

std::vector<AxiomReport> check_extended_duality(int trials, uint64_t seed,
                                                const MatrixGen& gen) {
    if (trials < 1) throw Error("check_extended_duality: trials must be >= 1");
    AxiomReport unequal;
    unequal.law = "demorgan-unequal";
    AxiomReport equal_branch;
    equal_branch.law = "demorgan-equal-constant";
    for (int t = 0; t < trials; ++t) {
        {
            Rng rng(Rng::derive(seed, static_cast<uint64_t>(t) * 2));
            const int sa = gen.random_size(rng);
            int sb = gen.random_size(rng);
            while (sb == sa) sb = gen.random_size(rng);
            const StringMatrix a = gen.matrix(rng, sa);
            const StringMatrix b = gen.matrix(rng, sb);
            ++unequal.trials;
            const auto [thick_ok, thin_ok] = check_demorgan_extended(a, b);
            if (thick_ok && thin_ok) ++unequal.passes;
            else record(unequal, {format_string_matrix(a), format_string_matrix(b)});
        }
        {
            Rng rng(Rng::derive(seed, static_cast<uint64_t>(t) * 2 + 1));
            const int size = gen.random_size(rng);
            const StringMatrix a = gen.matrix(rng, size);
            const StringMatrix b = gen.matrix(rng, size);
            ++equal_branch.trials;
            if (complement_sm(ext_thin(a, b)) == ext_thicken(a, b)) ++equal_branch.passes;
            else record(equal_branch, {format_string_matrix(a), format_string_matrix(b)});
        }
    }
    return {unequal, equal_branch};
}

AxiomReport check_cog_associativity(int trials, uint64_t seed) {
    if (trials < 1) throw Error("check_cog_associativity: trials must be >= 1");
    AxiomReport report;
    report.law = "cog-associativity";
    for (int t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, static_cast<uint64_t>(t)));
        const double y1 = rng.next_unit();
        const double y2 = rng.next_unit();
        const double y3 = rng.next_unit();
        // Pairwise merging with the weight reset to 1 between steps.
        const double lhs = cog_merge({cog_merge({y1, 1.0}, {y2, 1.0}).y, 1.0}, {y3, 1.0}).y;
        const double rhs = cog_merge({y1, 1.0}, {cog_merge({y2, 1.0}, {y3, 1.0}).y, 1.0}).y;
        ++report.trials;
        if (std::abs(lhs - rhs) <= 1e-12) ++report.passes;
        else
            record(report, {format_double(y1), format_double(y2), format_double(y3),
                            format_double(lhs), format_double(rhs)});
    }
    return report;
}

void write_reports_text(std::ostream& out, const std::vector<AxiomReport>& reports) {
    for (const AxiomReport& report : reports) {
        out << "law=" << report.law << " trials=" << report.trials
            << " passes=" << report.passes << '\n';
        for (size_t i = 0; i < report.counterexamples.size(); ++i) {
            out << "counterexample " << (i + 1) << ":\n";
            for (const std::string& operand : report.counterexamples[i]) {
                out << operand;
                if (operand.empty() || operand.back() != '\n') out << '\n';
                out << '\n';
            }
        }
    }
}

void write_reports_json(std::ostream& out, const std::vector<AxiomReport>& reports) {
    nlohmann::json doc = nlohmann::json::array();
    for (const AxiomReport& report : reports) {
        nlohmann::json entry;
        entry["law"] = report.law;
        entry["trials"] = report.trials;
        entry["passes"] = report.passes;
        entry["counterexamples"] = nlohmann::json::array();
        for (const auto& operands : report.counterexamples)
            entry["counterexamples"].push_back({{"operands", operands}});
        doc.push_back(std::move(entry));
    }
    out << doc.dump(2) << '\n';
}

}  // namespace alm
