#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "alm/rng.hpp"
#include "alm/string_matrix.hpp"

namespace alm {

// Outcome of one empirically checked law. Counterexamples hold the operand
// tuples that violated the law, serialized in the string-matrix text format
// (or plain numbers for scalar operators), capped at a small count.
struct AxiomReport {
    std::string law;
    int trials = 0;
    int passes = 0;
    std::vector<std::vector<std::string>> counterexamples;

    bool perfect() const { return passes == trials; }
};

// Draws depth-1 operands over {'0','1'}; padding is what introduces '*'.
struct MatrixGen {
    int min_size = 1;
    int max_size = 9;
    double p_one = 0.5;

    int random_size(Rng& rng) const { return rng.next_int(min_size, max_size); }
    StringMatrix matrix(Rng& rng, int size) const;
    StringMatrix matrix(Rng& rng) const { return matrix(rng, random_size(rng)); }
};

using MatrixOp = std::function<StringMatrix(const StringMatrix&, const StringMatrix&)>;

// Checks the four S-norm laws of a string-matrix operator against the given
// neutral element. Commutativity compares full results cell-exactly.
// Monotony is checked at the size level, stratified over the five relative
// positions of size(C) against size(A) < size(B). Associativity compares the
// numeric left projections plus the canonical multisets of history layers.
// Neutrality compares left projections; the non-neutral operand is drawn
// with size >= 2 because the neutral element must be strictly smaller to act
// as a structuring element.
// Trials are seeded independently per (seed, trial, law), so reports are
// reproducible and trials may run in any order.
std::vector<AxiomReport> check_snorm(const MatrixOp& op, const MatrixGen& gen, int trials,
                                     uint64_t seed);
// Same protocol with the neutral element [1].
std::vector<AxiomReport> check_tnorm(const MatrixOp& op, const MatrixGen& gen, int trials,
                                     uint64_t seed);

// Reference norms: the scalar max/min lifted pointwise over padded operands,
// with '*' as the identity character. Result size is the larger operand's
// size; the 1x1 constants [0] and [1] are their exact neutral elements.
StringMatrix reference_max(const StringMatrix& a, const StringMatrix& b);
StringMatrix reference_min(const StringMatrix& a, const StringMatrix& b);

// Classical duality over random images: each trial draws one random image
// and checks check_duality against every mask of the standard thinning
// octet.
AxiomReport check_classical_duality(int trials, uint64_t seed, int width = 16, int height = 16);

// Extended duality: one report for random unequal-size pairs (both De Morgan
// directions on the left projection), one for the equal-size constant
// branch.
std::vector<AxiomReport> check_extended_duality(int trials, uint64_t seed,
                                                const MatrixGen& gen = {});

// Center-of-gravity pairwise merging with weights reset between merges, the
// paper's reading of repeated COG application. Passes count associative
// triples; the law is expected to fail.
AxiomReport check_cog_associativity(int trials, uint64_t seed);

void write_reports_text(std::ostream& out, const std::vector<AxiomReport>& reports);
void write_reports_json(std::ostream& out, const std::vector<AxiomReport>& reports);

}  // namespace alm
