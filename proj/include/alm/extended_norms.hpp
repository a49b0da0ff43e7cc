#pragma once

#include <utility>

#include "alm/mask.hpp"
#include "alm/string_matrix.hpp"

namespace alm {

// Reads a layer as a structuring element: '1' foreground, '0' background,
// '*' don't care; anchor at the center cell.
TriValuedMask mask_from_layer(const Layer& layer);

// Hit-or-miss over a tri-valued layer. A '*' cell in the base never
// satisfies a foreground or background requirement, and the mask must lie
// fully inside the frame, as in the binary transform.
Layer layer_hit_or_miss(const Layer& base, const TriValuedMask& mask);

// '1' cells hit by the mask become '0'; '*' cells pass through unchanged.
Layer thin_layer_once(const Layer& base, const TriValuedMask& mask);
// '0' cells hit by the mask become '1'; '*' cells pass through unchanged.
Layer thicken_layer_once(const Layer& base, const TriValuedMask& mask);

// Applies every layer of the chain as a structuring element in order, one
// pass per layer. Throws ChainTooLarge when the chain is larger than the
// base. An empty chain leaves the base unchanged.
Layer chain_thin(const Layer& base, const StringMatrix& chain);
Layer chain_thicken(const Layer& base, const StringMatrix& chain);

// Extended Thinning. Equal sizes collapse to the all-'0' matrix; otherwise
// the larger operand's numeric layer is thinned by the smaller operand's
// layer chain and the full operand history is saved behind it.
StringMatrix ext_thin(const StringMatrix& a, const StringMatrix& b);

// Extended Thickening, the mirror with the all-'1' constant branch.
StringMatrix ext_thicken(const StringMatrix& a, const StringMatrix& b);

// Characterwise complement, '0' <-> '1', '*' fixed.
StringMatrix complement_sm(const StringMatrix& m);
Layer complement_layer(const Layer& layer);

// De Morgan duality of the extended operators, compared on the numeric left
// projection:
//   first  = [ L(complement(ext_thin(A^c, B^c))) == L(ext_thicken(A, B)) ]
//   second = [ L(complement(ext_thicken(A^c, B^c))) == L(ext_thin(A, B)) ]
// Requires size(a) != size(b); the equal-size branch is the constant-matrix
// case and is checked separately.
std::pair<bool, bool> check_demorgan_extended(const StringMatrix& a, const StringMatrix& b);

// Neutral operands: [0] for Extended Thinning, [1] for Extended Thickening.
// They must be strictly smaller than the other operand to act as structuring
// elements.
struct NeutralElements {
    static const StringMatrix& zero();
    static const StringMatrix& one();
};

// Total preorder on string matrices by size; the order the monotony law and
// the Max/Min selections of the extended operators live in.
struct SizeOrder {
    bool operator()(const StringMatrix& a, const StringMatrix& b) const {
        return a.size() <= b.size();
    }
};

}  // namespace alm
