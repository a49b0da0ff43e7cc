#include "alm/morphology.hpp"

#include "alm/errors.hpp"

namespace alm {

BinaryImage hit_or_miss(const BinaryImage& img, const TriValuedMask& mask) {
    const int w = img.width(), h = img.height();
    const int n = mask.size();
    const int ar = mask.anchor_row(), ac = mask.anchor_col();
    BinaryImage out(w, h, 0);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const int r0 = r - ar, c0 = c - ac;
            if (r0 < 0 || c0 < 0 || r0 + n > h || c0 + n > w) continue;
            bool hit = true;
            for (int i = 0; hit && i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    const MaskCell cell = mask.at(i, j);
                    if (cell == MaskCell::DontCare) continue;
                    const uint8_t want = (cell == MaskCell::Foreground) ? 1 : 0;
                    if (img.at(r0 + i, c0 + j) != want) {
                        hit = false;
                        break;
                    }
                }
            }
            if (hit) out.set(r, c, 1);
        }
    }
    return out;
}

BinaryImage thin_once(const BinaryImage& img, const TriValuedMask& mask) {
    const BinaryImage hits = hit_or_miss(img, mask);
    BinaryImage out = img;
    for (int r = 0; r < img.height(); ++r)
        for (int c = 0; c < img.width(); ++c)
            if (hits.at(r, c)) out.set(r, c, 0);
    return out;
}

BinaryImage thicken_once(const BinaryImage& img, const TriValuedMask& mask) {
    const BinaryImage hits = hit_or_miss(img, mask);
    BinaryImage out = img;
    for (int r = 0; r < img.height(); ++r)
        for (int c = 0; c < img.width(); ++c)
            if (hits.at(r, c)) out.set(r, c, 1);
    return out;
}

BinaryImage thin_pass(const BinaryImage& img, const MaskOctet& octet) {
    BinaryImage out = img;
    for (const TriValuedMask& mask : octet) out = thin_once(out, mask);
    return out;
}

BinaryImage thicken_pass(const BinaryImage& img, const MaskOctet& octet) {
    BinaryImage out = img;
    for (const TriValuedMask& mask : octet) out = thicken_once(out, mask);
    return out;
}

namespace {

template <typename Pass>
ConvergenceResult run_to_convergence(const BinaryImage& img, int max_passes, Pass pass) {
    if (max_passes < 1) throw Error("to_convergence: max_passes must be >= 1");
    ConvergenceResult result{img, 0, false};
    while (result.passes < max_passes) {
        BinaryImage next = pass(result.image);
        ++result.passes;
        if (next == result.image) {
            result.converged = true;
            break;
        }
        result.image = std::move(next);
    }
    return result;
}

}  // namespace

ConvergenceResult thin_to_convergence(const BinaryImage& img, const MaskOctet& octet,
                                      int max_passes) {
    return run_to_convergence(img, max_passes,
                              [&](const BinaryImage& x) { return thin_pass(x, octet); });
}

ConvergenceResult thicken_to_convergence(const BinaryImage& img, const MaskOctet& octet,
                                         int max_passes) {
    return run_to_convergence(img, max_passes,
                              [&](const BinaryImage& x) { return thicken_pass(x, octet); });
}

std::pair<bool, bool> check_duality(const BinaryImage& img, const TriValuedMask& mask) {
    const BinaryImage img_c = complement(img);
    const TriValuedMask mask_c = complement_mask(mask);
    const bool thicken_side =
        complement(thin_once(img_c, mask_c)) == thicken_once(img, mask);
    const bool thin_side =
        complement(thicken_once(img_c, mask_c)) == thin_once(img, mask);
    return {thicken_side, thin_side};
}

}  // namespace alm
