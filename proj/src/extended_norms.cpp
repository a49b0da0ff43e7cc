#include "alm/extended_norms.hpp"

#include <stdexcept>

#include "alm/errors.hpp"

namespace alm {

TriValuedMask mask_from_layer(const Layer& layer) {
    TriValuedMask mask(layer.size());
    for (int r = 0; r < layer.size(); ++r) {
        for (int c = 0; c < layer.size(); ++c) {
            switch (layer.at(r, c)) {
                case '1': mask.set(r, c, MaskCell::Foreground); break;
                case '0': mask.set(r, c, MaskCell::Background); break;
                default: mask.set(r, c, MaskCell::DontCare); break;
            }
        }
    }
    return mask;
}

Layer layer_hit_or_miss(const Layer& base, const TriValuedMask& mask) {
    const int n = base.size();
    const int m = mask.size();
    const int ar = mask.anchor_row(), ac = mask.anchor_col();
    Layer out(n, '0');
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const int r0 = r - ar, c0 = c - ac;
            if (r0 < 0 || c0 < 0 || r0 + m > n || c0 + m > n) continue;
            bool hit = true;
            for (int i = 0; hit && i < m; ++i) {
                for (int j = 0; j < m; ++j) {
                    const MaskCell cell = mask.at(i, j);
                    if (cell == MaskCell::DontCare) continue;
                    const char want = (cell == MaskCell::Foreground) ? '1' : '0';
                    if (base.at(r0 + i, c0 + j) != want) {
                        hit = false;
                        break;
                    }
                }
            }
            if (hit) out.set(r, c, '1');
        }
    }
    return out;
}

Layer thin_layer_once(const Layer& base, const TriValuedMask& mask) {
    const Layer hits = layer_hit_or_miss(base, mask);
    Layer out = base;
    for (int r = 0; r < base.size(); ++r)
        for (int c = 0; c < base.size(); ++c)
            if (hits.at(r, c) == '1' && base.at(r, c) == '1') out.set(r, c, '0');
    return out;
}

Layer thicken_layer_once(const Layer& base, const TriValuedMask& mask) {
    const Layer hits = layer_hit_or_miss(base, mask);
    Layer out = base;
    for (int r = 0; r < base.size(); ++r)
        for (int c = 0; c < base.size(); ++c)
            if (hits.at(r, c) == '1' && base.at(r, c) == '0') out.set(r, c, '1');
    return out;
}

namespace {

template <typename Step>
Layer chain_apply(const Layer& base, const StringMatrix& chain, Step step) {
    if (chain.empty()) return base;
    if (chain.size() > base.size())
        throw ChainTooLarge("chain of size " + std::to_string(chain.size()) +
                            " cannot be applied to a layer of size " +
                            std::to_string(base.size()));
    Layer out = base;
    for (const Layer& element : layers(chain)) out = step(out, mask_from_layer(element));
    return out;
}

}  // namespace

Layer chain_thin(const Layer& base, const StringMatrix& chain) {
    return chain_apply(base, chain,
                       [](const Layer& x, const TriValuedMask& m) { return thin_layer_once(x, m); });
}

Layer chain_thicken(const Layer& base, const StringMatrix& chain) {
    return chain_apply(base, chain, [](const Layer& x, const TriValuedMask& m) {
        return thicken_layer_once(x, m);
    });
}

namespace {

enum class ExtKind { Thin, Thicken };

StringMatrix ext_apply(const StringMatrix& a, const StringMatrix& b, ExtKind kind) {
    if (a.empty() || b.empty())
        throw Error("extended operators require non-empty operands");
    if (a.size() == b.size())
        return StringMatrix::constant(a.size(), kind == ExtKind::Thin ? '0' : '1');
    const StringMatrix& larger = (a.size() > b.size()) ? a : b;
    const StringMatrix& smaller = (a.size() > b.size()) ? b : a;
    const StringMatrix chain = l_prime(smaller);
    const Layer base = left(larger);
    const Layer projected =
        (kind == ExtKind::Thin) ? chain_thin(base, chain) : chain_thicken(base, chain);
    const StringMatrix history = save(l_prime(a), l_prime(b));
    return save(StringMatrix::from_layer(projected), history);
}

}  // namespace

StringMatrix ext_thin(const StringMatrix& a, const StringMatrix& b) {
    return ext_apply(a, b, ExtKind::Thin);
}

StringMatrix ext_thicken(const StringMatrix& a, const StringMatrix& b) {
    return ext_apply(a, b, ExtKind::Thicken);
}

StringMatrix complement_sm(const StringMatrix& m) {
    StringMatrix out = m;
    for (std::string& cell : out.cells_) {
        for (char& ch : cell) {
            if (ch == '0') ch = '1';
            else if (ch == '1') ch = '0';
        }
    }
    return out;
}

Layer complement_layer(const Layer& layer) {
    Layer out = layer;
    for (int r = 0; r < layer.size(); ++r) {
        for (int c = 0; c < layer.size(); ++c) {
            const char ch = layer.at(r, c);
            if (ch == '0') out.set(r, c, '1');
            else if (ch == '1') out.set(r, c, '0');
        }
    }
    return out;
}

std::pair<bool, bool> check_demorgan_extended(const StringMatrix& a, const StringMatrix& b) {
    if (a.size() == b.size())
        throw std::invalid_argument("check_demorgan_extended: operands must differ in size");
    const StringMatrix ac = complement_sm(a);
    const StringMatrix bc = complement_sm(b);
    const bool thicken_side =
        left(complement_sm(ext_thin(ac, bc))) == left(ext_thicken(a, b));
    const bool thin_side =
        left(complement_sm(ext_thicken(ac, bc))) == left(ext_thin(a, b));
    return {thicken_side, thin_side};
}

const StringMatrix& NeutralElements::zero() {
    static const StringMatrix z = StringMatrix::constant(1, '0');
    return z;
}

const StringMatrix& NeutralElements::one() {
    static const StringMatrix o = StringMatrix::constant(1, '1');
    return o;
}

}  // namespace alm
