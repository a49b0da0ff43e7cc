#include "alm/synthetic.hpp"

#include <cmath>

#include "alm/errors.hpp"
#include "alm/rng.hpp"

namespace alm {

namespace {

constexpr double kPi = 3.14159265358979323846;

double evaluate_function(const std::string& name, double x) {
    if (name == "sine") return std::sin(x);
    if (name == "line") return x;
    if (name == "quadratic") return x * x;
    if (name == "constant") return 1.0;
    throw Error("unknown function '" + name + "' (expected sine|line|quadratic|constant)");
}

}  // namespace

Shape parse_shape(const std::string& name) {
    if (name == "circle") return Shape::Circle;
    if (name == "chained") return Shape::Chained;
    if (name == "halfmoon-set") return Shape::HalfmoonSet;
    if (name == "function") return Shape::Function;
    throw Error("unknown shape '" + name + "' (expected circle|chained|halfmoon-set|function)");
}

std::string shape_name(Shape shape) {
    switch (shape) {
        case Shape::Circle: return "circle";
        case Shape::Chained: return "chained";
        case Shape::HalfmoonSet: return "halfmoon-set";
        case Shape::Function: return "function";
    }
    return "?";
}

Dataset generate_shape(Shape shape, int n, double noise, uint64_t seed,
                       const ShapeParams& params) {
    if (n < 1) throw Error("generate_shape: n must be >= 1");
    if (noise < 0.0) throw Error("generate_shape: noise must be >= 0");
    Rng rng(Rng::derive(seed, 0));
    Dataset dataset(1);

    auto add_point = [&](double x, double y) {
        if (noise > 0.0) {
            x += noise * rng.next_gauss();
            y += noise * rng.next_gauss();
        }
        dataset.add({x}, y);
    };

    switch (shape) {
        case Shape::Circle: {
            for (int i = 0; i < n; ++i) {
                const double theta = 2.0 * kPi * (i + rng.next_unit()) / n;
                add_point(params.center_x + params.radius * std::cos(theta),
                          params.center_y + params.radius * std::sin(theta));
            }
            break;
        }
        case Shape::Chained: {
            // Four unit circles with adjacent centers 2 apart, plus a
            // separated upper half circle to the right.
            const int parts = 5;
            for (int i = 0; i < n; ++i) {
                const int part = i % parts;
                const int j = i / parts;
                const int m = n / parts + (part < n % parts ? 1 : 0);
                const double u = (j + rng.next_unit()) / std::max(m, 1);
                if (part < 4) {
                    const double theta = 2.0 * kPi * u;
                    add_point(2.0 * part + std::cos(theta), std::sin(theta));
                } else {
                    const double theta = kPi * u;
                    add_point(9.0 + std::cos(theta), std::sin(theta));
                }
            }
            break;
        }
        case Shape::HalfmoonSet: {
            for (int i = 0; i < n; ++i) {
                const int part = i % 2;
                const int j = i / 2;
                const int m = n / 2 + (part < n % 2 ? 1 : 0);
                const double t = kPi * (j + rng.next_unit()) / std::max(m, 1);
                if (part == 0) add_point(std::cos(t), std::sin(t));
                else add_point(1.0 - std::cos(t), 0.5 - std::sin(t));
            }
            break;
        }
        case Shape::Function: {
            if (!(params.x_hi > params.x_lo))
                throw Error("generate_shape: x_hi must exceed x_lo");
            for (int i = 0; i < n; ++i) {
                const double x =
                    params.x_lo + (params.x_hi - params.x_lo) * (i + rng.next_unit()) / n;
                const double y = evaluate_function(params.function, x);
                // noise on y only, so the samples stay single-valued
                dataset.add({x}, y + (noise > 0.0 ? noise * rng.next_gauss() : 0.0));
            }
            break;
        }
    }
    return dataset;
}

}  // namespace alm
