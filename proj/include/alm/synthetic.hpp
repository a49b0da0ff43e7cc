#pragma once

#include <cstdint>
#include <string>

#include "alm/dataset.hpp"

namespace alm {

// Built-in scatter shapes for exercising the pipeline. All of them are
// single-input datasets over the (x, y) plane.
enum class Shape {
    Circle,       // points on a circle; a non-function structure
    Chained,      // four unit circles in a row plus a separated upper half circle
    HalfmoonSet,  // two interleaved half moons
    Function,     // single-valued y = f(x)
};

Shape parse_shape(const std::string& name);  // throws on unknown names
std::string shape_name(Shape shape);

struct ShapeParams {
    double radius = 1.0;
    double center_x = 0.0;
    double center_y = 0.0;
    std::string function = "sine";  // sine | line | quadratic | constant
    double x_lo = 0.0;
    double x_hi = 6.283185307179586;
};

// n points, deterministic under the seed. Angles/abscissas are stratified so
// every region of the shape is covered; noise is an additive Gaussian scale.
Dataset generate_shape(Shape shape, int n, double noise, uint64_t seed,
                       const ShapeParams& params = {});

}  // namespace alm
