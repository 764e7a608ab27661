#pragma once

// Published Yukawa reference rows, signed (energies negative). `exact` is NaN
// where no reference value is printed.

#include <array>
#include <limits>

namespace radix::fixtures {

struct TableRow {
  double alpha;
  double lambda;
  double E_lambda;
  double delta_1;
  double E_1;
  double delta_2;
  double E_2;
  double exact;
};

inline constexpr double kNone = std::numeric_limits<double>::quiet_NaN();

inline constexpr std::array<TableRow, 14> kTable{{
    {0.1, 0.2296, -0.391790, -0.015628, -0.407058, -0.015268, -0.407058, -0.4071},
    {0.2, 0.4358, -0.305840, -0.020968, -0.326808, -0.020968, -0.326809, -0.3268},
    {0.25, 0.5327, -0.269121, -0.021796, -0.290918, -0.021798, -0.290920, -0.2909},
    {0.3, 0.6263, -0.235881, -0.021753, -0.257634, -0.021757, -0.257639, kNone},
    {0.4, 0.8052, -0.178443, -0.019918, -0.198362, -0.019933, -0.198376, kNone},
    {0.5, 0.9750, -0.131328, -0.016756, -0.148084, -0.016789, -0.148117, -0.1481},
    {0.6, 1.1377, -0.0929452, -0.0131321, -0.106077, -0.0131915, -0.106137, kNone},
    {0.7, 1.2944, -0.0622339, -0.0095107, -0.0717446, -0.0096002, -0.0718341, kNone},
    {0.8, 1.4461, -0.0383507, -0.0062364, -0.0445871, -0.0063520, -0.0447027, kNone},
    {0.9, 1.5936, -0.0206451, -0.00353503, -0.0241802, -0.0036677, -0.0243128, kNone},
    {1.0, 1.7374, -0.00861985, -0.00153843, -0.0101583, -0.00165138, -0.0102712, -0.01029},
    {1.05, 1.8081, -0.00460320, -0.00083757, -0.00544078, -0.00093748, -0.00554068, kNone},
    {1.1, 1.8780, -0.00186050, -0.00034306, -0.00220356, -0.00041866, -0.00227916, kNone},
    {1.15, 1.9473, -0.000347161, -0.000065800, -0.000412961, -0.000068335, -0.000415496, kNone},
}};

/// The alpha = 0.1 row prints delta_1 with two digits swapped; this is the
/// value consistent with its own E_lambda and E_1.
inline constexpr double kAlpha01Delta1Corrected = -0.015268;

}  // namespace radix::fixtures
