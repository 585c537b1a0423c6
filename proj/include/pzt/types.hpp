#pragma once

#include <array>

namespace pzt {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

// Symmetric second-order tensors in compressed (Voigt) order:
//   (0,0)->0  (1,1)->1  (2,2)->2  (1,2)->3  (2,0)->4  (0,1)->5
using Voigt6 = std::array<double, 6>;

constexpr int voigt_index(int i, int j)
{
    constexpr int table[3][3] = {{0, 5, 4}, {5, 1, 3}, {4, 3, 2}};
    return table[i][j];
}

constexpr std::array<int, 2> voigt_pair(int p)
{
    constexpr int pairs[6][2] = {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {2, 0}, {0, 1}};
    return {pairs[p][0], pairs[p][1]};
}

// Execution policy for the data-parallel kernels (profile tabulation, schedule
// sweeps).  `parallel` uses OpenMP when compiled in; `serial` is the reference
// path the tests compare against.
enum class Exec { serial, parallel };

} // namespace pzt
