#pragma once

namespace renyi::tol {

inline constexpr double kHermitian = 1e-10;
inline constexpr double kPsd = 1e-10;
inline constexpr double kReconstruction = 1e-9;
// Applied to violations normalized by 1 + |rhs|.
inline constexpr double kChain = 1e-8;
inline constexpr double kEquality = 1e-7;
// Eigenvalues / probabilities at or below this count as structural zeros.
inline constexpr double kZero = 1e-12;
inline constexpr double kTrace = 1e-10;
inline constexpr double kProbabilityClip = 1e-12;
inline constexpr double kBetaOne = 1e-9;
inline constexpr double kOptimizer = 1e-4;

inline constexpr double kJacobiOffDiagonal = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

}  // namespace renyi::tol
