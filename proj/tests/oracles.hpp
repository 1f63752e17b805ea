#pragma once

// Reference values computed offline with mpmath (50 digits) and sympy,
// rounded to double. Kept independent of the library code paths.
namespace oracle {

inline constexpr double kMMax3 = 0.19245008972987525;  // 1/(3 sqrt 3)
inline constexpr double kMMax4 = 0.125;

// Schwarzschild-de Sitter, n = 3, m = 0.1
inline constexpr double kSdsInner = 0.20914884844131658;
inline constexpr double kSdsOuter = 0.87888506624997283;
inline constexpr double kSdsUMax = 0.59470126365296626;
inline constexpr double kSdsGradOuter = 0.74942499856800708;
inline constexpr double kSdsGradInner = 2.0769186253272031;
inline constexpr double kKPlus01 = 1.2601705164785538;
inline constexpr double kKMinus01 = 3.4923729816373391;
inline constexpr double kSdsDeficitOuter = -0.20796823548822254;
inline constexpr double kSdsBghOuter = 4.2861359881122957;

inline constexpr double kKPlusNearMax = 1.7029194229252689;   // m = 0.999 m_max
inline constexpr double kKMinusNearMax = 1.7625948770325776;  // m = 0.999 m_max
inline constexpr double kKMinusTiny = 250037.508435609;       // m = 1e-6

// SdS n = 3 horizon radii at m = 0.05
inline constexpr double kSdsInner005 = 0.10103125788101082;
inline constexpr double kSdsOuter005 = 0.94564927392359144;

// Hyperbolic Kottler n = 3 horizon radii
inline constexpr double kHypHorizonMinus01 = 0.87888506624997283;  // m = -0.1
inline constexpr double kHypHorizon03 = 1.2211966861810775;        // m = 0.3

// Schwarzschild-AdS n = 3, m = 1: u^2 - 1 - |Du|^2
inline constexpr double kSadsDeficit100 = -0.04000001;
inline constexpr double kSadsDeficit200 = -0.020000000625;
inline constexpr double kSadsDeficit400 = -0.0100000000390625;
inline constexpr double kSadsDeficit1000 = -0.004000000001;

// W = 1 - r^2 - 0.01 r^3, u = sqrt(W), n = 3, Lambda > 0, r = 0.5
inline constexpr double kPerturbedTensorRadial = 0.02595910244981517;
inline constexpr double kPerturbedTensorTangential = 0.01730606829987678;
inline constexpr double kPerturbedLaplace = -0.02595910244981517;
inline constexpr double kPerturbedScalar = 0.04;

}  // namespace oracle
