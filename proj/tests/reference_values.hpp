// Generated by tests/oracle/gen_reference.py -- do not edit by hand.
// Reference values computed with mpmath at 60 significant digits.
#pragma once

namespace extremal::testing {

inline constexpr double kLogGamma1e6 = 12815504.569147611;
inline constexpr double kLogGamma1e9 = 19723265827.503716;
inline constexpr double kLogGamma0p001 = 6.907178885383853;
inline constexpr double kLogGamma2p5 = 0.2846828704729192;
inline constexpr double kRegLowerA100X100 = 0.5132987982791487;
inline constexpr double kRegUpperA10X30 = 7.121750862815577e-06;
inline constexpr double kRegLowerA1000X900 = 0.0005499022657117829;
inline constexpr double kLogRegUpperA50X120 = -29.463088537235265;
inline constexpr double kLogRegUpperA2X1em8 = -4.999999966666667e-17;
inline constexpr double kLogRegLowerA1000X900 = -7.5057699942338925;
inline constexpr double kErfc1 = 0.15729920705028513;
inline constexpr double kErfc5 = 1.537459794428035e-12;
inline constexpr double kErfcx3 = 0.17900115118138996;
inline constexpr double kErfcx20 = 0.02817434874105132;
inline constexpr double kLogRegLowerA3X1e9 = 0.0;
inline constexpr double kRegUpperA7p5X2p25 = 0.9955800161959573;
inline constexpr double kLnPA1e4L0p5 = -1936.3029753315975;
inline constexpr double kLnPA1e5L0p9 = -540.4252806833239;
inline constexpr double kLnQA1e6L1p1 = -4695.344414448531;
inline constexpr double kLnQA1e7L2 = -3068537.172387114;
inline constexpr double kLnQA1e7L1p001 = -7.149504045654252;
inline constexpr double kGinRminSurvN2R1 = 0.2706705664732254;
inline constexpr double kGinRminSurvN10R0p8 = 0.44142683498482527;
inline constexpr double kGinRmaxCdfN2R2 = 0.8917834798071075;
inline constexpr double kGinRmaxCdfN10R3p2 = 0.25474930050629907;
inline constexpr double kGinRmaxCdfN100R10scaled = 0.9060776870170381;
inline constexpr double kIndRminSurvN1L2R1 = -0.08370926812584494;
inline constexpr double kIndRmaxCdfN1L1R1 = 0.26424111765711533;
inline constexpr double kIndSurvN7L2p5X3p7 = -1.9447849494537939;
inline constexpr double kIndCdfN7L2p5X9p1 = -1.7618617391868259;
inline constexpr double kIndSurvN100L10X10 = -1.472553382306925;
inline constexpr double kHoleN50S0p3 = 0.9960692582390271;
inline constexpr double kHoleN2S1 = -0.3068528194400547;
inline constexpr double kGinJointN2R0p5R2 = 0.670689175849059;
inline constexpr double kIndJointN5L3R1R4 = 0.9612965704533344;
inline constexpr double kGinRminPdfN2R1 = 0.8120116994196761;
inline constexpr double kGinRminPdfN10R1p5 = 0.1221526085453227;
inline constexpr double kGinRmaxPdfN5R2 = 0.6645393930881298;
inline constexpr double kIndRminPdfN500L1R0p2 = 0.01568382080403223;
inline constexpr double kIndRminPdfN100A0p1R0p95 = 4.017827571675176;
inline constexpr double kIndRmaxPdfN90A1ov9R1p02 = 6.106539263310105;
inline constexpr double kIndRmaxPdfN30A0p5R1p1 = 6.4740752097198255;
inline constexpr double kGinLogSurvN2000R2p5 = -19.115546798718267;
inline constexpr double kGinLogSurvN2000R3 = -34.56960594606603;
inline constexpr double kGinLogSurvN200X50 = -732.7111782639314;

}  // namespace extremal::testing
