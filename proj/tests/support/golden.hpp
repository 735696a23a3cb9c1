// Copyright 2026 The thermorank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>

// Published indicator tables, transcribed at their printed precision.
namespace golden {

struct CrispRow {
  double r, u, q, x, s;
};

// Single-criterion panel, w = 0.7, ten decision makers; last row is the mean.
inline constexpr std::array<CrispRow, 11> kExample1A1 = {{
    {.50, .350, 1.0, .350, .000},
    {.45, .315, 0.9, .284, .032},
    {.40, .280, 0.8, .224, .056},
    {.60, .420, 0.8, .336, .084},
    {.45, .315, 0.9, .284, .032},
    {.50, .350, 1.0, .350, .000},
    {.50, .350, 1.0, .350, .000},
    {.50, .350, 1.0, .350, .000},
    {.55, .385, 0.9, .347, .039},
    {.55, .385, 0.9, .347, .039},
    {.50, .350, .92, .322, .028},
}};

inline constexpr std::array<CrispRow, 11> kExample1A2 = {{
    {.2, .14, .4, .056, .084},
    {.7, .49, .6, .294, .196},
    {.3, .21, .6, .126, .084},
    {.8, .56, .4, .224, .336},
    {.1, .07, .2, .014, .056},
    {.4, .28, .8, .224, .056},
    {.7, .49, .6, .294, .196},
    {.8, .56, .4, .224, .336},
    {.3, .21, .6, .126, .084},
    {.7, .49, .6, .294, .196},
    {.5, .35, .52, .188, .162},
}};

using Trip = std::array<double, 3>;

struct FuzzyRow {
  Trip r, u, q, x, s;
};

// Five decision makers, w = (0.7, 0.8, 0.9); last row is the mean.
inline constexpr std::array<FuzzyRow, 6> kExample2A1 = {{
    {{.3, .4, .5}, {.21, .32, .45}, {.75, .80, .83}, {.16, .26, .38}, {.05, .06, .08}},
    {{.3, .4, .5}, {.21, .32, .45}, {.75, .80, .83}, {.16, .26, .38}, {.05, .06, .08}},
    {{.4, .5, .6}, {.28, .40, .54}, {1, 1, 1}, {.28, .40, .54}, {0, 0, 0}},
    {{.5, .6, .7}, {.35, .48, .63}, {.75, .80, .83}, {.26, .38, .53}, {.09, .10, .11}},
    {{.5, .6, .7}, {.35, .48, .63}, {.75, .80, .83}, {.26, .38, .53}, {.09, .10, .11}},
    {{.40, .50, .60}, {.28, .40, .54}, {.80, .84, .87}, {.22, .34, .47}, {.06, .06, .07}},
}};

inline constexpr std::array<FuzzyRow, 6> kExample2A2 = {{
    {{.1, .2, .3}, {.07, .16, .27}, {.25, .40, .50}, {.02, .06, .14}, {.05, .10, .14}},
    {{.2, .3, .4}, {.14, .24, .36}, {.50, .60, .67}, {.07, .14, .24}, {.07, .10, .12}},
    {{.3, .4, .5}, {.21, .32, .45}, {.75, .80, .83}, {.16, .26, .38}, {.05, .06, .08}},
    {{.7, .8, .9}, {.49, .64, .81}, {.25, .40, .50}, {.12, .26, .41}, {.37, .38, .41}},
    {{.7, .8, .9}, {.49, .64, .81}, {.25, .40, .50}, {.12, .26, .41}, {.37, .38, .41}},
    {{.40, .50, .60}, {.28, .40, .54}, {.40, .52, .60}, {.10, .20, .31}, {.18, .20, .23}},
}};

// Candidate selection panel, 17 alternatives.
inline constexpr std::array<double, 17> kCase1U = {
    .860, .789, .934, .790, .791, .873, .788, .836, .964,
    .811, .690, .673, .831, .849, .768, .966, .846};
inline constexpr std::array<double, 17> kCase1X = {
    .831, .771, .910, .768, .749, .860, .770, .802, .946,
    .793, .672, .632, .813, .838, .748, .950, .826};
inline constexpr std::array<double, 17> kCase1S = {
    .028, .018, .024, .021, .042, .014, .018, .034, .018,
    .018, .018, .041, .017, .011, .020, .017, .020};
inline constexpr std::array<int, 17> kCase1RankU = {
    5, 13, 3, 12, 11, 4, 14, 8, 2, 10, 16, 17, 9, 6, 15, 1, 7};
inline constexpr std::array<int, 17> kCase1RankX = {
    6, 11, 3, 13, 14, 4, 12, 9, 2, 10, 16, 17, 8, 5, 15, 1, 7};
inline constexpr std::array<int, 17> kCase1Reference = {
    5, 14, 3, 12, 11, 4, 13, 8, 2, 10, 16, 17, 9, 6, 15, 1, 7};

// Fuzzy human-resource panel, three alternatives.
inline constexpr std::array<double, 3> kCase2U = {.685, .825, .761};
inline constexpr std::array<double, 3> kCase2X = {.620, .803, .683};
inline constexpr std::array<double, 3> kCase2S = {.065, .023, .077};
inline constexpr std::array<int, 3> kCase2Reference = {3, 1, 2};

// Same panel after DM1 rates A2 VP on C1 and C2.
inline constexpr std::array<double, 3> kCase2ModifiedU = {.685, .717, .761};
inline constexpr std::array<double, 3> kCase2ModifiedX = {.620, .591, .683};
inline constexpr std::array<double, 3> kCase2ModifiedS = {.065, .126, .077};
inline constexpr std::array<int, 3> kCase2ModifiedRankU = {3, 2, 1};
inline constexpr std::array<int, 3> kCase2ModifiedRankX = {2, 3, 1};

// Printed values can sit exactly on a rounding boundary (0.2835 -> 0.284);
// this absorbs the binary representation error of such ties.
inline constexpr double kTieSlack = 1e-9;

inline bool within(double got, double want, double tolerance) {
  const double d = got - want;
  return (d < 0 ? -d : d) <= tolerance + kTieSlack;
}

}  // namespace golden
