// Copyright 2026 The hct Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace hct {

// All arithmetic is double precision; the thresholds below assume that.

/// An element is treated as singular when |det| <= kSingularEps * (1 + F),
/// where F = |a|^2 + |b|^2.  The relative factor keeps large elements from
/// being misclassified.
inline constexpr double kSingularEps = 1e-10;

/// b is treated as zero in the spectralization branch test when
/// |b| <= kZeroComponentEps * (1 + |a|).  The branch tag is the only thing
/// that depends on it; the spectral value itself is continuous across b = 0.
inline constexpr double kZeroComponentEps = 1e-12;

/// Absolute tolerance for operator predicates (commutator norms, |det - 1|,
/// symbol-shape tests) and for the spectral-relation comparison.
inline constexpr double kPredicateTol = 1e-10;

/// Entrywise tolerance for the realization shape check in unrealize().
inline constexpr double kRealizationShapeTol = 1e-9;

/// similarity_witness verifies its own output: the conjugated realization
/// must match the spectral form entrywise within this (scaled) tolerance,
/// otherwise the witness degrades to "absent".
inline constexpr double kWitnessVerifyTol = 1e-9;

}  // namespace hct
