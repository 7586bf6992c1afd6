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

// Umbrella header for the hct library: scale-parameterized hypercomplex
// rings H_t and their hyperbolic subrings D_t — arithmetic, the 2x2 matrix
// realization, spectral analysis, multiplication operators, free moments,
// scaled exponentials and polar decomposition, unit-set sampling, and the
// M_2(R) action.

#pragma once

#include "hct/action.hpp"
#include "hct/core.hpp"
#include "hct/errors.hpp"
#include "hct/freeprob.hpp"
#include "hct/hyperbolic.hpp"
#include "hct/operators.hpp"
#include "hct/realization.hpp"
#include "hct/scale.hpp"
#include "hct/spectral.hpp"
#include "hct/tolerances.hpp"
