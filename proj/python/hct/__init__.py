# Copyright 2026 The hct Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Scale-parameterized hypercomplex rings H_t and hyperbolic subrings D_t.

The ring H_t multiplies pairs of complex numbers by

    (a1, b1) * (a2, b2) = (a1 a2 + t b1 conj(b2), a1 b2 + b1 conj(a2)),

so t = -1 gives the quaternions and t = +1 the split-quaternions.  The
bindings expose arithmetic, the 2x2 matrix realization, spectral analysis,
multiplication-operator predicates, free moments, and the hyperbolic
subring D_t with its exponential, polar decomposition, unit sets, and the
M2(R) action.
"""

from ._hct import *  # noqa: F401,F403
from ._hct import __version__  # noqa: F401
