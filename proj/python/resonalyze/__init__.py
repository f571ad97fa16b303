# Copyright 2026 The Resonalyze Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact resonance classification for periodically forced oscillators."""

from ._core import (
    AccuracyFailure,
    Forcing,
    InvalidArgument,
    InvalidState,
    NoExactRepresentation,
    NotApplicable,
    PoleProximity,
    ScaledReal,
    cancellation_step,
    classify,
    laplace,
    project,
    rect_abs,
    rect_half,
    repro,
    run,
    sinusoid,
    solve,
    step_symmetric,
    triangle,
)

__all__ = [
    "AccuracyFailure",
    "Forcing",
    "InvalidArgument",
    "InvalidState",
    "NoExactRepresentation",
    "NotApplicable",
    "PoleProximity",
    "ScaledReal",
    "cancellation_step",
    "classify",
    "laplace",
    "project",
    "rect_abs",
    "rect_half",
    "repro",
    "run",
    "sinusoid",
    "solve",
    "step_symmetric",
    "triangle",
]
__version__ = "0.1.0"
