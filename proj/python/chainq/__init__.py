# Copyright 2026 The chainq Authors
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

"""Chain-local QAOA encodings, qubit-order annealing and simulation."""

from ._core import (
    Edge,
    InvalidInstance,
    SizeLimitError,
    WeightedGraph,
    anneal,
    complete_graph,
    encoding_cost,
    max_cut,
    qaoa_distribution,
    random_instance,
    success_probability,
    total_variation,
    transpile,
)

__all__ = [
    "Edge",
    "InvalidInstance",
    "SizeLimitError",
    "WeightedGraph",
    "anneal",
    "complete_graph",
    "encoding_cost",
    "max_cut",
    "qaoa_distribution",
    "random_instance",
    "success_probability",
    "total_variation",
    "transpile",
]
