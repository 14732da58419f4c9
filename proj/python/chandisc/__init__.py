# Copyright 2026 The chandisc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Minimum-error discrimination of quantum channels."""

from chandisc._chandisc import (
    ChandiscError,
    gpc_perfect_entangled,
    grid_oracle,
    kraus_to_affine,
    maximize_on_sphere,
    min_error_kraus,
    min_error_probability,
    named_channel,
    pauli_closed_form,
    pauli_sacchi_form,
    pauli_to_affine,
    qubit_product_perfect,
    sampled_min_error,
    unitary_perfect,
)

__version__ = "0.1.0"

__all__ = [
    "ChandiscError",
    "gpc_perfect_entangled",
    "grid_oracle",
    "kraus_to_affine",
    "maximize_on_sphere",
    "min_error_kraus",
    "min_error_probability",
    "named_channel",
    "pauli_closed_form",
    "pauli_sacchi_form",
    "pauli_to_affine",
    "qubit_product_perfect",
    "sampled_min_error",
    "unitary_perfect",
]
