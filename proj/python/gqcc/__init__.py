# Copyright 2026 The gqcc Authors
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

"""Grandfather quantum convolutional codes: algebra, decoding and simulation."""

from gqcc._core import (
    Code,
    CodeSpec,
    LaurentPoly,
    ParseError,
    PauliElement,
    build_code,
    estimate_logical_rate,
    format_codefile,
    is_passively_corrected,
    parse_codefile,
    symplectic_product,
    syndrome_table,
)

__all__ = [
    "Code",
    "CodeSpec",
    "LaurentPoly",
    "ParseError",
    "PauliElement",
    "build_code",
    "estimate_logical_rate",
    "format_codefile",
    "is_passively_corrected",
    "parse_codefile",
    "symplectic_product",
    "syndrome_table",
]
