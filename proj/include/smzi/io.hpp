// Copyright 2026 The smzi Authors
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

#include <string>

#include "smzi/decompose_clements.hpp"
#include "smzi/decompose_reck.hpp"
#include "smzi/fldzhyan.hpp"
#include "smzi/mesh.hpp"

namespace smzi::io {

// All files are UTF-8 JSON (or CSV for sweep reports), newline-terminated,
// with floats printed at 17 significant digits so doubles round-trip exactly.

/// {"m": int, "re": [[...]], "im": [[...]]}
std::string matrix_to_json(const ComplexMat& mat);
ComplexMat matrix_from_json(const std::string& text);

/// Phase tables, dispatched on the "scheme" tag:
///   reck-smzi / clements-smzi:  {"scheme", "m", "global_phase",
///       "smzi": [{"j","k","theta1","theta2"}], "phi": [{"j","phi"}],
///       "zeta": [{"j","zeta"}]}
///   clements-amzi: {"scheme", "m", "cells": [{"j","k","theta","phi"}],
///       "diag": [...]}
///   fldzhyan-full / fldzhyan-compact: the alternating-circuit schema.
/// Mesh files: {"m", "layout", "columns": [[elements]]} with elements
///   {"type":"smzi","top_mode",..} | {"type":"phase","mode","phi"} |
///   {"type":"bare","mode"}.
std::string reck_to_json(const ReckDecomposition& d);
std::string clements_to_json(const ClementsDecomposition& d);
std::string amzi_to_json(const AmziDecomposition& d);
std::string mesh_to_json(const MeshCircuit& c);
std::string alternating_to_json(const AlternatingCircuit& c);

struct TableFile {
    enum class Kind { Reck, Clements, Amzi, Mesh, Alternating };

    Kind kind = Kind::Mesh;
    ReckDecomposition reck;
    ClementsDecomposition clements;
    AmziDecomposition amzi;
    MeshCircuit mesh;
    AlternatingCircuit alternating;
};

/// Parse any of the table/mesh/alternating schemas above.
TableFile table_from_json(const std::string& text);

ReckDecomposition reck_from_json(const std::string& text);
ClementsDecomposition clements_from_json(const std::string& text);
AmziDecomposition amzi_from_json(const std::string& text);
MeshCircuit mesh_from_json(const std::string& text);
AlternatingCircuit alternating_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// 17-significant-digit formatting used for every float in every file.
std::string format_double(double x);

} // namespace smzi::io
