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

#include "smzi/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "smzi/errors.hpp"

namespace smzi::io {

using nlohmann::json;

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw SchemaError("cannot open file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw SchemaError("cannot open file for writing: " + path);
    }
    out << contents;
    if (!out) {
        throw SchemaError("failed writing file: " + path);
    }
}

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw SchemaError("malformed JSON");
    }
    return j;
}

double get_finite(const json& j, const char* what) {
    if (!j.is_number()) {
        throw SchemaError(std::string(what) + " must be a number");
    }
    const double x = j.get<double>();
    if (!std::isfinite(x)) {
        throw SchemaError(std::string(what) + " must be finite");
    }
    return x;
}

int get_int(const json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw SchemaError(std::string(what) + " must be an integer");
    }
    return j.get<int>();
}

const json& field(const json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) {
        throw SchemaError(std::string("missing field: ") + name);
    }
    return *it;
}

void append_real_grid(std::string& out, const ComplexMat& mat, bool imag) {
    out += "[";
    for (std::size_t r = 0; r < mat.rows(); ++r) {
        out += (r == 0) ? "\n    [" : ",\n    [";
        for (std::size_t c = 0; c < mat.cols(); ++c) {
            if (c != 0) {
                out += ", ";
            }
            const cplx z = mat.at(r, c);
            out += format_double(imag ? z.imag() : z.real());
        }
        out += "]";
    }
    out += "\n  ]";
}

} // namespace

std::string matrix_to_json(const ComplexMat& mat) {
    std::string out = "{\n  \"m\": " + std::to_string(mat.rows()) + ",\n  \"re\": ";
    append_real_grid(out, mat, false);
    out += ",\n  \"im\": ";
    append_real_grid(out, mat, true);
    out += "\n}\n";
    return out;
}

ComplexMat matrix_from_json(const std::string& text) {
    const json j = parse(text);
    const int m = get_int(field(j, "m"), "m");
    if (m < 1) {
        throw SchemaError("matrix dimension must be at least 1");
    }
    const json& re = field(j, "re");
    const json& im = field(j, "im");
    if (!re.is_array() || !im.is_array() || re.size() != static_cast<std::size_t>(m) ||
        im.size() != static_cast<std::size_t>(m)) {
        throw SchemaError("re/im must be m arrays of m numbers");
    }
    ComplexMat mat(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (std::size_t r = 0; r < static_cast<std::size_t>(m); ++r) {
        const json& rrow = re[r];
        const json& irow = im[r];
        if (!rrow.is_array() || !irow.is_array() || rrow.size() != static_cast<std::size_t>(m) ||
            irow.size() != static_cast<std::size_t>(m)) {
            throw SchemaError("re/im must be m arrays of m numbers");
        }
        for (std::size_t c = 0; c < static_cast<std::size_t>(m); ++c) {
            mat.at(r, c) = cplx{get_finite(rrow[c], "matrix entry"),
                                get_finite(irow[c], "matrix entry")};
        }
    }
    return mat;
}

namespace {

void append_smzi_table(std::string& out, const std::vector<std::vector<SmziSetting>>& smzi) {
    out += "  \"smzi\": [";
    bool first = true;
    for (std::size_t ji = 0; ji < smzi.size(); ++ji) {
        for (std::size_t ki = 0; ki < smzi[ji].size(); ++ki) {
            out += first ? "\n" : ",\n";
            first = false;
            const SmziSetting& s = smzi[ji][ki];
            out += "    {\"j\": " + std::to_string(ji + 1) + ", \"k\": " + std::to_string(ki + 1) +
                   ", \"theta1\": " + format_double(s.theta1) +
                   ", \"theta2\": " + format_double(s.theta2) + "}";
        }
    }
    out += "\n  ]";
}

void append_phase_list(std::string& out, const char* name, const char* key,
                       const std::vector<double>& values, int first_j) {
    out += "  \"";
    out += name;
    out += "\": [";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i == 0) ? "\n" : ",\n";
        out += "    {\"j\": " + std::to_string(first_j + static_cast<int>(i)) + ", \"" + key +
               "\": " + format_double(values[i]) + "}";
    }
    out += "\n  ]";
}

void read_smzi_table(const json& j, int m, std::vector<std::vector<SmziSetting>>& smzi) {
    const json& arr = field(j, "smzi");
    if (!arr.is_array()) {
        throw SchemaError("smzi must be an array");
    }
    smzi.assign(static_cast<std::size_t>(m - 1), {});
    for (int jj = 1; jj <= m - 1; ++jj) {
        smzi[static_cast<std::size_t>(jj - 1)].resize(static_cast<std::size_t>(jj));
    }
    std::vector<std::vector<bool>> seen(smzi.size());
    for (std::size_t ji = 0; ji < smzi.size(); ++ji) {
        seen[ji].assign(smzi[ji].size(), false);
    }
    for (const json& e : arr) {
        const int jj = get_int(field(e, "j"), "j");
        const int kk = get_int(field(e, "k"), "k");
        if (jj < 1 || jj > m - 1 || kk < 1 || kk > jj) {
            throw SchemaError("smzi index (j,k) out of range");
        }
        if (seen[static_cast<std::size_t>(jj - 1)][static_cast<std::size_t>(kk - 1)]) {
            throw SchemaError("duplicate smzi index");
        }
        seen[static_cast<std::size_t>(jj - 1)][static_cast<std::size_t>(kk - 1)] = true;
        smzi[static_cast<std::size_t>(jj - 1)][static_cast<std::size_t>(kk - 1)] =
            SmziSetting{get_finite(field(e, "theta1"), "theta1"),
                        get_finite(field(e, "theta2"), "theta2")};
    }
    for (const auto& row : seen) {
        for (bool s : row) {
            if (!s) {
                throw SchemaError("smzi table is missing entries");
            }
        }
    }
}

void read_phase_list(const json& j, const char* name, const char* key, int first_j, int count,
                     std::vector<double>& out) {
    const json& arr = field(j, name);
    if (!arr.is_array()) {
        throw SchemaError(std::string(name) + " must be an array");
    }
    out.assign(static_cast<std::size_t>(count), 0.0);
    std::vector<bool> seen(static_cast<std::size_t>(count), false);
    for (const json& e : arr) {
        const int jj = get_int(field(e, "j"), "j");
        if (jj < first_j || jj >= first_j + count) {
            throw SchemaError(std::string(name) + " index out of range");
        }
        if (seen[static_cast<std::size_t>(jj - first_j)]) {
            throw SchemaError(std::string("duplicate ") + name + " index");
        }
        seen[static_cast<std::size_t>(jj - first_j)] = true;
        out[static_cast<std::size_t>(jj - first_j)] = get_finite(field(e, key), key);
    }
    for (bool s : seen) {
        if (!s) {
            throw SchemaError(std::string(name) + " is missing entries");
        }
    }
}

} // namespace

std::string reck_to_json(const ReckDecomposition& d) {
    std::string out = "{\n  \"scheme\": \"reck-smzi\",\n  \"m\": " + std::to_string(d.m) + ",\n";
    append_smzi_table(out, d.smzi);
    out += ",\n";
    append_phase_list(out, "phi", "phi", d.phi_in, 1);
    out += ",\n";
    append_phase_list(out, "zeta", "zeta", d.zeta_out, 2);
    out += ",\n  \"global_phase\": " + format_double(d.global_phase) + "\n}\n";
    return out;
}

std::string clements_to_json(const ClementsDecomposition& d) {
    std::string out =
        "{\n  \"scheme\": \"clements-smzi\",\n  \"m\": " + std::to_string(d.m) + ",\n";
    append_smzi_table(out, d.smzi);
    out += ",\n";
    append_phase_list(out, "phi", "phi", d.phi_side, 1);
    out += ",\n";
    append_phase_list(out, "zeta", "zeta", d.zeta_mid, 2);
    out += ",\n  \"global_phase\": " + format_double(d.global_phase) + "\n}\n";
    return out;
}

std::string amzi_to_json(const AmziDecomposition& d) {
    std::string out =
        "{\n  \"scheme\": \"clements-amzi\",\n  \"m\": " + std::to_string(d.m) + ",\n";
    out += "  \"cells\": [";
    bool first = true;
    for (std::size_t ji = 0; ji < d.cells.size(); ++ji) {
        for (std::size_t ki = 0; ki < d.cells[ji].size(); ++ki) {
            out += first ? "\n" : ",\n";
            first = false;
            const AmziCell& cell = d.cells[ji][ki];
            out += "    {\"j\": " + std::to_string(ji + 1) + ", \"k\": " + std::to_string(ki + 1) +
                   ", \"theta\": " + format_double(cell.theta) +
                   ", \"phi\": " + format_double(cell.phi) + "}";
        }
    }
    out += "\n  ],\n  \"diag\": [";
    for (std::size_t i = 0; i < d.diag_phases.size(); ++i) {
        if (i != 0) {
            out += ", ";
        }
        out += format_double(d.diag_phases[i]);
    }
    out += "]\n}\n";
    return out;
}

std::string mesh_to_json(const MeshCircuit& c) {
    std::string out = "{\n  \"m\": " + std::to_string(c.m) + ",\n  \"layout\": \"" +
                      std::string(layout_name(c.layout)) + "\",\n  \"columns\": [";
    for (std::size_t ci = 0; ci < c.columns.size(); ++ci) {
        out += (ci == 0) ? "\n    [" : ",\n    [";
        for (std::size_t ei = 0; ei < c.columns[ci].size(); ++ei) {
            if (ei != 0) {
                out += ", ";
            }
            const MeshElement& e = c.columns[ci][ei];
            switch (e.kind) {
            case MeshElement::Kind::Smzi:
                out += "{\"type\": \"smzi\", \"top_mode\": " + std::to_string(e.top_mode) +
                       ", \"theta1\": " + format_double(e.smzi.theta1) +
                       ", \"theta2\": " + format_double(e.smzi.theta2) + "}";
                break;
            case MeshElement::Kind::Phase:
                out += "{\"type\": \"phase\", \"mode\": " + std::to_string(e.top_mode) +
                       ", \"phi\": " + format_double(e.phi) + "}";
                break;
            case MeshElement::Kind::Bare:
                out += "{\"type\": \"bare\", \"mode\": " + std::to_string(e.top_mode) + "}";
                break;
            }
        }
        out += "]";
    }
    out += "\n  ]\n}\n";
    return out;
}

std::string alternating_to_json(const AlternatingCircuit& c) {
    const bool full = c.form == PhaseForm::Full;
    std::string out = "{\n  \"scheme\": \"";
    out += full ? "fldzhyan-full" : "fldzhyan-compact";
    out += "\",\n  \"m\": " + std::to_string(c.m) + ",\n  \"depth\": " + std::to_string(c.depth) +
           ",\n  \"form\": \"";
    out += full ? "full" : "compact";
    out += "\",\n  \"splitter_angles\": [";
    for (std::size_t i = 0; i < c.splitter_angles.size(); ++i) {
        out += (i == 0) ? "\n    [" : ",\n    [";
        for (std::size_t k = 0; k < c.splitter_angles[i].size(); ++k) {
            if (k != 0) {
                out += ", ";
            }
            out += format_double(c.splitter_angles[i][k]);
        }
        out += "]";
    }
    out += "\n  ],\n  \"phase_layers\": [";
    for (std::size_t i = 0; i < c.phase_layers.size(); ++i) {
        out += (i == 0) ? "\n    [" : ",\n    [";
        for (std::size_t k = 0; k < c.phase_layers[i].size(); ++k) {
            if (k != 0) {
                out += ", ";
            }
            out += format_double(c.phase_layers[i][k]);
        }
        out += "]";
    }
    out += "\n  ]\n}\n";
    return out;
}

ReckDecomposition reck_from_json(const std::string& text) {
    const json j = parse(text);
    if (field(j, "scheme").get<std::string>() != "reck-smzi") {
        throw SchemaError("expected scheme reck-smzi");
    }
    const int m = get_int(field(j, "m"), "m");
    if (m < 2) {
        throw SchemaError("reck table requires m >= 2");
    }
    ReckDecomposition d(m);
    read_smzi_table(j, m, d.smzi);
    read_phase_list(j, "phi", "phi", 1, m - 1, d.phi_in);
    read_phase_list(j, "zeta", "zeta", 2, m - 1, d.zeta_out);
    d.global_phase = get_finite(field(j, "global_phase"), "global_phase");
    return d;
}

ClementsDecomposition clements_from_json(const std::string& text) {
    const json j = parse(text);
    if (field(j, "scheme").get<std::string>() != "clements-smzi") {
        throw SchemaError("expected scheme clements-smzi");
    }
    const int m = get_int(field(j, "m"), "m");
    if (m < 2) {
        throw SchemaError("clements table requires m >= 2");
    }
    ClementsDecomposition d(m);
    read_smzi_table(j, m, d.smzi);
    read_phase_list(j, "phi", "phi", 1, m - 1, d.phi_side);
    read_phase_list(j, "zeta", "zeta", 2, m - 1, d.zeta_mid);
    d.global_phase = get_finite(field(j, "global_phase"), "global_phase");
    return d;
}

AmziDecomposition amzi_from_json(const std::string& text) {
    const json j = parse(text);
    if (field(j, "scheme").get<std::string>() != "clements-amzi") {
        throw SchemaError("expected scheme clements-amzi");
    }
    const int m = get_int(field(j, "m"), "m");
    if (m < 2) {
        throw SchemaError("amzi table requires m >= 2");
    }
    AmziDecomposition d(m);
    const json& arr = field(j, "cells");
    if (!arr.is_array()) {
        throw SchemaError("cells must be an array");
    }
    std::vector<std::vector<bool>> seen(d.cells.size());
    for (std::size_t ji = 0; ji < d.cells.size(); ++ji) {
        seen[ji].assign(d.cells[ji].size(), false);
    }
    for (const json& e : arr) {
        const int jj = get_int(field(e, "j"), "j");
        const int kk = get_int(field(e, "k"), "k");
        if (jj < 1 || jj > m - 1 || kk < 1 || kk > jj) {
            throw SchemaError("cell index (j,k) out of range");
        }
        if (seen[static_cast<std::size_t>(jj - 1)][static_cast<std::size_t>(kk - 1)]) {
            throw SchemaError("duplicate cell index");
        }
        seen[static_cast<std::size_t>(jj - 1)][static_cast<std::size_t>(kk - 1)] = true;
        d.cell(jj, kk) = AmziCell{get_finite(field(e, "theta"), "theta"),
                                  get_finite(field(e, "phi"), "phi")};
    }
    for (const auto& row : seen) {
        for (bool s : row) {
            if (!s) {
                throw SchemaError("cells table is missing entries");
            }
        }
    }
    const json& diag = field(j, "diag");
    if (!diag.is_array() || diag.size() != static_cast<std::size_t>(m)) {
        throw SchemaError("diag must have m entries");
    }
    for (std::size_t i = 0; i < diag.size(); ++i) {
        d.diag_phases[i] = get_finite(diag[i], "diag entry");
    }
    return d;
}

MeshCircuit mesh_from_json(const std::string& text) {
    const json j = parse(text);
    MeshCircuit c;
    c.m = get_int(field(j, "m"), "m");
    c.layout = layout_from_name(field(j, "layout").get<std::string>());
    const json& cols = field(j, "columns");
    if (!cols.is_array()) {
        throw SchemaError("columns must be an array");
    }
    for (const json& col : cols) {
        if (!col.is_array()) {
            throw SchemaError("each column must be an array");
        }
        std::vector<MeshElement> column;
        for (const json& e : col) {
            const std::string type = field(e, "type").get<std::string>();
            if (type == "smzi") {
                column.push_back(MeshElement::make_smzi(
                    get_int(field(e, "top_mode"), "top_mode"),
                    SmziSetting{get_finite(field(e, "theta1"), "theta1"),
                                get_finite(field(e, "theta2"), "theta2")}));
            } else if (type == "phase") {
                column.push_back(MeshElement::make_phase(get_int(field(e, "mode"), "mode"),
                                                         get_finite(field(e, "phi"), "phi")));
            } else if (type == "bare") {
                column.push_back(MeshElement::make_bare(get_int(field(e, "mode"), "mode")));
            } else {
                throw SchemaError("unknown element type: " + type);
            }
        }
        c.columns.push_back(std::move(column));
    }
    try {
        c.validate();
    } catch (const LayoutError& err) {
        throw SchemaError(std::string("invalid mesh: ") + err.what());
    }
    return c;
}

AlternatingCircuit alternating_from_json(const std::string& text) {
    const json j = parse(text);
    AlternatingCircuit c;
    c.m = get_int(field(j, "m"), "m");
    c.depth = get_int(field(j, "depth"), "depth");
    const std::string form = field(j, "form").get<std::string>();
    if (form == "full") {
        c.form = PhaseForm::Full;
    } else if (form == "compact") {
        c.form = PhaseForm::Compact;
    } else {
        throw SchemaError("form must be \"full\" or \"compact\"");
    }
    for (const json& layer : field(j, "splitter_angles")) {
        std::vector<double> v;
        for (const json& x : layer) {
            v.push_back(get_finite(x, "splitter angle"));
        }
        c.splitter_angles.push_back(std::move(v));
    }
    for (const json& layer : field(j, "phase_layers")) {
        std::vector<double> v;
        for (const json& x : layer) {
            v.push_back(get_finite(x, "phase"));
        }
        c.phase_layers.push_back(std::move(v));
    }
    try {
        c.validate();
    } catch (const Error& err) {
        throw SchemaError(std::string("invalid alternating circuit: ") + err.what());
    }
    return c;
}

TableFile table_from_json(const std::string& text) {
    const json j = parse(text);
    TableFile t;
    if (j.contains("columns")) {
        t.kind = TableFile::Kind::Mesh;
        t.mesh = mesh_from_json(text);
        return t;
    }
    const std::string scheme = field(j, "scheme").get<std::string>();
    if (scheme == "reck-smzi") {
        t.kind = TableFile::Kind::Reck;
        t.reck = reck_from_json(text);
    } else if (scheme == "clements-smzi") {
        t.kind = TableFile::Kind::Clements;
        t.clements = clements_from_json(text);
    } else if (scheme == "clements-amzi") {
        t.kind = TableFile::Kind::Amzi;
        t.amzi = amzi_from_json(text);
    } else if (scheme == "fldzhyan-full" || scheme == "fldzhyan-compact") {
        t.kind = TableFile::Kind::Alternating;
        t.alternating = alternating_from_json(text);
    } else {
        throw SchemaError("unknown scheme: " + scheme);
    }
    return t;
}

} // namespace smzi::io
