// Copyright 2026 The qutrit Authors
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

#include "report.hpp"

#include <cmath>
#include <cstdio>

namespace qutrit::cli {

std::string csv_field(const std::string &field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

namespace {

void write_csv_record(std::ostream &out, const std::vector<std::string> &fields) {
    for (size_t k = 0; k < fields.size(); ++k) out << (k ? "," : "") << csv_field(fields[k]);
    out << "\r\n";
}

std::string markdown_cell(const std::string &text) {
    std::string out;
    for (char ch : text) {
        if (ch == '|') out += '\\';
        out += ch == '\n' ? ' ' : ch;
    }
    return out;
}

void write_markdown_row(std::ostream &out, const std::vector<std::string> &cells) {
    out << "|";
    for (const auto &c : cells) out << " " << markdown_cell(c) << " |";
    out << "\n";
}

}  // namespace

void write_csv(std::ostream &out, const Table &table) {
    write_csv_record(out, table.headers);
    for (const auto &row : table.rows) write_csv_record(out, row);
}

void write_markdown(std::ostream &out, const Table &table) {
    if (!table.title.empty()) out << "## " << table.title << "\n\n";
    if (!table.note.empty()) out << table.note << "\n\n";
    if (table.headers.empty()) return;
    write_markdown_row(out, table.headers);
    out << "|";
    for (size_t k = 0; k < table.headers.size(); ++k) out << " --- |";
    out << "\n";
    for (const auto &row : table.rows) write_markdown_row(out, row);
    out << "\n";
}

std::string format_double(double x) {
    if (x == 0.0) x = 0.0;  // drop the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace qutrit::cli
