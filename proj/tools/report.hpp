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

#ifndef QUTRIT_TOOLS_REPORT_HPP
#define QUTRIT_TOOLS_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qutrit::cli {

struct Table {
    std::string title;
    /// Free text printed under the title in markdown output.
    std::string note;
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

/// RFC-4180 field: quoted when it contains a comma, quote, CR or LF; quotes doubled.
std::string csv_field(const std::string &field);
void write_csv(std::ostream &out, const Table &table);
void write_markdown(std::ostream &out, const Table &table);

std::string format_double(double x);

}  // namespace qutrit::cli

#endif  // QUTRIT_TOOLS_REPORT_HPP
