// SPDX-License-Identifier: Apache-2.0
//
// radcom-emf: exposure-aware waveform design for dual-function
// radar-communication arrays
// Copyright (C) 2026 radcom-emf contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RADCOM_CSV_HPP
#define RADCOM_CSV_HPP

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace radcom {

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Deterministic CSV emission: fixed %.12g formatting so identical runs
// produce byte-identical files.
class CsvWriter {
  public:
    explicit CsvWriter(const std::string& path) : out_(path) {
        if (!out_) throw IoError("cannot open '" + path + "' for writing");
    }

    void comment(const std::string& text) { out_ << "# " << text << "\n"; }
    void raw_line(const std::string& text) { out_ << text << "\n"; }

    void row(std::initializer_list<double> values) {
        bool first = true;
        char buf[48];
        for (double v : values) {
            if (!first) out_ << ",";
            std::snprintf(buf, sizeof(buf), "%.12g", v);
            out_ << buf;
            first = false;
        }
        out_ << "\n";
    }

    void close() {
        out_.close();
        if (!out_) throw IoError("error while closing CSV output");
    }

  private:
    std::ofstream out_;
};

}  // namespace radcom

#endif  // RADCOM_CSV_HPP
