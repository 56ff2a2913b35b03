// Copyright 2026 the emores authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy of
// the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations under
// the License.

#include "emores/util/line_reader.hpp"

#include <zlib.h>

#include "emores/util/errors.hpp"

namespace emores::util {

struct LineReader::Impl {
    gzFile file = nullptr;

    ~Impl() {
        if (file != nullptr) gzclose(file);
    }
};

LineReader::LineReader(const std::string& path) : impl_(std::make_unique<Impl>()) {
    impl_->file = gzopen(path.c_str(), "rb");
    if (impl_->file == nullptr) {
        throw DataError("cannot open input file: " + path);
    }
}

LineReader::~LineReader() = default;
LineReader::LineReader(LineReader&&) noexcept = default;
LineReader& LineReader::operator=(LineReader&&) noexcept = default;

bool LineReader::next(std::string& line) {
    line.clear();
    char buf[1 << 16];
    bool got_any = false;
    for (;;) {
        if (gzgets(impl_->file, buf, sizeof(buf)) == nullptr) {
            int errnum = 0;
            const char* msg = gzerror(impl_->file, &errnum);
            if (errnum != Z_OK && errnum != Z_STREAM_END) {
                throw DataError(std::string("error reading input: ") + msg);
            }
            return got_any;
        }
        got_any = true;
        line += buf;
        if (!line.empty() && line.back() == '\n') {
            line.pop_back();
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return true;
        }
        // buffer filled without newline: keep accumulating
    }
}

}  // namespace emores::util
