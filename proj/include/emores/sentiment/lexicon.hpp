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

#pragma once

#include <optional>
#include <string>
#include <unordered_map>

namespace emores::sentiment {

/// Term -> mean human valence rating (roughly [-4, +4] per entry), loaded
/// from the published tab-separated lexicon format:
///
///     term<TAB>mean_rating<TAB>stddev<TAB>raw_ratings
///
/// Only the first two columns are consumed. Keys are stored exactly as they
/// appear in the file; lookups happen on lowercased tokens, mirroring the
/// reference rule engine.
class ValenceLexicon {
public:
    static ValenceLexicon load(const std::string& path);

    bool contains(const std::string& lowered_token) const {
        return ratings_.count(lowered_token) > 0;
    }

    std::optional<double> rating(const std::string& lowered_token) const {
        auto it = ratings_.find(lowered_token);
        if (it == ratings_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t size() const { return ratings_.size(); }

    const std::unordered_map<std::string, double>& entries() const { return ratings_; }

private:
    std::unordered_map<std::string, double> ratings_;
};

}  // namespace emores::sentiment
