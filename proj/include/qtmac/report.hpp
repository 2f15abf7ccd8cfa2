/*
   Copyright 2026 The qtmac Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qtmac {

/// Outcome of one relation check, aggregated over its instances.
struct CheckResult {
    std::string relation;
    bool pass = true;
    int instances = 0;
    std::optional<std::string> counterexample;
};

/// Verification report: relations in insertion order.
class Report {
   public:
    Report() = default;
    explicit Report(std::string title) : title_(std::move(title)) {}

    const std::string& title() const { return title_; }
    const std::vector<CheckResult>& checks() const { return checks_; }

    /// Records one instance of `relation`; the first failure keeps its witness.
    void record(const std::string& relation, bool ok, const std::string& witness = {}) {
        CheckResult& c = entry(relation);
        ++c.instances;
        if (!ok && c.pass) {
            c.pass = false;
            c.counterexample = witness;
        }
    }

    void merge(const Report& other) {
        for (const auto& c : other.checks_) {
            CheckResult& e = entry(c.relation);
            e.instances += c.instances;
            if (!c.pass && e.pass) {
                e.pass = false;
                e.counterexample = c.counterexample;
            }
        }
    }

    bool all_pass() const {
        return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.pass; });
    }
    int failures() const {
        return static_cast<int>(std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.pass; }));
    }

    std::string to_text() const {
        std::string s;
        if (!title_.empty()) s += title_ + "\n";
        for (const auto& c : checks_) {
            s += (c.pass ? "  PASS " : "  FAIL ") + c.relation + " [" + std::to_string(c.instances) + "]";
            if (c.counterexample) s += "  counterexample: " + *c.counterexample;
            s += "\n";
        }
        return s;
    }

   private:
    CheckResult& entry(const std::string& relation) {
        auto it = index_.find(relation);
        if (it != index_.end()) return checks_[it->second];
        index_.emplace(relation, checks_.size());
        checks_.push_back(CheckResult{relation, true, 0, std::nullopt});
        return checks_.back();
    }

    std::string title_;
    std::vector<CheckResult> checks_;
    std::map<std::string, std::size_t> index_;
};

}  // namespace qtmac
