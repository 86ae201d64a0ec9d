#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cpokit {

// Ordered key=value report with stable text output for golden-file tests.
class Report {
  public:
    void add(const std::string& key, const std::string& value) {
        entries_.emplace_back(key, value);
    }
    void add(const std::string& key, const char* value) { add(key, std::string(value)); }
    void add(const std::string& key, bool value) { add(key, value ? "true" : "false"); }
    void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
    void add(const std::string& key, int value) { add(key, std::to_string(value)); }
    void add(const std::string& key, std::size_t value) { add(key, std::to_string(value)); }

    // A check entry: key=pass|fail, failing checks flip ok().
    void check(const std::string& key, bool pass) {
        entries_.emplace_back(key, pass ? "pass" : "fail");
        ok_ = ok_ && pass;
    }

    bool ok() const { return ok_; }
    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

    std::string text() const {
        std::ostringstream out;
        for (const auto& [k, v] : entries_) out << k << "=" << v << "\n";
        return out.str();
    }

    void absorb(const Report& other) {
        for (const auto& e : other.entries_) entries_.push_back(e);
        ok_ = ok_ && other.ok_;
    }

    std::string value_of(const std::string& key) const {
        for (const auto& [k, v] : entries_)
            if (k == key) return v;
        return {};
    }

  private:
    std::vector<std::pair<std::string, std::string>> entries_;
    bool ok_ = true;
};

}  // namespace cpokit
