#pragma once

// Line-oriented verification reports:
//
//   CHECK <name> PASS [witness=...]
//   CHECK <name> FAIL witness=...
//   INFO <key>=<value>
//
// Witness text never contains spaces, so every line splits on whitespace.

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace orthoform {

class Report {
public:
    struct Line {
        enum class Kind { check, info } kind;
        std::string name;
        bool pass = true;
        std::string value;
    };

    void check(const std::string& name, bool pass, const std::string& witness = {}) {
        lines_.push_back({Line::Kind::check, name, pass, despace(witness)});
    }

    void info(const std::string& key, const std::string& value) {
        lines_.push_back({Line::Kind::info, key, true, despace(value)});
    }

    void append(const Report& other) { lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end()); }

    bool passed() const {
        return std::all_of(lines_.begin(), lines_.end(), [](const Line& l) { return l.pass; });
    }

    // Result of the first CHECK with this name; false if absent.
    bool passed(const std::string& name) const {
        for (const auto& l : lines_)
            if (l.kind == Line::Kind::check && l.name == name)
                return l.pass;
        return false;
    }

    const Line* find(const std::string& name) const {
        for (const auto& l : lines_)
            if (l.name == name)
                return &l;
        return nullptr;
    }

    const std::vector<Line>& lines() const noexcept { return lines_; }

    std::string to_string() const {
        std::string out;
        for (const auto& l : lines_) {
            if (l.kind == Line::Kind::info) {
                out += "INFO " + l.name + "=" + l.value + "\n";
                continue;
            }
            out += "CHECK " + l.name + (l.pass ? " PASS" : " FAIL");
            if (!l.value.empty())
                out += " witness=" + l.value;
            out += "\n";
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Report& r) { return os << r.to_string(); }

private:
    static std::string despace(std::string s) {
        std::replace(s.begin(), s.end(), ' ', '_');
        std::replace(s.begin(), s.end(), '\n', '_');
        return s;
    }

    std::vector<Line> lines_;
};

} // namespace orthoform
