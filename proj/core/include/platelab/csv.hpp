#pragma once

// Minimal CSV helpers: fixed header order, %.17g doubles (round-trip exact),
// locale-independent.

#include <cstdio>
#include <ostream>
#include <string>

namespace platelab {

inline std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class CsvRow {
public:
    explicit CsvRow(std::ostream& os) : os_(os) {}
    CsvRow& col(const std::string& s) {
        if (!first_) os_ << ',';
        first_ = false;
        if (s.find_first_of(",\"\n") == std::string::npos) {
            os_ << s;
        } else {
            os_ << '"';
            for (char c : s) {
                if (c == '"') os_ << '"';
                os_ << c;
            }
            os_ << '"';
        }
        return *this;
    }
    CsvRow& col(const char* s) { return col(std::string(s)); }
    CsvRow& col(double v) { return col(csv_double(v)); }
    CsvRow& col(int v) { return col(std::to_string(v)); }
    CsvRow& col(bool v) { return col(std::string(v ? "1" : "0")); }
    ~CsvRow() { os_ << '\n'; }

private:
    std::ostream& os_;
    bool first_ = true;
};

} // namespace platelab
