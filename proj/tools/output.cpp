#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace weber::cli {

namespace {

// "1.2500" -> "1.25", "3.000" -> "3"
void trim_fraction(std::string& s) {
    if (s.find('.') == std::string::npos) return;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
}

}  // namespace

std::string format_number(double x, int precision) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";
    char buf[64];
    const double ax = std::abs(x);
    if (ax < 1e-6 || ax >= 1e6) {
        std::snprintf(buf, sizeof buf, "%.*e", precision - 1, x);
        const std::string s = buf;
        const auto e = s.find('e');
        std::string mantissa = s.substr(0, e);
        trim_fraction(mantissa);
        return mantissa + s.substr(e);
    }
    const int exponent = static_cast<int>(std::floor(std::log10(ax)));
    const int decimals = std::max(0, precision - 1 - exponent);
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    std::string s = buf;
    trim_fraction(s);
    return s;
}

Json json_number(double x, int precision) {
    if (!std::isfinite(x)) return nullptr;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", precision - 1, x);
    return std::strtod(buf, nullptr);
}

void CsvWriter::header(const std::vector<std::string>& columns) {
    for (const auto& c : columns) field(c);
    end_row();
}

CsvWriter& CsvWriter::field(double x) { return field(format_number(x, precision_)); }

CsvWriter& CsvWriter::field(long x) { return field(std::to_string(x)); }

CsvWriter& CsvWriter::field(const std::string& s) {
    if (!first_) out_ << ',';
    if (s.find_first_of(",\"\n") != std::string::npos) {
        out_ << '"';
        for (char ch : s) {
            if (ch == '"') out_ << '"';
            out_ << ch;
        }
        out_ << '"';
    } else {
        out_ << s;
    }
    first_ = false;
    return *this;
}

void CsvWriter::end_row() {
    out_ << '\n';
    first_ = true;
}

}  // namespace weber::cli
