#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

namespace weber::cli {

using Json = nlohmann::ordered_json;

/// Deterministic decimal rendering with `precision` significant digits:
/// fixed notation for 1e-6 <= |x| < 1e6, scientific outside, trailing zeros
/// dropped, "0" for zero, "nan"/"inf"/"-inf" for non-finite values.
std::string format_number(double x, int precision);

/// x rounded to `precision` significant digits (non-finite becomes null).
Json json_number(double x, int precision);

class CsvWriter {
public:
    CsvWriter(std::ostream& out, int precision) : out_(out), precision_(precision) {}

    void comment(const std::string& text) { out_ << "# " << text << '\n'; }
    void header(const std::vector<std::string>& columns);
    CsvWriter& field(double x);
    CsvWriter& field(long x);
    CsvWriter& field(const std::string& s);
    void end_row();

private:
    std::ostream& out_;
    int precision_;
    bool first_ = true;
};

}  // namespace weber::cli
