#include "tcirc/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tcirc::io {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& token) {
    const std::string t = trim(token);
    if (t.empty()) throw std::invalid_argument("empty numeric field");
    char* end = nullptr;
    const double value = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size()) throw std::invalid_argument("malformed numeric field: " + t);
    return value;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string current;
    for (char ch : line) {
        if (ch == sep) {
            fields.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    fields.push_back(current);
    return fields;
}

}  // namespace

std::string format_double(double x) {
    if (x == 0.0) return "0";
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

std::string row_csv(std::span<const double> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) out.push_back(',');
        out += format_double(values[i]);
    }
    return out;
}

std::string row_json(std::span<const double> values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) out.push_back(',');
        out += format_double(values[i]);
    }
    out.push_back(']');
    return out;
}

std::vector<double> parse_row_text(const std::string& text) {
    const std::string body = trim(text);
    if (body.empty()) throw std::invalid_argument("row text is empty");
    if (body.front() == '[') {
        const auto parsed = nlohmann::json::parse(body, nullptr, false);
        if (parsed.is_discarded() || !parsed.is_array())
            throw std::invalid_argument("row text is not a JSON array of numbers");
        std::vector<double> values;
        values.reserve(parsed.size());
        for (const auto& item : parsed) {
            if (!item.is_number()) throw std::invalid_argument("row text is not a JSON array of numbers");
            values.push_back(item.get<double>());
        }
        if (values.empty()) throw std::invalid_argument("row must be nonempty");
        return values;
    }
    std::istringstream lines(body);
    std::string line;
    while (std::getline(lines, line)) {
        if (trim(line).empty()) continue;
        std::vector<double> values;
        for (const auto& field : split(line, ',')) values.push_back(parse_number(field));
        return values;
    }
    throw std::invalid_argument("row text is empty");
}

std::vector<double> read_row_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open row file: " + path);
    std::ostringstream contents;
    contents << in.rdbuf();
    return parse_row_text(contents.str());
}

std::string dense_csv(const DenseMatrix& a) {
    std::string out;
    const int n = a.order();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j != 0) out.push_back(',');
            out += format_double(a(i, j));
        }
        out.push_back('\n');
    }
    return out;
}

std::string complex_values_csv(std::span<const Complex> values) {
    std::string out;
    for (const Complex& z : values) {
        out += format_double(z.real());
        out.push_back(',');
        out += format_double(z.imag());
        out.push_back('\n');
    }
    return out;
}

std::string complex_values_json(std::span<const Complex> values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) out.push_back(',');
        out += "{\"re\":" + format_double(values[i].real()) + ",\"im\":" + format_double(values[i].imag()) + "}";
    }
    out.push_back(']');
    return out;
}

std::string report_csv_header() {
    return "method,rho,M,scaled_norm_sq_direct,scaled_norm_sq_closed,leading_term";
}

std::string report_csv(const ResidualReport& report) {
    std::string out{method_name(report.method)};
    out.push_back(',');
    if (report.rho) out += format_double(*report.rho);
    out.push_back(',');
    out += std::to_string(report.order);
    out.push_back(',');
    out += format_double(report.scaled_norm_sq_direct);
    out.push_back(',');
    if (report.scaled_norm_sq_closed) out += format_double(*report.scaled_norm_sq_closed);
    out.push_back(',');
    if (report.leading_term) out += format_double(*report.leading_term);
    return out;
}

std::string report_json(const ResidualReport& report) {
    std::string out = "{\"method\":\"";
    out += method_name(report.method);
    out += "\"";
    if (report.rho) out += ",\"rho\":" + format_double(*report.rho);
    out += ",\"M\":" + std::to_string(report.order);
    out += ",\"scaled_norm_sq_direct\":" + format_double(report.scaled_norm_sq_direct);
    if (report.scaled_norm_sq_closed) out += ",\"scaled_norm_sq_closed\":" + format_double(*report.scaled_norm_sq_closed);
    if (report.leading_term) out += ",\"leading_term\":" + format_double(*report.leading_term);
    out.push_back('}');
    return out;
}

ResidualReport parse_report_csv(const std::string& line) {
    const auto fields = split(trim(line), ',');
    if (fields.size() != 6) throw std::invalid_argument("report row must have 6 fields");
    ResidualReport report;
    const auto method = parse_method(trim(fields[0]));
    if (!method) throw std::invalid_argument("unknown method: " + fields[0]);
    report.method = *method;
    if (!trim(fields[1]).empty()) report.rho = parse_number(fields[1]);
    report.order = static_cast<int>(parse_number(fields[2]));
    report.scaled_norm_sq_direct = parse_number(fields[3]);
    if (!trim(fields[4]).empty()) report.scaled_norm_sq_closed = parse_number(fields[4]);
    if (!trim(fields[5]).empty()) report.leading_term = parse_number(fields[5]);
    return report;
}

}  // namespace tcirc::io
