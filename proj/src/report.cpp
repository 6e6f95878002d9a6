// SPDX-License-Identifier: Apache-2.0
#include "gemmsim/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gemmsim/errors.hpp"

namespace gemmsim {

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string digest_files(const std::vector<std::string>& paths) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const std::string& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParseError("cannot open input for digest: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        const std::string bytes = ss.str();
        h = fnv1a(bytes.data(), bytes.size(), h);
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

using nlohmann::ordered_json;

std::string cell_text(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
    if (v.is_number_float()) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.9g", v.get<double>());
        return buf;
    }
    return v.dump();
}

void render_rows_csv(std::ostringstream& out, const std::string& name,
                     const ordered_json& rows) {
    out << "# section=" << name << "\n";
    if (rows.empty()) return;
    bool first = true;
    for (const auto& [key, _] : rows.front().items()) {
        out << (first ? "" : ",") << key;
        first = false;
    }
    out << "\n";
    for (const auto& row : rows) {
        first = true;
        for (const auto& [_, value] : row.items()) {
            out << (first ? "" : ",") << cell_text(value);
            first = false;
        }
        out << "\n";
    }
}

void render_rows_table(std::ostringstream& out, const std::string& name,
                       const ordered_json& rows) {
    out << "== " << name << " ==\n";
    if (rows.empty()) {
        out << "(empty)\n";
        return;
    }
    std::vector<std::string> headers;
    for (const auto& [key, _] : rows.front().items()) headers.push_back(key);
    std::vector<std::size_t> widths;
    for (const std::string& h : headers) widths.push_back(h.size());
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rows) {
        std::vector<std::string> line;
        std::size_t i = 0;
        for (const auto& [_, value] : row.items()) {
            line.push_back(cell_text(value));
            widths[i] = std::max(widths[i], line.back().size());
            ++i;
        }
        cells.push_back(std::move(line));
    }
    const auto pad = [&](const std::string& s, std::size_t w) {
        std::string p = s;
        p.resize(w, ' ');
        return p;
    };
    for (std::size_t i = 0; i < headers.size(); ++i)
        out << (i ? "  " : "") << pad(headers[i], widths[i]);
    out << "\n";
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i)
            out << (i ? "  " : "") << pad(line[i], widths[i]);
        out << "\n";
    }
}

} // namespace

std::string to_json_text(const Report& r) {
    ordered_json j;
    j["tool_version"] = r.tool_version;
    j["command"] = r.command;
    j["inputs_digest"] = r.inputs_digest;
    for (const auto& [name, section] : r.sections.items()) j[name] = section;
    return j.dump(2) + "\n";
}

std::string to_csv_text(const Report& r) {
    std::ostringstream out;
    out << "# tool_version=" << r.tool_version << " command=" << r.command
        << " inputs_digest=" << r.inputs_digest << "\n";
    for (const auto& [name, section] : r.sections.items()) {
        if (section.is_array()) {
            render_rows_csv(out, name, section);
        } else {
            out << "# section=" << name << "\n";
            for (const auto& [key, value] : section.items())
                out << key << "," << cell_text(value) << "\n";
        }
    }
    return out.str();
}

std::string to_table_text(const Report& r) {
    std::ostringstream out;
    out << "tool " << r.tool_version << " | " << r.command << " | inputs "
        << r.inputs_digest << "\n";
    for (const auto& [name, section] : r.sections.items()) {
        if (section.is_array()) {
            render_rows_table(out, name, section);
        } else {
            out << "== " << name << " ==\n";
            for (const auto& [key, value] : section.items())
                out << key << ": " << cell_text(value) << "\n";
        }
    }
    return out.str();
}

} // namespace gemmsim
