#ifndef CSCORE_IO_HPP
#define CSCORE_IO_HPP

// Dataset ingestion and content digests.
//
// Binary datasets are CSV with the header `score,label`, one example per row.
// Multiclass datasets are JSON lines: {"scores": [...], "true_class": k}.
// Errors carry the 1-based line number where they were detected.

#include <openssl/evp.h>

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "cscore/errors.hpp"
#include "cscore/multiclass.hpp"
#include "cscore/threshold_sweep.hpp"

namespace cscore::io {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::parse, "cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline void write_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::parse, "cannot write " + path);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

/// "sha256:<hex>" of the given bytes.
inline std::string sha256_digest(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw Error(ErrorKind::parse, "sha256 digest failed");
    }
    std::string out = "sha256:";
    for (unsigned int i = 0; i < len; ++i) out += fmt::format("{:02x}", md[i]);
    return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

inline double parse_double(std::string_view s, std::size_t line) {
    double v = 0.0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    if (!s.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (s.empty() || ec != std::errc() || ptr != last) {
        throw Error(ErrorKind::parse, "cannot parse number '" + std::string(s) + "'", line);
    }
    return v;
}

}  // namespace detail

inline ScoredDataset parse_dataset(std::string_view text) {
    const auto lines = detail::split_lines(text);
    if (lines.empty() || detail::trim(lines[0]) != "score,label") {
        throw Error(ErrorKind::parse, "expected header 'score,label'", 1);
    }
    std::vector<ScoredExample> examples;
    examples.reserve(lines.size());
    bool any_positive = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line = i + 1;
        const auto row = detail::trim(lines[i]);
        if (row.empty()) continue;
        const auto comma = row.find(',');
        if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos) {
            throw Error(ErrorKind::parse, "expected two fields 'score,label'", line);
        }
        const double score = detail::parse_double(detail::trim(row.substr(0, comma)), line);
        if (!(score >= 0.0 && score <= 1.0)) {
            throw Error(ErrorKind::range, "score " + std::string(detail::trim(row.substr(0, comma))) + " outside [0,1]", line);
        }
        const auto label_text = detail::trim(row.substr(comma + 1));
        int label = 0;
        if (label_text == "1") {
            label = 1;
            any_positive = true;
        } else if (label_text != "0") {
            throw Error(ErrorKind::parse, "label must be 0 or 1, got '" + std::string(label_text) + "'", line);
        }
        examples.push_back({score, label});
    }
    if (!any_positive) throw Error(ErrorKind::degenerate, "dataset has no positive labels");
    return ScoredDataset(std::move(examples));
}

inline ScoredDataset load_dataset(const std::string& path) { return parse_dataset(read_file(path)); }

/// Inverse of parse_dataset; scores are written in shortest round-trip form.
inline std::string format_dataset(const ScoredDataset& ds) {
    std::string out = "score,label\n";
    for (const auto& e : ds.examples()) out += fmt::format("{},{}\n", e.score, e.label);
    return out;
}

inline std::vector<MulticlassScoredExample> parse_multiclass(std::string_view text) {
    std::vector<MulticlassScoredExample> out;
    const auto lines = detail::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line = i + 1;
        const auto row = detail::trim(lines[i]);
        if (row.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(row);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorKind::parse, std::string("invalid JSON: ") + e.what(), line);
        }
        if (!j.is_object() || !j.contains("scores") || !j["scores"].is_array() || !j.contains("true_class") ||
            !j["true_class"].is_number_integer()) {
            throw Error(ErrorKind::parse, "expected {\"scores\": [...], \"true_class\": k}", line);
        }
        MulticlassScoredExample e;
        for (const auto& s : j["scores"]) {
            if (!s.is_number()) throw Error(ErrorKind::parse, "scores must be numbers", line);
            const double v = s.get<double>();
            if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorKind::range, "score outside [0,1]", line);
            e.scores.push_back(v);
        }
        const auto cls = j["true_class"].get<long long>();
        if (cls < 0 || static_cast<std::size_t>(cls) >= e.scores.size()) {
            throw Error(ErrorKind::range, "true_class out of range", line);
        }
        e.true_class = static_cast<std::size_t>(cls);
        if (!out.empty() && out.front().scores.size() != e.scores.size()) {
            throw Error(ErrorKind::parse, "inconsistent number of class scores", line);
        }
        out.push_back(std::move(e));
    }
    if (out.empty()) throw Error(ErrorKind::degenerate, "no examples");
    return out;
}

}  // namespace cscore::io

#endif  // CSCORE_IO_HPP
