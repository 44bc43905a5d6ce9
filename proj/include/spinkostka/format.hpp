#pragma once

#include <string>
#include <vector>

#include "spinkostka/macdonald.hpp"
#include "spinkostka/serialize.hpp"
#include "spinkostka/spin.hpp"

namespace spinkostka {

enum class TableFormat { Text, Csv, Json, Latex };

inline TableFormat table_format_from_string(const std::string& s) {
    if (s == "text") return TableFormat::Text;
    if (s == "csv") return TableFormat::Csv;
    if (s == "json") return TableFormat::Json;
    if (s == "latex") return TableFormat::Latex;
    throw std::invalid_argument("unknown format: " + s);
}

/// Label in the latex layout: "(3,1)"; all-ones partitions of length at
/// least two are compressed to the power form "(1^4)".
inline std::string partition_latex_label(const Partition& p) {
    if (p.empty()) return "()";
    if (p.length() >= 2 && p.part(1) == 1) return "(1^" + std::to_string(p.length()) + ")";
    std::string s = "(";
    for (int i = 1; i <= p.length(); ++i) {
        if (i > 1) s += ',';
        s += std::to_string(p.part(i));
    }
    return s + ")";
}

/// Generic matrix with partition-labelled rows and columns; entries are
/// already-rendered polynomial strings (ascii and latex variants).
struct RenderedTable {
    std::string corner;
    std::vector<std::string> row_labels, row_latex;
    std::vector<std::string> col_labels, col_latex;
    std::vector<std::vector<std::string>> cells, cells_latex;
    json meta;
};

inline std::string render_table(const RenderedTable& t, TableFormat fmt) {
    std::string out;
    switch (fmt) {
        case TableFormat::Text:
        case TableFormat::Csv: {
            const char sep = fmt == TableFormat::Text ? '\t' : ',';
            out += t.corner;
            for (auto& c : t.col_labels) { out += sep; out += c; }
            out += '\n';
            for (size_t i = 0; i < t.cells.size(); ++i) {
                out += t.row_labels[i];
                for (auto& c : t.cells[i]) { out += sep; out += c; }
                out += '\n';
            }
            return out;
        }
        case TableFormat::Json: {
            json rows = json::array(), cols = json::array(), entries = json::array();
            for (auto& r : t.row_labels) rows.push_back(r);
            for (auto& c : t.col_labels) cols.push_back(c);
            for (auto& row : t.cells) entries.push_back(row);
            json j = t.meta;
            j["rows"] = rows;
            j["cols"] = cols;
            j["entries"] = entries;
            return j.dump(2) + "\n";
        }
        case TableFormat::Latex: {
            out += "\\left[ \\begin{array}{";
            out += std::string(t.col_labels.size() + 1, 'c');
            out += "}\n";
            out += t.corner;
            for (auto& c : t.col_latex) { out += " & "; out += c; }
            out += " \\\\\n";
            for (size_t i = 0; i < t.cells_latex.size(); ++i) {
                out += t.row_latex[i];
                for (auto& c : t.cells_latex[i]) { out += " & "; out += c; }
                out += i + 1 < t.cells_latex.size() ? " \\\\\n" : "\n";
            }
            out += "\\end{array} \\right]\n";
            return out;
        }
    }
    throw std::invalid_argument("render_table: unknown format");
}

/// Spin Kostka matrix of degree n; rows are strict partitions, columns
/// all partitions.  With halved=true the entries are 2^{-l(xi)}
/// K^-_{xi mu}(t), the normalization of the reference tables.
inline RenderedTable spin_kostka_rendered(int n, bool halved) {
    const auto& tab = spin_kostka_table(n);
    const auto& strict = strict_partitions_of(n);
    const auto& parts = partitions_of(n);
    RenderedTable t;
    t.corner = "xi\\mu";
    t.meta = json{{"table", "spin-kostka"}, {"n", n}, {"halved", halved}, {"variable", "t"}};
    for (auto& xi : strict) {
        t.row_labels.push_back(xi.str());
        t.row_latex.push_back(partition_latex_label(xi.as_partition()));
    }
    for (auto& mu : parts) {
        t.col_labels.push_back(mu.str());
        t.col_latex.push_back(partition_latex_label(mu));
    }
    for (size_t i = 0; i < strict.size(); ++i) {
        std::vector<std::string> row, rowl;
        for (size_t j = 0; j < parts.size(); ++j) {
            PolyT v = tab.kminus[i][j];
            if (halved) v *= rational_pow2(-strict[i].length());
            row.push_back(v.str());
            rowl.push_back(v.latex());
        }
        t.cells.push_back(std::move(row));
        t.cells_latex.push_back(std::move(rowl));
    }
    return t;
}

/// q,t-Kostka matrix of degree n: classical (rows all partitions) or
/// spin (rows strict partitions; halved entries available as in the
/// t-level table).
inline RenderedTable qt_kostka_rendered(int n, bool spin, bool halved) {
    const auto& parts = partitions_of(n);
    RenderedTable t;
    t.corner = spin ? "xi\\mu" : "lambda\\mu";
    t.meta = json{{"table", spin ? "spin-qt-kostka" : "qt-kostka"},
                  {"n", n},
                  {"halved", spin && halved},
                  {"variables", "q,t"}};
    for (auto& mu : parts) {
        t.col_labels.push_back(mu.str());
        t.col_latex.push_back(partition_latex_label(mu));
    }
    auto push_row = [&](const std::string& label, const std::string& latex,
                        const std::vector<PolyQT>& row) {
        t.row_labels.push_back(label);
        t.row_latex.push_back(latex);
        std::vector<std::string> cells, cellsl;
        for (auto& v : row) {
            cells.push_back(v.str());
            cellsl.push_back(v.latex());
        }
        t.cells.push_back(std::move(cells));
        t.cells_latex.push_back(std::move(cellsl));
    };
    if (spin) {
        for (auto& xi : strict_partitions_of(n)) {
            std::vector<PolyQT> row;
            for (auto& mu : parts) {
                PolyQT v = spin_qt_kostka(xi, mu);
                if (halved) v *= rational_pow2(-xi.length());
                row.push_back(std::move(v));
            }
            push_row(xi.str(), partition_latex_label(xi.as_partition()), row);
        }
    } else {
        for (auto& lam : parts) {
            std::vector<PolyQT> row;
            for (auto& mu : parts) row.push_back(qt_kostka(lam, mu));
            push_row(lam.str(), partition_latex_label(lam), row);
        }
    }
    return t;
}

/// Parses "2,1", "[2,1]", "(2,1)" or "" (empty partition).
inline std::vector<int> parse_parts(const std::string& arg) {
    std::string s = arg;
    if (!s.empty() && (s.front() == '[' || s.front() == '(')) s = s.substr(1);
    if (!s.empty() && (s.back() == ']' || s.back() == ')')) s.pop_back();
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        const std::string tok = s.substr(pos, next - pos);
        if (!tok.empty()) {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("bad partition entry: " + tok);
            parts.push_back(v);
        }
        pos = next + 1;
    }
    return parts;
}

} // namespace spinkostka
