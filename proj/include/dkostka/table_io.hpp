#pragma once

// Table documents: a square polynomial matrix indexed by double partitions
// in a fixed label order, with renderers (text, csv, latex, json) and a
// loader for the frozen golden JSON files. JSON schema:
//   {"n": int, "order": [label...], "entries": {"row|col": "poly"}}
// with only nonzero entries stored. Zero entries render as blank cells in
// the csv and latex formats, matching the printed tables. Comparisons are
// keyed by parsed labels, never by position, so two documents with
// different label orders but equal entries compare equal.

#include <dkostka/double_symfunc.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dkostka {

struct TableDocument {
  int n = 0;
  std::vector<DoublePartition> order;
  std::map<std::pair<DoublePartition, DoublePartition>, IntPoly> entries;  // nonzero only

  const IntPoly& at(const DoublePartition& la, const DoublePartition& mu) const {
    static const IntPoly zero;
    auto it = entries.find({la, mu});
    return it == entries.end() ? zero : it->second;
  }
};

enum class TableFormat { text, csv, latex, json };

inline TableFormat parse_table_format(const std::string& s) {
  if (s == "text") return TableFormat::text;
  if (s == "csv") return TableFormat::csv;
  if (s == "latex") return TableFormat::latex;
  if (s == "json") return TableFormat::json;
  throw std::invalid_argument("unknown table format: " + s);
}

// The double Kostka matrix of size n on the library's label order.
inline TableDocument kostka_table(int n, bool alternate_order = false) {
  const HallLittlewoodBasis& B = gram_schmidt_hl(n, alternate_order);
  TableDocument doc;
  doc.n = n;
  doc.order = B.order;
  for (const DoublePartition& la : doc.order)
    for (const DoublePartition& mu : doc.order) {
      IntPoly k = B.kostka(la, mu);
      if (!k.is_zero()) doc.entries.emplace(std::make_pair(la, mu), std::move(k));
    }
  return doc;
}

namespace detail {

inline std::string table_cell(const IntPoly& p, bool latex) {
  if (p.is_zero()) return "";
  std::string s = latex ? p.str_latex() : p.str();
  if (latex && !(p.terms().size() == 1 && p.terms().begin()->first == 0)) s = "$" + s + "$";
  return s;
}

}  // namespace detail

inline std::string render_table(const TableDocument& doc, TableFormat format) {
  std::ostringstream out;
  std::vector<std::string> labels;
  labels.reserve(doc.order.size());
  for (const DoublePartition& la : doc.order) labels.push_back(render_double_partition(la));

  switch (format) {
    case TableFormat::json: {
      nlohmann::ordered_json j;
      j["n"] = doc.n;
      j["order"] = labels;
      nlohmann::ordered_json entries = nlohmann::ordered_json::object();
      for (size_t i = 0; i < doc.order.size(); ++i)
        for (size_t k = 0; k < doc.order.size(); ++k) {
          const IntPoly& p = doc.at(doc.order[i], doc.order[k]);
          if (!p.is_zero()) entries[labels[i] + "|" + labels[k]] = p.str();
        }
      j["entries"] = std::move(entries);
      out << j.dump(1) << "\n";
      break;
    }
    case TableFormat::csv: {
      for (const std::string& lab : labels) out << "," << lab;
      out << "\n";
      for (size_t i = 0; i < doc.order.size(); ++i) {
        out << labels[i];
        for (size_t k = 0; k < doc.order.size(); ++k)
          out << "," << detail::table_cell(doc.at(doc.order[i], doc.order[k]), false);
        out << "\n";
      }
      break;
    }
    case TableFormat::latex: {
      out << "\\begin{tabular}{|c|" << std::string(doc.order.size(), 'c') << "|}\n\\hline\n";
      for (const std::string& lab : labels) out << " & $" << lab << "$";
      out << " \\\\\n\\hline\n";
      for (size_t i = 0; i < doc.order.size(); ++i) {
        out << "$" << labels[i] << "$";
        for (size_t k = 0; k < doc.order.size(); ++k)
          out << " & " << detail::table_cell(doc.at(doc.order[i], doc.order[k]), true);
        out << " \\\\\n";
      }
      out << "\\hline\n\\end{tabular}\n";
      break;
    }
    case TableFormat::text: {
      size_t m = doc.order.size();
      std::vector<std::vector<std::string>> cells(m + 1, std::vector<std::string>(m + 1));
      for (size_t k = 0; k < m; ++k) cells[0][k + 1] = labels[k];
      for (size_t i = 0; i < m; ++i) {
        cells[i + 1][0] = labels[i];
        for (size_t k = 0; k < m; ++k)
          cells[i + 1][k + 1] = detail::table_cell(doc.at(doc.order[i], doc.order[k]), false);
      }
      std::vector<size_t> width(m + 1, 0);
      for (const auto& row : cells)
        for (size_t k = 0; k <= m; ++k) width[k] = std::max(width[k], row[k].size());
      for (const auto& row : cells) {
        std::string line;
        for (size_t k = 0; k <= m; ++k) {
          line += row[k];
          if (k < m) line += std::string(width[k] - row[k].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
      }
      break;
    }
  }
  return out.str();
}

// Parses a table document from the JSON schema above, validating that every
// label is a double partition of n, every entry key refers to known labels,
// and no stored entry is zero.
inline TableDocument load_table_json(std::istream& in) {
  nlohmann::json j = nlohmann::json::parse(in);
  TableDocument doc;
  doc.n = j.at("n").get<int>();
  std::map<std::string, DoublePartition> by_label;
  for (const auto& item : j.at("order")) {
    DoublePartition la = parse_double_partition(item.get<std::string>());
    if (la.sum() != doc.n) throw std::runtime_error("table: label of wrong size: " + item.get<std::string>());
    if (!by_label.emplace(item.get<std::string>(), la).second)
      throw std::runtime_error("table: duplicate label: " + item.get<std::string>());
    doc.order.push_back(la);
  }
  for (const auto& [key, value] : j.at("entries").items()) {
    size_t bar = key.find('|');
    if (bar == std::string::npos) throw std::runtime_error("table: bad entry key: " + key);
    auto row = by_label.find(key.substr(0, bar));
    auto col = by_label.find(key.substr(bar + 1));
    if (row == by_label.end() || col == by_label.end())
      throw std::runtime_error("table: entry key not in order list: " + key);
    IntPoly p = IntPoly::parse(value.get<std::string>());
    if (p.is_zero()) throw std::runtime_error("table: stored zero entry: " + key);
    if (!doc.entries.emplace(std::make_pair(row->second, col->second), std::move(p)).second)
      throw std::runtime_error("table: duplicate entry: " + key);
  }
  return doc;
}

inline TableDocument load_table_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("table: cannot open " + path);
  return load_table_json(in);
}

// Location of the frozen golden table for a given n (2 <= n <= 5). The
// files are transcribed from the printed tables once and never written by
// the code under test.
inline std::string golden_table_path(int n) {
  if (n < 2 || n > 5) throw std::invalid_argument("golden_table_path: tables cover n = 2..5");
  return std::string(DKOSTKA_GOLDEN_DIR "/table") + std::to_string(n - 1) + ".json";
}

// Label-keyed comparison; returns human-readable descriptions of every
// difference, empty when the documents agree entrywise.
inline std::vector<std::string> compare_tables(const TableDocument& got,
                                               const TableDocument& want) {
  std::vector<std::string> issues;
  if (got.n != want.n) {
    issues.push_back("n mismatch: got " + std::to_string(got.n) + " want " +
                     std::to_string(want.n));
    return issues;
  }
  std::vector<DoublePartition> a = got.order, b = want.order;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (const DoublePartition& la : b)
    if (!std::binary_search(a.begin(), a.end(), la))
      issues.push_back("missing label: " + render_double_partition(la));
  for (const DoublePartition& la : a)
    if (!std::binary_search(b.begin(), b.end(), la))
      issues.push_back("extra label: " + render_double_partition(la));
  if (!issues.empty()) return issues;

  for (const DoublePartition& la : want.order)
    for (const DoublePartition& mu : want.order) {
      const IntPoly& g = got.at(la, mu);
      const IntPoly& w = want.at(la, mu);
      if (g != w)
        issues.push_back("K[" + render_double_partition(la) + "|" + render_double_partition(mu) +
                         "]: got " + g.str() + " want " + w.str());
    }
  return issues;
}

}  // namespace dkostka
