#include "hopfcoh/records.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hopfcoh {

std::string render_records(const std::vector<Record>& records) {
  std::ostringstream out;
  for (const Record& r : records) {
    for (size_t i = 0; i < r.size(); ++i) {
      if (i) out << " ";
      out << r[i].first << "=" << r[i].second;
    }
    out << "\n";
  }
  return out.str();
}

std::vector<Record> parse_records(std::string_view text) {
  std::vector<Record> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    Record rec;
    size_t p = 0;
    while (p < line.size()) {
      while (p < line.size() && line[p] == ' ') ++p;
      if (p >= line.size()) break;
      size_t sp = line.find(' ', p);
      if (sp == std::string_view::npos) sp = line.size();
      std::string_view tok = line.substr(p, sp - p);
      p = sp;
      size_t eq = tok.find('=');
      if (eq == std::string_view::npos)
        throw std::runtime_error("malformed record token: " + std::string(tok));
      rec.emplace_back(std::string(tok.substr(0, eq)), std::string(tok.substr(eq + 1)));
    }
    if (!rec.empty()) out.push_back(std::move(rec));
  }
  return out;
}

std::string render_table(const std::vector<Record>& records) {
  std::ostringstream out;
  size_t i = 0;
  while (i < records.size()) {
    // contiguous run with the same leading "record" value
    std::string kind = records[i].empty() ? "" : records[i][0].second;
    size_t j = i;
    while (j < records.size() && !records[j].empty() && records[j][0].second == kind) ++j;

    std::vector<std::string> cols;
    for (size_t r = i; r < j; ++r)
      for (const auto& [k, v] : records[r]) {
        (void)v;
        if (k != "record" && std::find(cols.begin(), cols.end(), k) == cols.end())
          cols.push_back(k);
      }
    std::map<std::string, size_t> width;
    for (const auto& c : cols) width[c] = c.size();
    for (size_t r = i; r < j; ++r)
      for (const auto& [k, v] : records[r])
        if (k != "record") width[k] = std::max(width[k], v.size());

    out << "== " << kind << " ==\n";
    out << "  ";
    for (const auto& c : cols) out << c << std::string(width[c] - c.size() + 2, ' ');
    out << "\n";
    for (size_t r = i; r < j; ++r) {
      out << "  ";
      for (const auto& c : cols) {
        std::string v;
        for (const auto& [k, val] : records[r])
          if (k == c) v = val;
        out << v << std::string(width[c] - v.size() + 2, ' ');
      }
      out << "\n";
    }
    i = j;
  }
  return out.str();
}

}  // namespace hopfcoh
