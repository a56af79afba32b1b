#include "chandas/render.hpp"

#include <algorithm>
#include <cstddef>

namespace chandas {

namespace {

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string lpad(const std::string& s, std::size_t width) {
  return std::string(width - std::min(width, s.size()), ' ') + s;
}

std::string rpad(const std::string& s, std::size_t width) {
  return s + std::string(width - std::min(width, s.size()), ' ');
}

// Renders a ragged grid of decimal cells, left-justified to per-column
// widths, columns joined by two spaces, no trailing spaces.
std::string grid_text(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (row.size() > widths.size()) widths.resize(row.size(), 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      widths[j] = std::max(widths[j], row[j].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) line += "  ";
      line += rpad(row[j], widths[j]);
    }
    out += rstrip(std::move(line));
    out += '\n';
  }
  return out;
}

}  // namespace

std::string prastara_text(const Prastara& p, Notation notation,
                          bool numbered) {
  const std::size_t width = std::to_string(p.rows.size()).size();
  std::string out;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    if (numbered) {
      out += lpad(std::to_string(i + 1), width);
      out += ' ';
    }
    out += p.rows[i].str(notation);
    out += '\n';
  }
  return out;
}

std::string lagakriya_text(const LagakriyaTable& table) {
  std::vector<std::vector<std::string>> cells;
  cells.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    std::vector<std::string> line;
    line.reserve(row.size());
    for (const Natural& v : row) line.push_back(v.str());
    cells.push_back(std::move(line));
  }
  return grid_text(cells);
}

std::string meru_text(const MeruPyramid& pyramid) {
  if (pyramid.rows.empty()) return "";
  std::size_t cell = 0;
  for (const auto& row : pyramid.rows) {
    for (const Natural& v : row) cell = std::max(cell, v.str().size());
  }
  const std::size_t bottom =
      pyramid.rows.size() * cell + (pyramid.rows.size() - 1);
  std::string out;
  for (const auto& row : pyramid.rows) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) line += ' ';
      line += lpad(row[j].str(), cell);
    }
    out += rstrip(std::string((bottom - line.size()) / 2, ' ') + line);
    out += '\n';
  }
  return out;
}

std::string pataka_text(const PatakaMatrix& matrix) {
  std::size_t depth = 0;
  for (const auto& column : matrix.columns) {
    depth = std::max(depth, column.size());
  }
  std::vector<std::vector<std::string>> cells(depth);
  for (const auto& column : matrix.columns) {
    for (std::size_t i = 0; i < depth; ++i) {
      cells[i].push_back(i < column.size() ? column[i].str() : "");
    }
  }
  // Per-column widths must come from the full columns, so blanks in later
  // rows do not shrink them; grid_text already scans every row.
  return grid_text(cells);
}

std::string sankhya_trace_text(const SankhyaTrace& trace) {
  const std::string input = std::to_string(trace.input);
  std::string out = "reduce:\n";
  out += rstrip("  " + input);
  out += '\n';
  std::uint64_t v = trace.input;
  for (const SankhyaToken token : trace.tokens) {
    v = token == SankhyaToken::Halve ? v / 2 : v - 1;
    out += rstrip("  " + rpad(std::to_string(v), input.size()) + "  " +
                  token_digit(token));
    out += '\n';
  }
  out += "replay:\n";
  std::string prev = "1";
  for (std::size_t i = 0; i < trace.replay.size(); ++i) {
    const SankhyaToken token = trace.tokens[trace.tokens.size() - 1 - i];
    const std::string product = trace.replay[i].str();
    out += "  ";
    out += token_digit(token);
    out += "  ";
    out += prev;
    out += token == SankhyaToken::Halve ? "^2 = " : "*2 = ";
    out += product;
    out += '\n';
    prev = product;
  }
  out += "result: " + trace.result.str() + '\n';
  return out;
}

std::string values_line(const std::vector<Natural>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += values[i].str();
  }
  out += '\n';
  return out;
}

}  // namespace chandas
