#include "specreg/data_table.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "specreg/errors.hpp"

namespace specreg {

namespace {

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(trimmed(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

double parse_cell(const std::string& cell, std::size_t row, const std::string& col) {
  if (cell.empty()) {
    throw DataError("missing value at row " + std::to_string(row) + ", column '" + col + "'");
  }
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() + cell.size() || !std::isfinite(v)) {
    throw DataError("non-numeric cell '" + cell + "' at row " + std::to_string(row) +
                    ", column '" + col + "'");
  }
  return v;
}

}  // namespace

std::string role_name(ColumnRole role) {
  switch (role) {
    case ColumnRole::outcome: return "outcome";
    case ColumnRole::special_regressor: return "special_regressor";
    case ColumnRole::regressor: return "regressor";
    case ColumnRole::instrument: return "instrument";
  }
  return "regressor";
}

ColumnRole role_from_name(const std::string& name) {
  if (name == "outcome") return ColumnRole::outcome;
  if (name == "special_regressor") return ColumnRole::special_regressor;
  if (name == "regressor") return ColumnRole::regressor;
  if (name == "instrument") return ColumnRole::instrument;
  throw DataError("unknown column role '" + name + "'");
}

DataTable::DataTable(std::vector<Column> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw DataError("DataTable requires at least one column");
  n_rows_ = columns_.front().values.size();
  if (n_rows_ < 2) throw DataError("DataTable requires n_rows >= 2, got " + std::to_string(n_rows_));
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    const auto& col = columns_[i];
    if (col.values.size() != n_rows_) {
      throw DataError("column '" + col.name + "' has length " +
                      std::to_string(col.values.size()) + ", expected " + std::to_string(n_rows_));
    }
    if (!by_name_.emplace(col.name, i).second) {
      throw DataError("duplicate column name '" + col.name + "'");
    }
    for (std::size_t r = 0; r < n_rows_; ++r) {
      if (!std::isfinite(col.values[r])) {
        throw DataError("non-finite value at row " + std::to_string(r + 1) + ", column '" +
                        col.name + "'");
      }
      if (col.role == ColumnRole::outcome && col.values[r] != 0.0 && col.values[r] != 1.0) {
        throw DataError("non-binary outcome at row " + std::to_string(r + 1) + ", column '" +
                        col.name + "'");
      }
    }
  }
}

const Column& DataTable::column(const std::string& name) const {
  return columns_[index_of(name)];
}

std::size_t DataTable::index_of(const std::string& name) const {
  const auto it = by_name_.find(name);
  if (it == by_name_.end()) throw DataError("no column named '" + name + "'");
  return it->second;
}

bool DataTable::has_column(const std::string& name) const {
  return by_name_.count(name) > 0;
}

std::vector<std::string> DataTable::names() const {
  std::vector<std::string> out;
  out.reserve(columns_.size());
  for (const auto& c : columns_) out.push_back(c.name);
  return out;
}

std::vector<std::size_t> DataTable::columns_with_role(ColumnRole role) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].role == role) out.push_back(i);
  }
  return out;
}

std::size_t DataTable::outcome_index() const {
  const auto idx = columns_with_role(ColumnRole::outcome);
  if (idx.size() != 1) {
    throw DataError("expected exactly one outcome column, found " + std::to_string(idx.size()));
  }
  return idx.front();
}

std::size_t DataTable::special_regressor_index() const {
  const auto idx = columns_with_role(ColumnRole::special_regressor);
  if (idx.size() != 1) {
    throw DataError("expected exactly one special_regressor column, found " +
                    std::to_string(idx.size()));
  }
  return idx.front();
}

Eigen::VectorXd DataTable::vector(std::size_t i) const {
  const auto& v = columns_.at(i).values;
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Eigen::VectorXd DataTable::vector(const std::string& name) const {
  return vector(index_of(name));
}

Eigen::MatrixXd DataTable::matrix(const std::vector<std::size_t>& indices) const {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n_rows_), static_cast<Eigen::Index>(indices.size()));
  for (std::size_t j = 0; j < indices.size(); ++j) {
    m.col(static_cast<Eigen::Index>(j)) = vector(indices[j]);
  }
  return m;
}

void DataTable::save_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open '" + path + "' for writing");
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    out << (i ? "," : "") << columns_[i].name;
  }
  out << "\n";
  char buf[40];
  for (std::size_t r = 0; r < n_rows_; ++r) {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      // %.17g round-trips IEEE doubles exactly.
      std::snprintf(buf, sizeof(buf), "%.17g", columns_[i].values[r]);
      out << (i ? "," : "") << buf;
    }
    out << "\n";
  }
}

DataTable load_csv(const std::string& path, const std::map<std::string, ColumnRole>& role_map) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw DataError("file '" + path + "' is empty");
  const auto header = split_csv_line(line);
  if (header.empty()) throw DataError("file '" + path + "' has an empty header row");

  std::vector<Column> columns(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) {
    columns[i].name = header[i];
    const auto it = role_map.find(header[i]);
    columns[i].role = it == role_map.end() ? ColumnRole::regressor : it->second;
  }
  for (const auto& [name, role] : role_map) {
    (void)role;
    bool found = false;
    for (const auto& h : header) found = found || h == name;
    if (!found) throw DataError("role_map references missing column '" + name + "'");
  }

  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (trimmed(line).empty()) continue;
    ++row;
    const auto cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      throw DataError("row " + std::to_string(row) + " has " + std::to_string(cells.size()) +
                      " cells, expected " + std::to_string(header.size()));
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      columns[i].values.push_back(parse_cell(cells[i], row, header[i]));
    }
  }
  if (row < 2) throw DataError("n_rows < 2 in file '" + path + "'");
  return DataTable(std::move(columns));
}

}  // namespace specreg
