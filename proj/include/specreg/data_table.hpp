#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace specreg {

enum class ColumnRole { outcome, special_regressor, regressor, instrument };

std::string role_name(ColumnRole role);
ColumnRole role_from_name(const std::string& name);

struct Column {
  std::string name;
  ColumnRole role = ColumnRole::regressor;
  std::vector<double> values;
};

// Column-labeled numeric sample. Immutable after construction and safe to
// share across threads. All columns have equal length n >= 2 and unique
// names; an outcome column must be 0/1 valued.
class DataTable {
 public:
  explicit DataTable(std::vector<Column> columns);

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cols() const { return columns_.size(); }

  const Column& column(std::size_t i) const { return columns_.at(i); }
  const Column& column(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;
  bool has_column(const std::string& name) const;

  std::vector<std::string> names() const;
  std::vector<std::size_t> columns_with_role(ColumnRole role) const;

  // Unique outcome / special regressor columns; throws unless exactly one of
  // each is present. Estimators call this before touching the data.
  std::size_t outcome_index() const;
  std::size_t special_regressor_index() const;

  Eigen::VectorXd vector(std::size_t i) const;
  Eigen::VectorXd vector(const std::string& name) const;
  // Columns gathered into a dense matrix, in the order given.
  Eigen::MatrixXd matrix(const std::vector<std::size_t>& indices) const;

  void save_csv(const std::string& path) const;

 private:
  std::vector<Column> columns_;
  std::map<std::string, std::size_t> by_name_;
  std::size_t n_rows_ = 0;
};

// Reads a CSV file (header row, comma delimiter, '.' decimal point). Columns
// named in role_map get that role; anything else defaults to regressor.
// Rejects non-numeric or missing cells, duplicate names, and non-binary
// outcomes.
DataTable load_csv(const std::string& path,
                   const std::map<std::string, ColumnRole>& role_map);

}  // namespace specreg
