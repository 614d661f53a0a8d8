#include "secoh/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace secoh {

namespace {

auto find_col(std::vector<IntMatrix::Entry>& row, std::size_t j) {
  return std::lower_bound(row.begin(), row.end(), j,
                          [](const IntMatrix::Entry& e, std::size_t c) { return e.col < c; });
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.resize(rows_);
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    std::size_t j = 0;
    for (long long v : r) {
      if (v != 0) data_[i].push_back({j, Integer(v)});
      ++j;
    }
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, Integer(1)});
  return m;
}

IntMatrix IntMatrix::diagonal(std::size_t rows, std::size_t cols, std::span<const Integer> d) {
  if (d.size() > std::min(rows, cols)) throw std::invalid_argument("diagonal longer than matrix");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i].is_zero()) m.data_[i].push_back({i, d[i]});
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) {
      if (!columns[j][i].is_zero()) m.data_[i].push_back({j, columns[j][i]});
    }
  }
  return m;
}

IntMatrix IntMatrix::hstack(const IntMatrix& left, const IntMatrix& right) {
  if (left.rows_ != right.rows_) throw std::invalid_argument("hstack: row counts differ");
  IntMatrix m(left.rows_, left.cols_ + right.cols_);
  for (std::size_t i = 0; i < left.rows_; ++i) {
    auto& out = m.data_[i];
    out.reserve(left.data_[i].size() + right.data_[i].size());
    out.insert(out.end(), left.data_[i].begin(), left.data_[i].end());
    for (const auto& e : right.data_[i]) out.push_back({e.col + left.cols_, e.value});
  }
  return m;
}

std::size_t IntMatrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

void IntMatrix::check(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw std::out_of_range("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

Integer IntMatrix::at(std::size_t i, std::size_t j) const {
  check(i, j);
  const auto& row = data_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it != row.end() && it->col == j) return it->value;
  return Integer(0);
}

void IntMatrix::set(std::size_t i, std::size_t j, const Integer& v) {
  check(i, j);
  auto& row = data_[i];
  auto it = find_col(row, j);
  if (it != row.end() && it->col == j) {
    if (v.is_zero()) {
      row.erase(it);
    } else {
      it->value = v;
    }
  } else if (!v.is_zero()) {
    row.insert(it, {j, v});
  }
}

void IntMatrix::add(std::size_t i, std::size_t j, const Integer& v) {
  check(i, j);
  if (v.is_zero()) return;
  auto& row = data_[i];
  auto it = find_col(row, j);
  if (it != row.end() && it->col == j) {
    it->value += v;
    if (it->value.is_zero()) row.erase(it);
  } else {
    row.insert(it, {j, v});
  }
}

std::span<const IntMatrix::Entry> IntMatrix::row(std::size_t i) const {
  if (i >= rows_) throw std::out_of_range("row index outside matrix");
  return data_[i];
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  if (j >= cols_) throw std::out_of_range("column index outside matrix");
  std::vector<Integer> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

std::vector<std::vector<Integer>> IntMatrix::columns() const {
  std::vector<std::vector<Integer>> out(cols_, std::vector<Integer>(rows_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i]) out[e.col][i] = e.value;
  }
  return out;
}

std::vector<Integer> IntMatrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: vector length does not match column count");
  std::vector<Integer> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i]) {
      if (!x[e.col].is_zero()) y[i].addmul(e.value, x[e.col]);
    }
  }
  return y;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i]) t.data_[e.col].push_back({i, e.value});
  }
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner dimensions differ");
  IntMatrix c(a.rows_, b.cols_);
  std::vector<Integer> acc(b.cols_);
  std::vector<char> touched(b.cols_, 0);
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    cols.clear();
    for (const auto& ea : a.data_[i]) {
      for (const auto& eb : b.data_[ea.col]) {
        if (!touched[eb.col]) {
          touched[eb.col] = 1;
          cols.push_back(eb.col);
        }
        acc[eb.col].addmul(ea.value, eb.value);
      }
    }
    std::sort(cols.begin(), cols.end());
    for (std::size_t j : cols) {
      if (!acc[j].is_zero()) c.data_[i].push_back({j, acc[j]});
      acc[j] = Integer(0);
      touched[j] = 0;
    }
  }
  return c;
}

bool IntMatrix::is_diagonal() const noexcept {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i]) {
      if (e.col != i) return false;
    }
  }
  return true;
}

std::vector<Integer> IntMatrix::diagonal_entries() const {
  std::size_t n = std::min(rows_, cols_);
  std::vector<Integer> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = at(i, i);
  return d;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    const auto& ra = a.data_[i];
    const auto& rb = b.data_[i];
    if (ra.size() != rb.size()) return false;
    for (std::size_t k = 0; k < ra.size(); ++k) {
      if (ra[k].col != rb[k].col || !(ra[k].value == rb[k].value)) return false;
    }
  }
  return true;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace secoh
