#pragma once

// Exact cover by dancing links (Knuth's Algorithm X).
//
// Columns are all primary. Column selection picks the column with the
// fewest remaining rows, ties going to the lowest column index; rows of a
// column are tried in insertion order. The search is deterministic.

#include <chrono>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace adet {

class ExactCover {
 public:
  enum class Status { found, infeasible, limit };

  struct Limits {
    std::uint64_t max_nodes = UINT64_MAX;
    std::chrono::steady_clock::time_point deadline =
        std::chrono::steady_clock::time_point::max();
  };

  explicit ExactCover(std::size_t columns) : columns_(columns) {
    nodes_.resize(columns + 1);
    size_.assign(columns + 1, 0);
    for (std::size_t c = 0; c <= columns; ++c) {
      Node& h = nodes_[c];
      h.left = c == 0 ? columns : c - 1;
      h.right = c == columns ? 0 : c + 1;
      h.up = h.down = c;
      h.column = c;
      h.row = SIZE_MAX;
    }
  }

  std::size_t num_columns() const noexcept { return columns_; }
  std::size_t num_rows() const noexcept { return rows_; }

  /// Adds a row covering the given (distinct, 0-based) columns.
  std::size_t add_row(std::span<const std::uint32_t> cols) {
    if (cols.empty()) throw std::invalid_argument("ExactCover: empty row");
    const std::size_t row = rows_++;
    const std::size_t first = nodes_.size();
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const std::size_t c = static_cast<std::size_t>(cols[k]) + 1;
      if (c > columns_) throw std::out_of_range("ExactCover: bad column");
      Node node;
      node.column = c;
      node.row = row;
      node.up = nodes_[c].up;
      node.down = c;
      node.left = k == 0 ? nodes_.size() : nodes_.size() - 1;
      node.right = first;
      const std::size_t id = nodes_.size();
      nodes_.push_back(node);
      nodes_[nodes_[c].up].down = id;
      nodes_[c].up = id;
      if (k > 0) nodes_[id - 1].right = id;
      nodes_[first].left = id;
      ++size_[c];
    }
    return row;
  }

  /// Runs the search once. On `found`, `solution` holds the chosen rows.
  Status solve(std::vector<std::size_t>& solution) {
    return solve(solution, Limits{});
  }

  Status solve(std::vector<std::size_t>& solution, const Limits& limits) {
    limits_ = limits;
    solution_.clear();
    explored_ = 0;
    Status s;
    try {
      s = search() ? Status::found : Status::infeasible;
    } catch (const LimitHit&) {
      s = Status::limit;
    }
    solution = solution_;
    return s;
  }

  std::uint64_t nodes_explored() const noexcept { return explored_; }

 private:
  struct Node {
    std::size_t left, right, up, down, column, row;
  };
  struct LimitHit {};

  void cover(std::size_t c) {
    nodes_[nodes_[c].right].left = nodes_[c].left;
    nodes_[nodes_[c].left].right = nodes_[c].right;
    for (std::size_t i = nodes_[c].down; i != c; i = nodes_[i].down) {
      for (std::size_t j = nodes_[i].right; j != i; j = nodes_[j].right) {
        nodes_[nodes_[j].down].up = nodes_[j].up;
        nodes_[nodes_[j].up].down = nodes_[j].down;
        --size_[nodes_[j].column];
      }
    }
  }

  void uncover(std::size_t c) {
    for (std::size_t i = nodes_[c].up; i != c; i = nodes_[i].up) {
      for (std::size_t j = nodes_[i].left; j != i; j = nodes_[j].left) {
        ++size_[nodes_[j].column];
        nodes_[nodes_[j].down].up = j;
        nodes_[nodes_[j].up].down = j;
      }
    }
    nodes_[nodes_[c].right].left = c;
    nodes_[nodes_[c].left].right = c;
  }

  bool search() {
    if (nodes_[0].right == 0) return true;
    std::size_t best = 0;
    std::size_t best_size = SIZE_MAX;
    for (std::size_t c = nodes_[0].right; c != 0; c = nodes_[c].right) {
      if (size_[c] < best_size) {
        best = c;
        best_size = size_[c];
        if (best_size == 0) return false;
      }
    }
    cover(best);
    for (std::size_t r = nodes_[best].down; r != best; r = nodes_[r].down) {
      if (++explored_ > limits_.max_nodes) throw LimitHit{};
      if ((explored_ & 0x3ff) == 0 &&
          std::chrono::steady_clock::now() > limits_.deadline) {
        throw LimitHit{};
      }
      solution_.push_back(nodes_[r].row);
      for (std::size_t j = nodes_[r].right; j != r; j = nodes_[j].right) {
        cover(nodes_[j].column);
      }
      if (search()) return true;
      for (std::size_t j = nodes_[r].left; j != r; j = nodes_[j].left) {
        uncover(nodes_[j].column);
      }
      solution_.pop_back();
    }
    uncover(best);
    return false;
  }

  std::size_t columns_ = 0;
  std::size_t rows_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> solution_;
  Limits limits_;
  std::uint64_t explored_ = 0;
};

}  // namespace adet
