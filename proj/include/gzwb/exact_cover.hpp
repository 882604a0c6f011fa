#ifndef GZWB_EXACT_COVER_HPP
#define GZWB_EXACT_COVER_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace gzwb {

/// Exact cover by deterministic backtracking (Knuth's Algorithm X on plain
/// vectors). Options are tried in insertion order and the column with the
/// fewest live options is branched on first, ties broken by column index,
/// so the enumeration order is reproducible.
class ExactCover
{
public:
  explicit ExactCover(std::size_t columns) : columns_(columns), by_column_(columns) {}

  std::size_t add_option(std::vector<std::size_t> cols)
  {
    std::sort(cols.begin(), cols.end());
    if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) {
      throw std::invalid_argument("option lists a column twice");
    }
    for (auto c : cols) {
      if (c >= columns_) throw std::out_of_range("option column out of range");
    }
    std::size_t id = options_.size();
    for (auto c : cols) by_column_[c].push_back(id);
    options_.push_back(std::move(cols));
    return id;
  }

  std::size_t column_count() const { return columns_; }
  std::size_t option_count() const { return options_.size(); }

  /// Calls visit(chosen option ids, sorted) for each cover; stop by returning false.
  void solve(const std::function<bool(const std::vector<std::size_t>&)>& visit) const
  {
    std::vector<int> covered(columns_, 0);
    std::vector<int> blocked(options_.size(), 0);
    std::vector<std::size_t> chosen;
    recurse(covered, blocked, chosen, visit);
  }

  std::vector<std::vector<std::size_t>> all_solutions() const
  {
    std::vector<std::vector<std::size_t>> out;
    solve([&out](const std::vector<std::size_t>& s) {
      out.push_back(s);
      return true;
    });
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  bool recurse(std::vector<int>& covered, std::vector<int>& blocked, std::vector<std::size_t>& chosen,
               const std::function<bool(const std::vector<std::size_t>&)>& visit) const
  {
    std::size_t best = columns_;
    std::size_t best_count = static_cast<std::size_t>(-1);
    for (std::size_t c = 0; c < columns_; ++c) {
      if (covered[c]) continue;
      std::size_t live = 0;
      for (auto o : by_column_[c]) if (!blocked[o]) ++live;
      if (live < best_count) {
        best = c;
        best_count = live;
      }
    }
    if (best == columns_) {
      auto sol = chosen;
      std::sort(sol.begin(), sol.end());
      return visit(sol);
    }
    if (best_count == 0) return true;
    for (auto o : by_column_[best]) {
      if (blocked[o]) continue;
      // select o: cover its columns, block every option meeting them
      for (auto c : options_[o]) {
        ++covered[c];
        for (auto other : by_column_[c]) ++blocked[other];
      }
      chosen.push_back(o);
      bool keep_going = recurse(covered, blocked, chosen, visit);
      chosen.pop_back();
      for (auto c : options_[o]) {
        --covered[c];
        for (auto other : by_column_[c]) --blocked[other];
      }
      if (!keep_going) return false;
    }
    return true;
  }

  std::size_t columns_;
  std::vector<std::vector<std::size_t>> options_;
  std::vector<std::vector<std::size_t>> by_column_;
};

} // namespace gzwb

#endif // GZWB_EXACT_COVER_HPP
