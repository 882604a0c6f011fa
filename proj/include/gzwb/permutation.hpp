#ifndef GZWB_PERMUTATION_HPP
#define GZWB_PERMUTATION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gzwb {

/// A permutation of {1..n} in one-line notation.
///
/// Permutations of different degree compare as if the shorter one were
/// padded with fixed points, so S_{n-1} embeds into S_n without any
/// explicit conversion. Composition follows (s*t)(x) = s(t(x)).
class Permutation
{
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images)
  : images_(std::move(images))
  {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int x : images_) {
      if (x < 1 || x > static_cast<int>(images_.size()) || seen[x]) {
        throw std::invalid_argument("images do not form a bijection of {1..n}");
      }
      seen[x] = true;
    }
  }

  static Permutation identity(int n)
  {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
  }

  /// Builds a permutation of degree n from disjoint or overlapping cycles,
  /// composed right to left.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles)
  {
    Permutation result = identity(n);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      const auto& cyc = *it;
      std::vector<int> im(static_cast<std::size_t>(n));
      std::iota(im.begin(), im.end(), 1);
      std::vector<int> sorted = cyc;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("repeated letter in a cycle");
      }
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        int from = cyc[i];
        int to = cyc[(i + 1) % cyc.size()];
        if (from < 1 || from > n || to < 1 || to > n) {
          throw std::invalid_argument("cycle entry out of range");
        }
        im[static_cast<std::size_t>(from - 1)] = to;
      }
      result = Permutation(std::move(im)) * result;
    }
    return result;
  }

  static Permutation transposition(int n, int i, int j)
  {
    return from_cycles(n, {{i, j}});
  }

  /// Parses cycle notation such as "(1 2)(3 4 5)" or "()" for the identity.
  static Permutation parse_cycles(int n, const std::string& text)
  {
    std::vector<std::vector<int>> cycles;
    std::vector<int> current;
    bool open = false;
    std::string num;
    auto flush = [&] {
      if (!num.empty()) {
        current.push_back(std::stoi(num));
        num.clear();
      }
    };
    for (char c : text) {
      if (c == '(') {
        if (open) throw std::invalid_argument("nested '(' in cycle notation");
        open = true;
        current.clear();
      } else if (c == ')') {
        if (!open) throw std::invalid_argument("unbalanced ')' in cycle notation");
        flush();
        if (current.size() > 1) cycles.push_back(current);
        open = false;
      } else if (c >= '0' && c <= '9') {
        if (!open) throw std::invalid_argument("digit outside of a cycle");
        num.push_back(c);
      } else if (c == ' ' || c == ',') {
        flush();
      } else {
        throw std::invalid_argument(std::string("unexpected character '") + c + "'");
      }
    }
    if (open) throw std::invalid_argument("unterminated cycle");
    return from_cycles(n, cycles);
  }

  int degree() const { return static_cast<int>(images_.size()); }

  const std::vector<int>& images() const { return images_; }

  int operator()(int x) const
  {
    if (x >= 1 && x <= degree()) return images_[static_cast<std::size_t>(x - 1)];
    return x;
  }

  Permutation inverse() const
  {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(inv));
  }

  Permutation padded(int n) const
  {
    if (n < degree()) {
      if (largest_moved_point() > n) {
        throw std::invalid_argument("cannot shrink a permutation below its support");
      }
      return Permutation(std::vector<int>(images_.begin(), images_.begin() + n));
    }
    std::vector<int> im = images_;
    for (int x = degree() + 1; x <= n; ++x) im.push_back(x);
    return Permutation(std::move(im));
  }

  int largest_moved_point() const
  {
    for (int x = degree(); x >= 1; --x) {
      if (images_[static_cast<std::size_t>(x - 1)] != x) return x;
    }
    return 0;
  }

  bool is_identity() const { return largest_moved_point() == 0; }

  /// Cycle lengths in nonincreasing order, restricted to the letters
  /// {1..n}; fixed points count as 1-cycles. n defaults to the degree.
  std::vector<int> cycle_type(int n = -1) const
  {
    if (n < 0) n = degree();
    if (largest_moved_point() > n) {
      throw std::invalid_argument("permutation moves letters beyond n");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> lengths;
    for (int x = 1; x <= n; ++x) {
      if (seen[static_cast<std::size_t>(x)]) continue;
      int len = 0;
      for (int y = x; !seen[static_cast<std::size_t>(y)]; y = (*this)(y)) {
        seen[static_cast<std::size_t>(y)] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
  }

  int sign() const
  {
    int transpositions = 0;
    for (int len : cycle_type()) transpositions += len - 1;
    return transpositions % 2 == 0 ? 1 : -1;
  }

  std::string cycle_notation() const
  {
    std::ostringstream os;
    std::vector<bool> seen(images_.size() + 1, false);
    for (int x = 1; x <= degree(); ++x) {
      if (seen[static_cast<std::size_t>(x)] || (*this)(x) == x) continue;
      os << '(';
      bool first = true;
      for (int y = x; !seen[static_cast<std::size_t>(y)]; y = (*this)(y)) {
        seen[static_cast<std::size_t>(y)] = true;
        if (!first) os << ' ';
        os << y;
        first = false;
      }
      os << ')';
    }
    std::string s = os.str();
    return s.empty() ? "()" : s;
  }

  friend Permutation operator*(const Permutation& s, const Permutation& t)
  {
    int n = std::max(s.degree(), t.degree());
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) im[static_cast<std::size_t>(x - 1)] = s(t(x));
    Permutation r;
    r.images_ = std::move(im);
    return r;
  }

  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b)
  {
    int n = std::max(a.degree(), b.degree());
    for (int x = 1; x <= n; ++x) {
      if (auto c = a(x) <=> b(x); c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  friend bool operator==(const Permutation& a, const Permutation& b)
  {
    return (a <=> b) == 0;
  }

private:
  std::vector<int> images_;
};

} // namespace gzwb

#endif // GZWB_PERMUTATION_HPP
