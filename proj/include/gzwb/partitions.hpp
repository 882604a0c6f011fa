#ifndef GZWB_PARTITIONS_HPP
#define GZWB_PARTITIONS_HPP

#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gzwb {

/// Nonincreasing positive parts; the empty partition is the partition of 0.
using Partition = std::vector<int>;

inline int size_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline bool is_partition(const Partition& p)
{
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

/// "(2,1)", "(3)", "()" for the empty partition.
inline std::string label(const Partition& p)
{
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

inline Partition parse_partition(const std::string& text)
{
  std::string s = text;
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw std::invalid_argument("partition must look like (3,1): " + text);
  }
  Partition p;
  std::string body = s.substr(1, s.size() - 2);
  std::stringstream ss(body);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) throw std::invalid_argument("empty part in " + text);
    std::size_t pos = 0;
    int v = std::stoi(part, &pos);
    if (pos != part.size()) throw std::invalid_argument("bad part in " + text);
    p.push_back(v);
  }
  if (!is_partition(p)) throw std::invalid_argument("not a partition: " + text);
  return p;
}

/// Partitions of n in reverse lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> partitions_of(int n)
{
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline Partition conjugate(const Partition& p)
{
  Partition c;
  if (p.empty()) return c;
  for (int j = 0; j < p.front(); ++j) {
    int len = 0;
    for (int part : p) if (part > j) ++len;
    c.push_back(len);
  }
  return c;
}

/// Number of standard Young tableaux by the hook length formula.
inline std::uint64_t hook_length_dimension(const Partition& p)
{
  Partition c = conjugate(p);
  const int n = size_of(p);
  mpz_class num = 1;
  for (int k = 2; k <= n; ++k) num *= k;
  mpz_class den = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      den *= (p[i] - j - 1) + (c[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
    }
  }
  mpz_class q = num / den;
  return q.get_ui();
}

/// Partitions obtained by adding one box, with the content (column - row) of the box.
inline std::vector<std::pair<Partition, int>> add_box(const Partition& p)
{
  std::vector<std::pair<Partition, int>> out;
  for (std::size_t r = 0; r <= p.size(); ++r) {
    int row_len = r < p.size() ? p[r] : 0;
    if (r > 0 && p[r - 1] <= row_len) continue;
    Partition q = p;
    if (r < q.size()) ++q[r];
    else q.push_back(1);
    out.emplace_back(std::move(q), row_len - static_cast<int>(r));
  }
  return out;
}

inline bool contained_with_one_box(const Partition& mu, const Partition& lambda)
{
  for (const auto& [q, c] : add_box(mu)) {
    if (q == lambda) return true;
  }
  return false;
}

/// chi_lambda at cycle type rho via the Murnaghan-Nakayama rule, using
/// beta-sets: removing a rim hook of length r moves one bead down by r, with
/// sign (-1)^(beads jumped over).
inline long mn_character(const Partition& lambda, const Partition& rho)
{
  if (size_of(lambda) != size_of(rho)) throw std::invalid_argument("mn_character: size mismatch");
  if (!is_partition(lambda) || !is_partition(rho)) throw std::invalid_argument("mn_character: not a partition");
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta;
  for (int i = 0; i < len; ++i) beta.push_back(lambda[static_cast<std::size_t>(i)] + (len - 1 - i));
  std::map<std::pair<std::vector<int>, std::size_t>, long> memo;
  std::function<long(std::vector<int>&, std::size_t)> rec = [&](std::vector<int>& b, std::size_t step) -> long {
    if (step == rho.size()) return 1;
    auto key = std::make_pair(b, step);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int r = rho[step];
    long total = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      int target = b[i] - r;
      if (target < 0 || std::find(b.begin(), b.end(), target) != b.end()) continue;
      int jumped = 0;
      for (int x : b) if (x > target && x < b[i]) ++jumped;
      int saved = b[i];
      b[i] = target;
      long sub = rec(b, step + 1);
      b[i] = saved;
      total += (jumped % 2 == 0 ? 1 : -1) * sub;
    }
    memo.emplace(std::move(key), total);
    return total;
  };
  return rec(beta, 0);
}

/// Size of the conjugacy class of S_n with cycle type rho: n! / z_rho.
inline mpz_class class_size(const Partition& rho)
{
  mpz_class n_fact = 1;
  for (int k = 2; k <= size_of(rho); ++k) n_fact *= k;
  mpz_class z = 1;
  std::map<int, int> mult;
  for (int part : rho) ++mult[part];
  for (auto [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= part;
    for (int i = 2; i <= m; ++i) z *= i;
  }
  return n_fact / z;
}

} // namespace gzwb

#endif // GZWB_PARTITIONS_HPP
