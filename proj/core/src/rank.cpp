#include "rank.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <type_traits>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace cmreg::detail {

namespace {

using boost::multiprecision::cpp_int;

/** Bareiss condensation. After step k every entry is (up to sign) a
 *  (k+1)x(k+1) minor of the input, so the division by the previous pivot is
 *  exact. Row/column swaps just permute which minors appear. Pivots are
 *  chosen with smallest absolute value to slow entry growth. */
template <class Int, class Abs>
int bareiss_rank(std::vector<Int> a, int rows, int cols, Abs abs_less,
                 bool* overflow) {
  auto at = [&](int r, int c) -> Int& { return a[static_cast<std::size_t>(r) * cols + c]; };
  Int prev = 1;
  int rank = 0;
  for (; rank < std::min(rows, cols); ++rank) {
    int pr = -1, pc = -1;
    for (int r = rank; r < rows; ++r) {
      for (int c = rank; c < cols; ++c) {
        if (at(r, c) != 0 && (pr < 0 || abs_less(at(r, c), at(pr, pc)))) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr < 0) break;  // remaining block is zero
    if (pr != rank) {
      for (int c = 0; c < cols; ++c) std::swap(at(pr, c), at(rank, c));
    }
    if (pc != rank) {
      for (int r = 0; r < rows; ++r) std::swap(at(r, pc), at(r, rank));
    }
    Int pivot = at(rank, rank);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = rank + 1; c < cols; ++c) {
        if constexpr (std::is_same_v<Int, long long>) {
          __int128 num = static_cast<__int128>(at(r, c)) * pivot -
                         static_cast<__int128>(at(r, rank)) * at(rank, c);
          __int128 q = num / prev;  // exact by the minor identity
          if (q < INT64_MIN || q > INT64_MAX) {
            *overflow = true;
            return -1;
          }
          at(r, c) = static_cast<long long>(q);
        } else {
          at(r, c) = (at(r, c) * pivot - at(r, rank) * at(rank, c)) / prev;
        }
      }
      at(r, rank) = 0;
    }
    prev = pivot;
  }
  return rank;
}

int rank_rationals(const IntMatrix& m) {
  bool overflow = false;
  int r = bareiss_rank<long long>(
      m.a, m.rows, m.cols,
      [](long long x, long long y) { return std::llabs(x) < std::llabs(y); }, &overflow);
  if (!overflow) return r;
  std::vector<cpp_int> big(m.a.begin(), m.a.end());
  return bareiss_rank<cpp_int>(
      std::move(big), m.rows, m.cols,
      [](const cpp_int& x, const cpp_int& y) { return abs(x) < abs(y); }, &overflow);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t out = 1;
  base %= p;
  while (exp) {
    if (exp & 1) out = out * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return out;
}

int rank_mod_p(const IntMatrix& m, std::uint32_t p) {
  std::vector<std::uint64_t> a(m.a.size());
  for (std::size_t i = 0; i < m.a.size(); ++i) {
    long long v = m.a[i] % static_cast<long long>(p);
    a[i] = static_cast<std::uint64_t>(v < 0 ? v + p : v);
  }
  auto at = [&](int r, int c) -> std::uint64_t& {
    return a[static_cast<std::size_t>(r) * m.cols + c];
  };
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int pr = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (at(r, c) != 0) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != rank) {
      for (int cc = c; cc < m.cols; ++cc) std::swap(at(pr, cc), at(rank, cc));
    }
    std::uint64_t inv = pow_mod(at(rank, c), p - 2, p);
    for (int r = rank + 1; r < m.rows; ++r) {
      if (at(r, c) == 0) continue;
      std::uint64_t f = at(r, c) * inv % p;
      for (int cc = c; cc < m.cols; ++cc) {
        at(r, cc) = (at(r, cc) + (p - f) * at(rank, cc)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int rank_over(const IntMatrix& m, const FieldSpec& field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (field.is_rationals()) return rank_rationals(m);
  return rank_mod_p(m, field.characteristic());
}

}  // namespace cmreg::detail
