#include "hamflow/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace hamflow {

namespace {

int64_t chk_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("smith normal form: 64-bit overflow");
  return r;
}

int64_t chk_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("smith normal form: 64-bit overflow");
  return r;
}

int64_t chk_abs(int64_t a) {
  if (a == INT64_MIN)
    throw std::overflow_error("smith normal form: 64-bit overflow");
  return a < 0 ? -a : a;
}

}  // namespace

std::vector<std::vector<int64_t>> boundary_matrix(const OrderComplex& k,
                                                  int d) {
  const size_t rows =
      d >= 1 && d - 1 <= k.dim() ? k.simplices[d - 1].size() : 0;
  const size_t cols = d >= 0 && d <= k.dim() ? k.simplices[d].size() : 0;
  std::vector<std::vector<int64_t>> m(rows, std::vector<int64_t>(cols, 0));
  if (d < 1 || rows == 0 || cols == 0) return m;
  std::map<std::vector<int>, int> row_of;
  for (size_t r = 0; r < rows; ++r) row_of[k.simplices[d - 1][r]] = r;
  for (size_t c = 0; c < cols; ++c) {
    const std::vector<int>& s = k.simplices[d][c];
    std::vector<int> face(s.begin() + 1, s.end());
    for (int i = 0; i <= d; ++i) {
      m[row_of.at(face)][c] += i % 2 ? -1 : 1;
      if (i < d) face[i] = s[i];  // slide the omitted vertex
    }
  }
  return m;
}

std::vector<int64_t> smith_diagonal(std::vector<std::vector<int64_t>> m) {
  const size_t R = m.size();
  const size_t C = R ? m[0].size() : 0;
  std::vector<int64_t> diag;
  size_t t = 0;
  while (t < R && t < C) {
    // Smallest nonzero entry of the working submatrix becomes the pivot.
    size_t pi = t, pj = t;
    int64_t best = 0;
    for (size_t i = t; i < R; ++i)
      for (size_t j = t; j < C; ++j) {
        if (m[i][j] == 0) continue;
        int64_t a = chk_abs(m[i][j]);
        if (best == 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    std::swap(m[t], m[pi]);
    for (size_t i = 0; i < R; ++i) std::swap(m[i][t], m[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < R; ++i) {
        if (m[i][t] == 0) continue;
        int64_t q = m[i][t] / m[t][t];
        if (q)
          for (size_t j = t; j < C; ++j)
            m[i][j] = chk_add(m[i][j], -chk_mul(q, m[t][j]));
        if (m[i][t] != 0) {  // remainder is a smaller pivot
          std::swap(m[i], m[t]);
          clean = false;
        }
      }
      if (!clean) continue;
      for (size_t j = t + 1; j < C; ++j) {
        if (m[t][j] == 0) continue;
        int64_t q = m[t][j] / m[t][t];
        if (q)
          for (size_t i = t; i < R; ++i)
            m[i][j] = chk_add(m[i][j], -chk_mul(q, m[i][t]));
        if (m[t][j] != 0) {
          for (size_t i = 0; i < R; ++i) std::swap(m[i][j], m[i][t]);
          clean = false;
        }
      }
    }

    // Invariant-factor chain: the pivot must divide the rest.
    bool absorbed = false;
    for (size_t i = t + 1; i < R && !absorbed; ++i)
      for (size_t j = t + 1; j < C && !absorbed; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (size_t j2 = t; j2 < C; ++j2)
            m[t][j2] = chk_add(m[t][j2], m[i][j2]);
          absorbed = true;
        }
    if (absorbed) continue;
    diag.push_back(chk_abs(m[t][t]));
    ++t;
  }
  return diag;
}

int rank_q(std::vector<std::vector<int64_t>> m) {
  const size_t R = m.size();
  const size_t C = R ? m[0].size() : 0;
  if (R == 0 || C == 0) return 0;
  std::vector<std::vector<__int128>> a(R, std::vector<__int128>(C));
  for (size_t i = 0; i < R; ++i)
    for (size_t j = 0; j < C; ++j) a[i][j] = m[i][j];
  __int128 prev = 1;
  size_t rank = 0;
  for (size_t col = 0; col < C && rank < R; ++col) {
    size_t pr = rank;
    while (pr < R && a[pr][col] == 0) ++pr;
    if (pr == R) continue;
    std::swap(a[rank], a[pr]);
    for (size_t i = rank + 1; i < R; ++i) {
      for (size_t j = col + 1; j < C; ++j)
        a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

int rank_z2(std::vector<std::vector<int64_t>> m) {
  const size_t R = m.size();
  const size_t C = R ? m[0].size() : 0;
  std::vector<std::vector<uint8_t>> a(R, std::vector<uint8_t>(C));
  for (size_t i = 0; i < R; ++i)
    for (size_t j = 0; j < C; ++j) a[i][j] = m[i][j] & 1;
  size_t rank = 0;
  for (size_t col = 0; col < C && rank < R; ++col) {
    size_t pr = rank;
    while (pr < R && !a[pr][col]) ++pr;
    if (pr == R) continue;
    std::swap(a[rank], a[pr]);
    for (size_t i = 0; i < R; ++i)
      if (i != rank && a[i][col])
        for (size_t j = col; j < C; ++j) a[i][j] ^= a[rank][j];
    ++rank;
  }
  return static_cast<int>(rank);
}

HomologyResult homology(const OrderComplex& k, Coefficients c) {
  HomologyResult res;
  res.coefficients = c;
  const int D = k.dim();
  if (D < 0) return res;
  res.groups.resize(D + 1);
  std::vector<int> rk(D + 2, 0);
  std::vector<std::vector<int64_t>> snf(D + 2);
  for (int d = 1; d <= D; ++d) {
    auto m = boundary_matrix(k, d);
    switch (c) {
      case Coefficients::Z2:
        rk[d] = rank_z2(std::move(m));
        break;
      case Coefficients::Q:
        rk[d] = rank_q(std::move(m));
        break;
      case Coefficients::Z:
        snf[d] = smith_diagonal(std::move(m));
        rk[d] = static_cast<int>(snf[d].size());
        break;
    }
  }
  for (int d = 0; d <= D; ++d) {
    res.groups[d].betti =
        static_cast<int>(k.simplices[d].size()) - rk[d] - rk[d + 1];
    if (c == Coefficients::Z)
      for (int64_t f : snf[d + 1])
        if (f > 1) res.groups[d].torsion.push_back(f);
  }
  return res;
}

bool sphere_report(const HomologyResult& h, int n) {
  if (n < 1) return false;
  if (static_cast<int>(h.groups.size()) <= n) return false;
  for (size_t d = 0; d < h.groups.size(); ++d) {
    if (!h.groups[d].torsion.empty()) return false;
    int want = d == 0 || static_cast<int>(d) == n ? 1 : 0;
    if (h.groups[d].betti != want) return false;
  }
  return true;
}

std::string homology_brief(const HomologyResult& h) {
  std::string s = "b=(";
  for (size_t d = 0; d < h.groups.size(); ++d) {
    if (d) s += ',';
    s += std::to_string(h.groups[d].betti);
  }
  s += ')';
  for (size_t d = 0; d < h.groups.size(); ++d) {
    if (h.groups[d].torsion.empty()) continue;
    s += " torsion at " + std::to_string(d) + ": (";
    for (size_t i = 0; i < h.groups[d].torsion.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(h.groups[d].torsion[i]);
    }
    s += ')';
  }
  return s;
}

}  // namespace hamflow
