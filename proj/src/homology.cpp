#include "artifact/homology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace artifact {

void SparseMatrix::add(int r, int c, long long v) {
  if (v == 0) return;
  auto& col = cols[c];
  auto it = col.find(r);
  if (it == col.end()) {
    col.emplace(r, v);
    return;
  }
  it->second += v;
  if (it->second == 0) col.erase(it);
}

namespace {

// Sparse elimination by row-indexed storage of BigInt entries.
struct Elim {
  std::vector<std::map<int, BigInt>> rows;
  std::vector<std::set<int>> colrows;
  std::vector<char> row_alive, col_alive;

  explicit Elim(const SparseMatrix& m)
      : rows(m.rows), colrows(m.cols_count), row_alive(m.rows, 1), col_alive(m.cols_count, 1) {
    for (int j = 0; j < m.cols_count; ++j)
      for (auto& [i, v] : m.cols[j]) {
        rows[i][j] = v;
        colrows[j].insert(i);
      }
  }

  // Schur complement step at a unit pivot.
  void pivot(int r, int c) {
    const BigInt u = rows[r].at(c);  // +-1, its own inverse
    std::vector<int> targets(colrows[c].begin(), colrows[c].end());
    for (int r2 : targets) {
      if (r2 == r) continue;
      BigInt f = rows[r2].at(c) * u;
      for (auto& [j, v] : rows[r]) {
        auto& row2 = rows[r2];
        auto it = row2.find(j);
        if (it == row2.end()) {
          row2.emplace(j, -f * v);
          colrows[j].insert(r2);
        } else {
          it->second -= f * v;
          if (it->second == 0) {
            row2.erase(it);
            colrows[j].erase(r2);
          }
        }
      }
    }
    for (auto& [j, v] : rows[r]) colrows[j].erase(r);
    rows[r].clear();
    colrows[c].clear();
    row_alive[r] = 0;
    col_alive[c] = 0;
  }

  int unit_phase() {
    int rank = 0;
    for (bool progress = true; progress;) {
      progress = false;
      std::vector<int> order;
      for (int j = 0; j < static_cast<int>(colrows.size()); ++j)
        if (col_alive[j] && !colrows[j].empty()) order.push_back(j);
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return colrows[a].size() < colrows[b].size(); });
      for (int c : order) {
        if (!col_alive[c]) continue;
        int best = -1;
        std::size_t best_len = 0;
        for (int r : colrows[c]) {
          const BigInt& v = rows[r].at(c);
          if (v != 1 && v != -1) continue;
          if (best < 0 || rows[r].size() < best_len) {
            best = r;
            best_len = rows[r].size();
          }
        }
        if (best < 0) continue;
        pivot(best, c);
        ++rank;
        progress = true;
      }
    }
    return rank;
  }
};

std::vector<BigInt> dense_snf(std::vector<std::vector<BigInt>> a) {
  std::vector<BigInt> diag;
  const int n = static_cast<int>(a.size());
  const int m = n ? static_cast<int>(a[0].size()) : 0;
  int t = 0;
  while (t < n && t < m) {
    // smallest nonzero entry of the trailing block
    int pr = -1, pc = -1;
    for (int i = t; i < n; ++i)
      for (int j = t; j < m; ++j)
        if (a[i][j] != 0 && (pr < 0 || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = true;
    for (int i = t + 1; i < n; ++i) {
      if (a[i][t] == 0) continue;
      BigInt q = a[i][t] / a[t][t];
      for (int j = t; j < m; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) clean = false;
    }
    for (int j = t + 1; j < m; ++j) {
      if (a[t][j] == 0) continue;
      BigInt q = a[t][j] / a[t][t];
      for (int i = t; i < n; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  // normalize to a divisibility chain
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      BigInt g = gcd(diag[i], diag[j]);
      BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

long long mod_pow(long long b, long long e, long long p) {
  long long r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = static_cast<long long>((__int128)r * b % p);
    b = static_cast<long long>((__int128)b * b % p);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::vector<BigInt> smith_invariants(const SparseMatrix& m) {
  Elim e(m);
  int units = e.unit_phase();
  std::vector<int> rr, cc;
  for (int i = 0; i < m.rows; ++i)
    if (e.row_alive[i] && !e.rows[i].empty()) rr.push_back(i);
  for (int j = 0; j < m.cols_count; ++j)
    if (e.col_alive[j] && !e.colrows[j].empty()) cc.push_back(j);
  std::vector<int> cidx(m.cols_count, -1);
  for (std::size_t k = 0; k < cc.size(); ++k) cidx[cc[k]] = static_cast<int>(k);
  std::vector<std::vector<BigInt>> dense(rr.size(), std::vector<BigInt>(cc.size()));
  for (std::size_t k = 0; k < rr.size(); ++k)
    for (auto& [j, v] : e.rows[rr[k]]) dense[k][cidx[j]] = v;
  std::vector<BigInt> out(units, BigInt(1));
  for (auto& x : dense_snf(std::move(dense))) out.push_back(x);
  return out;
}

int rank_mod_p(const SparseMatrix& m, long long p) {
  std::vector<std::map<int, long long>> rows(m.rows);
  for (int j = 0; j < m.cols_count; ++j)
    for (auto& [i, v] : m.cols[j]) {
      long long x = ((v % p) + p) % p;
      if (x) rows[i][j] = x;
    }
  // eliminate by leading column
  std::map<int, std::map<int, long long>> pivots;  // leading column -> normalized row
  int rank = 0;
  for (auto& row : rows) {
    while (!row.empty()) {
      int c = row.begin()->first;
      auto it = pivots.find(c);
      if (it == pivots.end()) {
        long long inv = mod_pow(row.begin()->second, p - 2, p);
        for (auto& [j, v] : row) v = static_cast<long long>((__int128)v * inv % p);
        pivots.emplace(c, std::move(row));
        ++rank;
        break;
      }
      long long f = row.begin()->second;
      for (auto& [j, v] : it->second) {
        long long& x = row[j];
        x = static_cast<long long>(((__int128)x - (__int128)f * v % p + p) % p);
        if (x == 0) row.erase(j);
      }
    }
  }
  return rank;
}

std::vector<long long> HomologyResult::ranks(int lo, int hi) const {
  std::vector<long long> out;
  for (int k = lo; k <= hi; ++k) {
    auto it = groups.find(k);
    out.push_back(it == groups.end() ? 0 : it->second.rank);
  }
  return out;
}

bool HomologyResult::has_torsion() const {
  for (auto& [k, g] : groups)
    if (!g.torsion.empty()) return true;
  return false;
}

HomologyResult homology(const ChainComplex& c, Ring r) {
  HomologyResult res;
  res.ring = r;
  std::map<int, long long> rk;
  std::map<int, std::vector<std::string>> tors;
  for (auto& [k, m] : c.d) {
    if (r.tag == Ring::Tag::PrimeField) {
      rk[k] = rank_mod_p(m, r.p);
      continue;
    }
    auto inv = smith_invariants(m);
    rk[k] = static_cast<long long>(inv.size());
    if (r.tag == Ring::Tag::Integers)
      for (auto& x : inv)
        if (x > 1) tors[k - 1].push_back(x.str());
  }
  for (auto& [k, n] : c.dims) {
    HomologyGroup g;
    g.rank = n - (rk.count(k) ? rk[k] : 0) - (rk.count(k + 1) ? rk[k + 1] : 0);
    if (tors.count(k)) g.torsion = tors[k];
    res.groups[k] = g;
  }
  return res;
}

ChainComplex graph_complex(const std::map<int, std::vector<Key>>& basis,
                           const std::function<GraphChain(const Key&)>& d_of) {
  ChainComplex c;
  std::map<int, std::map<Key, int>> index;
  for (auto& [k, keys] : basis) {
    c.dims[k] = static_cast<int>(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) index[k][keys[i]] = static_cast<int>(i);
  }
  for (auto& [k, keys] : basis) {
    const int rows = c.dims.count(k - 1) ? c.dims[k - 1] : 0;
    SparseMatrix m(rows, static_cast<int>(keys.size()));
    for (std::size_t j = 0; j < keys.size(); ++j) {
      const GraphChain dj = d_of(keys[j]);
      for (auto& [t, v] : dj.terms()) {
        auto it = index[k - 1].find(t);
        if (it == index[k - 1].end()) throw GraphError("graph_complex: basis not closed under d");
        m.add(it->second, static_cast<int>(j), v);
      }
    }
    if (rows > 0) c.d[k] = std::move(m);
  }
  return c;
}

}  // namespace artifact
