#include "hamflow/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "hamflow/moves.hpp"

namespace hamflow {

std::vector<std::pair<int, int>> FinitePoset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !le(i, j)) continue;
      bool gap = false;
      for (int k = 0; k < n && !gap; ++k)
        gap = k != i && k != j && le(i, k) && le(k, j);
      if (!gap) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<int> FinitePoset::downset(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n; ++j)
    if (le(j, i)) out.push_back(j);
  return out;
}

std::vector<int> FinitePoset::upset(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n; ++j)
    if (le(i, j)) out.push_back(j);
  return out;
}

int FinitePoset::components() const {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (le(i, j)) parent[find(i)] = find(j);
  int c = 0;
  for (int i = 0; i < n; ++i) c += find(i) == i;
  return c;
}

ValidationReport FinitePoset::validate() const {
  ValidationReport rep;
  auto issue = [&](const std::string& check, const std::string& detail) {
    rep.issues.push_back({check, detail});
  };
  if (static_cast<int>(leq.size()) != n) {
    issue("MalformedArrays", "leq has wrong row count");
    return rep;
  }
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(leq[i].size()) != n) {
      issue("MalformedArrays", "leq row " + std::to_string(i) + " malformed");
      return rep;
    }
  for (int i = 0; i < n; ++i)
    if (!le(i, i)) issue("NotReflexive", "point " + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (le(i, j) && le(j, i))
        issue("NotAntisymmetric",
              std::to_string(i) + " and " + std::to_string(j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!le(i, j)) continue;
      for (int k = 0; k < n; ++k)
        if (le(j, k) && !le(i, k))
          issue("NotTransitive", std::to_string(i) + " <= " +
                                     std::to_string(j) + " <= " +
                                     std::to_string(k));
    }
  return rep;
}

FinitePoset build_poset(const Atlas& atlas) {
  const int n = static_cast<int>(atlas.classes.size());
  FinitePoset p;
  p.n = n;
  p.leq.assign(n, std::vector<uint8_t>(n, 0));
  std::map<Code, int> index;
  for (int i = 0; i < n; ++i) index[atlas.classes[i].code] = i;
  for (int i = 0; i < n; ++i) {
    p.leq[i][i] = 1;
    for (const Diagram& e : covers(atlas.classes[i].diagram)) {
      Code k = atlas.request.merge_mirrors ? canonical_code_mirror_merged(e)
                                           : canonical_code(e);
      auto it = index.find(k);
      if (it != index.end()) p.leq[i][it->second] = 1;
    }
  }
  // Transitive closure (absorbed stratum boundaries).
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!p.leq[i][k]) continue;
      for (int j = 0; j < n; ++j)
        if (p.leq[k][j]) p.leq[i][j] = 1;
    }
  return p;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string hasse_dot(const FinitePoset& p,
                      const std::vector<std::string>& labels,
                      bool paper_orientation) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  for (int i = 0; i < p.n; ++i)
    os << "  " << quoted(labels[i]) << ";\n";
  for (auto [lo, hi] : p.cover_pairs()) {
    int from = paper_orientation ? lo : hi;
    int to = paper_orientation ? hi : lo;
    os << "  " << quoted(labels[from]) << " -> " << quoted(labels[to])
       << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<std::pair<int, int>> parse_hasse_dot(
    const std::string& dot, const std::vector<std::string>& labels) {
  std::map<std::string, int> index;
  for (size_t i = 0; i < labels.size(); ++i)
    index[labels[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> out;
  std::istringstream is(dot);
  std::string line;
  auto read_quoted = [](const std::string& s, size_t& pos,
                        std::string& val) -> bool {
    pos = s.find('"', pos);
    if (pos == std::string::npos) return false;
    val.clear();
    for (++pos; pos < s.size(); ++pos) {
      if (s[pos] == '\\' && pos + 1 < s.size()) {
        val += s[++pos];
      } else if (s[pos] == '"') {
        ++pos;
        return true;
      } else {
        val += s[pos];
      }
    }
    return false;
  };
  while (std::getline(is, line)) {
    size_t arrow = line.find("->");
    if (arrow == std::string::npos) continue;
    std::string a, b;
    size_t pos = 0;
    if (!read_quoted(line, pos, a)) continue;
    pos = line.find("->", pos);
    if (pos == std::string::npos) continue;
    if (!read_quoted(line, pos, b)) continue;
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end()) continue;
    // Default orientation: upper -> lower.
    out.push_back({ib->second, ia->second});
  }
  return out;
}

}  // namespace hamflow
