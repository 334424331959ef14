#include "mq/monoid.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>

#include "mq/error.hpp"

namespace mq {

MonoidTable from_table(const std::vector<std::vector<int>>& table,
                       std::optional<int> identity,
                       std::vector<std::string> labels,
                       std::vector<int> generators) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::BadInput, "empty multiplication table");
  MonoidTable M;
  M.n = n;
  M.mul.resize(std::size_t(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw Error(ErrorKind::BadInput, "multiplication table is not square");
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n)
        throw Error(ErrorKind::IndexOutOfRange,
                    "table entry (" + std::to_string(i) + "," +
                        std::to_string(j) + ") = " + std::to_string(v) +
                        " out of range");
      M.mul[std::size_t(i) * n + j] = v;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (M.at(M.at(a, b), c) != M.at(a, M.at(b, c)))
          throw Error(ErrorKind::NotAssociative,
                      "associativity fails at triple (" + std::to_string(a) +
                          "," + std::to_string(b) + "," + std::to_string(c) +
                          ")");
  auto is_identity = [&](int e) {
    for (int m = 0; m < n; ++m)
      if (M.at(e, m) != m || M.at(m, e) != m) return false;
    return true;
  };
  if (identity) {
    if (*identity < 0 || *identity >= n)
      throw Error(ErrorKind::IndexOutOfRange, "identity index out of range");
    if (!is_identity(*identity))
      throw Error(ErrorKind::NoIdentity,
                  "element " + std::to_string(*identity) + " is not an identity");
    M.identity = *identity;
  } else {
    int found = -1;
    for (int e = 0; e < n && found < 0; ++e)
      if (is_identity(e)) found = e;
    if (found < 0)
      throw Error(ErrorKind::NoIdentity, "table has no identity element");
    M.identity = found;
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw Error(ErrorKind::BadInput, "labels size mismatch");
  for (int g : generators)
    if (g < 0 || g >= n)
      throw Error(ErrorKind::IndexOutOfRange, "generator index out of range");
  M.labels = std::move(labels);
  M.generators = std::move(generators);
  if (!M.generators.empty()) {
    // every element must be a product of the listed generators
    std::vector<char> seen(n, 0);
    seen[M.identity] = 1;
    std::queue<int> q;
    q.push(M.identity);
    for (int g : M.generators)
      if (!seen[g]) {
        seen[g] = 1;
        q.push(g);
      }
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (int g : M.generators) {
        int b = M.at(a, g);
        if (!seen[b]) {
          seen[b] = 1;
          q.push(b);
        }
      }
    }
    for (int m = 0; m < n; ++m)
      if (!seen[m])
        throw Error(ErrorKind::BadInput,
                    "element " + std::to_string(m) +
                        " is not generated by the listed generators");
  }
  return M;
}

MonoidTable from_transformations(const TransformationGen& gens,
                                 std::size_t max_size) {
  const int d = gens.degree;
  if (d < 1) throw Error(ErrorKind::BadInput, "degree must be positive");
  for (const auto& f : gens.maps) {
    if (static_cast<int>(f.size()) != d)
      throw Error(ErrorKind::BadInput, "map length does not match degree");
    for (int v : f)
      if (v < 0 || v >= d)
        throw Error(ErrorKind::IndexOutOfRange, "map value out of range");
  }

  std::vector<int> id(d);
  for (int i = 0; i < d; ++i) id[i] = i;

  // BFS by word length; generator order breaks ties.  The identity map is
  // element 0 whether or not it is listed or generated.
  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> index;
  elems.push_back(id);
  index[id] = 0;
  std::vector<int> gen_ids;
  for (const auto& f : gens.maps) {
    auto it = index.find(f);
    if (it == index.end()) {
      int k = static_cast<int>(elems.size());
      elems.push_back(f);
      index[f] = k;
      gen_ids.push_back(k);
    } else {
      gen_ids.push_back(it->second);
    }
  }

  // compose acting on the right: (fg)(i) = g(f(i))
  auto compose = [&](const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(d);
    for (int i = 0; i < d; ++i) h[i] = g[f[i]];
    return h;
  };

  std::size_t frontier_begin = 0;
  while (frontier_begin < elems.size()) {
    std::size_t frontier_end = elems.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const auto& g : gens.maps) {
        auto h = compose(elems[i], g);
        if (index.emplace(h, static_cast<int>(elems.size())).second) {
          elems.push_back(h);
          if (elems.size() > max_size)
            throw Error(ErrorKind::SizeLimitExceeded,
                        "transformation monoid exceeds size cap " +
                            std::to_string(max_size));
        }
      }
    }
    frontier_begin = frontier_end;
  }

  const int n = static_cast<int>(elems.size());
  MonoidTable M;
  M.n = n;
  M.identity = 0;
  M.mul.resize(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      M.mul[std::size_t(a) * n + b] = index.at(compose(elems[a], elems[b]));
  M.generators.assign(gen_ids.begin(), gen_ids.end());
  std::sort(M.generators.begin(), M.generators.end());
  M.generators.erase(std::unique(M.generators.begin(), M.generators.end()),
                     M.generators.end());
  M.labels.resize(n);
  for (int m = 0; m < n; ++m) {
    std::string s = "[";
    for (int i = 0; i < d; ++i) {
      if (i) s += ' ';
      s += std::to_string(elems[m][i]);
    }
    s += ']';
    M.labels[m] = s;
  }
  return M;
}

std::pair<int, int> index_period(const MonoidTable& M, int m) {
  if (m < 0 || m >= M.n)
    throw Error(ErrorKind::IndexOutOfRange, "element index out of range");
  std::unordered_map<int, int> seen;  // element -> exponent
  int x = m, k = 1;
  while (true) {
    auto it = seen.find(x);
    if (it != seen.end()) return {it->second, k - it->second};
    seen[x] = k;
    x = M.at(x, m);
    ++k;
  }
}

int omega(const MonoidTable& M, int m) {
  auto [i, p] = index_period(M, m);
  // smallest multiple of the period that is >= the index
  int t = p * ((i + p - 1) / p);
  int x = m;
  for (int k = 1; k < t; ++k) x = M.at(x, m);
  return x;
}

MonoidTable opposite(const MonoidTable& M) {
  MonoidTable N;
  N.n = M.n;
  N.identity = M.identity;
  N.labels = M.labels;
  N.generators = M.generators;
  N.mul.resize(std::size_t(M.n) * M.n);
  for (int a = 0; a < M.n; ++a)
    for (int b = 0; b < M.n; ++b) N.mul[std::size_t(a) * M.n + b] = M.at(b, a);
  return N;
}

}  // namespace mq
