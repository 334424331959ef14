#include "mq/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <string>

#include "mq/error.hpp"
#include "mq/karoubi.hpp"

namespace mq {

namespace {

// Closure of a set of generators inside a hashable element domain.
// Breadth-first by word length, generator order breaking ties; witnesses
// are the shortest words found, used for labels.
template <typename T>
MonoidTable close_generated(const T& one, const std::vector<T>& gens,
                            const std::vector<std::string>& gen_labels,
                            std::function<T(const T&, const T&)> prod,
                            std::size_t max_size) {
  std::vector<T> elems{one};
  std::map<T, int> index{{one, 0}};
  std::vector<std::string> labels{"1"};
  std::vector<int> gen_ids;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto [it, fresh] = index.emplace(gens[i], static_cast<int>(elems.size()));
    if (fresh) {
      elems.push_back(gens[i]);
      labels.push_back(gen_labels[i]);
    }
    gen_ids.push_back(it->second);
  }
  std::size_t begin = 0;
  while (begin < elems.size()) {
    std::size_t end = elems.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t g = 0; g < gens.size(); ++g) {
        T h = prod(elems[i], gens[g]);
        auto [it, fresh] = index.emplace(h, static_cast<int>(elems.size()));
        if (fresh) {
          elems.push_back(h);
          labels.push_back(labels[i] == "1" ? gen_labels[g]
                                            : labels[i] + gen_labels[g]);
          if (elems.size() > max_size)
            throw Error(ErrorKind::SizeLimitExceeded, "closure exceeds cap");
        }
      }
    begin = end;
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[a][b] = index.at(prod(elems[a], elems[b]));
  std::sort(gen_ids.begin(), gen_ids.end());
  gen_ids.erase(std::unique(gen_ids.begin(), gen_ids.end()), gen_ids.end());
  return from_table(table, 0, labels, gen_ids);
}

std::string lrb_product(const std::string& u, const std::string& v) {
  std::string r = u;
  for (char c : v)
    if (r.find(c) == std::string::npos) r += c;
  return r;
}

// Canonical form of a word modulo the band identity xx = x.  A word with
// at least two distinct letters is determined by (p, a, b, q): p is the
// prefix before the first occurrence of the letter completing the content
// from the left, a that letter, and (b, q) the mirror data from the right.
std::string band_canon(const std::string& w,
                       std::map<std::string, std::string>& memo) {
  bool seen[26] = {};
  int content = 0;
  for (char c : w)
    if (!seen[c - 'a']) {
      seen[c - 'a'] = true;
      ++content;
    }
  if (content <= 1) return w.substr(0, 1);
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;

  bool mark[26] = {};
  int cnt = 0;
  std::size_t lpos = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!mark[w[i] - 'a']) {
      mark[w[i] - 'a'] = true;
      if (++cnt == content) {
        lpos = i;
        break;
      }
    }
  bool mark2[26] = {};
  cnt = 0;
  std::size_t rpos = 0;
  for (std::size_t i = w.size(); i-- > 0;)
    if (!mark2[w[i] - 'a']) {
      mark2[w[i] - 'a'] = true;
      if (++cnt == content) {
        rpos = i;
        break;
      }
    }
  std::string res = band_canon(w.substr(0, lpos), memo) + w[lpos] + w[rpos] +
                    band_canon(w.substr(rpos + 1), memo);
  memo[w] = res;
  return res;
}

std::vector<std::vector<int>> perms_lex(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

std::vector<int> group_inverses(const MonoidTable& G) {
  std::vector<int> inv(G.n, -1);
  for (int a = 0; a < G.n; ++a) {
    for (int b = 0; b < G.n; ++b)
      if (G.at(a, b) == G.identity && G.at(b, a) == G.identity) {
        inv[a] = b;
        break;
      }
    if (inv[a] < 0)
      throw Error(ErrorKind::BadInput, "table is not a group");
  }
  return inv;
}

long parse_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::BadInput, "expected an integer, got '" + s + "'");
  }
}

MonoidTable named_group(const std::string& g) {
  if (g.size() == 2 && g[0] == 'z' && g[1] >= '2' && g[1] <= '6')
    return cyclic_group(g[1] - '0');
  if (g == "s3") return symmetric_group(3);
  if (g == "s4") return symmetric_group(4);
  throw Error(ErrorKind::ParamsOutOfRange, "unknown group name '" + g + "'");
}

}  // namespace

MonoidTable free_left_regular_band(int n) {
  if (n < 1 || n > 5)
    throw Error(ErrorKind::ParamsOutOfRange, "lrb letters must be in 1..5");
  std::vector<std::string> gens, glabels;
  for (int i = 0; i < n; ++i) {
    gens.emplace_back(1, char('a' + i));
    glabels.emplace_back(1, char('a' + i));
  }
  return close_generated<std::string>(
      "", gens, glabels,
      [](const std::string& u, const std::string& v) {
        return lrb_product(u, v);
      },
      100000);
}

MonoidTable free_band_monoid(int n) {
  if (n < 1 || n > 3)
    throw Error(ErrorKind::ParamsOutOfRange, "free band letters must be in 1..3");
  auto memo = std::make_shared<std::map<std::string, std::string>>();
  std::vector<std::string> gens, glabels;
  for (int i = 0; i < n; ++i) {
    gens.emplace_back(1, char('a' + i));
    glabels.emplace_back(1, char('a' + i));
  }
  return close_generated<std::string>(
      "", gens, glabels,
      [memo](const std::string& u, const std::string& v) {
        return band_canon(u + v, *memo);
      },
      100000);
}

MonoidTable mab_monoid(int a, int b) {
  if (a < 1 || b < 1 || a * b + 2 > 400)
    throw Error(ErrorKind::ParamsOutOfRange, "mab parameters out of range");
  const int n = a * b + 2;
  auto pr = [&](int x, int y) { return 2 + x * b + y; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  labels[0] = "1";
  labels[1] = "e";
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y)
      labels[pr(x, y)] =
          "(" + std::string(1, char('a' + x)) + "," + std::to_string(y + 1) + ")";
  for (int m = 0; m < n; ++m) t[0][m] = t[m][0] = m;
  t[1][1] = 1;
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y) {
      t[1][pr(x, y)] = pr(0, y);   // e(x,y) = (a0, y)
      t[pr(x, y)][1] = pr(x, y);   // (x,y)e = (x,y)
      for (int z = 0; z < a; ++z)
        for (int w = 0; w < b; ++w) t[pr(x, y)][pr(z, w)] = pr(x, w);
    }
  return from_table(t, 0, labels);
}

MonoidTable extensive_monoid(int n) {
  if (n < 1 || n > 5)
    throw Error(ErrorKind::ParamsOutOfRange, "extensive degree must be in 1..5");
  std::vector<std::vector<int>> maps;
  std::vector<int> f(n, 0);
  // enumerate all maps with f(i) <= i in lex order
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      maps.push_back(f);
      return;
    }
    for (int v = 0; v <= i; ++v) {
      f[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  const int N = static_cast<int>(maps.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < N; ++i) index[maps[i]] = i;
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      std::vector<int> h(n);
      for (int i = 0; i < n; ++i) h[i] = maps[b][maps[a][i]];
      t[a][b] = index.at(h);
    }
  std::vector<std::string> labels(N);
  for (int i = 0; i < N; ++i) {
    std::string s = "[";
    for (int j = 0; j < n; ++j) {
      if (j) s += ' ';
      s += std::to_string(maps[i][j]);
    }
    labels[i] = s + "]";
  }
  return from_table(t, std::nullopt, labels);
}

MonoidTable hecke_zero_monoid(int n) {
  if (n < 1 || n > 3)
    throw Error(ErrorKind::ParamsOutOfRange, "hecke0 rank must be in 1..3");
  auto perms = perms_lex(n + 1);
  const int N = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < N; ++i) index[perms[i]] = i;
  auto length = [](const std::vector<int>& w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j)
        if (w[i] > w[j]) ++inv;
    return inv;
  };
  TransformationGen gens;
  gens.degree = N;
  for (int i = 0; i < n; ++i) {
    std::vector<int> pi(N);
    for (int w = 0; w < N; ++w) {
      std::vector<int> sw = perms[w];
      for (auto& v : sw)
        if (v == i)
          v = i + 1;
        else if (v == i + 1)
          v = i;
      pi[w] = length(sw) > length(perms[w]) ? index.at(sw) : w;
    }
    gens.maps.push_back(pi);
  }
  MonoidTable M = from_transformations(gens);
  M.labels.assign(M.n, "");
  // relabel by shortest generator words
  M.labels[M.identity] = "1";
  std::vector<int> frontier{M.identity};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (std::size_t g = 0; g < M.generators.size(); ++g) {
        int b = M.at(a, M.generators[g]);
        if (M.labels[b].empty()) {
          M.labels[b] = (a == M.identity ? "" : M.labels[a]) + "s" +
                        std::to_string(g + 1);
          next.push_back(b);
        }
      }
    frontier = std::move(next);
  }
  return M;
}

MonoidTable power_monoid_zn(int n) {
  if (n < 1 || n > 4)
    throw Error(ErrorKind::ParamsOutOfRange, "power monoid modulus must be in 1..4");
  const int N = 1 << n;
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  for (int A = 0; A < N; ++A)
    for (int B = 0; B < N; ++B) {
      int C = 0;
      for (int i = 0; i < n; ++i)
        if (A >> i & 1)
          for (int j = 0; j < n; ++j)
            if (B >> j & 1) C |= 1 << ((i + j) % n);
      t[A][B] = C;
    }
  std::vector<std::string> labels(N);
  for (int A = 0; A < N; ++A) {
    std::string s = "{";
    for (int i = 0; i < n; ++i)
      if (A >> i & 1) {
        if (s.size() > 1) s += ',';
        s += std::to_string(i);
      }
    labels[A] = s + "}";
  }
  return from_table(t, 1, labels);
}

MonoidTable cyclic_group(int n) {
  if (n < 1 || n > 64)
    throw Error(ErrorKind::ParamsOutOfRange, "cyclic order must be in 1..64");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = a == 0 ? "1" : "g" + std::to_string(a);
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return from_table(t, 0, labels);
}

MonoidTable symmetric_group(int n) {
  if (n < 1 || n > 5)
    throw Error(ErrorKind::ParamsOutOfRange, "symmetric degree must be in 1..5");
  auto perms = perms_lex(n);
  const int N = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < N; ++i) index[perms[i]] = i;
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = index.at(c);
    }
  std::vector<std::string> labels(N);
  for (int i = 0; i < N; ++i) {
    std::string s = "(";
    for (int j = 0; j < n; ++j) {
      if (j) s += ' ';
      s += std::to_string(perms[i][j]);
    }
    labels[i] = s + ")";
  }
  return from_table(t, 0, labels);
}

MonoidTable dg_example(const MonoidTable& G, DgMode mode) {
  auto inv = group_inverses(G);
  const int g = G.n;
  const int xsize = mode == DgMode::Conjugation ? g : g * g;
  const int n = g + xsize + 1;
  const int z = n - 1;
  auto xelt = [&](int a, int b) {
    return mode == DgMode::Conjugation ? g + a : g + a * G.n + b;
  };
  std::vector<std::vector<int>> t(n, std::vector<int>(n, z));
  std::vector<std::string> labels(n);
  for (int a = 0; a < g; ++a) {
    labels[a] = G.label(a);
    for (int b = 0; b < g; ++b) t[a][b] = G.at(a, b);
  }
  labels[z] = "z";
  if (mode == DgMode::Conjugation) {
    for (int a = 0; a < g; ++a) {
      labels[g + a] = "x" + G.label(a);
      for (int h = 0; h < g; ++h) {
        t[h][g + a] = g + G.at(h, a);
        t[g + a][h] = g + G.at(a, h);
      }
    }
  } else {
    for (int a = 0; a < g; ++a)
      for (int b = 0; b < g; ++b) {
        int x = xelt(a, b);
        labels[x] = "x(" + G.label(a) + "," + G.label(b) + ")";
        for (int h = 0; h < g; ++h) {
          t[h][x] = xelt(G.at(h, a), b);
          t[x][h] = xelt(a, G.at(inv[h], b));
        }
      }
  }
  // X*X = {z} and z is a zero: already the default entries
  return from_table(t, G.identity, labels);
}

MonoidTable monogenic(int index, int period) {
  if (index < 0 || period < 1 || index + period > 200)
    throw Error(ErrorKind::ParamsOutOfRange, "monogenic parameters out of range");
  const int n = index + period;
  if (n == 0) return from_table({{0}}, 0, {"1"});
  auto norm = [&](int e) { return e < n ? e : index + (e - index) % period; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = a == 0 ? "1" : a == 1 ? "x" : "x^" + std::to_string(a);
    for (int b = 0; b < n; ++b) t[a][b] = norm(a + b);
  }
  return from_table(t, 0, labels, {std::min(1, n - 1)});
}

MonoidTable injections_monoid(int n) {
  if (n < 0 || n > 4)
    throw Error(ErrorKind::ParamsOutOfRange, "injection rank must be in 0..4");
  return ei_to_monoid(injections_category(n)).monoid;
}

MonoidTable gen_family(const std::string& name,
                       const std::vector<std::string>& args) {
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw Error(ErrorKind::BadInput, "family '" + name + "' expects " +
                                           std::to_string(k) + " argument(s)");
  };
  if (name == "lrb") {
    need(1);
    return free_left_regular_band(static_cast<int>(parse_int(args[0])));
  }
  if (name == "freeband") {
    need(1);
    return free_band_monoid(static_cast<int>(parse_int(args[0])));
  }
  if (name == "mab") {
    need(2);
    return mab_monoid(static_cast<int>(parse_int(args[0])),
                      static_cast<int>(parse_int(args[1])));
  }
  if (name == "extensive" || name == "E") {
    need(1);
    return extensive_monoid(static_cast<int>(parse_int(args[0])));
  }
  if (name == "hecke0") {
    need(1);
    return hecke_zero_monoid(static_cast<int>(parse_int(args[0])));
  }
  if (name == "power") {
    need(1);
    return power_monoid_zn(static_cast<int>(parse_int(args[0])));
  }
  if (name == "group") {
    need(1);
    return named_group(args[0]);
  }
  if (name == "dgconj") {
    need(1);
    return dg_example(named_group(args[0]), DgMode::Conjugation);
  }
  if (name == "dgsquare") {
    need(1);
    return dg_example(named_group(args[0]), DgMode::Square);
  }
  if (name == "mono") {
    need(2);
    return monogenic(static_cast<int>(parse_int(args[0])),
                     static_cast<int>(parse_int(args[1])));
  }
  if (name == "inj") {
    need(1);
    return injections_monoid(static_cast<int>(parse_int(args[0])));
  }
  throw Error(ErrorKind::UnknownFamily, "unknown family '" + name + "'");
}

std::vector<std::string> family_names() {
  return {"lrb",   "freeband", "mab",     "extensive", "hecke0", "power",
          "group", "dgconj",   "dgsquare", "mono",      "inj"};
}

}  // namespace mq
