#include "mq/io.hpp"

#include <json.hpp>
#include <sstream>

#include "mq/error.hpp"

namespace mq {

using json = nlohmann::ordered_json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorKind::BadInput, "invalid JSON");
  return j;
}

}  // namespace

InputKind detect_input(const std::string& text) {
  json j = parse(text);
  if (j.contains("table")) return InputKind::Monoid;
  if (j.contains("transformations")) return InputKind::Transformations;
  if (j.contains("objects")) return InputKind::Category;
  throw Error(ErrorKind::BadInput,
              "input has none of the fields table/transformations/objects");
}

std::string monoid_to_json(const MonoidTable& M) {
  json j;
  j["n"] = M.n;
  j["identity"] = M.identity;
  json table = json::array();
  for (int a = 0; a < M.n; ++a) {
    json row = json::array();
    for (int b = 0; b < M.n; ++b) row.push_back(M.at(a, b));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  if (!M.labels.empty()) j["labels"] = M.labels;
  if (!M.generators.empty()) j["generators"] = M.generators;
  return j.dump(2) + "\n";
}

MonoidTable monoid_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("table") || !j["table"].is_array())
    throw Error(ErrorKind::BadInput, "monoid file needs a table array");
  std::vector<std::vector<int>> table;
  for (const auto& row : j["table"]) table.push_back(row.get<std::vector<int>>());
  std::optional<int> identity;
  if (j.contains("identity")) identity = j["identity"].get<int>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  std::vector<int> gens;
  if (j.contains("generators")) gens = j["generators"].get<std::vector<int>>();
  if (j.contains("n") && j["n"].get<std::size_t>() != table.size())
    throw Error(ErrorKind::BadInput, "declared size differs from the table");
  return from_table(table, identity, std::move(labels), std::move(gens));
}

MonoidTable transformations_from_json(const std::string& text,
                                      std::size_t max_size) {
  json j = parse(text);
  TransformationGen g;
  g.degree = j.at("degree").get<int>();
  bool oneBased = j.value("one_based", false);
  for (const auto& row : j.at("transformations")) {
    auto f = row.get<std::vector<int>>();
    if (oneBased)
      for (auto& v : f) --v;
    g.maps.push_back(std::move(f));
  }
  return from_transformations(g, max_size);
}

FiniteCategorySpec category_from_json(const std::string& text) {
  json j = parse(text);
  FiniteCategorySpec C;
  const auto& objs = j.at("objects");
  C.num_objects = static_cast<int>(objs.size());
  for (const auto& o : objs)
    C.object_names.push_back(o.is_string() ? o.get<std::string>()
                                           : o.dump());
  std::map<json, int> ids;
  for (const auto& a : j.at("arrows")) {
    FiniteCategorySpec::Arrow ar;
    ar.src = a.at("src").get<int>();
    ar.dst = a.at("dst").get<int>();
    if (a.contains("id")) ar.name = a["id"].is_string() ? a["id"].get<std::string>() : a["id"].dump();
    C.arrows.push_back(ar);
  }
  for (const auto& row : j.at("compose"))
    C.compose.push_back(row.get<std::vector<int>>());
  C.identities = j.at("identities").get<std::vector<int>>();
  return C;
}

MonoidTable load_monoid(const std::string& text, bool adjoin_identity,
                        std::size_t max_size) {
  switch (detect_input(text)) {
    case InputKind::Monoid: {
      if (!adjoin_identity) return monoid_from_json(text);
      json j = parse(text);
      std::vector<std::vector<int>> t;
      for (const auto& row : j["table"]) t.push_back(row.get<std::vector<int>>());
      const int n = static_cast<int>(t.size());
      // append an identity as the last element
      for (int i = 0; i < n; ++i) t[i].push_back(i);
      std::vector<int> last(n + 1);
      for (int i = 0; i <= n; ++i) last[i] = i;
      t.push_back(std::move(last));
      std::vector<std::string> labels;
      if (j.contains("labels")) {
        labels = j["labels"].get<std::vector<std::string>>();
        labels.push_back("1");
      }
      return from_table(t, n, std::move(labels));
    }
    case InputKind::Transformations:
      return transformations_from_json(text, max_size);
    case InputKind::Category:
      return ei_to_monoid(category_from_json(text)).monoid;
  }
  throw Error(ErrorKind::Internal, "unreachable");
}

std::string quiver_to_json(const QuiverGraph& Q) {
  json j;
  json verts = json::array();
  for (const auto& v : Q.vertices) {
    json jv;
    jv["lattice"] = v.lattice;
    jv["irrep"] = v.irrep;
    jv["degree"] = v.degree;
    jv["label"] = v.label;
    verts.push_back(std::move(jv));
  }
  j["vertices"] = std::move(verts);
  json arrows = json::array();
  for (std::size_t a = 0; a < Q.vertices.size(); ++a)
    for (std::size_t b = 0; b < Q.vertices.size(); ++b)
      if (Q.arrows[a][b]) {
        json e;
        e["from"] = a;
        e["to"] = b;
        e["count"] = Q.arrows[a][b];
        arrows.push_back(std::move(e));
      }
  j["arrows"] = std::move(arrows);
  return j.dump(2) + "\n";
}

std::string quiver_to_dot(const QuiverGraph& Q) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (std::size_t i = 0; i < Q.vertices.size(); ++i)
    os << "  v" << i << " [label=\"" << Q.vertices[i].label << "\"];\n";
  for (std::size_t a = 0; a < Q.vertices.size(); ++a)
    for (std::size_t b = 0; b < Q.vertices.size(); ++b)
      if (Q.arrows[a][b]) {
        os << "  v" << a << " -> v" << b;
        if (Q.arrows[a][b] != 1) os << " [label=\"" << Q.arrows[a][b] << "\"]";
        os << ";\n";
      }
  os << "}\n";
  return os.str();
}

std::string quiver_to_text(const QuiverGraph& Q) {
  std::ostringstream os;
  os << Q.vertices.size() << " vertices, " << Q.total_arrows() << " arrows\n";
  for (std::size_t i = 0; i < Q.vertices.size(); ++i)
    os << "  [" << i << "] " << Q.vertices[i].label << "\n";
  for (std::size_t a = 0; a < Q.vertices.size(); ++a)
    for (std::size_t b = 0; b < Q.vertices.size(); ++b)
      if (Q.arrows[a][b])
        os << "  " << Q.vertices[a].label << " -> " << Q.vertices[b].label
           << "  x" << Q.arrows[a][b] << "\n";
  return os.str();
}

std::string lattice_to_json(const MonoidTable& M, const SupportLattice& L) {
  json j;
  json elems = json::array();
  for (int X = 0; X < L.k; ++X) {
    json e;
    e["index"] = X;
    e["idempotent"] = L.idem[X];
    e["idempotent_label"] = M.label(L.idem[X]);
    e["ideal_size"] = L.ideal[X].count();
    json below = json::array();
    for (int Z = 0; Z < L.k; ++Z)
      if (Z != X && L.le(Z, X)) below.push_back(Z);
    e["below"] = std::move(below);
    elems.push_back(std::move(e));
  }
  j["elements"] = std::move(elems);
  json mu = json::array();
  for (int Z = 0; Z < L.k; ++Z) {
    json row = json::array();
    for (int X = 0; X < L.k; ++X) row.push_back(L.mu[Z][X]);
    mu.push_back(std::move(row));
  }
  j["moebius"] = std::move(mu);
  json sigma = json::array();
  for (int m = 0; m < M.n; ++m) sigma.push_back(L.sigma[m]);
  j["sigma"] = std::move(sigma);
  j["sigma_is_homomorphism"] = L.sigmaIsHom;
  return j.dump(2) + "\n";
}

std::string lattice_to_dot(const MonoidTable& M, const SupportLattice& L) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n";
  for (int X = 0; X < L.k; ++X)
    os << "  x" << X << " [label=\"X" << X << " (e=" << M.label(L.idem[X])
       << ")\"];\n";
  // Hasse edges: covers only
  for (int a = 0; a < L.k; ++a)
    for (int b = 0; b < L.k; ++b) {
      if (a == b || !L.le(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < L.k && cover; ++c)
        if (c != a && c != b && L.le(a, c) && L.le(c, b)) cover = false;
      if (cover) os << "  x" << a << " -> x" << b << ";\n";
    }
  os << "}\n";
  return os.str();
}

std::string matrix_to_text(const std::vector<std::vector<long long>>& m,
                           const std::vector<std::string>& names) {
  std::ostringstream os;
  std::size_t w = 3;
  for (const auto& n : names) w = std::max(w, n.size() + 1);
  os << std::string(w, ' ');
  for (const auto& n : names) {
    os << n;
    os << std::string(w - n.size(), ' ');
  }
  os << "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << names[i] << std::string(w - names[i].size(), ' ');
    for (long long v : m[i]) {
      std::string s = std::to_string(v);
      os << s << std::string(w > s.size() ? w - s.size() : 1, ' ');
    }
    os << "\n";
  }
  return os.str();
}

std::string matrix_to_json(const std::vector<std::vector<long long>>& m,
                           const std::vector<std::string>& names) {
  json j;
  j["names"] = names;
  j["matrix"] = m;
  return j.dump(2) + "\n";
}

std::string char_table_to_json(const CharTable& T) {
  json j;
  j["prime"] = T.p;
  j["order"] = T.G.size();
  j["class_reps"] = [&] {
    std::vector<int> reps;
    for (int c = 0; c < T.numClasses; ++c)
      reps.push_back(T.G.elems[T.classRep[c]]);
    return reps;
  }();
  j["class_sizes"] = T.classSize;
  j["class_inverse"] = T.classInv;
  j["degrees"] = T.degree;
  j["rows"] = T.chars;
  return j.dump(2) + "\n";
}

std::string green_to_dot(const MonoidTable& M, const GreenData& G) {
  std::ostringstream os;
  os << "digraph jorder {\n  rankdir=BT;\n";
  for (int c = 0; c < G.numJ; ++c) {
    os << "  j" << c << " [label=\"J" << c << " {";
    for (std::size_t i = 0; i < G.jMembers[c].size() && i < 6; ++i) {
      if (i) os << ",";
      os << M.label(G.jMembers[c][i]);
    }
    if (G.jMembers[c].size() > 6) os << ",...";
    os << "}\"];\n";
  }
  for (int a = 0; a < G.numJ; ++a)
    for (int b = 0; b < G.numJ; ++b) {
      if (a == b || !G.jLeq[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < G.numJ && cover; ++c)
        if (c != a && c != b && G.jLeq[a][c] && G.jLeq[c][b]) cover = false;
      if (cover) os << "  j" << a << " -> j" << b << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace mq
