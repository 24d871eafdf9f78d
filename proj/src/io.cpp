#include "qramsey/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qramsey {

void KvDoc::add(const std::string& key, const std::string& value) {
  entries.push_back({key, value});
}

void KvDoc::add_u64(const std::string& key, std::uint64_t value) {
  add(key, std::to_string(value));
}

const std::string* KvDoc::find(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return &v;
  return nullptr;
}

std::string KvDoc::get(const std::string& key) const {
  const std::string* v = find(key);
  if (!v) throw std::invalid_argument("missing key: " + key);
  return *v;
}

std::uint64_t KvDoc::get_u64(const std::string& key) const {
  return std::stoull(get(key));
}

std::vector<std::string> KvDoc::all(const std::string& key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries)
    if (k == key) out.push_back(v);
  return out;
}

std::string write_kv(const KvDoc& doc) {
  std::string out;
  for (const auto& [k, v] : doc.entries) {
    out += k;
    if (!v.empty()) {
      out += ' ';
      out += v;
    }
    out += '\n';
  }
  return out;
}

KvDoc parse_kv(const std::string& text) {
  KvDoc doc;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    auto space = line.find(' ');
    if (space == std::string::npos)
      doc.add(line, "");
    else
      doc.add(line.substr(0, space),
              line.substr(line.find_first_not_of(' ', space)));
  }
  return doc;
}

std::string compress_vertices(const std::vector<Vertex>& vertices) {
  std::string out;
  std::size_t i = 0;
  while (i < vertices.size()) {
    std::size_t j = i;
    while (j + 1 < vertices.size() && vertices[j + 1] == vertices[j] + 1) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(vertices[i]);
    if (j > i) {
      out += '-';
      out += std::to_string(vertices[j]);
    }
    i = j + 1;
  }
  return out;
}

std::vector<Vertex> parse_vertices(const std::string& text) {
  std::vector<Vertex> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    std::string tok = text.substr(i, j - i);
    auto dash = tok.find('-');
    std::uint64_t lo, hi;
    if (dash == std::string::npos) {
      lo = hi = std::stoull(tok);
    } else {
      lo = std::stoull(tok.substr(0, dash));
      hi = std::stoull(tok.substr(dash + 1));
    }
    if (hi < lo || (!out.empty() && lo <= out.back()))
      throw std::invalid_argument("vertex list not ascending: " + tok);
    for (std::uint64_t v = lo; v <= hi; ++v)
      out.push_back(static_cast<Vertex>(v));
    i = j + 1;
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

KvDoc describe_oracle(const Coloring& c) {
  KvDoc doc;
  switch (c.kind) {
    case Coloring::Kind::all_red:
      doc.add("kind", "all-red");
      break;
    case Coloring::Kind::blue_random:
      doc.add("kind", "blue-random");
      break;
    case Coloring::Kind::blue_multipartite:
      doc.add("kind", "blue-multipartite");
      break;
    case Coloring::Kind::blue_matching:
      doc.add("kind", "blue-matching");
      break;
    case Coloring::Kind::lower_bound:
      doc.add("kind", "lower-bound");
      break;
    case Coloring::Kind::explicit_matrix:
      doc.add("kind", "explicit-matrix");
      break;
  }
  doc.add_u64("N", c.N);
  if (c.kind == Coloring::Kind::blue_random ||
      c.kind == Coloring::Kind::blue_multipartite) {
    doc.add("p", format_double(c.p));
    doc.add_u64("seed", c.seed);
  }
  if (c.kind == Coloring::Kind::blue_multipartite)
    doc.add_u64("parts", static_cast<std::uint64_t>(c.parts));
  if (c.kind == Coloring::Kind::lower_bound) {
    doc.add_u64("m", c.block);
    doc.add_u64("s", c.N / c.block + 1);
  }
  return doc;
}

Coloring oracle_from_kv(const KvDoc& doc, const std::string& base_dir) {
  std::string kind = doc.get("kind");
  if (kind == "file-backed" || kind == "file") {
    std::string path = doc.get("file");
    if (!base_dir.empty() && path.front() != '/')
      path = base_dir + "/" + path;
    return read_matrix(path);
  }
  std::uint64_t n = doc.get_u64("N");
  if (kind == "all-red") return Coloring::all_red(n);
  if (kind == "blue-matching") return Coloring::blue_matching(n);
  if (kind == "blue-random")
    return Coloring::blue_random(n, std::stod(doc.get("p")),
                                 doc.get_u64("seed"));
  if (kind == "blue-multipartite")
    return Coloring::blue_multipartite(
        n, static_cast<int>(doc.get_u64("parts")), std::stod(doc.get("p")),
        doc.get_u64("seed"));
  if (kind == "lower-bound")
    return Coloring::lower_bound(static_cast<int>(doc.get_u64("s")),
                                 doc.get_u64("m"));
  if (kind == "explicit-matrix") return Coloring::explicit_matrix(n);
  throw std::invalid_argument("unknown oracle kind: " + kind);
}

void write_matrix(const std::string& path, const Coloring& c) {
  if (c.N > 20000)
    throw std::invalid_argument("write_matrix: N too large to materialize");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out.write("RQCB", 4);
  char version = 0x01;
  out.write(&version, 1);
  unsigned char nbuf[8];
  for (int i = 0; i < 8; ++i)
    nbuf[i] = static_cast<unsigned char>((c.N >> (8 * i)) & 0xff);
  out.write(reinterpret_cast<char*>(nbuf), 8);
  for (std::uint64_t u = 0; u < c.N; ++u) {
    std::uint64_t row_bits = c.N - 1 - u;
    std::vector<unsigned char> row((row_bits + 7) / 8, 0);
    for (std::uint64_t j = 0; j < row_bits; ++j)
      if (c.blue(static_cast<Vertex>(u), static_cast<Vertex>(u + 1 + j)))
        row[j / 8] |= static_cast<unsigned char>(1u << (j % 8));
    out.write(reinterpret_cast<char*>(row.data()),
              static_cast<std::streamsize>(row.size()));
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

Coloring read_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::string(magic, 4) != "RQCB")
    throw std::runtime_error(path + ": bad magic");
  char version = 0;
  in.read(&version, 1);
  if (version != 0x01) throw std::runtime_error(path + ": bad version");
  unsigned char nbuf[8];
  in.read(reinterpret_cast<char*>(nbuf), 8);
  if (!in) throw std::runtime_error(path + ": truncated header");
  std::uint64_t n = 0;
  for (int i = 0; i < 8; ++i) n |= std::uint64_t{nbuf[i]} << (8 * i);
  if (n > 20000) throw std::runtime_error(path + ": matrix too large");
  Coloring c = Coloring::explicit_matrix(n);
  for (std::uint64_t u = 0; u < n; ++u) {
    std::uint64_t row_bits = n - 1 - u;
    std::vector<unsigned char> row((row_bits + 7) / 8, 0);
    in.read(reinterpret_cast<char*>(row.data()),
            static_cast<std::streamsize>(row.size()));
    if (!in) throw std::runtime_error(path + ": truncated row");
    for (std::uint64_t j = 0; j < row_bits; ++j)
      if ((row[j / 8] >> (j % 8)) & 1)
        c.set_color(static_cast<Vertex>(u), static_cast<Vertex>(u + 1 + j),
                    Color::blue);
  }
  return c;
}

std::string write_embedding(const Embedding& e) {
  KvDoc doc;
  doc.add_u64("n", static_cast<std::uint64_t>(e.n));
  std::string map;
  for (std::size_t i = 0; i < e.map.size(); ++i) {
    if (i) map += ',';
    map += std::to_string(e.map[i]);
  }
  doc.add("map", map);
  return write_kv(doc);
}

Embedding parse_embedding(const std::string& text) {
  KvDoc doc = parse_kv(text);
  Embedding e;
  e.n = static_cast<int>(doc.get_u64("n"));
  std::string map = doc.get("map");
  std::size_t i = 0;
  while (i < map.size()) {
    std::size_t j = map.find(',', i);
    if (j == std::string::npos) j = map.size();
    e.map.push_back(static_cast<Vertex>(std::stoull(map.substr(i, j - i))));
    i = j + 1;
  }
  if (e.map.size() != (std::size_t{1} << e.n))
    throw std::invalid_argument("embedding map has wrong length");
  return e;
}

namespace {

// "k=v k=v ..." records; the final field may contain no spaces either.
std::vector<std::pair<std::string, std::string>> parse_record(
    const std::string& text) {
  std::vector<std::pair<std::string, std::string>> fields;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("bad record token: " + tok);
    fields.push_back({tok.substr(0, eq), tok.substr(eq + 1)});
  }
  return fields;
}

std::string record_field(
    const std::vector<std::pair<std::string, std::string>>& fields,
    const std::string& key) {
  for (const auto& [k, v] : fields)
    if (k == key) return v;
  throw std::invalid_argument("record missing field: " + key);
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<int> split_ints(const std::string& text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    out.push_back(std::stoi(text.substr(i, j - i)));
    i = j + 1;
  }
  return out;
}

LeveledSet::Freeness freeness_from(const std::string& text) {
  if (text == "exact-verified") return LeveledSet::Freeness::exact_verified;
  if (text == "by-construction") return LeveledSet::Freeness::by_construction;
  if (text == "assumed") return LeveledSet::Freeness::assumed;
  throw std::invalid_argument("unknown freeness: " + text);
}

}  // namespace

std::string write_forest(const FamilyForest& forest) {
  KvDoc doc;
  doc.add("forest-version", "1");
  doc.add_u64("s", static_cast<std::uint64_t>(forest.s));
  doc.add_u64("n", static_cast<std::uint64_t>(forest.n));
  for (const LeveledSet& st : forest.sets) {
    std::string rec = "id=" + std::to_string(st.id) +
                      " level=" + std::to_string(st.level) +
                      " parent=" + std::to_string(st.parent) +
                      " codims=" + join_ints(st.level_codims) +
                      " exceptional=" + (st.exceptional ? "1" : "0") +
                      " freeness=" + to_string(st.freeness) +
                      " vertices=" + compress_vertices(st.vertices);
    doc.add("set", rec);
  }
  return write_kv(doc);
}

FamilyForest parse_forest(const std::string& text) {
  KvDoc doc = parse_kv(text);
  if (doc.get("forest-version") != "1")
    throw std::invalid_argument("unsupported forest version");
  FamilyForest forest;
  forest.s = static_cast<int>(doc.get_u64("s"));
  forest.n = static_cast<int>(doc.get_u64("n"));
  for (const std::string& rec : doc.all("set")) {
    auto fields = parse_record(rec);
    LeveledSet st;
    st.level = std::stoi(record_field(fields, "level"));
    st.parent = std::stoi(record_field(fields, "parent"));
    st.level_codims = split_ints(record_field(fields, "codims"));
    st.exceptional = record_field(fields, "exceptional") == "1";
    st.freeness = freeness_from(record_field(fields, "freeness"));
    st.vertices = parse_vertices(record_field(fields, "vertices"));
    int want = std::stoi(record_field(fields, "id"));
    int got = forest.add_set(std::move(st));
    if (got != want)
      throw std::invalid_argument("forest ids not in writing order");
  }
  std::string err = forest.validate();
  if (!err.empty()) throw std::invalid_argument("forest invalid: " + err);
  return forest;
}

TilingSnapshot snapshot_of(const TilingRun& run) {
  TilingSnapshot snap;
  snap.s = run.params().s;
  snap.n = run.params().n;
  const MultiTiling& tiling = run.tiling();
  for (int level = 0; level < static_cast<int>(tiling.levels.size()); ++level)
    for (int index = 0; index < static_cast<int>(tiling.levels[level].size());
         ++index) {
      const LeveledCube& c = tiling.levels[level][index];
      TilingSnapshot::Cube cube;
      cube.level = level;
      cube.index = index;
      cube.cube = c.cube;
      cube.level_codims = c.level_codims;
      cube.set_id = run.assignment().set_id(CubeId{level, index});
      snap.cubes.push_back(cube);
    }
  for (std::size_t k = 0; k < tiling.insertion_log.size(); ++k) {
    const auto& e = tiling.insertion_log[k];
    snap.log.push_back({k, e.id.level, e.id.index});
  }
  return snap;
}

std::string write_snapshot(const TilingSnapshot& snap) {
  KvDoc doc;
  doc.add("tiling-version", "1");
  doc.add_u64("s", static_cast<std::uint64_t>(snap.s));
  doc.add_u64("n", static_cast<std::uint64_t>(snap.n));
  for (const auto& c : snap.cubes)
    doc.add("cube", "level=" + std::to_string(c.level) +
                        " index=" + std::to_string(c.index) +
                        " cube=" + format_cube(c.cube) +
                        " codims=" + join_ints(c.level_codims) +
                        " set=" + std::to_string(c.set_id));
  for (const auto& e : snap.log)
    doc.add("inserted", "step=" + std::to_string(e.step) +
                            " level=" + std::to_string(e.level) +
                            " index=" + std::to_string(e.index));
  return write_kv(doc);
}

TilingSnapshot parse_snapshot(const std::string& text) {
  KvDoc doc = parse_kv(text);
  if (doc.get("tiling-version") != "1")
    throw std::invalid_argument("unsupported tiling version");
  TilingSnapshot snap;
  snap.s = static_cast<int>(doc.get_u64("s"));
  snap.n = static_cast<int>(doc.get_u64("n"));
  for (const std::string& rec : doc.all("cube")) {
    auto fields = parse_record(rec);
    TilingSnapshot::Cube c;
    c.level = std::stoi(record_field(fields, "level"));
    c.index = std::stoi(record_field(fields, "index"));
    c.cube = parse_cube(record_field(fields, "cube"));
    c.level_codims = split_ints(record_field(fields, "codims"));
    c.set_id = std::stoi(record_field(fields, "set"));
    snap.cubes.push_back(c);
  }
  for (const std::string& rec : doc.all("inserted")) {
    auto fields = parse_record(rec);
    snap.log.push_back({std::stoull(record_field(fields, "step")),
                        std::stoi(record_field(fields, "level")),
                        std::stoi(record_field(fields, "index"))});
  }
  return snap;
}

std::string write_graph(const SimpleGraph& g) {
  std::string out =
      std::to_string(g.n) + " " + std::to_string(g.edge_count()) + "\n";
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (u < v) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

SimpleGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  std::uint64_t m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("graph: bad header");
  SimpleGraph g(n);
  for (std::uint64_t i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("graph: truncated");
    g.add_edge(u, v);
  }
  return g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace qramsey
