#pragma once

// Structured-text and binary formats: key-value documents,
// interval-compressed vertex lists, oracle descriptors, the RQCB explicit
// matrix container, embeddings, family forests, tiling checkpoints, and
// adjacency-list graphs.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qramsey/coloring.hpp"
#include "qramsey/families.hpp"
#include "qramsey/separator.hpp"
#include "qramsey/tiling.hpp"

namespace qramsey {

// Ordered key-value document.  One entry per line, "key value"; '#' starts
// a comment; keys repeat.
struct KvDoc {
  std::vector<std::pair<std::string, std::string>> entries;

  void add(const std::string& key, const std::string& value);
  void add_u64(const std::string& key, std::uint64_t value);
  const std::string* find(const std::string& key) const;
  std::string get(const std::string& key) const;  // throws when missing
  std::uint64_t get_u64(const std::string& key) const;
  std::vector<std::string> all(const std::string& key) const;
};

std::string write_kv(const KvDoc& doc);
KvDoc parse_kv(const std::string& text);

// "0-5,7,9-12" over a strictly ascending list.
std::string compress_vertices(const std::vector<Vertex>& vertices);
std::vector<Vertex> parse_vertices(const std::string& text);

// Exact round-trip for doubles.
std::string format_double(double x);

// Oracle descriptors: kind, N, and the generator parameters that apply.
KvDoc describe_oracle(const Coloring& c);
// base_dir resolves a relative "file" entry for file-backed matrices.
Coloring oracle_from_kv(const KvDoc& doc, const std::string& base_dir = "");

// RQCB container: magic "RQCB", version 0x01, u64 N little-endian, then a
// row-major upper-triangle bitstream (row u holds columns u+1..N-1), bit 1 =
// blue, rows padded to byte boundaries, bits LSB-first within a byte.
void write_matrix(const std::string& path, const Coloring& c);
Coloring read_matrix(const std::string& path);

std::string write_embedding(const Embedding& e);
Embedding parse_embedding(const std::string& text);

std::string write_forest(const FamilyForest& forest);
FamilyForest parse_forest(const std::string& text);

// Checkpoint of a tiling run: cubes with assignments plus the insertion log.
struct TilingSnapshot {
  int s = 0;
  int n = 0;
  struct Cube {
    int level = 0;
    int index = 0;
    SpecialCube cube;
    std::vector<int> level_codims;
    int set_id = 0;
  };
  std::vector<Cube> cubes;
  struct LogEntry {
    std::uint64_t step = 0;
    int level = 0;
    int index = 0;
  };
  std::vector<LogEntry> log;
};

TilingSnapshot snapshot_of(const TilingRun& run);
std::string write_snapshot(const TilingSnapshot& snap);
TilingSnapshot parse_snapshot(const std::string& text);

// Adjacency-list graph text: "n m" header line then one "u v" line per edge.
std::string write_graph(const SimpleGraph& g);
SimpleGraph parse_graph(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace qramsey
