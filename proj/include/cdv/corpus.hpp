#pragma once

#include <cstddef>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cdv/canonical.hpp"
#include "cdv/graph.hpp"

namespace cdv {

inline constexpr int kEnumerationMaxVertices = 8;

/// Single-reader pull stream of graphs in a deterministic order.
class GraphStream {
 public:
  virtual ~GraphStream() = default;
  /// Next graph, or nullopt at end of stream.
  virtual std::optional<Graph> next() = 0;
  /// Where the most recent graph came from ("enumerate:7", "file.g6").
  virtual std::string source() const = 0;
  /// 1-based line of the most recent graph for file streams, else its index.
  virtual std::size_t position() const = 0;
};

/// Every isomorphism class on n vertices (1 <= n <= 8), once each, in order
/// of edge count and then canonical form. Yielded graphs are canonically
/// labeled. Classes are grown level by level: each class with m edges is
/// extended by every non-edge and the canonical forms of the results are
/// deduplicated to form level m + 1.
class EnumerationStream final : public GraphStream {
 public:
  explicit EnumerationStream(int n);
  std::optional<Graph> next() override;
  std::string source() const override { return "enumerate:" + std::to_string(n_); }
  std::size_t position() const override { return yielded_; }

 private:
  void advance_level();

  int n_;
  int level_ = 0;
  std::vector<CanonicalForm> current_;
  std::size_t index_ = 0;
  std::size_t yielded_ = 0;
};

/// graph6 file, one graph per line; blank lines are skipped. A malformed
/// line throws ParseError carrying the line number and byte offset.
class Graph6FileStream final : public GraphStream {
 public:
  explicit Graph6FileStream(const std::string& path);
  std::optional<Graph> next() override;
  std::string source() const override { return path_; }
  std::size_t position() const override { return line_; }

 private:
  std::string path_;
  std::ifstream in_;
  std::size_t line_ = 0;
};

/// A fixed list, mostly for tests and constructed families.
class VectorStream final : public GraphStream {
 public:
  explicit VectorStream(std::vector<Graph> graphs, std::string name = "list")
      : graphs_(std::move(graphs)), name_(std::move(name)) {}
  std::optional<Graph> next() override;
  std::string source() const override { return name_; }
  std::size_t position() const override { return index_; }

 private:
  std::vector<Graph> graphs_;
  std::string name_;
  std::size_t index_ = 0;
};

std::unique_ptr<GraphStream> enumerate_graphs(int n);
std::unique_ptr<GraphStream> read_graph6(const std::string& path);

/// Drains a stream.
std::vector<Graph> collect(GraphStream& stream);
/// All classes on 1..n_max vertices, in order of n.
std::vector<Graph> enumerate_up_to(int n_max);

void write_graph6(const std::string& path, const std::vector<Graph>& graphs);

}  // namespace cdv
