#include "cdv/corpus.hpp"

#include <algorithm>
#include <unordered_set>

#include "cdv/errors.hpp"
#include "cdv/graph6.hpp"

namespace cdv {

EnumerationStream::EnumerationStream(int n) : n_(n) {
  if (n < 1 || n > kEnumerationMaxVertices)
    throw CapacityError("enumeration supports 1 <= n <= " + std::to_string(kEnumerationMaxVertices) +
                        ", got " + std::to_string(n));
  current_.push_back(canonical_form(edgeless(n)));
}

void EnumerationStream::advance_level() {
  std::unordered_set<CanonicalForm> seen;
  for (const CanonicalForm& form : current_) {
    const Graph g = form.to_graph();
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (!g.has_edge(u, v)) seen.insert(canonical_form(add_edge(g, u, v)));
  }
  current_.assign(seen.begin(), seen.end());
  std::sort(current_.begin(), current_.end());
  index_ = 0;
  ++level_;
}

std::optional<Graph> EnumerationStream::next() {
  while (index_ == current_.size()) {
    if (level_ >= n_ * (n_ - 1) / 2) return std::nullopt;
    advance_level();
  }
  ++yielded_;
  return current_[index_++].to_graph();
}

Graph6FileStream::Graph6FileStream(const std::string& path) : path_(path), in_(path) {
  if (!in_) throw std::runtime_error("cannot open graph6 file '" + path + "'");
}

std::optional<Graph> Graph6FileStream::next() {
  std::string text;
  while (std::getline(in_, text)) {
    ++line_;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      return graph6_decode(text);
    } catch (const ParseError& e) {
      throw ParseError(path_ + ": " + e.reason(), e.offset(), line_);
    }
  }
  if (in_.bad()) throw std::runtime_error("read error on '" + path_ + "'");
  return std::nullopt;
}

std::optional<Graph> VectorStream::next() {
  if (index_ == graphs_.size()) return std::nullopt;
  return graphs_[index_++];
}

std::unique_ptr<GraphStream> enumerate_graphs(int n) { return std::make_unique<EnumerationStream>(n); }

std::unique_ptr<GraphStream> read_graph6(const std::string& path) {
  return std::make_unique<Graph6FileStream>(path);
}

std::vector<Graph> collect(GraphStream& stream) {
  std::vector<Graph> out;
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

std::vector<Graph> enumerate_up_to(int n_max) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    EnumerationStream s(n);
    auto part = collect(s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

void write_graph6(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  for (const Graph& g : graphs) out << graph6_encode(g) << '\n';
  if (!out) throw std::runtime_error("write error on '" + path + "'");
}

}  // namespace cdv
