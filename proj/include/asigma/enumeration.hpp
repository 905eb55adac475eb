#pragma once

#include <istream>
#include <memory>
#include <optional>
#include <vector>

#include "asigma/graph.hpp"
#include "asigma/graph6.hpp"

namespace asigma {

constexpr int kMaxTreeOrder = 22;
constexpr int kMaxConnectedOrder = 9;

class GraphStream {
 public:
  virtual ~GraphStream() = default;
  virtual std::optional<Graph> next() = 0;
};

// One tree per isomorphism class, 1 <= n <= 22, in a fixed order. Uses
// centre-rooted level sequences (constant amortised time free-tree generation).
std::unique_ptr<GraphStream> all_trees(int n);

// One connected graph per isomorphism class, 1 <= n <= 9, by canonical
// vertex augmentation of the (n-1)-vertex classes.
std::unique_ptr<GraphStream> all_connected_graphs(int n);

std::unique_ptr<GraphStream> filter_alpha(std::unique_ptr<GraphStream> src, int alpha);

// Graphs read from a graph6 stream, one per line.
std::unique_ptr<GraphStream> graph6_stream(std::istream& in);

std::vector<Graph> collect(GraphStream& s);
// Replays a list; the list must outlive the stream.
std::unique_ptr<GraphStream> vector_stream(const std::vector<Graph>& graphs);

}  // namespace asigma
