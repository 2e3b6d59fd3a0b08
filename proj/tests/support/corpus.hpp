#pragma once

#include <string>
#include <vector>

#include "ecut/expanders.hpp"
#include "oracles.hpp"

namespace corpus {

struct Entry {
  std::string name;
  ecut::LeveledGraph graph;
  int degree;
};

// K2, C4, C6, K4, Petersen and three seeded random cubic graphs.
inline std::vector<Entry> cheeger_corpus() {
  std::vector<Entry> out;
  out.push_back({"K2", oracle::complete(2), 1});
  out.push_back({"C4", oracle::cycle(4), 2});
  out.push_back({"C6", oracle::cycle(6), 2});
  out.push_back({"K4", oracle::complete(4), 3});
  out.push_back({"Petersen", oracle::petersen(), 3});
  out.push_back({"cubic8", ecut::random_regular_graph(3, 8, 11), 3});
  out.push_back({"cubic10", ecut::random_regular_graph(3, 10, 12), 3});
  out.push_back({"cubic14", ecut::random_regular_graph(3, 14, 13), 3});
  return out;
}

}  // namespace corpus
