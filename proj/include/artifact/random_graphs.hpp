#pragma once

#include <random>

#include "artifact/categories.hpp"

namespace artifact {

struct RandomGraphOptions {
  int max_black = 3;
  int max_black_valence = 5;
  int max_white_valence = 3;
  double degenerate_rate = 0.15;
  double unlabeled_start_rate = 0.3;
  bool trivalent = false;  // all black vertices trivalent
};

// Random generator of a morphism (src -> tgt) with a random orientation word.
OGraph random_morphism(std::mt19937_64& rng, ObjectPair src, ObjectPair tgt, const RandomGraphOptions& opt = {});

// Random (m/p)-graph on exactly H half-edges (before degenerates), labels 1..m.
OGraph random_mp_graph(std::mt19937_64& rng, int half_edges, int max_white);

}  // namespace artifact
