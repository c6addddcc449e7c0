// Copyright 2026 The cycsub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cycsub/triples.hpp"

#include <algorithm>

namespace cycsub {

TripleClassification classify_triples(const Graph& g) {
  TripleClassification out;
  const int n = g.vertex_count();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      for (int z = y + 1; z < n; ++z) {
        bool xy = g.adjacent(x, y);
        bool xz = g.adjacent(x, z);
        bool yz = g.adjacent(y, z);
        int edges = int(xy) + int(xz) + int(yz);
        VertexSet tri = VertexSet::of({x, y, z});
        switch (edges) {
          case 0:
            break;  // no edge, no cycle can ever use this triple alone
          case 1: {
            Extension e;
            e.vertices = std::move(tri);
            // The two non-edges, already lexicographic: pairs over
            // {x,y,z} in order are (x,y), (x,z), (y,z).
            VertexPair all[3] = {{x, y}, {x, z}, {y, z}};
            bool present[3] = {xy, xz, yz};
            int k = 0;
            for (int i = 0; i < 3; ++i)
              if (!present[i]) e.non_edges[k++] = all[i];
            out.extensions.push_back(std::move(e));
            break;
          }
          case 2: {
            Foundation f;
            f.vertices = std::move(tri);
            if (!xy)
              f.open = {x, y};
            else if (!xz)
              f.open = {x, z};
            else
              f.open = {y, z};
            out.foundations.push_back(std::move(f));
            break;
          }
          case 3:
            out.cliques.push_back(Clique3{std::move(tri)});
            break;
        }
      }
    }
  }
  return out;
}

}  // namespace cycsub
