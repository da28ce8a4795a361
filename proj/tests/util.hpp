#pragma once

#include <vector>

#include "cactusmp/core.hpp"

namespace testutil {

inline cactusmp::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return cactusmp::from_edge_list(n, e);
}

inline cactusmp::Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return cactusmp::from_edge_list(n, e);
}

inline cactusmp::Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return cactusmp::from_edge_list(leaves + 1, e);
}

inline cactusmp::Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return cactusmp::from_edge_list(n, e);
}

}  // namespace testutil
