#pragma once

#include <cstddef>

#include "graph.hpp"

namespace splitvd {

/// Split Vertex Deletion instance: may at most `budget` vertices be deleted to leave a split graph?
struct svd_instance {
    graph g;
    std::size_t budget = 0;
};

} // namespace splitvd
