#pragma once

#include "vertex_set.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "instance.hpp"
#include "split_recognition.hpp"
#include "partition_gen.hpp"
#include "vc_solver.hpp"
#include "svd_kernel.hpp"
#include "oracle.hpp"
#include "svd_solver.hpp"
