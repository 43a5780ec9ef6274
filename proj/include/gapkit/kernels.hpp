// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_KERNELS_HPP_
#define GAPKIT_KERNELS_HPP_

#include "gapkit/kernels/betweenness.hpp"
#include "gapkit/kernels/bfs.hpp"
#include "gapkit/kernels/components.hpp"
#include "gapkit/kernels/pagerank.hpp"
#include "gapkit/kernels/sssp.hpp"
#include "gapkit/kernels/triangle.hpp"

#endif  // GAPKIT_KERNELS_HPP_
