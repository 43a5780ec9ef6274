// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_GAPKIT_HPP_
#define GAPKIT_GAPKIT_HPP_

#include "gapkit/benchmark.hpp"
#include "gapkit/builder.hpp"
#include "gapkit/edge_list.hpp"
#include "gapkit/errors.hpp"
#include "gapkit/generator.hpp"
#include "gapkit/graph.hpp"
#include "gapkit/io.hpp"
#include "gapkit/kernels.hpp"
#include "gapkit/source_picker.hpp"
#include "gapkit/types.hpp"
#include "gapkit/verify.hpp"

#endif  // GAPKIT_GAPKIT_HPP_
