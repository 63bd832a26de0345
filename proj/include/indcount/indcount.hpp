//
// Project indcount - Copyright 2026 The indcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include "indcount/bigcp.hpp"
#include "indcount/generators.hpp"
#include "indcount/graph.hpp"
#include "indcount/integer.hpp"
#include "indcount/io.hpp"
#include "indcount/linear_extractor.hpp"
#include "indcount/oracle.hpp"
#include "indcount/pattern_poly.hpp"
#include "indcount/pipeline.hpp"
#include "indcount/subgraph_enum.hpp"
