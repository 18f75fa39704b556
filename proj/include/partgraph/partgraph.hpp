#pragma once

#include "partgraph/errors.hpp"
#include "partgraph/partition.hpp"
#include "partgraph/graph.hpp"
#include "partgraph/clique.hpp"
#include "partgraph/invariants.hpp"
#include "partgraph/jumps.hpp"
#include "partgraph/layers.hpp"
#include "partgraph/atlas/dataset.hpp"
#include "partgraph/atlas/tables.hpp"
#include "partgraph/atlas/verify.hpp"
#include "partgraph/atlas/report.hpp"
#include "partgraph/atlas/svg.hpp"
