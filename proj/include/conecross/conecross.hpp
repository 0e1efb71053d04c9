#pragma once

#include "conecross/book.hpp"
#include "conecross/bounds.hpp"
#include "conecross/certificate.hpp"
#include "conecross/constructions.hpp"
#include "conecross/experiments.hpp"
#include "conecross/graph.hpp"
#include "conecross/heuristic.hpp"
#include "conecross/io.hpp"
#include "conecross/isomorphism.hpp"
#include "conecross/maxcut.hpp"
#include "conecross/page_transform.hpp"
#include "conecross/planarity.hpp"
#include "conecross/simple_graph.hpp"
#include "conecross/solver.hpp"
