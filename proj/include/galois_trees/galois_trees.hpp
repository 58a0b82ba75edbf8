#pragma once

#include "galois_trees/abelian_group.hpp"
#include "galois_trees/bigint.hpp"
#include "galois_trees/cover.hpp"
#include "galois_trees/cyclotomic.hpp"
#include "galois_trees/error.hpp"
#include "galois_trees/graph.hpp"
#include "galois_trees/io.hpp"
#include "galois_trees/jacobian.hpp"
#include "galois_trees/matrix.hpp"
#include "galois_trees/matroid.hpp"
#include "galois_trees/polynomial.hpp"
#include "galois_trees/report.hpp"
#include "galois_trees/smith.hpp"
#include "galois_trees/verify.hpp"
#include "galois_trees/zeta.hpp"
