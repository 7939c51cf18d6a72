#pragma once

#include "mcd/cyl_solver.hpp"
#include "mcd/drawing.hpp"
#include "mcd/error.hpp"
#include "mcd/faults.hpp"
#include "mcd/flag_solver.hpp"
#include "mcd/generators.hpp"
#include "mcd/geometry.hpp"
#include "mcd/io.hpp"
#include "mcd/lemma_check.hpp"
#include "mcd/oracle.hpp"
#include "mcd/paper_bounds.hpp"
#include "mcd/rational.hpp"
#include "mcd/svg.hpp"
#include "mcd/validate.hpp"
