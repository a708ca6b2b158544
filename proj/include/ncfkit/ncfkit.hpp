/*!
  \file ncfkit.hpp
  \brief Main header for the nested canalyzing function toolkit
*/

#pragma once

#include "anf.hpp"
#include "canalyze.hpp"
#include "dyadic.hpp"
#include "enumerate.hpp"
#include "formulas.hpp"
#include "oracle.hpp"
#include "structure_io.hpp"
#include "truth_table.hpp"
