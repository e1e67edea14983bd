#pragma once

// Umbrella header.

#include "gmr/alphabet.hpp"
#include "gmr/comm_rewriting.hpp"
#include "gmr/completion.hpp"
#include "gmr/expvec.hpp"
#include "gmr/ideals.hpp"
#include "gmr/io.hpp"
#include "gmr/ordering.hpp"
#include "gmr/polynomial.hpp"
#include "gmr/presentation.hpp"
#include "gmr/reduction.hpp"
#include "gmr/rewriting.hpp"
#include "gmr/saturation.hpp"
#include "gmr/word.hpp"
