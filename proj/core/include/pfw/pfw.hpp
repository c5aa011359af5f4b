#pragma once

#include "pfw/bits.hpp"
#include "pfw/catalog.hpp"
#include "pfw/completion.hpp"
#include "pfw/congruence.hpp"
#include "pfw/entourage.hpp"
#include "pfw/error.hpp"
#include "pfw/frame.hpp"
#include "pfw/frith.hpp"
#include "pfw/hom.hpp"
#include "pfw/io.hpp"
#include "pfw/pervin.hpp"
#include "pfw/poset.hpp"
#include "pfw/predicates.hpp"
#include "pfw/render.hpp"
#include "pfw/spectrum.hpp"
#include "pfw/sublattice.hpp"
#include "pfw/suite.hpp"
