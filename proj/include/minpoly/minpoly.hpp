#pragma once

#include "error.hpp"
#include "field.hpp"
#include "poly.hpp"
#include "sequence.hpp"
#include "engine.hpp"
#include "naive.hpp"
#include "oracle.hpp"
#include "lfsr.hpp"
