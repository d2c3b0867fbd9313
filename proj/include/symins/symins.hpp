#pragma once

#include "symins/words.hpp"
#include "symins/coaction.hpp"
#include "symins/encodings.hpp"
#include "symins/verifier.hpp"
#include "symins/bigfloat.hpp"
#include "symins/numerics.hpp"
#include "symins/serialize.hpp"
