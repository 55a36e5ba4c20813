// texlab.hpp
// Umbrella header.

#pragma once

#include "texlab/matker.hpp"
#include "texlab/random.hpp"
#include "texlab/states.hpp"
#include "texlab/channels.hpp"
#include "texlab/measures.hpp"
#include "texlab/roof.hpp"
#include "texlab/io.hpp"
#include "texlab/proplab.hpp"
