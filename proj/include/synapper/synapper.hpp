// Umbrella header.

#ifndef SYNAPPER_SYNAPPER_HPP
#define SYNAPPER_SYNAPPER_HPP

#include "synapper/chance.hpp"
#include "synapper/io.hpp"
#include "synapper/linearize.hpp"
#include "synapper/model.hpp"
#include "synapper/profile.hpp"
#include "synapper/transform.hpp"
#include "synapper/translate.hpp"
#include "synapper/types.hpp"

#endif  // SYNAPPER_SYNAPPER_HPP
