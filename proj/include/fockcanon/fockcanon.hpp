#pragma once
// Umbrella header for the whole library.

#include "abacus.hpp"
#include "blocks.hpp"
#include "cache.hpp"
#include "canonical.hpp"
#include "core_profile.hpp"
#include "errors.hpp"
#include "fock.hpp"
#include "jantzen.hpp"
#include "json_io.hpp"
#include "laurent.hpp"
#include "lr.hpp"
#include "partition.hpp"
#include "verify.hpp"
