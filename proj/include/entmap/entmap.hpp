#pragma once

// Umbrella header for the whole library.
#include "entmap/annotation.hpp"
#include "entmap/errors.hpp"
#include "entmap/infer.hpp"
#include "entmap/io.hpp"
#include "entmap/labels.hpp"
#include "entmap/likelihood.hpp"
#include "entmap/metrics.hpp"
#include "entmap/prior.hpp"
