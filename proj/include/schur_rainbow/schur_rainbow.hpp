#pragma once

#include "schur_rainbow/bounds.hpp"
#include "schur_rainbow/compress.hpp"
#include "schur_rainbow/core.hpp"
#include "schur_rainbow/rainbow.hpp"
#include "schur_rainbow/search.hpp"
