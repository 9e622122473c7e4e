#pragma once

// Umbrella header.

#include "permlab/catalog.hpp"
#include "permlab/chartab.hpp"
#include "permlab/classalg.hpp"
#include "permlab/corpus.hpp"
#include "permlab/cyclotomic.hpp"
#include "permlab/errors.hpp"
#include "permlab/group.hpp"
#include "permlab/numth.hpp"
#include "permlab/perm.hpp"
#include "permlab/series.hpp"
#include "permlab/verify.hpp"
