#pragma once

#include "kreinkit/error.hpp"
#include "kreinkit/tolerance.hpp"
#include "kreinkit/spectral.hpp"
#include "kreinkit/completion.hpp"
#include "kreinkit/factor.hpp"
#include "kreinkit/lifting.hpp"
#include "kreinkit/quasicontraction.hpp"
#include "kreinkit/relations.hpp"
