#pragma once

#include "errors.hpp"
#include "scalar.hpp"
#include "cyclotomic.hpp"
#include "root_of_unity.hpp"
#include "qkernel.hpp"
#include "classical.hpp"
#include "qfamilies.hpp"
#include "qzeta.hpp"
#include "padic.hpp"
#include "io.hpp"
#include "verify.hpp"
#include "commands.hpp"
