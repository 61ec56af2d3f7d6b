#pragma once

#include "seuclid/exact/bigint.hpp"
#include "seuclid/exact/number_theory.hpp"
#include "seuclid/exact/rational.hpp"
#include "seuclid/exact/surd.hpp"
#include "seuclid/field.hpp"
#include "seuclid/covering.hpp"
#include "seuclid/disks.hpp"
#include "seuclid/exceptional.hpp"
#include "seuclid/witness.hpp"
#include "seuclid/survey.hpp"
#include "seuclid/serialize.hpp"
#include "seuclid/render.hpp"
#include "seuclid/commands.hpp"
