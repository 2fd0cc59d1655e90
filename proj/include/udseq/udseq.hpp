#pragma once

#include "udseq/core.hpp"
#include "udseq/dimension.hpp"
#include "udseq/discrepancy.hpp"
#include "udseq/dss.hpp"
#include "udseq/limsup.hpp"
#include "udseq/rates.hpp"
#include "udseq/sequences.hpp"
#include "udseq/serialize.hpp"
#include "udseq/ubiquity.hpp"
