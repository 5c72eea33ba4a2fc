#pragma once

#include "polarfast/bits.hpp"
#include "polarfast/block_decoders.hpp"
#include "polarfast/case_tables.hpp"
#include "polarfast/channel.hpp"
#include "polarfast/construction.hpp"
#include "polarfast/domination.hpp"
#include "polarfast/hybrid_decoder.hpp"
#include "polarfast/latency.hpp"
#include "polarfast/llr_ops.hpp"
#include "polarfast/sc_decoder.hpp"
#include "polarfast/simulation.hpp"
#include "polarfast/transform.hpp"
#include "polarfast/verify.hpp"
