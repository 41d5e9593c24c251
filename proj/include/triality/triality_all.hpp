#pragma once

#include "campaign.hpp"
#include "code_loops.hpp"
#include "codec.hpp"
#include "element.hpp"
#include "embedding.hpp"
#include "enumerate.hpp"
#include "f2.hpp"
#include "free_loop.hpp"
#include "g3.hpp"
#include "group_ctx.hpp"
#include "identities.hpp"
#include "loop.hpp"
#include "m_loop.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "rng.hpp"
#include "s3.hpp"
#include "sample.hpp"
#include "table_io.hpp"
#include "triality.hpp"
