#pragma once

#include <string>

#include "whittle/model.hpp"

namespace whittle {

// Plain-text bandit description, one `key = value` per line. Arrays are
// whitespace-separated. `#` starts a comment. Keys:
//
//   p11, p01         per-arm transition probabilities (required, equal length)
//   reward           per-arm reward weights (optional, default all 1.0)
//   m                arms probed per slot (default 1)
//   epsilon          false-alarm probability (default 0.1)
//   delta            miss-detection probability; parsed for compatibility,
//                    ignored by every computation (default 0)
//   beta             discount factor (default 0.9)
//   horizon          slots per episode (default 100)
//   seed             64-bit unsigned RNG seed (default 0)
//   initial_beliefs  per-arm initial beliefs (optional, default stationary)
//
// Unknown keys and malformed values raise std::invalid_argument.
BanditConfig parse_bandit_config(const std::string& text);

BanditConfig load_bandit_config(const std::string& path);

// Round-trip rendering of a resolved config (initial beliefs written out
// explicitly, doubles with round-trip precision). parse(serialize(c)) yields
// a config equivalent to c.
std::string serialize_bandit_config(const BanditConfig& config);

}  // namespace whittle
