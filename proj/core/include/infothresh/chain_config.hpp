#pragma once

#include <string>
#include <vector>

#include "infothresh/chain.hpp"

namespace infothresh {

// Chain definition file: JSON with explicit keys,
//
//   {
//     "version": 1,
//     "initial_prior": 0.2,
//     "items": [
//       {"label": "...", "tpr": 0.7, "tnr": 0.6, "outcome": "positive"},
//       ...
//     ]
//   }
//
// "outcome" may be omitted and defaults to "positive".
struct ChainConfig {
  int version = 1;
  Probability initial_prior;
  std::vector<EvidenceItem> items;
};

// Parses and validates a config file. Malformed JSON raises ParseError
// with the parser's line:column; semantic problems raise ParseError
// naming the offending key path (e.g. items[2].tpr). Unreadable files
// raise IoError.
ChainConfig load_chain_config(const std::string& path);

// Same, from an in-memory document (used by tests and stdin piping).
ChainConfig parse_chain_config(const std::string& text);

}  // namespace infothresh
