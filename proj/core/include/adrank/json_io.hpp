#pragma once

#include <string>

#include "adrank/instance.hpp"

namespace adrank {

/// Parses the instance interchange format: an object with `app` tag
/// ("mir", "odt", "godt", "ecd", "drd"), `costs` array, and `scenarios`
/// array of {p, set | feedback, K | t | class}; DRD adds a top-level
/// `regions` array, multiway feedback an optional `alphabet`. Unknown app
/// tags, unknown fields, unsorted sets, and payload/app mismatches all
/// raise ParseError.
Instance instance_from_json(const std::string& text);

/// instance_from_json over a file; missing file raises ParseError.
Instance load_instance(const std::string& path);

/// Serializes to the same format (two-space indent, stable field order).
/// Only the five concrete applications are writable; App::none and
/// App::ranking instances carry arbitrary oracles and are rejected.
std::string instance_to_json(const Instance& inst);

void save_instance(const Instance& inst, const std::string& path);

}  // namespace adrank
