#pragma once

#include <cstddef>

namespace xmodkit {

/// Size bounds for the exhaustive searches. The defaults keep every
/// acceptance check well under a minute.
struct Limits {
  // automorphism_group refuses groups larger than this
  std::size_t aut_bound = 16;
  // enumerate_extensions_oracle requires |A|*|D| <= this
  std::size_t extension_bound = 12;
  // log2 of the raw normalized cochain space an enumeration may walk
  double enumeration_bits = 40.0;
  // worker threads for data-parallel enumerations; results are merged
  // in canonical order regardless of this value
  unsigned threads = 1;
};

}  // namespace xmodkit
