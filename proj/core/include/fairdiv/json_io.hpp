#pragma once

#include <optional>
#include <string>

#include "fairdiv/model.hpp"

namespace fairdiv {

// Instance files:
//   { "n": int, "m": int, "k": int,
//     "rankings": [[int, ...], ...],
//     "valuations": [[[num, den], ...], ...] }   (optional)
// Rational components are JSON integers when they fit in 64 bits, decimal
// strings otherwise. Valuations, when present, must be consistent with the
// rankings. Allocation files: { "bundles": [[int, ...], ...] }.

struct InstanceFile {
  Instance instance;
  std::optional<ValuationProfile> valuations;
};

InstanceFile parse_instance_json(const std::string& text);
std::string instance_json(const Instance& inst,
                          const std::optional<ValuationProfile>& valuations = std::nullopt);

Allocation parse_allocation_json(const std::string& text, int n, int m);
std::string allocation_json(const Allocation& a);

InstanceFile load_instance_file(const std::string& path);
Allocation load_allocation_file(const std::string& path, int n, int m);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fairdiv
