#pragma once

#include <json.hpp>

#include "c2framed/numeric_verify.hpp"
#include "c2framed/stem_groups.hpp"

namespace c2framed {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson to_json(const Pi1Element& e) {
    return OrderedJson{{"pi1", static_cast<int>(e.pi1_sphere)},
                       {"h0", static_cast<int>(e.h0_bc2)},
                       {"h1", static_cast<int>(e.h1_bc2)}};
}

// Integer-valued groups render as bare integers.
inline OrderedJson to_json(const PiSigmaElement& e) { return OrderedJson(e.value); }
inline OrderedJson to_json(const Omega0Element& e) { return OrderedJson(e.value); }

inline OrderedJson to_json(const CheckReport& r) {
    return OrderedJson{{"name", r.name},
                       {"passed", r.passed},
                       {"max_error", r.max_error},
                       {"samples_used", r.samples_used},
                       {"details", r.details}};
}

}  // namespace c2framed
