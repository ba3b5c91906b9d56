#pragma once

#include <string>
#include <vector>

#include "theta/lifts.hpp"
#include "theta/occurrence.hpp"
#include "theta/rearrange.hpp"
#include "theta/ring.hpp"
#include "theta/standard_module.hpp"

namespace theta {

std::string render_half(HalfInt h);

// DSL forms (parseable): D[a,b] / Z[a,b].
std::string render_segment_dsl(const Segment& s, Form form = Form::Delta);
// Paper-style forms: singletons as |.|^a, the transient factor as L.
std::string render_factor_pretty(const GLFactor& f);
std::string render_factors_pretty(const std::vector<GLFactor>& fs);

std::string render_token_pretty(const TemperedToken& t);

// Canonical DSL text; requires an Atom tempered part. parse() of the result
// reproduces the module.
std::string render_module_dsl(const StandardModule& m);
// Paper-style: factors then the tempered part.
std::string render_module_pretty(const StandardModule& m);

std::string render_rearranged_pretty(const Rearranged& r,
                                     const TemperedToken& tau);

// One line per pseudocode line per iteration, mirroring the worked example:
// unchanged states print as "nothing happens".
std::string render_trace(const AlgTrace& trace, const TemperedToken& tau);

std::string render_occurrence_pretty(const OccurrenceReport& rep);
std::string render_lift_pretty(const LiftResult& r);

std::string render_ring_element(const RingElement& e);
std::string render_word(const GLWord& w);

// JSON renderings (schema-versioned).
std::string render_module_json(const StandardModule& m);
std::string render_rearranged_json(const Rearranged& r);
std::string render_occurrence_json(const OccurrenceReport& rep);
std::string render_lift_json(const LiftResult& r);

}  // namespace theta
