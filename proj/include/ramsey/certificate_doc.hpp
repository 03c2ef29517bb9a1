#pragma once

#include <string>

#include "ramsey/constructions.hpp"
#include "ramsey/witness.hpp"

namespace ramsey {

class DocumentError : public std::runtime_error {
public:
    explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

// One self-describing text record per certificate, fixed field order:
//
//   schema: ramsey-cert/1
//   claim: kind=ks s=4 n=8
//   graph6: G?`DA_
//   edges: 0-1 0-4 0-7 1-2 1-5 2-3 3-4 4-5 5-6 6-7
//   triangle_free: true
//   alpha: 3
//   js_free: -
//   provenance: catalog:h8
//   chosen: -
//   inputs: -
//   solver: nodes=17 wall_ms=0.012
//
// An optional trace appends "part NAME: ..." lines after the solver line.
std::string certificate_to_text(const Certificate& cert,
                                const ConstructionTrace* trace = nullptr);

// Parses a certificate document and checks its internal consistency (the
// graph6 string must decode to the listed edges). Does NOT re-run the
// solvers; that is verify's job.
Certificate certificate_from_text(const std::string& text);

// Failure record with the violated predicate and its witness vertices.
std::string failure_to_text(const WitnessClaim& claim, const WitnessFailure& failure);

} // namespace ramsey
