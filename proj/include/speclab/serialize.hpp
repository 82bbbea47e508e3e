#pragma once

#include "speclab/constructors.hpp"
#include "speclab/minor.hpp"
#include "speclab/search.hpp"
#include "speclab/spectral.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace speclab {

using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const Json& j, std::size_t universe);

Json to_json(const Layout& layout);
Json to_json(const SpectralResult& r);
Json to_json(const PerronAudit& a);

/// {pattern_g6, host_n, branch_sets}
Json certificate_json(const MinorModel& m);
/// Throws MalformedGraph6 / IndexOutOfRange / InvalidSpec on a bad document.
MinorModel certificate_from_json(const Json& j);

/// {status, nodes, certificate?}
Json to_json(const MinorAnswer& a);
Json to_json(const FsWitness& w);
Json to_json(const QtWitness& w);
Json to_json(const StructureReport& r);
Json to_json(const ClosureReport& r);

/// With timing off, elapsed is written as 0 so reruns are byte-identical.
Json to_json(const SearchReport& r, bool timing = true);
Json to_json(const TheoremCheck& c, bool timing = true);
Json to_json(const AuditEntry& e);
Json to_json(const EdgeBoundAudit& a);

/// One row per report, header first.
std::string search_csv(const std::vector<SearchReport>& reports, bool timing = true);

}  // namespace speclab
