#pragma once

// JSON forms of every result type. Keys are emitted in sorted order by
// nlohmann::json, so dump() output is byte-stable.

#include "json.hpp"
#include "robustham/bounds.hpp"
#include "robustham/expansion.hpp"
#include "robustham/factors.hpp"
#include "robustham/hamilton.hpp"
#include "robustham/models.hpp"
#include "robustham/orient.hpp"
#include "robustham/rational.hpp"

namespace robustham {

using nlohmann::json;

json edges_json(const Graph& g);
json arcs_json(const Digraph& d);

json to_json(const DirBound& b);
json to_json(const UndirBound& b);
json to_json(const BinResults& b);

const char* to_string(FactorStatus s);
json to_json(const CutWitness& c);
json to_json(const DigraphFactor& f);
json to_json(const GraphFactor& f);
json to_json(const MatchingsResult& m);

json to_json(const OrientationResult& o);
json to_json(const SwitchTrace& t);
json to_json(const BalanceResult& b);
json to_json(const RegularOrientation& r);

json rational_json(const Rational& r);
json to_json(const ExpansionParams& p);
json to_json(const ExpansionVerdict& v);
json to_json(const SpectralData& s);
json to_json(const MixingReport& m);

json to_json(const HamiltonResult& h);
json to_json(const HamiltonPacking& p);
json to_json(const PackResult& p);
json to_json(const HamVsReg& h);

json to_json(const ExtremalConstruction& c);
json to_json(const TrialReport& r, bool include_runtime = false);

}  // namespace robustham
