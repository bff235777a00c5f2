#ifndef KNESER_JSON_IO_HPP
#define KNESER_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "kneser/bounds.hpp"
#include "kneser/coloring.hpp"
#include "kneser/hypercore.hpp"
#include "kneser/schrijver.hpp"
#include "kneser/solver.hpp"
#include "kneser/tucker.hpp"

namespace kneser {

// Fixed key order keeps identical invocations byte-identical.
using Json = nlohmann::ordered_json;

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// SetSystem: {"n": int, "edges": [[int,...],...]} with 1-based elements
Json set_system_to_json(const SetSystem& s);
SetSystem set_system_from_json(const Json& j);

// Coloring: {"colors": [int,...]} indexed by edge position
Json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

// Octahedral labeling: {"n": int, "labels": [int,...]} over the base-3
// code enumeration of the nonzero sign vectors (entry i is code i+1)
Json octa_labeling_to_json(const OctaLabeling& lab, int n);
std::pair<OctaLabeling, int> octa_labeling_from_json(const Json& j);

// Z_p labeling: {"n":int,"p":int,"s":[int,...],"labels":[[sign,value],...]}
// over the admissible chessboard codes in ascending order
Json zp_labeling_to_json(const ZpLabeling& lab, const ZpFaceSet& faces);
std::pair<ZpLabeling, ZpFaceSet> zp_labeling_from_json(const Json& j);

Json bound_report_to_json(const BoundReport& r);
Json mono_family_to_json(const MonochromaticFamily& f, const SetSystem& s);
Json tucker_pair_to_json(const TuckerPair& p, int n);
Json zp_witness_to_json(const ZpChainWitness& w, const ZpFaceSet& faces);
Json stable_scan_to_json(const StableScanReport& r);
Json pipeline_report_to_json(const PipelineReport& r);

Json parse_json_file(const std::string& path);

}  // namespace kneser

#endif
