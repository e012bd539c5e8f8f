#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coideal/coideal.hpp"

namespace coideal {

// fast and thorough differ only in how deep the fallback witness search goes;
// stretch also tries to recompute the known high-degree extensions.
enum class Effort { Fast, Thorough, Stretch };
enum class Outcome { AllDegreeOne, NotDegreeOne, Unknown };
std::string to_string(Effort e);
std::string to_string(Outcome o);
Effort parse_effort(const std::string& s);  // Error InvalidArgument

// One summand on the list of braided vector spaces whose coideal subalgebras
// are all generated in degree one.
struct SummandCase {
    int number = 0;  // 1..6
    std::string description;
    std::vector<int> letters;  // input letters of the summand
};

// An extension together with the braided vector space it lives in, so it can
// be checked again from scratch.
struct WitnessRecord {
    Cocycle space;               // the summand, or the whole input
    std::vector<int> embedding;  // space letter -> input letter
    ExtensionWitness<ExactField> witness;
    std::string note;
};
// Rebuilds the quotient of `space`, reduces the representative and recomputes
// every flag. Returns verified().
bool reverify(WitnessRecord& w);

struct Verdict {
    Outcome outcome = Outcome::Unknown;
    std::vector<SummandCase> cases;       // AllDegreeOne
    std::optional<WitnessRecord> witness; // NotDegreeOne, recomputed
    std::string cited;                    // NotDegreeOne from a known result
    bool cited_not_recomputed = false;
    std::string recomputed;               // stretch: the cited extension confirmed modulo two primes
    std::string reason;                   // Unknown
    std::vector<std::string> justification;
};

// Never throws on valid input; every failure mode is a Verdict.
Verdict classify(const Cocycle& q, Effort effort = Effort::Fast);

// Degree searched by the fallback witness search for each effort.
int fallback_degree(Effort e);
// Candidate cap for the degree-three and degree-four scans.
constexpr size_t kScanCap = 100000;

nlohmann::json verdict_to_json(const Verdict& v, const Rack& input);

// ---------------------------------------------------------------------------
// Manifests: [{"rack": ..., "cocycle": ..., "expected": "all-degree-one|not|unknown",
// "label": ..., "cited": optional bool}]

struct SuiteEntry {
    std::string label, rack, cocycle, expected;
    std::optional<bool> cited;
};
struct SuiteRow {
    SuiteEntry entry;
    std::optional<Verdict> verdict;
    std::string error;  // input errors
    bool pass = false;
    double seconds = 0;
};
// Error ManifestParse.
// Relative .json paths in rack/cocycle fields resolve against base_dir.
std::vector<SuiteEntry> parse_manifest(const nlohmann::json& j, const std::string& base_dir = "");
std::vector<SuiteEntry> load_manifest(const std::string& path);
// Entries run in parallel; rows keep manifest order.
std::vector<SuiteRow> run_suite(const std::vector<SuiteEntry>& entries, Effort effort = Effort::Fast);
nlohmann::json suite_to_json(const std::vector<SuiteRow>& rows);
std::string suite_table(const std::vector<SuiteRow>& rows);

}  // namespace coideal
