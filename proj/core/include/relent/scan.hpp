#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relent/entanglement.hpp"
#include "relent/states.hpp"

namespace relent {

enum class Family { bell, triplet };

/// Partition selector of a scan; decides which quantities each row carries
/// and which closed form, if any, fills the cross-check column:
///   one_vs_three      sums of single-qubit entropies; Bell closed form for
///                     the boosted value
///   one_vs_three_diff same sums; closed form for the boosted-minus-initial
///                     difference (both families)
///   spin_vs_mom       2 spins | 2 momenta; closed form for the boosted
///                     value (both families)
///   alice_bob         particle A | particle B; closed form for the
///                     (boost-invariant) initial value (both families)
///   cross             momA+spinB | momB+spinA; no closed form
enum class ScanPartition {
    one_vs_three,
    one_vs_three_diff,
    spin_vs_mom,
    alice_bob,
    cross,
};

enum class OutputFormat { csv, json };

/// Inclusive linear grid over an angle; steps == 1 collapses to `start`.
struct AngleRange {
    double start = 0.0;
    double stop = 0.0;
    int steps = 1;

    static AngleRange single(double value) { return {value, value, 1}; }
    void validate() const;
    double at(int i) const;
};

struct ScanConfig {
    Family family = Family::bell;
    AngleRange alpha = AngleRange::single(0.0);
    AngleRange beta_or_theta = AngleRange::single(0.0);
    AngleRange phi = AngleRange::single(0.0); // triplet only
    double delta = 0.0;
    ScanPartition partition = ScanPartition::one_vs_three_diff;
    OutputFormat format = OutputFormat::csv;
};

struct ScanRow {
    Family family;
    double alpha;
    double beta_or_theta;
    std::optional<double> phi; // empty for the Bell family
    double delta;
    ScanPartition partition;
    double e_unboosted;
    double e_boosted;
    double e_delta;
    std::optional<double> closed_form;
    std::optional<double> abs_error;
};

/// Evaluates the grid in row-major order (alpha outer, then beta/theta,
/// then phi for the triplet family).
std::vector<ScanRow> run_scan(const ScanConfig& config);

/// CSV with the fixed header, '\n' line endings and 15 significant digits.
std::string to_csv(const std::vector<ScanRow>& rows);

/// JSON array of objects mirroring the CSV fields; blanks become null.
std::string to_json(const std::vector<ScanRow>& rows);

std::string family_name(Family family);
std::string partition_name(ScanPartition partition);
Family parse_family(const std::string& name);
ScanPartition parse_partition(const std::string& name);

/// Parses an angle literal: a plain floating number or a multiple of pi
/// such as "pi", "pi/4", "3pi/4", "-pi/2", "2pi".
double parse_angle(const std::string& text);

/// Parses "start:stop:steps" (angle literals, integer steps) or a single
/// angle literal.
AngleRange parse_angle_range(const std::string& text);

} // namespace relent
