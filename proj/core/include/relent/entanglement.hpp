#pragma once

#include <initializer_list>
#include <vector>

#include "relent/qubits.hpp"
#include "relent/states.hpp"

namespace relent {

/// Split of the four qubits into two complementary nonempty blocks.
class Bipartition {
public:
    /// Block A as qubit indices, a nonempty proper subset of {0,1,2,3}.
    explicit Bipartition(std::vector<int> block_a);
    Bipartition(std::initializer_list<int> block_a);

    /// {momA, momB} | {spinA, spinB}
    static Bipartition spin_vs_mom() { return Bipartition{0, 1}; }
    /// {momA, spinA} | {momB, spinB}; the partition into the two particles.
    static Bipartition alice_bob() { return Bipartition{0, 2}; }
    /// {momA, spinB} | {momB, spinA}
    static Bipartition cross() { return Bipartition{0, 3}; }
    /// {q} | rest
    static Bipartition singleton(int qubit) { return Bipartition{qubit}; }

    const std::vector<int>& block_a() const { return a_; }
    std::vector<int> block_b() const;

private:
    std::vector<int> a_;
};

/// Sum of the linear entropies of BOTH reduced blocks of the bipartition.
/// For pure states the two terms are equal, so this is twice either block's
/// linear entropy; maximal values are 1 for a singleton block and 3/2 for a
/// 2|2 split.
double partition_entanglement(const PureState& state, const Bipartition& partition);

/// Sum of the four single-qubit linear entropies (one term per qubit);
/// ranges over [0, 2].
double one_vs_three_total(const PureState& state);

/// Closed-form catalog for the Bell-type spin family, used as regression
/// cross-checks of the numeric pipeline (the pipeline is the source of
/// truth).
enum class BellForm {
    one_v_three_unboosted, // (2 - cos 4a - cos 4b)/2
    one_v_three_boosted,
    one_v_three_diff, // sin^2 d sin^2 2a cos^2 2b
    spinmom_boosted,
    /// [16 - (3+cos 4a)(3+cos 4b)]/8. The printed source carries constant 10
    /// here, which fails its own anchor values; see DISCREPANCIES.md.
    alice_bob,
};
double closed_form_bell(BellForm form, double alpha, double beta, double delta);

/// Closed-form catalog for the triplet spin family.
enum class TripletForm {
    one_v_three_diff,
    spinmom_boosted,
    alice_bob,
};
double closed_form_triplet(TripletForm form, double alpha, double theta, double phi, double delta);

/// partition_entanglement(boosted) - partition_entanglement(initial),
/// straight through the numeric partial-trace pipeline.
double entanglement_delta(const Scenario& scenario, const Bipartition& partition);

/// one_vs_three_total(boosted) - one_vs_three_total(initial).
double one_vs_three_delta(const Scenario& scenario);

} // namespace relent
