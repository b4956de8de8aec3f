#include "relent/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace relent {

Bipartition::Bipartition(std::vector<int> block_a) : a_(std::move(block_a)) {
    std::sort(a_.begin(), a_.end());
    if (a_.empty() || a_.size() >= 4) {
        throw invalid_partition("block A must be a nonempty proper subset of {0,1,2,3}");
    }
    if (std::adjacent_find(a_.begin(), a_.end()) != a_.end()) {
        throw invalid_partition("block A repeats a qubit");
    }
    if (a_.front() < 0 || a_.back() > 3) {
        throw invalid_partition("block A names a qubit outside {0,1,2,3}");
    }
}

Bipartition::Bipartition(std::initializer_list<int> block_a)
    : Bipartition(std::vector<int>(block_a)) {}

std::vector<int> Bipartition::block_b() const {
    std::vector<int> b;
    for (int q = 0; q < 4; ++q) {
        if (!std::binary_search(a_.begin(), a_.end(), q)) {
            b.push_back(q);
        }
    }
    return b;
}

double partition_entanglement(const PureState& state, const Bipartition& partition) {
    const DensityMatrix rho = state.density();
    return linear_entropy(partial_trace(rho, partition.block_a())) +
           linear_entropy(partial_trace(rho, partition.block_b()));
}

double one_vs_three_total(const PureState& state) {
    const DensityMatrix rho = state.density();
    double total = 0.0;
    for (int q = 0; q < 4; ++q) {
        total += linear_entropy(partial_trace(rho, {q}));
    }
    return total;
}

double closed_form_bell(BellForm form, double alpha, double beta, double delta) {
    const double c4a = std::cos(4.0 * alpha);
    const double c4b = std::cos(4.0 * beta);
    const double s2a = std::sin(2.0 * alpha);
    const double c2b = std::cos(2.0 * beta);
    const double s2b = std::sin(2.0 * beta);
    const double sd2 = std::sin(delta) * std::sin(delta);
    const double c2d = std::cos(2.0 * delta);
    switch (form) {
    case BellForm::one_v_three_unboosted:
        return 0.5 * (2.0 - c4a - c4b);
    case BellForm::one_v_three_boosted:
        return (18.0 - 10.0 * c4a - 6.0 * c4b - 2.0 * c4a * c4b -
                8.0 * c2d * s2a * s2a * c2b * c2b) /
               16.0;
    case BellForm::one_v_three_diff:
        return sd2 * s2a * s2a * c2b * c2b;
    case BellForm::spinmom_boosted:
        return 0.5 * sd2 * s2a * s2a * (1.0 - s2b) * (3.0 + c2d + 2.0 * sd2 * s2b);
    case BellForm::alice_bob:
        return (16.0 - (3.0 + c4a) * (3.0 + c4b)) / 8.0;
    }
    throw error("unknown Bell closed-form tag");
}

namespace {

double triplet_f1(double delta, double theta) {
    return 2.0 * std::cos(2.0 * delta) * (3.0 + std::cos(2.0 * theta)) -
           2.0 * std::cos(2.0 * theta);
}

double triplet_f2(double delta, double theta, double phi) {
    const double sd2 = std::sin(delta) * std::sin(delta);
    return 8.0 * sd2 *
           (std::cos(2.0 * phi) * std::sin(theta) * std::sin(theta) +
            2.0 * std::cos(phi) * std::sin(2.0 * theta));
}

} // namespace

double closed_form_triplet(TripletForm form, double alpha, double theta, double phi,
                           double delta) {
    const double s2a = std::sin(2.0 * alpha);
    const double sd2 = std::sin(delta) * std::sin(delta);
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    // Weight (cos t + cos p sin t)^2 shared by the difference expressions.
    const double w = (ct + std::cos(phi) * st) * (ct + std::cos(phi) * st);
    switch (form) {
    case TripletForm::one_v_three_diff:
        return -0.25 * sd2 * s2a * s2a * w *
               (-5.0 + std::cos(2.0 * theta) + 2.0 * st * st * std::cos(2.0 * phi) +
                4.0 * std::sin(2.0 * theta) * std::cos(phi));
    case TripletForm::spinmom_boosted: {
        const double f = triplet_f1(delta, theta) - triplet_f2(delta, theta, phi);
        const double ca = std::cos(alpha);
        const double sa = std::sin(alpha);
        return 1.0 - ca * ca * ca * ca - sa * sa * sa * sa +
               sd2 * s2a * s2a * w * (26.0 + f) / 32.0 -
               s2a * s2a * (10.0 + f) * (10.0 + f) / 512.0;
    }
    case TripletForm::alice_bob: {
        const double c4a = std::cos(4.0 * alpha);
        const double inner = -12.0 * std::cos(2.0 * theta) - 13.0 * std::cos(4.0 * theta) +
                             16.0 * (3.0 + 5.0 * std::cos(2.0 * theta)) * std::cos(2.0 * phi) *
                                 st * st +
                             8.0 * std::cos(4.0 * phi) * st * st * st * st -
                             256.0 * ct * std::cos(phi) * st * st * st * std::sin(phi) *
                                 std::sin(phi);
        return (203.0 - 103.0 * c4a + (3.0 + c4a) * inner) / 256.0;
    }
    }
    throw error("unknown triplet closed-form tag");
}

double entanglement_delta(const Scenario& scenario, const Bipartition& partition) {
    return partition_entanglement(scenario.boosted(), partition) -
           partition_entanglement(scenario.initial(), partition);
}

double one_vs_three_delta(const Scenario& scenario) {
    return one_vs_three_total(scenario.boosted()) - one_vs_three_total(scenario.initial());
}

} // namespace relent
