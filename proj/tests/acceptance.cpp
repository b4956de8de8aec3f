// Acceptance suite: one check per shipped guarantee, one line per check.
// Exits nonzero if any check fails.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "relent/bell.hpp"
#include "relent/entanglement.hpp"
#include "relent/scan.hpp"

using namespace relent;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str());
    if (!pass) {
        ++failures;
    }
}

std::string err_detail(double worst, double tol) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "max err %.2e, tol %.0e", worst, tol);
    return buf;
}

PureState bell_total(double alpha, double beta) {
    return compose_total(momentum_state(alpha), spin_state(BellPsi{beta}));
}

// ---- criterion 1: Bell-family closed forms on the 21x21x9 grid ----
void criterion_1() {
    double worst = 0.0;
    for (int ia = 0; ia < 21; ++ia) {
        const double alpha = M_PI * ia / 20.0;
        for (int ib = 0; ib < 21; ++ib) {
            const double beta = M_PI * ib / 20.0;
            const PureState initial = bell_total(alpha, beta);
            const double unboosted = one_vs_three_total(initial);
            worst = std::max(worst, std::abs(unboosted - closed_form_bell(
                                                             BellForm::one_v_three_unboosted,
                                                             alpha, beta, 0.0)));
            for (int id = 0; id < 9; ++id) {
                const double delta = M_PI / 2.0 * id / 8.0;
                const PureState boosted = boost_total(initial, delta);
                const double b1v3 = one_vs_three_total(boosted);
                worst = std::max(worst,
                                 std::abs(b1v3 - closed_form_bell(BellForm::one_v_three_boosted,
                                                                  alpha, beta, delta)));
                worst = std::max(worst, std::abs(b1v3 - unboosted -
                                                 closed_form_bell(BellForm::one_v_three_diff,
                                                                  alpha, beta, delta)));
                worst = std::max(
                    worst, std::abs(partition_entanglement(boosted, Bipartition::spin_vs_mom()) -
                                    closed_form_bell(BellForm::spinmom_boosted, alpha, beta,
                                                     delta)));
            }
        }
    }
    report(1, "Bell closed forms vs numeric pipeline, 21x21x9 grid", worst < 1e-10,
           err_detail(worst, 1e-10));
}

// ---- criterion 2: Alice-Bob Bell formula with the corrected constant ----
void criterion_2() {
    double worst = 0.0;
    for (int ia = 0; ia < 21; ++ia) {
        const double alpha = M_PI * ia / 20.0;
        for (int ib = 0; ib < 21; ++ib) {
            const double beta = M_PI * ib / 20.0;
            const double numeric =
                partition_entanglement(bell_total(alpha, beta), Bipartition::alice_bob());
            worst = std::max(worst, std::abs(numeric - closed_form_bell(BellForm::alice_bob,
                                                                        alpha, beta, 0.0)));
        }
    }
    const double anchor_zero =
        partition_entanglement(bell_total(0.0, 0.0), Bipartition::alice_bob());
    const double anchor_max =
        partition_entanglement(bell_total(M_PI / 4.0, M_PI / 4.0), Bipartition::alice_bob());

    // The printed constant 10 must fail both anchors (see DISCREPANCIES.md).
    auto printed_variant = [](double alpha, double beta) {
        return (10.0 - (3.0 + std::cos(4.0 * alpha)) * (3.0 + std::cos(4.0 * beta))) / 8.0;
    };
    const bool printed_fails = std::abs(printed_variant(0.0, 0.0) - anchor_zero) > 0.5 &&
                               std::abs(printed_variant(M_PI / 4.0, M_PI / 4.0) - anchor_max) >
                                   0.5;

    const bool pass = worst < 1e-10 && std::abs(anchor_zero) < 1e-12 &&
                      std::abs(anchor_max - 1.5) < 1e-12 && printed_fails;
    report(2, "Alice-Bob Bell formula (constant 16) and anchors", pass,
           err_detail(worst, 1e-10) + ", printed constant 10 fails anchors as documented");
}

// ---- criterion 3: triplet closed forms ----
void criterion_3() {
    double worst_diff = 0.0;
    double worst_other = 0.0;
    for (int ia = 0; ia < 13; ++ia) {
        const double alpha = M_PI * ia / 12.0;
        for (int it = 0; it < 13; ++it) {
            const double theta = M_PI * it / 12.0;
            for (int ip = 0; ip < 13; ++ip) {
                const double phi = 2.0 * M_PI * ip / 12.0;
                const PureState initial =
                    compose_total(momentum_state(alpha), spin_state(Triplet{theta, phi}));
                const double unboosted = one_vs_three_total(initial);
                worst_other = std::max(
                    worst_other,
                    std::abs(partition_entanglement(initial, Bipartition::alice_bob()) -
                             closed_form_triplet(TripletForm::alice_bob, alpha, theta, phi,
                                                 0.0)));
                for (int id = 0; id < 5; ++id) {
                    const double delta = M_PI / 2.0 * id / 4.0;
                    const PureState boosted = boost_total(initial, delta);
                    worst_diff = std::max(
                        worst_diff, std::abs(one_vs_three_total(boosted) - unboosted -
                                             closed_form_triplet(TripletForm::one_v_three_diff,
                                                                 alpha, theta, phi, delta)));
                    worst_other = std::max(
                        worst_other,
                        std::abs(partition_entanglement(boosted, Bipartition::spin_vs_mom()) -
                                 closed_form_triplet(TripletForm::spinmom_boosted, alpha, theta,
                                                     phi, delta)));
                }
            }
        }
    }

    // anchor points
    double worst_anchor = 0.0;
    for (double alpha : {0.0, 0.37, M_PI / 4.0, M_PI / 2.0}) {
        for (double delta : {0.0, 0.9, M_PI / 2.0}) {
            worst_anchor = std::max(worst_anchor,
                                    std::abs(closed_form_triplet(TripletForm::one_v_three_diff,
                                                                 alpha, M_PI / 4.0, 0.0, delta)));
            const double upup = closed_form_triplet(TripletForm::one_v_three_diff, alpha,
                                                    M_PI / 2.0, 0.0, delta);
            worst_anchor = std::max(
                worst_anchor,
                std::abs(upup - std::pow(std::sin(2.0 * alpha) * std::sin(delta), 2)));
        }
    }
    worst_anchor = std::max(worst_anchor, std::abs(closed_form_triplet(TripletForm::alice_bob,
                                                                       M_PI / 4.0, M_PI / 2.0,
                                                                       M_PI / 2.0, 0.0) -
                                                   1.5));
    worst_anchor = std::max(worst_anchor, std::abs(closed_form_triplet(TripletForm::alice_bob,
                                                                       M_PI / 4.0, M_PI / 4.0,
                                                                       0.0, 0.0) -
                                                   1.5));
    for (int n = 0; n < 3; ++n) {
        worst_anchor = std::max(worst_anchor,
                                std::abs(closed_form_triplet(TripletForm::alice_bob,
                                                             n * M_PI / 2.0, n * M_PI, 0.4,
                                                             0.0)));
    }

    const double worst = std::max({worst_diff, worst_other, worst_anchor});
    report(3, "triplet closed forms, 13x13x13x5 grid and anchor points", worst < 1e-10,
           err_detail(worst, 1e-10) + ", no grid mismatch to document");
}

// ---- criterion 4: boost invariance of Alice-Bob and cross partitions ----
void criterion_4() {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> wig(0.0, M_PI / 2.0);
    double worst = 0.0;
    for (int family = 0; family < 2; ++family) {
        for (int trial = 0; trial < 1000; ++trial) {
            const SpinFamily spin = family == 0
                                        ? SpinFamily(BellPsi{angle(rng)})
                                        : SpinFamily(Triplet{angle(rng), angle(rng)});
            const Scenario sc{angle(rng), spin, wig(rng)};
            worst = std::max(worst, std::abs(entanglement_delta(sc, Bipartition::alice_bob())));
            worst = std::max(worst, std::abs(entanglement_delta(sc, Bipartition::cross())));
        }
    }
    report(4, "Alice-Bob and cross partitions invariant over 1000 random scenarios per family",
           worst < 1e-10, err_detail(worst, 1e-10));
}

// ---- criterion 5: delta = pi/2 limit ----
void criterion_5() {
    double worst = 0.0;
    for (int ia = 0; ia < 13; ++ia) {
        const double alpha = M_PI * ia / 12.0;
        for (int ib = 0; ib < 13; ++ib) {
            const double second = M_PI * ib / 12.0;
            {
                const Scenario sc{alpha, BellPsi{second}, M_PI / 2.0};
                worst = std::max(worst, std::abs(partition_entanglement(
                                            sc.boosted(), Bipartition::spin_vs_mom()) -
                                        one_vs_three_delta(sc)));
            }
            for (int ip = 0; ip < 5; ++ip) {
                const Scenario sc{alpha, Triplet{second, 2.0 * M_PI * ip / 4.0}, M_PI / 2.0};
                worst = std::max(worst, std::abs(partition_entanglement(
                                            sc.boosted(), Bipartition::spin_vs_mom()) -
                                        one_vs_three_delta(sc)));
            }
        }
    }
    report(5, "spin-vs-mom value meets the 1-vs-3 difference at delta = pi/2", worst < 1e-10,
           err_detail(worst, 1e-10));
}

// ---- criterion 6: Wigner machinery ----
void criterion_6() {
    double worst = 0.0;
    const std::array<double, 5> rapidities = {0.1, 0.5, 1.0, 2.0, 5.0};
    for (double eta : rapidities) {
        for (double xi : rapidities) {
            const LorentzTransform lambda = boost(Rapidity{xi}, Eigen::Vector3d(-1, 0, 0));
            const FourVector p{std::cosh(eta), 0.0, 0.0, std::sinh(eta)};
            const LorentzTransform w = wigner_rotation(lambda, p);

            const FourVector k_out = w(FourVector::rest(1.0));
            worst = std::max(worst, std::abs(k_out.t - 1.0));
            worst = std::max(worst, k_out.spatial_norm());

            const Eigen::Matrix3d r = w.matrix().block<3, 3>(1, 1);
            worst = std::max(worst, (r * r.transpose() - Eigen::Matrix3d::Identity())
                                        .cwiseAbs()
                                        .maxCoeff());
            worst = std::max(worst, std::abs(r.determinant() - 1.0));

            const double extracted = rotation_axis_angle(w).angle;
            worst = std::max(worst,
                             std::abs(extracted - wigner_angle(Rapidity{eta}, Rapidity{xi})));
        }
    }
    const bool wigner_ok = worst < 1e-10;

    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> rap(0.0, 3.0);
    double worst_pl = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const Direction a = Direction::normalized(gauss(rng), gauss(rng), gauss(rng));
        Eigen::Vector3d axis(gauss(rng), gauss(rng), gauss(rng));
        axis.normalize();
        const FourVector p = boost(Rapidity{rap(rng)}, axis)(FourVector::rest(1.0));
        const Eigen::Vector3d velocity_form = pauli_lubanski_direction(a, p);
        const Eigen::Matrix2cd pullback = pauli_lubanski_observable(a, p);
        const Eigen::Matrix2cd velocity = rest_spin_observable(Direction::normalized(
            velocity_form.x(), velocity_form.y(), velocity_form.z()));
        worst_pl = std::max(worst_pl, (pullback - velocity).cwiseAbs().maxCoeff());
    }
    const bool pl_ok = worst_pl < 1e-12;

    char detail[120];
    std::snprintf(detail, sizeof(detail), "rotation err %.2e (tol 1e-10), observable forms %.2e (tol 1e-12)",
                  worst, worst_pl);
    report(6, "little-group rotation and spin-observable forms", wigner_ok && pl_ok, detail);
}

// ---- criterion 7: CHSH values ----
void criterion_7() {
    const double tsirelson = 2.0 * std::sqrt(2.0);
    const PureState singlet = compose_total(momentum_state(0.4), spin_state(BellPsi{-M_PI / 4.0}));

    bool pass = true;
    std::string detail;

    const double at_rest = chsh(singlet, MeasurementSetup::optimal_planar(), FrameDescriptor{});
    pass &= std::abs(at_rest - tsirelson) < 1e-9;

    double worst_carried = 0.0;
    for (double xi : {0.5, 1.0, 2.0}) {
        for (double eta : {0.5, 1.0, 2.0}) {
            const FrameDescriptor frame{Rapidity{eta}, Rapidity{xi}};
            const PureState boosted = boost_total(singlet, frame.delta());
            const double s = chsh(boosted, transform_setup(MeasurementSetup::optimal_planar(),
                                                           frame),
                                  frame);
            worst_carried = std::max(worst_carried, std::abs(s - tsirelson));
        }
    }
    pass &= worst_carried < 1e-9;

    double worst_max = 0.0;
    std::uint64_t seed = 100;
    for (double xi : {0.5, 1.0, 2.0}) {
        for (double eta : {0.5, 1.0, 2.0}) {
            const FrameDescriptor frame{Rapidity{eta}, Rapidity{xi}};
            const PureState psi_plus = boost_total(
                compose_total(momentum_state(0.8), spin_state(BellPsi{M_PI / 4.0})),
                frame.delta());
            const PureState phi_plus = boost_total(
                compose_total(momentum_state(0.3), spin_state(Triplet{M_PI / 4.0, 0.0})),
                frame.delta());
            worst_max = std::max(worst_max,
                                 tsirelson - chsh_maximize(psi_plus, frame, seed++).value);
            worst_max = std::max(worst_max,
                                 tsirelson - chsh_maximize(phi_plus, frame, seed++).value);
        }
    }
    pass &= worst_max < 1e-6;

    double worst_product = 0.0;
    for (double xi : {0.0, 1.0}) {
        const FrameDescriptor frame{Rapidity{1.0}, Rapidity{xi}};
        const PureState product = boost_total(
            compose_total(momentum_state(M_PI / 4.0), spin_state(BellPsi{0.0})), frame.delta());
        worst_product = std::max(worst_product, chsh_maximize(product, frame, seed++).value);
    }
    pass &= worst_product <= 2.0 + 1e-6;

    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "rest |S-2sqrt2| %.1e, carried %.1e, max deficit %.1e, product max %.9f",
                  std::abs(at_rest - tsirelson), worst_carried, std::max(worst_max, 0.0),
                  worst_product);
    report(7, "CHSH recovery and bounds", pass, buf);
}

// ---- criterion 8: figure-data regression through the scan engine ----
void criterion_8() {
    ScanConfig cfg;
    cfg.family = Family::bell;
    cfg.partition = ScanPartition::one_vs_three_diff;
    cfg.alpha = {0.0, M_PI, 9};
    cfg.beta_or_theta = {0.0, M_PI, 9};
    cfg.delta = M_PI / 2.0;

    const std::vector<ScanRow> rows = run_scan(cfg);
    const std::string csv_first = to_csv(rows);
    const std::string csv_second = to_csv(run_scan(cfg));

    bool valleys = true;
    double peak = -1.0;
    for (const ScanRow& row : rows) {
        const bool alpha_valley = std::abs(std::remainder(row.alpha, M_PI / 2.0)) < 1e-9;
        const bool beta_valley =
            std::abs(std::remainder(row.beta_or_theta - M_PI / 4.0, M_PI / 2.0)) < 1e-9;
        if ((alpha_valley || beta_valley) && std::abs(row.e_delta) >= 1e-12) {
            valleys = false;
        }
        if (std::abs(row.alpha - M_PI / 4.0) < 1e-9 && std::abs(row.beta_or_theta) < 1e-9) {
            peak = row.e_delta;
        }
    }
    const bool pass = valleys && std::abs(peak - 1.0) < 1e-12 && csv_first == csv_second;
    char buf[120];
    std::snprintf(buf, sizeof(buf), "valleys %s, peak %.15f, repeated CSV %s",
                  valleys ? "flat" : "BROKEN", peak,
                  csv_first == csv_second ? "byte-identical" : "DIFFERS");
    report(8, "scan reproduces the entanglement-change surface deterministically", pass, buf);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (failures > 0) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
