#include "relent/scan.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace relent {

void AngleRange::validate() const {
    if (steps < 1) {
        throw error("range needs at least one step");
    }
    if (!std::isfinite(start) || !std::isfinite(stop)) {
        throw error("range bounds must be finite");
    }
    if (stop < start) {
        throw error("range stop must not precede start");
    }
}

double AngleRange::at(int i) const {
    if (steps == 1) {
        return start;
    }
    return start + (stop - start) * i / (steps - 1);
}

namespace {

struct RowQuantities {
    double e_unboosted;
    double e_boosted;
    std::optional<double> closed_form;
};

RowQuantities evaluate_cell(const ScanConfig& cfg, const Scenario& scenario, double second,
                            double phi) {
    const PureState initial = scenario.initial();
    const PureState boosted = scenario.boosted();
    const bool bell = cfg.family == Family::bell;
    const double a = scenario.alpha;
    const double d = scenario.delta;

    switch (cfg.partition) {
    case ScanPartition::one_vs_three:
        return {one_vs_three_total(initial), one_vs_three_total(boosted),
                bell ? std::optional(closed_form_bell(BellForm::one_v_three_boosted, a, second, d))
                     : std::nullopt};
    case ScanPartition::one_vs_three_diff:
        return {one_vs_three_total(initial), one_vs_three_total(boosted),
                bell ? closed_form_bell(BellForm::one_v_three_diff, a, second, d)
                     : closed_form_triplet(TripletForm::one_v_three_diff, a, second, phi, d)};
    case ScanPartition::spin_vs_mom: {
        const Bipartition part = Bipartition::spin_vs_mom();
        return {partition_entanglement(initial, part), partition_entanglement(boosted, part),
                bell ? closed_form_bell(BellForm::spinmom_boosted, a, second, d)
                     : closed_form_triplet(TripletForm::spinmom_boosted, a, second, phi, d)};
    }
    case ScanPartition::alice_bob: {
        const Bipartition part = Bipartition::alice_bob();
        return {partition_entanglement(initial, part), partition_entanglement(boosted, part),
                bell ? closed_form_bell(BellForm::alice_bob, a, second, d)
                     : closed_form_triplet(TripletForm::alice_bob, a, second, phi, d)};
    }
    case ScanPartition::cross: {
        const Bipartition part = Bipartition::cross();
        return {partition_entanglement(initial, part), partition_entanglement(boosted, part),
                std::nullopt};
    }
    }
    throw error("unknown scan partition");
}

} // namespace

std::vector<ScanRow> run_scan(const ScanConfig& cfg) {
    cfg.alpha.validate();
    cfg.beta_or_theta.validate();
    const bool triplet = cfg.family == Family::triplet;
    if (triplet) {
        cfg.phi.validate();
    }
    if (!std::isfinite(cfg.delta)) {
        throw error("delta must be finite");
    }

    const int phi_steps = triplet ? cfg.phi.steps : 1;
    std::vector<ScanRow> rows;
    rows.reserve(static_cast<std::size_t>(cfg.alpha.steps) * cfg.beta_or_theta.steps *
                 phi_steps);

    for (int ia = 0; ia < cfg.alpha.steps; ++ia) {
        const double alpha = cfg.alpha.at(ia);
        for (int ib = 0; ib < cfg.beta_or_theta.steps; ++ib) {
            const double second = cfg.beta_or_theta.at(ib);
            for (int ip = 0; ip < phi_steps; ++ip) {
                const double phi = triplet ? cfg.phi.at(ip) : 0.0;
                const SpinFamily spin = triplet ? SpinFamily(Triplet{second, phi})
                                                : SpinFamily(BellPsi{second});
                const Scenario scenario{alpha, spin, cfg.delta};
                const RowQuantities q = evaluate_cell(cfg, scenario, second, phi);

                ScanRow row{cfg.family,
                            alpha,
                            second,
                            triplet ? std::optional(phi) : std::nullopt,
                            cfg.delta,
                            cfg.partition,
                            q.e_unboosted,
                            q.e_boosted,
                            q.e_boosted - q.e_unboosted,
                            q.closed_form,
                            std::nullopt};
                if (row.closed_form) {
                    const double numeric = cfg.partition == ScanPartition::one_vs_three_diff
                                               ? row.e_delta
                                           : cfg.partition == ScanPartition::alice_bob
                                               ? row.e_unboosted
                                               : row.e_boosted;
                    row.abs_error = std::abs(numeric - *row.closed_form);
                }
                rows.push_back(row);
            }
        }
    }
    return rows;
}

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string format_optional(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

nlohmann::ordered_json optional_json(const std::optional<double>& v) {
    if (v) {
        return *v;
    }
    return nullptr;
}

} // namespace

std::string to_csv(const std::vector<ScanRow>& rows) {
    std::string out = "family,alpha,beta_or_theta,phi_or_blank,delta,partition,"
                      "E_unboosted,E_boosted,E_delta,closed_form_value_or_blank,"
                      "abs_error_vs_closed_form_or_blank\n";
    for (const ScanRow& r : rows) {
        out += family_name(r.family);
        out += ',';
        out += format_double(r.alpha);
        out += ',';
        out += format_double(r.beta_or_theta);
        out += ',';
        out += format_optional(r.phi);
        out += ',';
        out += format_double(r.delta);
        out += ',';
        out += partition_name(r.partition);
        out += ',';
        out += format_double(r.e_unboosted);
        out += ',';
        out += format_double(r.e_boosted);
        out += ',';
        out += format_double(r.e_delta);
        out += ',';
        out += format_optional(r.closed_form);
        out += ',';
        out += format_optional(r.abs_error);
        out += '\n';
    }
    return out;
}

std::string to_json(const std::vector<ScanRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ScanRow& r : rows) {
        nlohmann::ordered_json row;
        row["family"] = family_name(r.family);
        row["alpha"] = r.alpha;
        row["beta_or_theta"] = r.beta_or_theta;
        row["phi_or_blank"] = optional_json(r.phi);
        row["delta"] = r.delta;
        row["partition"] = partition_name(r.partition);
        row["E_unboosted"] = r.e_unboosted;
        row["E_boosted"] = r.e_boosted;
        row["E_delta"] = r.e_delta;
        row["closed_form_value_or_blank"] = optional_json(r.closed_form);
        row["abs_error_vs_closed_form_or_blank"] = optional_json(r.abs_error);
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
}

std::string family_name(Family family) {
    return family == Family::bell ? "bell" : "triplet";
}

std::string partition_name(ScanPartition partition) {
    switch (partition) {
    case ScanPartition::one_vs_three:
        return "one-vs-three";
    case ScanPartition::one_vs_three_diff:
        return "one-vs-three-diff";
    case ScanPartition::spin_vs_mom:
        return "spin-vs-mom";
    case ScanPartition::alice_bob:
        return "alice-bob";
    case ScanPartition::cross:
        return "cross";
    }
    throw error("unknown scan partition");
}

Family parse_family(const std::string& name) {
    if (name == "bell") {
        return Family::bell;
    }
    if (name == "triplet") {
        return Family::triplet;
    }
    throw error("unknown family '" + name + "' (expected bell|triplet)");
}

ScanPartition parse_partition(const std::string& name) {
    if (name == "one-vs-three") {
        return ScanPartition::one_vs_three;
    }
    if (name == "one-vs-three-diff") {
        return ScanPartition::one_vs_three_diff;
    }
    if (name == "spin-vs-mom") {
        return ScanPartition::spin_vs_mom;
    }
    if (name == "alice-bob") {
        return ScanPartition::alice_bob;
    }
    if (name == "cross") {
        return ScanPartition::cross;
    }
    throw error("unknown partition '" + name + "'");
}

double parse_angle(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s += c;
        }
    }
    if (s.empty()) {
        throw error("empty angle literal");
    }

    const std::size_t pi_pos = s.find("pi");
    if (pi_pos == std::string::npos) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            throw error("malformed angle literal '" + text + "'");
        }
        if (used != s.size()) {
            throw error("malformed angle literal '" + text + "'");
        }
        return v;
    }

    // [coefficient] "pi" ["/" divisor]
    double coeff = 1.0;
    std::string head = s.substr(0, pi_pos);
    if (head == "-") {
        coeff = -1.0;
    } else if (head == "+") {
        coeff = 1.0;
    } else if (!head.empty()) {
        std::size_t used = 0;
        try {
            coeff = std::stod(head, &used);
        } catch (const std::exception&) {
            throw error("malformed angle literal '" + text + "'");
        }
        if (used != head.size()) {
            throw error("malformed angle literal '" + text + "'");
        }
    }
    double divisor = 1.0;
    const std::string tail = s.substr(pi_pos + 2);
    if (!tail.empty()) {
        if (tail[0] != '/') {
            throw error("malformed angle literal '" + text + "'");
        }
        std::size_t used = 0;
        try {
            divisor = std::stod(tail.substr(1), &used);
        } catch (const std::exception&) {
            throw error("malformed angle literal '" + text + "'");
        }
        if (used != tail.size() - 1 || divisor == 0.0) {
            throw error("malformed angle literal '" + text + "'");
        }
    }
    return coeff * M_PI / divisor;
}

AngleRange parse_angle_range(const std::string& text) {
    const std::size_t c1 = text.find(':');
    if (c1 == std::string::npos) {
        return AngleRange::single(parse_angle(text));
    }
    const std::size_t c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) {
        throw error("range needs the form start:stop:steps");
    }
    AngleRange range;
    range.start = parse_angle(text.substr(0, c1));
    range.stop = parse_angle(text.substr(c1 + 1, c2 - c1 - 1));
    try {
        range.steps = std::stoi(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw error("malformed step count in range '" + text + "'");
    }
    range.validate();
    return range;
}

} // namespace relent
