#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsing/action.hpp"
#include "qsing/criteria.hpp"
#include "qsing/cyclotomic.hpp"
#include "qsing/oracle.hpp"
#include "qsing/residue.hpp"
#include "qsing/tables.hpp"

namespace {

using namespace qsing;

std::vector<long> parse_weights(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw CLI::ValidationError("weights", "empty entry in weight list");
        out.push_back(std::stol(item));
    }
    if (out.empty()) throw CLI::ValidationError("weights", "empty weight list");
    return out;
}

std::string witness_text(const NGWitness& w) {
    std::ostringstream out;
    out << "witness: J={";
    for (size_t i = 0; i < w.support.size(); ++i)
        out << (i ? "," : "") << (w.support[i] + 1);
    out << "} a=(";
    for (size_t i = 0; i < w.a.size(); ++i) out << (i ? "," : "") << w.a[i];
    out << ") target=" << w.target << " reachable={";
    for (size_t i = 0; i < w.reachable.size(); ++i)
        out << (i ? "," : "") << w.reachable[i];
    out << "}";
    return out.str();
}

int cmd_classify(long n, const std::string& tlist, bool json, bool with_residue, bool check) {
    std::vector<long> raw = parse_weights(tlist);
    Classification c = classify(n, raw);

    std::optional<ResidueValue> res;
    ReductionOutcome outcome = reduce_zero_weights(n, raw);
    const CyclicAction& act = outcome.action;
    const bool reduced = outcome.kind == ReductionOutcome::Kind::ReducedAction;
    if (with_residue && !reduced) res = residue(act);

    if (check && !reduced) {
        // independent membership route over all invariant monomials of degree <= 3n
        const long bound = 3 * n;
        std::vector<long> m(act.dim(), 0);
        while (true) {
            long deg = 0, phase = 0;
            for (int k = 0; k < act.dim(); ++k) {
                deg += m[k];
                phase += m[k] * act.weight(k);
            }
            if (deg > 0 && phase % n == 0 &&
                trace_contains_monomial(act, m) != oracle::trace_contains(act, m)) {
                std::cerr << "inconsistency: the two membership routes disagree\n";
                return 2;
            }
            int i = 0;
            while (i < act.dim()) {
                if (deg + 1 <= bound) {
                    ++m[i];
                    break;
                }
                deg -= m[i];
                m[i++] = 0;
            }
            if (i == act.dim()) break;
        }
    }

    if (json) {
        nlohmann::json row;
        row["n"] = n;
        row["t"] = act.weights();
        row["verdict"] = verdict_label(c.verdict);
        if (res) {
            if (res->infinite) row["residue"] = "inf";
            else row["residue"] = res->value;
        }
        if (c.via_reduction) row["via_reduction"] = *c.via_reduction;
        std::cout << row.dump(2) << "\n";
        return 0;
    }

    std::cout << verdict_label(c.verdict);
    if (res) std::cout << " residue=" << (res->infinite ? "inf" : std::to_string(res->value));
    std::cout << "\n";
    if (c.witness) std::cout << witness_text(*c.witness) << "\n";
    if (c.via_reduction) std::cout << "note: " << *c.via_reduction << "\n";
    return 0;
}

int cmd_table(int d, long n_from, long n_to, const std::string& format, bool with_residue) {
    TableFormat fmt;
    if (format == "csv") fmt = TableFormat::Csv;
    else if (format == "json") fmt = TableFormat::Json;
    else if (format == "pretty") fmt = TableFormat::Pretty;
    else {
        std::cerr << "unsupported format: " << format << "\n";
        return 1;
    }
    std::cout << emit(build_table(n_from, n_to, d, with_residue), fmt);
    return 0;
}

int cmd_canon(long n, const std::string& tlist) {
    CyclicAction c = canonical_form(make_action(n, parse_weights(tlist)));
    std::cout << c.order() << " ";
    for (int i = 0; i < c.dim(); ++i) std::cout << (i ? "," : "") << c.weight(i);
    std::cout << "\n";
    return 0;
}

int cmd_verify_o11(bool json) {
    auto checks = o11::verify();
    bool all = true;
    if (json) {
        std::cout << o11::report_json(checks);
        for (const auto& c : checks) all = all && c.passed;
    } else {
        for (const auto& c : checks) {
            std::cout << (c.passed ? "ok   " : "FAIL ") << c.name << "\n";
            all = all && c.passed;
        }
    }
    return all ? 0 : 2;
}

int cmd_families(long n_max, int d_max) {
    long checked = 0, mismatches = 0;
    std::map<std::string, long> per_family;
    for (long n = 2; n <= n_max; ++n) {
        for (int d = 2; d <= d_max; ++d) {
            std::vector<long> t(d, 1);
            while (true) {
                if (is_small(n, t)) {
                    CyclicAction a(n, t);
                    if (auto p = family_predict(a)) {
                        ++checked;
                        ++per_family[p->family];
                        if (classify(a).verdict != p->expected) {
                            ++mismatches;
                            std::cerr << "MISMATCH " << to_string(a) << " family " << p->family
                                      << ": expected " << verdict_label(p->expected) << ", got "
                                      << verdict_label(classify(a).verdict) << "\n";
                        }
                    }
                }
                int i = d - 1;
                while (i >= 0 && t[i] == n - 1) t[i--] = 1;
                if (i < 0) break;
                ++t[i];
            }
        }
    }
    std::cout << "family predictions checked: " << checked << "\n";
    for (const auto& [name, cnt] : per_family) std::cout << "  " << name << ": " << cnt << "\n";
    std::cout << "mismatches: " << mismatches << "\n";
    return mismatches == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic quotient singularity classifier"};
    app.require_subcommand(1);

    long n = 0;
    std::string tlist, format = "pretty";
    bool json = false, with_residue = false, check = false;
    int d = 3;
    long n_from = 2, n_to = 7, n_max = 12;
    int d_max = 4;

    auto* classify_cmd = app.add_subcommand("classify", "classify an action 1/n(t1,...,td)");
    classify_cmd->add_option("n", n, "group order")->required();
    classify_cmd->add_option("t", tlist, "comma-separated weights")->required();
    classify_cmd->add_flag("--json", json, "JSON output");
    classify_cmd->add_flag("--residue", with_residue, "also compute the residue");
    classify_cmd->add_flag("--check", check, "cross-check against the brute-force oracle");

    auto* table_cmd = app.add_subcommand("table", "classify all classes for a range of n");
    table_cmd->add_option("--d", d, "dimension")->required();
    table_cmd->add_option("--n-from", n_from, "first group order")->required();
    table_cmd->add_option("--n-to", n_to, "last group order")->required();
    table_cmd->add_option("--format", format, "csv|json|pretty");
    table_cmd->add_flag("--residue", with_residue, "include the residue column");

    auto* canon_cmd = app.add_subcommand("canon", "print the canonical form of an action");
    canon_cmd->add_option("n", n, "group order")->required();
    canon_cmd->add_option("t", tlist, "comma-separated weights")->required();

    auto* verify_cmd = app.add_subcommand("verify-o11", "verify the octahedral O11 identities");
    verify_cmd->add_flag("--json", json, "JSON output");

    auto* fam_cmd = app.add_subcommand("families", "sweep closed-form families against classify");
    fam_cmd->add_option("--n-max", n_max, "largest group order");
    fam_cmd->add_option("--d-max", d_max, "largest dimension");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) return cmd_classify(n, tlist, json, with_residue, check);
        if (table_cmd->parsed()) return cmd_table(d, n_from, n_to, format, with_residue);
        if (canon_cmd->parsed()) return cmd_canon(n, tlist);
        if (verify_cmd->parsed()) return cmd_verify_o11(json);
        if (fam_cmd->parsed()) return cmd_families(n_max, d_max);
    } catch (const qsing::ActionError& e) {
        std::cerr << "invalid action: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
