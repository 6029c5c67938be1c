#include "qsing/tables.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qsing {

namespace {

std::string join(const std::vector<long>& v, const char* sep) {
    std::ostringstream out;
    for (size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
    return out.str();
}

std::string residue_token(const ResidueValue& r) {
    return r.infinite ? "inf" : std::to_string(r.value);
}

}  // namespace

std::vector<CyclicAction> enumerate_classes(long n, int d) {
    std::set<std::vector<long>> classes;
    std::vector<long> t(d, 1);
    while (true) {
        if (is_small(n, t)) {
            // canonical form: lex-min sorted unit multiple
            std::vector<long> best;
            for (long u = 1; u < n; ++u) {
                if (std::gcd(u, n) != 1) continue;
                std::vector<long> v(t.size());
                for (size_t i = 0; i < t.size(); ++i) v[i] = (u * t[i]) % n;
                std::sort(v.begin(), v.end());
                if (best.empty() || v < best) best = std::move(v);
            }
            classes.insert(std::move(best));
        }
        int i = d - 1;
        while (i >= 0 && t[i] == n - 1) t[i--] = 1;
        if (i < 0) break;
        ++t[i];
    }
    std::vector<CyclicAction> out;
    out.reserve(classes.size());
    for (const auto& c : classes) out.emplace_back(n, c);
    return out;
}

std::vector<TableRow> build_table(long n_lo, long n_hi, int d, bool with_residue) {
    std::vector<TableRow> rows;
    for (long n = n_lo; n <= n_hi; ++n) {
        for (auto& a : enumerate_classes(n, d)) {
            TableRow row{a, classify(a).verdict, std::nullopt};
            if (with_residue) row.residue = residue(a);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string emit(const std::vector<TableRow>& rows, TableFormat format) {
    const bool with_residue =
        std::any_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.residue.has_value(); });
    std::ostringstream out;
    switch (format) {
        case TableFormat::Csv: {
            out << (with_residue ? "n,t,verdict,residue" : "n,t,verdict") << "\n";
            for (const auto& r : rows) {
                out << r.action.order() << "," << join(r.action.weights(), "-") << ","
                    << verdict_label(r.verdict);
                if (with_residue) out << "," << (r.residue ? residue_token(*r.residue) : "");
                out << "\n";
            }
            return out.str();
        }
        case TableFormat::Json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : rows) {
                nlohmann::json row;
                row["n"] = r.action.order();
                row["t"] = r.action.weights();
                row["verdict"] = verdict_label(r.verdict);
                if (r.residue) {
                    if (r.residue->infinite) row["residue"] = "inf";
                    else row["residue"] = r.residue->value;
                }
                arr.push_back(std::move(row));
            }
            return arr.dump(2) + "\n";
        }
        case TableFormat::Pretty: {
            size_t tw = 1;
            for (const auto& r : rows) tw = std::max(tw, join(r.action.weights(), ",").size());
            out << "n     t" << std::string(tw > 1 ? tw - 1 : 0, ' ') << "  verdict"
                << (with_residue ? "  residue" : "") << "\n";
            for (const auto& r : rows) {
                std::string t = join(r.action.weights(), ",");
                std::string nn = std::to_string(r.action.order());
                out << nn << std::string(6 - std::min<size_t>(5, nn.size()), ' ') << t
                    << std::string(tw + 2 - t.size(), ' ') << verdict_label(r.verdict);
                if (with_residue && r.residue) out << "  " << residue_token(*r.residue);
                out << "\n";
            }
            return out.str();
        }
    }
    throw UnsupportedFormatError("unknown table format");
}

std::vector<TableRow> parse_table_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    std::vector<TableRow> rows;
    for (const auto& row : arr) {
        long n = row.at("n").get<long>();
        std::vector<long> t = row.at("t").get<std::vector<long>>();
        std::string v = row.at("verdict").get<std::string>();
        Verdict verdict = v == "G"    ? Verdict::Gorenstein
                          : v == "NG" ? Verdict::NearlyGorensteinNotGorenstein
                                      : Verdict::NotNearlyGorenstein;
        std::optional<ResidueValue> res;
        if (row.contains("residue")) {
            ResidueValue rv;
            if (row["residue"].is_string()) rv.infinite = true;
            else rv.value = row["residue"].get<unsigned long long>();
            res = rv;
        }
        rows.push_back(TableRow{CyclicAction(n, t), verdict, res});
    }
    return rows;
}

}  // namespace qsing
