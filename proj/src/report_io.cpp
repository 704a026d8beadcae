#include "schreier/report_io.hpp"

#include <ostream>

#include <json.hpp>

namespace schreier {
namespace {

nlohmann::ordered_json params_json(const Params& params) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [name, value] : params) out[name] = value;
    return out;
}

}  // namespace

std::string status_label(const VerificationReport& report) {
    if (!report.passed()) return "FAIL";
    return report.vacuous() ? "VACUOUS" : "PASS";
}

void write_reports_text(std::ostream& os, std::span<const VerificationReport> reports) {
    for (const auto& r : reports) {
        os << to_string(r.theorem) << ' ' << status_label(r) << " points=" << r.points_checked
           << " failures=" << r.failures.size() << " skipped=" << r.skipped.size() << " grid=" << r.grid.to_string();
        if (r.vacuous()) os << " (no points)";
        os << '\n';
        for (const auto& f : r.failures) {
            os << "  failure " << to_string(f.params) << " [" << f.sources << "] expected=" << f.expected
               << " got=" << f.got << '\n';
        }
        for (const auto& s : r.skipped) {
            os << "  skipped " << to_string(s.params) << " [" << s.reason << "] " << s.detail << '\n';
        }
    }
}

void write_reports_json(std::ostream& os, std::span<const VerificationReport> reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["theorem"] = to_string(r.theorem);
        j["status"] = status_label(r);
        j["pass"] = r.passed();
        j["vacuous"] = r.vacuous();
        j["points_checked"] = r.points_checked;
        nlohmann::ordered_json grid = nlohmann::ordered_json::object();
        for (const auto& [name, range] : r.grid.axes) grid[name] = {range.lo, range.hi};
        j["grid"] = grid;
        j["failures"] = nlohmann::ordered_json::array();
        for (const auto& f : r.failures) {
            j["failures"].push_back({{"params", params_json(f.params)},
                                     {"sources", f.sources},
                                     {"expected", f.expected.to_string()},
                                     {"got", f.got.to_string()}});
        }
        j["skipped"] = nlohmann::ordered_json::array();
        for (const auto& s : r.skipped) {
            j["skipped"].push_back({{"params", params_json(s.params)}, {"reason", s.reason}, {"detail", s.detail}});
        }
        j["wall_time_ms"] = static_cast<std::int64_t>(r.wall_time.count() * 1000.0);
        arr.push_back(std::move(j));
    }
    os << arr.dump(2) << '\n';
}

void write_reports_csv(std::ostream& os, std::span<const VerificationReport> reports) {
    os << "theorem,status,points_checked,failures,skipped,grid\n";
    for (const auto& r : reports) {
        os << to_string(r.theorem) << ',' << status_label(r) << ',' << r.points_checked << ',' << r.failures.size()
           << ',' << r.skipped.size() << ",\"" << r.grid.to_string() << "\"\n";
    }
}

}  // namespace schreier
