#include "plab/report.hpp"

#include <sstream>

#include "json.hpp"

#include "plab/errors.hpp"

namespace plab {

std::string emit_report(const Report& rep, const std::string& format) {
    if (format == "text") {
        std::ostringstream out;
        for (const auto& r : rep.records) {
            out << (r.report.pass() ? "[PASS] " : "[FAIL] ") << r.op;
            for (const auto& a : r.args) out << " " << a;
            if (!r.out.empty()) out << " as " << r.out;
            out << "\n";
            for (const auto& it : r.report.items) {
                if (it.pass) continue;
                out << "    law: " << it.law;
                if (it.witness) {
                    out << " at (";
                    for (size_t i = 0; i < it.witness->indices.size(); ++i)
                        out << (i ? "," : "") << it.witness->indices[i];
                    out << "): " << it.witness->lhs << " != " << it.witness->rhs;
                }
                out << "\n";
            }
        }
        out << (rep.pass() ? "all checks passed" : "some checks FAILED") << "\n";
        return out.str();
    }
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["format"] = "plab-report-v1";
        doc["status"] = rep.pass() ? "pass" : "fail";
        doc["records"] = nlohmann::ordered_json::array();
        for (const auto& r : rep.records) {
            nlohmann::ordered_json rec;
            rec["op"] = r.op;
            rec["args"] = r.args;
            if (!r.out.empty()) rec["out"] = r.out;
            rec["status"] = r.report.pass() ? "pass" : "fail";
            rec["items"] = nlohmann::ordered_json::array();
            for (const auto& it : r.report.items) {
                nlohmann::ordered_json item;
                item["law"] = it.law;
                item["status"] = it.pass ? "pass" : "fail";
                if (it.witness) {
                    nlohmann::ordered_json w;
                    w["indices"] = nlohmann::ordered_json::array();
                    for (int ix : it.witness->indices) w["indices"].push_back(std::to_string(ix));
                    w["lhs"] = it.witness->lhs;
                    w["rhs"] = it.witness->rhs;
                    item["witness"] = std::move(w);
                }
                rec["items"].push_back(std::move(item));
            }
            doc["records"].push_back(std::move(rec));
        }
        return doc.dump(2) + "\n";
    }
    throw Error("unknown report format '" + format + "'");
}

} // namespace plab
