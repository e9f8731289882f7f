#include "stmlab/report.hpp"

#include <fstream>
#include <stdexcept>

namespace stm {

Json report_versions() {
    return Json{{"schema", 1}, {"program", "stmlab 0.1.0"}};
}

Json make_report(const std::string& command, Json config, Json checks, double elapsed_ms) {
    Json r;
    r["command"] = command;
    r["config"] = std::move(config);
    r["checks"] = std::move(checks);
    r["versions"] = report_versions();
    r["timing"] = Json{{"total_ms", elapsed_ms}};
    return r;
}

bool all_pass(const Json& report) {
    for (const auto& c : report.at("checks")) {
        if (c.contains("pass") && !c.at("pass").get<bool>()) return false;
    }
    return true;
}

namespace {

void diff_rec(const Json& a, const Json& b, const std::string& path, std::vector<std::string>& out) {
    // Signed/unsigned integer tags may differ after a save/load round trip;
    // numbers compare by value.
    if (a.is_number() && b.is_number()) {
        if (a != b) out.push_back(path + ": " + a.dump() + " vs " + b.dump());
        return;
    }
    if (a.type() != b.type()) {
        out.push_back(path + ": type mismatch");
        return;
    }
    if (a.is_object()) {
        for (auto it = a.begin(); it != a.end(); ++it) {
            if (it.key() == "timing") continue;
            if (!b.contains(it.key())) {
                out.push_back(path + "/" + it.key() + ": missing in golden");
                continue;
            }
            diff_rec(it.value(), b.at(it.key()), path + "/" + it.key(), out);
        }
        for (auto it = b.begin(); it != b.end(); ++it) {
            if (it.key() == "timing") continue;
            if (!a.contains(it.key())) out.push_back(path + "/" + it.key() + ": missing in report");
        }
        return;
    }
    if (a.is_array()) {
        if (a.size() != b.size()) {
            out.push_back(path + ": array length " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
            return;
        }
        for (size_t k = 0; k < a.size(); ++k)
            diff_rec(a[k], b[k], path + "/" + std::to_string(k), out);
        return;
    }
    if (a != b) out.push_back(path + ": " + a.dump() + " vs " + b.dump());
}

} // namespace

std::vector<std::string> golden_diff(const Json& report, const Json& golden) {
    std::vector<std::string> out;
    diff_rec(report, golden, "", out);
    return out;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path +
                                 " (to record a golden, rerun with --out " + path + ")");
    Json j;
    in >> j;
    return j;
}

void write_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace stm
