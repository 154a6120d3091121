// mwlat: exact Mordell-Weil lattice computations for cubic+line quartics.
// Thin front end over the C API (mwlat.h); reports are JSON-first with an
// optional plain-text table rendering.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mwlat.h"

using Json = nlohmann::ordered_json;

namespace {

int fail_usage(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct SessionHolder {
    mwlat_session* s = nullptr;
    ~SessionHolder() { mwlat_session_close(s); }
};

struct StringHolder {
    char* p = nullptr;
    ~StringHolder() { mwlat_string_free(p); }
};

int report_error(int rc) {
    std::cerr << "error [" << mwlat_last_error_code() << "]: " << mwlat_last_error() << "\n";
    return rc;
}

std::string elem_str(const Json& e) {
    if (e.is_string()) return e.get<std::string>();
    std::string out;
    for (auto it = e.begin(); it != e.end(); ++it) {
        if (!out.empty()) out += " + ";
        out += it.value().get<std::string>();
        if (it.key() != "1") out += "*" + it.key();
    }
    return out.empty() ? "0" : out;
}

void render_fibers(const Json& j, std::ostream& os) {
    os << "place            type   m  ord(D) ord(c4) ord(c6)  sing_x\n";
    for (const auto& f : j["fibers"]) {
        std::string place = f.contains("place")
                                ? (f["place"].is_string() ? "t = inf" : "t = " + elem_str(f["place"]))
                                : "factor";
        std::string sing = f.contains("sing_x") ? elem_str(f["sing_x"]) : "-";
        char line[256];
        std::snprintf(line, sizeof line, "%-16s %-6s %2d %6d %7d %7d  %s\n", place.c_str(),
                      f["type"].get<std::string>().c_str(), f["m"].get<int>(),
                      f["ord_delta"].get<int>(), f["ord_c4"].get<int>(), f["ord_c6"].get<int>(),
                      sing.c_str());
        os << line;
    }
    os << "sum ord(delta) = " << j["sum_ord_delta"] << ", sum (m_v - 1) = " << j["sum_m_minus_1"]
       << ", chi = " << j["chi"] << "\n";
}

void render_mw(const Json& j, std::ostream& os) {
    os << "gram matrix over [";
    bool first = true;
    for (const auto& b : j["basis"]) {
        os << (first ? "" : ", ") << b.get<std::string>();
        first = false;
    }
    os << "]:\n";
    for (const auto& row : j["gram"]) {
        os << "  ";
        for (const auto& v : row) os << v.get<std::string>() << "\t";
        os << "\n";
    }
    os << "heights:\n";
    for (auto it = j["heights"].begin(); it != j["heights"].end(); ++it) {
        os << "  h(" << it.key() << ") = " << it.value().get<std::string>();
        const Json& tor = j["torsion_order"][it.key()];
        if (!tor.is_null()) os << "   (torsion, order " << tor << ")";
        os << "   gamma = " << j["gamma"][it.key()].dump();
        os << "\n";
    }
    if (j.contains("decompositions"))
        for (auto it = j["decompositions"].begin(); it != j["decompositions"].end(); ++it) {
            os << "decomposition of " << it.key() << ": coeffs = " << it.value()["coeffs"].dump()
               << ", torsion part = " << (it.value()["torsion_part"].is_string() ? "O" : "2-torsion")
               << "\n";
        }
}

void render_checks(const Json& j, std::ostream& os) {
    for (const auto& c : j["checks"]) {
        os << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "  " << c["check"].get<std::string>();
        if (c.contains("detail")) os << "  [" << c["detail"].get<std::string>() << "]";
        os << "\n";
    }
    os << (j["pass"].get<bool>() ? "PASS" : "FAIL") << "  " << j["example"].get<std::string>()
       << " overall\n";
}

void render_verify(const Json& j, std::ostream& os) {
    for (const auto& c : j["clauses"]) {
        os << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "  " << c["clause"].get<std::string>();
        if (c.contains("detail")) os << "  [" << c["detail"].get<std::string>() << "]";
        os << "\n";
    }
    os << (j["pass"].get<bool>() ? "PASS" : "FAIL") << "  combinatorics " << j["kind"].get<std::string>()
       << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Mordell-Weil lattice data for rational elliptic surfaces from cubic+line quartics"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));

    std::string spec_path, basis, targets, point, rpoly, blit, kind, example;

    auto* cfib = app.add_subcommand("fibers", "classify the singular fibers of a curve spec");
    cfib->add_option("spec", spec_path, "curve-spec JSON file")->required();

    auto* cmw = app.add_subcommand("mw", "gram matrix, heights and decompositions");
    cmw->add_option("spec", spec_path)->required();
    cmw->add_option("--basis", basis, "comma-separated point names")->required();
    cmw->add_option("--targets", targets, "comma-separated point names");

    auto* cconic = app.add_subcommand("conic", "build and certify a contact conic");
    cconic->add_option("spec", spec_path)->required();
    cconic->add_option("--point", point, "integral point name")->required();
    cconic->add_option("--r", rpoly, "slope polynomial r(t), JSON poly literal")->required();
    cconic->add_option("--b", blit, "free parameter b, JSON element literal");

    auto* cverify = app.add_subcommand("verify", "run the combinatorics validator");
    cverify->add_option("spec", spec_path)->required();
    cverify->add_option("--kind", kind, "1a, 1b, 2, 3a or 3b")->required();

    auto* crep = app.add_subcommand("reproduce", "re-run the golden checks of a built-in example");
    crep->add_option("example", example, "5.1a, 5.1b, 5.2 or 5.3")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        StringHolder out;
        int rc = 0;
        Json j;
        auto finish = [&](void (*render)(const Json&, std::ostream&)) {
            j = Json::parse(out.p);
            if (format == "table" && render)
                render(j, std::cout);
            else
                std::cout << j.dump(1) << "\n";
        };

        if (*crep) {
            rc = mwlat_reproduce(example.c_str(), &out.p);
            if (rc == MWLAT_INPUT_ERROR || !out.p) return report_error(rc);
            finish(render_checks);
            return rc;
        }

        SessionHolder session;
        std::string text = read_file(spec_path);
        int orc = mwlat_session_open(text.c_str(), &session.s);
        if (orc != MWLAT_OK) return report_error(orc);

        if (*cfib) {
            rc = mwlat_fibers(session.s, &out.p);
            if (rc != MWLAT_OK || !out.p) return report_error(rc);
            finish(render_fibers);
        } else if (*cmw) {
            rc = mwlat_mw(session.s, basis.c_str(), targets.empty() ? nullptr : targets.c_str(), &out.p);
            if (rc != MWLAT_OK || !out.p) return report_error(rc);
            finish(render_mw);
        } else if (*cconic) {
            rc = mwlat_conic(session.s, point.c_str(), rpoly.c_str(),
                             blit.empty() ? nullptr : blit.c_str(), &out.p);
            if (rc != MWLAT_OK || !out.p) return report_error(rc);
            finish(nullptr);
        } else if (*cverify) {
            rc = mwlat_verify(session.s, kind.c_str(), &out.p);
            if (rc == MWLAT_INPUT_ERROR || !out.p) return report_error(rc);
            finish(render_verify);
            return rc;
        }
        return rc;
    } catch (const std::exception& e) {
        return fail_usage(e.what());
    }
}
