#include "mwlat.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "mwl/session.hpp"

using namespace mwl;

struct mwlat_session {
    CurveSpec spec;
};

namespace {

thread_local std::string g_error_message;
thread_local std::string g_error_code;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void clear_error() {
    g_error_message.clear();
    g_error_code.clear();
}

int set_error(const Error& e) {
    g_error_message = e.what();
    g_error_code = errc_name(e.code());
    return errc_exit_code(e.code());
}

int set_error_generic(const std::exception& e) {
    g_error_message = e.what();
    g_error_code = "InternalError";
    return MWLAT_INPUT_ERROR;
}

template <typename F>
int guarded(F&& f) {
    clear_error();
    try {
        return f();
    } catch (const Error& e) {
        return set_error(e);
    } catch (const std::exception& e) {
        return set_error_generic(e);
    }
}

std::vector<std::string> split_csv(const char* csv) {
    std::vector<std::string> out;
    if (!csv) return out;
    std::string s(csv);
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!item.empty()) out.push_back(item);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Json parse_arg_json(const char* text, const char* what) {
    if (!text) return Json();
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::ParseError, std::string("bad ") + what + ": " + e.what());
    }
}

int emit(const CommandResult& r, char** out_json) {
    if (out_json) *out_json = dup_string(r.output.dump(1));
    if (!r.ok) {
        g_error_message = "verification failed";
        g_error_code = "VerificationFailed";
        return MWLAT_VERIFY_FAILED;
    }
    return MWLAT_OK;
}

} // namespace

extern "C" {

int mwlat_session_open(const char* spec_json, mwlat_session** out_session) {
    return guarded([&] {
        if (!spec_json || !out_session) fail(Errc::BadRequest, "null argument");
        auto* s = new mwlat_session{parse_curve_spec(spec_json)};
        *out_session = s;
        return MWLAT_OK;
    });
}

int mwlat_session_open_builtin(const char* example_id, mwlat_session** out_session) {
    return guarded([&] {
        if (!example_id || !out_session) fail(Errc::BadRequest, "null argument");
        const char* text = builtin_spec_text(example_id);
        if (!text) fail(Errc::BadRequest, std::string("unknown example id '") + example_id + "'");
        auto* s = new mwlat_session{parse_curve_spec(text)};
        *out_session = s;
        return MWLAT_OK;
    });
}

void mwlat_session_close(mwlat_session* s) { delete s; }

int mwlat_fibers(mwlat_session* s, char** out_json) {
    return guarded([&] {
        if (!s) fail(Errc::BadRequest, "null session");
        return emit({cmd_fibers(s->spec), true}, out_json);
    });
}

int mwlat_mw(mwlat_session* s, const char* basis_csv, const char* targets_csv, char** out_json) {
    return guarded([&] {
        if (!s) fail(Errc::BadRequest, "null session");
        return emit({cmd_mw(s->spec, split_csv(basis_csv), split_csv(targets_csv)), true}, out_json);
    });
}

int mwlat_conic(mwlat_session* s, const char* point_name, const char* r_poly_json,
                const char* b_literal_json, char** out_json) {
    return guarded([&] {
        if (!s || !point_name || !r_poly_json) fail(Errc::BadRequest, "null argument");
        Json r = parse_arg_json(r_poly_json, "slope polynomial");
        Json b = parse_arg_json(b_literal_json, "free parameter");
        return emit(cmd_conic(s->spec, point_name, r, b), out_json);
    });
}

int mwlat_verify(mwlat_session* s, const char* kind, char** out_json) {
    return guarded([&] {
        if (!s || !kind) fail(Errc::BadRequest, "null argument");
        return emit(cmd_verify(s->spec, kind), out_json);
    });
}

int mwlat_reproduce(const char* example_id, char** out_json) {
    return guarded([&] {
        if (!example_id) fail(Errc::BadRequest, "null argument");
        return emit(cmd_reproduce(example_id), out_json);
    });
}

int mwlat_builtin_ids(char** out_json) {
    return guarded([&] {
        std::string all;
        for (const auto& id : builtin_spec_ids()) {
            all += id;
            all += '\n';
        }
        if (out_json) *out_json = dup_string(all);
        return MWLAT_OK;
    });
}

const char* mwlat_last_error(void) { return g_error_message.c_str(); }
const char* mwlat_last_error_code(void) { return g_error_code.c_str(); }

void mwlat_string_free(char* s) { std::free(s); }

const char* mwlat_version(void) { return "1.0.0"; }

} // extern "C"
