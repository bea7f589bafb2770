#include "angcm/angcm.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "angcm/commands.hpp"
#include "angcm/errors.hpp"

using namespace angcm;

struct angcm_session {
    RunConfig cfg;
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<std::string> split_csv(const char* csv) {
    std::vector<std::string> out;
    if (!csv) return out;
    std::istringstream in(csv);
    std::string piece;
    while (std::getline(in, piece, ','))
        if (!piece.empty()) out.push_back(piece);
    return out;
}

MultiIndex parse_index_csv(const char* csv) {
    MultiIndex k;
    for (const auto& piece : split_csv(csv)) {
        std::size_t used = 0;
        int v = std::stoi(piece, &used);
        if (used != piece.size()) throw UsageError("bad multi-index entry '" + piece + "'");
        k.push_back(v);
    }
    if (k.empty()) throw UsageError("empty multi-index");
    return k;
}

template <typename Fn>
angcm_status guarded(angcm_session* s, char** out, Fn&& fn) {
    if (!s) return ANGCM_ERROR;
    if (out) *out = nullptr;
    s->last_error.clear();
    try {
        std::string text = fn();
        if (out) *out = dup_string(text);
        return ANGCM_OK;
    } catch (const UsageError& e) {
        s->last_error = e.what();
        return ANGCM_USAGE;
    } catch (const Error& e) {
        s->last_error = e.what();
        return ANGCM_VERIFY_FAILED;
    } catch (const std::exception& e) {
        s->last_error = e.what();
        return ANGCM_ERROR;
    }
}

}  // namespace

extern "C" {

const char* angcm_version(void) { return "1.0.0"; }

angcm_session* angcm_session_new(void) {
    auto* s = new (std::nothrow) angcm_session();
    if (s) {
        if (const char* dir = std::getenv("ANGCM_CACHE_DIR")) s->cfg.cache_dir = dir;
    }
    return s;
}

void angcm_session_free(angcm_session* s) { delete s; }

const char* angcm_last_error(const angcm_session* s) { return s ? s->last_error.c_str() : ""; }

angcm_status angcm_set_option(angcm_session* s, const char* key, const char* value) {
    return guarded(s, nullptr, [&]() -> std::string {
        if (!key || !value) throw UsageError("null option");
        const std::string k = key, v = value;
        RunConfig& cfg = s->cfg;
        try {
            if (k == "n") cfg.n = std::stoi(v);
            else if (k == "g") cfg.g = Rational::parse(v);
            else if (k == "omega") cfg.omega = Rational::parse(v);
            else if (k == "variant") cfg.variant = parse_variant(v);
            else if (k == "max-level") cfg.max_level = std::stol(v);
            else if (k == "root-system") cfg.root_system = v;
            else if (k == "multiplicities") {
                cfg.multiplicities.clear();
                for (const auto& piece : split_csv(v.c_str())) cfg.multiplicities.push_back(Rational::parse(piece));
            } else if (k == "spin-flavors") cfg.spin_flavors = std::stoi(v);
            else if (k == "format") cfg.format = v;
            else if (k == "cache-dir") cfg.cache_dir = v;
            else if (k == "trust-cache") cfg.trust_cache = (v == "1" || v == "true");
            else if (k == "seed") cfg.seed = std::stoul(v);
            else throw UsageError("unknown option '" + k + "'");
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("bad value '" + v + "' for option '" + k + "'");
        }
        return "";
    });
}

angcm_status angcm_spectrum(angcm_session* s, char** out) {
    return guarded(s, out, [&] { return cmd_spectrum(s->cfg); });
}

angcm_status angcm_eigenfunction(angcm_session* s, const char* k_csv, char** out) {
    return guarded(s, out, [&] { return cmd_eigenfunction(s->cfg, parse_index_csv(k_csv)); });
}

angcm_status angcm_spin(angcm_session* s, long m, char** out) {
    return guarded(s, out, [&] { return cmd_spin(s->cfg, m); });
}

angcm_status angcm_verify(angcm_session* s, const char* checks_csv, char** out) {
    if (!s) return ANGCM_ERROR;
    s->last_error.clear();
    if (out) *out = nullptr;
    try {
        VerifyOutcome outcome = cmd_verify(s->cfg, split_csv(checks_csv));
        if (out) *out = dup_string(outcome.rendering);
        if (!outcome.all_passed) {
            s->last_error = "verification failed";
            return ANGCM_VERIFY_FAILED;
        }
        return ANGCM_OK;
    } catch (const UsageError& e) {
        s->last_error = e.what();
        return ANGCM_USAGE;
    } catch (const std::exception& e) {
        s->last_error = e.what();
        return ANGCM_ERROR;
    }
}

void angcm_string_free(char* s) { std::free(s); }

}  // extern "C"
