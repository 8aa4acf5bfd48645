#include "octavia/octavia.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "octavia/algebra.hpp"
#include "octavia/commands.hpp"
#include "octavia/error.hpp"
#include "octavia/rings.hpp"

struct octavia_elem {
    octavia::algebra::AlgElem value;
};

struct octavia_session {
    unsigned threads = 0;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <typename F>
int guarded(F&& f) {
    try {
        f();
        last_error.clear();
        return OCTAVIA_OK;
    } catch (const octavia::Error& e) {
        last_error = e.what();
        return static_cast<int>(e.status());
    } catch (const std::exception& e) {
        last_error = e.what();
        return OCTAVIA_ERR_INTERNAL;
    }
}

int null_arg() {
    last_error = "null argument";
    return OCTAVIA_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* octavia_version(void) { return "0.1.0"; }

const char* octavia_last_error(void) { return last_error.c_str(); }

void octavia_string_free(char* s) { std::free(s); }

int octavia_elem_parse(const char* text, octavia_elem** out) {
    if (!text || !out) return null_arg();
    return guarded([&] { *out = new octavia_elem{octavia::algebra::parse(text)}; });
}

void octavia_elem_free(octavia_elem* e) { delete e; }

int octavia_elem_format(const octavia_elem* e, char** out) {
    if (!e || !out) return null_arg();
    return guarded([&] { *out = dup(octavia::algebra::format(e->value)); });
}

int octavia_elem_dim(const octavia_elem* e) { return e ? e->value.dim() : 0; }

int octavia_elem_mul(const octavia_elem* a, const octavia_elem* b, octavia_elem** out) {
    if (!a || !b || !out) return null_arg();
    return guarded([&] { *out = new octavia_elem{a->value * b->value}; });
}

int octavia_elem_add(const octavia_elem* a, const octavia_elem* b, octavia_elem** out) {
    if (!a || !b || !out) return null_arg();
    return guarded([&] { *out = new octavia_elem{a->value + b->value}; });
}

int octavia_elem_conj(const octavia_elem* a, octavia_elem** out) {
    if (!a || !out) return null_arg();
    return guarded([&] { *out = new octavia_elem{octavia::algebra::conj(a->value)}; });
}

int octavia_elem_norm(const octavia_elem* a, int64_t* num, int64_t* den) {
    if (!a || !num || !den) return null_arg();
    return guarded([&] {
        auto q = octavia::algebra::norm_sq(a->value);
        *num = q.num();
        *den = q.den();
    });
}

int octavia_elem_is_member(const char* ring, const octavia_elem* a, int* result) {
    if (!ring || !a || !result) return null_arg();
    return guarded([&] { *result = octavia::rings::is_member(octavia::rings::ring_from_name(ring), a->value) ? 1 : 0; });
}

int octavia_session_new(octavia_session** out) {
    if (!out) return null_arg();
    return guarded([&] { *out = new octavia_session{}; });
}

void octavia_session_free(octavia_session* s) { delete s; }

int octavia_session_set_threads(octavia_session* s, unsigned threads) {
    if (!s) return null_arg();
    return guarded([&] {
        s->threads = threads;
        if (threads == 0)
            unsetenv("OCTAVIA_THREADS");
        else
            setenv("OCTAVIA_THREADS", std::to_string(threads).c_str(), 1);
    });
}

int octavia_run(octavia_session* s, const char* command, const char* args_json, char** out) {
    if (!s || !command || !out) return null_arg();
    *out = nullptr;
    return guarded([&] { *out = dup(octavia::commands::run(command, args_json ? args_json : "")); });
}

int octavia_verify_status(const char* report_json) {
    if (!report_json) return null_arg();
    int status = 1;
    int rc = guarded([&] { status = octavia::commands::verify_status(report_json); });
    return rc == OCTAVIA_OK ? status : rc;
}

}  // extern "C"
