#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pg/script.hpp"

namespace pg::script {

struct BindingRecord {
    std::string name;
    std::string kind;
    std::string value;
    int line;
};

struct AssertRecord {
    int line;
    std::string text;
    bool passed;
};

struct PrintRecord {
    std::string name;
    std::string value;
};

struct EmitRecord {
    std::string path;
    std::size_t bytes;
    std::vector<std::string> at_infinity;
};

struct ErrorRecord {
    int line;
    std::string kind;
    std::string message;
};

struct Report {
    std::vector<BindingRecord> bindings;
    std::vector<AssertRecord> asserts;
    std::vector<PrintRecord> prints;
    std::vector<EmitRecord> emits;
    std::vector<ErrorRecord> errors;

    bool all_asserts_passed() const;

    // 2 when any construction or write failed, else 1 when an assertion
    // failed, else 0. Parse failures never reach a Report.
    int exit_code() const;

    std::string text() const;
    std::string json() const;
};

struct RunOptions {
    // Record a construction error and keep executing; statements whose
    // inputs were lost to an earlier error fail in turn.
    bool keep_going = false;
    bool write_files = true;
    // Prefix for relative emit paths; empty means current directory.
    std::string out_dir;
};

Report run(const Script& s, const RunOptions& opts = {});

}  // namespace pg::script
