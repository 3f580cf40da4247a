#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "pg/interp.hpp"
#include "pg/script.hpp"

namespace {

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return in.good() || in.eof();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction scripts on the rational projective plane"};
    app.require_subcommand(1);

    std::string run_path, fmt = "text";
    bool emit_only = false, keep_going = false;
    CLI::App* run_cmd = app.add_subcommand("run", "execute a script");
    run_cmd->add_option("script", run_path, "script file")->required();
    run_cmd->add_flag("--emit-only", emit_only, "write emitted files but print no report");
    run_cmd->add_flag("--keep-going", keep_going, "record construction errors and continue");
    run_cmd->add_option("--format", fmt, "report format")->check(CLI::IsMember({"text", "json"}));

    std::string check_path;
    CLI::App* check_cmd = app.add_subcommand("check", "parse a script and report statement count");
    check_cmd->add_option("script", check_path, "script file")->required();

    CLI11_PARSE(app, argc, argv);

    const std::string& path = run_cmd->parsed() ? run_path : check_path;
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return 2;
    }

    pg::script::Script script;
    try {
        script = pg::script::parse(text);
    } catch (const pg::script::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    }

    if (check_cmd->parsed()) {
        std::cout << "ok: " << script.statements.size() << " statements\n";
        return 0;
    }

    pg::script::RunOptions opts;
    opts.keep_going = keep_going;
    pg::script::Report report = pg::script::run(script, opts);
    if (!emit_only) {
        if (fmt == "json")
            std::cout << report.json();
        else
            std::cout << report.text();
    }
    return report.exit_code();
}
